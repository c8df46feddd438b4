#include "varcross/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "varcross/error.hpp"
#include "varcross/family.hpp"
#include "varcross/isomorphism.hpp"
#include "varcross/satisfaction.hpp"
#include "varcross/structure.hpp"

namespace varcross {

  namespace detail {
    std::map<std::string, std::string> const& builtin_catalog_files();
  }

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::string_view strip_comment(std::string_view line) {
      bool quoted = false;
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') {
          quoted = !quoted;
        } else if (line[i] == '#' && !quoted) {
          return line.substr(0, i);
        }
      }
      return line;
    }

    std::vector<std::string_view> lines_of(std::string_view text) {
      std::vector<std::string_view> out;
      while (!text.empty()) {
        auto nl = text.find('\n');
        out.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) {
          break;
        }
        text.remove_prefix(nl + 1);
      }
      return out;
    }

    std::vector<std::string> split(std::string_view s, char sep) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          auto part = trim(s.substr(start, i - start));
          if (!part.empty()) {
            out.emplace_back(part);
          }
          start = i + 1;
        }
      }
      return out;
    }

    // NAME key=value key="quoted value" ...
    std::pair<std::string, std::map<std::string, std::string>> parse_index_line(std::string_view line,
                                                                                 std::size_t      lineno) {
      std::vector<std::string> tokens;
      std::string              cur;
      bool                     quoted = false;
      for (char c : line) {
        if (c == '"') {
          quoted = !quoted;
        } else if (std::isspace(static_cast<unsigned char>(c)) && !quoted) {
          if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
          }
        } else {
          cur += c;
        }
      }
      if (quoted) {
        throw ParseError("unterminated quote", 0, lineno);
      }
      if (!cur.empty()) {
        tokens.push_back(std::move(cur));
      }
      std::map<std::string, std::string> attrs;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos) {
          throw ParseError("expected key=value, got '" + tokens[i] + "'", 0, lineno);
        }
        attrs[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
      }
      return {tokens.at(0), attrs};
    }

    std::optional<std::string_view> unwrap_dual(std::string_view name) {
      name = trim(name);
      if (name.size() > 6 && name.substr(0, 5) == "dual(" && name.back() == ')') {
        return trim(name.substr(5, name.size() - 6));
      }
      return std::nullopt;
    }

    std::size_t edit_distance(std::string_view a, std::string_view b) {
      std::vector<std::size_t> row(b.size() + 1);
      for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = j;
      }
      for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0]           = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
          std::size_t up = row[j];
          row[j]         = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
          diag           = up;
        }
      }
      return row[b.size()];
    }

    std::string const& file_or_throw(std::map<std::string, std::string> const& files, std::string const& name) {
      auto it = files.find(name);
      if (it == files.end()) {
        throw LookupError("catalog file '" + name + "' is missing");
      }
      return it->second;
    }

  }  // namespace

  std::vector<Identity> parse_identity_list(std::string_view text) {
    std::vector<Identity> out;
    std::size_t           lineno = 0;
    for (auto raw : lines_of(text)) {
      ++lineno;
      auto line = trim(strip_comment(raw));
      if (line.empty()) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'label: u = v'", 0, lineno);
      }
      auto label = std::string(trim(line.substr(0, colon)));
      try {
        out.push_back(parse_identity(line.substr(colon + 1), label));
      } catch (ParseError const& e) {
        throw ParseError(label + ": " + e.message(), e.position(), lineno);
      }
    }
    return out;
  }

  Catalog const& Catalog::builtin() {
    static Catalog const instance = from_files(detail::builtin_catalog_files());
    return instance;
  }

  Catalog Catalog::load_directory(std::filesystem::path const& dir) {
    std::map<std::string, std::string> files;
    if (!std::filesystem::is_directory(dir)) {
      throw LookupError("catalog directory '" + dir.string() + "' does not exist");
    }
    for (auto const& entry : std::filesystem::directory_iterator(dir)) {
      if (!entry.is_regular_file()) {
        continue;
      }
      std::ifstream      in(entry.path(), std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      files[entry.path().filename().string()] = buf.str();
    }
    return from_files(files);
  }

  Catalog Catalog::from_files(std::map<std::string, std::string> const& files) {
    Catalog cat;

    if (auto it = files.find("identities.txt"); it != files.end()) {
      cat._identities = parse_identity_list(it->second);
      for (std::size_t i = 0; i < cat._identities.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          if (cat._identities[i].label == cat._identities[j].label) {
            throw LookupError("duplicate identity label '" + cat._identities[i].label + "'");
          }
        }
      }
    }

    std::size_t lineno = 0;
    for (auto raw : lines_of(file_or_throw(files, "index.txt"))) {
      ++lineno;
      auto line = trim(strip_comment(raw));
      if (line.empty()) {
        continue;
      }
      auto [name, attrs] = parse_index_line(line, lineno);
      MonoidEntry entry;
      entry.name = name;
      try {
        if (auto it = attrs.find("order"); it != attrs.end()) {
          entry.stated_order = static_cast<std::size_t>(std::stoul(it->second));
        }
        if (auto it = attrs.find("pres"); it != attrs.end()) {
          entry.presentation = parse_presentation(file_or_throw(files, it->second));
        }
        if (auto it = attrs.find("table"); it != attrs.end()) {
          entry.monoid       = parse_table(file_or_throw(files, it->second));
          entry.construction = "table";
        } else if (auto it = attrs.find("rees"); it != attrs.end()) {
          std::vector<Word> words;
          for (auto const& w : split(it->second, ',')) {
            words.push_back(parse_word(w));
          }
          entry.monoid       = rees_quotient(words);
          entry.construction = "rees";
        } else if (auto it = attrs.find("quotient"); it != attrs.end()) {
          auto const* base = cat.find_monoid(it->second);
          if (base == nullptr) {
            throw LookupError("quotient of unknown monoid '" + it->second + "'");
          }
          std::vector<std::vector<element_type>> classes;
          for (auto const& cls : split(attrs["classes"], ';')) {
            std::vector<element_type> members;
            for (auto const& label : split(cls, ',')) {
              auto a = base->monoid.find_label(label);
              if (!a) {
                throw LookupError("'" + label + "' is not an element of " + base->name);
              }
              members.push_back(*a);
            }
            classes.push_back(std::move(members));
          }
          entry.monoid       = quotient(base->monoid, classes);
          entry.construction = "quotient";
        } else {
          throw ParseError("entry needs table=, rees= or quotient=", 0, lineno);
        }
      } catch (ParseError const& e) {
        throw ParseError(name + ": " + e.message(), e.position(), lineno);
      } catch (MonoidError const& e) {
        throw MonoidError(name + ": " + e.what());
      } catch (LookupError const& e) {
        throw LookupError(name + ": " + e.what());
      }
      entry.expect_j_trivial = attrs.count("jtrivial") == 0 || attrs["jtrivial"] != "no";
      if (auto it = attrs.find("note"); it != attrs.end()) {
        entry.note = it->second;
      }
      if (cat.find_monoid(name) != nullptr) {
        throw LookupError("duplicate monoid '" + name + "'");
      }
      cat._monoids.push_back(std::move(entry));
    }

    if (auto it = files.find("bases.txt"); it != files.end()) {
      lineno = 0;
      for (auto raw : lines_of(it->second)) {
        ++lineno;
        auto line = trim(strip_comment(raw));
        if (line.empty()) {
          continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError("expected 'basis.NAME = labels'", 0, lineno);
        }
        BasisEntry entry;
        entry.name = std::string(trim(line.substr(0, eq)));
        for (auto const& label : split(line.substr(eq + 1), ' ')) {
          auto idy = cat.find_identity(label);
          if (!idy) {
            throw LookupError(entry.name + ": unknown identity '" + label + "'");
          }
          entry.axioms.add(*idy);
        }
        cat._bases.push_back(std::move(entry));
      }
    }

    if (auto it = files.find("checks.txt"); it != files.end()) {
      lineno = 0;
      for (auto raw : lines_of(it->second)) {
        ++lineno;
        auto line = trim(strip_comment(raw));
        if (line.empty()) {
          continue;
        }
        auto parts = split(line, ' ');
        if (parts.size() != 3 || (parts[0] != "satisfies" && parts[0] != "fails")) {
          throw ParseError("expected 'satisfies|fails MONOID LABEL'", 0, lineno);
        }
        cat._checks.push_back({parts[0] == "satisfies", parts[1], parts[2], lineno});
      }
    }
    return cat;
  }

  MonoidEntry const* Catalog::find_monoid(std::string_view name) const noexcept {
    for (auto const& e : _monoids) {
      if (e.name == name) {
        return &e;
      }
    }
    return nullptr;
  }

  FiniteMonoid Catalog::monoid(std::string_view name) const {
    if (auto inner = unwrap_dual(name)) {
      return dual_monoid(monoid(*inner));
    }
    if (auto const* e = find_monoid(trim(name))) {
      return e->monoid;
    }
    std::string msg = "unknown monoid '" + std::string(name) + "'";
    auto        near = suggestions(name);
    if (!near.empty()) {
      msg += "; did you mean";
      for (auto const& s : near) {
        msg += " " + s;
      }
      msg += "?";
    }
    throw LookupError(msg);
  }

  std::vector<std::string> Catalog::labels_of(Identity const& idy) const {
    std::vector<std::string> out;
    for (auto const& known : _identities) {
      if (equivalent_identities(known, idy)) {
        out.push_back(known.label);
      }
    }
    return out;
  }

  std::optional<Identity> Catalog::find_identity(std::string_view label) const {
    label = trim(label);
    if (auto inner = unwrap_dual(label)) {
      auto idy = find_identity(*inner);
      if (!idy) {
        return std::nullopt;
      }
      return dualize(*idy);
    }
    for (auto const& idy : _identities) {
      if (idy.label == label) {
        return idy;
      }
    }
    if (auto spec = parse_family_label(label); spec && spec->family != Family::l_chain_word) {
      try {
        return family_identity(*spec);
      } catch (std::invalid_argument const&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  Identity Catalog::identity(std::string_view label) const {
    if (auto idy = find_identity(label)) {
      return *idy;
    }
    std::string msg  = "unknown identity '" + std::string(label) + "'";
    auto        near = suggestions(label);
    if (!near.empty()) {
      msg += "; did you mean";
      for (auto const& s : near) {
        msg += " " + s;
      }
      msg += "?";
    }
    throw LookupError(msg);
  }

  std::optional<AxiomSet> Catalog::find_basis(std::string_view name) const {
    name = trim(name);
    if (auto inner = unwrap_dual(name); inner && inner->substr(0, 6) == "basis.") {
      auto set = find_basis(*inner);
      if (!set) {
        return std::nullopt;
      }
      return dualize(*set);
    }
    for (auto const& b : _bases) {
      if (b.name == name) {
        return b.axioms;
      }
    }
    if (auto idy = find_identity(name)) {
      AxiomSet set;
      set.add(*idy);
      return set;
    }
    return std::nullopt;
  }

  AxiomSet Catalog::basis(std::string_view name) const {
    if (auto set = find_basis(name)) {
      return *set;
    }
    std::string msg  = "unknown basis or identity '" + std::string(name) + "'";
    auto        near = suggestions(name);
    if (!near.empty()) {
      msg += "; did you mean";
      for (auto const& s : near) {
        msg += " " + s;
      }
      msg += "?";
    }
    throw LookupError(msg);
  }

  std::vector<std::string> Catalog::suggestions(std::string_view name, std::size_t limit) const {
    std::vector<std::pair<std::size_t, std::string>> scored;
    auto consider = [&](std::string const& candidate) {
      scored.emplace_back(edit_distance(name, candidate), candidate);
    };
    for (auto const& m : _monoids) {
      consider(m.name);
    }
    for (auto const& idy : _identities) {
      consider(idy.label);
    }
    for (auto const& b : _bases) {
      consider(b.name);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](auto const& a, auto const& b) { return a.first < b.first; });
    std::vector<std::string> out;
    std::size_t              cutoff = std::max<std::size_t>(2, name.size() / 2);
    for (auto const& [d, s] : scored) {
      if (out.size() == limit || d > cutoff) {
        break;
      }
      out.push_back(s);
    }
    return out;
  }

  std::string SelfCheckReport::to_string() const {
    std::string out;
    for (auto const& line : lines) {
      out += line + "\n";
    }
    out += passed ? "selfcheck passed\n" : "selfcheck FAILED\n";
    return out;
  }

  SelfCheckReport Catalog::selfcheck() const {
    SelfCheckReport report;
    auto            record = [&](bool ok, std::string const& name, std::string const& detail) {
      report.lines.push_back((ok ? "ok   " : "FAIL ") + name + ": " + detail);
      report.passed = report.passed && ok;
    };

    for (auto const& e : _monoids) {
      auto const& m = e.monoid;
      if (e.stated_order) {
        record(m.order() == *e.stated_order, e.name,
               "order " + std::to_string(m.order()) + " (stated " + std::to_string(*e.stated_order) + ")");
      }
      if (m.order() > 1) {
        record(m.zero().has_value(), e.name,
               m.zero() ? "zero is " + m.label(*m.zero()) : std::string("no zero element"));
      }
      if (e.presentation) {
        try {
          auto closed = close_presentation(*e.presentation);
          if (closed.status != Decision::yes || !closed.monoid) {
            record(false, e.name, "presentation closure inconclusive: " + closed.detail);
          } else {
            bool iso = find_isomorphism(*closed.monoid, m).has_value();
            record(iso, e.name,
                   iso ? "presentation closure isomorphic to table"
                       : "presentation closure has order " + std::to_string(closed.monoid->order())
                             + " and is not isomorphic to the table");
          }
        } catch (Error const& err) {
          record(false, e.name, std::string("presentation/table mismatch: ") + err.what());
        }
      }
      bool jt = is_j_trivial(m);
      record(jt == e.expect_j_trivial, e.name, jt ? "J-trivial" : "not J-trivial");
      if (jt) {
        auto ap = aperiodicity(m);
        record(ap.aperiodic, e.name,
               ap.aperiodic ? "aperiodic at n=" + std::to_string(ap.index) : std::string("J-trivial but not aperiodic"));
      }
    }

    for (auto const& check : _checks) {
      std::string name = check.subject + " " + (check.expect_satisfied ? "satisfies " : "fails ") + check.object;
      try {
        auto m      = monoid(check.subject);
        auto set    = basis(check.object);
        auto result = satisfies_all(m, set);
        if (result.decision == Decision::inconclusive) {
          record(false, name, "inconclusive");
          continue;
        }
        bool sat = result.decision == Decision::yes;
        std::string detail = sat ? "satisfied" : "fails " + *result.first_failure;
        if (!sat) {
          for (auto const& [label, r] : result.verdicts) {
            if (label == *result.first_failure && r.counterexample) {
              detail += " at " + r.counterexample->to_string(m);
            }
          }
        }
        record(sat == check.expect_satisfied, name, detail);
      } catch (Error const& err) {
        record(false, name, err.what());
      }
    }
    return report;
  }

}  // namespace varcross
