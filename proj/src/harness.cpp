#include "varcross/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

#include "varcross/error.hpp"
#include "varcross/isomorphism.hpp"
#include "varcross/structure.hpp"

namespace varcross {

  Status worst(Status a, Status b) noexcept {
    auto rank = [](Status s) {
      switch (s) {
        case Status::ok:
          return 0;
        case Status::inconclusive:
          return 1;
        case Status::fail:
          return 2;
        case Status::input_error:
          return 3;
        case Status::internal_error:
          return 4;
      }
      return 4;
    };
    return rank(a) >= rank(b) ? a : b;
  }

  Status status_of(Decision d) noexcept {
    switch (d) {
      case Decision::yes:
        return Status::ok;
      case Decision::no:
        return Status::fail;
      case Decision::inconclusive:
        return Status::inconclusive;
    }
    return Status::internal_error;
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
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

    // Drops a '#' comment that is not inside double quotes.
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

    std::optional<ClaimKind> claim_kind(std::string_view word) {
      static std::vector<std::pair<std::string_view, ClaimKind>> const kinds = {
          {"satisfies", ClaimKind::satisfies},
          {"member", ClaimKind::satisfies},
          {"fails", ClaimKind::fails},
          {"not-member", ClaimKind::fails},
          {"jtrivial", ClaimKind::jtrivial},
          {"not-jtrivial", ClaimKind::not_jtrivial},
          {"aperiodic", ClaimKind::aperiodic},
          {"not-aperiodic", ClaimKind::not_aperiodic},
          {"isoterm", ClaimKind::isoterm},
          {"not-isoterm", ClaimKind::not_isoterm},
          {"iso", ClaimKind::iso},
          {"not-iso", ClaimKind::not_iso},
          {"in-var", ClaimKind::in_var},
          {"not-in-var", ClaimKind::not_in_var},
          {"order", ClaimKind::order},
      };
      for (auto const& [name, kind] : kinds) {
        if (name == word) {
          return kind;
        }
      }
      return std::nullopt;
    }

    std::size_t parse_number(std::string_view text, std::size_t pos) {
      if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("expected a non-negative integer", pos);
      }
      return std::stoull(std::string(text));
    }

    // The text of a double-quoted argument, or the argument itself.
    std::string_view unquote(std::string_view text, std::size_t pos) {
      if (!text.empty() && text.front() == '"') {
        if (text.size() < 2 || text.back() != '"') {
          throw ParseError("unterminated quoted argument", pos);
        }
        return text.substr(1, text.size() - 2);
      }
      return text;
    }

    Claim parse_claim(std::string_view line, ClaimKind kind, std::size_t start, Catalog const& cat) {
      Claim       claim;
      std::size_t pos = start;
      claim.kind      = kind;
      claim.subject   = parse_monoid_expression(line, pos, cat);
      auto        rest     = trim(line.substr(pos));
      std::size_t rest_pos = rest.empty() ? line.size() : static_cast<std::size_t>(rest.data() - line.data());
      auto need_object = [&] {
        if (rest.empty()) {
          throw ParseError("missing argument", rest_pos);
        }
      };
      switch (kind) {
        case ClaimKind::satisfies:
        case ClaimKind::fails:
          need_object();
          if (rest.front() == '"') {
            auto body = unquote(rest, rest_pos);
            try {
              claim.axioms.add(parse_identity(body, std::string(trim(body))));
            } catch (ParseError const& e) {
              throw ParseError(e.message(), rest_pos + 1 + e.position());
            }
          } else {
            try {
              claim.axioms = cat.basis(rest);
            } catch (LookupError const& e) {
              throw ParseError(e.what(), rest_pos);
            }
          }
          break;
        case ClaimKind::jtrivial:
        case ClaimKind::not_jtrivial:
          if (!rest.empty()) {
            throw ParseError("unexpected argument", rest_pos);
          }
          break;
        case ClaimKind::aperiodic:
        case ClaimKind::not_aperiodic:
          if (!rest.empty()) {
            claim.number = parse_number(rest, rest_pos);
          }
          break;
        case ClaimKind::isoterm:
        case ClaimKind::not_isoterm: {
          need_object();
          auto body = unquote(rest, rest_pos);
          try {
            claim.word = parse_word(body);
          } catch (ParseError const& e) {
            throw ParseError(e.message(), rest_pos + e.position());
          }
          break;
        }
        case ClaimKind::iso:
        case ClaimKind::not_iso:
        case ClaimKind::in_var:
        case ClaimKind::not_in_var: {
          need_object();
          std::size_t other_pos = rest_pos;
          claim.other           = parse_monoid_expression(line, other_pos, cat);
          if (!trim(line.substr(other_pos)).empty()) {
            throw ParseError("unexpected text after monoid expression", other_pos);
          }
          break;
        }
        case ClaimKind::order:
          need_object();
          claim.number = parse_number(rest, rest_pos);
          break;
      }
      return claim;
    }

    std::string failure_detail(FiniteMonoid const& m, BasisReport const& report) {
      std::string detail = "fails " + *report.first_failure;
      for (auto const& [label, r] : report.verdicts) {
        if (label == *report.first_failure && r.counterexample) {
          detail += " at " + r.counterexample->to_string(m);
          break;
        }
      }
      return detail;
    }

    // Satisfaction on a product holds exactly when it holds on every factor.
    std::pair<Decision, std::string> satisfaction(MonoidExpression const& e, AxiomSet const& axioms, std::size_t budget) {
      Decision    overall = Decision::yes;
      std::string pending;
      for (std::size_t i = 0; i < e.factors.size(); ++i) {
        auto report = satisfies_all(e.factors[i], axioms, budget);
        std::string where = e.factors.size() > 1 ? " in factor " + std::to_string(i + 1) : "";
        if (report.decision == Decision::no) {
          return {Decision::no, failure_detail(e.factors[i], report) + where};
        }
        if (report.decision == Decision::inconclusive && overall == Decision::yes) {
          overall = Decision::inconclusive;
          for (auto const& [label, r] : report.verdicts) {
            if (r.decision == Decision::inconclusive) {
              pending = "budget of " + std::to_string(budget) + " products exhausted on " + label + where;
              break;
            }
          }
        }
      }
      return {overall, overall == Decision::yes ? "satisfied" : pending};
    }

    Verdict expect(Decision d, bool positive) {
      if (d == Decision::inconclusive) {
        return Verdict::inconclusive;
      }
      return (d == Decision::yes) == positive ? Verdict::pass : Verdict::fail;
    }

    Decision decision_of(bool b) {
      return b ? Decision::yes : Decision::no;
    }

    std::pair<Decision, std::string> containment(MonoidExpression const& sub,
                                                 MonoidExpression const& super,
                                                 FreeObjectLimits const& limits) {
      auto m = super.materialize();
      for (std::size_t i = 0; i < sub.factors.size(); ++i) {
        auto r = variety_contains(m, sub.factors[i], limits);
        if (r.decision != Decision::yes) {
          std::string where = sub.factors.size() > 1 ? "factor " + std::to_string(i + 1) + ": " : "";
          return {r.decision, where + r.detail};
        }
      }
      return {Decision::yes, "contained"};
    }

    void run_claim_body(Claim const& c, RunOptions const& opts, ClaimResult& out) {
      switch (c.kind) {
        case ClaimKind::satisfies:
        case ClaimKind::fails: {
          auto [d, detail] = satisfaction(c.subject, c.axioms, c.budget.value_or(opts.budget));
          out.verdict      = expect(d, c.kind == ClaimKind::satisfies);
          out.detail       = detail;
          return;
        }
        case ClaimKind::jtrivial:
        case ClaimKind::not_jtrivial: {
          bool j      = is_j_trivial(c.subject.materialize());
          out.verdict = expect(decision_of(j), c.kind == ClaimKind::jtrivial);
          out.detail  = j ? "J-trivial" : "not J-trivial";
          return;
        }
        case ClaimKind::aperiodic:
        case ClaimKind::not_aperiodic: {
          auto m = c.subject.materialize();
          bool a;
          if (c.number) {
            a          = satisfies_aperiodicity(m, *c.number);
            out.detail = (a ? "satisfies x^" : "fails x^") + std::to_string(*c.number + 1) + " = x^"
                       + std::to_string(*c.number);
          } else {
            auto r     = aperiodicity(m);
            a          = r.aperiodic;
            out.detail = a ? "aperiodic with index " + std::to_string(r.index)
                           : "element " + m.label(*r.witness) + " has period > 1";
          }
          out.verdict = expect(decision_of(a), c.kind == ClaimKind::aperiodic);
          return;
        }
        case ClaimKind::isoterm:
        case ClaimKind::not_isoterm: {
          auto r      = is_isoterm(c.subject.materialize(), c.word, opts.limits);
          out.verdict = expect(r.decision, c.kind == ClaimKind::isoterm);
          if (r.decision == Decision::yes) {
            out.detail = "isoterm";
          } else if (r.decision == Decision::no && r.witness) {
            out.detail = "identified with " + r.witness->to_pretty_string();
          } else {
            out.detail = r.detail;
          }
          return;
        }
        case ClaimKind::iso:
        case ClaimKind::not_iso: {
          auto m      = c.subject.materialize();
          auto n      = c.other->materialize();
          auto iso    = find_isomorphism(m, n);
          out.verdict = expect(decision_of(iso.has_value()), c.kind == ClaimKind::iso);
          out.detail  = iso ? "isomorphic"
                            : "not isomorphic (orders " + std::to_string(m.order()) + " and "
                                 + std::to_string(n.order()) + ")";
          return;
        }
        case ClaimKind::in_var:
        case ClaimKind::not_in_var: {
          auto [d, detail] = containment(c.subject, *c.other, opts.limits);
          out.verdict      = expect(d, c.kind == ClaimKind::in_var);
          out.detail       = detail;
          return;
        }
        case ClaimKind::order: {
          auto n      = c.subject.materialize().order();
          out.verdict = n == *c.number ? Verdict::pass : Verdict::fail;
          out.detail  = "order " + std::to_string(n);
          return;
        }
      }
    }

    std::string format_millis(double ms, bool timings) {
      if (!timings) {
        return "-";
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", ms);
      return buf;
    }

  }  // namespace

  Manifest parse_manifest(std::string_view name, std::string_view text, Catalog const& cat) {
    Manifest                   manifest;
    std::optional<std::size_t> budget;
    manifest.name       = std::string(name);
    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      auto raw  = text.substr(start, end - start);
      start     = end + 1;
      auto line = strip_comment(raw);
      auto body = trim(line);
      if (body.empty()) {
        continue;
      }
      auto        kw_end  = std::find_if(body.begin(), body.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
      std::string keyword(body.begin(), kw_end);
      std::size_t kw_pos  = static_cast<std::size_t>(body.data() - line.data());
      if (keyword == "note") {
        manifest.notes.emplace_back(trim(body.substr(keyword.size())));
        continue;
      }
      if (keyword == "budget") {
        auto arg = trim(body.substr(keyword.size()));
        try {
          budget = parse_number(arg, static_cast<std::size_t>(arg.data() - line.data()));
        } catch (ParseError const& e) {
          throw ParseError(e.message(), e.position(), line_no);
        }
        if (*budget == 0) {
          throw ParseError("budget must be positive", kw_pos, line_no);
        }
        continue;
      }
      auto kind = claim_kind(keyword);
      if (!kind) {
        throw ParseError("unknown claim kind '" + keyword + "'", kw_pos, line_no);
      }
      try {
        auto claim = parse_claim(line, *kind, kw_pos + keyword.size(), cat);
        claim.id   = manifest.name + ":" + std::to_string(line_no);
        claim.line = line_no;
        claim.text   = std::string(body);
        claim.budget = budget;
        manifest.claims.push_back(std::move(claim));
      } catch (ParseError const& e) {
        throw ParseError(e.message(), e.position(), line_no);
      } catch (Error const& e) {
        throw ParseError(e.what(), kw_pos, line_no);
      }
      if (end == text.size()) {
        break;
      }
    }
    return manifest;
  }

  ClaimResult run_claim(Claim const& claim, RunOptions const& opts) {
    ClaimResult out;
    out.id     = claim.id;
    out.claim  = claim.text;
    out.budget = claim.budget.value_or(opts.budget);
    auto start = std::chrono::steady_clock::now();
    try {
      run_claim_body(claim, opts, out);
    } catch (std::exception const& e) {
      out.verdict = Verdict::fail;
      out.detail  = std::string("error: ") + e.what();
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

  Status ManifestReport::status() const noexcept {
    Status s = Status::ok;
    for (auto const& r : results) {
      if (r.verdict == Verdict::fail) {
        s = worst(s, Status::fail);
      } else if (r.verdict == Verdict::inconclusive) {
        s = worst(s, Status::inconclusive);
      }
    }
    return s;
  }

  std::string ManifestReport::to_string(bool timings) const {
    std::string out = "== " + name + "\n";
    std::size_t counts[3] = {0, 0, 0};
    std::size_t budget    = 0;
    for (auto const& r : results) {
      if (r.budget != budget) {
        budget = r.budget;
        out += "budget       " + std::to_string(budget) + "\n";
      }
      ++counts[static_cast<int>(r.verdict)];
      std::string verdict(varcross::to_string(r.verdict));
      verdict.resize(12, ' ');
      out += verdict + " " + r.claim + "\n    " + r.detail;
      if (timings) {
        out += " (" + format_millis(r.millis, true) + " ms)";
      }
      out += "\n";
    }
    for (auto const& n : notes) {
      out += "note         " + n + "\n";
    }
    out += name + ": " + std::to_string(counts[0]) + " passed, " + std::to_string(counts[1]) + " failed, "
         + std::to_string(counts[2]) + " inconclusive\n";
    return out;
  }

  std::string ManifestReport::records(bool timings) const {
    std::string out;
    for (auto const& r : results) {
      out += r.id + " " + std::string(varcross::to_string(r.verdict)) + " " + format_millis(r.millis, timings) + " "
           + r.detail + "\n";
    }
    return out;
  }

  std::vector<ManifestReport> run_manifests(std::vector<Manifest> const& manifests, RunOptions const& opts) {
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    std::vector<ManifestReport>                      reports(manifests.size());
    for (std::size_t i = 0; i < manifests.size(); ++i) {
      reports[i].name  = manifests[i].name;
      reports[i].notes = manifests[i].notes;
      reports[i].results.resize(manifests[i].claims.size());
      for (std::size_t j = 0; j < manifests[i].claims.size(); ++j) {
        jobs.emplace_back(i, j);
      }
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < jobs.size(); k = next++) {
        auto [i, j]           = jobs[k];
        reports[i].results[j] = run_claim(manifests[i].claims[j], opts);
      }
    };
    unsigned                 workers = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    return reports;
  }

  CommandReport run_proof(std::string_view text, Catalog const& cat, ProofOptions const& opts) {
    auto resolver = [&cat](std::string_view label) { return cat.find_identity(label); };
    auto script   = parse_proof_script(text, resolver);
    auto report   = verify_proof_script(script, opts);
    return {status_of(report.decision), report.to_string()};
  }

  CommandReport probe_isoterm(std::string_view expr, std::string_view word, Catalog const& cat, RunOptions const& opts) {
    auto e = parse_monoid_expression(expr, cat);
    auto w = parse_word(word);
    auto r = is_isoterm(e.materialize(), w, opts.limits);
    std::string text = w.to_pretty_string() + " for var(" + e.text + "): ";
    switch (r.decision) {
      case Decision::yes:
        text += "isoterm";
        break;
      case Decision::no:
        text += "not an isoterm";
        if (r.witness) {
          text += ", identified with " + r.witness->to_pretty_string();
        }
        break;
      case Decision::inconclusive:
        text += "inconclusive (" + r.detail + ")";
        break;
    }
    text += "\nfree object states: " + std::to_string(r.states) + "\n";
    return {status_of(r.decision), text};
  }

  CommandReport probe_properties(std::string_view expr, Catalog const& cat, RunOptions const&) {
    auto e     = parse_monoid_expression(expr, cat);
    auto m     = e.materialize();
    auto yesno = [](bool b) { return std::string(b ? "yes" : "no"); };
    std::string text = "monoid: " + e.text + "\n";
    text += "order: " + std::to_string(m.order()) + "\n";
    text += "identity: " + m.label(m.identity()) + "\n";
    text += "zero: " + (m.zero() ? m.label(*m.zero()) : std::string("none")) + "\n";
    text += "commutative: " + yesno(is_commutative(m)) + "\n";
    text += "J-trivial: " + yesno(is_j_trivial(m)) + "\n";
    auto ap = aperiodicity(m);
    text += "aperiodic: " + (ap.aperiodic ? "yes, index " + std::to_string(ap.index)
                                          : "no, " + m.label(*ap.witness) + " has period > 1")
          + "\n";
    text += "completely regular: " + yesno(is_completely_regular(m)) + "\n";
    auto idem = idempotents(m);
    text += "idempotents:";
    for (auto a : idem) {
      text += " " + m.label(a);
    }
    text += "\n";
    text += "idempotents commute: " + yesno(idempotents_commute(m)) + "\n";
    text += "idempotents central: " + yesno(idempotents_central(m)) + "\n";
    auto g = green(m);
    text += "J-classes: " + std::to_string(GreenData::class_count(g.j_class))
          + ", L-classes: " + std::to_string(GreenData::class_count(g.l_class))
          + ", R-classes: " + std::to_string(GreenData::class_count(g.r_class)) + "\n";
    text += "self-dual: " + yesno(find_isomorphism(m, dual_monoid(m)).has_value()) + "\n";
    return {Status::ok, text};
  }

  CommandReport probe_exclusion(std::string_view expr, Catalog const& cat, RunOptions const& opts) {
    auto e = parse_monoid_expression(expr, cat);
    auto m = e.materialize();

    struct Row {
      std::string variety;
      std::string generator;  // monoid expression, empty when none is shipped
      std::string basis;      // basis name, empty when none is shipped
    };
    std::vector<Row> const rows = {
        {"F", "", "basis.F"},
        {"dual F", "", "dual(basis.F)"},
        {"H", "", "basis.H"},
        {"dual H", "", "dual(basis.H)"},
        {"I", "", ""},
        {"dual I", "", ""},
        {"K", "K", ""},
        {"dual K", "dual(K)", ""},
        {"L", "", "basis.L"},
        {"P", "", "basis.P"},
        {"dual P", "", "dual(basis.P)"},
        {"Y1", "Rq{xhxyty}", ""},
        {"Y2", "Rq{xhytxy} x Rq{xyhxty}", ""},
        {"Z", "H3 x dual(H3)", ""},
    };

    Status      status = Status::ok;
    std::string text   = "monoid: " + e.text + (is_j_trivial(m) ? "" : " (not J-trivial)") + "\n";
    for (auto const& row : rows) {
      std::string line = row.variety;
      line.resize(8, ' ');
      if (!row.generator.empty()) {
        auto gen = parse_monoid_expression(row.generator, cat);
        auto [d, detail] = containment(gen, e, opts.limits);
        line += "contained in var(M): " + std::string(to_string(d));
        if (d == Decision::inconclusive) {
          line += " (" + detail + ")";
          status = worst(status, Status::inconclusive);
        }
      }
      if (!row.basis.empty()) {
        auto [d, detail] = satisfaction(MonoidExpression{e.text, {m}}, cat.basis(row.basis), opts.budget);
        line += "M satisfies " + row.basis + ": " + std::string(to_string(d));
        if (d == Decision::no) {
          line += " (" + detail + ")";
        } else if (d == Decision::inconclusive) {
          status = worst(status, Status::inconclusive);
        }
      }
      if (row.generator.empty() && row.basis.empty()) {
        line += "no finite generator or basis in the catalog";
      }
      text += line + "\n";
    }
    return {status, text};
  }

  AxiomSet parse_axiom_spec(std::string_view text, Catalog const& cat) {
    AxiomSet    set;
    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start < text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      auto line = trim(strip_comment(text.substr(start, end - start)));
      start     = end + 1;
      if (line.empty()) {
        continue;
      }
      try {
        if (line.find('=') != std::string_view::npos || line.find("\xE2\x89\x88") != std::string_view::npos) {
          std::string label;
          auto        colon = line.find(':');
          if (colon != std::string_view::npos) {
            label = std::string(trim(line.substr(0, colon)));
            line  = trim(line.substr(colon + 1));
          } else {
            label = std::string(line);
          }
          set.add(parse_identity(line, label));
        } else {
          for (auto const& idy : cat.basis(line)) {
            if (!set.find(idy.label)) {
              set.add(idy);
            }
          }
        }
      } catch (ParseError const& e) {
        throw ParseError(e.message(), e.position(), line_no);
      } catch (Error const& e) {
        throw ParseError(e.what(), 0, line_no);
      }
    }
    return set;
  }

}  // namespace varcross
