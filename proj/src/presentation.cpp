#include "varcross/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "varcross/error.hpp"

namespace varcross {

  bool Presentation::uses_zero() const noexcept {
    return std::any_of(relations.begin(), relations.end(), [](Relation const& r) { return !r.rhs; });
  }

  Presentation parse_presentation(std::string_view text) {
    Presentation       p;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    auto word_at = [&](std::string_view s) {
      try {
        return parse_word(s);
      } catch (ParseError const& e) {
        throw ParseError(e.message(), e.position(), line_no);
      }
    };
    auto is_zero = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s == "0";
    };
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        head;
      if (!(ls >> head)) {
        continue;
      }
      if (head == "generators") {
        for (std::string g; ls >> g;) {
          try {
            p.generators.push_back(Variable::from_name(g));
          } catch (ParseError const& e) {
            throw ParseError(e.message(), 0, line_no);
          }
        }
        continue;
      }
      if (head == "expect") {
        for (std::string e; ls >> e;) {
          p.expected.push_back(e);
        }
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ParseError("expected a relation 'u = v' or 'u = 0'", 0, line_no);
      }
      auto left  = std::string_view(line).substr(0, eq);
      auto right = std::string_view(line).substr(eq + 1);
      if (is_zero(left)) {
        std::swap(left, right);
      }
      Relation r;
      r.lhs = word_at(left);
      if (!is_zero(right)) {
        r.rhs = word_at(right);
      }
      p.relations.push_back(std::move(r));
    }
    for (auto const& r : p.relations) {
      for (auto const* w : {&r.lhs, r.rhs ? &*r.rhs : nullptr}) {
        if (w == nullptr) {
          continue;
        }
        for (auto v : *w) {
          if (std::find(p.generators.begin(), p.generators.end(), v) == p.generators.end()) {
            throw ParseError("relation uses undeclared generator '" + v.name() + "'", 0, 0);
          }
        }
      }
    }
    return p;
  }

  namespace {

    // Words over the internal alphabet: char 0 is the zero symbol, char i
    // (i >= 1) is generator i - 1.
    using Str = std::string;

    bool shortlex_greater(Str const& a, Str const& b) {
      if (a.size() != b.size()) {
        return a.size() > b.size();
      }
      return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(), [](char x, char y) {
        return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
      });
    }

    struct Limit {
      std::string what;
    };

    class Completion {
     public:
      explicit Completion(ClosureLimits const& limits) : _limits(limits) {}

      void add_equation(Str a, Str b) {
        _pending.emplace_back(std::move(a), std::move(b));
      }

      void run() {
        while (!_pending.empty()) {
          auto [s, t] = std::move(_pending.front());
          _pending.pop_front();
          s = reduce(std::move(s));
          t = reduce(std::move(t));
          if (s == t) {
            continue;
          }
          if (shortlex_greater(t, s)) {
            std::swap(s, t);
          }
          if (s.size() > _limits.max_length) {
            throw Limit{"rewriting produced a word longer than " + std::to_string(_limits.max_length)};
          }
          add_rule(std::move(s), std::move(t));
        }
      }

      Str reduce(Str w) const {
        bool changed = true;
        while (changed) {
          changed = false;
          for (auto const& [l, r] : _rules) {
            auto pos = w.find(l);
            if (pos != Str::npos) {
              w.replace(pos, l.size(), r);
              changed = true;
              break;
            }
          }
        }
        return w;
      }

     private:
      void add_rule(Str l, Str r) {
        // Rules made redundant by the new left side become equations again.
        std::vector<std::pair<Str, Str>> kept;
        for (auto& [l2, r2] : _rules) {
          if (l2.find(l) != Str::npos) {
            _pending.emplace_back(std::move(l2), std::move(r2));
          } else {
            kept.emplace_back(std::move(l2), std::move(r2));
          }
        }
        _rules = std::move(kept);
        _rules.emplace_back(l, r);
        for (auto& rule : _rules) {
          rule.second = reduce(rule.second);
        }
        if (_rules.size() > _limits.max_rules) {
          throw Limit{"more than " + std::to_string(_limits.max_rules) + " rewriting rules"};
        }
        auto const& nl = _rules.back().first;
        auto const& nr = _rules.back().second;
        for (auto const& [ol, orr] : _rules) {
          overlaps(nl, nr, ol, orr);
          if (ol != nl) {
            overlaps(ol, orr, nl, nr);
          }
        }
      }

      void overlaps(Str const& l1, Str const& r1, Str const& l2, Str const& r2) {
        for (std::size_t k = 1; k < std::min(l1.size(), l2.size()) + (l1 == l2 ? 0 : 1); ++k) {
          if (k >= l1.size() && k >= l2.size()) {
            break;
          }
          if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) {
            _pending.emplace_back(r1 + l2.substr(k), l1.substr(0, l1.size() - k) + r2);
          }
        }
      }

      ClosureLimits                    _limits;
      std::vector<std::pair<Str, Str>> _rules;
      std::deque<std::pair<Str, Str>>  _pending;
    };

    std::string run_length_label(Str const& w, std::vector<Variable> const& gens) {
      if (w.empty()) {
        return "1";
      }
      if (w == Str(1, '\0')) {
        return "0";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
          ++j;
        }
        auto name = gens[static_cast<unsigned char>(w[i]) - 1].name();
        out += name;
        if (j - i > 1) {
          out += (name.size() > 1 ? "^" : "") + std::to_string(j - i);
        }
        i = j;
      }
      return out;
    }

  }  // namespace

  ClosureResult close_presentation(Presentation const& p, ClosureLimits const& limits) {
    ClosureResult result;
    auto const&   gens = p.generators;
    if (gens.size() > 250) {
      throw MonoidError("too many generators");
    }
    auto encode = [&](Word const& w) {
      Str s;
      for (auto v : w) {
        auto it = std::find(gens.begin(), gens.end(), v);
        if (it == gens.end()) {
          throw MonoidError("relation uses undeclared generator '" + v.name() + "'");
        }
        s += static_cast<char>(it - gens.begin() + 1);
      }
      return s;
    };
    bool const       zero = p.uses_zero();
    Str const        Z(1, '\0');
    Completion       kb(limits);
    std::vector<Str> nfs;
    try {
      if (zero) {
        kb.add_equation(Z + Z, Z);
        for (std::size_t g = 0; g < gens.size(); ++g) {
          Str s(1, static_cast<char>(g + 1));
          kb.add_equation(Z + s, Z);
          kb.add_equation(s + Z, Z);
        }
      }
      for (auto const& r : p.relations) {
        kb.add_equation(encode(r.lhs), r.rhs ? encode(*r.rhs) : Z);
      }
      kb.run();
      std::set<Str> seen{Str()};
      nfs.push_back(Str());
      for (std::size_t i = 0; i < nfs.size(); ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          auto w = kb.reduce(nfs[i] + static_cast<char>(g + 1));
          if (seen.insert(w).second) {
            nfs.push_back(w);
            if (nfs.size() > limits.max_elements) {
              throw Limit{"more than " + std::to_string(limits.max_elements) + " elements"};
            }
          }
        }
      }
    } catch (Limit const& l) {
      result.status = Decision::inconclusive;
      result.detail = l.what;
      return result;
    }
    std::sort(nfs.begin(), nfs.end(), [&](Str const& a, Str const& b) {
      auto rank = [&](Str const& s) { return s == Z ? 0 : s.empty() ? 2 : 1; };
      if (rank(a) != rank(b)) {
        return rank(a) < rank(b);
      }
      return shortlex_greater(b, a);
    });
    std::map<Str, element_type> index;
    std::vector<std::string>    labels;
    for (std::size_t i = 0; i < nfs.size(); ++i) {
      index[nfs[i]] = static_cast<element_type>(i);
      labels.push_back(run_length_label(nfs[i], gens));
    }
    std::size_t const         n = nfs.size();
    std::vector<element_type> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = index.at(kb.reduce(nfs[i] + nfs[j]));
      }
    }
    if (!p.expected.empty()) {
      std::set<std::string> want(p.expected.begin(), p.expected.end());
      std::set<std::string> got(labels.begin(), labels.end());
      if (want != got) {
        std::string missing, extra;
        for (auto const& w : want) {
          if (!got.count(w)) {
            missing += ' ' + w;
          }
        }
        for (auto const& g : got) {
          if (!want.count(g)) {
            extra += ' ' + g;
          }
        }
        throw MonoidError("presentation closure differs from the expected elements; missing:"
                          + (missing.empty() ? " none" : missing) + "; unexpected:" + (extra.empty() ? " none" : extra));
      }
    }
    result.monoid = FiniteMonoid::from_table(n, std::move(table), static_cast<element_type>(n - 1), std::move(labels));
    result.status = Decision::yes;
    return result;
  }

}  // namespace varcross
