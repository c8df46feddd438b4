#include "varcross/monoid.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "varcross/error.hpp"

namespace varcross {

  FiniteMonoid FiniteMonoid::from_table(std::size_t               order,
                                        std::vector<element_type> table,
                                        element_type              identity,
                                        std::vector<std::string>  labels) {
    if (order == 0) {
      throw MonoidError("a monoid has at least one element");
    }
    if (table.size() != order * order) {
      throw MonoidError("table has " + std::to_string(table.size()) + " entries, expected "
                        + std::to_string(order * order));
    }
    if (identity >= order) {
      throw MonoidError("identity index " + std::to_string(identity) + " out of range");
    }
    for (auto x : table) {
      if (x >= order) {
        throw MonoidError("table entry " + std::to_string(x) + " out of range");
      }
    }
    if (labels.empty()) {
      for (std::size_t i = 0; i < order; ++i) {
        labels.push_back(std::to_string(i));
      }
    } else if (labels.size() != order) {
      throw MonoidError("expected " + std::to_string(order) + " labels, got " + std::to_string(labels.size()));
    }
    FiniteMonoid m;
    m._order    = order;
    m._table    = std::move(table);
    m._identity = identity;
    m._labels   = std::move(labels);
    auto name   = [&](element_type a) { return m._labels[a]; };
    for (element_type a = 0; a < order; ++a) {
      if (m.product(identity, a) != a || m.product(a, identity) != a) {
        throw MonoidError("identity law fails at element " + name(a));
      }
    }
    for (element_type a = 0; a < order; ++a) {
      for (element_type b = 0; b < order; ++b) {
        auto ab = m.product(a, b);
        for (element_type c = 0; c < order; ++c) {
          if (m.product(ab, c) != m.product(a, m.product(b, c))) {
            throw MonoidError("not associative: (" + name(a) + " " + name(b) + ") " + name(c) + " != " + name(a)
                              + " (" + name(b) + " " + name(c) + ")");
          }
        }
      }
    }
    for (element_type z = 0; z < order; ++z) {
      bool is_zero = order > 1;
      for (element_type a = 0; a < order && is_zero; ++a) {
        is_zero = m.product(z, a) == z && m.product(a, z) == z;
      }
      if (is_zero) {
        m._zero = z;
        break;
      }
    }
    return m;
  }

  std::optional<element_type> FiniteMonoid::find_label(std::string_view name) const {
    for (element_type a = 0; a < _order; ++a) {
      if (_labels[a] == name) {
        return a;
      }
    }
    return std::nullopt;
  }

  FiniteMonoid trivial_monoid() {
    return FiniteMonoid::from_table(1, {0}, 0, {"1"});
  }

  FiniteMonoid parse_table(std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::string              line;
    std::size_t              line_no  = 0;
    std::size_t              order    = 0;
    std::optional<long>      identity;
    std::vector<std::string> names;
    std::vector<element_type> table;
    bool                     in_table = false;
    auto number = [&](std::string const& tok) {
      long value = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || p != tok.data() + tok.size() || value < 0) {
        throw ParseError("expected a non-negative integer, got '" + tok + "'", 0, line_no);
      }
      return value;
    };
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream       ls(line);
      std::vector<std::string> toks;
      for (std::string t; ls >> t;) {
        toks.push_back(t);
      }
      if (toks.empty()) {
        continue;
      }
      if (in_table) {
        if (toks.size() != order) {
          throw ParseError("table row has " + std::to_string(toks.size()) + " entries, expected "
                               + std::to_string(order),
                           0, line_no);
        }
        for (auto const& t : toks) {
          table.push_back(static_cast<element_type>(number(t)));
        }
        continue;
      }
      if (toks[0] == "order" && toks.size() == 2) {
        order = static_cast<std::size_t>(number(toks[1]));
      } else if (toks[0] == "identity" && toks.size() == 2) {
        identity = number(toks[1]);
      } else if (toks[0] == "names") {
        names.assign(toks.begin() + 1, toks.end());
      } else if (toks[0] == "table" && toks.size() == 1) {
        if (order == 0) {
          throw ParseError("'order' must precede 'table'", 0, line_no);
        }
        in_table = true;
      } else {
        throw ParseError("unexpected '" + toks[0] + "'", 0, line_no);
      }
    }
    if (!identity) {
      throw ParseError("missing 'identity'", 0, line_no);
    }
    if (table.size() != order * order) {
      throw ParseError("table has " + std::to_string(table.size() / std::max<std::size_t>(order, 1))
                           + " rows, expected " + std::to_string(order),
                       0, line_no);
    }
    return FiniteMonoid::from_table(order, std::move(table), static_cast<element_type>(*identity), std::move(names));
  }

  std::string to_table_text(FiniteMonoid const& m) {
    std::string out = "order " + std::to_string(m.order()) + "\nidentity " + std::to_string(m.identity()) + "\nnames";
    for (auto const& l : m.labels()) {
      out += ' ' + l;
    }
    out += "\ntable\n";
    for (element_type a = 0; a < m.order(); ++a) {
      for (element_type b = 0; b < m.order(); ++b) {
        out += (b ? " " : "") + std::to_string(m.product(a, b));
      }
      out += '\n';
    }
    return out;
  }

  namespace {
    std::string factor_label(Word const& w, bool compact) {
      if (w.empty()) {
        return "1";
      }
      if (!compact) {
        return w.to_string();
      }
      std::string out;
      for (auto v : w) {
        out += v.name();
      }
      return out;
    }
  }  // namespace

  FiniteMonoid rees_quotient(std::vector<Word> const& words) {
    std::size_t longest = 0;
    bool        compact = true;
    for (auto const& w : words) {
      longest = std::max(longest, w.size());
      for (auto v : w) {
        compact = compact && v.code() < 26;
      }
    }
    std::vector<Word>           factors;
    std::map<Word, std::size_t> index;
    for (std::size_t len = 1; len <= longest; ++len) {
      for (auto const& w : words) {
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
          auto f = w.subword(i, len);
          if (index.emplace(f, factors.size() + 1).second) {
            factors.push_back(std::move(f));
          }
        }
      }
    }
    std::size_t const  order    = factors.size() + 2;
    element_type const identity = static_cast<element_type>(order - 1);
    std::vector<element_type> table(order * order, 0);
    auto elt = [&](element_type i) { return i == identity ? Word() : factors[i - 1]; };
    for (element_type a = 0; a < order; ++a) {
      for (element_type b = 0; b < order; ++b) {
        element_type r = 0;
        if (a == identity) {
          r = b;
        } else if (b == identity) {
          r = a;
        } else if (a != 0 && b != 0) {
          auto it = index.find(elt(a) * elt(b));
          r       = it == index.end() ? 0 : static_cast<element_type>(it->second);
        }
        table[a * order + b] = r;
      }
    }
    std::vector<std::string> labels{"0"};
    for (auto const& f : factors) {
      labels.push_back(factor_label(f, compact));
    }
    labels.push_back("1");
    return FiniteMonoid::from_table(order, std::move(table), identity, std::move(labels));
  }

  FiniteMonoid direct_product(FiniteMonoid const& m, FiniteMonoid const& n) {
    std::size_t const         p = m.order(), q = n.order();
    std::vector<element_type> table(p * q * p * q);
    std::vector<std::string>  labels;
    for (element_type a = 0; a < p; ++a) {
      for (element_type b = 0; b < q; ++b) {
        labels.push_back("(" + m.label(a) + "," + n.label(b) + ")");
      }
    }
    for (element_type a1 = 0; a1 < p; ++a1) {
      for (element_type b1 = 0; b1 < q; ++b1) {
        for (element_type a2 = 0; a2 < p; ++a2) {
          for (element_type b2 = 0; b2 < q; ++b2) {
            table[(a1 * q + b1) * p * q + a2 * q + b2]
                = static_cast<element_type>(m.product(a1, a2) * q + n.product(b1, b2));
          }
        }
      }
    }
    auto identity = static_cast<element_type>(m.identity() * q + n.identity());
    return FiniteMonoid::from_table(p * q, std::move(table), identity, std::move(labels));
  }

  FiniteMonoid dual_monoid(FiniteMonoid const& m) {
    std::size_t const         n = m.order();
    std::vector<element_type> table(n * n);
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        table[a * n + b] = m.product(b, a);
      }
    }
    return FiniteMonoid::from_table(n, std::move(table), m.identity(), m.labels());
  }

  FiniteMonoid quotient(FiniteMonoid const& m, std::vector<std::vector<element_type>> const& classes) {
    std::size_t const         n = m.order();
    std::vector<element_type> cls(n, static_cast<element_type>(-1));
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (auto a : classes[c]) {
        if (a >= n) {
          throw MonoidError("class member out of range");
        }
        if (cls[a] != static_cast<element_type>(-1)) {
          throw MonoidError("element " + m.label(a) + " listed in two classes");
        }
        cls[a] = static_cast<element_type>(n + c);
      }
    }
    // Classes are numbered by the smallest member index.
    std::vector<element_type> rep;   // class number -> representative element
    std::vector<element_type> of(n); // element -> class number
    std::map<element_type, element_type> numbered;
    for (element_type a = 0; a < n; ++a) {
      element_type key = cls[a] == static_cast<element_type>(-1) ? a : cls[a];
      auto [it, fresh] = numbered.emplace(key, static_cast<element_type>(rep.size()));
      if (fresh) {
        rep.push_back(cls[a] == static_cast<element_type>(-1) ? a : classes[cls[a] - n].front());
      }
      of[a] = it->second;
    }
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        if (of[a] != of[b] || a == b) {
          continue;
        }
        for (element_type s = 0; s < n; ++s) {
          if (of[m.product(s, a)] != of[m.product(s, b)] || of[m.product(a, s)] != of[m.product(b, s)]) {
            throw MonoidError("not a congruence: " + m.label(a) + " ~ " + m.label(b) + " but multiplying by "
                              + m.label(s) + " separates them");
          }
        }
      }
    }
    std::size_t const         k = rep.size();
    std::vector<element_type> table(k * k);
    std::vector<std::string>  labels;
    for (element_type i = 0; i < k; ++i) {
      labels.push_back(m.label(rep[i]));
      for (element_type j = 0; j < k; ++j) {
        table[i * k + j] = of[m.product(rep[i], rep[j])];
      }
    }
    return FiniteMonoid::from_table(k, std::move(table), of[m.identity()], std::move(labels));
  }

  std::vector<element_type> generated_submonoid(FiniteMonoid const& m, std::vector<element_type> const& gens) {
    std::vector<element_type> out{m.identity()};
    std::vector<bool>         seen(m.order(), false);
    seen[m.identity()] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto g : gens) {
        auto p = m.product(out[i], g);
        if (!seen[p]) {
          seen[p] = true;
          out.push_back(p);
        }
      }
    }
    return out;
  }

}  // namespace varcross
