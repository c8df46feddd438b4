#include "varcross/satisfaction.hpp"

#include <algorithm>
#include <map>

#include "varcross/structure.hpp"

namespace varcross {

  element_type evaluate(FiniteMonoid const& m, Word const& w, ElementSubstitution const& phi) {
    element_type x = m.identity();
    for (auto v : w) {
      auto it = std::find_if(phi.begin(), phi.end(), [v](auto const& p) { return p.first == v; });
      x       = m.product(x, it == phi.end() ? m.identity() : it->second);
    }
    return x;
  }

  std::string Counterexample::to_string(FiniteMonoid const& m) const {
    std::string out;
    for (auto const& [v, e] : assignment) {
      out += (out.empty() ? "" : " ") + v.name() + "=" + m.label(e);
    }
    if (out.empty()) {
      out = "(no variables)";
    }
    return out + " gives " + m.label(lhs_value) + " != " + m.label(rhs_value);
  }

  namespace {

    class Enumerator {
     public:
      Enumerator(FiniteMonoid const& m, Identity const& idy, std::size_t budget) : _m(m), _budget(budget) {
        auto first = content_in_order(idy.lhs * idy.rhs);
        std::map<Variable, std::size_t> count;
        for (auto const* w : {&idy.lhs, &idy.rhs}) {
          for (auto v : *w) {
            ++count[v];
          }
        }
        _vars = first;
        std::stable_sort(_vars.begin(), _vars.end(), [&](Variable a, Variable b) { return count[a] > count[b]; });
        _first_order = first;
        std::size_t const k = _vars.size();
        for (int s = 0; s < 2; ++s) {
          Word const& w = s == 0 ? idy.lhs : idy.rhs;
          for (auto v : w) {
            _pos[s].push_back(static_cast<std::size_t>(std::find(_vars.begin(), _vars.end(), v) - _vars.begin()));
          }
          // _limit[s][d]: length of the longest prefix using only the first d variables.
          _limit[s].assign(k + 1, 0);
          for (std::size_t d = 0; d <= k; ++d) {
            std::size_t p = 0;
            while (p < _pos[s].size() && _pos[s][p] < d) {
              ++p;
            }
            _limit[s][d] = p;
          }
          _pre[s].assign(k + 1, m.identity());
        }
        _val.assign(k, 0);
      }

      SatisfactionResult run() {
        SatisfactionResult r;
        bool               exhausted = false;
        try {
          if (dfs(0)) {
            r.decision = Decision::no;
            Counterexample c;
            for (auto v : _first_order) {
              auto i = static_cast<std::size_t>(std::find(_vars.begin(), _vars.end(), v) - _vars.begin());
              c.assignment.emplace_back(v, _val[i]);
            }
            c.lhs_value      = _pre[0].back();
            c.rhs_value      = _pre[1].back();
            r.counterexample = std::move(c);
          }
        } catch (Exhausted const&) {
          exhausted = true;
        }
        if (exhausted) {
          r.decision = Decision::inconclusive;
        }
        r.products = _products;
        return r;
      }

     private:
      struct Exhausted {};

      bool dfs(std::size_t d) {
        std::size_t const k = _vars.size();
        if (d == k) {
          return _pre[0][k] != _pre[1][k];
        }
        for (element_type e = 0; e < _m.order(); ++e) {
          _val[d] = e;
          for (int s = 0; s < 2; ++s) {
            element_type x = _pre[s][d];
            for (std::size_t p = _limit[s][d]; p < _limit[s][d + 1]; ++p) {
              x = _m.product(x, _val[_pos[s][p]]);
            }
            _products += _limit[s][d + 1] - _limit[s][d];
            _pre[s][d + 1] = x;
          }
          if (_products > _budget) {
            throw Exhausted{};
          }
          if (dfs(d + 1)) {
            return true;
          }
        }
        return false;
      }

      FiniteMonoid const&       _m;
      std::size_t               _budget;
      std::size_t               _products = 0;
      std::vector<Variable>     _vars, _first_order;
      std::vector<std::size_t>  _pos[2];
      std::vector<std::size_t>  _limit[2];
      std::vector<element_type> _pre[2];
      std::vector<element_type> _val;
    };

  }  // namespace

  SatisfactionResult satisfies(FiniteMonoid const& m, Identity const& idy, std::size_t budget) {
    if (idy.lhs == idy.rhs) {
      return SatisfactionResult{};
    }
    return Enumerator(m, idy, budget).run();
  }

  BasisReport satisfies_all(FiniteMonoid const& m, AxiomSet const& basis, std::size_t budget) {
    BasisReport report;
    for (auto const& ax : basis) {
      auto r = satisfies(m, ax, budget);
      if (r.decision == Decision::no && !report.first_failure) {
        report.first_failure = ax.label;
        report.decision      = Decision::no;
      } else if (r.decision == Decision::inconclusive && report.decision == Decision::yes) {
        report.decision = Decision::inconclusive;
      }
      report.verdicts.emplace_back(ax.label, std::move(r));
    }
    return report;
  }

  bool q_satisfies(Word const& u, Word const& v) {
    auto nu = natural_form(u);
    auto nv = natural_form(v);
    if (nu.separators != nv.separators) {
      return false;
    }
    for (std::size_t i = 0; i < nu.core_blocks.size(); ++i) {
      if (content(nu.core_blocks[i]) != content(nv.core_blocks[i])) {
        return false;
      }
    }
    return true;
  }

  std::vector<SatisfactionResult> satisfies_family(FiniteMonoid const& m,
                                                   Family              family,
                                                   std::size_t         first,
                                                   std::size_t         last,
                                                   std::size_t         budget) {
    std::vector<SatisfactionResult> out;
    if (family == Family::aperiodicity) {
      std::vector<CyclicData> cyc;
      for (element_type a = 0; a < m.order(); ++a) {
        cyc.push_back(cyclic_data(m, a));
      }
      for (std::size_t n = first; n <= last; ++n) {
        SatisfactionResult r;
        for (element_type a = 0; a < m.order(); ++a) {
          if (cyc[a].period != 1 || cyc[a].index > n) {
            Counterexample c;
            c.assignment = {{Variable::letter('x'), a}};
            c.lhs_value  = evaluate(m, power(Word{Variable::letter('x')}, n + 1), c.assignment);
            c.rhs_value  = evaluate(m, power(Word{Variable::letter('x')}, n), c.assignment);
            r.decision       = Decision::no;
            r.counterexample = std::move(c);
            break;
          }
        }
        out.push_back(std::move(r));
      }
      return out;
    }
    for (std::size_t n = first; n <= last; ++n) {
      FamilySpec spec;
      spec.family = family;
      spec.index  = n;
      if (family == Family::i_scheme) {
        for (std::size_t i = 1; i <= n; ++i) {
          spec.permutation.push_back(i);
        }
      }
      out.push_back(satisfies(m, family_identity(spec), budget));
    }
    return out;
  }

}  // namespace varcross
