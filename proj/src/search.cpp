#include "varcross/search.hpp"

#include <algorithm>
#include <numeric>

namespace varcross {

  namespace {

    class TableEnumerator {
     public:
      explicit TableEnumerator(std::size_t n) : _n(n), _t(n * n, -1) {
        for (std::size_t a = 0; a < n; ++a) {
          _t[a]      = static_cast<int>(a);
          _t[a * n]  = static_cast<int>(a);
        }
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        if (n > 2) {
          while (std::next_permutation(p.begin() + 1, p.end())) {
            std::vector<int> q(n);
            for (std::size_t a = 0; a < n; ++a) {
              q[p[a]] = static_cast<int>(a);
            }
            _perms.emplace_back(p, q);
          }
        }
        for (std::size_t a = 0; a < n; ++a) {
          _labels.push_back(a == 0 ? std::string("1") : std::string(1, static_cast<char>('a' + a - 1)));
        }
      }

      std::size_t run(std::function<bool(FiniteMonoid const&)> const& visit) {
        _visit = &visit;
        _count = 0;
        _stop  = false;
        if (_n == 1) {
          emit();
        } else {
          fill(0);
        }
        return _count;
      }

     private:
      int at(int a, int b) const noexcept {
        return (a < 0 || b < 0) ? -1 : _t[static_cast<std::size_t>(a) * _n + static_cast<std::size_t>(b)];
      }

      static bool clash(int l, int r) noexcept {
        return l >= 0 && r >= 0 && l != r;
      }

      // Associativity of every triple whose evaluation reads cell (i, j).
      bool consistent(int i, int j) const noexcept {
        int v = at(i, j);
        int n = static_cast<int>(_n);
        for (int x = 0; x < n; ++x) {
          if (clash(at(v, x), at(i, at(j, x)))) {
            return false;
          }
          if (clash(at(at(x, i), j), at(x, v))) {
            return false;
          }
        }
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            if (at(a, b) == i && clash(v, at(a, at(b, j)))) {
              return false;
            }
            if (at(a, b) == j && clash(at(at(i, a), b), v)) {
              return false;
            }
          }
        }
        return true;
      }

      // False when some relabelling already yields a smaller table on the
      // filled prefix.
      bool canonical_prefix() const noexcept {
        int n = static_cast<int>(_n);
        for (auto const& [p, q] : _perms) {
          bool decided = false;
          for (int r = 1; r < n && !decided; ++r) {
            for (int c = 1; c < n; ++c) {
              int a   = at(r, c);
              int src = at(q[r], q[c]);
              if (a < 0 || src < 0) {
                decided = true;
                break;
              }
              int b = p[src];
              if (b < a) {
                return false;
              }
              if (b > a) {
                decided = true;
                break;
              }
            }
          }
        }
        return true;
      }

      void fill(std::size_t cell) {
        std::size_t m = _n - 1;
        if (cell == m * m) {
          emit();
          return;
        }
        int i = static_cast<int>(1 + cell / m);
        int j = static_cast<int>(1 + cell % m);
        for (int v = 0; v < static_cast<int>(_n) && !_stop; ++v) {
          _t[static_cast<std::size_t>(i) * _n + static_cast<std::size_t>(j)] = v;
          if (!consistent(i, j)) {
            continue;
          }
          if (static_cast<std::size_t>(j) == m && !canonical_prefix()) {
            continue;
          }
          fill(cell + 1);
        }
        _t[static_cast<std::size_t>(i) * _n + static_cast<std::size_t>(j)] = -1;
      }

      void emit() {
        std::vector<element_type> table(_t.begin(), _t.end());
        ++_count;
        if (!(*_visit)(FiniteMonoid::from_table(_n, std::move(table), 0, _labels))) {
          _stop = true;
        }
      }

      std::size_t                                             _n;
      std::vector<int>                                        _t;
      std::vector<std::pair<std::vector<int>, std::vector<int>>> _perms;
      std::vector<std::string>                                _labels;
      std::function<bool(FiniteMonoid const&)> const*        _visit = nullptr;
      std::size_t                                             _count = 0;
      bool                                                    _stop  = false;
    };

  }  // namespace

  std::size_t enumerate_monoids(std::size_t order, std::function<bool(FiniteMonoid const&)> const& visit) {
    if (order == 0) {
      return 0;
    }
    return TableEnumerator(order).run(visit);
  }

  SearchResult witness_search(SearchSpec const& spec) {
    SearchResult result;
    bool         undecided = false;
    for (std::size_t order = std::max<std::size_t>(1, spec.min_order); order <= spec.max_order; ++order) {
      enumerate_monoids(order, [&](FiniteMonoid const& m) {
        ++result.examined;
        for (auto const& idy : spec.must_fail) {
          auto r = satisfies(m, idy, spec.budget);
          if (r.decision == Decision::inconclusive) {
            undecided = true;
          }
          if (r.decision != Decision::no) {
            return true;
          }
        }
        auto report = satisfies_all(m, spec.must_satisfy, spec.budget);
        if (report.decision == Decision::inconclusive) {
          undecided = true;
        }
        if (report.decision != Decision::yes) {
          return true;
        }
        result.witness = m;
        return false;
      });
      if (result.witness) {
        result.decision = Decision::yes;
        result.detail   = "found a witness of order " + std::to_string(order) + " after " + std::to_string(result.examined)
                      + " monoids";
        return result;
      }
    }
    result.decision = undecided ? Decision::inconclusive : Decision::no;
    result.detail   = "no witness up to order " + std::to_string(spec.max_order) + " among "
                  + std::to_string(result.examined) + " monoids";
    return result;
  }

}  // namespace varcross
