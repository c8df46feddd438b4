#include "varcross/structure.hpp"

#include <algorithm>
#include <map>

namespace varcross {

  std::size_t GreenData::class_count(std::vector<std::size_t> const& cls) {
    return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  }

  namespace {
    std::vector<element_type> closure(FiniteMonoid const& m, element_type a, bool left, bool right) {
      std::vector<bool> in(m.order(), false);
      for (element_type s = 0; s < m.order(); ++s) {
        for (element_type t = 0; t < m.order(); ++t) {
          element_type x = a;
          if (left) {
            x = m.product(s, x);
          }
          if (right) {
            x = m.product(x, t);
          }
          in[x] = true;
          if (!right) {
            break;
          }
        }
      }
      std::vector<element_type> out;
      for (element_type x = 0; x < m.order(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    std::vector<std::size_t> classes_of(std::vector<std::vector<element_type>> const& keys) {
      std::map<std::vector<element_type>, std::size_t> number;
      std::vector<std::size_t>                         cls;
      for (auto const& k : keys) {
        cls.push_back(number.emplace(k, number.size()).first->second);
      }
      return cls;
    }
  }  // namespace

  GreenData green(FiniteMonoid const& m) {
    GreenData g;
    for (element_type a = 0; a < m.order(); ++a) {
      g.left_ideal.push_back(closure(m, a, true, false));
      g.right_ideal.push_back(closure(m, a, false, true));
      g.ideal.push_back(closure(m, a, true, true));
    }
    g.l_class = classes_of(g.left_ideal);
    g.r_class = classes_of(g.right_ideal);
    g.j_class = classes_of(g.ideal);
    std::vector<std::vector<element_type>> hkeys;
    for (element_type a = 0; a < m.order(); ++a) {
      hkeys.push_back({static_cast<element_type>(g.l_class[a]), static_cast<element_type>(g.r_class[a])});
    }
    g.h_class = classes_of(hkeys);
    return g;
  }

  bool is_j_trivial(FiniteMonoid const& m) {
    auto g = green(m);
    return GreenData::class_count(g.j_class) == m.order();
  }

  CyclicData cyclic_data(FiniteMonoid const& m, element_type a) {
    std::vector<std::size_t> first(m.order(), static_cast<std::size_t>(-1));
    element_type             x = m.identity();
    for (std::size_t k = 0;; ++k) {
      if (first[x] != static_cast<std::size_t>(-1)) {
        return CyclicData{first[x], k - first[x]};
      }
      first[x] = k;
      x        = m.product(x, a);
    }
  }

  AperiodicityReport aperiodicity(FiniteMonoid const& m) {
    AperiodicityReport r;
    for (element_type a = 0; a < m.order(); ++a) {
      auto c = cyclic_data(m, a);
      if (c.period != 1) {
        r.aperiodic = false;
        r.witness   = a;
        r.index     = 0;
        return r;
      }
      r.index = std::max(r.index, c.index);
    }
    return r;
  }

  bool satisfies_aperiodicity(FiniteMonoid const& m, std::size_t n) {
    for (element_type a = 0; a < m.order(); ++a) {
      auto c = cyclic_data(m, a);
      if (c.period != 1 || c.index > n) {
        return false;
      }
    }
    return true;
  }

  std::vector<element_type> idempotents(FiniteMonoid const& m) {
    std::vector<element_type> out;
    for (element_type a = 0; a < m.order(); ++a) {
      if (m.is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool is_completely_regular(FiniteMonoid const& m) {
    auto              g = green(m);
    std::vector<bool> has(m.order(), false);
    for (auto e : idempotents(m)) {
      has[g.h_class[e]] = true;
    }
    for (element_type a = 0; a < m.order(); ++a) {
      if (!has[g.h_class[a]]) {
        return false;
      }
    }
    return true;
  }

  bool idempotents_commute(FiniteMonoid const& m) {
    auto es = idempotents(m);
    for (auto e : es) {
      for (auto f : es) {
        if (m.product(e, f) != m.product(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool idempotents_central(FiniteMonoid const& m) {
    for (auto e : idempotents(m)) {
      for (element_type a = 0; a < m.order(); ++a) {
        if (m.product(e, a) != m.product(a, e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_commutative(FiniteMonoid const& m) {
    for (element_type a = 0; a < m.order(); ++a) {
      for (element_type b = a + 1; b < m.order(); ++b) {
        if (m.product(a, b) != m.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace varcross
