#include "varcross/isomorphism.hpp"

#include <array>
#include <functional>

#include "varcross/structure.hpp"

namespace varcross {

  std::vector<element_type> greedy_generators(FiniteMonoid const& m) {
    std::vector<element_type> gens;
    std::vector<bool>         covered(m.order(), false);
    covered[m.identity()] = true;
    for (element_type a = 0; a < m.order(); ++a) {
      if (covered[a]) {
        continue;
      }
      gens.push_back(a);
      for (auto x : generated_submonoid(m, gens)) {
        covered[x] = true;
      }
    }
    return gens;
  }

  namespace {

    using Profile = std::array<std::size_t, 6>;

    std::vector<Profile> profiles(FiniteMonoid const& m) {
      auto                 g = green(m);
      std::vector<Profile> out;
      for (element_type a = 0; a < m.order(); ++a) {
        auto        c     = cyclic_data(m, a);
        std::size_t fixes = 0;
        for (element_type x = 0; x < m.order(); ++x) {
          fixes += m.product(x, a) == a ? 1 : 0;
        }
        out.push_back({c.index, c.period, g.left_ideal[a].size(), g.right_ideal[a].size(), g.ideal[a].size(), fixes});
      }
      return out;
    }

    // Calls `found` for each isomorphism m -> n until it returns false.
    void search(FiniteMonoid const& m, FiniteMonoid const& n, std::function<bool(std::vector<element_type> const&)> const& found) {
      if (m.order() != n.order()) {
        return;
      }
      auto pm   = profiles(m);
      auto pn   = profiles(n);
      auto gens = greedy_generators(m);
      // Each non-identity element as parent * generator, in discovery order.
      std::vector<element_type>                            order{m.identity()};
      std::vector<std::pair<element_type, std::size_t>>    recipe;
      std::vector<bool>                                    seen(m.order(), false);
      seen[m.identity()] = true;
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
          auto x = m.product(order[i], gens[g]);
          if (!seen[x]) {
            seen[x] = true;
            order.push_back(x);
            recipe.emplace_back(order[i], g);
          }
        }
      }
      std::vector<element_type> image(gens.size());
      bool                      stop = false;
      std::function<void(std::size_t)> assign = [&](std::size_t k) {
        if (stop) {
          return;
        }
        if (k == gens.size()) {
          std::vector<element_type> f(m.order(), 0);
          std::vector<bool>         used(n.order(), false);
          f[m.identity()]         = n.identity();
          used[n.identity()]      = true;
          for (std::size_t i = 0; i < recipe.size(); ++i) {
            auto [parent, g] = recipe[i];
            auto x           = order[i + 1];
            auto y           = n.product(f[parent], image[g]);
            if (used[y] || pm[x] != pn[y]) {
              return;
            }
            used[y] = true;
            f[x]    = y;
          }
          for (element_type a = 0; a < m.order(); ++a) {
            for (element_type b = 0; b < m.order(); ++b) {
              if (f[m.product(a, b)] != n.product(f[a], f[b])) {
                return;
              }
            }
          }
          stop = !found(f);
          return;
        }
        for (element_type y = 0; y < n.order() && !stop; ++y) {
          if (pm[gens[k]] == pn[y]) {
            image[k] = y;
            assign(k + 1);
          }
        }
      };
      assign(0);
    }

  }  // namespace

  std::optional<std::vector<element_type>> find_isomorphism(FiniteMonoid const& m, FiniteMonoid const& n) {
    std::optional<std::vector<element_type>> result;
    search(m, n, [&](std::vector<element_type> const& f) {
      result = f;
      return false;
    });
    return result;
  }

  std::vector<std::vector<element_type>> automorphisms(FiniteMonoid const& m, std::size_t limit) {
    std::vector<std::vector<element_type>> out;
    std::vector<element_type>              id(m.order());
    for (element_type a = 0; a < m.order(); ++a) {
      id[a] = a;
    }
    out.push_back(id);
    search(m, m, [&](std::vector<element_type> const& f) {
      if (f != id) {
        out.push_back(f);
      }
      return out.size() < limit;
    });
    return out;
  }

}  // namespace varcross
