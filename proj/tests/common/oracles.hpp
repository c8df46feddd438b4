#ifndef VARCROSS_TESTS_ORACLES_HPP_
#define VARCROSS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "varcross/identity.hpp"
#include "varcross/monoid.hpp"

namespace oracle {

  using varcross::element_type;
  using varcross::FiniteMonoid;
  using varcross::Identity;
  using varcross::Variable;
  using varcross::Word;

  // Plain odometer over all assignments of the identity's variables.
  inline bool satisfies(FiniteMonoid const& m, Identity const& idy) {
    auto vars = idy.variables();
    std::vector<Variable> vs(vars.begin(), vars.end());
    std::vector<element_type> value(vs.size(), 0);
    auto eval = [&](Word const& w) {
      element_type r = m.identity();
      for (auto v : w) {
        auto i = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
        r = m.product(r, value[i]);
      }
      return r;
    };
    while (true) {
      if (eval(idy.lhs) != eval(idy.rhs)) {
        return false;
      }
      std::size_t i = 0;
      while (i < value.size() && ++value[i] == m.order()) {
        value[i++] = 0;
      }
      if (i == value.size()) {
        return true;
      }
    }
  }

  inline std::vector<Word> all_words(std::vector<Variable> const& alphabet, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (auto v : alphabet) {
          auto u = w;
          u *= v;
          next.push_back(u);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  inline Word random_word(std::mt19937_64& rng, std::vector<Variable> const& alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::vector<Variable>                      out;
    for (std::size_t i = len(rng); i > 0; --i) {
      out.push_back(alphabet[pick(rng)]);
    }
    return Word(std::move(out));
  }

  inline std::vector<Variable> letters(char const* names) {
    std::vector<Variable> out;
    for (char const* p = names; *p; ++p) {
      out.push_back(Variable::letter(*p));
    }
    return out;
  }

  // Isomorphism classes of monoids of order n by brute force: every table
  // on {0..n-1} with identity 0, kept when associative, keyed by the least
  // relabelled table over all permutations fixing 0.
  inline std::size_t count_monoids(std::size_t n) {
    std::size_t k = n - 1;
    std::vector<element_type> cells(k * k, 0);
    std::vector<std::vector<element_type>> perms;
    std::vector<element_type>              p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = static_cast<element_type>(i);
    }
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    std::set<std::vector<element_type>> classes;
    auto mul = [&](std::vector<element_type> const& c, element_type a, element_type b) -> element_type {
      if (a == 0) {
        return b;
      }
      if (b == 0) {
        return a;
      }
      return c[(a - 1) * k + (b - 1)];
    };
    while (true) {
      bool assoc = true;
      for (element_type a = 1; a < n && assoc; ++a) {
        for (element_type b = 1; b < n && assoc; ++b) {
          for (element_type c = 1; c < n && assoc; ++c) {
            assoc = mul(cells, mul(cells, a, b), c) == mul(cells, a, mul(cells, b, c));
          }
        }
      }
      if (assoc) {
        std::vector<element_type> best;
        for (auto const& q : perms) {
          std::vector<element_type> img(k * k);
          for (element_type a = 1; a < n; ++a) {
            for (element_type b = 1; b < n; ++b) {
              img[(q[a] - 1) * k + (q[b] - 1)] = q[mul(cells, a, b)];
            }
          }
          if (best.empty() || img < best) {
            best = std::move(img);
          }
        }
        classes.insert(std::move(best));
      }
      std::size_t i = 0;
      while (i < cells.size() && ++cells[i] == n) {
        cells[i++] = 0;
      }
      if (i == cells.size()) {
        break;
      }
    }
    return classes.size();
  }

}  // namespace oracle

#endif  // VARCROSS_TESTS_ORACLES_HPP_
