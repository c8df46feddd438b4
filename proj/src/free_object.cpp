#include "varcross/free_object.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "varcross/isomorphism.hpp"

namespace varcross {

  std::uint32_t FreeObject::state_of(Word const& w) const {
    std::uint32_t s = 0;
    for (auto v : w) {
      auto it = std::find(_gens.begin(), _gens.end(), v);
      if (it == _gens.end()) {
        throw std::invalid_argument("variable " + v.name() + " is not a generator");
      }
      s = next(s, static_cast<std::size_t>(it - _gens.begin()));
    }
    return s;
  }

  Word FreeObject::representative(std::uint32_t state) const {
    std::vector<Variable> rev;
    while (state != 0) {
      auto [p, g] = _parent[state];
      rev.push_back(_gens[g]);
      state = p;
    }
    return Word(rev.rbegin(), rev.rend());
  }

  std::string FreeObject::dump() const {
    std::string out;
    for (std::uint32_t s = 0; s < size(); ++s) {
      out += std::to_string(s) + " [" + representative(s).to_string() + "] :";
      for (std::size_t g = 0; g < _gens.size(); ++g) {
        out += " " + _gens[g].name() + " -> " + std::to_string(next(s, g));
      }
      out += '\n';
    }
    return out;
  }

  struct FreeObjectBuilder {
    static FreeObjectResult build(FiniteMonoid const&          m,
                                  std::vector<Variable> const& gens,
                                  FreeObjectLimits const&      limits) {
      FreeObjectResult  result;
      std::size_t const k     = gens.size();
      std::size_t const n     = m.order();
      std::size_t const width = n <= 256 ? 1 : n <= 65536 ? 2 : 4;

      // Substitutions gens -> M, one representative per Aut(M)-orbit.
      std::size_t total = 1;
      for (std::size_t i = 0; i < k; ++i) {
        total *= n;
        if (total * k > limits.max_bytes) {
          result.status = Decision::inconclusive;
          result.detail = "too many substitutions";
          return result;
        }
      }
      auto const                autos = automorphisms(m, limits.automorphism_limit);
      std::vector<element_type> coords;  // k entries per kept substitution
      std::vector<element_type> tuple(k, 0), moved(k);
      for (std::size_t t = 0; t < total; ++t) {
        std::size_t x = t;
        for (std::size_t i = k; i-- > 0;) {
          tuple[i] = static_cast<element_type>(x % n);
          x /= n;
        }
        bool least = true;
        for (std::size_t a = 1; a < autos.size() && least; ++a) {
          for (std::size_t i = 0; i < k; ++i) {
            moved[i] = autos[a][tuple[i]];
          }
          least = !(moved < tuple);
        }
        if (least) {
          coords.insert(coords.end(), tuple.begin(), tuple.end());
        }
      }
      std::size_t const c = k == 0 ? 1 : coords.size() / k;
      result.coordinates  = c;

      auto encode = [&](std::vector<element_type> const& v) {
        std::string s(v.size() * width, '\0');
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t b = 0; b < width; ++b) {
            s[i * width + b] = static_cast<char>((v[i] >> (8 * b)) & 0xff);
          }
        }
        return s;
      };
      auto decode = [&](std::string const& s, std::vector<element_type>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
          element_type e = 0;
          for (std::size_t b = 0; b < width; ++b) {
            e |= static_cast<element_type>(static_cast<unsigned char>(s[i * width + b])) << (8 * b);
          }
          v[i] = e;
        }
      };

      FreeObject                                     fo;
      fo._gens        = gens;
      fo._coordinates = c;
      std::unordered_map<std::string, std::uint32_t> index;
      std::vector<std::string>                       keys;
      keys.push_back(encode(std::vector<element_type>(c, m.identity())));
      index.emplace(keys.back(), 0);
      fo._parent.emplace_back(0, 0);
      std::vector<element_type> cur(c), nxt(c);
      std::size_t               bytes = keys.back().size();
      for (std::size_t s = 0; s < keys.size(); ++s) {
        decode(keys[s], cur);
        for (std::size_t g = 0; g < k; ++g) {
          for (std::size_t i = 0; i < c; ++i) {
            nxt[i] = m.product(cur[i], coords[i * k + g]);
          }
          auto key = encode(nxt);
          auto it  = index.find(key);
          if (it == index.end()) {
            if (keys.size() >= limits.state_cap || bytes + key.size() > limits.max_bytes) {
              result.status      = Decision::inconclusive;
              result.states_seen = keys.size();
              result.detail      = "state cap " + std::to_string(limits.state_cap) + " reached with "
                              + std::to_string(c) + " coordinates";
              return result;
            }
            auto id = static_cast<std::uint32_t>(keys.size());
            bytes += key.size();
            it = index.emplace(key, id).first;
            keys.push_back(std::move(key));
            fo._parent.emplace_back(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(g));
          }
          fo._delta.push_back(it->second);
        }
      }
      result.states_seen = keys.size();
      result.automaton   = std::move(fo);
      return result;
    }
  };

  FreeObjectResult build_free_object(FiniteMonoid const&          m,
                                     std::vector<Variable> const& generators,
                                     FreeObjectLimits const&      limits) {
    return FreeObjectBuilder::build(m, generators, limits);
  }

  FreeObjectResult build_free_object(FiniteMonoid const& m, std::size_t k, FreeObjectLimits const& limits) {
    std::vector<Variable> gens;
    for (std::size_t i = 1; i <= k; ++i) {
      gens.push_back(Variable::indexed('x', static_cast<std::uint32_t>(i)));
    }
    return FreeObjectBuilder::build(m, gens, limits);
  }

  namespace {

    std::vector<Variable> generators_for(Word const& w) {
      auto gens = content_in_order(w);
      if (gens.empty()) {
        gens.push_back(Variable::letter('x'));
      }
      return gens;
    }

    // Paths from state 0 to `target`, saturated at `cap`; nullopt if infinite.
    std::optional<std::size_t> count_paths(FreeObject const& fo, std::uint32_t target, std::size_t cap) {
      std::size_t const n = fo.size(), k = fo.generators().size();
      // States that can reach the target.
      std::vector<std::vector<std::uint32_t>> preds(n);
      for (std::uint32_t s = 0; s < n; ++s) {
        for (std::size_t g = 0; g < k; ++g) {
          preds[fo.next(s, g)].push_back(s);
        }
      }
      std::vector<bool>          live(n, false);
      std::vector<std::uint32_t> stack{target};
      live[target] = true;
      while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto p : preds[s]) {
          if (!live[p]) {
            live[p] = true;
            stack.push_back(p);
          }
        }
      }
      // Kahn's algorithm on the live subgraph; leftovers mean a cycle.
      std::vector<std::size_t> indeg(n, 0);
      for (std::uint32_t s = 0; s < n; ++s) {
        if (!live[s]) {
          continue;
        }
        for (std::size_t g = 0; g < k; ++g) {
          if (live[fo.next(s, g)]) {
            ++indeg[fo.next(s, g)];
          }
        }
      }
      std::vector<std::size_t>   ways(n, 0);
      std::deque<std::uint32_t>  queue;
      std::size_t                live_count = 0, done = 0;
      for (std::uint32_t s = 0; s < n; ++s) {
        live_count += live[s] ? 1 : 0;
        if (live[s] && indeg[s] == 0) {
          queue.push_back(s);
        }
      }
      ways[0] = 1;
      while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        ++done;
        for (std::size_t g = 0; g < k; ++g) {
          auto t = fo.next(s, g);
          if (!live[t]) {
            continue;
          }
          ways[t] = std::min(cap, ways[t] + ways[s]);
          if (--indeg[t] == 0) {
            queue.push_back(t);
          }
        }
      }
      if (done != live_count) {
        return std::nullopt;
      }
      return ways[target];
    }

    // Shortest word other than w that reaches the state of w.
    std::optional<Word> second_word(FreeObject const& fo, Word const& w) {
      auto const&   gens   = fo.generators();
      auto const    target = fo.state_of(w);
      std::size_t const k = gens.size(), len = w.size();
      // Tracker t in 0..len: the word read so far is w's prefix of length t;
      // len + 1: it has diverged from w.
      std::size_t const                           width = len + 2;
      std::vector<bool>                           seen(fo.size() * width, false);
      std::vector<std::pair<std::size_t, std::size_t>> parent(fo.size() * width);
      std::deque<std::size_t>                     queue{0};
      seen[0] = true;
      while (!queue.empty()) {
        auto node = queue.front();
        queue.pop_front();
        auto s = node / width, t = node % width;
        if (s == target && t != len) {
          std::vector<Variable> rev;
          while (node != 0) {
            auto [p, g] = parent[node];
            rev.push_back(gens[g]);
            node = p;
          }
          return Word(rev.rbegin(), rev.rend());
        }
        for (std::size_t g = 0; g < k; ++g) {
          std::size_t nt   = (t < len && w[t] == gens[g]) ? t + 1 : len + 1;
          std::size_t succ = fo.next(static_cast<std::uint32_t>(s), g) * width + nt;
          if (!seen[succ]) {
            seen[succ]   = true;
            parent[succ] = {node, g};
            queue.push_back(succ);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  IsotermResult is_isoterm(FiniteMonoid const& m, Word const& w, FreeObjectLimits const& limits) {
    IsotermResult r;
    auto          built = build_free_object(m, generators_for(w), limits);
    r.states            = built.states_seen;
    if (built.status != Decision::yes) {
      r.decision = Decision::inconclusive;
      r.detail   = built.detail;
      return r;
    }
    auto const& fo    = *built.automaton;
    auto        count = count_paths(fo, fo.state_of(w), 2);
    if (count && *count == 1) {
      r.decision = Decision::yes;
      return r;
    }
    r.decision = Decision::no;
    r.witness  = second_word(fo, w);
    return r;
  }

  WordClassCount word_class_count(FiniteMonoid const& m, Word const& w, std::size_t cap, FreeObjectLimits const& limits) {
    WordClassCount r;
    auto           built = build_free_object(m, generators_for(w), limits);
    if (built.status != Decision::yes) {
      r.kind = WordClassCount::Kind::inconclusive;
      return r;
    }
    auto const& fo    = *built.automaton;
    auto        count = count_paths(fo, fo.state_of(w), cap);
    if (!count) {
      r.kind = WordClassCount::Kind::infinite;
    } else if (*count >= cap) {
      r.kind  = WordClassCount::Kind::at_least;
      r.count = cap;
    } else {
      r.count = *count;
    }
    return r;
  }

  std::string WordClassCount::to_string() const {
    switch (kind) {
      case Kind::finite:
        return std::to_string(count);
      case Kind::at_least:
        return ">= " + std::to_string(count);
      case Kind::infinite:
        return "infinite";
      case Kind::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  MembershipResult variety_contains(FiniteMonoid const& m, FiniteMonoid const& g, FreeObjectLimits const& limits) {
    MembershipResult r;
    auto             gens  = greedy_generators(g);
    auto             built = build_free_object(m, gens.size(), limits);
    r.states               = built.states_seen;
    if (built.status != Decision::yes) {
      r.decision = Decision::inconclusive;
      r.detail   = built.detail;
      return r;
    }
    auto const&                 fo = *built.automaton;
    std::vector<element_type>   value(fo.size(), g.identity());
    std::vector<bool>           seen(fo.size(), false);
    std::vector<std::uint32_t>  queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto s = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto t = fo.next(s, i);
        auto v = g.product(value[s], gens[i]);
        if (!seen[t]) {
          seen[t]  = true;
          value[t] = v;
          queue.push_back(t);
        } else if (value[t] != v) {
          r.decision = Decision::no;
          r.detail   = "words " + (fo.representative(s) * Word{fo.generators()[i]}).to_pretty_string() + " and "
                     + fo.representative(t).to_pretty_string() + " are equal in var(M) but not in G";
          return r;
        }
      }
    }
    r.detail = "generated by " + std::to_string(gens.size()) + " elements, " + std::to_string(fo.size()) + " states";
    return r;
  }

}  // namespace varcross
