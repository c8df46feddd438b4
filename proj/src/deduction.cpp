#include "varcross/deduction.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace varcross {

  std::string DeductionWitness::to_string() const {
    std::string out = "a=\"" + prefix.to_string() + "\" b=\"" + suffix.to_string() + "\"";
    if (!phi.assignment().empty()) {
      out += " phi: " + phi.to_string();
    }
    if (swapped) {
      out += " (reversed)";
    }
    return out;
  }

  bool check_witness(Word const& u, Word const& v, Identity const& ax, DeductionWitness const& w) {
    Word const& p = w.swapped ? ax.rhs : ax.lhs;
    Word const& q = w.swapped ? ax.lhs : ax.rhs;
    return w.prefix * apply(w.phi, p) * w.suffix == u && w.prefix * apply(w.phi, q) * w.suffix == v;
  }

  namespace {

    struct BudgetExceeded {};

    // Joint match of two patterns against two targets with shared bindings.
    class Matcher {
     public:
      Matcher(Word const& p, Word const& q, std::size_t& nodes, std::size_t budget)
          : _nodes(nodes), _budget(budget) {
        for (auto const* w : {&p, &q}) {
          std::vector<std::size_t> pat;
          for (auto v : *w) {
            auto it = std::find(_vars.begin(), _vars.end(), v);
            if (it == _vars.end()) {
              _vars.push_back(v);
              it = _vars.end() - 1;
            }
            pat.push_back(static_cast<std::size_t>(it - _vars.begin()));
          }
          _pat.push_back(std::move(pat));
        }
      }

      bool match(std::span<Variable const> core_u, std::span<Variable const> core_v) {
        _tgt[0] = core_u;
        _tgt[1] = core_v;
        _bound.assign(_vars.size(), false);
        _start.assign(_vars.size(), 0);
        _len.assign(_vars.size(), 0);
        _side.assign(_vars.size(), 0);
        return go(0, 0, 0);
      }

      WordSubstitution substitution() const {
        WordSubstitution phi;
        for (std::size_t i = 0; i < _vars.size(); ++i) {
          auto t = _tgt[_side[i]].subspan(_start[i], _len[i]);
          phi.assign(_vars[i], Word(t.begin(), t.end()));
        }
        return phi;
      }

     private:
      std::size_t min_remaining(int side, std::size_t pi) const {
        std::size_t total = 0;
        for (std::size_t k = pi; k < _pat[side].size(); ++k) {
          auto id = _pat[side][k];
          if (_bound[id]) {
            total += _len[id];
          }
        }
        return total;
      }

      bool go(int side, std::size_t pi, std::size_t ti) {
        if (++_nodes > _budget) {
          throw BudgetExceeded{};
        }
        auto const& pat = _pat[side];
        auto        tgt = _tgt[side];
        if (pi == pat.size()) {
          if (ti != tgt.size()) {
            return false;
          }
          return side == 1 || go(1, 0, 0);
        }
        std::size_t need = min_remaining(side, pi);
        if (ti + need > tgt.size()) {
          return false;
        }
        auto id = pat[pi];
        if (_bound[id]) {
          auto img = _tgt[_side[id]].subspan(_start[id], _len[id]);
          if (!std::equal(img.begin(), img.end(), tgt.begin() + static_cast<std::ptrdiff_t>(ti))) {
            return false;
          }
          return go(side, pi + 1, ti + _len[id]);
        }
        std::size_t max_len = tgt.size() - ti - need;
        _bound[id]          = true;
        _side[id]           = side;
        _start[id]          = ti;
        for (std::size_t len = 1; len <= max_len + 1; ++len) {
          std::size_t l = len <= max_len ? len : 0;
          _len[id]      = l;
          if (go(side, pi + 1, ti + l)) {
            return true;
          }
        }
        _bound[id] = false;
        return false;
      }

      std::vector<Variable>                 _vars;
      std::vector<std::vector<std::size_t>> _pat;
      std::span<Variable const>             _tgt[2];
      std::vector<bool>                     _bound;
      std::vector<std::size_t>              _start, _len;
      std::vector<int>                      _side;
      std::size_t&                          _nodes;
      std::size_t                           _budget;
    };

  }  // namespace

  DeductionResult directly_deducible(Word const& u, Word const& v, Identity const& ax, std::size_t budget) {
    DeductionResult result;
    std::size_t     lcp = 0;
    while (lcp < u.size() && lcp < v.size() && u[lcp] == v[lcp]) {
      ++lcp;
    }
    std::size_t lcs = 0;
    while (lcs < u.size() && lcs < v.size() && u[u.size() - 1 - lcs] == v[v.size() - 1 - lcs]) {
      ++lcs;
    }
    std::size_t const shorter = std::min(u.size(), v.size());
    Matcher           forward(ax.lhs, ax.rhs, result.nodes, budget);
    Matcher           backward(ax.rhs, ax.lhs, result.nodes, budget);
    auto              letters_u = u.letters();
    auto              letters_v = v.letters();
    try {
      for (std::size_t total = 0; total <= shorter; ++total) {
        for (std::size_t i = 0; i <= total; ++i) {
          std::size_t j = total - i;
          if (i > lcp || j > lcs) {
            continue;
          }
          auto core_u = letters_u.subspan(i, u.size() - total);
          auto core_v = letters_v.subspan(i, v.size() - total);
          for (int orient = 0; orient < 2; ++orient) {
            Matcher& m = orient == 0 ? forward : backward;
            if (m.match(core_u, core_v)) {
              DeductionWitness w;
              w.prefix  = u.subword(0, i);
              w.suffix  = u.subword(u.size() - j, j);
              w.phi     = m.substitution();
              w.swapped = orient == 1;
              if (check_witness(u, v, ax, w)) {
                result.decision = Decision::yes;
                result.witness  = std::move(w);
                return result;
              }
            }
          }
        }
      }
    } catch (BudgetExceeded const&) {
      result.decision = Decision::inconclusive;
      return result;
    }
    result.decision = Decision::no;
    return result;
  }

}  // namespace varcross
