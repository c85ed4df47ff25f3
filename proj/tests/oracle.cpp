#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace oracle {

  namespace {
    Elem E(std::size_t i) {
      return static_cast<Elem>(i);
    }

    bool in(Mask m, Elem x) {
      return (m >> x) & 1U;
    }

    bool closed(FiniteResiduatedLattice const& alg, Mask m) {
      std::size_t const n = alg.size();
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!in(m, E(a)) || !in(m, E(b))) {
            continue;
          }
          Elem x = E(a), y = E(b);
          for (Elem r : {alg.mult(x, y), alg.lres(x, y), alg.rres(x, y), alg.join(x, y),
                         alg.meet(x, y)}) {
            if (!in(m, r)) {
              return false;
            }
          }
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (in(m, E(a)) && in(m, E(c)) && alg.leq(E(a), E(b)) && alg.leq(E(b), E(c))
                && !in(m, E(b))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::vector<int> normalize(std::vector<int> ids) {
      std::map<int, int> map;
      for (auto& i : ids) {
        i = map.try_emplace(i, static_cast<int>(map.size())).first->second;
      }
      return ids;
    }

    std::vector<std::vector<int>> partitions(std::size_t n) {
      std::vector<std::vector<int>> out;
      std::vector<int>              cur;
      std::function<void(int)>      go = [&](int mx) {
        if (cur.size() == n) {
          out.push_back(cur);
          return;
        }
        for (int b = 0; b <= mx + 1; ++b) {
          cur.push_back(b);
          go(std::max(mx, b));
          cur.pop_back();
        }
      };
      go(-1);
      return out;
    }

    template <typename Ops>
    std::vector<std::vector<int>> compatible(FiniteResiduatedLattice const& alg, Ops ops) {
      std::size_t const             n = alg.size();
      std::vector<std::vector<int>> out;
      for (auto const& p : partitions(n)) {
        bool good = true;
        for (std::size_t a = 0; a < n && good; ++a) {
          for (std::size_t b = 0; b < n && good; ++b) {
            if (p[a] != p[b]) {
              continue;
            }
            for (std::size_t c = 0; c < n && good; ++c) {
              for (auto op : ops) {
                if (p[op(alg, E(a), E(c))] != p[op(alg, E(b), E(c))]
                    || p[op(alg, E(c), E(a))] != p[op(alg, E(c), E(b))]) {
                  good = false;
                  break;
                }
              }
            }
          }
        }
        if (good) {
          out.push_back(p);
        }
      }
      return out;
    }

    using Op = Elem (*)(FiniteResiduatedLattice const&, Elem, Elem);
    Elem op_join(FiniteResiduatedLattice const& a, Elem x, Elem y) {
      return a.join(x, y);
    }
    Elem op_meet(FiniteResiduatedLattice const& a, Elem x, Elem y) {
      return a.meet(x, y);
    }
    Elem op_mult(FiniteResiduatedLattice const& a, Elem x, Elem y) {
      return a.mult(x, y);
    }
    Elem op_lres(FiniteResiduatedLattice const& a, Elem x, Elem y) {
      return a.lres(x, y);
    }
    Elem op_rres(FiniteResiduatedLattice const& a, Elem x, Elem y) {
      return a.rres(x, y);
    }
  }  // namespace

  Mask to_mask(rlat::Subset s) {
    return s.bits();
  }

  Elem left_residual(FiniteResiduatedLattice const& alg, Elem x, Elem z) {
    std::vector<Elem> below;
    for (std::size_t y = 0; y < alg.size(); ++y) {
      if (alg.leq(alg.mult(x, E(y)), z)) {
        below.push_back(E(y));
      }
    }
    for (auto y : below) {
      if (std::all_of(below.begin(), below.end(), [&](Elem w) { return alg.leq(w, y); })) {
        return y;
      }
    }
    return alg.size();
  }

  Elem right_residual(FiniteResiduatedLattice const& alg, Elem z, Elem y) {
    std::vector<Elem> below;
    for (std::size_t x = 0; x < alg.size(); ++x) {
      if (alg.leq(alg.mult(E(x), y), z)) {
        below.push_back(E(x));
      }
    }
    for (auto x : below) {
      if (std::all_of(below.begin(), below.end(), [&](Elem w) { return alg.leq(w, x); })) {
        return x;
      }
    }
    return alg.size();
  }

  std::vector<Mask> convex_subalgebras(FiniteResiduatedLattice const& alg) {
    std::size_t const n = alg.size();
    Mask const        e = Mask(1) << alg.unit();
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask(1) << n); ++m) {
      if ((m & e) && closed(alg, m)) {
        out.push_back(m);
      }
    }
    return out;
  }

  Mask generated(FiniteResiduatedLattice const& alg, Mask s) {
    Mask best = (Mask(1) << alg.size()) - 1;
    for (auto m : convex_subalgebras(alg)) {
      if ((m & s) == s && std::popcount(m) < std::popcount(best)) {
        best = m;
      }
    }
    return best;
  }

  Mask pseudocomplement(FiniteResiduatedLattice const& alg, Mask s) {
    Mask const c = generated(alg, s), e = Mask(1) << alg.unit();
    Mask       best = e;
    for (auto m : convex_subalgebras(alg)) {
      if ((m & c) == e && std::popcount(m) > std::popcount(best)) {
        best = m;
      }
    }
    // the largest one must contain every other candidate
    for (auto m : convex_subalgebras(alg)) {
      if ((m & c) == e && (m & best) != m) {
        return 0;
      }
    }
    return best;
  }

  bool is_distributive(std::vector<Mask> const& family) {
    auto join = [&](Mask a, Mask b) {
      Mask best = 0;
      for (auto m : family) {
        if ((m & (a | b)) == (a | b) && (best == 0 || std::popcount(m) < std::popcount(best))) {
          best = m;
        }
      }
      return best;
    };
    for (auto a : family) {
      for (auto b : family) {
        for (auto c : family) {
          if ((a & join(b, c)) != join(a & b, a & c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_normal(FiniteResiduatedLattice const& alg, Mask h) {
    std::size_t const n = alg.size();
    Elem const        e = alg.unit();
    for (std::size_t xi = 0; xi < n; ++xi) {
      if (!in(h, E(xi))) {
        continue;
      }
      for (std::size_t ui = 0; ui < n; ++ui) {
        Elem x = E(xi), u = E(ui);
        Elem l  = alg.meet(alg.lres(u, alg.mult(x, u)), e);
        Elem r  = alg.meet(alg.rres(alg.mult(u, x), u), e);
        Elem ls = alg.meet(alg.lres(alg.lres(x, u), u), e);
        Elem rs = alg.meet(alg.rres(u, alg.rres(u, x)), e);
        if (!in(h, l) || !in(h, r) || !in(h, ls) || !in(h, rs)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<int>> congruences(FiniteResiduatedLattice const& alg) {
    return compatible(alg, std::vector<Op>{op_join, op_meet, op_mult, op_lres, op_rres});
  }

  std::vector<std::vector<int>> lattice_congruences(FiniteResiduatedLattice const& alg) {
    return compatible(alg, std::vector<Op>{op_join, op_meet});
  }

  bool semilinear(FiniteResiduatedLattice const& alg) {
    std::size_t const n = alg.size();
    std::vector<int>  meet(n, 0);
    for (auto const& p : congruences(alg)) {
      bool chain = true;
      for (std::size_t a = 0; a < n && chain; ++a) {
        for (std::size_t b = 0; b < n && chain; ++b) {
          int j = p[alg.join(E(a), E(b))];
          chain = j == p[a] || j == p[b];
        }
      }
      if (!chain) {
        continue;
      }
      // intersect: pair up block ids
      std::vector<int> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        next[i] = meet[i] * static_cast<int>(n) + p[i];
      }
      meet = normalize(next);
    }
    std::vector<int> id(n);
    for (std::size_t i = 0; i < n; ++i) {
      id[i] = static_cast<int>(i);
    }
    return meet == id;
  }

  bool hamiltonian(FiniteResiduatedLattice const& alg) {
    auto const all = convex_subalgebras(alg);
    return std::all_of(all.begin(), all.end(), [&](Mask h) { return is_normal(alg, h); });
  }

  std::vector<Mask> primes(std::vector<Mask> const& family) {
    Mask top = 0;
    for (auto m : family) {
      top |= m;
    }
    std::vector<Mask> out;
    for (auto p : family) {
      if (p == top) {
        continue;
      }
      bool irreducible = true;
      for (auto a : family) {
        for (auto b : family) {
          if ((a & b) == p && a != p && b != p) {
            irreducible = false;
          }
        }
      }
      if (irreducible) {
        out.push_back(p);
      }
    }
    return out;
  }

}  // namespace oracle
