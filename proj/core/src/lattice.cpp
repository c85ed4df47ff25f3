#include "rlat/lattice.hpp"

#include <algorithm>
#include <string>

#include "rlat/error.hpp"

namespace rlat {

  namespace {
    std::string pair_str(std::size_t a, std::size_t b) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    }

    // Least upper bound of a and b, or n if there is none.
    std::size_t least_upper(std::size_t                      n,
                            std::vector<std::uint8_t> const& leq,
                            std::size_t                      a,
                            std::size_t                      b,
                            bool                             upward) {
      auto le = [&](std::size_t x, std::size_t y) {
        return upward ? leq[x * n + y] != 0 : leq[y * n + x] != 0;
      };
      for (std::size_t c = 0; c < n; ++c) {
        if (!le(a, c) || !le(b, c)) {
          continue;
        }
        bool least = true;
        for (std::size_t d = 0; d < n && least; ++d) {
          if (le(a, d) && le(b, d) && !le(c, d)) {
            least = false;
          }
        }
        if (least) {
          return c;
        }
      }
      return n;
    }
  }  // namespace

  std::vector<std::uint8_t>
  order_closure(std::size_t n, std::vector<std::pair<Elem, Elem>> const& pairs) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      leq[i * n + i] = 1;
    }
    for (auto [lo, hi] : pairs) {
      leq[lo * n + hi] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i * n + k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (leq[k * n + j]) {
            leq[i * n + j] = 1;
          }
        }
      }
    }
    return leq;
  }

  FiniteLattice FiniteLattice::from_order(std::size_t               n,
                                          std::vector<std::uint8_t> leq) {
    if (n == 0) {
      fail(ErrorKind::NotALattice, "empty carrier");
    }
    if (leq.size() != n * n) {
      fail(ErrorKind::InconsistentTables, "order matrix has wrong size");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a * n + a]) {
        fail(ErrorKind::NotAPartialOrder,
             "not reflexive at " + std::to_string(a));
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq[a * n + b] && leq[b * n + a]) {
          fail(ErrorKind::NotAPartialOrder,
               "not antisymmetric at " + pair_str(a, b));
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) {
            fail(ErrorKind::NotAPartialOrder,
                 "not transitive at " + pair_str(a, b) + " -> "
                     + std::to_string(c));
          }
        }
      }
    }
    FiniteLattice L;
    L._n    = n;
    L._leq  = std::move(leq);
    L._join.assign(n * n, 0);
    L._meet.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        std::size_t j = least_upper(n, L._leq, a, b, true);
        std::size_t m = least_upper(n, L._leq, a, b, false);
        if (j == n) {
          fail(ErrorKind::NotALattice, "no join for " + pair_str(a, b));
        }
        if (m == n) {
          fail(ErrorKind::NotALattice, "no meet for " + pair_str(a, b));
        }
        L._join[a * n + b] = L._join[b * n + a] = static_cast<Elem>(j);
        L._meet[a * n + b] = L._meet[b * n + a] = static_cast<Elem>(m);
      }
    }
    Elem bot = 0, top = 0;
    for (std::size_t a = 0; a < n; ++a) {
      bot = L._meet[bot * n + a];
      top = L._join[top * n + a];
    }
    L._bottom = bot;
    L._top    = top;
    return L;
  }

  FiniteLattice
  FiniteLattice::from_covers(std::size_t                                n,
                             std::vector<std::pair<Elem, Elem>> const& covers) {
    return from_order(n, order_closure(n, covers));
  }

  bool FiniteLattice::covers(Elem lo, Elem hi) const {
    if (!lt(lo, hi)) {
      return false;
    }
    for (std::size_t z = 0; z < _n; ++z) {
      auto e = static_cast<Elem>(z);
      if (lt(lo, e) && lt(e, hi)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Elem> FiniteLattice::upper_covers(Elem a) const {
    std::vector<Elem> out;
    for (std::size_t z = 0; z < _n; ++z) {
      if (covers(a, static_cast<Elem>(z))) {
        out.push_back(static_cast<Elem>(z));
      }
    }
    return out;
  }

  std::vector<Elem> FiniteLattice::lower_covers(Elem a) const {
    std::vector<Elem> out;
    for (std::size_t z = 0; z < _n; ++z) {
      if (covers(static_cast<Elem>(z), a)) {
        out.push_back(static_cast<Elem>(z));
      }
    }
    return out;
  }

  std::vector<std::pair<Elem, Elem>> FiniteLattice::cover_pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        if (covers(static_cast<Elem>(a), static_cast<Elem>(b))) {
          out.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
        }
      }
    }
    return out;
  }

  bool FiniteLattice::is_chain() const {
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        if (!_leq[a * _n + b] && !_leq[b * _n + a]) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::array<Elem, 3>>
  FiniteLattice::distributivity_witness() const {
    for (std::size_t a = 0; a < _n; ++a) {
      for (std::size_t b = 0; b < _n; ++b) {
        for (std::size_t c = 0; c < _n; ++c) {
          auto x = static_cast<Elem>(a), y = static_cast<Elem>(b),
               z = static_cast<Elem>(c);
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) {
            return std::array<Elem, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool FiniteLattice::is_distributive() const {
    return !distributivity_witness().has_value();
  }

  std::optional<Elem> FiniteLattice::rel_pseudocomplement(Elem a,
                                                          Elem b) const {
    Elem cand = _bottom;
    for (std::size_t z = 0; z < _n; ++z) {
      if (leq(meet(a, static_cast<Elem>(z)), b)) {
        cand = join(cand, static_cast<Elem>(z));
      }
    }
    if (leq(meet(a, cand), b)) {
      return cand;
    }
    return std::nullopt;
  }

  bool FiniteLattice::is_meet_irreducible(Elem a) const {
    return a != _top && upper_covers(a).size() == 1;
  }

  bool FiniteLattice::is_join_irreducible(Elem a) const {
    return a != _bottom && lower_covers(a).size() == 1;
  }

  std::vector<Elem> FiniteLattice::meet_irreducibles() const {
    std::vector<Elem> out;
    for (std::size_t a = 0; a < _n; ++a) {
      if (is_meet_irreducible(static_cast<Elem>(a))) {
        out.push_back(static_cast<Elem>(a));
      }
    }
    return out;
  }

  std::vector<Elem> FiniteLattice::join_irreducibles() const {
    std::vector<Elem> out;
    for (std::size_t a = 0; a < _n; ++a) {
      if (is_join_irreducible(static_cast<Elem>(a))) {
        out.push_back(static_cast<Elem>(a));
      }
    }
    return out;
  }

}  // namespace rlat
