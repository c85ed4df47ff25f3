#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rlat/subset.hpp"

namespace rlat {

  //! A finite lattice given by its order matrix, with precomputed join and
  //! meet tables.
  class FiniteLattice {
   public:
    FiniteLattice() = default;

    //! Builds the lattice from a row-major order matrix (leq[a*n+b] is a <= b).
    //! Throws NotAPartialOrder or NotALattice.
    static FiniteLattice from_order(std::size_t n,
                                    std::vector<std::uint8_t> leq);

    //! Reflexive-transitive closure of the given pairs (lo, hi), then
    //! from_order.
    static FiniteLattice
    from_covers(std::size_t n, std::vector<std::pair<Elem, Elem>> const& covers);

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] bool leq(Elem a, Elem b) const {
      return _leq[a * _n + b] != 0;
    }
    [[nodiscard]] bool lt(Elem a, Elem b) const {
      return a != b && leq(a, b);
    }
    [[nodiscard]] Elem join(Elem a, Elem b) const {
      return _join[a * _n + b];
    }
    [[nodiscard]] Elem meet(Elem a, Elem b) const {
      return _meet[a * _n + b];
    }
    [[nodiscard]] Elem bottom() const noexcept {
      return _bottom;
    }
    [[nodiscard]] Elem top() const noexcept {
      return _top;
    }
    [[nodiscard]] std::vector<std::uint8_t> const& order_matrix() const {
      return _leq;
    }

    [[nodiscard]] bool covers(Elem lo, Elem hi) const;
    [[nodiscard]] std::vector<Elem> upper_covers(Elem a) const;
    [[nodiscard]] std::vector<Elem> lower_covers(Elem a) const;
    //! All cover pairs (lo, hi), sorted.
    [[nodiscard]] std::vector<std::pair<Elem, Elem>> cover_pairs() const;

    [[nodiscard]] bool is_chain() const;
    [[nodiscard]] bool is_distributive() const;
    //! A triple (a, b, c) with a & (b | c) != (a & b) | (a & c), if any.
    [[nodiscard]] std::optional<std::array<Elem, 3>>
    distributivity_witness() const;

    //! max{z : a & z <= b}, if the maximum exists.
    [[nodiscard]] std::optional<Elem> rel_pseudocomplement(Elem a,
                                                           Elem b) const;
    [[nodiscard]] std::optional<Elem> pseudocomplement(Elem a) const {
      return rel_pseudocomplement(a, _bottom);
    }

    //! Not the top and has exactly one upper cover.
    [[nodiscard]] bool is_meet_irreducible(Elem a) const;
    //! Not the bottom and has exactly one lower cover.
    [[nodiscard]] bool is_join_irreducible(Elem a) const;
    [[nodiscard]] std::vector<Elem> meet_irreducibles() const;
    [[nodiscard]] std::vector<Elem> join_irreducibles() const;

    //! Join of a set of elements; the empty join is the bottom.
    template <typename Range>
    [[nodiscard]] Elem join_all(Range const& r) const {
      Elem acc = _bottom;
      for (auto x : r) {
        acc = join(acc, static_cast<Elem>(x));
      }
      return acc;
    }

    friend bool operator==(FiniteLattice const& a, FiniteLattice const& b) {
      return a._n == b._n && a._leq == b._leq;
    }

   private:
    std::size_t _n = 0;
    std::vector<std::uint8_t> _leq;
    std::vector<Elem> _join;
    std::vector<Elem> _meet;
    Elem _bottom = 0;
    Elem _top = 0;
  };

  //! Reflexive-transitive closure of a relation given as pairs (lo, hi).
  std::vector<std::uint8_t>
  order_closure(std::size_t n, std::vector<std::pair<Elem, Elem>> const& pairs);

}  // namespace rlat
