#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

  //! A partition of {0..n-1}. Block ids are numbered by first occurrence,
  //! so equal partitions have equal representations.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> block_of);

    static Partition discrete(std::size_t n);
    static Partition full(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _block.size();
    }
    [[nodiscard]] std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    [[nodiscard]] std::size_t block(Elem x) const {
      return _block[x];
    }
    [[nodiscard]] bool same(Elem x, Elem y) const {
      return _block[x] == _block[y];
    }
    [[nodiscard]] std::vector<std::size_t> const& block_ids() const noexcept {
      return _block;
    }
    //! Members of each block, in block order.
    [[nodiscard]] std::vector<std::vector<Elem>> blocks() const;
    //! Members of the block containing x.
    [[nodiscard]] Subset block_of(Elem x) const;

    //! Every block of *this lies inside a block of other.
    [[nodiscard]] bool refines(Partition const& other) const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend bool operator<(Partition const& a, Partition const& b) {
      return a._block < b._block;
    }

   private:
    std::vector<std::size_t> _block;
    std::size_t              _num_blocks = 0;
  };

  //! Smallest equivalence containing both (transitive closure of the union).
  Partition partition_join(Partition const& a, Partition const& b);
  //! Intersection of the two equivalences.
  Partition partition_meet(Partition const& a, Partition const& b);

  //! Compatible with join and meet.
  bool is_lattice_congruence(FiniteResiduatedLattice const& alg,
                             Partition const&               p);
  //! Compatible with join, meet, mult and both residuals.
  bool is_congruence(FiniteResiduatedLattice const& alg, Partition const& p);
  //! Compatible with mult only.
  bool is_mult_compatible(FiniteResiduatedLattice const& alg,
                          Partition const&               p);

  //! Least congruence (all five operations) identifying every pair given.
  Partition
  congruence_generated(FiniteResiduatedLattice const&          alg,
                       std::vector<std::pair<Elem, Elem>> const& pairs);

}  // namespace rlat
