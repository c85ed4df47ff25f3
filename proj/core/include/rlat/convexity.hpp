#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/lattice.hpp"
#include "rlat/partition.hpp"

namespace rlat {

  //! Throws NotECyclic unless x\e = e/x for all x; throws CarrierTooLarge
  //! for carriers that do not fit a Subset.
  void require_e_cyclic(FiniteResiduatedLattice const& alg);

  struct ConvexSubalgebra {
    Subset members;
    //! An element g with C[g] = members.
    Elem generator = 0;
  };

  //! C[S] = {x : h <= |x| for some h in the submonoid generated by |S|}.
  ConvexSubalgebra convex_closure(FiniteResiduatedLattice const& alg, Subset s);

  //! Least subset containing S and e closed under the five operations and
  //! under order-convexity. Needs no e-cyclicity; used as an oracle.
  Subset convex_closure_naive(FiniteResiduatedLattice const& alg, Subset s);

  struct PrincipalConv {
    Subset members;
    //! Least k with |a|^k = |a|^(k+1); then C[a] = {x : |a|^k <= |x|}.
    std::size_t exponent = 0;
  };

  PrincipalConv principal_conv(FiniteResiduatedLattice const& alg, Elem a);

  //! Contains e, closed under the five operations, order-convex.
  bool is_convex_subalgebra(FiniteResiduatedLattice const& alg, Subset s);

  //! Closed under mult and upward closed in absolute value. Throws
  //! EmptySet; checks agreement with is_convex_subalgebra.
  bool is_prefilter(FiniteResiduatedLattice const& alg, Subset p);

  //! The lattice of all convex subalgebras, nodes sorted by (cardinality,
  //! bitmask). Node 0 is {e} and the last node is the whole algebra.
  class ConvLattice {
   public:
    [[nodiscard]] std::size_t size() const noexcept {
      return _nodes.size();
    }
    [[nodiscard]] std::vector<Subset> const& nodes() const noexcept {
      return _nodes;
    }
    [[nodiscard]] Subset members(std::size_t i) const {
      return _nodes[i];
    }
    [[nodiscard]] Elem generator(std::size_t i) const {
      return _generators[i];
    }
    [[nodiscard]] bool leq(std::size_t i, std::size_t j) const {
      return _nodes[i].is_subset_of(_nodes[j]);
    }
    [[nodiscard]] std::size_t join(std::size_t i, std::size_t j) const {
      return _lat.join(static_cast<Elem>(i), static_cast<Elem>(j));
    }
    [[nodiscard]] std::size_t meet(std::size_t i, std::size_t j) const {
      return _lat.meet(static_cast<Elem>(i), static_cast<Elem>(j));
    }
    [[nodiscard]] std::size_t bottom() const noexcept {
      return 0;
    }
    [[nodiscard]] std::size_t top() const noexcept {
      return _nodes.size() - 1;
    }
    [[nodiscard]] std::optional<std::size_t> find(Subset s) const;
    //! Throws CheckFailed if s is not a node.
    [[nodiscard]] std::size_t index_of(Subset s) const;
    //! The abstract lattice (node indices as elements).
    [[nodiscard]] FiniteLattice const& lattice() const noexcept {
      return _lat;
    }

   private:
    friend ConvLattice all_convex_subalgebras(FiniteResiduatedLattice const&);

    std::vector<Subset> _nodes;
    std::vector<Elem>   _generators;
    FiniteLattice       _lat;
  };

  //! Starts from the principal C[a] and closes under joins
  //! C[a] v C[b] = C[|a||b|]. Throws NotECyclic, or DistributivityViolation
  //! (a bug) if the result is not a distributive lattice.
  ConvLattice all_convex_subalgebras(FiniteResiduatedLattice const& alg);

  struct ConvMeetJoin {
    Subset meet;  //!< C[a] & C[b] = C[|a| | |b|]
    Subset join;  //!< C[a] v C[b] = C[|a| & |b|] = C[|a||b|]
  };

  //! Computes all five subalgebras and checks the two equalities.
  ConvMeetJoin conv_meet_join_check(FiniteResiduatedLattice const& alg,
                                    Elem                           a,
                                    Elem                           b);

  //! a ~ b iff (a\b) & (b\a) & e lies in H. Checks that this is a lattice
  //! congruence whose class of e is H.
  Partition theta_of(FiniteResiduatedLattice const& alg, Subset h);

  struct ThetaEmbedding {
    bool injective        = true;
    bool order_preserving = true;
    bool order_reflecting = true;
    bool joins_preserved  = true;
    bool meets_preserved  = true;

    [[nodiscard]] bool ok() const {
      return injective && order_preserving && order_reflecting
             && joins_preserved && meets_preserved;
    }
  };

  //! Compares H -> Theta_H against the lattice-reduct congruences.
  ThetaEmbedding theta_embedding(FiniteResiduatedLattice const& alg,
                                 ConvLattice const&             lat);

}  // namespace rlat
