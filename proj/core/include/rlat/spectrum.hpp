#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/convexity.hpp"
#include "rlat/lattice.hpp"

namespace rlat {

  //! X^perp = {a : |a| | |x| = e for all x in X}. Checks X^perp = C[X]^perp.
  Subset polar(FiniteResiduatedLattice const& alg, Subset x);

  //! X -> Y, computed element-wise and as max{Z : X & Z <= Y} over the
  //! lattice; the two must agree. X and Y must be nodes.
  Subset rel_pseudocomplement(FiniteResiduatedLattice const& alg,
                              ConvLattice const&             lat,
                              Subset                         x,
                              Subset                         y);

  //! Meet-irreducible nodes, optionally with the top node.
  std::vector<std::size_t> prime_nodes(ConvLattice const& lat,
                                       bool               include_top = false);

  //! Inclusion-minimal primes; checks that they intersect to {e}.
  std::vector<std::size_t> minimal_prime_nodes(FiniteResiduatedLattice const& alg,
                                               ConvLattice const&             lat);

  //! Nodes maximal with respect to not containing a.
  std::vector<std::size_t> value_nodes(ConvLattice const& lat, Elem a);

  struct SpectrumAnnotation {
    std::vector<bool> is_prime;
    std::vector<bool> is_minimal_prime;
    std::vector<bool> is_polar;
    std::vector<bool> is_double_polar_fixed;
    //! values_of[a] lists the values of the element a.
    std::vector<std::vector<std::size_t>> values_of;
  };

  SpectrumAnnotation annotate_spectrum(FiniteResiduatedLattice const& alg,
                                       ConvLattice const&             lat);

  struct PrimeConditions {
    bool meet_irreducible = false;  //!< X & Y <= H implies X <= H or Y <= H
    bool abs_join_in      = false;  //!< |a| | |b| in H implies a or b in H
    bool abs_join_unit    = false;  //!< |a| | |b| = e implies a or b in H
    bool residual_in      = false;  //!< (a\b)&e or (b\a)&e in H
    bool residual_in_right = false;  //!< (a/b)&e or (b/a)&e in H
    bool chain_above      = false;  //!< the nodes containing H form a chain
    bool lp               = false;
    bool rp               = false;

    //! (1), (2), (3) and (5) agree, and agree with (4) under LP and with
    //! the mirror of (4) under RP.
    [[nodiscard]] bool consistent() const;
  };

  //! Evaluates the five conditions independently. Throws CheckFailed when
  //! a prelinearity law holds and the conditions disagree.
  PrimeConditions prime_characterization_check(FiniteResiduatedLattice const& alg,
                                               ConvLattice const&             lat,
                                               Subset                         h);

  struct MonteiroResult {
    bool distributive    = false;
    bool witnesses_found = false;
    //! First pair (a, b) with no u, v such that u & v = 0 and
    //! u | b = a | b = a | v.
    std::optional<std::pair<Elem, Elem>> failing_pair;

    [[nodiscard]] bool holds() const {
      return distributive && witnesses_found;
    }
  };

  //! Relative normality of a finite lattice via witness search. A
  //! non-distributive lattice never qualifies.
  MonteiroResult monteiro_check(FiniteLattice const& lat);

  //! Prime ideals (principal down-sets of meet-prime elements) form a root
  //! system: the prime ideals above any prime ideal form a chain.
  bool prime_ideals_form_root_system(FiniteLattice const& lat);

  struct RelativeNormality {
    bool monteiro    = false;
    bool root_system = false;
    bool prelinear   = false;
  };

  //! Runs both tests on the convex subalgebra lattice and checks they
  //! agree, and that prelinearity implies relative normality.
  RelativeNormality relatively_normal(FiniteResiduatedLattice const& alg,
                                      ConvLattice const&             lat);

  struct MinimalPrimeConditions {
    bool minimal            = false;  //!< no smaller prime
    bool polar_not_inside   = false;  //!< x in P implies x^perp not inside P
    bool union_of_polars    = false;  //!< P = U{x^perp : x not in P}
    bool abstract_minimal   = false;  //!< minimal meet-irreducible in the lattice
    bool abstract_pseudo    = false;  //!< c <= p implies -c not <= p
    bool abstract_join      = false;  //!< p = V{-c : c not <= p}

    [[nodiscard]] bool consistent() const {
      return minimal == polar_not_inside && minimal == union_of_polars
             && minimal == abstract_minimal && minimal == abstract_pseudo
             && minimal == abstract_join;
    }
  };

  //! Throws NotPrime if P is not a prime node; CheckFailed on disagreement.
  MinimalPrimeConditions
  minimal_prime_characterization(FiniteResiduatedLattice const& alg,
                                 ConvLattice const&             lat,
                                 Subset                         p);

  struct DoublePolarBoolean {
    //! Nodes fixed by H -> H^perp^perp, in canonical order.
    std::vector<std::size_t> nodes;
    bool                     boolean = false;
  };

  DoublePolarBoolean double_polar_boolean(FiniteResiduatedLattice const& alg,
                                          ConvLattice const&             lat);

  //! Intersection of the minimal primes not containing H (the whole
  //! algebra for an empty family); checked against H^perp.
  Subset polar_prime_meet(FiniteResiduatedLattice const& alg,
                          ConvLattice const&             lat,
                          Subset                         h);

  struct IdealCorrespondence {
    //! Maximal lattice ideals of the negative cone, each paired with the
    //! node U{a^perp : a in I}.
    std::vector<std::pair<Subset, std::size_t>> maximal_ideals;
    std::vector<Subset>                         minimal_prime_filters;
    bool complements_match  = false;  //!< I maximal iff complement is a minimal prime filter
    bool unions_are_minimal = false;  //!< each union is a minimal prime with the right negative part
    bool prime_equivalence  = false;  //!< the three conditions agree on every prime node

    [[nodiscard]] bool ok() const {
      return complements_match && unions_are_minimal && prime_equivalence;
    }
  };

  //! Brute force over subsets of the negative cone. Throws SizeGuard if it
  //! has more than 20 elements, unless force is set.
  IdealCorrespondence
  negcone_ideal_correspondence(FiniteResiduatedLattice const& alg,
                               ConvLattice const&             lat,
                               bool                           force = false);

  //! In a finite distributive lattice: for each meet-irreducible p and all
  //! a, b with a -> b <= p there is a meet-irreducible q with a not <= q and
  //! b <= q <= p. Returns false on the first failure.
  bool separating_meet_irreducibles(FiniteLattice const& lat);

  //! For each meet-irreducible p of a finite distributive lattice, the
  //! three characterisations of minimality agree.
  bool minimal_meet_irreducibles_agree(FiniteLattice const& lat);

}  // namespace rlat
