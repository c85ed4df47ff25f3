#pragma once

#include <optional>
#include <string>

#include "rlat/algebra.hpp"

namespace rlat {

  struct ClassReport {
    bool is_gbl      = false;
    bool is_gmv      = false;
    bool is_lgroup   = false;
    bool is_integral = false;
    //! G(L): elements with (e/a)a = e = a(a\e).
    Subset invertibles;
    //! I(L): elements with a\e = e = e/a.
    Subset integrals;
    //! Set when the algebra is GBL.
    std::optional<bool> decomposition;
  };

  //! Checks that the identity and quasi-identity forms of GBL and GMV give
  //! the same verdicts, and that only the trivial algebra is an l-group.
  ClassReport classify(FiniteResiduatedLattice const& alg);

  //! G(L) and I(L) are subalgebras meeting in {e}, (g, h) -> gh is an
  //! isomorphism from G(L) x I(L), and G(L) = {e}. Throws NotGBL.
  bool gbl_decomposition_check(FiniteResiduatedLattice const& alg);

  struct MartinezConditions {
    bool cond_i  = false;  //!< C[a] v a^perp = L for every a
    bool cond_ii = false;  //!< proper primes form an antichain
  };

  //! Throws CheckFailed if the two conditions disagree.
  MartinezConditions martinez_conditions(FiniteResiduatedLattice const& alg);

}  // namespace rlat
