#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/convexity.hpp"
#include "rlat/law.hpp"
#include "rlat/partition.hpp"

namespace rlat {

  struct NormalityCheck {
    bool normal = true;
    //! First (x, u) with x in H and a conjugate of x by u outside H,
    //! scanning x, then u, and trying the left conjugation before the right.
    std::optional<std::pair<Elem, Elem>> witness;
    std::optional<Conjugation>           witness_kind;
  };

  //! Decides normality by the definition, by the residual criterion
  //! (a\b)&e in H iff (b/a)&e in H, and by the starred conjugations.
  //! Throws CheckFailed if the three disagree or H is not convex.
  NormalityCheck is_normal(FiniteResiduatedLattice const& alg, Subset h);

  enum class ConjugationFamily : std::uint8_t { plain, star };

  //! NC[S]: closes |S| under single conjugations of the family, takes the
  //! convex closure and repeats until normal. The result is checked
  //! against the other family.
  Subset normal_closure(FiniteResiduatedLattice const& alg,
                        Subset                         s,
                        ConjugationFamily family = ConjugationFamily::plain);

  //! Indices of the normal nodes; checks that they are closed under the
  //! joins of the convex subalgebra lattice.
  std::vector<std::size_t> all_normal(FiniteResiduatedLattice const& alg,
                                      ConvLattice const&             lat);

  struct CongruenceOracle {
    std::vector<Partition> congruences;  //!< sorted
    //! True when every partition of the carrier was tested; false when the
    //! list was built from principal congruences and their joins.
    bool exhaustive = false;
  };

  inline constexpr std::size_t congruence_oracle_limit = 8;

  //! All congruences of the algebra, computed without reference to
  //! convex subalgebras.
  CongruenceOracle congruences_oracle(FiniteResiduatedLattice const& alg);

  //! Checks that H -> Theta_H and Theta -> [e] are mutually inverse between
  //! the normal nodes and the oracle's congruences. Returns the count.
  std::size_t check_normal_congruence_bijection(FiniteResiduatedLattice const& alg,
                                                ConvLattice const&             lat);

  //! Theta_H for any subset H (no checks).
  Partition theta_partition(FiniteResiduatedLattice const& alg, Subset h);

  struct Quotient {
    FiniteResiduatedLattice algebra;
    std::vector<Elem>       projection;
  };

  //! L/H with blocks represented by their least element, labelled "[a]".
  //! Throws NotNormal. Checks that the tables do not depend on the
  //! representatives and that the projection is a homomorphism.
  Quotient quotient(FiniteResiduatedLattice const& alg, Subset h);

  struct HamiltonianDegree {
    std::optional<std::size_t> m;  //!< least m with (x&e)^m <= lam_y(x)
    std::optional<std::size_t> n;  //!< least n with (x&e)^n <= rho_y(x)
    std::optional<std::size_t> abs_m;
    std::optional<std::size_t> abs_n;
    std::optional<std::size_t> star_m;
    std::optional<std::size_t> star_n;
    bool                       all_nodes_normal = false;

    [[nodiscard]] bool hamiltonian() const {
      return m && n;
    }
    //! The starred conjugations give the same verdict.
    [[nodiscard]] bool star_agrees() const {
      return hamiltonian() == (star_m && star_n);
    }
  };

  //! Exponents are searched in 1..size. Throws CheckFailed unless the
  //! plain verdict, the |x| verdict and "every node normal" coincide.
  HamiltonianDegree hamiltonian_degree(FiniteResiduatedLattice const& alg);

  enum class SemilinearRoute : std::uint8_t { identity, spectral, bruteforce, all };

  std::string_view     to_string(SemilinearRoute r) noexcept;
  SemilinearRoute      semilinear_route(std::string_view name);

  struct SemilinearResult {
    bool semilinear = false;
    bool lp         = false;
    bool rp         = false;
    //! Verdict per route or law that was evaluated, e.g. "SEM1",
    //! "quasi", "spectral", "bruteforce".
    std::map<std::string, bool> verdicts;
    //! Failing assignment of SEM1, when it fails.
    std::optional<LawResult> counterexample;
    //! Normal nodes with chain quotients intersecting to {e}.
    std::vector<std::size_t> decomposition;
    std::vector<std::size_t> non_normal_minimal_primes;
    std::vector<std::string> notices;
  };

  //! Throws CheckFailed when routes that must agree do not.
  SemilinearResult is_semilinear(FiniteResiduatedLattice const& alg,
                                 SemilinearRoute route = SemilinearRoute::all);

  //! Scans the five-variable implicational identity for integral algebras
  //! and checks it against the identity route. Throws NotIntegral.
  bool kuhr_integral_check(FiniteResiduatedLattice const& alg);

  //! lam*_{xy}(x) <= lam_y(x), lam_{x\y}(x) <= lam*_y(x) and the mirrors.
  //! Returns a description of the first failure.
  std::optional<std::string>
  conjugation_interleaving_violation(FiniteResiduatedLattice const& alg);

}  // namespace rlat
