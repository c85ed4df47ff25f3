#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/lattice.hpp"

namespace rlat {

  struct SearchSpec {
    FiniteLattice lattice;
    bool          require_integral = false;
    //! Pins the unit; otherwise every element is tried (only the top when
    //! require_integral is set).
    std::optional<Elem> unit;
    //! Catalog names every result must satisfy.
    std::vector<std::string> laws;
    bool                     iso_reduce = true;
    //! Allows lattices larger than expansion_size_limit.
    bool        force = false;
    std::string name_prefix = "alg";
  };

  inline constexpr std::size_t expansion_size_limit = 8;
  inline constexpr std::size_t naive_size_limit     = 4;
  inline constexpr std::size_t lattice_size_limit   = 7;

  //! All residuated lattices on the given lattice. The multiplication is
  //! chosen on pairs of join-irreducibles, pruned by monotonicity, the unit
  //! and integrality bounds and associativity wherever the products are
  //! already determined, then extended by joins. Every result is validated;
  //! a rejected table is a search bug and throws CheckFailed. With
  //! iso_reduce the output is one canonical representative per class,
  //! sorted by canonical form. Throws SizeGuard.
  std::vector<FiniteResiduatedLattice> expansions(SearchSpec const& spec);

  //! Oracle: every table with the unit row and column fixed, filtered by
  //! validation. Lattices up to naive_size_limit only (SizeGuard).
  std::vector<FiniteResiduatedLattice> expansions_naive(SearchSpec const& spec);

  //! Lattices with exactly n elements up to isomorphism. Throws SizeGuard
  //! for n > lattice_size_limit.
  std::vector<FiniteLattice> lattices_of_size(std::size_t n);

  //! All lattices with 1..max_size elements.
  std::vector<FiniteLattice> all_lattices(std::size_t max_size);

  //! Lexicographically least encoding of (order, unit, mult) over all
  //! relabelings that keep elements with equal invariants together.
  std::string canonical_form(FiniteResiduatedLattice const& alg);

  //! The algebra relabelled so that its own encoding is the canonical form.
  FiniteResiduatedLattice canonical_relabeling(FiniteResiduatedLattice const& alg);

  bool are_isomorphic(FiniteResiduatedLattice const& a, FiniteResiduatedLattice const& b);

  //! Canonical encoding of a lattice.
  std::string canonical_form(FiniteLattice const& lat);

  struct CorpusOptions {
    std::size_t max_lattice_size     = 5;  //!< integral expansions
    std::size_t max_nonintegral_size = 4;  //!< chains, every unit
    bool        include_builtins     = true;
    std::size_t threads              = 1;
  };

  //! Builtins first, then the enumerated algebras, one per isomorphism
  //! class. Deterministic for any thread count.
  std::vector<FiniteResiduatedLattice> build_corpus(CorpusOptions const& options = {});

  //! FNV-1a over the names and canonical forms, as 16 hex digits.
  std::string corpus_digest(std::vector<FiniteResiduatedLattice> const& corpus);

}  // namespace rlat
