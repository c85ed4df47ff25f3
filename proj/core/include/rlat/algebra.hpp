#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/error.hpp"
#include "rlat/lattice.hpp"
#include "rlat/subset.hpp"

namespace rlat {

  //! Unvalidated tables describing a finite residuated lattice.
  //!
  //! All tables are row-major n*n. The residual tables follow the
  //! residuation law  x*y <= z  iff  y <= x\z  iff  x <= z/y, so
  //! lres[x*n+z] is x\z and rres[z*n+y] is z/y.
  struct RawAlgebra {
    std::string                      name;
    std::vector<std::string>         labels;
    std::vector<std::uint8_t>        leq;
    std::vector<Elem>                mult;
    std::optional<std::vector<Elem>> lres;
    std::optional<std::vector<Elem>> rres;
    Elem                             unit = 0;
    std::optional<Elem>              f_const;
  };

  struct AlgebraFlags {
    bool e_cyclic    = false;
    bool integral    = false;
    bool commutative = false;
    bool chain       = false;
    //! f is present and equal to the bottom element.
    bool bounded = false;

    friend bool operator==(AlgebraFlags const&, AlgebraFlags const&) = default;
  };

  class FiniteResiduatedLattice;

  //! Validates raw tables, deriving missing residuals. Throws Error.
  FiniteResiduatedLattice validate_algebra(RawAlgebra raw);

  //! As validate_algebra, but reports failure through the return value.
  std::optional<FiniteResiduatedLattice>
  try_validate_algebra(RawAlgebra raw, std::optional<Error>* error = nullptr);

  //! An immutable, validated finite residuated lattice. Elements are the
  //! indices 0..size()-1 and every operation is a table lookup.
  class FiniteResiduatedLattice {
   public:
    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::string const& label(Elem x) const {
      return _labels[x];
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::optional<Elem> find_label(std::string_view s) const;
    //! Like find_label but throws UnknownLabel.
    [[nodiscard]] Elem element(std::string_view s) const;

    [[nodiscard]] FiniteLattice const& lattice() const noexcept {
      return _lat;
    }
    [[nodiscard]] bool leq(Elem x, Elem y) const {
      return _lat.leq(x, y);
    }
    [[nodiscard]] bool lt(Elem x, Elem y) const {
      return _lat.lt(x, y);
    }
    [[nodiscard]] Elem join(Elem x, Elem y) const {
      return _lat.join(x, y);
    }
    [[nodiscard]] Elem meet(Elem x, Elem y) const {
      return _lat.meet(x, y);
    }
    [[nodiscard]] Elem mult(Elem x, Elem y) const {
      return _mult[x * _n + y];
    }
    //! x\z
    [[nodiscard]] Elem lres(Elem x, Elem z) const {
      return _lres[x * _n + z];
    }
    //! z/y
    [[nodiscard]] Elem rres(Elem z, Elem y) const {
      return _rres[z * _n + y];
    }
    [[nodiscard]] Elem unit() const noexcept {
      return _unit;
    }
    [[nodiscard]] std::optional<Elem> f_const() const noexcept {
      return _f;
    }
    [[nodiscard]] Elem bottom() const noexcept {
      return _lat.bottom();
    }
    [[nodiscard]] Elem top() const noexcept {
      return _lat.top();
    }
    [[nodiscard]] AlgebraFlags const& flags() const noexcept {
      return _flags;
    }

    //! |x| = x & (e/x) & e
    [[nodiscard]] Elem abs(Elem x) const {
      return meet(meet(x, rres(_unit, x)), _unit);
    }
    //! x^k with x^0 = e.
    [[nodiscard]] Elem power(Elem x, std::size_t k) const;

    //! The whole carrier as a subset (requires size() <= 64).
    [[nodiscard]] Subset carrier() const {
      return Subset::full(_n);
    }
    //! {x : x <= e} (requires size() <= 64).
    [[nodiscard]] Subset negative_elements() const;

    [[nodiscard]] std::string format(Subset s) const;

    [[nodiscard]] RawAlgebra raw() const;

    [[nodiscard]] FiniteResiduatedLattice renamed(std::string name) const {
      FiniteResiduatedLattice copy = *this;
      copy._name                   = std::move(name);
      return copy;
    }

    //! Equal tables, labels aside.
    [[nodiscard]] bool same_tables(FiniteResiduatedLattice const& other) const;

   private:
    friend std::optional<FiniteResiduatedLattice>
    try_validate_algebra(RawAlgebra, std::optional<Error>*);

    std::size_t              _n = 0;
    std::string              _name;
    std::vector<std::string> _labels;
    FiniteLattice            _lat;
    std::vector<Elem>        _mult;
    std::vector<Elem>        _lres;
    std::vector<Elem>        _rres;
    Elem                     _unit = 0;
    std::optional<Elem>      _f;
    AlgebraFlags             _flags;
  };

  struct ResidualTables {
    std::vector<Elem> lres;
    std::vector<Elem> rres;
  };

  //! x\z = max{y : x*y <= z} and z/y = max{x : x*y <= z}, computed by table
  //! scan. Throws NoMaximum when a candidate set has no greatest element.
  ResidualTables derive_residuals(FiniteLattice const&     lat,
                                  std::vector<Elem> const& mult);

  enum class Conjugation : std::uint8_t { left, right, left_star, right_star };

  std::string_view to_string(Conjugation kind) noexcept;

  //! left:       (u\(x*u)) & e
  //! right:      ((u*x)/u) & e
  //! left_star:  ((x\u)\u) & e
  //! right_star: (u/(u/x)) & e
  Elem conjugate(FiniteResiduatedLattice const& alg,
                 Conjugation                    kind,
                 Elem                           u,
                 Elem                           x);

  inline Elem absolute_value(FiniteResiduatedLattice const& alg, Elem x) {
    return alg.abs(x);
  }

  //! {x : x <= e} with residuals clipped by & e.
  FiniteResiduatedLattice negative_cone(FiniteResiduatedLattice const& alg);

  //! Componentwise product; the pair (a, b) has index a * |B| + b.
  FiniteResiduatedLattice direct_product(FiniteResiduatedLattice const& a,
                                         FiniteResiduatedLattice const& b);

  //! Same lattice, multiplication x o y = y*x; the residuals swap roles.
  FiniteResiduatedLattice opposite(FiniteResiduatedLattice const& alg);

  //! Relabels so that old element x becomes perm[x].
  FiniteResiduatedLattice relabel(FiniteResiduatedLattice const& alg,
                                  std::vector<Elem> const&       perm);

  //! The general laws every residuated lattice satisfies (products and
  //! residuals of residuals, both sides). Returns a description of the
  //! first violation, if any.
  std::optional<std::string>
  derived_law_violation(FiniteResiduatedLattice const& alg);

}  // namespace rlat
