#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/term.hpp"

namespace rlat {

  enum class Relation : std::uint8_t { eq, leq };

  struct Atom {
    Term     lhs;
    Term     rhs;
    Relation rel = Relation::eq;
  };

  enum class LawKind : std::uint8_t { identity, inequality, quasi_identity };

  std::string_view to_string(LawKind kind) noexcept;

  //! An identity, inequality or quasi-identity. The conclusion is a
  //! conjunction of atoms, so a chain  s = t = u  is stored as two atoms.
  struct Law {
    std::string              name;
    LawKind                  kind = LawKind::identity;
    std::vector<Atom>        premises;
    std::vector<Atom>        conclusions;
    std::vector<std::string> var_names;

    [[nodiscard]] std::size_t num_vars() const noexcept {
      return var_names.size();
    }
    [[nodiscard]] std::string to_string() const;
  };

  //! Grammar:  law := [atom {',' atom} '=>'] chain {'&&' chain}
  //!           chain := term rel term {rel term},  rel := '=' | '<=' | '>='
  //! Variables are numbered in order of first appearance, unless
  //! preferred_order lists them, in which case listed names come first.
  Law parse_law(std::string_view                text,
                std::string                     name            = {},
                std::vector<std::string> const& preferred_order = {});

  inline constexpr std::size_t default_var_cap = 4;
  inline constexpr std::size_t max_var_cap     = 6;

  struct LawResult {
    bool holds = true;
    //! Lexicographically least failing assignment, indexed by variable.
    std::vector<Elem> counterexample;
    std::size_t       failed_conclusion = 0;
    Elem              lhs_value         = 0;
    Elem              rhs_value         = 0;
    std::uint64_t     assignments       = 0;
  };

  //! Exhaustive scan of all size^k assignments in lexicographic order
  //! (variable 0 most significant). Throws VariableCapExceeded when the law
  //! has more than var_cap variables, or var_cap exceeds max_var_cap.
  LawResult check_law(FiniteResiduatedLattice const& alg,
                      Law const&                     law,
                      std::size_t                    var_cap = default_var_cap);

  std::string format_assignment(FiniteResiduatedLattice const& alg,
                                Law const&                     law,
                                std::vector<Elem> const&       assignment);

  //! The fixed catalog, keyed by stable names.
  std::vector<Law> const& law_catalog();

  //! Looks up a catalog name. Also accepts the parametric forms
  //! HAM(m,n) and HAM_ABS(m,n). Throws UnknownName.
  Law catalog_law(std::string_view name);

  //! (x&e)^m <= lambda_y(x)  &&  (x&e)^n <= rho_y(x)
  Law ham_law(std::size_t m, std::size_t n);
  //! |x|^m <= lambda_y(x)  &&  |x|^n <= rho_y(x)
  Law ham_abs_law(std::size_t m, std::size_t n);

}  // namespace rlat

namespace rlat {
  //! check_law on a catalog law, with the variable cap raised as needed.
  bool satisfies(FiniteResiduatedLattice const& alg, std::string_view law_name);
}  // namespace rlat
