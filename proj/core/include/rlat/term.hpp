#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

  enum class Op : std::uint8_t { var, unit, f, mult, lres, rres, join, meet };

  //! A term over x*y, x\y, x/y, x|y, x&y and the constants e and f.
  //!
  //! Stored as a flat postorder node array: children always precede their
  //! parent and the root is the last node.
  class Term {
   public:
    struct Node {
      Op            op;
      std::uint32_t lhs = 0;
      std::uint32_t rhs = 0;
      std::uint32_t var = 0;

      friend bool operator==(Node const&, Node const&) = default;
    };

    static Term variable(std::size_t index);
    static Term unit();
    static Term f();
    static Term binary(Op op, Term const& lhs, Term const& rhs);

    //! One more than the largest variable index, 0 for closed terms.
    [[nodiscard]] std::size_t num_vars() const;
    [[nodiscard]] bool        uses_f() const;
    [[nodiscard]] Op          root_op() const {
      return _nodes.back().op;
    }
    [[nodiscard]] std::vector<Node> const& nodes() const noexcept {
      return _nodes;
    }

    //! Renumbers variables: index i becomes new_index[i].
    [[nodiscard]] Term map_vars(std::vector<std::size_t> const& new_index) const;

    //! Fully parenthesised rendering using the given variable names.
    [[nodiscard]] std::string
    to_string(std::vector<std::string> const& var_names) const;

    //! Throws UnboundVariable or MissingConstantF.
    [[nodiscard]] Elem eval(FiniteResiduatedLattice const& alg,
                            std::span<Elem const>          assignment) const;

    //! Unchecked evaluation for hot loops; scratch is resized as needed.
    [[nodiscard]] Elem eval_fast(FiniteResiduatedLattice const& alg,
                                 std::span<Elem const>          assignment,
                                 std::vector<Elem>&             scratch) const;

    friend bool operator==(Term const&, Term const&) = default;

   private:
    std::vector<Node> _nodes;
  };

  inline Term operator*(Term const& a, Term const& b) {
    return Term::binary(Op::mult, a, b);
  }
  inline Term operator|(Term const& a, Term const& b) {
    return Term::binary(Op::join, a, b);
  }
  inline Term operator&(Term const& a, Term const& b) {
    return Term::binary(Op::meet, a, b);
  }
  //! a\b
  inline Term ldiv(Term const& a, Term const& b) {
    return Term::binary(Op::lres, a, b);
  }
  //! a/b
  inline Term rdiv(Term const& a, Term const& b) {
    return Term::binary(Op::rres, a, b);
  }
  //! t^k, with t^0 = e.
  Term power(Term const& t, std::size_t k);

  Elem eval_term(FiniteResiduatedLattice const& alg,
                 Term const&                    term,
                 std::span<Elem const>          assignment);

  //! Parses a term. Variable names ([a-z][0-9]*, other than e and f) are
  //! looked up in var_names and appended when new. Throws SyntaxError.
  Term parse_term(std::string_view text, std::vector<std::string>& var_names);

}  // namespace rlat
