#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rlat {

  using Rational = boost::multiprecision::cpp_rational;

  //! Parses "3", "-1/2" or "0.25".
  Rational parse_rational(std::string const& text);
  std::string to_string(Rational const& q);

  //! An element of the residuated chain B_n: either the pair <n*x, x> with
  //! x <= 0 (stored as x) or a nonnegative rational. Every nonnegative
  //! rational lies below every pair; <0,0> is the unit.
  class BnElement {
   public:
    enum class Tag : std::uint8_t { neg_pair, pos };

    static BnElement neg_pair(std::uint32_t n, Rational x);
    static BnElement pos(std::uint32_t n, Rational q);
    static BnElement unit(std::uint32_t n) {
      return neg_pair(n, 0);
    }

    [[nodiscard]] Tag tag() const noexcept {
      return _tag;
    }
    [[nodiscard]] Rational const& value() const noexcept {
      return _value;
    }
    [[nodiscard]] std::uint32_t n() const noexcept {
      return _n;
    }
    //! "<-2,-1>" or "3/2".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(BnElement const&, BnElement const&) = default;

   private:
    BnElement(Tag t, std::uint32_t n, Rational v)
        : _tag(t), _n(n), _value(std::move(v)) {}

    Tag           _tag;
    std::uint32_t _n;
    Rational      _value;
  };

  enum class BnOp : std::uint8_t { mult, lres, rres, join, meet };

  //! lres(x, y) = x\y, rres(x, y) = x/y. With mirror set, evaluates in B*_n,
  //! the same chain with opposite multiplication. Throws ParameterMismatch.
  BnElement bn_op(BnOp op, BnElement const& x, BnElement const& y, bool mirror = false);

  bool      bn_leq(BnElement const& x, BnElement const& y);
  BnElement bn_power(BnElement const& x, std::size_t k, bool mirror = false);

  struct BnReport {
    std::uint32_t n      = 0;
    bool          mirror = false;
    //! u\(g*u) with g = <-n,-1>, u = n (or (u*g)/u in the mirror).
    std::string witness_value;
    bool        witness_equals_power = false;  //!< equals g^n
    bool        power_strict         = false;  //!< g^n < g^(n-1)
    std::size_t elements             = 0;      //!< sampled carrier size
    std::size_t ham_pairs            = 0;
    std::optional<std::string> ham_failure;
    //! Least k <= n + 1 with (x&e)^k below the second conjugation on the
    //! sample, i.e. the sample lies in H_{n,k} (H_{k,n} in the mirror).
    std::optional<std::size_t> second_exponent;
    std::size_t                residuation_triples = 0;
    std::optional<std::string> residuation_failure;
    bool                       integral = true;

    [[nodiscard]] bool witness_ok() const {
      return witness_equals_power && power_strict;
    }
    [[nodiscard]] bool ok() const {
      return witness_ok() && !ham_failure && !residuation_failure && integral;
    }
  };

  //! (a) the exact failure witness, (b) the H_{n,1} inequalities on all
  //! pairs of sampled elements, (c) residuation on all sampled triples. Grid
  //! points r <= 0 give <n*r, r>, points r >= 0 give r.
  BnReport bn_verify(std::uint32_t n, std::vector<Rational> const& grid, bool mirror = false);

}  // namespace rlat
