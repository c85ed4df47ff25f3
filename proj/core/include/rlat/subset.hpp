#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rlat/error.hpp"

namespace rlat {

  //! Index of an element of a finite algebra.
  using Elem = std::uint16_t;

  //! A subset of a carrier with at most 64 elements, stored as a bitmask.
  class Subset {
   public:
    static constexpr std::size_t max_carrier = 64;

    constexpr Subset() = default;

    static constexpr Subset from_bits(std::uint64_t bits) {
      Subset s;
      s._bits = bits;
      return s;
    }

    static Subset full(std::size_t n) {
      if (n > max_carrier) {
        fail(ErrorKind::CarrierTooLarge,
             "subsets are limited to 64 elements, got " + std::to_string(n));
      }
      return from_bits(n == 64 ? ~std::uint64_t(0)
                               : (std::uint64_t(1) << n) - 1);
    }

    static Subset singleton(Elem x) {
      return from_bits(std::uint64_t(1) << x);
    }

    template <typename Range>
    static Subset of(Range const& elements) {
      Subset s;
      for (auto x : elements) {
        s.insert(static_cast<Elem>(x));
      }
      return s;
    }

    [[nodiscard]] constexpr bool contains(Elem x) const {
      return (_bits >> x) & 1U;
    }
    void insert(Elem x) {
      _bits |= std::uint64_t(1) << x;
    }
    void erase(Elem x) {
      _bits &= ~(std::uint64_t(1) << x);
    }
    [[nodiscard]] constexpr std::size_t size() const {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    [[nodiscard]] constexpr bool empty() const {
      return _bits == 0;
    }
    [[nodiscard]] constexpr std::uint64_t bits() const {
      return _bits;
    }
    [[nodiscard]] constexpr bool is_subset_of(Subset other) const {
      return (_bits & ~other._bits) == 0;
    }

    //! Smallest element, the set must be nonempty.
    [[nodiscard]] Elem first() const {
      return static_cast<Elem>(std::countr_zero(_bits));
    }

    [[nodiscard]] std::vector<Elem> elements() const {
      std::vector<Elem> out;
      out.reserve(size());
      for_each([&out](Elem x) { out.push_back(x); });
      return out;
    }

    template <typename F>
    void for_each(F&& f) const {
      std::uint64_t b = _bits;
      while (b != 0) {
        f(static_cast<Elem>(std::countr_zero(b)));
        b &= b - 1;
      }
    }

    template <typename P>
    [[nodiscard]] bool all_of(P&& p) const {
      std::uint64_t b = _bits;
      while (b != 0) {
        if (!p(static_cast<Elem>(std::countr_zero(b)))) {
          return false;
        }
        b &= b - 1;
      }
      return true;
    }

    friend constexpr Subset operator|(Subset a, Subset b) {
      return from_bits(a._bits | b._bits);
    }
    friend constexpr Subset operator&(Subset a, Subset b) {
      return from_bits(a._bits & b._bits);
    }
    friend constexpr Subset operator-(Subset a, Subset b) {
      return from_bits(a._bits & ~b._bits);
    }
    friend constexpr bool operator==(Subset a, Subset b) = default;

   private:
    std::uint64_t _bits = 0;
  };

  //! The canonical order on subsets: by cardinality, then by bitmask.
  constexpr bool canonical_less(Subset a, Subset b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.bits() < b.bits();
  }

}  // namespace rlat
