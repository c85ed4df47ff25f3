#pragma once

#include <string>

#include "rlat/rlat.hpp"

namespace testing {

  //! "a,e" -> {a,e}; "" -> {}.
  inline rlat::Subset set_of(rlat::FiniteResiduatedLattice const& alg, std::string const& labels) {
    rlat::Subset s;
    std::string  cur;
    for (char c : labels + ",") {
      if (c == ',') {
        if (!cur.empty()) {
          s.insert(alg.element(cur));
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
    return s;
  }

  inline rlat::FiniteLattice n5() {
    return rlat::builtin_lattice("n5");
  }

}  // namespace testing
