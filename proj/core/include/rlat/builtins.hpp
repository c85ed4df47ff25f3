#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/lattice.hpp"

namespace rlat {

  //! Names accepted by builtin(), in a fixed order.
  std::vector<std::string> const& builtin_names();

  //! Throws UnknownName.
  FiniteResiduatedLattice builtin(std::string_view name);

  //! Named lattices: "chain1".."chain8", "diamond" (2x2), "n5", "m3".
  std::vector<std::string> const& builtin_lattice_names();
  FiniteLattice                   builtin_lattice(std::string_view name);

  //! Chain 0 < 1 < ... < n-1.
  FiniteLattice chain_lattice(std::size_t n);

}  // namespace rlat
