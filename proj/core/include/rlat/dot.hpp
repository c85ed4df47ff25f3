#pragma once

#include <string>

#include "rlat/algebra.hpp"
#include "rlat/convexity.hpp"

namespace rlat {

  //! Hasse diagram of the order, bottom to top: one node per element in
  //! index order and one edge per cover pair.
  std::string export_dot(FiniteResiduatedLattice const& alg);

  //! Hasse diagram of the convex subalgebra lattice; nodes are labelled
  //! with their members.
  std::string export_dot(FiniteResiduatedLattice const& alg, ConvLattice const& lat);

}  // namespace rlat
