#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rlat/algebra.hpp"
#include "rlat/lattice.hpp"

namespace rlat {

  //! Reads every algebra in the text. Format:
  //!
  //!     algebra NAME
  //!     elements L1 L2 ...
  //!     unit L
  //!     fconst L            (optional)
  //!     order               then lines "LO HI"; the order is their closure
  //!     mult                then one row of labels per element
  //!     lres / rres         optional, same shape; derived when absent
  //!     end
  //!
  //! '#' starts a comment. Throws SyntaxError (with the line number),
  //! UnknownLabel, DuplicateBlock and any validation error.
  std::vector<FiniteResiduatedLattice> parse_algebras(std::string_view text);

  //! Exactly one algebra.
  FiniteResiduatedLattice parse_algebra(std::string_view text);

  //! Order as cover pairs, then mult, lres and rres.
  std::string write_algebra(FiniteResiduatedLattice const& alg, bool residuals = true);

  struct LabeledLattice {
    std::string              name;
    std::vector<std::string> labels;
    FiniteLattice            lattice;
  };

  //! "lattice NAME", "elements ...", "order" block, "end".
  LabeledLattice parse_lattice(std::string_view text);
  std::string    write_lattice(LabeledLattice const& lat);

}  // namespace rlat
