#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlat/algebra.hpp"

namespace rlat {

  struct ConvNodeReport {
    std::vector<std::string> members;
    std::string              generator;
    bool                     prime         = false;
    bool                     minimal_prime = false;
    bool                     polar         = false;
    bool                     normal        = false;
    //! Elements this node is a value of.
    std::vector<std::string> value_of;

    friend bool operator==(ConvNodeReport const&, ConvNodeReport const&) = default;
  };

  struct LawReport {
    std::string name;
    bool        holds = true;
    //! "x=a, y=b" for a failing law, empty otherwise.
    std::string counterexample;

    friend bool operator==(LawReport const&, LawReport const&) = default;
  };

  //! Everything the toolkit computes about one algebra. Sections that need
  //! e-cyclicity are empty (or unset) for other algebras.
  struct AlgebraReport {
    std::string              name;
    std::size_t              size = 0;
    std::vector<std::string> labels;
    std::string              unit;
    AlgebraFlags             flags;

    std::vector<ConvNodeReport>                      conv_nodes;
    std::vector<std::pair<std::size_t, std::size_t>> conv_edges;

    bool                     is_gbl    = false;
    bool                     is_gmv    = false;
    bool                     is_lgroup = false;
    std::vector<std::string> invertibles;
    std::vector<std::string> integrals;

    std::optional<bool>         semilinear;
    std::map<std::string, bool> semilinear_routes;
    std::vector<std::size_t>    decomposition;
    std::vector<std::string>    notices;

    //! Least (m, n), or unset when not Hamiltonian or not e-cyclic.
    std::optional<std::pair<std::size_t, std::size_t>> hamiltonian;
    std::optional<bool>                                 hamiltonian_star_agrees;

    std::optional<bool> martinez;

    std::vector<LawReport> laws;

    friend bool operator==(AlgebraReport const&, AlgebraReport const&) = default;
  };

  AlgebraReport report_structured(FiniteResiduatedLattice const& alg);

  //! Pretty-printed JSON with sorted keys; the schema is documented in
  //! the README.
  std::string   to_json(AlgebraReport const& report);
  AlgebraReport report_from_json(std::string const& text);

}  // namespace rlat
