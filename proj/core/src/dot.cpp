#include "rlat/dot.hpp"

#include <sstream>

namespace rlat {

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

    template <typename Label>
    std::string hasse(std::string const& name, FiniteLattice const& lat, Label label) {
      std::ostringstream out;
      out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
      for (std::size_t i = 0; i < lat.size(); ++i) {
        out << "  n" << i << " [label=" << quoted(label(static_cast<Elem>(i))) << "];\n";
      }
      for (auto [lo, hi] : lat.cover_pairs()) {
        out << "  n" << lo << " -> n" << hi << ";\n";
      }
      out << "}\n";
      return out.str();
    }
  }  // namespace

  std::string export_dot(FiniteResiduatedLattice const& alg) {
    return hasse(alg.name(), alg.lattice(), [&](Elem x) { return alg.label(x); });
  }

  std::string export_dot(FiniteResiduatedLattice const& alg, ConvLattice const& lat) {
    return hasse("C(" + alg.name() + ")", lat.lattice(),
                 [&](Elem i) { return alg.format(lat.members(i)); });
  }

}  // namespace rlat
