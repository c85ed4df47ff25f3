#include "rlat/builtins.hpp"

#include <algorithm>
#include <regex>

namespace rlat {

  namespace {
    // Builds an algebra from a chain or cover list and a multiplication
    // table written with labels; residuals are derived.
    FiniteResiduatedLattice
    make(std::string                                          name,
         std::vector<std::string>                             labels,
         std::vector<std::pair<std::string, std::string>>     covers,
         std::vector<std::vector<std::string>> const&         rows,
         std::string const&                                   unit) {
      auto idx = [&](std::string const& s) {
        auto it = std::find(labels.begin(), labels.end(), s);
        check(it != labels.end(), "builtin label " + s);
        return static_cast<Elem>(it - labels.begin());
      };
      std::vector<std::pair<Elem, Elem>> pairs;
      for (auto const& [lo, hi] : covers) {
        pairs.emplace_back(idx(lo), idx(hi));
      }
      std::size_t const n = labels.size();
      RawAlgebra        raw;
      raw.name = std::move(name);
      raw.leq  = order_closure(n, pairs);
      for (auto const& row : rows) {
        for (auto const& c : row) {
          raw.mult.push_back(idx(c));
        }
      }
      raw.unit   = idx(unit);
      raw.labels = std::move(labels);
      return validate_algebra(std::move(raw));
    }

    std::vector<std::pair<std::string, std::string>>
    chain_covers(std::vector<std::string> const& l) {
      std::vector<std::pair<std::string, std::string>> c;
      for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        c.emplace_back(l[i], l[i + 1]);
      }
      return c;
    }

    FiniteResiduatedLattice trivial() {
      return make("trivial", {"e"}, {}, {{"e"}}, "e");
    }
    FiniteResiduatedLattice chain2() {
      std::vector<std::string> l{"0", "e"};
      return make("chain2", l, chain_covers(l), {{"0", "0"}, {"0", "e"}}, "e");
    }
    FiniteResiduatedLattice godel3() {
      std::vector<std::string> l{"0", "m", "e"};
      return make("godel3", l, chain_covers(l),
                  {{"0", "0", "0"}, {"0", "m", "m"}, {"0", "m", "e"}}, "e");
    }
    FiniteResiduatedLattice lukasiewicz3() {
      std::vector<std::string> l{"0", "m", "e"};
      return make("lukasiewicz3", l, chain_covers(l),
                  {{"0", "0", "0"}, {"0", "0", "m"}, {"0", "m", "e"}}, "e");
    }
    FiniteResiduatedLattice example5() {
      return make("example5", {"0", "a", "b", "c", "e"},
                  {{"0", "c"}, {"c", "a"}, {"c", "b"}, {"a", "e"}, {"b", "e"}},
                  {{"0", "0", "0", "0", "0"},
                   {"0", "a", "0", "0", "a"},
                   {"0", "c", "b", "c", "b"},
                   {"0", "c", "0", "0", "c"},
                   {"0", "a", "b", "c", "e"}},
                  "e");
    }
    FiniteResiduatedLattice nonintegral3() {
      std::vector<std::string> l{"bot", "e", "top"};
      return make("nonintegral3", l, chain_covers(l),
                  {{"bot", "bot", "bot"}, {"bot", "e", "top"}, {"bot", "top", "top"}},
                  "e");
    }
    FiniteResiduatedLattice boolean4() {
      return make("boolean4", {"0", "p", "q", "e"},
                  {{"0", "p"}, {"0", "q"}, {"p", "e"}, {"q", "e"}},
                  {{"0", "0", "0", "0"},
                   {"0", "p", "0", "p"},
                   {"0", "0", "q", "q"},
                   {"0", "p", "q", "e"}},
                  "e");
    }
    // Heyting algebra on 0 < a, b < c < e: multiplication is meet. It
    // satisfies neither prelinearity law.
    FiniteResiduatedLattice heyting5() {
      return make("heyting5", {"0", "a", "b", "c", "e"},
                  {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"c", "e"}},
                  {{"0", "0", "0", "0", "0"},
                   {"0", "a", "0", "a", "a"},
                   {"0", "0", "b", "b", "b"},
                   {"0", "a", "b", "c", "c"},
                   {"0", "a", "b", "c", "e"}},
                  "e");
    }

    std::regex const chain_re("chain([1-8])");
  }  // namespace

  std::vector<std::string> const& builtin_names() {
    static std::vector<std::string> const names{
        "trivial",  "chain2",   "godel3",       "lukasiewicz3",
        "example5", "nonintegral3", "boolean4", "heyting5",
        "godel3xchain2", "chain2cubed"};
    return names;
  }

  FiniteResiduatedLattice builtin(std::string_view name) {
    if (name == "trivial") {
      return trivial();
    }
    if (name == "chain2") {
      return chain2();
    }
    if (name == "godel3") {
      return godel3();
    }
    if (name == "lukasiewicz3") {
      return lukasiewicz3();
    }
    if (name == "example5") {
      return example5();
    }
    if (name == "nonintegral3") {
      return nonintegral3();
    }
    if (name == "boolean4") {
      return boolean4();
    }
    if (name == "heyting5") {
      return heyting5();
    }
    if (name == "godel3xchain2") {
      return direct_product(godel3(), chain2()).renamed("godel3xchain2");
    }
    if (name == "chain2cubed") {
      return direct_product(direct_product(chain2(), chain2()), chain2())
          .renamed("chain2cubed");
    }
    fail(ErrorKind::UnknownName, "no builtin algebra named '" + std::string(name) + "'");
  }

  FiniteLattice chain_lattice(std::size_t n) {
    std::vector<std::pair<Elem, Elem>> covers;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      covers.emplace_back(static_cast<Elem>(i), static_cast<Elem>(i + 1));
    }
    return FiniteLattice::from_covers(n, covers);
  }

  std::vector<std::string> const& builtin_lattice_names() {
    static std::vector<std::string> const names{"chain1", "chain2", "chain3", "chain4",
                                                "chain5", "chain6", "chain7", "chain8",
                                                "diamond", "n5",    "m3"};
    return names;
  }

  FiniteLattice builtin_lattice(std::string_view name) {
    std::string const s(name);
    std::smatch       m;
    if (std::regex_match(s, m, chain_re)) {
      return chain_lattice(static_cast<std::size_t>(std::stoi(m[1].str())));
    }
    if (s == "diamond") {
      return FiniteLattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    }
    if (s == "n5") {
      // 0 < a < b < 1, 0 < c < 1
      return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
    }
    if (s == "m3") {
      return FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    }
    fail(ErrorKind::UnknownName, "no builtin lattice named '" + s + "'");
  }

}  // namespace rlat
