#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace rlat;
using testing::set_of;

TEST_CASE("normality in example5") {
  auto e5 = builtin("example5");
  auto r  = is_normal(e5, set_of(e5, "a,e"));
  CHECK_FALSE(r.normal);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->first == e5.element("a"));
  CHECK(r.witness->second == e5.element("b"));
  CHECK(is_normal(e5, set_of(e5, "e")).normal);
  CHECK(is_normal(e5, e5.carrier()).normal);
  CHECK_THROWS_AS(is_normal(e5, set_of(e5, "0,e")), Error);
}

TEST_CASE("commutative algebras are Hamiltonian") {
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic || !a.flags().commutative) {
      continue;
    }
    auto lat = all_convex_subalgebras(a);
    CHECK_MESSAGE(all_normal(a, lat).size() == lat.size(), a.name());
    auto h = hamiltonian_degree(a);
    REQUIRE(h.hamiltonian());
    CHECK(*h.m == 1);
    CHECK(*h.n == 1);
  }
}

TEST_CASE("normal closure") {
  auto e5 = builtin("example5");
  CHECK(normal_closure(e5, set_of(e5, "e")) == set_of(e5, "e"));
  CHECK(normal_closure(e5, set_of(e5, "a")) == e5.carrier());
  CHECK(normal_closure(e5, set_of(e5, "a"), ConjugationFamily::star) == e5.carrier());
  auto g = builtin("godel3");
  CHECK(normal_closure(g, set_of(g, "m")) == set_of(g, "m,e"));
}

TEST_CASE("normality matches the pointwise oracle") {
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    for (auto m : oracle::convex_subalgebras(a)) {
      CHECK_MESSAGE(is_normal(a, Subset::from_bits(m)).normal == oracle::is_normal(a, m),
                    a.name());
      for (auto fam : {ConjugationFamily::plain, ConjugationFamily::star}) {
        Subset nc = normal_closure(a, Subset::from_bits(m), fam);
        CHECK(oracle::is_normal(a, nc.bits()));
      }
    }
  }
}

TEST_CASE("normal subalgebras and congruences") {
  auto e5  = builtin("example5");
  auto lat = all_convex_subalgebras(e5);
  auto nn  = all_normal(e5, lat);
  REQUIRE(nn.size() == 2);
  CHECK(lat.members(nn[0]) == set_of(e5, "e"));
  CHECK(lat.members(nn[1]) == e5.carrier());
  CHECK(congruences_oracle(e5).congruences.size() == 2);
  CHECK(congruences_oracle(builtin("chain2")).congruences.size() == 2);

  // frozen from the partition-scan oracle
  std::vector<std::pair<std::string, std::size_t>> const expected = {
      {"godel3", 3}, {"lukasiewicz3", 2}, {"example5", 2}, {"boolean4", 4},
      {"heyting5", 5}, {"godel3xchain2", 6}, {"chain2cubed", 8}};
  for (auto const& [name, count] : expected) {
    auto a = builtin(name);
    CHECK_MESSAGE(oracle::congruences(a).size() == count, name);
    CHECK_MESSAGE(check_normal_congruence_bijection(a, all_convex_subalgebras(a)) == count,
                  name);
  }
}

TEST_CASE("congruence counts match the oracle on the corpus") {
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    auto lat = all_convex_subalgebras(a);
    CHECK_MESSAGE(all_normal(a, lat).size() == oracle::congruences(a).size(), a.name());
  }
}

TEST_CASE("quotients") {
  auto g = builtin("godel3");
  auto q = quotient(g, set_of(g, "m,e"));
  CHECK(q.algebra.size() == 2);
  CHECK(q.algebra.flags().chain);
  CHECK(are_isomorphic(quotient(g, set_of(g, "e")).algebra, g));
  CHECK(quotient(g, g.carrier()).algebra.size() == 1);
  auto e5 = builtin("example5");
  CHECK_THROWS_AS(quotient(e5, set_of(e5, "a,e")), Error);
  CHECK(q.projection[g.element("0")] != q.projection[g.element("m")]);
}

TEST_CASE("Hamiltonian degree") {
  auto g = hamiltonian_degree(builtin("godel3"));
  REQUIRE(g.hamiltonian());
  CHECK(*g.m == 1);
  CHECK(*g.n == 1);
  auto e5 = hamiltonian_degree(builtin("example5"));
  CHECK_FALSE(e5.hamiltonian());
  CHECK_FALSE(e5.all_nodes_normal);
  for (auto const& a : build_corpus()) {
    if (a.flags().e_cyclic) {
      CHECK(hamiltonian_degree(a).hamiltonian() == oracle::hamiltonian(a));
    }
  }
}

TEST_CASE("semilinearity routes") {
  for (auto const& name : {"godel3", "lukasiewicz3", "chain2"}) {
    auto c = builtin(name);
    auto r = is_semilinear(c);
    CHECK(r.semilinear);
    REQUIRE(r.decomposition.size() == 1);
  }
  auto e5 = is_semilinear(builtin("example5"));
  CHECK_FALSE(e5.semilinear);
  for (auto const& [route, v] : e5.verdicts) {
    CHECK_MESSAGE(!v, route);
  }
  CHECK(e5.non_normal_minimal_primes.size() == 2);
  auto p = builtin("godel3xchain2");
  auto rp = is_semilinear(p, SemilinearRoute::bruteforce);
  CHECK(rp.semilinear);
  CHECK(rp.decomposition.size() == 2);
  CHECK(semilinear_route("spectral") == SemilinearRoute::spectral);
  CHECK_THROWS_AS(semilinear_route("vibes"), Error);
}

TEST_CASE("semilinearity matches the subdirect oracle") {
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    auto r = is_semilinear(a);
    CHECK_MESSAGE(r.semilinear == oracle::semilinear(a), a.name());
    if (r.lp || r.rp) {
      for (auto const& [route, v] : r.verdicts) {
        CHECK_MESSAGE(v == r.semilinear, a.name() << " " << route);
      }
    }
    if (a.flags().integral) {
      CHECK(kuhr_integral_check(a) == r.semilinear);
    }
  }
}

TEST_CASE("Kuhr identity") {
  CHECK(kuhr_integral_check(builtin("godel3")));
  CHECK(kuhr_integral_check(builtin("lukasiewicz3")));
  CHECK_FALSE(kuhr_integral_check(builtin("example5")));
  CHECK_THROWS_AS(kuhr_integral_check(builtin("nonintegral3")), Error);
}

TEST_CASE("conjugation interleaving on the corpus") {
  for (auto const& a : build_corpus()) {
    if (a.flags().e_cyclic) {
      CHECK_MESSAGE(!conjugation_interleaving_violation(a).has_value(), a.name());
    }
  }
}

TEST_CASE("starred conjugations give the same Hamiltonian verdict") {
  for (auto const& a : build_corpus()) {
    if (a.flags().e_cyclic) {
      CHECK_MESSAGE(hamiltonian_degree(a).star_agrees(), a.name());
    }
  }
}
