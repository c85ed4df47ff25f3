#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace rlat;
using testing::set_of;

TEST_CASE("polars in example5 and chains") {
  auto e5 = builtin("example5");
  CHECK(polar(e5, set_of(e5, "a")) == set_of(e5, "b,e"));
  CHECK(polar(e5, set_of(e5, "b")) == set_of(e5, "a,e"));
  CHECK(polar(e5, set_of(e5, "e")) == e5.carrier());
  CHECK(polar(e5, e5.carrier()) == set_of(e5, "e"));
  for (auto const& name : {"godel3", "lukasiewicz3", "chain2"}) {
    auto c = builtin(name);
    for (Elem x = 0; x < c.size(); ++x) {
      if (x != c.unit()) {
        CHECK(polar(c, Subset::singleton(x)) == Subset::singleton(c.unit()));
      }
    }
  }
}

TEST_CASE("polars match the pseudocomplement oracle") {
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    for (auto m : oracle::convex_subalgebras(a)) {
      CHECK_MESSAGE(polar(a, Subset::from_bits(m)).bits() == oracle::pseudocomplement(a, m),
                    a.name());
    }
  }
}

TEST_CASE("relative pseudocomplements") {
  auto e5  = builtin("example5");
  auto lat = all_convex_subalgebras(e5);
  auto ae = set_of(e5, "a,e"), e = set_of(e5, "e");
  CHECK(rel_pseudocomplement(e5, lat, ae, e) == set_of(e5, "b,e"));
  CHECK(rel_pseudocomplement(e5, lat, ae, ae) == e5.carrier());
  CHECK(rel_pseudocomplement(e5, lat, e, set_of(e5, "b,e")) == e5.carrier());
}

TEST_CASE("primes and minimal primes") {
  auto e5  = builtin("example5");
  auto lat = all_convex_subalgebras(e5);
  auto pr  = prime_nodes(lat);
  REQUIRE(pr.size() == 2);
  CHECK(minimal_prime_nodes(e5, lat) == pr);

  auto g  = builtin("godel3");
  auto gl = all_convex_subalgebras(g);
  CHECK(prime_nodes(gl).size() == 2);
  auto mp = minimal_prime_nodes(g, gl);
  REQUIRE(mp.size() == 1);
  CHECK(gl.members(mp[0]) == set_of(g, "e"));

  auto p   = builtin("godel3xchain2");
  auto pl  = all_convex_subalgebras(p);
  CHECK(minimal_prime_nodes(p, pl).size() == 2);
}

TEST_CASE("primes match the meet-irreducible oracle") {
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    auto lat = all_convex_subalgebras(a);
    std::vector<oracle::Mask> got;
    for (auto i : prime_nodes(lat)) {
      got.push_back(lat.members(i).bits());
    }
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == oracle::primes(oracle::convex_subalgebras(a)), a.name());
  }
}

TEST_CASE("prime characterizations") {
  auto e5  = builtin("example5");
  auto lat = all_convex_subalgebras(e5);
  REQUIRE(satisfies(e5, "LP"));
  auto pc = prime_characterization_check(e5, lat, set_of(e5, "a,e"));
  CHECK(pc.meet_irreducible);
  CHECK(pc.abs_join_in);
  CHECK(pc.abs_join_unit);
  CHECK(pc.residual_in);
  CHECK(pc.chain_above);
  auto g  = builtin("godel3");
  auto gp = prime_characterization_check(g, all_convex_subalgebras(g), set_of(g, "e"));
  CHECK(gp.meet_irreducible);
  CHECK(gp.residual_in);
  CHECK(gp.chain_above);
}

TEST_CASE("prime conditions agree under LP and split without it") {
  bool split = false;
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    auto lat = all_convex_subalgebras(a);
    bool lp  = satisfies(a, "LP");
    for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
      auto pc = prime_characterization_check(a, lat, lat.members(i));
      if (lp) {
        CHECK(pc.meet_irreducible == pc.abs_join_in);
        CHECK(pc.meet_irreducible == pc.abs_join_unit);
        CHECK(pc.meet_irreducible == pc.residual_in);
        CHECK(pc.meet_irreducible == pc.chain_above);
      } else if (pc.meet_irreducible != pc.residual_in) {
        split = true;
      }
    }
  }
  CHECK(split);
}

TEST_CASE("Monteiro conditions") {
  auto b4 = all_convex_subalgebras(builtin("boolean4"));
  CHECK(monteiro_check(b4.lattice()).holds());
  auto e5 = builtin("example5");
  auto l5 = all_convex_subalgebras(e5);
  CHECK(monteiro_check(l5.lattice()).holds());
  auto rn = relatively_normal(e5, l5);
  CHECK(rn.monteiro);
  CHECK(rn.root_system);
  auto n5 = monteiro_check(testing::n5());
  CHECK_FALSE(n5.holds());
  CHECK_FALSE(n5.distributive);
  CHECK(n5.witnesses_found);
}

TEST_CASE("minimal prime characterizations") {
  auto c  = builtin("godel3");
  auto cl = all_convex_subalgebras(c);
  auto r  = minimal_prime_characterization(c, cl, set_of(c, "e"));
  CHECK(r.minimal);
  CHECK(r.union_of_polars);
  auto nm = minimal_prime_characterization(c, cl, set_of(c, "m,e"));
  CHECK_FALSE(nm.minimal);
  CHECK(nm.consistent());
  auto e5 = builtin("example5");
  auto r5 = minimal_prime_characterization(e5, all_convex_subalgebras(e5), set_of(e5, "a,e"));
  CHECK(r5.minimal);
  CHECK(r5.union_of_polars);
  CHECK_THROWS_AS(minimal_prime_characterization(e5, all_convex_subalgebras(e5), e5.carrier()),
                  Error);
}

TEST_CASE("double polars form a Boolean algebra") {
  auto c = builtin("godel3");
  CHECK(double_polar_boolean(c, all_convex_subalgebras(c)).nodes.size() == 2);
  auto e5 = builtin("example5");
  auto d5 = double_polar_boolean(e5, all_convex_subalgebras(e5));
  CHECK(d5.nodes.size() == 4);
  CHECK(d5.boolean);
  auto p3 = builtin("chain2cubed");
  CHECK(double_polar_boolean(p3, all_convex_subalgebras(p3)).nodes.size() == 8);
}

TEST_CASE("polar as a meet of minimal primes") {
  auto e5  = builtin("example5");
  auto lat = all_convex_subalgebras(e5);
  CHECK(polar_prime_meet(e5, lat, set_of(e5, "e")) == e5.carrier());
  CHECK(polar_prime_meet(e5, lat, set_of(e5, "a,e")) == set_of(e5, "b,e"));
  auto c = builtin("godel3");
  CHECK(polar_prime_meet(c, all_convex_subalgebras(c), c.carrier()) == set_of(c, "e"));
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    auto l = all_convex_subalgebras(a);
    for (auto s : l.nodes()) {
      CHECK(polar_prime_meet(a, l, s) == polar(a, s));
    }
  }
}

TEST_CASE("negative cone ideals and minimal prime filters") {
  auto c2 = builtin("chain2");
  auto r2 = negcone_ideal_correspondence(c2, all_convex_subalgebras(c2));
  CHECK(r2.ok());
  CHECK(r2.maximal_ideals.size() == 1);
  auto e5 = builtin("example5");
  auto r5 = negcone_ideal_correspondence(e5, all_convex_subalgebras(e5));
  CHECK(r5.ok());
  CHECK(r5.maximal_ideals.size() == 2);
  auto g  = builtin("godel3");
  auto rg = negcone_ideal_correspondence(g, all_convex_subalgebras(g));
  CHECK(rg.ok());
  REQUIRE(rg.maximal_ideals.size() == 1);
  CHECK(rg.maximal_ideals[0].first == set_of(g, "0,m"));
}

TEST_CASE("spectrum invariants on the corpus") {
  for (auto const& a : build_corpus()) {
    if (!a.flags().e_cyclic) {
      continue;
    }
    auto lat = all_convex_subalgebras(a);
    auto mp  = minimal_prime_nodes(a, lat);
    Subset meet = a.carrier();
    for (auto i : mp) {
      meet = meet & lat.members(i);
      auto r = minimal_prime_characterization(a, lat, lat.members(i));
      CHECK(r.minimal);
      CHECK(r.polar_not_inside);
      CHECK(r.union_of_polars);
    }
    CHECK_MESSAGE(meet == Subset::singleton(a.unit()), a.name());
    CHECK(double_polar_boolean(a, lat).boolean);
    CHECK(negcone_ideal_correspondence(a, lat).ok());
    CHECK(separating_meet_irreducibles(lat.lattice()));
    CHECK(minimal_meet_irreducibles_agree(lat.lattice()));
    auto rn = relatively_normal(a, lat);
    CHECK(rn.monteiro == rn.root_system);
  }
}
