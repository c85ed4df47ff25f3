#include <doctest.h>

#include "helpers.hpp"

using namespace rlat;
using testing::set_of;

TEST_CASE("GBL and GMV classification") {
  auto l = classify(builtin("lukasiewicz3"));
  CHECK(l.is_gmv);
  CHECK(l.is_gbl);
  auto g = classify(builtin("godel3"));
  CHECK(g.is_gbl);
  CHECK_FALSE(g.is_gmv);
  auto e = classify(builtin("example5"));
  CHECK_FALSE(e.is_gbl);
  CHECK(e.is_integral);
  auto t = classify(builtin("trivial"));
  CHECK(t.is_lgroup);
}

TEST_CASE("GBL decomposition") {
  CHECK(gbl_decomposition_check(builtin("lukasiewicz3")));
  CHECK(gbl_decomposition_check(builtin("trivial")));
  auto l2 = direct_product(builtin("lukasiewicz3"), builtin("lukasiewicz3"));
  auto c  = classify(l2);
  CHECK(c.is_gmv);
  CHECK(c.invertibles == Subset::singleton(l2.unit()));
  CHECK(c.integrals == l2.carrier());
  CHECK(gbl_decomposition_check(l2));
  CHECK_THROWS_AS(gbl_decomposition_check(builtin("example5")), Error);
}

TEST_CASE("Martinez conditions") {
  auto c2 = martinez_conditions(builtin("chain2"));
  CHECK(c2.cond_i);
  CHECK(c2.cond_ii);
  auto g = martinez_conditions(builtin("godel3"));
  CHECK_FALSE(g.cond_i);
  CHECK_FALSE(g.cond_ii);
  auto e = martinez_conditions(builtin("example5"));
  CHECK(e.cond_i);
  CHECK(e.cond_ii);
  for (auto const& a : build_corpus()) {
    if (a.flags().e_cyclic) {
      auto m = martinez_conditions(a);
      CHECK_MESSAGE(m.cond_i == m.cond_ii, a.name());
    }
  }
}

TEST_CASE("builtins") {
  for (auto const& name : builtin_names()) {
    CHECK(builtin(name).name() == name);
  }
  CHECK(builtin("chain2").size() == 2);
  CHECK(builtin("chain2").flags().chain);
  CHECK_THROWS_AS(builtin("nope"), Error);
  CHECK(builtin_lattice("n5").size() == 5);
  CHECK_FALSE(builtin_lattice("n5").is_distributive());
  CHECK(builtin_lattice("m3").size() == 5);
}

TEST_CASE("B_n arithmetic") {
  auto u = BnElement::unit(2);
  for (auto q : {"-2", "-1/2", "0", "3/2"}) {
    auto r = parse_rational(q);
    auto x = r <= 0 ? BnElement::neg_pair(2, r) : BnElement::pos(2, r);
    CHECK(bn_op(BnOp::mult, u, x) == x);
    CHECK(bn_op(BnOp::mult, x, u) == x);
  }
  // n\(<-n,-1> * n) = <-n,-1>^n at n = 2
  auto g    = BnElement::neg_pair(2, -1);
  auto two  = BnElement::pos(2, 2);
  auto prod = bn_op(BnOp::mult, g, two);
  CHECK(prod == BnElement::pos(2, 0));
  CHECK(bn_op(BnOp::lres, two, prod) == BnElement::neg_pair(2, -2));
  CHECK(bn_power(g, 2) == BnElement::neg_pair(2, -2));

  // y\(<3x,x>*y) >= <3x,x>^3 at x = -1, y = 5
  auto g3 = BnElement::neg_pair(3, -1);
  auto y  = BnElement::pos(3, 5);
  CHECK(bn_leq(bn_power(g3, 3), bn_op(BnOp::lres, y, bn_op(BnOp::mult, g3, y))));
  CHECK_THROWS_AS(bn_op(BnOp::mult, g, g3), Error);
  CHECK(to_string(parse_rational("0.25")) == "1/4");
}

TEST_CASE("B_n witness and residuation") {
  for (std::uint32_t n : {2U, 3U, 5U}) {
    for (bool mirror : {false, true}) {
      std::vector<Rational> grid;
      for (auto q : {"-2", "-1", "-1/2", "-1/3", "0", "1/3", "1/2", "1", "2"}) {
        grid.push_back(parse_rational(q));
      }
      auto r = bn_verify(n, grid, mirror);
      CHECK(r.witness_equals_power);
      CHECK(r.power_strict);
      CHECK_FALSE(r.residuation_failure.has_value());
      CHECK(r.residuation_triples == r.elements * r.elements * r.elements);
      CHECK(r.integral);
    }
  }
  auto r3 = bn_verify(3, {parse_rational("-1")});
  CHECK(r3.witness_value == "<-9,-3>");
}

TEST_CASE("B_n sampled conjugation bounds") {
  // The first conjugation bound (x&e)^n <= lambda_y(x) holds on the sample
  // but the second one (x&e) <= rho_y(x) does not: with x = 1 and
  // y = <-1,-1/2> in B_2, rho_y(x) = 1/2. The sample only lies in H_{2,2}.
  std::vector<Rational> grid{parse_rational("-1/2"), parse_rational("1")};
  auto r = bn_verify(2, grid);
  REQUIRE(r.ham_failure.has_value());
  CHECK(r.ham_failure->find("rho") != std::string::npos);
  REQUIRE(r.second_exponent.has_value());
  CHECK(*r.second_exponent == 2);
  auto x   = BnElement::pos(2, 1);
  auto yv  = BnElement::neg_pair(2, parse_rational("-1/2"));
  auto rho = bn_op(BnOp::meet, bn_op(BnOp::rres, bn_op(BnOp::mult, yv, x), yv), BnElement::unit(2));
  CHECK(rho == BnElement::pos(2, parse_rational("1/2")));
  CHECK_FALSE(bn_leq(x, rho));
}
