#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace rlat;
using testing::set_of;

TEST_CASE("trivial algebra has every flag") {
  auto t = builtin("trivial");
  CHECK(t.size() == 1);
  auto f = t.flags();
  CHECK(f.e_cyclic);
  CHECK(f.integral);
  CHECK(f.commutative);
  CHECK(f.chain);
}

TEST_CASE("example5 validates with the expected flags") {
  auto a = builtin("example5");
  CHECK(a.size() == 5);
  CHECK(a.flags().integral);
  CHECK(a.flags().e_cyclic);
  CHECK_FALSE(a.flags().commutative);
  Elem b = a.element("b");
  std::vector<std::string> row;
  for (Elem y = 0; y < 5; ++y) {
    row.push_back(a.label(a.mult(b, y)));
  }
  CHECK(row == std::vector<std::string>{"0", "c", "b", "c", "b"});
}

TEST_CASE("non-integral 3-chain") {
  auto a = builtin("nonintegral3");
  CHECK_FALSE(a.flags().integral);
  CHECK(a.flags().chain);
  auto neg = negative_cone(a);
  CHECK(neg.size() == 2);
  CHECK(neg.flags().integral);
}

TEST_CASE("residuals agree with the table-scan oracle") {
  for (auto const& name : builtin_names()) {
    auto a = builtin(name);
    for (Elem x = 0; x < a.size(); ++x) {
      for (Elem z = 0; z < a.size(); ++z) {
        CHECK(a.lres(x, z) == oracle::left_residual(a, x, z));
        CHECK(a.rres(z, x) == oracle::right_residual(a, z, x));
      }
    }
  }
}

TEST_CASE("derive_residuals on small chains") {
  auto c2 = builtin("chain2");
  CHECK(c2.lres(c2.element("0"), c2.element("0")) == c2.unit());
  auto l3 = builtin("lukasiewicz3");
  Elem m  = l3.element("m");
  CHECK(l3.mult(m, m) == l3.element("0"));
  CHECK(l3.lres(m, l3.element("0")) == m);
  auto e5 = builtin("example5");
  CHECK(e5.lres(e5.element("b"), e5.element("0")) == e5.element("0"));
}

TEST_CASE("conjugations and absolute values in example5") {
  auto a = builtin("example5");
  Elem A = a.element("a"), B = a.element("b"), Z = a.element("0");
  CHECK(absolute_value(a, A) == A);
  CHECK(absolute_value(a, a.unit()) == a.unit());
  CHECK(conjugate(a, Conjugation::left, B, A) == Z);
  CHECK(conjugate(a, Conjugation::right, A, B) == Z);
  for (Elem x = 0; x < a.size(); ++x) {
    CHECK(conjugate(a, Conjugation::left, a.unit(), x) == a.meet(x, a.unit()));
  }
}

TEST_CASE("term evaluation through laws") {
  auto e5 = builtin("example5");
  CHECK(check_law(e5, parse_law("e = e")).holds);
  CHECK(check_law(e5, catalog_law("SQUARES")).holds);
  auto sem = check_law(e5, catalog_law("SEM1"));
  CHECK_FALSE(sem.holds);
  CHECK(sem.counterexample.size() == 4);
  auto lam = parse_law("(b0\\(a0*b0))&e = e");
  CHECK(lam.num_vars() == 2);
}

TEST_CASE("LP holds on every chain of the corpus") {
  for (auto const& a : build_corpus()) {
    if (a.flags().chain) {
      CHECK_MESSAGE(satisfies(a, "LP"), a.name());
      CHECK_MESSAGE(satisfies(a, "RP"), a.name());
    }
  }
}

TEST_CASE("law catalog") {
  auto lp = catalog_law("LP");
  CHECK(lp.num_vars() == 2);
  auto k = catalog_law("KUHR_IRL");
  CHECK(k.num_vars() == 5);
  CHECK(check_law(builtin("godel3"), k, 5).holds);
  CHECK_THROWS_AS(check_law(builtin("godel3"), k, 4), Error);
  CHECK_THROWS_AS(catalog_law("NOPE"), Error);
  for (auto const& a : build_corpus()) {
    if (a.flags().commutative) {
      CHECK(check_law(a, catalog_law("HAM")).holds);
    }
  }
}

TEST_CASE("direct product and opposite") {
  auto e5 = builtin("example5");
  auto p  = direct_product(e5, e5);
  CHECK(p.size() == 25);
  CHECK(p.flags().integral);
  auto op = opposite(e5);
  CHECK(op.flags().e_cyclic);
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      CHECK(op.mult(x, y) == e5.mult(y, x));
    }
  }
}

TEST_CASE("validation errors") {
  auto raw = builtin("godel3").raw();
  raw.mult[0] = 2;  // 0*0 = e breaks monotonicity and residuation
  std::optional<Error> err;
  CHECK_FALSE(try_validate_algebra(raw, &err).has_value());
  REQUIRE(err.has_value());

  auto cyc = builtin("godel3").raw();
  cyc.leq[2 * 3 + 0] = 1;  // e <= 0 closes a cycle
  CHECK_THROWS_AS(validate_algebra(cyc), Error);
}

TEST_CASE("derived laws hold across the corpus") {
  for (auto const& a : build_corpus()) {
    CHECK_MESSAGE(!derived_law_violation(a).has_value(), a.name());
  }
}

TEST_CASE("example5 satisfies LP and RP") {
  auto e5 = builtin("example5");
  CHECK(satisfies(e5, "LP"));
  CHECK(satisfies(e5, "RP"));
}

TEST_CASE("the example5 table fixes its order") {
  // Every 5-element lattice under every labelling; keep the orders that make
  // the table an integral residuated lattice with a^perp = {b,e} and
  // b^perp = {a,e}.
  auto e5 = builtin("example5");
  std::vector<Elem> mult(25);
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      mult[x * 5 + y] = e5.mult(x, y);
    }
  }
  std::set<std::vector<std::uint8_t>> orders;
  for (auto const& lat : lattices_of_size(5)) {
    std::vector<Elem> pos{0, 1, 2, 3, 4};
    do {
      RawAlgebra raw;
      raw.labels = e5.labels();
      raw.unit   = e5.unit();
      raw.mult   = mult;
      raw.leq.resize(25);
      for (Elem x = 0; x < 5; ++x) {
        for (Elem y = 0; y < 5; ++y) {
          raw.leq[x * 5 + y] = lat.leq(pos[x], pos[y]) ? 1 : 0;
        }
      }
      auto a = try_validate_algebra(raw);
      if (!a || !a->flags().integral) {
        continue;
      }
      if (polar(*a, set_of(*a, "a")) == set_of(*a, "b,e")
          && polar(*a, set_of(*a, "b")) == set_of(*a, "a,e")) {
        orders.insert(raw.leq);
      }
    } while (std::next_permutation(pos.begin(), pos.end()));
  }
  REQUIRE(orders.size() == 1);
  std::vector<std::uint8_t> expected(25);
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      expected[x * 5 + y] = e5.leq(x, y) ? 1 : 0;
    }
  }
  CHECK(*orders.begin() == expected);
}
