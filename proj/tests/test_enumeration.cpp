#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace rlat;

namespace {
  std::size_t integral_count(FiniteLattice const& lat) {
    SearchSpec s;
    s.lattice          = lat;
    s.require_integral = true;
    return expansions(s).size();
  }
}  // namespace

TEST_CASE("expansions of small lattices") {
  CHECK(integral_count(chain_lattice(2)) == 1);
  CHECK(integral_count(chain_lattice(3)) == 2);
  CHECK(integral_count(testing::n5()) == 0);
  SearchSpec any;
  any.lattice = chain_lattice(3);
  CHECK(expansions(any).size() == 3);
}

TEST_CASE("lattice counts") {
  std::vector<std::size_t> const counts{1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    CHECK_MESSAGE(lattices_of_size(n).size() == counts[n - 1], n);
  }
  CHECK(all_lattices(5).size() == 1 + 1 + 1 + 2 + 5);
}

TEST_CASE("integral residuated lattice counts") {
  // published counts of integral residuated lattices by size, with the
  // commutative ones in parentheses: 1(1) 1(1) 2(2) 9(7) 49(26) 364(129)
  std::vector<std::size_t> const total{1, 1, 2, 9, 49, 364};
  std::vector<std::size_t> const comm{1, 1, 2, 7, 26, 129};
  for (std::size_t n = 1; n <= total.size(); ++n) {
    std::size_t t = 0, c = 0;
    for (auto const& lat : lattices_of_size(n)) {
      SearchSpec s;
      s.lattice          = lat;
      s.require_integral = true;
      for (auto const& a : expansions(s)) {
        ++t;
        c += a.flags().commutative ? 1 : 0;
      }
    }
    CHECK_MESSAGE(t == total[n - 1], n);
    CHECK_MESSAGE(c == comm[n - 1], n);
  }
}

TEST_CASE("pruned search agrees with the naive search") {
  for (std::size_t n = 1; n <= naive_size_limit; ++n) {
    for (auto const& lat : lattices_of_size(n)) {
      for (bool integral : {true, false}) {
        SearchSpec s;
        s.lattice          = lat;
        s.require_integral = integral;
        auto fast  = expansions(s);
        auto naive = expansions_naive(s);
        REQUIRE(fast.size() == naive.size());
        std::vector<std::string> a, b;
        for (auto const& x : fast) {
          a.push_back(canonical_form(x));
        }
        for (auto const& x : naive) {
          b.push_back(canonical_form(x));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("law filters") {
  SearchSpec s;
  s.lattice          = chain_lattice(4);
  s.require_integral = true;
  s.laws             = {"COMMUTATIVE"};
  auto comm          = expansions(s);
  for (auto const& a : comm) {
    CHECK(a.flags().commutative);
  }
  s.laws.clear();
  CHECK(comm.size() < expansions(s).size());
}

TEST_CASE("isomorphism") {
  auto e5 = builtin("example5");
  CHECK(are_isomorphic(e5, relabel(e5, {4, 2, 1, 3, 0})));
  CHECK_FALSE(are_isomorphic(builtin("godel3"), builtin("lukasiewicz3")));
  // swapping a and b is an order automorphism that turns the table into
  // its transpose, so example5 is isomorphic to its opposite
  auto op = opposite(e5);
  CHECK(are_isomorphic(e5, op));
  std::vector<Elem> swap{0, 2, 1, 3, 4};
  for (Elem x = 0; x < 5; ++x) {
    for (Elem y = 0; y < 5; ++y) {
      CHECK(e5.leq(x, y) == e5.leq(swap[x], swap[y]));
      CHECK(swap[e5.mult(x, y)] == e5.mult(swap[y], swap[x]));
    }
  }
  auto g3 = builtin("godel3xchain2");
  CHECK(are_isomorphic(opposite(opposite(e5)), e5));
  CHECK(are_isomorphic(opposite(g3), g3));
  std::size_t chiral = 0;
  for (auto const& a : build_corpus()) {
    if (!are_isomorphic(a, opposite(a))) {
      ++chiral;
      CHECK(canonical_form(a) != canonical_form(opposite(a)));
    }
  }
  CHECK(chiral > 0);
  CHECK(canonical_form(canonical_relabeling(e5)) == canonical_form(e5));
}

TEST_CASE("corpus is deterministic across runs and threads") {
  CorpusOptions one;
  CorpusOptions four;
  four.threads = 4;
  auto a       = build_corpus(one);
  auto b       = build_corpus(one);
  auto c       = build_corpus(four);
  CHECK(corpus_digest(a) == corpus_digest(b));
  CHECK(corpus_digest(a) == corpus_digest(c));
  CHECK(a.size() == 72);
  std::set<std::string> forms;
  for (auto const& x : a) {
    CHECK(forms.insert(canonical_form(x)).second);
  }
}
