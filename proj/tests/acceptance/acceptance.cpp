// Acceptance harness: one PASS/FAIL line per criterion. Exit status is
// nonzero when any selected criterion fails.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "oracle.hpp"
#include "rlat/rlat.hpp"

using namespace rlat;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
      if (!cond && pass) {
        pass   = false;
        detail = what;
      }
    }
  };

  std::vector<FiniteResiduatedLattice> const& corpus() {
    static auto const c = build_corpus();
    return c;
  }

  template <typename F>
  void for_cyclic(F&& f) {
    for (auto const& a : corpus()) {
      if (a.flags().e_cyclic) {
        f(a);
      }
    }
  }

  Subset S(FiniteResiduatedLattice const& alg, std::initializer_list<char const*> labels) {
    Subset s;
    for (auto l : labels) {
      s.insert(alg.element(l));
    }
    return s;
  }

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  Outcome corpus_construction() {
    Outcome o;
    auto    t0 = std::chrono::steady_clock::now();
    auto    a  = build_corpus();
    double  t  = seconds_since(t0);
    auto    b  = build_corpus();
    CorpusOptions threaded;
    threaded.threads = 4;
    auto c           = build_corpus(threaded);
    o.require(t < 300, "corpus took " + std::to_string(t) + "s");
    o.require(corpus_digest(a) == corpus_digest(b), "digest differs between runs");
    o.require(corpus_digest(a) == corpus_digest(c), "digest differs with 4 threads");
    std::size_t integral_small = 0;
    for (auto const& x : a) {
      integral_small += x.flags().integral ? 1 : 0;
    }
    // every integral expansion of every lattice of size <= 5 is present
    std::size_t expected = 0;
    for (auto const& lat : all_lattices(5)) {
      SearchSpec s;
      s.lattice          = lat;
      s.require_integral = true;
      expected += expansions(s).size();
    }
    o.require(integral_small >= expected, "integral algebras missing from the corpus");
    std::ostringstream d;
    d << a.size() << " algebras, digest " << corpus_digest(a) << ", " << t << "s";
    if (o.pass) {
      o.detail = d.str();
    }
    return o;
  }

  Outcome convex_distributive() {
    Outcome o;
    std::size_t n = 0;
    for_cyclic([&](FiniteResiduatedLattice const& a) {
      ++n;
      auto lat = all_convex_subalgebras(a);
      o.require(lat.lattice().is_distributive(), a.name() + ": C(L) not distributive");
      o.require(oracle::is_distributive(oracle::convex_subalgebras(a)),
                a.name() + ": oracle C(L) not distributive");
      for (Elem x = 0; x < a.size(); ++x) {
        for (Elem y = 0; y < a.size(); ++y) {
          auto cx = lat.index_of(principal_conv(a, x).members);
          auto cy = lat.index_of(principal_conv(a, y).members);
          auto mj = conv_meet_join_check(a, x, y);
          o.require(mj.meet == lat.members(lat.meet(cx, cy)), a.name() + ": meet equality");
          o.require(mj.join == lat.members(lat.join(cx, cy)), a.name() + ": join equality");
        }
      }
      for (auto h : lat.nodes()) {
        o.require(convex_closure(a, h & a.negative_elements()).members == h,
                  a.name() + ": H != C[H^-]");
      }
    });
    if (o.pass) {
      o.detail = std::to_string(n) + " algebras";
    }
    return o;
  }

  Outcome theta_embedding_check() {
    Outcome o;
    for_cyclic([&](FiniteResiduatedLattice const& a) {
      auto lat = all_convex_subalgebras(a);
      auto r   = theta_embedding(a, lat);
      o.require(r.injective && r.order_preserving && r.joins_preserved,
                a.name() + ": Theta embedding");
      auto lc = oracle::lattice_congruences(a);
      for (auto h : lat.nodes()) {
        auto const  theta = theta_of(a, h);
        auto const& ids   = theta.block_ids();
        std::vector<int> v(ids.begin(), ids.end());
        o.require(std::find(lc.begin(), lc.end(), v) != lc.end(),
                  a.name() + ": Theta_H not a lattice congruence");
      }
    });
    return o;
  }

  Outcome prime_conditions() {
    Outcome     o;
    std::string witness;
    for_cyclic([&](FiniteResiduatedLattice const& a) {
      auto lat = all_convex_subalgebras(a);
      bool lp  = satisfies(a, "LP");
      for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
        auto pc = prime_characterization_check(a, lat, lat.members(i));
        if (lp) {
          bool agree = pc.meet_irreducible == pc.abs_join_in
                       && pc.meet_irreducible == pc.abs_join_unit
                       && pc.meet_irreducible == pc.residual_in
                       && pc.meet_irreducible == pc.chain_above;
          o.require(agree, a.name() + ": prime conditions disagree under LP");
        } else if (pc.meet_irreducible != pc.residual_in && witness.empty()) {
          witness = a.name() + " at " + a.format(lat.members(i));
        }
      }
    });
    o.require(!witness.empty(), "corpus contains no LP-violating witness");
    if (o.pass) {
      o.detail = "split witness: " + witness;
    }
    return o;
  }

  Outcome minimal_primes() {
    Outcome o;
    for_cyclic([&](FiniteResiduatedLattice const& a) {
      auto   lat  = all_convex_subalgebras(a);
      Subset meet = a.carrier();
      for (auto i : minimal_prime_nodes(a, lat)) {
        meet = meet & lat.members(i);
      }
      o.require(meet == Subset::singleton(a.unit()), a.name() + ": minimal primes meet");
      for (auto i : prime_nodes(lat)) {
        auto r = minimal_prime_characterization(a, lat, lat.members(i));
        o.require(r.minimal == r.polar_not_inside && r.minimal == r.union_of_polars,
                  a.name() + ": three-way equivalence");
      }
      for (auto h : lat.nodes()) {
        o.require(polar_prime_meet(a, lat, h) == polar(a, h), a.name() + ": polar formula");
        o.require(polar(a, h).bits() == oracle::pseudocomplement(a, h.bits()),
                  a.name() + ": polar differs from the oracle");
      }
      o.require(negcone_ideal_correspondence(a, lat).ok(), a.name() + ": ideal-filter bijection");
    });
    return o;
  }

  Outcome semilinearity_routes() {
    Outcome     o;
    std::size_t prelinear = 0, integral = 0;
    for_cyclic([&](FiniteResiduatedLattice const& a) {
      SemilinearResult r;
      try {
        r = is_semilinear(a);
      } catch (Error const& e) {
        o.require(false, a.name() + ": " + e.what());
        return;
      }
      o.require(r.semilinear == oracle::semilinear(a), a.name() + ": differs from the oracle");
      if (r.lp || r.rp) {
        ++prelinear;
        for (auto const& [route, v] : r.verdicts) {
          o.require(v == r.semilinear, a.name() + ": route " + route + " disagrees");
        }
      }
      if (a.flags().integral) {
        ++integral;
        o.require(kuhr_integral_check(a) == r.semilinear, a.name() + ": Kuhr identity disagrees");
      }
    });
    if (o.pass) {
      o.detail = std::to_string(prelinear) + " prelinear, " + std::to_string(integral)
                 + " integral";
    }
    return o;
  }

  Outcome normal_congruences() {
    Outcome     o;
    std::size_t n = 0;
    auto        run = [&](FiniteResiduatedLattice const& a) {
      if (!a.flags().e_cyclic || a.size() > congruence_oracle_limit) {
        return;
      }
      ++n;
      auto lat = all_convex_subalgebras(a);
      o.require(all_normal(a, lat).size() == oracle::congruences(a).size(),
                a.name() + ": |NC(L)| != |Con(L)|");
    };
    for (auto const& a : corpus()) {
      if (a.size() <= 6) {
        run(a);
      }
    }
    for (auto const& name : builtin_names()) {
      run(builtin(name));
    }
    if (o.pass) {
      o.detail = std::to_string(n) + " algebras";
    }
    return o;
  }

  Outcome example_regression() {
    Outcome o;
    auto    a   = builtin("example5");
    auto    lat = all_convex_subalgebras(a);
    o.require(lat.size() == 4, "C(L) does not have 4 nodes");
    o.require(polar(a, S(a, {"a"})) == S(a, {"b", "e"}), "a^perp");
    o.require(polar(a, S(a, {"b"})) == S(a, {"a", "e"}), "b^perp");
    Elem A = a.element("a"), B = a.element("b"), Z = a.element("0");
    o.require(conjugate(a, Conjugation::left, B, A) == Z, "lambda_b(a)");
    o.require(conjugate(a, Conjugation::right, A, B) == Z, "rho_a(b)");
    o.require(!hamiltonian_degree(a).hamiltonian(), "Hamiltonian");
    o.require(!is_semilinear(a).semilinear, "semilinear");
    o.require(satisfies(a, "SQUARES"), "x^2|y^2 = (x|y)^2 fails");
    auto nn = all_normal(a, lat);
    o.require(nn.size() == 2 && lat.members(nn[0]) == S(a, {"e"})
                  && lat.members(nn[1]) == a.carrier(),
              "NC(L) != {{e}, L}");
    return o;
  }

  Outcome bn_witnesses() {
    Outcome               o;
    std::vector<Rational> grid;
    for (auto q : {"-2", "-1", "-1/2", "-1/3", "0", "1/3", "1/2", "1", "2"}) {
      grid.push_back(parse_rational(q));
    }
    auto        t0 = std::chrono::steady_clock::now();
    std::string notes;
    for (std::uint32_t n : {2U, 3U, 5U}) {
      for (bool mirror : {false, true}) {
        auto        r   = bn_verify(n, grid, mirror);
        std::string tag = std::string(mirror ? "B*_" : "B_") + std::to_string(n);
        o.require(r.witness_equals_power, tag + ": u\\(g*u) != g^n");
        o.require(r.power_strict, tag + ": g^n not below g^(n-1)");
        o.require(!r.residuation_failure, tag + ": residuation " + r.residuation_failure.value_or(""));
        o.require(!r.ham_failure, tag + ": HAM(n,1) " + r.ham_failure.value_or(""));
        if (r.second_exponent) {
          notes += (notes.empty() ? "" : ", ") + tag + " sample in H(" + std::to_string(
                       mirror ? *r.second_exponent : n) + "," + std::to_string(
                       mirror ? n : *r.second_exponent) + ")";
        }
      }
    }
    double t = seconds_since(t0);
    o.require(t < 1.0, "took " + std::to_string(t) + "s");
    o.detail += (o.detail.empty() ? "" : "; ") + notes;
    return o;
  }

  Outcome n5_impossible() {
    Outcome            o;
    std::ostringstream out, err;
    int code = cli::run_cli({"enumerate", "--lattice", RLAT_N5_FILE, "--integral"}, out, err);
    o.require(code == 0, "exit code " + std::to_string(code));
    o.require(out.str() == "0 models\n", "output: " + out.str());
    return o;
  }

  Outcome enumeration_sanity() {
    Outcome                        o;
    std::vector<std::size_t> const counts{1, 1, 1, 2, 5, 15, 53};
    for (std::size_t n = 1; n <= 7; ++n) {
      auto got = lattices_of_size(n).size();
      o.require(got == counts[n - 1],
                "size " + std::to_string(n) + ": " + std::to_string(got) + " lattices");
    }
    SearchSpec s;
    s.lattice          = chain_lattice(3);
    s.require_integral = true;
    o.require(expansions(s).size() == 2, "3-chain integral expansions != 2");
    return o;
  }

  Outcome martinez() {
    Outcome o;
    for_cyclic([&](FiniteResiduatedLattice const& a) {
      auto m = martinez_conditions(a);
      o.require(m.cond_i == m.cond_ii, a.name() + ": (i) and (ii) differ");
    });
    auto e = martinez_conditions(builtin("example5"));
    o.require(e.cond_i && e.cond_ii, "example5 fails a condition");
    auto g = martinez_conditions(builtin("godel3"));
    o.require(!g.cond_i && !g.cond_ii, "godel3 satisfies a condition");
    return o;
  }

  struct Criterion {
    char const*            title;
    std::function<Outcome()> run;
  };

  std::vector<Criterion> const criteria{
      {"corpus construction", corpus_construction},
      {"convex subalgebra lattice distributive", convex_distributive},
      {"Theta_H embedding", theta_embedding_check},
      {"prime characterizations", prime_conditions},
      {"minimal primes, polars, ideals", minimal_primes},
      {"semilinearity routes agree", semilinearity_routes},
      {"normal subalgebras vs congruences", normal_congruences},
      {"5-element example regression", example_regression},
      {"B_n witnesses", bn_witnesses},
      {"pentagon has no integral expansion", n5_impossible},
      {"enumeration sanity", enumeration_sanity},
      {"Martinez conditions", martinez},
  };

}  // namespace

int main(int argc, char** argv) {
  CLI::App         app{"rlat acceptance criteria"};
  std::vector<int> which;
  app.add_option("--criterion", which, "run only these (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) {
      which.push_back(i);
    }
  }
  int failures = 0;
  for (int i : which) {
    auto const& c = criteria[static_cast<std::size_t>(i - 1)];
    Outcome     o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i << " (" << c.title << "): " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) {
      std::cout << " - " << o.detail;
    }
    std::cout << "\n";
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
