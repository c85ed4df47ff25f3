#include "rlat/normality.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rlat/spectrum.hpp"

namespace rlat {

  namespace {
    Elem E(std::size_t i) {
      return static_cast<Elem>(i);
    }

    constexpr std::array<Conjugation, 2> plain_kinds{Conjugation::left,
                                                     Conjugation::right};
    constexpr std::array<Conjugation, 2> star_kinds{Conjugation::left_star,
                                                    Conjugation::right_star};

    std::optional<std::pair<std::pair<Elem, Elem>, Conjugation>>
    first_escape(FiniteResiduatedLattice const&    alg,
                 Subset                            h,
                 std::array<Conjugation, 2> const& kinds) {
      for (Elem x : h.elements()) {
        for (std::size_t u = 0; u < alg.size(); ++u) {
          for (auto k : kinds) {
            if (!h.contains(conjugate(alg, k, E(u), x))) {
              return std::make_pair(std::make_pair(x, E(u)), k);
            }
          }
        }
      }
      return std::nullopt;
    }

    bool residual_criterion(FiniteResiduatedLattice const& alg, Subset h) {
      Elem const e = alg.unit();
      for (std::size_t a = 0; a < alg.size(); ++a) {
        for (std::size_t b = 0; b < alg.size(); ++b) {
          bool l = h.contains(alg.meet(alg.lres(E(a), E(b)), e));
          bool r = h.contains(alg.meet(alg.rres(E(b), E(a)), e));
          if (l != r) {
            return false;
          }
        }
      }
      return true;
    }

    Subset conjugation_orbit(FiniteResiduatedLattice const&    alg,
                             Subset                            s,
                             std::array<Conjugation, 2> const& kinds) {
      Subset orbit;
      s.for_each([&](Elem x) { orbit.insert(alg.abs(x)); });
      bool grew = true;
      while (grew) {
        grew       = false;
        Subset add = orbit;
        orbit.for_each([&](Elem x) {
          for (std::size_t u = 0; u < alg.size(); ++u) {
            for (auto k : kinds) {
              add.insert(conjugate(alg, k, E(u), x));
            }
          }
        });
        if (add != orbit) {
          orbit = add;
          grew  = true;
        }
      }
      return orbit;
    }

    Subset closure_with(FiniteResiduatedLattice const&    alg,
                        Subset                            s,
                        std::array<Conjugation, 2> const& kinds) {
      Subset cur = convex_closure(alg, s).members;
      while (true) {
        Subset next = convex_closure(alg, conjugation_orbit(alg, cur, kinds)).members;
        if (next == cur) {
          return cur;
        }
        cur = next;
      }
    }

    // Least m in 1..n with base(x)^m <= conj(y, x) for all x, y.
    std::optional<std::size_t>
    least_exponent(FiniteResiduatedLattice const&    alg,
                   std::function<Elem(Elem)> const&  base,
                   Conjugation                       kind) {
      std::size_t const n = alg.size();
      for (std::size_t m = 1; m <= n; ++m) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          Elem p = alg.power(base(E(x)), m);
          for (std::size_t y = 0; y < n && ok; ++y) {
            ok = alg.leq(p, conjugate(alg, kind, E(y), E(x)));
          }
        }
        if (ok) {
          return m;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  NormalityCheck is_normal(FiniteResiduatedLattice const& alg, Subset h) {
    check(is_convex_subalgebra(alg, h),
          alg.format(h) + " is not a convex subalgebra of " + alg.name());
    NormalityCheck r;
    auto           esc = first_escape(alg, h, plain_kinds);
    r.normal           = !esc.has_value();
    if (esc) {
      r.witness      = esc->first;
      r.witness_kind = esc->second;
    }
    bool const by_residuals = residual_criterion(alg, h);
    bool const by_star      = !first_escape(alg, h, star_kinds).has_value();
    check(r.normal == by_residuals && r.normal == by_star,
          "normality criteria disagree on " + alg.format(h) + " in " + alg.name());
    return r;
  }

  Subset normal_closure(FiniteResiduatedLattice const& alg,
                        Subset                         s,
                        ConjugationFamily              family) {
    require_e_cyclic(alg);
    Subset const plain = closure_with(alg, s, plain_kinds);
    Subset const star  = closure_with(alg, s, star_kinds);
    check(plain == star, "NC[" + alg.format(s) + "] depends on the conjugation family");
    check(is_normal(alg, plain).normal, "normal closure is not normal");
    return family == ConjugationFamily::plain ? plain : star;
  }

  std::vector<std::size_t> all_normal(FiniteResiduatedLattice const& alg,
                                      ConvLattice const&             lat) {
    std::vector<std::size_t> out;
    std::vector<bool>        normal(lat.size(), false);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (is_normal(alg, lat.members(i)).normal) {
        out.push_back(i);
        normal[i] = true;
      }
    }
    for (auto i : out) {
      for (auto j : out) {
        check(normal[lat.join(i, j)],
              "join of normal convex subalgebras is not normal in " + alg.name());
        check(normal[lat.meet(i, j)],
              "meet of normal convex subalgebras is not normal in " + alg.name());
      }
    }
    return out;
  }

  CongruenceOracle congruences_oracle(FiniteResiduatedLattice const& alg) {
    std::size_t const n = alg.size();
    CongruenceOracle  r;
    if (n <= congruence_oracle_limit) {
      r.exhaustive = true;
      // Restricted growth strings enumerate every partition once.
      std::vector<std::size_t> rgs(n, 0);
      std::vector<std::size_t> mx(n, 0);
      while (true) {
        Partition p(rgs);
        if (is_congruence(alg, p)) {
          r.congruences.push_back(p);
        }
        std::size_t i = n - 1;
        while (i >= 1 && rgs[i] == mx[i - 1] + 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++rgs[i];
        mx[i] = std::max(mx[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          rgs[j] = 0;
          mx[j]  = mx[i];
        }
      }
    } else {
      std::set<Partition> found{Partition::discrete(n)};
      std::vector<Partition> principal;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          principal.push_back(congruence_generated(alg, {{E(a), E(b)}}));
        }
      }
      found.insert(principal.begin(), principal.end());
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Partition> cur(found.begin(), found.end());
        for (auto const& p : cur) {
          for (auto const& q : principal) {
            // the join of two congruences is the equivalence join
            if (found.insert(partition_join(p, q)).second) {
              grew = true;
            }
          }
        }
      }
      r.congruences.assign(found.begin(), found.end());
    }
    std::sort(r.congruences.begin(), r.congruences.end());
    return r;
  }

  Partition theta_partition(FiniteResiduatedLattice const& alg, Subset h) {
    std::size_t const        n = alg.size();
    std::vector<std::size_t> ids(n);
    for (std::size_t a = 0; a < n; ++a) {
      ids[a] = a;
      for (std::size_t b = 0; b < a; ++b) {
        Elem d = alg.meet(alg.meet(alg.lres(E(a), E(b)), alg.lres(E(b), E(a))),
                          alg.unit());
        if (h.contains(d)) {
          ids[a] = ids[b];
          break;
        }
      }
    }
    return Partition(std::move(ids));
  }

  std::size_t check_normal_congruence_bijection(FiniteResiduatedLattice const& alg,
                                                ConvLattice const&             lat) {
    auto const normal = all_normal(alg, lat);
    auto const oracle = congruences_oracle(alg);
    check(normal.size() == oracle.congruences.size(),
          "normal subalgebra count " + std::to_string(normal.size())
              + " differs from congruence count "
              + std::to_string(oracle.congruences.size()) + " in " + alg.name());
    std::set<Partition> seen;
    for (auto i : normal) {
      Subset    h     = lat.members(i);
      Partition theta = theta_partition(alg, h);
      check(is_congruence(alg, theta), "Theta_H is not a congruence");
      check(theta.block_of(alg.unit()) == h, "[e] of Theta_H differs from H");
      check(std::binary_search(oracle.congruences.begin(), oracle.congruences.end(),
                               theta),
            "Theta_H missing from the congruence oracle");
      seen.insert(theta);
    }
    for (auto const& c : oracle.congruences) {
      Subset cls = c.block_of(alg.unit());
      check(is_convex_subalgebra(alg, cls) && is_normal(alg, cls).normal,
            "[e] of a congruence is not a normal convex subalgebra");
      check(theta_partition(alg, cls) == c, "Theta_[e] differs from the congruence");
    }
    check(seen.size() == normal.size(), "H -> Theta_H is not injective");
    return normal.size();
  }

  Quotient quotient(FiniteResiduatedLattice const& alg, Subset h) {
    if (!is_convex_subalgebra(alg, h) || !is_normal(alg, h).normal) {
      fail(ErrorKind::NotNormal,
           alg.format(h) + " is not a normal convex subalgebra of " + alg.name());
    }
    Partition const   theta = theta_partition(alg, h);
    std::size_t const n = alg.size(), k = theta.num_blocks();
    std::vector<Elem> rep(k);
    for (std::size_t x = n; x-- > 0;) {
      rep[theta.block(E(x))] = E(x);
    }
    auto proj = [&](Elem x) { return static_cast<Elem>(theta.block(x)); };

    RawAlgebra raw;
    raw.name = alg.name() + "/" + alg.format(h);
    raw.leq.assign(k * k, 0);
    raw.mult.assign(k * k, 0);
    std::vector<Elem> lres(k * k), rres(k * k);
    for (std::size_t b = 0; b < k; ++b) {
      raw.labels.push_back("[" + alg.label(rep[b]) + "]");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Elem x = E(a), y = E(b);
        std::size_t i = proj(x) * k + proj(y);
        Elem m = proj(alg.mult(x, y)), l = proj(alg.lres(x, y)),
             r = proj(alg.rres(x, y));
        bool const is_rep = rep[proj(x)] == x && rep[proj(y)] == y;
        if (is_rep) {
          raw.mult[i] = m;
          lres[i]     = l;
          rres[i]     = r;
          raw.leq[i]  = proj(alg.join(x, y)) == proj(y);
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Elem x = E(a), y = E(b);
        std::size_t i = proj(x) * k + proj(y);
        check(raw.mult[i] == proj(alg.mult(x, y)) && lres[i] == proj(alg.lres(x, y))
                  && rres[i] == proj(alg.rres(x, y))
                  && (raw.leq[i] != 0) == (proj(alg.join(x, y)) == proj(y)),
              "quotient tables depend on the representatives");
      }
    }
    raw.lres = std::move(lres);
    raw.rres = std::move(rres);
    raw.unit = proj(alg.unit());
    Quotient q{validate_algebra(std::move(raw)), {}};
    for (std::size_t a = 0; a < n; ++a) {
      q.projection.push_back(proj(E(a)));
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Elem x = E(a), y = E(b), px = proj(x), py = proj(y);
        check(q.algebra.join(px, py) == proj(alg.join(x, y))
                  && q.algebra.meet(px, py) == proj(alg.meet(x, y)),
              "projection does not preserve the lattice operations");
      }
    }
    if (alg.flags().e_cyclic && h != alg.carrier()) {
      auto const lat = all_convex_subalgebras(alg);
      bool const prime = lat.lattice().is_meet_irreducible(E(lat.index_of(h)));
      if (prime && (satisfies(alg, "LP") || satisfies(alg, "RP"))) {
        check(q.algebra.flags().chain,
              "quotient by a normal prime is not a chain in " + alg.name());
      }
    }
    return q;
  }

  HamiltonianDegree hamiltonian_degree(FiniteResiduatedLattice const& alg) {
    require_e_cyclic(alg);
    Elem const        e = alg.unit();
    HamiltonianDegree d;
    auto meet_e = [&](Elem x) { return alg.meet(x, e); };
    auto abs    = [&](Elem x) { return alg.abs(x); };
    d.m         = least_exponent(alg, meet_e, Conjugation::left);
    d.n         = least_exponent(alg, meet_e, Conjugation::right);
    d.abs_m     = least_exponent(alg, abs, Conjugation::left);
    d.abs_n     = least_exponent(alg, abs, Conjugation::right);
    d.star_m    = least_exponent(alg, meet_e, Conjugation::left_star);
    d.star_n    = least_exponent(alg, meet_e, Conjugation::right_star);

    auto const lat     = all_convex_subalgebras(alg);
    d.all_nodes_normal = true;
    for (auto const& h : lat.nodes()) {
      d.all_nodes_normal = d.all_nodes_normal && is_normal(alg, h).normal;
    }
    bool const abs_verdict = d.abs_m && d.abs_n;
    check(d.hamiltonian() == abs_verdict && d.hamiltonian() == d.all_nodes_normal,
          "Hamiltonian criteria disagree on " + alg.name());
    return d;
  }

  std::string_view to_string(SemilinearRoute r) noexcept {
    switch (r) {
      case SemilinearRoute::identity:
        return "identity";
      case SemilinearRoute::spectral:
        return "spectral";
      case SemilinearRoute::bruteforce:
        return "bruteforce";
      case SemilinearRoute::all:
        return "all";
    }
    return "?";
  }

  SemilinearRoute semilinear_route(std::string_view name) {
    for (auto r : {SemilinearRoute::identity, SemilinearRoute::spectral,
                   SemilinearRoute::bruteforce, SemilinearRoute::all}) {
      if (to_string(r) == name) {
        return r;
      }
    }
    fail(ErrorKind::UnknownName, "unknown route '" + std::string(name) + "'");
  }

  namespace {
    bool chain_quotient(FiniteResiduatedLattice const& alg, Subset h) {
      Elem const e = alg.unit();
      for (std::size_t a = 0; a < alg.size(); ++a) {
        for (std::size_t b = 0; b < alg.size(); ++b) {
          if (!h.contains(alg.meet(alg.lres(E(a), E(b)), e))
              && !h.contains(alg.meet(alg.lres(E(b), E(a)), e))) {
            return false;
          }
        }
      }
      return true;
    }

    // Smallest, then lexicographically least, family with meet {e}.
    std::optional<std::vector<std::size_t>>
    least_separating_family(ConvLattice const&              lat,
                            std::vector<std::size_t> const& cand,
                            Subset                          unit) {
      Subset all = lat.members(lat.top());
      for (auto c : cand) {
        all = all & lat.members(c);
      }
      if (all != unit) {
        return std::nullopt;
      }
      std::size_t const        m = cand.size();
      std::vector<std::size_t> pick;
      std::function<bool(std::size_t, std::size_t, Subset)> go =
          [&](std::size_t start, std::size_t left, Subset acc) {
            if (left == 0) {
              return acc == unit;
            }
            for (std::size_t i = start; i + left <= m; ++i) {
              pick.push_back(cand[i]);
              if (go(i + 1, left - 1, acc & lat.members(cand[i]))) {
                return true;
              }
              pick.pop_back();
            }
            return false;
          };
      for (std::size_t k = 0; k <= m; ++k) {
        pick.clear();
        if (go(0, k, lat.members(lat.top()))) {
          return pick;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  SemilinearResult is_semilinear(FiniteResiduatedLattice const& alg,
                                 SemilinearRoute                route) {
    require_e_cyclic(alg);
    SemilinearResult r;
    r.lp = satisfies(alg, "LP");
    r.rp = satisfies(alg, "RP");
    bool const prelinear = r.lp || r.rp;
    bool const all       = route == SemilinearRoute::all;
    auto const lat       = all_convex_subalgebras(alg);
    Subset const unit    = Subset::singleton(alg.unit());

    std::optional<bool> identity, spectral, brute;

    if (all || route == SemilinearRoute::identity) {
      auto const sem1 = check_law(alg, catalog_law("SEM1"));
      identity        = sem1.holds;
      r.verdicts["SEM1"] = sem1.holds;
      if (!sem1.holds) {
        r.counterexample = sem1;
      }
      for (auto const* name : {"SEM2", "SEM3A", "SEM3B", "SEM_ALT_L", "SEM_ALT_R",
                               "SEM_ALT_L_STAR", "SEM_ALT_R_STAR"}) {
        bool v           = satisfies(alg, name);
        r.verdicts[name] = v;
        check(v == *identity, std::string(name) + " and SEM1 disagree on " + alg.name());
      }
      bool const q      = satisfies(alg, "SEMQ");
      bool const q_star = satisfies(alg, "SEMQ_STAR");
      r.verdicts["SEMQ"]      = q;
      r.verdicts["SEMQ_STAR"] = q_star;
      check(q == q_star, "SEMQ and SEMQ_STAR disagree on " + alg.name());
      r.verdicts["quasi"] = prelinear && q;
      if (prelinear) {
        check(q == *identity,
              "quasi-identity route and SEM1 disagree on " + alg.name());
      }
    }

    auto const minimal = minimal_prime_nodes(alg, lat);
    for (auto p : minimal) {
      if (!is_normal(alg, lat.members(p)).normal) {
        r.non_normal_minimal_primes.push_back(p);
      }
    }

    bool run_brute = all || route == SemilinearRoute::bruteforce;
    if (all || route == SemilinearRoute::spectral) {
      if (prelinear) {
        spectral = r.non_normal_minimal_primes.empty();
        r.verdicts["spectral"] = *spectral;
        bool polars_normal     = true;
        for (std::size_t i = 0; i < lat.size(); ++i) {
          polars_normal =
              polars_normal && is_normal(alg, polar(alg, lat.members(i))).normal;
        }
        r.verdicts["polars_normal"] = polars_normal;
        check(polars_normal == *spectral,
              "polar and minimal prime criteria disagree on " + alg.name());
        if (*spectral) {
          r.decomposition = minimal;
          if (r.decomposition.empty()) {
            r.decomposition.push_back(0);
          }
          for (auto p : r.decomposition) {
            check(quotient(alg, lat.members(p)).algebra.flags().chain,
                  "minimal prime quotient is not a chain");
          }
        }
      } else {
        r.notices.push_back(
            "neither prelinearity law holds; spectral route replaced by brute force");
        run_brute = true;
      }
    }

    if (run_brute) {
      std::vector<std::size_t> cand;
      for (std::size_t i = 0; i < lat.size(); ++i) {
        Subset h = lat.members(i);
        if (is_normal(alg, h).normal && chain_quotient(alg, h)) {
          cand.push_back(i);
        }
      }
      auto fam = least_separating_family(lat, cand, unit);
      brute    = fam.has_value();
      r.verdicts["bruteforce"] = *brute;
      if (fam && r.decomposition.empty()) {
        r.decomposition = *fam;
      }
      if (fam) {
        for (auto p : *fam) {
          check(quotient(alg, lat.members(p)).algebra.flags().chain,
                "selected quotient is not a chain");
        }
      }
    }

    std::optional<bool> verdict;
    for (auto v : {identity, spectral, brute}) {
      if (v) {
        check(!verdict || *verdict == *v,
              "semilinearity routes disagree on " + alg.name());
        verdict = v;
      }
    }
    r.semilinear = verdict.value_or(false);
    if (!r.semilinear) {
      r.decomposition.clear();
    }
    if (r.semilinear) {
      for (std::size_t i = 0; i < lat.size(); ++i) {
        Subset p = polar(alg, lat.members(i));
        check(is_normal(alg, p).normal,
              "semilinear algebra " + alg.name() + " has a non-normal polar");
      }
    }
    return r;
  }

  bool kuhr_integral_check(FiniteResiduatedLattice const& alg) {
    if (!alg.flags().integral) {
      fail(ErrorKind::NotIntegral, alg.name() + " is not integral");
    }
    bool const kuhr = check_law(alg, catalog_law("KUHR_IRL"), 5).holds;
    bool const sem  = is_semilinear(alg, SemilinearRoute::identity).semilinear;
    check(kuhr == sem, "implicational identity disagrees with SEM1 on " + alg.name());
    return kuhr;
  }

  std::optional<std::string>
  conjugation_interleaving_violation(FiniteResiduatedLattice const& alg) {
    std::size_t const n = alg.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Elem x = E(a), y = E(b);
        auto c = [&](Conjugation k, Elem u) { return conjugate(alg, k, u, x); };
        std::string const at = " at x=" + alg.label(x) + ", y=" + alg.label(y);
        if (!alg.leq(c(Conjugation::left_star, alg.mult(x, y)), c(Conjugation::left, y))) {
          return "lam*_{xy}(x) <= lam_y(x) fails" + at;
        }
        if (!alg.leq(c(Conjugation::left, alg.lres(x, y)), c(Conjugation::left_star, y))) {
          return "lam_{x\\y}(x) <= lam*_y(x) fails" + at;
        }
        if (!alg.leq(c(Conjugation::right_star, alg.mult(y, x)), c(Conjugation::right, y))) {
          return "rho*_{yx}(x) <= rho_y(x) fails" + at;
        }
        if (!alg.leq(c(Conjugation::right, alg.rres(y, x)), c(Conjugation::right_star, y))) {
          return "rho_{y/x}(x) <= rho*_y(x) fails" + at;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace rlat
