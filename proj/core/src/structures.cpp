#include "rlat/structures.hpp"

#include "rlat/convexity.hpp"
#include "rlat/law.hpp"
#include "rlat/spectrum.hpp"

namespace rlat {

  namespace {
    Elem E(std::size_t i) {
      return static_cast<Elem>(i);
    }

    bool is_subalgebra(FiniteResiduatedLattice const& alg, Subset s) {
      if (!s.contains(alg.unit())) {
        return false;
      }
      bool ok = true;
      s.for_each([&](Elem x) {
        s.for_each([&](Elem y) {
          ok = ok && s.contains(alg.mult(x, y)) && s.contains(alg.lres(x, y))
               && s.contains(alg.rres(x, y)) && s.contains(alg.join(x, y))
               && s.contains(alg.meet(x, y));
        });
      });
      return ok;
    }
  }  // namespace

  ClassReport classify(FiniteResiduatedLattice const& alg) {
    ClassReport r;
    r.is_gbl          = satisfies(alg, "GBL");
    r.is_gmv          = satisfies(alg, "GMV");
    r.is_lgroup       = satisfies(alg, "INVERTIBLE");
    r.is_integral     = alg.flags().integral;
    bool const gbl_q  = satisfies(alg, "GBL_Q");
    bool const gmv_q  = satisfies(alg, "GMV_Q");
    check(r.is_gbl == gbl_q, "GBL identity and quasi-identity disagree on " + alg.name());
    check(r.is_gmv == gmv_q, "GMV identity and quasi-identity disagree on " + alg.name());
    check(r.is_lgroup == (alg.size() == 1), "nontrivial finite l-group " + alg.name());
    Elem const e = alg.unit();
    for (std::size_t i = 0; i < alg.size(); ++i) {
      Elem a = E(i);
      if (alg.mult(alg.rres(e, a), a) == e && alg.mult(a, alg.lres(a, e)) == e) {
        r.invertibles.insert(a);
      }
      if (alg.lres(a, e) == e && alg.rres(e, a) == e) {
        r.integrals.insert(a);
      }
    }
    if (r.is_gbl) {
      r.decomposition = gbl_decomposition_check(alg);
    }
    return r;
  }

  bool gbl_decomposition_check(FiniteResiduatedLattice const& alg) {
    if (!satisfies(alg, "GBL")) {
      fail(ErrorKind::NotGBL, alg.name() + " is not a GBL-algebra");
    }
    Elem const e = alg.unit();
    Subset     g, in;
    for (std::size_t i = 0; i < alg.size(); ++i) {
      Elem a = E(i);
      if (alg.mult(alg.rres(e, a), a) == e && alg.mult(a, alg.lres(a, e)) == e) {
        g.insert(a);
      }
      if (alg.lres(a, e) == e && alg.rres(e, a) == e) {
        in.insert(a);
      }
    }
    bool ok = is_subalgebra(alg, g) && is_subalgebra(alg, in)
              && (g & in) == Subset::singleton(e);
    // (g, h) -> gh must be a bijection onto L preserving all operations.
    Subset image;
    for (Elem g1 : g.elements()) {
      for (Elem h1 : in.elements()) {
        Elem p = alg.mult(g1, h1);
        ok     = ok && !image.contains(p);
        image.insert(p);
        for (Elem g2 : g.elements()) {
          for (Elem h2 : in.elements()) {
            Elem q = alg.mult(g2, h2);
            ok     = ok
                 && alg.mult(p, q) == alg.mult(alg.mult(g1, g2), alg.mult(h1, h2))
                 && alg.join(p, q) == alg.mult(alg.join(g1, g2), alg.join(h1, h2))
                 && alg.meet(p, q) == alg.mult(alg.meet(g1, g2), alg.meet(h1, h2))
                 && alg.lres(p, q) == alg.mult(alg.lres(g1, g2), alg.lres(h1, h2))
                 && alg.rres(p, q) == alg.mult(alg.rres(g1, g2), alg.rres(h1, h2));
          }
        }
      }
    }
    ok = ok && image == alg.carrier();
    check(ok, "GBL decomposition fails on " + alg.name());
    check(g == Subset::singleton(e), "finite GBL-algebra with nontrivial l-group part");
    return ok;
  }

  MartinezConditions martinez_conditions(FiniteResiduatedLattice const& alg) {
    auto const         lat = all_convex_subalgebras(alg);
    MartinezConditions c;
    c.cond_i = true;
    for (std::size_t i = 0; i < alg.size(); ++i) {
      Elem        a  = E(i);
      std::size_t ca = lat.index_of(principal_conv(alg, a).members);
      std::size_t pa = lat.index_of(polar(alg, Subset::singleton(a)));
      c.cond_i       = c.cond_i && lat.join(ca, pa) == lat.top();
    }
    auto const primes = prime_nodes(lat);
    c.cond_ii         = true;
    for (auto p : primes) {
      for (auto q : primes) {
        c.cond_ii = c.cond_ii && (p == q || !lat.leq(p, q));
      }
    }
    check(c.cond_i == c.cond_ii, "Martinez conditions disagree on " + alg.name());
    return c;
  }

}  // namespace rlat
