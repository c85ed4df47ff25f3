#include "rlat/spectrum.hpp"

#include <algorithm>

#include "rlat/law.hpp"

namespace rlat {

  namespace {
    Subset polar_raw(FiniteResiduatedLattice const& alg, Subset x) {
      Subset out;
      for (std::size_t i = 0; i < alg.size(); ++i) {
        auto a  = static_cast<Elem>(i);
        Elem aa = alg.abs(a);
        if (x.all_of([&](Elem y) {
              return alg.join(aa, alg.abs(y)) == alg.unit();
            })) {
          out.insert(a);
        }
      }
      return out;
    }

    bool is_chain(ConvLattice const& lat, std::vector<std::size_t> const& ns) {
      for (auto i : ns) {
        for (auto j : ns) {
          if (!lat.leq(i, j) && !lat.leq(j, i)) {
            return false;
          }
        }
      }
      return true;
    }

    Elem E(std::size_t i) {
      return static_cast<Elem>(i);
    }
  }  // namespace

  Subset polar(FiniteResiduatedLattice const& alg, Subset x) {
    require_e_cyclic(alg);
    Subset out = polar_raw(alg, x);
    check(out == polar_raw(alg, convex_closure(alg, x).members),
          "X^perp differs from C[X]^perp");
    return out;
  }

  Subset rel_pseudocomplement(FiniteResiduatedLattice const& alg,
                              ConvLattice const&             lat,
                              Subset                         x,
                              Subset                         y) {
    require_e_cyclic(alg);
    Subset elementwise;
    for (std::size_t i = 0; i < alg.size(); ++i) {
      Elem aa = alg.abs(E(i));
      if (x.all_of([&](Elem z) { return y.contains(alg.join(aa, alg.abs(z))); })) {
        elementwise.insert(E(i));
      }
    }
    std::size_t const xi = lat.index_of(x), yi = lat.index_of(y);
    std::optional<std::size_t> best;
    for (std::size_t z = 0; z < lat.size(); ++z) {
      if (lat.leq(lat.meet(xi, z), yi)) {
        if (!best || lat.leq(*best, z)) {
          best = z;
        }
      }
    }
    // best is the largest candidate only if every candidate is below it.
    for (std::size_t z = 0; z < lat.size(); ++z) {
      if (lat.leq(lat.meet(xi, z), yi)) {
        check(lat.leq(z, *best), "X -> Y has no maximum in the lattice");
      }
    }
    check(lat.members(*best) == elementwise,
          "element-wise X -> Y differs from the lattice computation");
    return elementwise;
  }

  std::vector<std::size_t> prime_nodes(ConvLattice const& lat, bool include_top) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (lat.lattice().is_meet_irreducible(E(i))
          || (include_top && i == lat.top())) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> minimal_prime_nodes(FiniteResiduatedLattice const& alg,
                                               ConvLattice const&             lat) {
    auto                     ps = prime_nodes(lat);
    std::vector<std::size_t> out;
    for (auto p : ps) {
      bool minimal = std::none_of(ps.begin(), ps.end(), [&](std::size_t q) {
        return q != p && lat.leq(q, p);
      });
      if (minimal) {
        out.push_back(p);
      }
    }
    Subset meet = alg.carrier();
    for (auto p : out) {
      meet = meet & lat.members(p);
    }
    check(meet == Subset::singleton(alg.unit()) || out.empty(),
          "minimal primes do not intersect to {e}");
    check(!out.empty() || alg.size() == 1, "no minimal primes");
    return out;
  }

  std::vector<std::size_t> value_nodes(ConvLattice const& lat, Elem a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (lat.members(i).contains(a)) {
        continue;
      }
      bool maximal = true;
      for (std::size_t j = 0; j < lat.size() && maximal; ++j) {
        if (j != i && lat.leq(i, j) && !lat.members(j).contains(a)) {
          maximal = false;
        }
      }
      if (maximal) {
        check(lat.lattice().is_meet_irreducible(E(i)), "a value is not prime");
        out.push_back(i);
      }
    }
    return out;
  }

  SpectrumAnnotation annotate_spectrum(FiniteResiduatedLattice const& alg,
                                       ConvLattice const&             lat) {
    std::size_t const  k = lat.size();
    SpectrumAnnotation s;
    s.is_prime.assign(k, false);
    s.is_minimal_prime.assign(k, false);
    s.is_polar.assign(k, false);
    s.is_double_polar_fixed.assign(k, false);
    for (auto p : prime_nodes(lat)) {
      s.is_prime[p] = true;
    }
    for (auto p : minimal_prime_nodes(alg, lat)) {
      s.is_minimal_prime[p] = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
      Subset pol = polar(alg, lat.members(i));
      s.is_polar[lat.index_of(pol)] = true;
      s.is_double_polar_fixed[i] = polar(alg, pol) == lat.members(i);
    }
    check(s.is_polar == s.is_double_polar_fixed,
          "polars differ from the fixed points of double polar");
    for (std::size_t a = 0; a < alg.size(); ++a) {
      s.values_of.push_back(value_nodes(lat, E(a)));
    }
    return s;
  }

  bool PrimeConditions::consistent() const {
    bool const base = meet_irreducible == abs_join_in
                      && meet_irreducible == abs_join_unit
                      && meet_irreducible == chain_above;
    return base && (!lp || meet_irreducible == residual_in)
           && (!rp || meet_irreducible == residual_in_right);
  }

  PrimeConditions prime_characterization_check(FiniteResiduatedLattice const& alg,
                                               ConvLattice const&             lat,
                                               Subset                         h) {
    require_e_cyclic(alg);
    std::size_t const hi = lat.index_of(h);
    std::size_t const n  = alg.size();
    Elem const        e  = alg.unit();
    PrimeConditions   c;
    c.lp = satisfies(alg, "LP");
    c.rp = satisfies(alg, "RP");

    c.meet_irreducible = true;
    for (std::size_t x = 0; x < lat.size(); ++x) {
      for (std::size_t y = 0; y < lat.size(); ++y) {
        if (lat.leq(lat.meet(x, y), hi) && !lat.leq(x, hi) && !lat.leq(y, hi)) {
          c.meet_irreducible = false;
        }
      }
    }
    c.abs_join_in = c.abs_join_unit = c.residual_in = c.residual_in_right = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Elem a = E(i), b = E(j);
        bool either = h.contains(a) || h.contains(b);
        Elem jab    = alg.join(alg.abs(a), alg.abs(b));
        if (h.contains(jab) && !either) {
          c.abs_join_in = false;
        }
        if (jab == e && !either) {
          c.abs_join_unit = false;
        }
        if (!h.contains(alg.meet(alg.lres(a, b), e))
            && !h.contains(alg.meet(alg.lres(b, a), e))) {
          c.residual_in = false;
        }
        if (!h.contains(alg.meet(alg.rres(a, b), e))
            && !h.contains(alg.meet(alg.rres(b, a), e))) {
          c.residual_in_right = false;
        }
      }
    }
    std::vector<std::size_t> above;
    for (std::size_t x = 0; x < lat.size(); ++x) {
      if (lat.leq(hi, x)) {
        above.push_back(x);
      }
    }
    c.chain_above = is_chain(lat, above);
    if (c.lp || c.rp) {
      check(c.consistent(),
            "prime conditions disagree on " + alg.format(h) + " in " + alg.name());
    }
    return c;
  }

  MonteiroResult monteiro_check(FiniteLattice const& L) {
    MonteiroResult r;
    r.distributive     = L.is_distributive();
    r.witnesses_found  = true;
    std::size_t const n = L.size();
    for (std::size_t i = 0; i < n && r.witnesses_found; ++i) {
      for (std::size_t j = 0; j < n && r.witnesses_found; ++j) {
        Elem a = E(i), b = E(j), ab = L.join(a, b);
        bool found = false;
        for (std::size_t u = 0; u < n && !found; ++u) {
          if (L.join(E(u), b) != ab) {
            continue;
          }
          for (std::size_t v = 0; v < n && !found; ++v) {
            found = L.meet(E(u), E(v)) == L.bottom() && L.join(a, E(v)) == ab;
          }
        }
        if (!found) {
          r.witnesses_found = false;
          r.failing_pair    = std::make_pair(a, b);
        }
      }
    }
    return r;
  }

  bool prime_ideals_form_root_system(FiniteLattice const& L) {
    std::size_t const n = L.size();
    std::vector<Elem> primes;
    for (std::size_t p = 0; p < n; ++p) {
      if (E(p) == L.top()) {
        continue;
      }
      bool prime = true;
      for (std::size_t y = 0; y < n && prime; ++y) {
        for (std::size_t z = 0; z < n && prime; ++z) {
          if (L.leq(L.meet(E(y), E(z)), E(p)) && !L.leq(E(y), E(p))
              && !L.leq(E(z), E(p))) {
            prime = false;
          }
        }
      }
      if (prime) {
        primes.push_back(E(p));
      }
    }
    for (Elem p : primes) {
      for (Elem q : primes) {
        for (Elem r : primes) {
          if (L.leq(p, q) && L.leq(p, r) && !L.leq(q, r) && !L.leq(r, q)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  RelativeNormality relatively_normal(FiniteResiduatedLattice const& alg,
                                      ConvLattice const&             lat) {
    require_e_cyclic(alg);
    RelativeNormality r;
    r.monteiro    = monteiro_check(lat.lattice()).holds();
    r.root_system = prime_ideals_form_root_system(lat.lattice());
    r.prelinear   = satisfies(alg, "LP") || satisfies(alg, "RP");
    check(r.monteiro == r.root_system,
          "Monteiro witnesses and root system disagree on " + alg.name());
    check(!r.prelinear || r.monteiro,
          "prelinear algebra " + alg.name()
              + " has a non relatively normal convex subalgebra lattice");
    return r;
  }

  namespace {
    // The three abstract characterisations of a minimal meet-irreducible.
    std::array<bool, 3> abstract_minimal(FiniteLattice const& L, Elem p) {
      std::array<bool, 3> r{true, true, false};
      for (Elem q : L.meet_irreducibles()) {
        if (L.lt(q, p)) {
          r[0] = false;
        }
      }
      Elem acc = L.bottom();
      for (std::size_t i = 0; i < L.size(); ++i) {
        Elem c   = E(i);
        Elem neg = *L.pseudocomplement(c);
        if (L.leq(c, p) && L.leq(neg, p)) {
          r[1] = false;
        }
        if (!L.leq(c, p)) {
          acc = L.join(acc, neg);
        }
      }
      r[2] = acc == p;
      return r;
    }
  }  // namespace

  MinimalPrimeConditions
  minimal_prime_characterization(FiniteResiduatedLattice const& alg,
                                 ConvLattice const&             lat,
                                 Subset                         p) {
    require_e_cyclic(alg);
    auto pi = lat.find(p);
    if (!pi || !lat.lattice().is_meet_irreducible(E(*pi))) {
      fail(ErrorKind::NotPrime, alg.format(p) + " is not a prime convex subalgebra");
    }
    MinimalPrimeConditions c;
    c.minimal = true;
    for (auto q : prime_nodes(lat)) {
      if (q != *pi && lat.leq(q, *pi)) {
        c.minimal = false;
      }
    }
    c.polar_not_inside = true;
    Subset un;
    for (std::size_t i = 0; i < alg.size(); ++i) {
      Subset pol = polar(alg, Subset::singleton(E(i)));
      if (p.contains(E(i))) {
        if (pol.is_subset_of(p)) {
          c.polar_not_inside = false;
        }
      } else {
        un = un | pol;
      }
    }
    c.union_of_polars = un == p;
    auto ab            = abstract_minimal(lat.lattice(), E(*pi));
    c.abstract_minimal = ab[0];
    c.abstract_pseudo  = ab[1];
    c.abstract_join    = ab[2];
    check(c.consistent(),
          "minimal prime conditions disagree on " + alg.format(p) + " in "
              + alg.name());
    return c;
  }

  DoublePolarBoolean double_polar_boolean(FiniteResiduatedLattice const& alg,
                                          ConvLattice const&             lat) {
    require_e_cyclic(alg);
    DoublePolarBoolean r;
    std::vector<Subset> fixed;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      Subset h = lat.members(i);
      if (polar(alg, polar(alg, h)) == h) {
        r.nodes.push_back(i);
        fixed.push_back(h);
      }
    }
    auto in = [&](Subset s) {
      return std::find(fixed.begin(), fixed.end(), s) != fixed.end();
    };
    auto bjoin = [&](Subset a, Subset b) {
      return polar(alg, polar(alg, a) & polar(alg, b));
    };
    Subset const bot = Subset::singleton(alg.unit()), top = alg.carrier();
    bool         ok  = in(bot) && in(top);
    for (Subset a : fixed) {
      Subset na = polar(alg, a);
      ok = ok && in(na) && (a & na) == bot && bjoin(a, na) == top;
      for (Subset b : fixed) {
        Subset j = bjoin(a, b);
        ok       = ok && in(a & b) && in(j) && a.is_subset_of(j) && b.is_subset_of(j);
        // j is the least fixed point above a and b
        for (Subset c : fixed) {
          if (a.is_subset_of(c) && b.is_subset_of(c)) {
            ok = ok && j.is_subset_of(c);
          }
          ok = ok && (a & bjoin(b, c)) == bjoin(a & b, a & c);
        }
      }
    }
    std::size_t const m = fixed.size();
    r.boolean           = ok && m > 0 && (m & (m - 1)) == 0;
    return r;
  }

  Subset polar_prime_meet(FiniteResiduatedLattice const& alg,
                          ConvLattice const&             lat,
                          Subset                         h) {
    Subset meet = alg.carrier();
    for (auto p : minimal_prime_nodes(alg, lat)) {
      if (!h.is_subset_of(lat.members(p))) {
        meet = meet & lat.members(p);
      }
    }
    check(meet == polar(alg, h),
          "intersection of minimal primes differs from the polar of "
              + alg.format(h));
    return meet;
  }

  IdealCorrespondence
  negcone_ideal_correspondence(FiniteResiduatedLattice const& alg,
                               ConvLattice const&             lat,
                               bool                           force) {
    require_e_cyclic(alg);
    std::vector<Elem> neg = alg.negative_elements().elements();
    std::size_t const m   = neg.size();
    if (m > 20 && !force) {
      fail(ErrorKind::SizeGuard, "negative cone has more than 20 elements");
    }
    Subset const all = alg.negative_elements();
    auto to_subset = [&](std::uint64_t mask) {
      Subset s;
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) {
          s.insert(neg[i]);
        }
      }
      return s;
    };
    std::vector<Subset> ideals, pfilters;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
      Subset s = to_subset(mask);
      if (s == all) {
        continue;
      }
      bool down = true, up = true, jc = true, mc = true, prime = true;
      s.for_each([&](Elem x) {
        for (Elem y : neg) {
          if (alg.leq(y, x) && !s.contains(y)) {
            down = false;
          }
          if (alg.leq(x, y) && !s.contains(y)) {
            up = false;
          }
        }
        s.for_each([&](Elem y) {
          jc = jc && s.contains(alg.join(x, y));
          mc = mc && s.contains(alg.meet(x, y));
        });
      });
      for (Elem x : neg) {
        for (Elem y : neg) {
          if (s.contains(alg.join(x, y)) && !s.contains(x) && !s.contains(y)) {
            prime = false;
          }
        }
      }
      if (down && jc) {
        ideals.push_back(s);
      }
      if (up && mc && prime) {
        pfilters.push_back(s);
      }
    }
    auto maximal = [](std::vector<Subset> const& v, Subset s) {
      return std::none_of(v.begin(), v.end(), [s](Subset t) {
        return t != s && s.is_subset_of(t);
      });
    };
    auto minimal = [](std::vector<Subset> const& v, Subset s) {
      return std::none_of(v.begin(), v.end(), [s](Subset t) {
        return t != s && t.is_subset_of(s);
      });
    };
    IdealCorrespondence r;
    std::vector<Subset> max_ideals;
    for (Subset s : ideals) {
      if (maximal(ideals, s)) {
        max_ideals.push_back(s);
      }
    }
    for (Subset s : pfilters) {
      if (minimal(pfilters, s)) {
        r.minimal_prime_filters.push_back(s);
      }
    }
    auto const& mpf = r.minimal_prime_filters;
    r.complements_match = max_ideals.size() == mpf.size();
    for (Subset s : max_ideals) {
      r.complements_match = r.complements_match
                            && std::find(mpf.begin(), mpf.end(), all - s) != mpf.end();
    }

    auto const minprimes = minimal_prime_nodes(alg, lat);
    r.unions_are_minimal = true;
    for (Subset s : max_ideals) {
      Subset h;
      s.for_each([&](Elem a) { h = h | polar(alg, Subset::singleton(a)); });
      auto hi = lat.find(h);
      bool ok = hi.has_value()
                && std::find(minprimes.begin(), minprimes.end(), *hi)
                       != minprimes.end()
                && (h & all) == all - s
                && convex_closure(alg, all - s).members == h;
      r.unions_are_minimal = r.unions_are_minimal && ok;
      r.maximal_ideals.emplace_back(s, hi.value_or(lat.size()));
    }

    r.prime_equivalence = true;
    for (auto p : prime_nodes(lat)) {
      Subset P   = lat.members(p);
      bool   one = std::find(minprimes.begin(), minprimes.end(), p) != minprimes.end();
      bool   two = std::find(max_ideals.begin(), max_ideals.end(), all - P)
                 != max_ideals.end();
      bool three = std::find(mpf.begin(), mpf.end(), P & all) != mpf.end();
      r.prime_equivalence = r.prime_equivalence && one == two && one == three;
    }
    check(r.ok(), "negative cone ideal correspondence fails in " + alg.name());
    return r;
  }

  bool separating_meet_irreducibles(FiniteLattice const& L) {
    auto const mi = L.meet_irreducibles();
    for (Elem p : mi) {
      for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = 0; j < L.size(); ++j) {
          Elem a = E(i), b = E(j);
          auto imp = L.rel_pseudocomplement(a, b);
          if (!imp || !L.leq(*imp, p)) {
            continue;
          }
          bool found = std::any_of(mi.begin(), mi.end(), [&](Elem q) {
            return !L.leq(a, q) && L.leq(b, q) && L.leq(q, p);
          });
          if (!found) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool minimal_meet_irreducibles_agree(FiniteLattice const& L) {
    for (Elem p : L.meet_irreducibles()) {
      auto r = abstract_minimal(L, p);
      if (r[0] != r[1] || r[0] != r[2]) {
        return false;
      }
    }
    return true;
  }

}  // namespace rlat
