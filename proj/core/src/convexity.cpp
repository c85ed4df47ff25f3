#include "rlat/convexity.hpp"

#include <algorithm>

namespace rlat {

  namespace {
    // Submonoid generated by gens, as a subset.
    Subset submonoid(FiniteResiduatedLattice const& alg, Subset gens) {
      Subset m = Subset::singleton(alg.unit());
      std::vector<Elem> todo{alg.unit()};
      while (!todo.empty()) {
        Elem x = todo.back();
        todo.pop_back();
        gens.for_each([&](Elem g) {
          Elem y = alg.mult(x, g);
          if (!m.contains(y)) {
            m.insert(y);
            todo.push_back(y);
          }
        });
      }
      return m;
    }

    Subset abs_upset(FiniteResiduatedLattice const& alg, Subset m) {
      Subset out;
      for (std::size_t i = 0; i < alg.size(); ++i) {
        auto x  = static_cast<Elem>(i);
        Elem ax = alg.abs(x);
        if (!m.all_of([&](Elem h) { return !alg.leq(h, ax); })) {
          out.insert(x);
        }
      }
      return out;
    }

    Elem abs_product(FiniteResiduatedLattice const& alg, Subset s) {
      Elem g = alg.unit();
      s.for_each([&](Elem x) { g = alg.mult(g, alg.abs(x)); });
      return g;
    }
  }  // namespace

  void require_e_cyclic(FiniteResiduatedLattice const& alg) {
    if (!alg.flags().e_cyclic) {
      fail(ErrorKind::NotECyclic, alg.name() + " does not satisfy x\\e = e/x");
    }
    if (alg.size() > Subset::max_carrier) {
      fail(ErrorKind::CarrierTooLarge,
           "convex subalgebra computations need at most 64 elements");
    }
  }

  ConvexSubalgebra convex_closure(FiniteResiduatedLattice const& alg, Subset s) {
    require_e_cyclic(alg);
    Subset gens;
    s.for_each([&](Elem x) { gens.insert(alg.abs(x)); });
    ConvexSubalgebra out{abs_upset(alg, submonoid(alg, gens)),
                         abs_product(alg, s)};
#if !defined(NDEBUG) || defined(RLAT_CROSSCHECK)
    check(out.members == convex_closure_naive(alg, s),
          "convex closure disagrees with the operation-closure oracle");
#endif
    return out;
  }

  Subset convex_closure_naive(FiniteResiduatedLattice const& alg, Subset s) {
    std::size_t const n = alg.size();
    Subset            t = s;
    t.insert(alg.unit());
    bool changed = true;
    while (changed) {
      Subset next = t;
      t.for_each([&](Elem x) {
        t.for_each([&](Elem y) {
          next.insert(alg.mult(x, y));
          next.insert(alg.lres(x, y));
          next.insert(alg.rres(x, y));
          next.insert(alg.join(x, y));
          next.insert(alg.meet(x, y));
          for (std::size_t z = 0; z < n; ++z) {
            if (alg.leq(x, static_cast<Elem>(z)) && alg.leq(static_cast<Elem>(z), y)) {
              next.insert(static_cast<Elem>(z));
            }
          }
        });
      });
      changed = next != t;
      t       = next;
    }
    return t;
  }

  PrincipalConv principal_conv(FiniteResiduatedLattice const& alg, Elem a) {
    require_e_cyclic(alg);
    Elem const  h = alg.abs(a);
    std::size_t k = 0;
    Elem        p = alg.unit();
    while (alg.mult(p, h) != p) {
      p = alg.mult(p, h);
      ++k;
    }
    PrincipalConv out{abs_upset(alg, Subset::singleton(p)), k};
    check(out.members == convex_closure(alg, Subset::singleton(a)).members,
          "principal convex subalgebra differs from its generated closure");
    return out;
  }

  bool is_convex_subalgebra(FiniteResiduatedLattice const& alg, Subset s) {
    if (!s.contains(alg.unit())) {
      return false;
    }
    std::size_t const n  = alg.size();
    bool              ok = true;
    s.for_each([&](Elem x) {
      s.for_each([&](Elem y) {
        ok = ok && s.contains(alg.mult(x, y)) && s.contains(alg.lres(x, y))
             && s.contains(alg.rres(x, y)) && s.contains(alg.join(x, y))
             && s.contains(alg.meet(x, y));
        for (std::size_t z = 0; z < n && ok; ++z) {
          auto ze = static_cast<Elem>(z);
          if (alg.leq(x, ze) && alg.leq(ze, y) && !s.contains(ze)) {
            ok = false;
          }
        }
      });
    });
    return ok;
  }

  bool is_prefilter(FiniteResiduatedLattice const& alg, Subset p) {
    require_e_cyclic(alg);
    if (p.empty()) {
      fail(ErrorKind::EmptySet, "a prefilter must be nonempty");
    }
    bool ok = true;
    p.for_each([&](Elem x) {
      p.for_each([&](Elem y) { ok = ok && p.contains(alg.mult(x, y)); });
      for (std::size_t i = 0; i < alg.size() && ok; ++i) {
        auto y = static_cast<Elem>(i);
        if (alg.leq(alg.abs(x), alg.abs(y)) && !p.contains(y)) {
          ok = false;
        }
      }
    });
    check(ok == is_convex_subalgebra(alg, p),
          "prefilter test disagrees with convex subalgebra test on "
              + alg.format(p));
    return ok;
  }

  std::optional<std::size_t> ConvLattice::find(Subset s) const {
    auto it = std::lower_bound(_nodes.begin(), _nodes.end(), s, canonical_less);
    if (it != _nodes.end() && *it == s) {
      return static_cast<std::size_t>(it - _nodes.begin());
    }
    return std::nullopt;
  }

  std::size_t ConvLattice::index_of(Subset s) const {
    auto i = find(s);
    check(i.has_value(), "subset is not a convex subalgebra");
    return *i;
  }

  ConvLattice all_convex_subalgebras(FiniteResiduatedLattice const& alg) {
    require_e_cyclic(alg);
    std::vector<std::pair<Subset, Elem>> found;
    auto add = [&found](Subset s, Elem g) {
      for (auto const& [t, _] : found) {
        if (t == s) {
          return false;
        }
      }
      found.emplace_back(s, g);
      return true;
    };
    for (std::size_t a = 0; a < alg.size(); ++a) {
      auto x = static_cast<Elem>(a);
      add(principal_conv(alg, x).members, alg.abs(x));
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Elem g = alg.mult(alg.abs(found[i].second), alg.abs(found[j].second));
        Subset joined = convex_closure(alg, found[i].first | found[j].first).members;
        check(joined == convex_closure(alg, Subset::singleton(g)).members,
              "C[X u Y] differs from C[|g_X||g_Y|]");
        add(joined, g);
      }
    }
    std::sort(found.begin(), found.end(), [](auto const& p, auto const& q) {
      return canonical_less(p.first, q.first);
    });

    ConvLattice L;
    std::size_t const k = found.size();
    for (auto const& [s, g] : found) {
      check(convex_closure(alg, Subset::singleton(g)).members == s,
            "node " + alg.format(s) + " is not generated by its generator");
      L._nodes.push_back(s);
      L._generators.push_back(g);
    }
    std::vector<std::uint8_t> inc(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        inc[i * k + j] = L._nodes[i].is_subset_of(L._nodes[j]) ? 1 : 0;
      }
    }
    L._lat = FiniteLattice::from_order(k, std::move(inc));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto m = L.find(L._nodes[i] & L._nodes[j]);
        check(m.has_value() && *m == L.meet(i, j),
              "convex subalgebras are not closed under intersection");
        Subset jn = convex_closure(alg, L._nodes[i] | L._nodes[j]).members;
        check(L._nodes[L.join(i, j)] == jn,
              "lattice join differs from the generated join");
      }
    }
    if (auto w = L._lat.distributivity_witness()) {
      fail(ErrorKind::DistributivityViolation,
           "convex subalgebra lattice of " + alg.name()
               + " is not distributive at " + alg.format(L._nodes[(*w)[0]]));
    }
    check(L._nodes.front() == Subset::singleton(alg.unit()),
          "bottom node is not {e}");
    check(L._nodes.back() == alg.carrier(), "top node is not the carrier");
    return L;
  }

  ConvMeetJoin conv_meet_join_check(FiniteResiduatedLattice const& alg,
                                    Elem                           a,
                                    Elem                           b) {
    require_e_cyclic(alg);
    auto C = [&](Subset s) { return convex_closure(alg, s).members; };
    Elem   aa = alg.abs(a), ab = alg.abs(b);
    Subset ca = C(Subset::singleton(a)), cb = C(Subset::singleton(b));
    ConvMeetJoin out{ca & cb, C(ca | cb)};
    check(out.meet == C(Subset::singleton(alg.join(aa, ab))),
          "C[a] & C[b] != C[|a| | |b|]");
    check(out.join == C(Subset::singleton(alg.meet(aa, ab))),
          "C[a] v C[b] != C[|a| & |b|]");
    check(out.join == C(Subset::singleton(alg.mult(aa, ab))),
          "C[a] v C[b] != C[|a||b|]");
    return out;
  }

  Partition theta_of(FiniteResiduatedLattice const& alg, Subset h) {
    require_e_cyclic(alg);
    std::size_t const         n = alg.size();
    std::vector<std::uint8_t> rel(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto a = static_cast<Elem>(i), b = static_cast<Elem>(j);
        Elem d = alg.meet(alg.meet(alg.lres(a, b), alg.lres(b, a)), alg.unit());
        rel[i * n + j] = h.contains(d) ? 1 : 0;
      }
    }
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      check(rel[i * n + i] == 1, "Theta_H is not reflexive");
      ids[i] = i;
      for (std::size_t j = 0; j < n; ++j) {
        check(rel[i * n + j] == rel[j * n + i], "Theta_H is not symmetric");
        for (std::size_t k = 0; k < n; ++k) {
          check(!(rel[i * n + j] && rel[j * n + k]) || rel[i * n + k],
                "Theta_H is not transitive");
        }
        if (rel[i * n + j] && j < ids[i]) {
          ids[i] = j;
        }
      }
    }
    Partition p(std::move(ids));
    check(is_lattice_congruence(alg, p),
          "Theta_H is not compatible with the lattice operations");
    check(p.block_of(alg.unit()) == h, "class of e under Theta_H is not H");
    return p;
  }

  ThetaEmbedding theta_embedding(FiniteResiduatedLattice const& alg,
                                 ConvLattice const&             lat) {
    std::vector<Partition> th;
    for (auto const& h : lat.nodes()) {
      th.push_back(theta_of(alg, h));
    }
    ThetaEmbedding r;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      for (std::size_t j = 0; j < lat.size(); ++j) {
        if (i != j && th[i] == th[j]) {
          r.injective = false;
        }
        bool inc = lat.leq(i, j), ref = th[i].refines(th[j]);
        if (inc && !ref) {
          r.order_preserving = false;
        }
        if (ref && !inc) {
          r.order_reflecting = false;
        }
        if (partition_join(th[i], th[j]) != th[lat.join(i, j)]) {
          r.joins_preserved = false;
        }
        if (partition_meet(th[i], th[j]) != th[lat.meet(i, j)]) {
          r.meets_preserved = false;
        }
      }
    }
    return r;
  }

}  // namespace rlat
