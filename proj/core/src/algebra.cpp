#include "rlat/algebra.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace rlat {

  namespace {
    std::string triple(FiniteLattice const&,
                       std::vector<std::string> const& labels,
                       std::initializer_list<Elem>     xs) {
      std::string s = "(";
      bool        first = true;
      for (Elem x : xs) {
        if (!first) {
          s += ", ";
        }
        first = false;
        s += labels[x];
      }
      return s + ")";
    }

    bool entries_in_range(std::vector<Elem> const& t, std::size_t n) {
      return std::all_of(t.begin(), t.end(), [n](Elem x) { return x < n; });
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // derive_residuals
  ////////////////////////////////////////////////////////////////////////

  ResidualTables derive_residuals(FiniteLattice const&     lat,
                                  std::vector<Elem> const& mult) {
    std::size_t const n = lat.size();
    if (mult.size() != n * n) {
      fail(ErrorKind::InconsistentTables, "mult table has wrong size");
    }
    ResidualTables out;
    out.lres.assign(n * n, 0);
    out.rres.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        Elem l = lat.bottom(), r = lat.bottom();
        bool any_l = false, any_r = false;
        for (std::size_t y = 0; y < n; ++y) {
          if (lat.leq(mult[x * n + y], static_cast<Elem>(z))) {
            l     = lat.join(l, static_cast<Elem>(y));
            any_l = true;
          }
          if (lat.leq(mult[y * n + x], static_cast<Elem>(z))) {
            r     = lat.join(r, static_cast<Elem>(y));
            any_r = true;
          }
        }
        if (!any_l || !lat.leq(mult[x * n + l], static_cast<Elem>(z))) {
          fail(ErrorKind::NoMaximum,
               "{y : " + std::to_string(x) + "*y <= " + std::to_string(z)
                   + "} has no maximum");
        }
        if (!any_r || !lat.leq(mult[r * n + x], static_cast<Elem>(z))) {
          fail(ErrorKind::NoMaximum,
               "{y : y*" + std::to_string(x) + " <= " + std::to_string(z)
                   + "} has no maximum");
        }
        out.lres[x * n + z] = l;
        out.rres[z * n + x] = r;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // validation
  ////////////////////////////////////////////////////////////////////////

  std::optional<FiniteResiduatedLattice>
  try_validate_algebra(RawAlgebra raw, std::optional<Error>* error) {
    auto bad = [error](ErrorKind kind, std::string const& msg)
        -> std::optional<FiniteResiduatedLattice> {
      if (error != nullptr) {
        *error = Error(kind, msg);
      }
      return std::nullopt;
    };

    std::size_t const n = raw.labels.size();
    if (n == 0) {
      return bad(ErrorKind::InconsistentTables, "empty carrier");
    }
    if (n > 1024) {
      return bad(ErrorKind::CarrierTooLarge, "carrier larger than 1024");
    }
    {
      std::set<std::string> seen(raw.labels.begin(), raw.labels.end());
      if (seen.size() != n) {
        return bad(ErrorKind::InconsistentTables, "labels are not distinct");
      }
    }
    if (raw.leq.size() != n * n || raw.mult.size() != n * n
        || (raw.lres && raw.lres->size() != n * n)
        || (raw.rres && raw.rres->size() != n * n)) {
      return bad(ErrorKind::InconsistentTables, "table sizes do not match");
    }
    if (raw.unit >= n || (raw.f_const && *raw.f_const >= n)
        || !entries_in_range(raw.mult, n)
        || (raw.lres && !entries_in_range(*raw.lres, n))
        || (raw.rres && !entries_in_range(*raw.rres, n))) {
      return bad(ErrorKind::InconsistentTables, "entry out of range");
    }

    FiniteLattice lat;
    try {
      lat = FiniteLattice::from_order(n, raw.leq);
    } catch (Error const& e) {
      if (error != nullptr) {
        *error = e;
      }
      return std::nullopt;
    }
    auto const& L   = raw.labels;
    auto const  m   = [&](std::size_t x, std::size_t y) {
      return raw.mult[x * n + y];
    };
    Elem const e = raw.unit;

    for (std::size_t x = 0; x < n; ++x) {
      if (m(e, x) != x || m(x, e) != x) {
        return bad(ErrorKind::UnitNotIdentity,
                   L[e] + " is not an identity at " + L[x]);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Elem xy = m(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          if (m(xy, z) != m(x, m(y, z))) {
            return bad(ErrorKind::NotAssociative,
                       triple(lat,
                              L,
                              {static_cast<Elem>(x),
                               static_cast<Elem>(y),
                               static_cast<Elem>(z)}));
          }
        }
      }
    }

    if (!raw.lres || !raw.rres) {
      ResidualTables derived;
      try {
        derived = derive_residuals(lat, raw.mult);
      } catch (Error const& err) {
        if (error != nullptr) {
          *error = err;
        }
        return std::nullopt;
      }
      if (!raw.lres) {
        raw.lres = std::move(derived.lres);
      }
      if (!raw.rres) {
        raw.rres = std::move(derived.rres);
      }
    }
    auto const& lr = *raw.lres;
    auto const& rr = *raw.rres;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Elem xy = m(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          bool a = lat.leq(xy, static_cast<Elem>(z));
          bool b = lat.leq(static_cast<Elem>(y), lr[x * n + z]);
          bool c = lat.leq(static_cast<Elem>(x), rr[z * n + y]);
          if (a != b || a != c) {
            return bad(ErrorKind::ResiduationFails,
                       triple(lat,
                              L,
                              {static_cast<Elem>(x),
                               static_cast<Elem>(y),
                               static_cast<Elem>(z)}));
          }
        }
      }
    }
    // Multiplication preserves all joins, including the empty one. This is
    // implied by residuation, so a failure here is a bug.
    for (std::size_t x = 0; x < n; ++x) {
      if (m(x, lat.bottom()) != lat.bottom()
          || m(lat.bottom(), x) != lat.bottom()) {
        return bad(ErrorKind::CheckFailed, "bottom is not absorbing");
      }
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          Elem yz = lat.join(static_cast<Elem>(y), static_cast<Elem>(z));
          if (m(x, yz) != lat.join(m(x, y), m(x, z))
              || m(yz, x) != lat.join(m(y, x), m(z, x))) {
            return bad(ErrorKind::CheckFailed, "multiplication not join-preserving");
          }
        }
      }
    }

    FiniteResiduatedLattice A;
    A._n      = n;
    A._name   = std::move(raw.name);
    A._labels = std::move(raw.labels);
    A._lat    = std::move(lat);
    A._mult   = std::move(raw.mult);
    A._lres   = std::move(*raw.lres);
    A._rres   = std::move(*raw.rres);
    A._unit   = raw.unit;
    A._f      = raw.f_const;

    AlgebraFlags& fl = A._flags;
    fl.e_cyclic      = true;
    fl.commutative   = true;
    for (std::size_t x = 0; x < n; ++x) {
      auto xe = static_cast<Elem>(x);
      if (A.lres(xe, e) != A.rres(e, xe)) {
        fl.e_cyclic = false;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (A.mult(xe, static_cast<Elem>(y)) != A.mult(static_cast<Elem>(y), xe)) {
          fl.commutative = false;
        }
      }
    }
    fl.integral = (e == A._lat.top());
    fl.chain    = A._lat.is_chain();
    fl.bounded  = A._f.has_value() && *A._f == A._lat.bottom();
    return A;
  }

  FiniteResiduatedLattice validate_algebra(RawAlgebra raw) {
    std::optional<Error> err;
    auto                 result = try_validate_algebra(std::move(raw), &err);
    if (!result) {
      throw *err;
    }
    return std::move(*result);
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteResiduatedLattice
  ////////////////////////////////////////////////////////////////////////

  std::optional<Elem>
  FiniteResiduatedLattice::find_label(std::string_view s) const {
    for (std::size_t i = 0; i < _n; ++i) {
      if (_labels[i] == s) {
        return static_cast<Elem>(i);
      }
    }
    return std::nullopt;
  }

  Elem FiniteResiduatedLattice::element(std::string_view s) const {
    auto x = find_label(s);
    if (!x) {
      fail(ErrorKind::UnknownLabel,
           "'" + std::string(s) + "' is not an element of " + _name);
    }
    return *x;
  }

  Elem FiniteResiduatedLattice::power(Elem x, std::size_t k) const {
    Elem acc = _unit;
    for (std::size_t i = 0; i < k; ++i) {
      acc = mult(acc, x);
    }
    return acc;
  }

  Subset FiniteResiduatedLattice::negative_elements() const {
    Subset s;
    for (std::size_t x = 0; x < _n; ++x) {
      if (leq(static_cast<Elem>(x), _unit)) {
        s.insert(static_cast<Elem>(x));
      }
    }
    return s;
  }

  std::string FiniteResiduatedLattice::format(Subset s) const {
    std::string out   = "{";
    bool        first = true;
    s.for_each([&](Elem x) {
      if (!first) {
        out += ",";
      }
      first = false;
      out += _labels[x];
    });
    return out + "}";
  }

  RawAlgebra FiniteResiduatedLattice::raw() const {
    RawAlgebra r;
    r.name    = _name;
    r.labels  = _labels;
    r.leq     = _lat.order_matrix();
    r.mult    = _mult;
    r.lres    = _lres;
    r.rres    = _rres;
    r.unit    = _unit;
    r.f_const = _f;
    return r;
  }

  bool FiniteResiduatedLattice::same_tables(
      FiniteResiduatedLattice const& other) const {
    return _n == other._n && _lat == other._lat && _mult == other._mult
           && _lres == other._lres && _rres == other._rres
           && _unit == other._unit && _f == other._f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived operations
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(Conjugation kind) noexcept {
    switch (kind) {
      case Conjugation::left: return "lambda";
      case Conjugation::right: return "rho";
      case Conjugation::left_star: return "lambda*";
      case Conjugation::right_star: return "rho*";
    }
    return "?";
  }

  Elem conjugate(FiniteResiduatedLattice const& alg,
                 Conjugation                    kind,
                 Elem                           u,
                 Elem                           x) {
    Elem v = 0;
    switch (kind) {
      case Conjugation::left: v = alg.lres(u, alg.mult(x, u)); break;
      case Conjugation::right: v = alg.rres(alg.mult(u, x), u); break;
      case Conjugation::left_star: v = alg.lres(alg.lres(x, u), u); break;
      case Conjugation::right_star: v = alg.rres(u, alg.rres(u, x)); break;
    }
    return alg.meet(v, alg.unit());
  }

  FiniteResiduatedLattice negative_cone(FiniteResiduatedLattice const& alg) {
    std::vector<Elem> keep;
    std::vector<int>  index(alg.size(), -1);
    for (std::size_t x = 0; x < alg.size(); ++x) {
      if (alg.leq(static_cast<Elem>(x), alg.unit())) {
        index[x] = static_cast<int>(keep.size());
        keep.push_back(static_cast<Elem>(x));
      }
    }
    std::size_t const k = keep.size();
    RawAlgebra        r;
    r.name = alg.name() + "^-";
    r.leq.assign(k * k, 0);
    r.mult.assign(k * k, 0);
    r.lres = std::vector<Elem>(k * k, 0);
    r.rres = std::vector<Elem>(k * k, 0);
    Elem const e = alg.unit();
    for (std::size_t i = 0; i < k; ++i) {
      r.labels.push_back(alg.label(keep[i]));
      for (std::size_t j = 0; j < k; ++j) {
        Elem x = keep[i], y = keep[j];
        r.leq[i * k + j]     = alg.leq(x, y) ? 1 : 0;
        r.mult[i * k + j]    = static_cast<Elem>(index[alg.mult(x, y)]);
        (*r.lres)[i * k + j] = static_cast<Elem>(index[alg.meet(alg.lres(x, y), e)]);
        (*r.rres)[i * k + j] = static_cast<Elem>(index[alg.meet(alg.rres(x, y), e)]);
      }
    }
    r.unit = static_cast<Elem>(index[e]);
    if (alg.f_const() && alg.leq(*alg.f_const(), e)) {
      r.f_const = static_cast<Elem>(index[*alg.f_const()]);
    }
    return validate_algebra(std::move(r));
  }

  FiniteResiduatedLattice direct_product(FiniteResiduatedLattice const& A,
                                         FiniteResiduatedLattice const& B) {
    std::size_t const na = A.size(), nb = B.size(), n = na * nb;
    auto idx = [nb](std::size_t a, std::size_t b) {
      return static_cast<Elem>(a * nb + b);
    };
    RawAlgebra r;
    r.name = A.name() + "x" + B.name();
    r.leq.assign(n * n, 0);
    r.mult.assign(n * n, 0);
    r.lres = std::vector<Elem>(n * n, 0);
    r.rres = std::vector<Elem>(n * n, 0);
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < nb; ++b) {
        r.labels.push_back("(" + A.label(static_cast<Elem>(a)) + ","
                           + B.label(static_cast<Elem>(b)) + ")");
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      auto a1 = static_cast<Elem>(p / nb), b1 = static_cast<Elem>(p % nb);
      for (std::size_t q = 0; q < n; ++q) {
        auto a2 = static_cast<Elem>(q / nb), b2 = static_cast<Elem>(q % nb);
        r.leq[p * n + q]     = A.leq(a1, a2) && B.leq(b1, b2) ? 1 : 0;
        r.mult[p * n + q]    = idx(A.mult(a1, a2), B.mult(b1, b2));
        (*r.lres)[p * n + q] = idx(A.lres(a1, a2), B.lres(b1, b2));
        (*r.rres)[p * n + q] = idx(A.rres(a1, a2), B.rres(b1, b2));
      }
    }
    r.unit = idx(A.unit(), B.unit());
    if (A.f_const() && B.f_const()) {
      r.f_const = idx(*A.f_const(), *B.f_const());
    }
    return validate_algebra(std::move(r));
  }

  FiniteResiduatedLattice opposite(FiniteResiduatedLattice const& alg) {
    std::size_t const n = alg.size();
    RawAlgebra        r = alg.raw();
    r.name              = alg.name() + "^op";
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto xe = static_cast<Elem>(x), ye = static_cast<Elem>(y);
        r.mult[x * n + y] = alg.mult(ye, xe);
        // In the opposite algebra x o y <= z iff y*x <= z, so the new
        // left residual x\'z is the old z/x and z/'y is the old y\z.
        (*r.lres)[x * n + y] = alg.rres(ye, xe);
        (*r.rres)[x * n + y] = alg.lres(ye, xe);
      }
    }
    return validate_algebra(std::move(r));
  }

  FiniteResiduatedLattice relabel(FiniteResiduatedLattice const& alg,
                                  std::vector<Elem> const&       perm) {
    std::size_t const n = alg.size();
    if (perm.size() != n) {
      fail(ErrorKind::InconsistentTables, "permutation has wrong length");
    }
    RawAlgebra r;
    r.name = alg.name();
    r.labels.resize(n);
    r.leq.assign(n * n, 0);
    r.mult.assign(n * n, 0);
    r.lres = std::vector<Elem>(n * n, 0);
    r.rres = std::vector<Elem>(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      r.labels[perm[x]] = alg.label(static_cast<Elem>(x));
      for (std::size_t y = 0; y < n; ++y) {
        auto xe = static_cast<Elem>(x), ye = static_cast<Elem>(y);
        std::size_t const cell = perm[x] * n + perm[y];
        r.leq[cell]            = alg.leq(xe, ye) ? 1 : 0;
        r.mult[cell]           = perm[alg.mult(xe, ye)];
        (*r.lres)[cell]        = perm[alg.lres(xe, ye)];
        (*r.rres)[cell]        = perm[alg.rres(xe, ye)];
      }
    }
    r.unit = perm[alg.unit()];
    if (alg.f_const()) {
      r.f_const = perm[*alg.f_const()];
    }
    return validate_algebra(std::move(r));
  }

  std::optional<std::string>
  derived_law_violation(FiniteResiduatedLattice const& A) {
    std::size_t const n = A.size();
    auto const        L = [&](Elem x) { return A.label(x); };
    for (std::size_t i = 0; i < n; ++i) {
      auto x = static_cast<Elem>(i);
      if (A.mult(x, A.lres(x, x)) != x) {
        return "x(x\\x) = x fails at " + L(x);
      }
      if (A.mult(A.rres(x, x), x) != x) {
        return "(x/x)x = x fails at " + L(x);
      }
      Elem lx = A.lres(x, x), rx = A.rres(x, x);
      if (A.mult(lx, lx) != lx || A.mult(rx, rx) != rx) {
        return "(x\\x)^2 = x\\x fails at " + L(x);
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto y = static_cast<Elem>(j);
        for (std::size_t k = 0; k < n; ++k) {
          auto z  = static_cast<Elem>(k);
          auto ctx = " at (" + L(x) + ", " + L(y) + ", " + L(z) + ")";
          if (!A.leq(A.mult(A.lres(x, y), z), A.lres(x, A.mult(y, z)))) {
            return "(x\\y)z <= x\\yz fails" + ctx;
          }
          if (!A.leq(A.mult(z, A.rres(y, x)), A.rres(A.mult(z, y), x))) {
            return "z(y/x) <= zy/x fails" + ctx;
          }
          if (!A.leq(A.lres(x, y), A.lres(A.mult(z, x), A.mult(z, y)))) {
            return "x\\y <= zx\\zy fails" + ctx;
          }
          if (!A.leq(A.rres(y, x), A.rres(A.mult(y, z), A.mult(x, z)))) {
            return "y/x <= yz/xz fails" + ctx;
          }
          if (!A.leq(A.mult(A.lres(x, y), A.lres(y, z)), A.lres(x, z))) {
            return "(x\\y)(y\\z) <= x\\z fails" + ctx;
          }
          if (!A.leq(A.mult(A.rres(z, y), A.rres(y, x)), A.rres(z, x))) {
            return "(z/y)(y/x) <= z/x fails" + ctx;
          }
          if (A.lres(A.mult(x, y), z) != A.lres(y, A.lres(x, z))) {
            return "xy\\z = y\\(x\\z) fails" + ctx;
          }
          if (A.rres(z, A.mult(y, x)) != A.rres(A.rres(z, x), y)) {
            return "z/yx = (z/x)/y fails" + ctx;
          }
          if (A.lres(x, A.rres(y, z)) != A.rres(A.lres(x, y), z)) {
            return "x\\(y/z) = (x\\y)/z fails" + ctx;
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace rlat
