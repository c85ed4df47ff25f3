#include "rlat/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <tuple>

#include "rlat/builtins.hpp"
#include "rlat/law.hpp"

namespace rlat {

  namespace {
    Elem E(std::size_t i) {
      return static_cast<Elem>(i);
    }

    char enc(std::size_t v) {
      return static_cast<char>('0' + v);
    }

    // Calls f(perm) for every perm that maps each class onto consecutive
    // positions, classes in the given order; perm[old] = new.
    void for_each_class_perm(std::vector<std::vector<Elem>> const&         classes,
                             std::size_t                                   n,
                             std::function<void(std::vector<Elem> const&)> f) {
      std::vector<Elem>              perm(n);
      std::vector<std::vector<Elem>> cur = classes;
      std::vector<std::size_t>       offset;
      std::size_t                    pos = 0;
      for (auto& c : cur) {
        std::sort(c.begin(), c.end());
        offset.push_back(pos);
        pos += c.size();
      }
      std::function<void(std::size_t)> rec = [&](std::size_t ci) {
        if (ci == cur.size()) {
          f(perm);
          return;
        }
        auto& c = cur[ci];
        std::sort(c.begin(), c.end());
        do {
          for (std::size_t i = 0; i < c.size(); ++i) {
            perm[c[i]] = E(offset[ci] + i);
          }
          rec(ci + 1);
        } while (std::next_permutation(c.begin(), c.end()));
      };
      rec(0);
    }

    template <typename Key>
    std::vector<std::vector<Elem>> classes_by(std::size_t n, Key key) {
      std::map<decltype(key(Elem{})), std::vector<Elem>> m;
      for (std::size_t x = 0; x < n; ++x) {
        m[key(E(x))].push_back(E(x));
      }
      std::vector<std::vector<Elem>> out;
      for (auto& [k, v] : m) {
        out.push_back(v);
      }
      return out;
    }

    std::size_t count_below(FiniteLattice const& L, Elem x) {
      std::size_t c = 0;
      for (std::size_t y = 0; y < L.size(); ++y) {
        c += L.leq(E(y), x);
      }
      return c;
    }
    std::size_t count_above(FiniteLattice const& L, Elem x) {
      std::size_t c = 0;
      for (std::size_t y = 0; y < L.size(); ++y) {
        c += L.leq(x, E(y));
      }
      return c;
    }

    std::string encode(FiniteResiduatedLattice const& alg, std::vector<Elem> const& perm) {
      std::size_t const n = alg.size();
      std::vector<Elem> inv(n);
      for (std::size_t x = 0; x < n; ++x) {
        inv[perm[x]] = E(x);
      }
      std::string s;
      s.reserve(2 + n * n * 2);
      s += enc(n);
      s += enc(perm[alg.unit()]);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          s += alg.leq(inv[i], inv[j]) ? '1' : '0';
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          s += enc(perm[alg.mult(inv[i], inv[j])]);
        }
      }
      return s;
    }

    std::pair<std::string, std::vector<Elem>> canonical(FiniteResiduatedLattice const& alg) {
      auto const& L       = alg.lattice();
      auto const  classes = classes_by(alg.size(), [&](Elem x) {
        return std::make_tuple(count_below(L, x), count_above(L, x), x != alg.unit(),
                               count_below(L, alg.mult(x, x)));
      });
      std::string       best;
      std::vector<Elem> best_perm;
      for_each_class_perm(classes, alg.size(), [&](std::vector<Elem> const& p) {
        std::string s = encode(alg, p);
        if (best.empty() || s < best) {
          best      = std::move(s);
          best_perm = p;
        }
      });
      return {best, best_perm};
    }

    std::string encode_order(std::size_t n,
                             std::vector<std::uint8_t> const& leq,
                             std::vector<Elem> const& perm) {
      std::vector<Elem> inv(n);
      for (std::size_t x = 0; x < n; ++x) {
        inv[perm[x]] = E(x);
      }
      std::string s(1, enc(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          s += leq[inv[i] * n + inv[j]] ? '1' : '0';
        }
      }
      return s;
    }

    std::string canonical_order(std::size_t n, std::vector<std::uint8_t> const& leq) {
      auto below = [&](Elem x) {
        std::size_t c = 0, d = 0;
        for (std::size_t y = 0; y < n; ++y) {
          c += leq[y * n + x];
          d += leq[x * n + y];
        }
        return std::make_pair(c, d);
      };
      auto const  classes = classes_by(n, below);
      std::string best;
      for_each_class_perm(classes, n, [&](std::vector<Elem> const& p) {
        std::string s = encode_order(n, leq, p);
        if (best.empty() || s < best) {
          best = std::move(s);
        }
      });
      return best;
    }

    std::vector<std::uint8_t> decode_order(std::string const& s) {
      std::size_t const         n = static_cast<std::size_t>(s[0] - '0');
      std::vector<std::uint8_t> leq(n * n);
      for (std::size_t i = 0; i < n * n; ++i) {
        leq[i] = s[1 + i] == '1';
      }
      return leq;
    }

    std::vector<std::string> default_labels(FiniteLattice const& L, Elem unit) {
      std::vector<std::string> out(L.size());
      char                     next = 'a';
      for (std::size_t x = 0; x < L.size(); ++x) {
        if (E(x) == unit) {
          out[x] = "e";
        } else if (E(x) == L.bottom()) {
          out[x] = "0";
        } else if (E(x) == L.top()) {
          out[x] = "1";
        } else {
          out[x] = std::string(1, next++);
        }
      }
      return out;
    }

    FiniteResiduatedLattice with_labels(FiniteResiduatedLattice const& alg,
                                        std::string                    name) {
      RawAlgebra raw = alg.raw();
      raw.labels     = default_labels(alg.lattice(), alg.unit());
      raw.name       = std::move(name);
      return validate_algebra(std::move(raw));
    }

    void check_size(SearchSpec const& spec, std::size_t limit) {
      if (spec.lattice.size() > limit && !spec.force) {
        fail(ErrorKind::SizeGuard, "lattice has " + std::to_string(spec.lattice.size())
                                       + " elements; the limit is "
                                       + std::to_string(limit));
      }
    }

    std::vector<Elem> units_for(SearchSpec const& spec) {
      auto const& L = spec.lattice;
      if (spec.unit) {
        check(*spec.unit < L.size(), "pinned unit out of range");
        if (spec.require_integral && *spec.unit != L.top()) {
          return {};
        }
        return {*spec.unit};
      }
      if (spec.require_integral) {
        return {L.top()};
      }
      std::vector<Elem> all;
      for (std::size_t x = 0; x < L.size(); ++x) {
        all.push_back(E(x));
      }
      return all;
    }

    std::vector<FiniteResiduatedLattice>
    finish(SearchSpec const& spec, std::vector<FiniteResiduatedLattice> found) {
      std::vector<FiniteResiduatedLattice> kept;
      for (auto& a : found) {
        bool ok = std::all_of(spec.laws.begin(), spec.laws.end(),
                              [&](std::string const& l) { return satisfies(a, l); });
        if (ok) {
          kept.push_back(std::move(a));
        }
      }
      std::vector<FiniteResiduatedLattice> out;
      if (!spec.iso_reduce) {
        for (std::size_t i = 0; i < kept.size(); ++i) {
          out.push_back(with_labels(kept[i], spec.name_prefix + "-" + std::to_string(i + 1)));
        }
        return out;
      }
      std::map<std::string, FiniteResiduatedLattice> by_form;
      for (auto const& a : kept) {
        auto [form, perm] = canonical(a);
        if (!by_form.count(form)) {
          by_form.emplace(form, relabel(a, perm));
        }
      }
      std::size_t i = 0;
      for (auto const& [form, a] : by_form) {
        out.push_back(with_labels(a, spec.name_prefix + "-" + std::to_string(++i)));
      }
      return out;
    }

    class Search {
     public:
      Search(FiniteLattice const& L, Elem unit, bool integral)
          : _L(L), _n(L.size()), _u(unit), _integral(integral) {
        _ji = L.join_irreducibles();
        std::sort(_ji.rbegin(), _ji.rend());
        _k = _ji.size();
        _ji_pos.assign(_n, _k);
        for (std::size_t i = 0; i < _k; ++i) {
          _ji_pos[_ji[i]] = i;
        }
        _below.resize(_n);
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t i = 0; i < _k; ++i) {
            if (L.leq(_ji[i], E(x))) {
              _below[x].push_back(i);
            }
          }
        }
        _t.assign(_k * _k, -1);
      }

      std::vector<std::vector<Elem>> run() {
        go(0);
        return std::move(_out);
      }

     private:
      static constexpr int unset = -1;

      std::optional<Elem> prod(Elem x, Elem y) const {
        Elem acc = _L.bottom();
        for (auto i : _below[x]) {
          for (auto j : _below[y]) {
            int v = _t[i * _k + j];
            if (v == unset) {
              return std::nullopt;
            }
            acc = _L.join(acc, E(static_cast<std::size_t>(v)));
          }
        }
        return acc;
      }

      bool candidate_ok(std::size_t i, std::size_t j, Elem v) const {
        Elem const a = _ji[i], b = _ji[j];
        if (_integral && !_L.leq(v, _L.meet(a, b))) {
          return false;
        }
        if ((a == _u && v != b) || (b == _u && v != a)) {
          return false;
        }
        if ((_L.leq(a, _u) && !_L.leq(v, b)) || (_L.leq(b, _u) && !_L.leq(v, a))) {
          return false;
        }
        if ((_L.leq(_u, a) && !_L.leq(b, v)) || (_L.leq(_u, b) && !_L.leq(a, v))) {
          return false;
        }
        for (std::size_t p = 0; p < _k; ++p) {
          int w = _t[p * _k + j];
          if (w != unset) {
            Elem we = E(static_cast<std::size_t>(w));
            if ((_L.leq(_ji[p], a) && !_L.leq(we, v)) || (_L.leq(a, _ji[p]) && !_L.leq(v, we))) {
              return false;
            }
          }
          w = _t[i * _k + p];
          if (w != unset) {
            Elem we = E(static_cast<std::size_t>(w));
            if ((_L.leq(_ji[p], b) && !_L.leq(we, v)) || (_L.leq(b, _ji[p]) && !_L.leq(v, we))) {
              return false;
            }
          }
        }
        return true;
      }

      bool partial_assoc() const {
        for (std::size_t i = 0; i < _k; ++i) {
          for (std::size_t j = 0; j < _k; ++j) {
            int ab = _t[i * _k + j];
            if (ab == unset) {
              continue;
            }
            for (std::size_t l = 0; l < _k; ++l) {
              int bc = _t[j * _k + l];
              if (bc == unset) {
                continue;
              }
              auto lhs = prod(E(static_cast<std::size_t>(ab)), _ji[l]);
              if (!lhs) {
                continue;
              }
              auto rhs = prod(_ji[i], E(static_cast<std::size_t>(bc)));
              if (rhs && *lhs != *rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void go(std::size_t cell) {
        if (cell == _k * _k) {
          leaf();
          return;
        }
        std::size_t const i = cell / _k, j = cell % _k;
        for (std::size_t v = 0; v < _n; ++v) {
          if (!candidate_ok(i, j, E(v))) {
            continue;
          }
          _t[cell] = static_cast<int>(v);
          if (partial_assoc()) {
            go(cell + 1);
          }
          _t[cell] = unset;
        }
      }

      void leaf() {
        std::vector<Elem> m(_n * _n);
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            m[x * _n + y] = *prod(E(x), E(y));
          }
        }
        auto mul = [&](std::size_t x, std::size_t y) { return m[x * _n + y]; };
        for (std::size_t x = 0; x < _n; ++x) {
          if (mul(_u, x) != E(x) || mul(x, _u) != E(x)) {
            return;
          }
          for (std::size_t y = 0; y < _n; ++y) {
            for (std::size_t z = 0; z < _n; ++z) {
              Elem yz = _L.join(E(y), E(z));
              if (mul(x, yz) != _L.join(mul(x, y), mul(x, z))
                  || mul(yz, x) != _L.join(mul(y, x), mul(z, x))) {
                return;
              }
              if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
                return;
              }
            }
          }
        }
        _out.push_back(std::move(m));
      }

      FiniteLattice const&     _L;
      std::size_t              _n;
      Elem                     _u;
      bool                     _integral;
      std::vector<Elem>        _ji;
      std::size_t              _k = 0;
      std::vector<std::size_t> _ji_pos;
      std::vector<std::vector<std::size_t>> _below;
      std::vector<int>                      _t;
      std::vector<std::vector<Elem>>        _out;
    };

    RawAlgebra raw_for(FiniteLattice const& L, Elem unit, std::vector<Elem> mult) {
      RawAlgebra raw;
      raw.name   = "candidate";
      raw.labels = default_labels(L, unit);
      raw.leq    = L.order_matrix();
      raw.mult   = std::move(mult);
      raw.unit   = unit;
      return raw;
    }
  }  // namespace

  std::vector<FiniteResiduatedLattice> expansions(SearchSpec const& spec) {
    check_size(spec, expansion_size_limit);
    std::vector<FiniteResiduatedLattice> found;
    for (Elem u : units_for(spec)) {
      bool const integral = spec.require_integral || u == spec.lattice.top();
      for (auto& m : Search(spec.lattice, u, integral).run()) {
        std::optional<Error> err;
        auto alg = try_validate_algebra(raw_for(spec.lattice, u, std::move(m)), &err);
        check(alg.has_value(),
              "search produced an invalid table: " + std::string(err ? err->what() : ""));
        found.push_back(std::move(*alg));
      }
    }
    return finish(spec, std::move(found));
  }

  std::vector<FiniteResiduatedLattice> expansions_naive(SearchSpec const& spec) {
    check_size(spec, naive_size_limit);
    std::size_t const                    n = spec.lattice.size();
    std::vector<FiniteResiduatedLattice> found;
    for (Elem u : units_for(spec)) {
      std::vector<std::size_t> free;
      std::vector<Elem>        m(n * n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        m[u * n + x] = E(x);
        m[x * n + u] = E(x);
        for (std::size_t y = 0; y < n; ++y) {
          if (E(x) != u && E(y) != u) {
            free.push_back(x * n + y);
          }
        }
      }
      std::vector<std::size_t> digit(free.size(), 0);
      while (true) {
        for (std::size_t i = 0; i < free.size(); ++i) {
          m[free[i]] = E(digit[i]);
        }
        bool assoc = true;
        for (std::size_t x = 0; x < n && assoc; ++x) {
          for (std::size_t y = 0; y < n && assoc; ++y) {
            for (std::size_t z = 0; z < n && assoc; ++z) {
              assoc = m[m[x * n + y] * n + z] == m[x * n + m[y * n + z]];
            }
          }
        }
        if (assoc) {
          auto alg = try_validate_algebra(raw_for(spec.lattice, u, m));
          if (alg && (!spec.require_integral || alg->flags().integral)) {
            found.push_back(std::move(*alg));
          }
        }
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == n) {
          digit[i++] = 0;
        }
        if (i == digit.size()) {
          break;
        }
      }
    }
    return finish(spec, std::move(found));
  }

  std::string canonical_form(FiniteResiduatedLattice const& alg) {
    return canonical(alg).first;
  }

  FiniteResiduatedLattice canonical_relabeling(FiniteResiduatedLattice const& alg) {
    return relabel(alg, canonical(alg).second);
  }

  bool are_isomorphic(FiniteResiduatedLattice const& a, FiniteResiduatedLattice const& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
  }

  std::string canonical_form(FiniteLattice const& lat) {
    return canonical_order(lat.size(), lat.order_matrix());
  }

  std::vector<FiniteLattice> lattices_of_size(std::size_t n) {
    if (n > lattice_size_limit) {
      fail(ErrorKind::SizeGuard, "lattice enumeration is limited to "
                                     + std::to_string(lattice_size_limit) + " elements");
    }
    if (n == 0) {
      return {};
    }
    if (n == 1) {
      return {FiniteLattice::from_order(1, {1})};
    }
    // Posets on m = n - 2 points up to isomorphism, each grown by adding a
    // maximal point above a down-closed set.
    std::size_t const     m = n - 2;
    std::set<std::string> posets{canonical_order(0, {})};
    for (std::size_t size = 1; size <= m; ++size) {
      std::set<std::string> next;
      for (auto const& code : posets) {
        std::size_t const p   = size - 1;
        auto const        leq = decode_order(code);
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p); ++mask) {
          bool down = true;
          for (std::size_t x = 0; x < p && down; ++x) {
            if ((mask >> x) & 1U) {
              for (std::size_t y = 0; y < p; ++y) {
                if (leq[y * p + x] && !((mask >> y) & 1U)) {
                  down = false;
                }
              }
            }
          }
          if (!down) {
            continue;
          }
          std::vector<std::uint8_t> grown(size * size, 0);
          for (std::size_t x = 0; x < p; ++x) {
            for (std::size_t y = 0; y < p; ++y) {
              grown[x * size + y] = leq[x * p + y];
            }
            grown[x * size + p] = (mask >> x) & 1U;
          }
          grown[p * size + p] = 1;
          next.insert(canonical_order(size, grown));
        }
      }
      posets = std::move(next);
    }
    std::vector<std::pair<std::string, FiniteLattice>> out;
    for (auto const& code : posets) {
      auto const                mid = decode_order(code);
      std::vector<std::uint8_t> leq(n * n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        leq[0 * n + x]       = 1;
        leq[x * n + (n - 1)] = 1;
      }
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          leq[(x + 1) * n + (y + 1)] = mid[x * m + y];
        }
      }
      try {
        auto L = FiniteLattice::from_order(n, leq);
        out.emplace_back(canonical_form(L), std::move(L));
      } catch (Error const& err) {
        if (err.kind() != ErrorKind::NotALattice) {
          throw;
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    std::vector<FiniteLattice> result;
    for (auto& [code, L] : out) {
      result.push_back(std::move(L));
    }
    return result;
  }

  std::vector<FiniteLattice> all_lattices(std::size_t max_size) {
    std::vector<FiniteLattice> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
      auto v = lattices_of_size(n);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  std::vector<FiniteResiduatedLattice> build_corpus(CorpusOptions const& options) {
    std::vector<SearchSpec> jobs;
    for (std::size_t n = 1; n <= options.max_lattice_size; ++n) {
      auto const lats = lattices_of_size(n);
      for (std::size_t i = 0; i < lats.size(); ++i) {
        SearchSpec s;
        s.lattice          = lats[i];
        s.require_integral = true;
        s.name_prefix      = "irl" + std::to_string(n) + "." + std::to_string(i + 1);
        jobs.push_back(std::move(s));
      }
    }
    for (std::size_t n = 2; n <= options.max_nonintegral_size; ++n) {
      for (std::size_t u = 0; u + 1 < n; ++u) {
        SearchSpec s;
        s.lattice     = chain_lattice(n);
        s.unit        = E(u);
        s.name_prefix = "chain" + std::to_string(n) + ".u" + std::to_string(u);
        jobs.push_back(std::move(s));
      }
    }

    std::vector<std::vector<FiniteResiduatedLattice>> results(jobs.size());
    std::size_t const threads = std::max<std::size_t>(1, options.threads);
    for (std::size_t start = 0; start < jobs.size(); start += threads) {
      std::vector<std::future<std::vector<FiniteResiduatedLattice>>> batch;
      for (std::size_t j = start; j < std::min(jobs.size(), start + threads); ++j) {
        batch.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                   [&jobs, j] { return expansions(jobs[j]); }));
      }
      for (std::size_t j = 0; j < batch.size(); ++j) {
        results[start + j] = batch[j].get();
      }
    }

    std::vector<FiniteResiduatedLattice> corpus;
    std::set<std::string>                seen;
    if (options.include_builtins) {
      for (auto const& name : builtin_names()) {
        auto a = builtin(name);
        if (seen.insert(canonical_form(a)).second) {
          corpus.push_back(std::move(a));
        }
      }
    }
    for (auto& r : results) {
      for (auto& a : r) {
        if (seen.insert(canonical_form(a)).second) {
          corpus.push_back(std::move(a));
        }
      }
    }
    return corpus;
  }

  std::string corpus_digest(std::vector<FiniteResiduatedLattice> const& corpus) {
    std::uint64_t h    = 1469598103934665603ULL;
    auto          feed = [&](std::string const& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      h ^= 0xff;
      h *= 1099511628211ULL;
    };
    for (auto const& a : corpus) {
      feed(a.name());
      feed(canonical_form(a));
    }
    static char const* hex = "0123456789abcdef";
    std::string        out(16, '0');
    for (std::size_t i = 0; i < 16; ++i) {
      out[15 - i] = hex[(h >> (4 * i)) & 0xF];
    }
    return out;
  }

}  // namespace rlat
