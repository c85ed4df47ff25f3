#include "rlat/partition.hpp"

#include <algorithm>
#include <numeric>

namespace rlat {

  namespace {
    std::vector<std::size_t> normalize(std::vector<std::size_t> const& raw,
                                       std::size_t&                    count) {
      std::vector<std::size_t> out(raw.size());
      std::vector<std::size_t> seen;
      for (std::size_t i = 0; i < raw.size(); ++i) {
        std::size_t id = seen.size();
        for (std::size_t j = 0; j < seen.size(); ++j) {
          if (seen[j] == raw[i]) {
            id = j;
            break;
          }
        }
        if (id == seen.size()) {
          seen.push_back(raw[i]);
        }
        out[i] = id;
      }
      count = seen.size();
      return out;
    }

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
      Partition partition() {
        std::vector<std::size_t> ids(parent.size());
        for (std::size_t i = 0; i < parent.size(); ++i) {
          ids[i] = find(i);
        }
        return Partition(std::move(ids));
      }
    };

    template <typename F>
    bool compatible(std::size_t n, Partition const& p, F&& op) {
      // Checking one argument at a time suffices for an equivalence.
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          auto x = static_cast<Elem>(a), y = static_cast<Elem>(b);
          if (!p.same(x, y)) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            auto z = static_cast<Elem>(c);
            if (!p.same(op(x, z), op(y, z)) || !p.same(op(z, x), op(z, y))) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  Partition::Partition(std::vector<std::size_t> block_of) {
    _block = normalize(block_of, _num_blocks);
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return Partition(std::move(ids));
  }

  Partition Partition::full(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
  }

  std::vector<std::vector<Elem>> Partition::blocks() const {
    std::vector<std::vector<Elem>> out(_num_blocks);
    for (std::size_t i = 0; i < _block.size(); ++i) {
      out[_block[i]].push_back(static_cast<Elem>(i));
    }
    return out;
  }

  Subset Partition::block_of(Elem x) const {
    Subset s;
    for (std::size_t i = 0; i < _block.size(); ++i) {
      if (_block[i] == _block[x]) {
        s.insert(static_cast<Elem>(i));
      }
    }
    return s;
  }

  bool Partition::refines(Partition const& other) const {
    for (std::size_t i = 0; i < _block.size(); ++i) {
      for (std::size_t j = i + 1; j < _block.size(); ++j) {
        if (_block[i] == _block[j] && other._block[i] != other._block[j]) {
          return false;
        }
      }
    }
    return true;
  }

  Partition partition_join(Partition const& a, Partition const& b) {
    UnionFind uf(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        auto x = static_cast<Elem>(i), y = static_cast<Elem>(j);
        if (a.same(x, y) || b.same(x, y)) {
          uf.unite(i, j);
        }
      }
    }
    return uf.partition();
  }

  Partition partition_meet(Partition const& a, Partition const& b) {
    std::vector<std::size_t> ids(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ids[i] = a.block(static_cast<Elem>(i)) * a.size()
               + b.block(static_cast<Elem>(i));
    }
    return Partition(std::move(ids));
  }

  bool is_lattice_congruence(FiniteResiduatedLattice const& alg,
                             Partition const&               p) {
    std::size_t const n = alg.size();
    return compatible(n, p, [&](Elem x, Elem y) { return alg.join(x, y); })
           && compatible(n, p, [&](Elem x, Elem y) { return alg.meet(x, y); });
  }

  bool is_mult_compatible(FiniteResiduatedLattice const& alg,
                          Partition const&               p) {
    return compatible(alg.size(), p, [&](Elem x, Elem y) {
      return alg.mult(x, y);
    });
  }

  bool is_congruence(FiniteResiduatedLattice const& alg, Partition const& p) {
    std::size_t const n = alg.size();
    return is_lattice_congruence(alg, p) && is_mult_compatible(alg, p)
           && compatible(n, p, [&](Elem x, Elem y) { return alg.lres(x, y); })
           && compatible(n, p, [&](Elem x, Elem y) { return alg.rres(x, y); });
  }

  Partition
  congruence_generated(FiniteResiduatedLattice const&            alg,
                       std::vector<std::pair<Elem, Elem>> const& pairs) {
    std::size_t const n = alg.size();
    UnionFind         uf(n);
    for (auto [a, b] : pairs) {
      uf.unite(a, b);
    }
    // Saturate: whenever x ~ y, every unary polynomial image of the pair
    // must be identified. Iterating the basic translations to a fixpoint
    // gives the generated congruence.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (uf.find(a) != uf.find(b)) {
            continue;
          }
          auto x = static_cast<Elem>(a), y = static_cast<Elem>(b);
          for (std::size_t c = 0; c < n; ++c) {
            auto z = static_cast<Elem>(c);
            changed |= uf.unite(alg.join(x, z), alg.join(y, z));
            changed |= uf.unite(alg.meet(x, z), alg.meet(y, z));
            changed |= uf.unite(alg.mult(x, z), alg.mult(y, z));
            changed |= uf.unite(alg.mult(z, x), alg.mult(z, y));
            changed |= uf.unite(alg.lres(x, z), alg.lres(y, z));
            changed |= uf.unite(alg.lres(z, x), alg.lres(z, y));
            changed |= uf.unite(alg.rres(x, z), alg.rres(y, z));
            changed |= uf.unite(alg.rres(z, x), alg.rres(z, y));
          }
        }
      }
    }
    return uf.partition();
  }

}  // namespace rlat
