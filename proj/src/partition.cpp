#include "semiperm/partition.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <unordered_set>

namespace semiperm {

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition Partition::identity(std::size_t n) {
    Partition p;
    p._class_of = all_elements(n);
    return p;
  }

  Partition Partition::universal(std::size_t n) {
    Partition p;
    p._class_of.assign(n, 0);
    return p;
  }

  Partition Partition::from_labels(std::vector<std::uint32_t> const& labels) {
    Partition                                    p;
    std::vector<std::pair<std::uint32_t, element_id>> first;
    p._class_of.resize(labels.size());
    for (element_id a = 0; a < labels.size(); ++a) {
      auto it = std::find_if(first.begin(), first.end(), [&](auto const& x) {
        return x.first == labels[a];
      });
      if (it == first.end()) {
        first.emplace_back(labels[a], a);
        p._class_of[a] = a;
      } else {
        p._class_of[a] = it->second;
      }
    }
    return p;
  }

  Partition Partition::from_class_of(std::vector<element_id> class_of) {
    for (element_id a = 0; a < class_of.size(); ++a) {
      auto const r = class_of[a];
      if (r > a || class_of[r] != r) {
        throw Error("class vector is not canonical at position "
                    + std::to_string(a));
      }
    }
    Partition p;
    p._class_of = std::move(class_of);
    return p;
  }

  Partition Partition::from_classes(std::size_t                     n,
                                    std::vector<element_set> const& classes) {
    std::vector<std::uint32_t> labels(n, UINT32_MAX);
    for (std::uint32_t i = 0; i < classes.size(); ++i) {
      for (auto a : classes[i]) {
        if (a >= n || labels[a] != UINT32_MAX) {
          throw Error("classes do not partition the set");
        }
        labels[a] = i;
      }
    }
    if (std::find(labels.begin(), labels.end(), UINT32_MAX) != labels.end()) {
      throw Error("classes do not cover the set");
    }
    return from_labels(labels);
  }

  std::size_t Partition::number_of_classes() const {
    std::size_t k = 0;
    for (element_id a = 0; a < _class_of.size(); ++a) {
      k += (_class_of[a] == a);
    }
    return k;
  }

  std::vector<element_set> Partition::classes() const {
    std::vector<element_set> out;
    std::vector<std::size_t> index(_class_of.size());
    for (element_id a = 0; a < _class_of.size(); ++a) {
      if (_class_of[a] == a) {
        index[a] = out.size();
        out.push_back({a});
      } else {
        out[index[_class_of[a]]].push_back(a);
      }
    }
    return out;
  }

  element_set Partition::class_members(element_id a) const {
    element_set out;
    for (element_id b = 0; b < _class_of.size(); ++b) {
      if (_class_of[b] == _class_of[a]) {
        out.push_back(b);
      }
    }
    return out;
  }

  element_set Partition::representatives() const {
    element_set out;
    for (element_id a = 0; a < _class_of.size(); ++a) {
      if (_class_of[a] == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    if (other.subject_order() != subject_order()) {
      throw SubjectMismatch("partitions of different sets");
    }
    for (element_id a = 0; a < _class_of.size(); ++a) {
      if (!other.related(a, _class_of[a])) {
        return false;
      }
    }
    return true;
  }

  bool Partition::is_identity() const {
    return number_of_classes() == _class_of.size();
  }

  bool Partition::is_universal() const {
    return number_of_classes() <= 1;
  }

  Partition meet(Partition const& x, Partition const& y) {
    if (x.subject_order() != y.subject_order()) {
      throw SubjectMismatch("partitions of different sets");
    }
    auto const                 n = x.subject_order();
    std::vector<std::uint32_t> labels(n);
    for (element_id a = 0; a < n; ++a) {
      labels[a] = x.class_of(a) * static_cast<std::uint32_t>(n) + y.class_of(a);
    }
    return Partition::from_labels(labels);
  }

  Partition join_equivalences(Partition const& x, Partition const& y) {
    if (x.subject_order() != y.subject_order()) {
      throw SubjectMismatch("partitions of different sets");
    }
    detail::UnionFind uf(x);
    for (element_id a = 0; a < y.subject_order(); ++a) {
      uf.unite(a, y.class_of(a));
    }
    return uf.to_partition();
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  Relation::Relation(std::size_t n)
      : _n(n), _words((n + 63) / 64), _bits(n * ((n + 63) / 64), 0) {}

  std::size_t Relation::size() const {
    std::size_t k = 0;
    for (auto w : _bits) {
      k += std::popcount(w);
    }
    return k;
  }

  std::vector<std::pair<element_id, element_id>> Relation::pairs() const {
    std::vector<std::pair<element_id, element_id>> out;
    for (element_id a = 0; a < _n; ++a) {
      for (element_id b = 0; b < _n; ++b) {
        if (contains(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::optional<std::pair<element_id, element_id>>
  Relation::first_not_in(Relation const& other) const {
    for (element_id a = 0; a < _n; ++a) {
      for (std::size_t w = 0; w < _words; ++w) {
        auto const diff
            = _bits[a * _words + w] & ~other._bits[a * other._words + w];
        if (diff != 0) {
          auto const b = static_cast<element_id>(w * 64 + std::countr_zero(diff));
          return std::make_pair(a, b);
        }
      }
    }
    return std::nullopt;
  }

  Relation as_relation(Partition const& p) {
    return compose(p, Partition::identity(p.subject_order()));
  }

  Relation compose(Partition const& x, Partition const& y) {
    if (x.subject_order() != y.subject_order()) {
      throw SubjectMismatch("cannot compose relations on different sets");
    }
    auto const n = x.subject_order();
    Relation   r(n);
    auto const w = r._words;
    // Row of a y-class representative: the bitset of the class.
    std::vector<std::uint64_t> y_class(n * w, 0);
    for (element_id c = 0; c < n; ++c) {
      y_class[y.class_of(c) * w + c / 64] |= std::uint64_t(1) << (c % 64);
    }
    // Row of an x-class representative: union of y-classes of its members.
    for (element_id c = 0; c < n; ++c) {
      auto const xr = x.class_of(c);
      auto const yr = y.class_of(c);
      for (std::size_t i = 0; i < w; ++i) {
        r._bits[xr * w + i] |= y_class[yr * w + i];
      }
    }
    for (element_id a = 0; a < n; ++a) {
      auto const xr = x.class_of(a);
      if (xr != a) {
        std::copy_n(r._bits.begin() + xr * w, w, r._bits.begin() + a * w);
      }
    }
    return r;
  }

  CommuteResult commutes(Partition const& x, Partition const& y) {
    auto const xy = compose(x, y);
    auto const yx = compose(y, x);
    if (xy == yx) {
      return {true, std::nullopt};
    }
    // x o y and y o x are converse to each other, so the first difference
    // in row-major order can always be oriented to lie in x o y.
    auto const u = xy.first_not_in(yx);
    auto const v = yx.first_not_in(xy);
    std::pair<element_id, element_id> w;
    if (u && (!v || *u < *v)) {
      w = *u;
    } else {
      w = {v->second, v->first};
    }
    return {false, w};
  }

  ////////////////////////////////////////////////////////////////////////
  // UnionFind
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    UnionFind::UnionFind(std::size_t n) : _parent(all_elements(n)) {}

    UnionFind::UnionFind(Partition const& p) : _parent(p.class_vector()) {}

    element_id UnionFind::find(element_id a) {
      while (_parent[a] != a) {
        _parent[a] = _parent[_parent[a]];
        a          = _parent[a];
      }
      return a;
    }

    bool UnionFind::unite(element_id a, element_id b) {
      a = find(a);
      b = find(b);
      if (a == b) {
        return false;
      }
      // Keep the smaller id as root so roots are class minima.
      if (b < a) {
        std::swap(a, b);
      }
      _parent[b] = a;
      return true;
    }

    Partition UnionFind::to_partition() {
      std::vector<element_id> class_of(_parent.size());
      for (element_id a = 0; a < _parent.size(); ++a) {
        class_of[a] = find(a);
      }
      return Partition::from_class_of(std::move(class_of));
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // TranslationSystem
  ////////////////////////////////////////////////////////////////////////

  TranslationSystem::TranslationSystem(std::size_t                          points,
                                       std::vector<std::vector<element_id>> maps)
      : _points(points), _maps(std::move(maps)) {
    for (auto const& f : _maps) {
      if (f.size() != _points) {
        throw ShapeError("translation map has the wrong length");
      }
      for (auto x : f) {
        if (x >= _points) {
          throw ShapeError("translation map value out of range");
        }
      }
    }
  }

  TranslationSystem TranslationSystem::two_sided(FiniteSemigroup const& S) {
    auto const                           n = S.size();
    std::vector<std::vector<element_id>> maps(2 * n,
                                              std::vector<element_id>(n));
    for (element_id s = 0; s < n; ++s) {
      for (element_id x = 0; x < n; ++x) {
        maps[2 * s][x]     = S.product(s, x);
        maps[2 * s + 1][x] = S.product(x, s);
      }
    }
    return TranslationSystem(n, std::move(maps));
  }

  bool TranslationSystem::is_compatible(Partition const& p) const {
    if (p.subject_order() != _points) {
      throw SubjectMismatch("partition and translation system sizes differ");
    }
    for (auto const& f : _maps) {
      for (element_id x = 0; x < _points; ++x) {
        if (!p.related(f[x], f[p.class_of(x)])) {
          return false;
        }
      }
    }
    return true;
  }

  Partition TranslationSystem::closure(
      Partition const&                                      base,
      std::vector<std::pair<element_id, element_id>> const& pairs) const {
    if (base.subject_order() != _points) {
      throw SubjectMismatch("partition and translation system sizes differ");
    }
    detail::UnionFind                              uf(base);
    std::vector<std::pair<element_id, element_id>> queue(pairs);
    while (!queue.empty()) {
      auto const [a, b] = queue.back();
      queue.pop_back();
      if (a >= _points || b >= _points) {
        throw Error("pair outside the underlying set");
      }
      if (uf.unite(a, b)) {
        for (auto const& f : _maps) {
          if (f[a] != f[b]) {
            queue.emplace_back(f[a], f[b]);
          }
        }
      }
    }
    return uf.to_partition();
  }

  Partition TranslationSystem::closure(
      std::vector<std::pair<element_id, element_id>> const& pairs) const {
    return closure(Partition::identity(_points), pairs);
  }

  namespace {
    struct PartitionHash {
      std::size_t operator()(Partition const& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : p.class_vector()) {
          h = (h ^ x) * 0x100000001b3ULL;
        }
        return h;
      }
    };
  }  // namespace

  std::vector<Partition> TranslationSystem::lattice(std::size_t cap) const {
    auto const n = _points;
    // One generating pair per distinct principal partition.
    std::unordered_set<Partition, PartitionHash>   principals;
    std::vector<std::pair<element_id, element_id>> generators;
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = a + 1; b < n; ++b) {
        if (principals.insert(closure({{a, b}})).second) {
          generators.emplace_back(a, b);
        }
      }
    }
    std::unordered_set<Partition, PartitionHash> found;
    std::deque<Partition>                        queue;
    auto const                                   bottom = Partition::identity(n);
    found.insert(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
      auto const c = std::move(queue.front());
      queue.pop_front();
      for (auto const& [a, b] : generators) {
        if (c.related(a, b)) {
          continue;
        }
        auto d = closure(c, {{a, b}});
        if (found.insert(d).second) {
          if (found.size() > cap) {
            throw BoundExceeded("more than " + std::to_string(cap)
                                + " congruences");
          }
          queue.push_back(std::move(d));
        }
      }
    }
    std::vector<Partition> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

}  // namespace semiperm
