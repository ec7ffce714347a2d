#include "semiperm/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semiperm {

  FiniteGroup as_group(FiniteSemigroup const& S) {
    auto const identity = special_elements(S).identity;
    if (!identity) {
      throw NotAGroup("no two-sided identity");
    }
    auto const              n = S.size();
    std::vector<element_id> inverse(n);
    for (element_id a = 0; a < n; ++a) {
      bool found = false;
      for (element_id b = 0; b < n && !found; ++b) {
        if (S.product(a, b) == *identity && S.product(b, a) == *identity) {
          inverse[a] = b;
          found      = true;
        }
      }
      if (!found) {
        throw NotAGroup("element " + S.label(a) + " has no inverse");
      }
    }
    FiniteGroup G;
    G._carrier  = S;
    G._identity = *identity;
    G._inverse  = std::move(inverse);
    return G;
  }

  bool is_subgroup(FiniteGroup const& G, element_set const& X) {
    if (!contains(X, G.identity())) {
      return false;
    }
    for (auto x : X) {
      if (x >= G.size() || !contains(X, G.inverse(x))) {
        return false;
      }
      for (auto y : X) {
        if (!contains(X, G.product(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  Subgroup subgroup_closure(FiniteGroup const& G, element_set const& gens) {
    element_set with_identity = gens;
    with_identity.push_back(G.identity());
    return {generated_subsemigroup(G.carrier(), make_set(with_identity))};
  }

  Subgroup make_subgroup(FiniteGroup const& G, element_set X) {
    X = make_set(std::move(X));
    if (!is_subgroup(G, X)) {
      throw Error("the given elements do not form a subgroup");
    }
    return {std::move(X)};
  }

  Subgroup trivial_subgroup(FiniteGroup const& G) {
    return {{G.identity()}};
  }

  Subgroup whole_group(FiniteGroup const& G) {
    return {all_elements(G.size())};
  }

  std::vector<Subgroup> all_subgroups(FiniteGroup const& G, std::size_t bound) {
    if (G.size() > bound) {
      throw BoundExceeded("group of order " + std::to_string(G.size())
                          + " exceeds the subgroup enumeration bound "
                          + std::to_string(bound));
    }
    std::set<Subgroup> found;
    for (element_id g = 0; g < G.size(); ++g) {
      found.insert(subgroup_closure(G, {g}));
      for (element_id h = g + 1; h < G.size(); ++h) {
        found.insert(subgroup_closure(G, {g, h}));
      }
    }
    // Every subgroup is the join of the cyclic subgroups it contains.
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Subgroup> const current(found.begin(), found.end());
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          if (is_subset(current[i].members, current[j].members)
              || is_subset(current[j].members, current[i].members)) {
            continue;
          }
          auto J = subgroup_closure(
              G, set_union(current[i].members, current[j].members));
          changed = found.insert(std::move(J)).second || changed;
        }
      }
    }
    return {found.begin(), found.end()};
  }

  std::vector<Subgroup> interval_above(FiniteGroup const& G, Subgroup const& H) {
    if (!is_subgroup(G, H.members)) {
      throw Error("interval_above: not a subgroup");
    }
    std::set<Subgroup>    found{H};
    std::vector<Subgroup> queue{H};
    while (!queue.empty()) {
      auto const K = std::move(queue.back());
      queue.pop_back();
      for (element_id g = 0; g < G.size(); ++g) {
        if (K.contains(g)) {
          continue;
        }
        auto gens = K.members;
        gens.push_back(g);
        auto L = subgroup_closure(G, make_set(std::move(gens)));
        if (found.insert(L).second) {
          queue.push_back(std::move(L));
        }
      }
    }
    return {found.begin(), found.end()};
  }

  ProductCommute product_commutes(FiniteGroup const& G,
                                  Subgroup const&    H,
                                  Subgroup const&    K) {
    ProductCommute out;
    out.HK       = set_product(G.carrier(), H.members, K.members);
    out.KH       = set_product(G.carrier(), K.members, H.members);
    out.commutes = out.HK == out.KH;
    return out;
  }

  std::vector<element_set> right_cosets(FiniteGroup const& G, Subgroup const& H) {
    std::vector<element_set> out;
    std::vector<bool>        seen(G.size(), false);
    for (element_id g = 0; g < G.size(); ++g) {
      if (seen[g]) {
        continue;
      }
      element_set coset;
      for (auto h : H.members) {
        coset.push_back(G.product(h, g));
      }
      coset = make_set(std::move(coset));
      for (auto x : coset) {
        seen[x] = true;
      }
      out.push_back(std::move(coset));
    }
    return out;
  }

  std::vector<element_id> coset_index(FiniteGroup const& G, Subgroup const& H) {
    std::vector<element_id> index(G.size());
    auto const              cosets = right_cosets(G, H);
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (auto g : cosets[i]) {
        index[g] = static_cast<element_id>(i);
      }
    }
    return index;
  }

  FiniteGroup dual(FiniteGroup const& G) {
    return as_group(transpose(G.carrier()));
  }

  FiniteGroup direct_product(FiniteGroup const& G1, FiniteGroup const& G2) {
    auto const              n1 = G1.size(), n2 = G2.size(), n = n1 * n2;
    std::vector<element_id> table(n * n);
    std::vector<std::string> labels(n);
    for (element_id x = 0; x < n; ++x) {
      auto const x1 = x / n2, x2 = x % n2;
      labels[x] = "(" + G1.carrier().label(x1) + "," + G2.carrier().label(x2)
                  + ")";
      for (element_id y = 0; y < n; ++y) {
        auto const y1 = y / n2, y2 = y % n2;
        table[x * n + y] = static_cast<element_id>(G1.product(x1, y1) * n2
                                                   + G2.product(x2, y2));
      }
    }
    return as_group(FiniteSemigroup::from_table_no_checks(
        n, std::move(table), std::move(labels)));
  }

  std::size_t element_order(FiniteGroup const& G, element_id g) {
    std::size_t k = 1;
    for (auto x = g; x != G.identity(); x = G.product(x, g)) {
      ++k;
    }
    return k;
  }

  bool is_abelian(FiniteGroup const& G) {
    return is_commutative(G.carrier());
  }

  ////////////////////////////////////////////////////////////////////////
  // Small groups
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error("cyclic_group: order must be positive");
    }
    std::vector<element_id>  table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = static_cast<element_id>((i + j) % n);
      }
    }
    return as_group(FiniteSemigroup::from_table_no_checks(
        n, std::move(table), std::move(labels)));
  }

  namespace {
    std::string word_label(std::size_t i, std::size_t j) {
      std::string s;
      if (i > 0) {
        s += i == 1 ? "a" : "a^" + std::to_string(i);
      }
      if (j > 0) {
        s += "b";
      }
      return s.empty() ? "e" : s;
    }

    FiniteGroup checked_group(std::size_t                n,
                              std::vector<element_id>    table,
                              std::vector<std::string>   labels) {
      if (find_nonassociative_triple(n, table)) {
        throw InternalInconsistency("group presentation is not associative");
      }
      return as_group(FiniteSemigroup::from_table_no_checks(
          n, std::move(table), std::move(labels)));
    }
  }  // namespace

  FiniteGroup dihedral_group(std::size_t n) {
    if (n == 0) {
      throw Error("dihedral_group: n must be positive");
    }
    auto const               order = 2 * n;
    std::vector<element_id>  table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t x = 0; x < order; ++x) {
      auto const i = x % n, j = x / n;
      labels[x]    = word_label(i, j);
      for (std::size_t y = 0; y < order; ++y) {
        auto const k = y % n, l = y / n;
        // b a^k = a^-k b
        auto const e = (j == 0 ? i + k : i + n - k) % n;
        table[x * order + y] = static_cast<element_id>(e + n * ((j + l) % 2));
      }
    }
    return checked_group(order, std::move(table), std::move(labels));
  }

  FiniteGroup dicyclic_group(std::size_t n) {
    if (n == 0) {
      throw Error("dicyclic_group: n must be positive");
    }
    auto const               m = 2 * n, order = 4 * n;
    std::vector<element_id>  table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t x = 0; x < order; ++x) {
      auto const i = x % m, j = x / m;
      labels[x]    = word_label(i, j);
      for (std::size_t y = 0; y < order; ++y) {
        auto const k = y % m, l = y / m;
        // b a^k = a^-k b and b^2 = a^n
        auto e = (j == 0 ? i + k : i + m - k) % m;
        auto b = j + l;
        if (b == 2) {
          e = (e + n) % m;
          b = 0;
        }
        table[x * order + y] = static_cast<element_id>(e + m * b);
      }
    }
    return checked_group(order, std::move(table), std::move(labels));
  }

  FiniteGroup quaternion_group() {
    return dicyclic_group(2);
  }

  FiniteGroup
  group_from_permutations(std::vector<std::vector<element_id>> const& gens) {
    if (gens.empty()) {
      throw Error("group_from_permutations: no generators");
    }
    auto const m = gens.front().size();
    using perm   = std::vector<element_id>;
    for (auto const& p : gens) {
      if (p.size() != m || make_set(p) != all_elements(m)) {
        throw Error("group_from_permutations: not a permutation");
      }
    }
    auto compose = [m](perm const& p, perm const& q) {
      perm r(m);
      for (std::size_t x = 0; x < m; ++x) {
        r[x] = q[p[x]];
      }
      return r;
    };
    std::set<perm>    elements{all_elements(m)};
    std::vector<perm> queue{all_elements(m)};
    while (!queue.empty()) {
      auto const p = std::move(queue.back());
      queue.pop_back();
      for (auto const& g : gens) {
        auto q = compose(p, g);
        if (elements.insert(q).second) {
          queue.push_back(std::move(q));
        }
      }
    }
    std::vector<perm> const   list(elements.begin(), elements.end());
    std::map<perm, element_id> index;
    std::vector<std::string>  labels;
    for (std::size_t i = 0; i < list.size(); ++i) {
      index[list[i]] = static_cast<element_id>(i);
      std::string s  = "[";
      for (std::size_t x = 0; x < m; ++x) {
        s += (x ? " " : "") + std::to_string(list[i][x]);
      }
      labels.push_back(s + "]");
    }
    auto const              n = list.size();
    std::vector<element_id> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = index.at(compose(list[i], list[j]));
      }
    }
    return as_group(FiniteSemigroup::from_table_no_checks(
        n, std::move(table), std::move(labels)));
  }

  FiniteGroup symmetric_group(std::size_t k) {
    if (k <= 1) {
      return group_from_permutations({all_elements(k == 0 ? 1 : k)});
    }
    auto swap = all_elements(k);
    std::swap(swap[0], swap[1]);
    auto cycle = all_elements(k);
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    return group_from_permutations({swap, cycle});
  }

  FiniteGroup alternating_group(std::size_t k) {
    if (k < 3) {
      return group_from_permutations({all_elements(k == 0 ? 1 : k)});
    }
    std::vector<std::vector<element_id>> gens;
    for (std::size_t i = 2; i < k; ++i) {
      // the 3-cycle (0 1 i)
      auto p = all_elements(k);
      p[0]   = 1;
      p[1]   = static_cast<element_id>(i);
      p[i]   = 0;
      gens.push_back(std::move(p));
    }
    return group_from_permutations(gens);
  }

  std::vector<NamedGroup> groups_up_to_order_12() {
    auto Z = [](std::size_t n) { return cyclic_group(n); };
    return {
        {"Z1", Z(1)},
        {"Z2", Z(2)},
        {"Z3", Z(3)},
        {"Z4", Z(4)},
        {"Z2xZ2", direct_product(Z(2), Z(2))},
        {"Z5", Z(5)},
        {"Z6", Z(6)},
        {"S3", symmetric_group(3)},
        {"Z7", Z(7)},
        {"Z8", Z(8)},
        {"Z2xZ4", direct_product(Z(2), Z(4))},
        {"Z2xZ2xZ2", direct_product(Z(2), direct_product(Z(2), Z(2)))},
        {"D4", dihedral_group(4)},
        {"Q8", quaternion_group()},
        {"Z9", Z(9)},
        {"Z3xZ3", direct_product(Z(3), Z(3))},
        {"Z10", Z(10)},
        {"D5", dihedral_group(5)},
        {"Z11", Z(11)},
        {"Z12", Z(12)},
        {"Z2xZ6", direct_product(Z(2), Z(6))},
        {"D6", dihedral_group(6)},
        {"A4", alternating_group(4)},
        {"Dic3", dicyclic_group(3)},
    };
  }

}  // namespace semiperm
