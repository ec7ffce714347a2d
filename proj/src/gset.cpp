#include "semiperm/gset.hpp"

namespace semiperm {

  GSet::GSet(FiniteGroup group, std::size_t points, std::vector<element_id> action)
      : _group(std::move(group)), _points(points), _action(std::move(action)) {
    auto const k = _group.size();
    if (_points == 0) {
      throw InvalidAction("a G-set must have at least one point");
    }
    if (_action.size() != _points * k) {
      throw InvalidAction("action table has " + std::to_string(_action.size())
                          + " entries, expected "
                          + std::to_string(_points * k));
    }
    for (auto y : _action) {
      if (y >= _points) {
        throw InvalidAction("action table entry out of range");
      }
    }
    for (element_id x = 0; x < _points; ++x) {
      if (act(x, _group.identity()) != x) {
        throw InvalidAction("the identity moves point " + std::to_string(x));
      }
      for (element_id g = 0; g < k; ++g) {
        for (element_id h = 0; h < k; ++h) {
          if (act(act(x, g), h) != act(x, _group.product(g, h))) {
            throw InvalidAction("(xg)h != x(gh) at x = " + std::to_string(x)
                                + ", g = " + std::to_string(g)
                                + ", h = " + std::to_string(h));
          }
        }
      }
    }
  }

  GSet coset_space(FiniteGroup const& G, Subgroup const& H) {
    if (!is_subgroup(G, H.members)) {
      throw Error("coset_space: not a subgroup");
    }
    auto const              cosets = right_cosets(G, H);
    auto const              index  = coset_index(G, H);
    std::vector<element_id> action(cosets.size() * G.size());
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (element_id g = 0; g < G.size(); ++g) {
        action[i * G.size() + g] = index[G.product(cosets[i].front(), g)];
      }
    }
    return GSet(G, cosets.size(), std::move(action));
  }

  GSet regular_action(FiniteGroup const& G) {
    return GSet(G, G.size(), {G.carrier().table().begin(),
                              G.carrier().table().end()});
  }

  GSet trivial_action(FiniteGroup const& G, std::size_t points) {
    std::vector<element_id> action(points * G.size());
    for (element_id x = 0; x < points; ++x) {
      for (element_id g = 0; g < G.size(); ++g) {
        action[x * G.size() + g] = x;
      }
    }
    return GSet(G, points, std::move(action));
  }

  GSet disjoint_union(GSet const& X, GSet const& Y) {
    if (!(X.group() == Y.group())) {
      throw Error("disjoint_union: the G-sets are over different groups");
    }
    auto action = X.action_table();
    auto shift  = static_cast<element_id>(X.points());
    for (auto y : Y.action_table()) {
      action.push_back(y + shift);
    }
    return GSet(X.group(), X.points() + Y.points(), std::move(action));
  }

  TranslationSystem translation_system(GSet const& X) {
    auto const                           k = X.group().size();
    std::vector<std::vector<element_id>> maps(
        k, std::vector<element_id>(X.points()));
    for (element_id g = 0; g < k; ++g) {
      for (element_id x = 0; x < X.points(); ++x) {
        maps[g][x] = X.act(x, g);
      }
    }
    return TranslationSystem(X.points(), std::move(maps));
  }

  Partition orbits(GSet const& X) {
    detail::UnionFind uf(X.points());
    for (element_id x = 0; x < X.points(); ++x) {
      for (element_id g = 0; g < X.group().size(); ++g) {
        uf.unite(x, X.act(x, g));
      }
    }
    return uf.to_partition();
  }

  bool is_transitive(GSet const& X) {
    return orbits(X).number_of_classes() == 1;
  }

  Subgroup stabilizer(GSet const& X, element_id x) {
    if (x >= X.points()) {
      throw Error("stabilizer: point out of range");
    }
    Subgroup out;
    for (element_id g = 0; g < X.group().size(); ++g) {
      if (X.act(x, g) == x) {
        out.members.push_back(g);
      }
    }
    return out;
  }

  bool is_gset_congruence(GSet const& X, Partition const& p) {
    return translation_system(X).is_compatible(p);
  }

  std::vector<GSetCongruence> all_gset_congruences(GSet const& X,
                                                   std::size_t cap) {
    return translation_system(X).lattice(cap);
  }

  namespace {
    void require_transitive(GSet const& X, element_id x) {
      if (x >= X.points()) {
        throw Error("base point out of range");
      }
      if (!is_transitive(X)) {
        throw NotTransitive("the group does not act transitively");
      }
    }
  }  // namespace

  Subgroup phi(GSet const& X, element_id x, GSetCongruence const& alpha) {
    require_transitive(X, x);
    if (alpha.subject_order() != X.points()) {
      throw SubjectMismatch("congruence and G-set sizes differ");
    }
    Subgroup out;
    for (element_id g = 0; g < X.group().size(); ++g) {
      if (alpha.related(X.act(x, g), x)) {
        out.members.push_back(g);
      }
    }
    return out;
  }

  GSetCongruence psi(GSet const& X, element_id x, Subgroup const& H) {
    require_transitive(X, x);
    auto const& G = X.group();
    if (!is_subgroup(G, H.members)) {
      throw Error("psi: not a subgroup");
    }
    if (!is_subset(stabilizer(X, x).members, H.members)) {
      throw StabilizerNotContained(
          "the subgroup does not contain the stabilizer of the base point");
    }
    auto const                 index = coset_index(G, H);
    std::vector<std::uint32_t> labels(X.points());
    for (element_id g = 0; g < G.size(); ++g) {
      labels[X.act(x, g)] = index[g];
    }
    return Partition::from_labels(labels);
  }

  CommutationCheck commutation_check(GSet const&           X,
                                     element_id            x,
                                     GSetCongruence const& alpha,
                                     GSetCongruence const& beta) {
    require_transitive(X, x);
    CommutationCheck out;
    out.congruences_commute = commutes(alpha, beta).commutes;
    out.subgroups_commute
        = product_commutes(X.group(), phi(X, x, alpha), phi(X, x, beta))
              .commutes;
    return out;
  }

}  // namespace semiperm
