#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "semiperm/gset.hpp"

namespace semiperm {
  using namespace fixtures;

  namespace {
    bool compatible(GSet const& X, oracle::table_t const& cls) {
      for (element_id x = 0; x < X.points(); ++x) {
        for (element_id y = 0; y < X.points(); ++y) {
          if (cls[x] != cls[y]) {
            continue;
          }
          for (element_id g = 0; g < X.group().size(); ++g) {
            if (cls[X.act(x, g)] != cls[X.act(y, g)]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::set<oracle::table_t> filtered(GSet const& X) {
      std::set<oracle::table_t> out;
      for (auto const& p : oracle::set_partitions(X.points())) {
        if (compatible(X, p)) {
          out.insert(p);
        }
      }
      return out;
    }

    std::set<oracle::table_t> as_set(std::vector<Partition> const& L) {
      std::set<oracle::table_t> out;
      for (auto const& p : L) {
        out.emplace(p.class_vector().begin(), p.class_vector().end());
      }
      return out;
    }

    // Every transitive coset space of a group of order at most 12.
    template <typename F>
    void for_each_coset_space(F f) {
      for (auto const& [name, G] : groups_up_to_order_12()) {
        for (auto const& H : all_subgroups(G)) {
          f(name, G, H, coset_space(G, H));
        }
      }
    }
  }  // namespace

  TEST_CASE("GSet validates the action", "[gset][quick]") {
    auto const Z2 = cyclic_group(2);
    REQUIRE_NOTHROW(GSet(Z2, 2, {0, 1, 1, 0}));
    REQUIRE_THROWS_AS(GSet(Z2, 2, {1, 0, 0, 1}), InvalidAction);
    REQUIRE_THROWS_AS(GSet(Z2, 2, {0, 2, 1, 0}), InvalidAction);
    REQUIRE_THROWS_AS(GSet(Z2, 2, {0, 1, 1}), InvalidAction);
    // x(gh) = (xg)h fails for a non-action of S3
    auto const S3 = symmetric_group(3);
    std::vector<element_id> bad(2 * 6);
    for (element_id g = 0; g < 6; ++g) {
      bad[g]     = g == 0 ? 0 : 1;
      bad[6 + g] = g == 0 ? 1 : 0;
    }
    REQUIRE_THROWS_AS(GSet(S3, 2, bad), InvalidAction);
  }

  TEST_CASE("orbits and is_transitive", "[gset][quick]") {
    auto const S3 = symmetric_group(3);
    for (auto const& H : all_subgroups(S3)) {
      REQUIRE(is_transitive(coset_space(S3, H)));
    }
    auto const Z4 = cyclic_group(4);
    auto const U  = disjoint_union(coset_space(Z4, make_subgroup(Z4, {0, 2})),
                                   regular_action(Z4));
    REQUIRE(orbits(U).number_of_classes() == 2);
    REQUIRE(!is_transitive(U));
    REQUIRE(orbits(trivial_action(cyclic_group(1), 3)).number_of_classes() == 3);
  }

  TEST_CASE("stabilizer", "[gset][quick]") {
    for_each_coset_space([](auto const&, FiniteGroup const& G,
                            Subgroup const& H, GSet const& X) {
      REQUIRE(stabilizer(X, 0) == H);
      // the stabilizer of Hg is g^-1 H g
      for (element_id g = 0; g < G.size(); ++g) {
        std::set<element_id> conj;
        for (auto h : H.members) {
          conj.insert(G.product(G.product(G.inverse(g), h), g));
        }
        REQUIRE(stabilizer(X, X.act(0, g)).members
                == element_set(conj.begin(), conj.end()));
      }
    });
    auto const Q8 = quaternion_group();
    REQUIRE(stabilizer(regular_action(Q8), 5) == trivial_subgroup(Q8));
    REQUIRE(stabilizer(trivial_action(Q8, 2), 1) == whole_group(Q8));
  }

  TEST_CASE("all_gset_congruences examples", "[gset][quick]") {
    auto const S3 = symmetric_group(3);
    for (auto const& H : all_subgroups(S3)) {
      if (H.size() == 3) {
        REQUIRE(all_gset_congruences(coset_space(S3, H)).size() == 2);
      }
    }
    REQUIRE(all_gset_congruences(trivial_action(cyclic_group(1), 3)).size()
            == 5);
    auto const z4 = all_gset_congruences(regular_action(cyclic_group(4)));
    REQUIRE(z4.size() == 3);
    REQUIRE(as_set(z4) == filtered(regular_action(cyclic_group(4))));
    REQUIRE_THROWS_AS(all_gset_congruences(trivial_action(cyclic_group(1), 6), 10),
                      BoundExceeded);
  }

  TEST_CASE("all_gset_congruences matches the partition filter",
            "[gset][oracle]") {
    for_each_coset_space([](auto const& name, FiniteGroup const&,
                            Subgroup const&, GSet const& X) {
      if (X.points() <= 8) {
        INFO(name);
        REQUIRE(as_set(all_gset_congruences(X)) == filtered(X));
      }
    });
    auto const Z2 = cyclic_group(2);
    auto const U  = disjoint_union(regular_action(Z2), regular_action(Z2));
    REQUIRE(as_set(all_gset_congruences(U)) == filtered(U));
  }

  TEST_CASE("phi and psi examples", "[gset][quick]") {
    auto const S3 = symmetric_group(3);
    auto const X  = regular_action(S3);
    REQUIRE(phi(X, 0, Partition::identity(6)) == stabilizer(X, 0));
    REQUIRE(phi(X, 0, Partition::universal(6)) == whole_group(S3));
    REQUIRE(psi(X, 0, stabilizer(X, 0)) == Partition::identity(6));

    auto const U = disjoint_union(X, X);
    REQUIRE_THROWS_AS(phi(U, 0, Partition::identity(12)), NotTransitive);
    auto const Y = coset_space(S3, all_subgroups(S3)[1]);
    REQUIRE_THROWS_AS(psi(Y, 0, trivial_subgroup(S3)), StabilizerNotContained);
  }

  TEST_CASE("phi and psi are inverse order-isomorphisms", "[gset][property]") {
    for_each_coset_space([](auto const& name, FiniteGroup const& G,
                            Subgroup const&, GSet const& X) {
      INFO(name);
      auto const cons = all_gset_congruences(X);
      for (element_id x = 0; x < X.points(); ++x) {
        auto const interval = interval_above(G, stabilizer(X, x));
        REQUIRE(interval.size() == cons.size());
        for (auto const& H : interval) {
          auto const a = psi(X, x, H);
          REQUIRE(is_gset_congruence(X, a));
          REQUIRE(phi(X, x, a) == H);
        }
        for (auto const& a : cons) {
          REQUIRE(psi(X, x, phi(X, x, a)) == a);
          for (auto const& b : cons) {
            REQUIRE(a.refines(b)
                    == is_subset(phi(X, x, a).members, phi(X, x, b).members));
          }
        }
      }
    });
  }

  TEST_CASE("commutation_check examples", "[gset][quick]") {
    auto const Z6 = cyclic_group(6);
    auto const X  = regular_action(Z6);
    for (auto const& a : all_gset_congruences(X)) {
      for (auto const& b : all_gset_congruences(X)) {
        auto const r = commutation_check(X, 0, a, b);
        REQUIRE(r.congruences_commute);
        REQUIRE(r.subgroups_commute);
      }
    }
    auto const S3 = symmetric_group(3);
    auto const R  = regular_action(S3);
    std::vector<Partition> from_involutions;
    for (auto const& H : all_subgroups(S3)) {
      if (H.size() == 2) {
        from_involutions.push_back(psi(R, 0, H));
      }
    }
    REQUIRE(from_involutions.size() == 3);
    auto const r = commutation_check(R, 0, from_involutions[0],
                                     from_involutions[1]);
    REQUIRE(!r.congruences_commute);
    REQUIRE(!r.subgroups_commute);
    auto const same = commutation_check(R, 0, from_involutions[2],
                                        from_involutions[2]);
    REQUIRE(same.congruences_commute);
    REQUIRE(same.subgroups_commute);
  }

  TEST_CASE("both sides of the commutation criterion agree",
            "[gset][property]") {
    for_each_coset_space([](auto const& name, FiniteGroup const& G,
                            Subgroup const&, GSet const& X) {
      INFO(name);
      auto const cons = all_gset_congruences(X);
      for (auto const& a : cons) {
        for (auto const& b : cons) {
          auto const r = commutation_check(X, 0, a, b);
          REQUIRE(r.congruences_commute == r.subgroups_commute);
          // independent recomputation of both sides
          auto const ra = oracle::relation(
              {a.class_vector().begin(), a.class_vector().end()});
          auto const rb = oracle::relation(
              {b.class_vector().begin(), b.class_vector().end()});
          REQUIRE(r.congruences_commute
                  == (oracle::compose(ra, rb) == oracle::compose(rb, ra)));
          auto const pa = phi(X, 0, a);
          auto const pb = phi(X, 0, b);
          REQUIRE(r.subgroups_commute
                  == product_commutes(G, pa, pb).commutes);
        }
      }
    });
  }

  TEST_CASE("pairwise commuting does not depend on the base point",
            "[gset][property]") {
    for_each_coset_space([](auto const&, FiniteGroup const& G,
                            Subgroup const&, GSet const& X) {
      std::optional<bool> first;
      for (element_id x = 0; x < X.points(); ++x) {
        auto const interval = interval_above(G, stabilizer(X, x));
        bool       all      = true;
        for (auto const& H : interval) {
          for (auto const& K : interval) {
            all = all && product_commutes(G, H, K).commutes;
          }
        }
        if (!first) {
          first = all;
        }
        REQUIRE(*first == all);
      }
    });
  }

}  // namespace semiperm
