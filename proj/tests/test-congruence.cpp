#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "semiperm/congruence.hpp"
#include "semiperm/construction.hpp"
#include "semiperm/enumeration.hpp"
#include "semiperm/ideals.hpp"

namespace semiperm {
  using namespace fixtures;

  namespace {
    std::set<oracle::table_t> as_set(std::vector<Congruence> const& lattice) {
      std::set<oracle::table_t> out;
      for (auto const& c : lattice) {
        out.emplace(c.class_vector().begin(), c.class_vector().end());
      }
      return out;
    }

    Partition parts(std::size_t n, std::vector<element_set> const& classes) {
      return Partition::from_classes(n, classes);
    }
  }  // namespace

  TEST_CASE("congruence_closure examples", "[congruence][quick]") {
    auto const Z4 = cyclic_group(4).carrier();
    REQUIRE(congruence_closure(Z4, {{0, 2}}) == parts(4, {{0, 2}, {1, 3}}));
    REQUIRE(congruence_closure(Z4, {}) == Partition::identity(4));
    // min-chain 0 < 1 < 2; merging the top two forces nothing else
    REQUIRE(congruence_closure(chain(3), {{2, 1}})
            == parts(3, {{0}, {1, 2}}));
    REQUIRE(congruence_closure(chain(3), {{2, 0}}) == Partition::universal(3));
  }

  TEST_CASE("congruence_closure is monotone and idempotent",
            "[congruence][quick]") {
    for (auto const& S : enumerate_associative(3)) {
      auto const n = S.size();
      for (element_id a = 0; a < n; ++a) {
        for (element_id b = a + 1; b < n; ++b) {
          auto const x = congruence_closure(S, {{a, b}});
          REQUIRE(is_congruence(S, x));
          REQUIRE(x.related(a, b));
          REQUIRE(congruence_closure(S, {{a, b}, {a, b}}) == x);
          std::vector<std::pair<element_id, element_id>> pairs;
          for (auto [u, v] : as_relation(x).pairs()) {
            pairs.emplace_back(u, v);
          }
          REQUIRE(congruence_closure(S, pairs) == x);
          for (element_id c = 0; c < n; ++c) {
            for (element_id d = 0; d < n; ++d) {
              REQUIRE(x.refines(congruence_closure(S, {{a, b}, {c, d}})));
            }
          }
        }
      }
    }
  }

  TEST_CASE("all_congruences examples", "[congruence][quick]") {
    REQUIRE(all_congruences(cyclic_group(2).carrier()).size() == 2);
    auto const cn3 = all_congruences(cyclic_nilpotent(3));
    REQUIRE(cn3.size() == 3);
    REQUIRE(as_set(cn3) == oracle::congruences(cyclic_nilpotent(3)));
    REQUIRE(std::find(cn3.begin(), cn3.end(), parts(3, {{0}, {1, 2}}))
            != cn3.end());
    REQUIRE(all_congruences(chain(2)).size() == 2);
    REQUIRE(oracle::congruences(chain(2)).size() == 2);
  }

  TEST_CASE("all_congruences order: identity first, universal last",
            "[congruence][quick]") {
    for (auto const& S : enumerate_associative(3)) {
      auto const L = all_congruences(S);
      REQUIRE(L.front().is_identity());
      REQUIRE(L.back().is_universal());
      REQUIRE(std::is_sorted(L.rbegin(), L.rend()));
      REQUIRE(std::adjacent_find(L.begin(), L.end()) == L.end());
    }
  }

  TEST_CASE("all_congruences equals the partition filter",
            "[congruence][oracle]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& S : enumerate_associative(n)) {
        REQUIRE(as_set(all_congruences(S)) == oracle::congruences(S));
      }
    }
    for (std::size_t n = 4; n <= 5; ++n) {
      for (auto const& S : enumerate_up_to(n, UpTo::iso)) {
        REQUIRE(as_set(all_congruences(S)) == oracle::congruences(S));
      }
    }
  }

  TEST_CASE("the lattice cap is enforced", "[congruence][quick]") {
    REQUIRE_THROWS_AS(all_congruences(left_zero(4), 3), BoundExceeded);
    REQUIRE_THROWS_AS(is_permutable(left_zero(4), 3), BoundExceeded);
  }

  TEST_CASE("compose and commutes examples", "[congruence][quick]") {
    auto const alpha = parts(3, {{0}, {1, 2}});
    auto const beta  = parts(3, {{0, 1}, {2}});
    REQUIRE(compose(Partition::identity(3), beta) == as_relation(beta));
    REQUIRE(compose(alpha, beta).contains(2, 0));
    REQUIRE(!compose(beta, alpha).contains(2, 0));
    REQUIRE(commutes(alpha, alpha).commutes);
    auto const r = commutes(alpha, beta);
    REQUIRE(!r.commutes);
    REQUIRE(r.witness == std::pair<element_id, element_id>{2, 0});
    REQUIRE_THROWS_AS(compose(alpha, Partition::identity(2)), SubjectMismatch);
    REQUIRE_THROWS_AS(commutes(alpha, Partition::identity(4)),
                      SubjectMismatch);
  }

  TEST_CASE("compose agrees with the matrix oracle", "[congruence][oracle]") {
    auto const P = oracle::set_partitions(4);
    for (auto const& x : P) {
      for (auto const& y : P) {
        auto const px = Partition::from_class_of({x.begin(), x.end()});
        auto const py = Partition::from_class_of({y.begin(), y.end()});
        auto const m  = oracle::compose(oracle::relation(x), oracle::relation(y));
        auto const r  = compose(px, py);
        for (element_id a = 0; a < 4; ++a) {
          for (element_id b = 0; b < 4; ++b) {
            REQUIRE(r.contains(a, b) == m[a][b]);
          }
        }
        // containment of both factors
        for (auto [a, b] : as_relation(px).pairs()) {
          REQUIRE(r.contains(a, b));
        }
        for (auto [a, b] : as_relation(py).pairs()) {
          REQUIRE(r.contains(a, b));
        }
        // commuting iff the composite is the join
        bool const is_join = r == as_relation(join_equivalences(px, py));
        REQUIRE(commutes(px, py).commutes == is_join);
        auto const c = commutes(px, py);
        if (!c.commutes) {
          auto [a, b] = *c.witness;
          REQUIRE(r.contains(a, b));
          REQUIRE(!compose(py, px).contains(a, b));
        }
      }
    }
  }

  TEST_CASE("is_permutable examples", "[congruence][quick]") {
    REQUIRE(is_permutable(cyclic_group(6).carrier()).permutable);
    REQUIRE(is_permutable(cyclic_nilpotent(4)).permutable);

    auto const c3 = is_permutable(chain(3));
    REQUIRE(!c3.permutable);
    REQUIRE(c3.lattice_size == 4);
    REQUIRE(c3.witness);
    auto const& w = *c3.witness;
    REQUIRE(compose(w.alpha, w.beta).contains(w.pair.first, w.pair.second));
    REQUIRE(!compose(w.beta, w.alpha).contains(w.pair.first, w.pair.second));

    // {a, b, 0}: the ideals {0, a} and {0, b} are incomparable
    REQUIRE(!is_permutable(null_semigroup(3)).permutable);
  }

  TEST_CASE("every pair of congruences of Z6 commutes", "[congruence][quick]") {
    auto const L = all_congruences(cyclic_group(6).carrier());
    REQUIRE(L.size() == 4);
    for (auto const& x : L) {
      for (auto const& y : L) {
        REQUIRE(commutes(x, y).commutes);
      }
    }
  }

  TEST_CASE("is_permutable agrees with the oracle", "[congruence][oracle]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& S : enumerate_associative(n)) {
        auto const r = is_permutable(S);
        REQUIRE(r.permutable == oracle::permutable(S));
        REQUIRE(r.witness.has_value() == !r.permutable);
        REQUIRE(r.lattice_size == oracle::congruences(S).size());
      }
    }
    for (auto const& S : enumerate_up_to(4, UpTo::iso)) {
      REQUIRE(is_permutable(S).permutable == oracle::permutable(S));
    }
  }

  TEST_CASE("quotient examples", "[congruence][quick]") {
    auto const Z4 = cyclic_group(4).carrier();
    REQUIRE(oracle::isomorphic(quotient(Z4, parts(4, {{0, 2}, {1, 3}})),
                               cyclic_group(2).carrier()));
    auto const S = cyclic_nilpotent(4);
    REQUIRE(quotient(S, Partition::identity(4)) == S);
    REQUIRE(quotient(S, Partition::universal(4)).size() == 1);
  }

  TEST_CASE("quotients of permutable semigroups are permutable",
            "[congruence][property]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& S : enumerate_up_to(n, UpTo::iso)) {
        if (!is_permutable(S).permutable) {
          continue;
        }
        for (auto const& c : all_congruences(S)) {
          auto const Q = quotient(S, c);
          REQUIRE(Q.size() == c.number_of_classes());
          REQUIRE(is_permutable(Q).permutable);
        }
      }
    }
  }

  TEST_CASE("permutable semigroups: ideals and congruence classes",
            "[congruence][property]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& S : enumerate_up_to(n, UpTo::iso)) {
        auto const L = all_congruences(S);
        if (!permutability_of_lattice(L).permutable) {
          continue;
        }
        std::vector<element_set> I;
        for (auto const& K : all_ideals(S).ideals) {
          I.push_back(K.members);
        }
        // ideals form a chain
        for (auto const& x : I) {
          for (auto const& y : I) {
            REQUIRE((is_subset(x, y) || is_subset(y, x)));
          }
        }
        // an ideal lies in one class or is a union of classes
        for (auto const& K : I) {
          for (auto const& c : L) {
            bool one_class = true;
            bool saturated = true;
            for (auto k : K) {
              one_class = one_class && c.related(k, K.front());
              for (auto m : c.class_members(k)) {
                saturated = saturated && contains(K, m);
              }
            }
            REQUIRE((one_class || saturated));
          }
        }
        // no non-trivial group image when there is a proper ideal
        bool const proper_ideal = I.size() > 1;
        if (proper_ideal) {
          for (auto const& c : L) {
            auto const Q = quotient(S, c);
            if (Q.size() > 1) {
              auto const sp = special_elements(Q);
              bool group = sp.identity.has_value();
              for (element_id a = 0; group && a < Q.size(); ++a) {
                bool has_inverse = false;
                for (element_id b = 0; b < Q.size(); ++b) {
                  has_inverse = has_inverse || Q.product(a, b) == *sp.identity;
                }
                group = has_inverse;
              }
              REQUIRE(!group);
            }
          }
        }
      }
    }
  }

}  // namespace semiperm
