#include <random>

#include "catch_amalgamated.hpp"

#include "families.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "semiperm/congruence.hpp"
#include "semiperm/construction.hpp"
#include "semiperm/decomposition.hpp"
#include "semiperm/ideals.hpp"

namespace semiperm {
  using namespace fixtures;

  namespace {
    Subgroup subgroup_of_size(FiniteGroup const& G, std::size_t k) {
      for (auto const& H : all_subgroups(G)) {
        if (H.size() == k) {
          return H;
        }
      }
      throw std::logic_error("no subgroup of that size");
    }

    FiniteSemigroup c1(FiniteGroup const& G, Subgroup const& H,
                       Side side = Side::right) {
      return construct1({G, H, side});
    }

    // G = Z2 fixing both points of N* = {a, b}; not transitive.
    FiniteSemigroup two_orbit_example() {
      std::vector<element_id> t(25, 4);
      t[0 * 5 + 0] = 0;
      t[0 * 5 + 1] = 1;
      t[1 * 5 + 0] = 1;
      t[1 * 5 + 1] = 0;
      for (element_id g = 0; g < 2; ++g) {
        t[2 * 5 + g] = 2;
        t[3 * 5 + g] = 3;
      }
      return validate_table(5, std::vector<long long>(t.begin(), t.end()));
    }

    // Matches the documented product on (i, g, j) triples directly.
    bool rees_table_ok(ReesMatrixSpec const& s, FiniteSemigroup const& S) {
      auto const n = s.G.size();
      auto id      = [&](std::size_t i, std::size_t g, std::size_t j) {
        return static_cast<element_id>((i * n + g) * s.J_size + j);
      };
      for (std::size_t i = 0; i < s.I_size; ++i) {
        for (std::size_t g = 0; g < n; ++g) {
          for (std::size_t j = 0; j < s.J_size; ++j) {
            for (std::size_t k = 0; k < s.I_size; ++k) {
              for (std::size_t h = 0; h < n; ++h) {
                for (std::size_t l = 0; l < s.J_size; ++l) {
                  auto const m = s.G.product(
                      s.G.product(static_cast<element_id>(g), s.P[j][k]),
                      static_cast<element_id>(h));
                  if (S.product(id(i, g, j), id(k, h, l)) != id(i, m, l)) {
                    return false;
                  }
                }
              }
            }
          }
        }
      }
      return true;
    }

    ReesMatrixSpec random_spec(std::mt19937& rng, std::size_t max_order) {
      std::vector<FiniteGroup> groups{cyclic_group(1), cyclic_group(2),
                                      cyclic_group(3), cyclic_group(4),
                                      klein()};
      while (true) {
        auto const& G = groups[rng() % groups.size()];
        std::size_t I = 1 + rng() % 3;
        std::size_t J = 1 + rng() % 3;
        if (G.size() * I * J > max_order) {
          continue;
        }
        std::vector<std::vector<element_id>> P(J, std::vector<element_id>(I));
        for (auto& row : P) {
          for (auto& p : row) {
            p = static_cast<element_id>(rng() % G.size());
          }
        }
        return {G, I, J, P};
      }
    }
  }  // namespace

  TEST_CASE("construct1 examples", "[construction][quick]") {
    auto const Z2 = cyclic_group(2);
    auto const S  = c1(Z2, trivial_subgroup(Z2));
    REQUIRE(S.size() == 5);
    auto const sp = special_elements(S);
    REQUIRE(contains(sp.right_identities, Z2.identity()));
    REQUIRE(sp.zero == element_id(4));
    for (element_id s = 0; s < 5; ++s) {
      for (element_id a = 2; a < 5; ++a) {
        REQUIRE(S.product(s, a) == 4);
      }
    }

    auto const S3 = symmetric_group(3);
    auto const A  = c1(S3, subgroup_of_size(S3, 3));
    REQUIRE(A.size() == 9);
    REQUIRE(is_permutable(A).permutable);
    REQUIRE(oracle::permutable(A));

    // |G| + |G : Ga| + 1 = 6 + 6 + 1
    auto const B = c1(S3, trivial_subgroup(S3));
    REQUIRE(B.size() == 13);
    REQUIRE(!is_permutable(B).permutable);
  }

  TEST_CASE("construct1 layout and products", "[construction][quick]") {
    auto const S3 = symmetric_group(3);
    auto const H  = subgroup_of_size(S3, 2);
    auto const S  = c1(S3, H);
    auto const cosets = right_cosets(S3, H);
    auto const idx    = coset_index(S3, H);
    REQUIRE(S.size() == 6 + 3 + 1);
    for (element_id g = 0; g < 6; ++g) {
      for (element_id h = 0; h < 6; ++h) {
        REQUIRE(S.product(g, h) == S3.product(g, h));
      }
    }
    for (element_id c = 0; c < cosets.size(); ++c) {
      for (element_id g = 0; g < 6; ++g) {
        auto const rep = cosets[c].front();
        REQUIRE(S.product(6 + c, g) == 6 + idx[S3.product(rep, g)]);
      }
    }
    for (element_id g = 0; g < 6; ++g) {
      REQUIRE(S.product(9, g) == 9);
    }
  }

  TEST_CASE("construct1 invariants", "[construction][property]") {
    for (auto const& [name, G] : groups_up_to_order_12()) {
      if (G.size() > 8) {
        continue;
      }
      for (auto const& H : all_subgroups(G)) {
        for (auto side : {Side::right, Side::left}) {
          auto const S = c1(G, H, side);
          REQUIRE(S.size() == G.size() + G.size() / H.size() + 1);
          REQUIRE(!find_nonassociative_triple(S.size(), S.table()));
          REQUIRE(kernel(S).members == element_set{element_id(S.size() - 1)});
          auto const d = putcha_decomposition(S);
          REQUIRE(d.components.size() == 2);
          REQUIRE(d.components[0] == all_elements(G.size()));
        }
        REQUIRE(c1(G, H, Side::left)
                == transpose(c1(dual(G), H, Side::right)));
      }
    }
  }

  TEST_CASE("construction1_condition examples", "[construction][quick]") {
    auto const Z4 = cyclic_group(4);
    REQUIRE(construction1_condition(Z4, trivial_subgroup(Z4)).holds);
    auto const S3 = symmetric_group(3);
    auto const r  = construction1_condition(S3, trivial_subgroup(S3));
    REQUIRE(!r.holds);
    REQUIRE(r.failing_pair);
    REQUIRE(r.failing_pair->first.size() == 2);
    REQUIRE(r.failing_pair->second.size() == 2);
    REQUIRE(!product_commutes(S3, r.failing_pair->first, r.failing_pair->second)
                 .commutes);
    auto const Q8 = quaternion_group();
    REQUIRE(construction1_condition(Q8, trivial_subgroup(Q8)).holds);
    REQUIRE_THROWS_AS(
        construction1_condition(cyclic_group(30), trivial_subgroup(cyclic_group(30))),
        BoundExceeded);
  }

  TEST_CASE("cyclic_nilpotent", "[construction][quick]") {
    REQUIRE(cyclic_nilpotent(1).size() == 1);
    auto const N = cyclic_nilpotent(3);
    REQUIRE(all_congruences(N).size() == 3);
    REQUIRE(oracle::congruences(N).size() == 3);
    REQUIRE(N.label(0) == "x");
    REQUIRE(N.label(1) == "x^2");
    REQUIRE(N.label(2) == "0");
    auto const N5 = cyclic_nilpotent(5);
    REQUIRE(is_permutable(N5).permutable);
    REQUIRE(is_monogenic(N5) == element_id(0));
    REQUIRE(nilpotency_profile(N5).degree == 5u);
  }

  TEST_CASE("group_with_zero", "[construction][quick]") {
    auto const Z2 = group_with_zero(cyclic_group(2));
    REQUIRE(Z2.size() == 3);
    REQUIRE(is_permutable(Z2).permutable);
    REQUIRE(oracle::isomorphic(group_with_zero(cyclic_group(1)), chain(2)));
    auto const S3 = group_with_zero(symmetric_group(3));
    REQUIRE(S3.size() == 7);
    REQUIRE(is_permutable(S3).permutable);
    REQUIRE(oracle::permutable(S3));
  }

  TEST_CASE("rees_matrix examples", "[construction][quick]") {
    auto const B = rees_matrix(trivial_rees(cyclic_group(1), 2, 2));
    REQUIRE(is_band(B));
    REQUIRE(is_permutable(B).permutable);

    auto const L = rees_matrix(trivial_rees(cyclic_group(1), 3, 1));
    REQUIRE(L == left_zero(3));
    REQUIRE(!is_permutable(L).permutable);

    auto const Z2 = cyclic_group(2);
    ReesMatrixSpec const s{Z2, 2, 2, {{0, 0}, {0, 1}}};
    auto const           R = rees_matrix(s);
    REQUIRE(R.size() == 8);
    REQUIRE(is_completely_simple(R));
    REQUIRE(is_permutable(R).permutable);
    REQUIRE(oracle::permutable(R));
    REQUIRE(rees_table_ok(s, R));

    REQUIRE_THROWS_AS(rees_matrix({Z2, 2, 2, {{0, 0}}}), ShapeError);
    REQUIRE_THROWS_AS(rees_matrix({Z2, 2, 1, {{0, 2}}}), ShapeError);
    REQUIRE_THROWS_AS(rees_matrix({Z2, 0, 1, {}}), ShapeError);
  }

  TEST_CASE("rees_decompose examples", "[construction][quick]") {
    auto const d = rees_decompose(rectangular_band(2, 2));
    REQUIRE(d.spec.G.size() == 1);
    REQUIRE(d.spec.I_size == 2);
    REQUIRE(d.spec.J_size == 2);

    auto const S3 = symmetric_group(3);
    auto const g  = rees_decompose(S3.carrier());
    REQUIRE(g.spec.I_size == 1);
    REQUIRE(g.spec.J_size == 1);
    REQUIRE(g.spec.P == std::vector<std::vector<element_id>>{{0}});
    REQUIRE(oracle::isomorphic(g.spec.G.carrier(), S3.carrier()));

    REQUIRE_THROWS_AS(rees_decompose(cyclic_nilpotent(3)), NotCompletelySimple);
  }

  TEST_CASE("rees round trip", "[construction][property]") {
    std::mt19937 rng(20261015);
    for (int k = 0; k < 60; ++k) {
      auto const spec = random_spec(rng, 12);
      auto const S    = rees_matrix(spec);
      REQUIRE(rees_table_ok(spec, S));
      auto const d = rees_decompose(S);
      REQUIRE(d.spec.G.size() == spec.G.size());
      REQUIRE(d.spec.I_size == spec.I_size);
      REQUIRE(d.spec.J_size == spec.J_size);
      for (std::size_t i = 0; i < d.spec.I_size; ++i) {
        REQUIRE(d.spec.P[0][i] == d.spec.G.identity());
      }
      for (std::size_t j = 0; j < d.spec.J_size; ++j) {
        REQUIRE(d.spec.P[j][0] == d.spec.G.identity());
      }
      REQUIRE(is_isomorphism(S, rees_matrix(d.spec), d.map));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& S : enumerate_up_to(n, UpTo::iso)) {
        if (is_completely_simple(S)) {
          auto const d = rees_decompose(S);
          REQUIRE(is_isomorphism(S, rees_matrix(d.spec), d.map));
        } else {
          REQUIRE_THROWS_AS(rees_decompose(S), NotCompletelySimple);
        }
      }
    }
  }

  TEST_CASE("theorem2_verify examples", "[construction][quick]") {
    auto const Z4 = cyclic_group(4);
    auto const a  = theorem2_verify(c1(Z4, trivial_subgroup(Z4)));
    REQUIRE(a.shape_ok);
    REQUIRE(a.side == Side::right);
    REQUIRE(a.condition.holds);
    REQUIRE(a.permutable);
    REQUIRE(a.Ga.size() == 1);

    auto const S3 = symmetric_group(3);
    auto const b  = theorem2_verify(c1(S3, trivial_subgroup(S3)));
    REQUIRE(b.shape_ok);
    REQUIRE(!b.condition.holds);
    REQUIRE(!b.permutable);

    auto const c = theorem2_verify(c1(S3, subgroup_of_size(S3, 2), Side::left));
    REQUIRE(c.side == Side::left);
    REQUIRE(c.shape_ok);
    REQUIRE(c.Ga.size() == 2);

    REQUIRE_THROWS_AS(theorem2_verify(cyclic_nilpotent(3)), ShapeMismatch);
    REQUIRE_THROWS_AS(theorem2_verify(group_with_zero(Z4)), ShapeMismatch);

    auto const d = theorem2_verify(two_orbit_example());
    REQUIRE(!d.shape_ok);
    REQUIRE(!d.permutable);
  }

  TEST_CASE("theorem2 biconditional on small groups", "[construction][property]") {
    for (auto const& [name, G] : groups_up_to_order_12()) {
      if (G.size() > 6) {
        continue;
      }
      for (auto const& H : all_subgroups(G)) {
        auto const r = theorem2_verify(c1(G, H));
        INFO(name << " / " << H.size());
        REQUIRE(r.shape_ok);
        REQUIRE(r.Ga == H);
        REQUIRE(r.condition.holds == r.permutable);
      }
    }
  }

  TEST_CASE("construction 1 congruences: zero class and group classes",
            "[construction][property]") {
    for (auto const& [name, G] : groups_up_to_order_12()) {
      if (G.size() > 6) {
        continue;
      }
      for (auto const& H : all_subgroups(G)) {
        auto const   S    = c1(G, H);
        auto const   n    = S.size();
        element_set  N    = set_difference(all_elements(n), all_elements(G.size()));
        element_id   zero = static_cast<element_id>(n - 1);
        auto const   t    = theorem2_verify(S);
        // aG = N* for every a in N*
        for (auto a : set_difference(N, {zero})) {
          std::set<element_id> aG;
          for (element_id g = 0; g < G.size(); ++g) {
            aG.insert(S.product(a, g));
          }
          REQUIRE(element_set(aG.begin(), aG.end())
                  == set_difference(N, {zero}));
        }
        REQUIRE(t.null_part == N);
        for (auto const& c : all_congruences(S)) {
          if (c.is_universal()) {
            continue;
          }
          auto const z = c.class_members(zero);
          REQUIRE((z == element_set{zero} || z == N));
          for (element_id g = 0; g < G.size(); ++g) {
            REQUIRE(is_subset(c.class_members(g), all_elements(G.size())));
          }
        }
      }
    }
  }

  TEST_CASE("theorem3_verify examples", "[construction][quick]") {
    // {e, g, a, 0}: Z2 fixes a, a^2 = 0
    auto const Z2 = cyclic_group(2);
    auto const S  = trivial_action_extension(Z2, null_semigroup(2));
    REQUIRE(S.size() == 4);
    auto const r = theorem3_verify(S);
    REQUIRE(r.degree == 2);
    REQUIRE(r.layers.size() == 1);
    REQUIRE(r.layers[0].layer == element_set{2});
    REQUIRE(r.layers[0].stabilizer.size() == 4);
    REQUIRE(r.verdict);
    REQUIRE(is_permutable(S).permutable);
    REQUIRE(oracle::permutable(S));

    auto const gz = theorem3_verify(group_with_zero(Z2));
    REQUIRE(gz.layers.empty());
    REQUIRE(gz.verdict);
    REQUIRE(is_permutable(group_with_zero(Z2)).permutable);

    REQUIRE_THROWS_AS(theorem3_verify(cyclic_nilpotent(3)), ShapeMismatch);
    REQUIRE_THROWS_AS(theorem3_verify(c1(Z2, trivial_subgroup(Z2))),
                      ShapeMismatch);
  }

  TEST_CASE("layered_extension", "[construction][quick]") {
    auto const G = cyclic_group(3);
    auto const P = direct_product(dual(G), G);
    auto const X = coset_space(P, trivial_subgroup(P));
    auto const S = layered_extension(G, X, 3);
    REQUIRE(S.size() == 3 + 9 + 1 + 1);
    REQUIRE(!find_nonassociative_triple(S.size(), S.table()));
    REQUIRE(special_elements(S).identity == G.identity());
    auto const prof = nilpotency_profile(restrict_to(
        S, set_difference(all_elements(S.size()), all_elements(3))));
    REQUIRE(prof.degree == 3u);
    REQUIRE_THROWS_AS(layered_extension(G, X, 1), Error);
    REQUIRE_THROWS_AS(layered_extension(G, regular_action(G), 2), Error);
  }

  TEST_CASE("theorem3 verdict matches permutability on the family",
            "[construction][property]") {
    for (auto const& [name, G] : families::small_groups()) {
      if (G.size() > 3) {
        continue;
      }
      for (auto const& inst : families::theorem3_family(G, name, 3)) {
        INFO(inst.description);
        auto const r = theorem3_verify(inst.S);
        REQUIRE(r.representative_invariant);
        bool const perm = is_permutable(inst.S).permutable;
        REQUIRE(r.verdict == perm);
        for (auto const& L : r.layers) {
          for (auto a : L.layer) {
            auto const other = theorem3_layer(inst.S, r.G, r.group_part, L.layer, a);
            REQUIRE(other.passes() == L.passes());
          }
        }
        if (!perm) {
          continue;
        }
        // permutable instances: every layer element covers its layer
        auto const n = inst.S.size();
        auto const N = r.nilpotent_part;
        std::vector<element_set> powers{N};
        while (powers.back().size() > 1) {
          powers.push_back(set_product(inst.S, powers.back(), N));
        }
        for (std::size_t i = 0; i + 1 < powers.size(); ++i) {
          auto const layer = set_difference(powers[i], powers[i + 1]);
          for (auto a : layer) {
            std::set<element_id> GaG;
            for (auto g : r.group_part) {
              for (auto h : r.group_part) {
                GaG.insert(inst.S.product(inst.S.product(g, a), h));
              }
            }
            REQUIRE(element_set(GaG.begin(), GaG.end()) == layer);
          }
        }
        // the ideals are S, N, N^2, ..., {0}
        std::set<element_set> expected(powers.begin(), powers.end());
        expected.insert(all_elements(n));
        std::set<element_set> ideals;
        for (auto const& I : all_ideals(inst.S).ideals) {
          ideals.insert(I.members);
        }
        REQUIRE(ideals == expected);
        // zero classes are powers of N and classes respect the layers
        auto const zero = powers.back().front();
        for (auto const& c : all_congruences(inst.S)) {
          if (c.is_universal()) {
            continue;
          }
          auto const z = c.class_members(zero);
          auto const j = std::find(powers.begin(), powers.end(), z);
          REQUIRE(j != powers.end());
          for (auto g : r.group_part) {
            REQUIRE(is_subset(c.class_members(g), r.group_part));
          }
          for (auto i = powers.begin(); i + 1 <= j; ++i) {
            auto const layer = set_difference(*i, *(i + 1));
            for (auto a : layer) {
              REQUIRE(is_subset(c.class_members(a), layer));
            }
          }
        }
      }
    }
  }

}  // namespace semiperm
