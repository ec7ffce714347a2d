#include "semiperm/construction.hpp"

#include <algorithm>

#include "semiperm/congruence.hpp"
#include "semiperm/decomposition.hpp"
#include "semiperm/ideals.hpp"

namespace semiperm {

  namespace {
    FiniteSemigroup construct1_right(FiniteGroup const& G, Subgroup const& Ga,
                                     bool left_labels) {
      auto const        cosets = right_cosets(G, Ga);
      auto const        index  = coset_index(G, Ga);
      std::size_t const k      = G.size();
      std::size_t const c      = cosets.size();
      std::size_t const n      = k + c + 1;
      auto const        zero   = static_cast<element_id>(n - 1);

      std::vector<element_id> table(n * n, zero);
      for (element_id g = 0; g < k; ++g) {
        for (element_id h = 0; h < k; ++h) {
          table[g * n + h] = G.product(g, h);
        }
      }
      for (std::size_t i = 0; i < c; ++i) {
        for (element_id g = 0; g < k; ++g) {
          table[(k + i) * n + g] = static_cast<element_id>(
              k + index[G.product(cosets[i].front(), g)]);
        }
      }
      std::vector<std::string> labels;
      for (element_id g = 0; g < k; ++g) {
        labels.push_back(G.carrier().label(g));
      }
      for (std::size_t i = 0; i < c; ++i) {
        auto const rep = G.carrier().label(cosets[i].front());
        labels.push_back(left_labels ? rep + "H" : "H" + rep);
      }
      labels.emplace_back("0");
      return FiniteSemigroup::from_table_no_checks(n, std::move(table),
                                                   std::move(labels));
    }

    bool is_right_identity(FiniteSemigroup const& S, element_id e) {
      for (element_id s = 0; s < S.size(); ++s) {
        if (S.product(s, e) != s) {
          return false;
        }
      }
      return true;
    }

    bool is_left_identity(FiniteSemigroup const& S, element_id e) {
      for (element_id s = 0; s < S.size(); ++s) {
        if (S.product(e, s) != s) {
          return false;
        }
      }
      return true;
    }

    // Position of a in the sorted set X; a must be a member.
    element_id position(element_set const& X, element_id a) {
      return static_cast<element_id>(
          std::lower_bound(X.begin(), X.end(), a) - X.begin());
    }

    std::optional<std::pair<Subgroup, Subgroup>>
    first_noncommuting_pair(FiniteGroup const&           G,
                            std::vector<Subgroup> const& interval) {
      for (std::size_t i = 0; i < interval.size(); ++i) {
        for (std::size_t j = i + 1; j < interval.size(); ++j) {
          if (!product_commutes(G, interval[i], interval[j]).commutes) {
            return std::make_pair(interval[i], interval[j]);
          }
        }
      }
      return std::nullopt;
    }

    struct GroupOverIdeal {
      FiniteGroup G;
      element_set upper;
      element_set lower;
      element_id  e;
    };

    GroupOverIdeal group_over_ideal(FiniteSemigroup const& S) {
      auto const parts = two_components(S);
      if (!parts) {
        throw ShapeMismatch(
            "not a semilattice of exactly two archimedean components");
      }
      GroupOverIdeal out;
      try {
        out.G = as_group(restrict_to(S, parts->upper));
      } catch (NotAGroup const&) {
        throw ShapeMismatch("the upper component is not a group");
      }
      out.upper = parts->upper;
      out.lower = parts->lower;
      out.e     = out.upper[out.G.identity()];
      return out;
    }
  }  // namespace

  FiniteSemigroup construct1(Construction1Spec const& spec) {
    if (!is_subgroup(spec.G, spec.Ga.members)) {
      throw Error("construct1: Ga is not a subgroup of G");
    }
    if (spec.side == Side::right) {
      return construct1_right(spec.G, spec.Ga, false);
    }
    return transpose(construct1_right(dual(spec.G), spec.Ga, true));
  }

  Construction1Condition construction1_condition(FiniteGroup const& G,
                                                  Subgroup const&    Ga,
                                                  std::size_t        bound) {
    if (G.size() > bound) {
      throw BoundExceeded("group of order " + std::to_string(G.size())
                          + " exceeds the bound " + std::to_string(bound));
    }
    if (!is_subgroup(G, Ga.members)) {
      throw Error("construction1_condition: Ga is not a subgroup of G");
    }
    Construction1Condition out;
    out.failing_pair = first_noncommuting_pair(G, interval_above(G, Ga));
    out.holds        = !out.failing_pair.has_value();
    return out;
  }

  FiniteSemigroup cyclic_nilpotent(std::size_t n) {
    if (n == 0) {
      throw Error("cyclic_nilpotent: n must be positive");
    }
    auto const              zero = static_cast<element_id>(n - 1);
    std::vector<element_id> table(n * n, zero);
    // id i is x^(i + 1)
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (i + j + 2 < n) {
          table[i * n + j] = static_cast<element_id>(i + j + 1);
        }
      }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      labels.push_back(i == 0 ? "x" : "x^" + std::to_string(i + 1));
    }
    labels.emplace_back("0");
    return FiniteSemigroup::from_table_no_checks(n, std::move(table),
                                                 std::move(labels));
  }

  FiniteSemigroup group_with_zero(FiniteGroup const& G) {
    return adjoin(G.carrier(), Adjoin::zero);
  }

  FiniteSemigroup rees_matrix(ReesMatrixSpec const& spec) {
    auto const& G = spec.G;
    auto const  k = G.size();
    auto const  I = spec.I_size;
    auto const  J = spec.J_size;
    if (I == 0 || J == 0) {
      throw ShapeError("rees_matrix: I and J must be non-empty");
    }
    if (spec.P.size() != J) {
      throw ShapeError("rees_matrix: P must have J rows");
    }
    for (auto const& row : spec.P) {
      if (row.size() != I) {
        throw ShapeError("rees_matrix: every row of P must have I entries");
      }
      for (auto p : row) {
        if (p >= k) {
          throw ShapeError("rees_matrix: P entry is not a group element");
        }
      }
    }
    std::size_t const n  = I * k * J;
    auto              id = [&](std::size_t i, std::size_t g, std::size_t j) {
      return static_cast<element_id>((i * k + g) * J + j);
    };
    std::vector<element_id>  table(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < I; ++i) {
      for (element_id g = 0; g < k; ++g) {
        for (std::size_t j = 0; j < J; ++j) {
          auto const x = id(i, g, j);
          labels[x]    = "(" + std::to_string(i) + "," + G.carrier().label(g)
                      + "," + std::to_string(j) + ")";
          for (std::size_t kk = 0; kk < I; ++kk) {
            auto const gp = G.product(g, spec.P[j][kk]);
            for (element_id h = 0; h < k; ++h) {
              for (std::size_t l = 0; l < J; ++l) {
                table[x * n + id(kk, h, l)] = id(i, G.product(gp, h), l);
              }
            }
          }
        }
      }
    }
    return FiniteSemigroup::from_table_no_checks(n, std::move(table),
                                                 std::move(labels));
  }

  ReesDecomposition rees_decompose(FiniteSemigroup const& S) {
    if (!is_completely_simple(S)) {
      throw NotCompletelySimple("the semigroup is not completely simple");
    }
    auto const idempotents = special_elements(S).idempotents;
    auto const e           = idempotents.front();
    auto const gr          = green(S);

    auto ordered_classes = [e](Partition const& p) {
      auto classes = p.classes();
      auto it      = std::find_if(classes.begin(), classes.end(),
                             [e](auto const& c) { return contains(c, e); });
      std::rotate(classes.begin(), it, it + 1);
      return classes;
    };
    auto const Rs = ordered_classes(gr.R);
    auto const Ls = ordered_classes(gr.L);
    auto const He = set_intersection(Rs[0], Ls[0]);

    auto idempotent_in = [&](element_set const& X) {
      for (auto x : X) {
        if (S.product(x, x) == x) {
          return x;
        }
      }
      throw InternalInconsistency("an H-class of a completely simple "
                                  "semigroup has no idempotent");
    };
    std::vector<element_id> r, q;
    for (auto const& R : Rs) {
      r.push_back(idempotent_in(set_intersection(R, Ls[0])));
    }
    for (auto const& L : Ls) {
      q.push_back(idempotent_in(set_intersection(Rs[0], L)));
    }

    ReesDecomposition out;
    out.spec.G      = as_group(restrict_to(S, He));
    out.spec.I_size = Rs.size();
    out.spec.J_size = Ls.size();
    out.spec.P.assign(Ls.size(), std::vector<element_id>(Rs.size()));
    for (std::size_t j = 0; j < Ls.size(); ++j) {
      for (std::size_t i = 0; i < Rs.size(); ++i) {
        out.spec.P[j][i] = position(He, S.product(q[j], r[i]));
      }
    }
    std::vector<std::size_t> r_index(S.size()), l_index(S.size());
    for (std::size_t i = 0; i < Rs.size(); ++i) {
      for (auto s : Rs[i]) {
        r_index[s] = i;
      }
    }
    for (std::size_t j = 0; j < Ls.size(); ++j) {
      for (auto s : Ls[j]) {
        l_index[s] = j;
      }
    }
    auto const k = He.size();
    auto const J = Ls.size();
    out.map.resize(S.size());
    for (element_id s = 0; s < S.size(); ++s) {
      auto const g = position(He, S.product(S.product(e, s), e));
      out.map[s]   = static_cast<element_id>((r_index[s] * k + g) * J
                                           + l_index[s]);
    }
    if (!is_isomorphism(S, rees_matrix(out.spec), out.map)) {
      throw InternalInconsistency("Rees coordinatization is not an "
                                  "isomorphism");
    }
    return out;
  }

  Theorem2Report theorem2_verify(FiniteSemigroup const& S) {
    auto const  shape = group_over_ideal(S);
    auto const& N     = shape.lower;
    if (N.size() < 2) {
      throw ShapeMismatch("the null component must have at least 2 elements");
    }
    auto const zero = special_elements(S).zero;
    if (!zero || !contains(N, *zero)) {
      throw ShapeMismatch("the semigroup has no zero in the ideal component");
    }
    element_set const zero_set{*zero};
    if (set_product(S, N, N) != zero_set) {
      throw ShapeMismatch("the ideal component is not a null semigroup");
    }
    auto const everything = all_elements(S.size());
    Theorem2Report out;
    if (is_right_identity(S, shape.e)
        && set_product(S, everything, N) == zero_set) {
      out.side = Side::right;
    } else if (is_left_identity(S, shape.e)
               && set_product(S, N, everything) == zero_set) {
      out.side = Side::left;
    } else {
      throw ShapeMismatch("the group identity is neither a right identity "
                          "with SN = {0} nor a left identity with NS = {0}");
    }
    out.G          = shape.G;
    out.group_part = shape.upper;
    out.null_part  = N;

    auto act = [&](element_id a, element_id g) {
      return out.side == Side::right ? S.product(a, shape.upper[g])
                                     : S.product(shape.upper[g], a);
    };
    auto const  nonzero = set_difference(N, zero_set);
    auto const  a       = nonzero.front();
    element_set orbit;
    for (element_id g = 0; g < shape.G.size(); ++g) {
      orbit.push_back(act(a, g));
      if (act(a, g) == a) {
        out.Ga.members.push_back(g);
      }
    }
    out.shape_ok   = make_set(orbit) == nonzero;
    out.condition  = construction1_condition(shape.G, out.Ga);
    out.permutable = is_permutable(S).permutable;
    return out;
  }

  Theorem3Layer theorem3_layer(FiniteSemigroup const& S,
                               FiniteGroup const&     G,
                               element_set const&     group_part,
                               element_set const&     layer,
                               element_id             a) {
    auto const    H = direct_product(dual(G), G);
    Theorem3Layer out;
    out.representative = a;
    out.layer          = layer;
    element_set GaG;
    for (element_id g = 0; g < G.size(); ++g) {
      auto const ga = S.product(group_part[g], a);
      for (element_id h = 0; h < G.size(); ++h) {
        auto const gah = S.product(ga, group_part[h]);
        GaG.push_back(gah);
        if (gah == a) {
          out.stabilizer.members.push_back(pair_id(G, g, h));
        }
      }
    }
    out.covers_layer = make_set(std::move(GaG)) == layer;
    out.failing_pair
        = first_noncommuting_pair(H, interval_above(H, out.stabilizer));
    out.interval_commutes = !out.failing_pair.has_value();
    return out;
  }

  Theorem3Report theorem3_verify(FiniteSemigroup const& S) {
    auto const shape = group_over_ideal(S);
    if (!is_left_identity(S, shape.e) || !is_right_identity(S, shape.e)) {
      throw ShapeMismatch("the group identity is not the identity of S");
    }
    auto const& N = shape.lower;
    if (!nilpotency_profile(restrict_to(S, N)).is_nilpotent) {
      throw ShapeMismatch("the ideal component is not nilpotent");
    }
    Theorem3Report out;
    out.G              = shape.G;
    out.group_part     = shape.upper;
    out.nilpotent_part = N;

    std::vector<element_set> layers;
    for (auto power = N; power.size() > 1;) {
      auto next = set_product(S, power, N);
      layers.push_back(set_difference(power, next));
      power = std::move(next);
    }
    out.degree = layers.size() + 1;
    for (auto const& layer : layers) {
      auto record = theorem3_layer(S, shape.G, shape.upper, layer,
                                   layer.front());
      for (auto a : layer) {
        if (a != layer.front()
            && theorem3_layer(S, shape.G, shape.upper, layer, a).passes()
                   != record.passes()) {
          out.representative_invariant = false;
        }
      }
      out.verdict = out.verdict && record.passes();
      out.layers.push_back(std::move(record));
    }
    return out;
  }

  FiniteSemigroup trivial_action_extension(FiniteGroup const&     G,
                                           FiniteSemigroup const& N) {
    if (!special_elements(N).zero) {
      throw ShapeMismatch("trivial_action_extension: N has no zero");
    }
    std::size_t const       k = G.size();
    std::size_t const       n = k + N.size();
    std::vector<element_id> table(n * n);
    for (element_id x = 0; x < n; ++x) {
      for (element_id y = 0; y < n; ++y) {
        element_id v;
        if (x < k && y < k) {
          v = G.product(x, y);
        } else if (x < k) {
          v = y;
        } else if (y < k) {
          v = x;
        } else {
          v = static_cast<element_id>(k + N.product(x - k, y - k));
        }
        table[x * n + y] = v;
      }
    }
    std::vector<std::string> labels;
    for (element_id g = 0; g < k; ++g) {
      labels.push_back(G.carrier().label(g));
    }
    for (element_id a = 0; a < N.size(); ++a) {
      labels.push_back("n" + std::to_string(a));
    }
    return FiniteSemigroup::from_table_no_checks(n, std::move(table),
                                                 std::move(labels));
  }

  FiniteSemigroup layered_extension(FiniteGroup const& G, GSet const& X,
                                    std::size_t t) {
    if (t < 2) {
      throw Error("layered_extension: t must be at least 2");
    }
    if (!(X.group() == direct_product(dual(G), G))) {
      throw Error("layered_extension: X must be a G* x G-set");
    }
    std::size_t const k    = G.size();
    std::size_t const m    = X.points();
    std::size_t const n    = k + m + (t - 2) + 1;
    auto const        zero = static_cast<element_id>(n - 1);
    // weight of a nilpotent element; the zero has weight t
    auto weight = [&](element_id x) -> std::size_t {
      if (x < k + m) {
        return 1;
      }
      return x == zero ? t : x - (k + m) + 2;
    };
    auto of_weight = [&](std::size_t w) {
      return w >= t ? zero : static_cast<element_id>(k + m + w - 2);
    };
    std::vector<element_id> table(n * n);
    for (element_id x = 0; x < n; ++x) {
      for (element_id y = 0; y < n; ++y) {
        element_id v;
        if (x < k && y < k) {
          v = G.product(x, y);
        } else if (x < k) {
          v = y < k + m ? static_cast<element_id>(
                  k + X.act(y - k, pair_id(G, x, G.identity())))
                        : y;
        } else if (y < k) {
          v = x < k + m ? static_cast<element_id>(
                  k + X.act(x - k, pair_id(G, G.identity(), y)))
                        : x;
        } else {
          v = of_weight(weight(x) + weight(y));
        }
        table[x * n + y] = v;
      }
    }
    std::vector<std::string> labels;
    for (element_id g = 0; g < k; ++g) {
      labels.push_back(G.carrier().label(g));
    }
    for (element_id x = 0; x < m; ++x) {
      labels.push_back("x" + std::to_string(x));
    }
    for (std::size_t i = 2; i < t; ++i) {
      labels.push_back("p" + std::to_string(i));
    }
    labels.emplace_back("0");
    return FiniteSemigroup::from_table_no_checks(n, std::move(table),
                                                 std::move(labels));
  }

}  // namespace semiperm
