#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semiperm/core.hpp"
#include "semiperm/groups.hpp"
#include "semiperm/gset.hpp"

namespace semiperm {

  ////////////////////////////////////////////////////////////////////////
  // Construction 1
  ////////////////////////////////////////////////////////////////////////

  enum class Side { right, left };

  struct Construction1Spec {
    FiniteGroup G;
    Subgroup    Ga;
    Side        side = Side::right;
  };

  //! G, then the right cosets of Ga (by smallest member), then 0.
  //!
  //! With side right: products in G are those of G, coset * g is the coset
  //! of (rep g), s * a = 0 whenever a is a coset or 0, and 0 is a two-sided
  //! zero. side left is the mirror image, built on the left cosets.
  FiniteSemigroup construct1(Construction1Spec const& spec);

  struct Construction1Condition {
    bool                                     holds = true;
    std::optional<std::pair<Subgroup, Subgroup>> failing_pair;
  };

  //! HK = KH for all subgroups H, K of G containing Ga.
  //!
  //! Throws BoundExceeded if |G| > bound.
  Construction1Condition
  construction1_condition(FiniteGroup const& G, Subgroup const& Ga,
                          std::size_t bound = default_subgroup_bound);

  ////////////////////////////////////////////////////////////////////////
  // Other families
  ////////////////////////////////////////////////////////////////////////

  //! x, x^2, ..., x^(n-1), 0 with ids 0, ..., n - 1.
  FiniteSemigroup cyclic_nilpotent(std::size_t n);

  FiniteSemigroup group_with_zero(FiniteGroup const& G);

  struct ReesMatrixSpec {
    FiniteGroup G;
    std::size_t I_size = 1;
    std::size_t J_size = 1;
    //! J_size rows of I_size group elements.
    std::vector<std::vector<element_id>> P;
  };

  //! (i, g, j) has id ((i |G|) + g) J + j and
  //! (i, g, j)(k, h, l) = (i, g P[j][k] h, l).
  FiniteSemigroup rees_matrix(ReesMatrixSpec const& spec);

  struct ReesDecomposition {
    ReesMatrixSpec spec;
    //! map[s] is the id in rees_matrix(spec) of the element s.
    std::vector<element_id> map;
  };

  //! Coordinatizes a completely simple semigroup.
  //!
  //! e is the smallest idempotent, G its H-class with elements relabelled in
  //! increasing order. R- and L-classes are numbered with those of e first
  //! and the rest by smallest member. P has identity first row and column.
  //! The returned map is verified to be an isomorphism.
  //!
  //! Throws NotCompletelySimple.
  ReesDecomposition rees_decompose(FiniteSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Verifiers
  ////////////////////////////////////////////////////////////////////////

  struct Theorem2Report {
    bool        shape_ok = false;
    Side        side     = Side::right;
    FiniteGroup G;
    //! Element ids of S forming the group and null components.
    element_set group_part;
    element_set null_part;
    //! Stabilizer of the smallest nonzero element of N, in G's ids.
    Subgroup                  Ga;
    Construction1Condition    condition;
    bool                      permutable = false;
  };

  //! Throws ShapeMismatch unless S is a semilattice of a group G and a null
  //! semigroup N, |N| >= 2, with the identity of G a right identity of S and
  //! SN = {0}, or the left-right dual. shape_ok further requires G to be
  //! transitive on N - {0}.
  Theorem2Report theorem2_verify(FiniteSemigroup const& S);

  struct Theorem3Layer {
    element_id  representative = 0;
    element_set layer;
    bool        covers_layer = false;
    //! In direct_product(dual(G), G); (g, h) has id g |G| + h.
    Subgroup    stabilizer;
    bool        interval_commutes = false;
    std::optional<std::pair<Subgroup, Subgroup>> failing_pair;

    bool passes() const noexcept {
      return covers_layer && interval_commutes;
    }
  };

  struct Theorem3Report {
    std::size_t                degree = 1;
    FiniteGroup                G;
    element_set                group_part;
    element_set                nilpotent_part;
    std::vector<Theorem3Layer> layers;
    bool                       verdict = true;
    //! Every element of every layer, used as the representative, gives the
    //! same pass or fail as the smallest one.
    bool representative_invariant = true;
  };

  //! Throws ShapeMismatch unless S is a semilattice of a group G and a
  //! nilpotent ideal N with the identity of G the identity of S.
  //! N = {0} is accepted and gives no layers.
  Theorem3Report theorem3_verify(FiniteSemigroup const& S);

  //! Per-layer data for an arbitrary element a of the layer.
  Theorem3Layer theorem3_layer(FiniteSemigroup const&  S,
                               FiniteGroup const&      G,
                               element_set const&      group_part,
                               element_set const&      layer,
                               element_id              a);

  ////////////////////////////////////////////////////////////////////////
  // Builders for group-over-nilpotent semigroups with a two-sided identity
  ////////////////////////////////////////////////////////////////////////

  //! G followed by N, with every g acting as the identity on N.
  //! Throws ShapeMismatch unless N has a zero.
  FiniteSemigroup trivial_action_extension(FiniteGroup const&     G,
                                           FiniteSemigroup const& N);

  //! G, then the points of X, then p_2, ..., p_(t-1), then 0.
  //!
  //! X is a right G* x G-set; g x h is x(g, h). The points of X have
  //! weight 1, p_i weight i, and a product of elements of weights i and j
  //! is p_(i + j), or 0 when i + j >= t. Requires t >= 2.
  FiniteSemigroup layered_extension(FiniteGroup const& G, GSet const& X,
                                    std::size_t t);

}  // namespace semiperm
