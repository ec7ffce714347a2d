#pragma once

#include <cstddef>
#include <vector>

#include "semiperm/congruence.hpp"
#include "semiperm/groups.hpp"
#include "semiperm/partition.hpp"

namespace semiperm {

  //! A right action of a finite group on the points {0, ..., m - 1}.
  class GSet {
   public:
    //! \p action is row-major m x |G|: entry (x, g) is the point xg.
    //! Throws InvalidAction unless xe = x and (xg)h = x(gh) everywhere.
    GSet(FiniteGroup group, std::size_t points, std::vector<element_id> action);

    FiniteGroup const& group() const noexcept {
      return _group;
    }

    std::size_t points() const noexcept {
      return _points;
    }

    element_id act(element_id x, element_id g) const noexcept {
      return _action[x * _group.size() + g];
    }

    std::vector<element_id> const& action_table() const noexcept {
      return _action;
    }

   private:
    FiniteGroup             _group;
    std::size_t             _points;
    std::vector<element_id> _action;
  };

  //! G acting on the right cosets of H, numbered as in right_cosets.
  GSet coset_space(FiniteGroup const& G, Subgroup const& H);

  GSet regular_action(FiniteGroup const& G);

  GSet trivial_action(FiniteGroup const& G, std::size_t points);

  //! Points of Y are shifted past those of X. Both must share one group.
  GSet disjoint_union(GSet const& X, GSet const& Y);

  Partition orbits(GSet const& X);
  bool      is_transitive(GSet const& X);

  Subgroup stabilizer(GSet const& X, element_id x);

  //! The maps x -> xg, one for each g.
  TranslationSystem translation_system(GSet const& X);

  using GSetCongruence = Partition;

  bool is_gset_congruence(GSet const& X, Partition const& p);

  //! All action-compatible partitions, identity first.
  std::vector<GSetCongruence>
  all_gset_congruences(GSet const& X, std::size_t cap = default_lattice_cap);

  //! {g in G : xg alpha x}. Throws NotTransitive.
  Subgroup phi(GSet const& X, element_id x, GSetCongruence const& alpha);

  //! {(xg, xh) : Hg = Hh}. Throws NotTransitive or StabilizerNotContained.
  GSetCongruence psi(GSet const& X, element_id x, Subgroup const& H);

  struct CommutationCheck {
    bool congruences_commute = false;
    bool subgroups_commute   = false;
  };

  //! Decides alpha o beta = beta o alpha on the points and
  //! phi(alpha) phi(beta) = phi(beta) phi(alpha) in the group, each
  //! independently of the other.
  CommutationCheck commutation_check(GSet const& X, element_id x,
                                     GSetCongruence const& alpha,
                                     GSetCongruence const& beta);

}  // namespace semiperm
