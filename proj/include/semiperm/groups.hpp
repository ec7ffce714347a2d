#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "semiperm/core.hpp"

namespace semiperm {

  //! A finite group: a semigroup with a two-sided identity and inverses.
  class FiniteGroup {
   public:
    FiniteGroup() = default;

    std::size_t size() const noexcept {
      return _carrier.size();
    }

    element_id product(element_id a, element_id b) const noexcept {
      return _carrier.product(a, b);
    }

    element_id identity() const noexcept {
      return _identity;
    }

    element_id inverse(element_id a) const noexcept {
      return _inverse[a];
    }

    FiniteSemigroup const& carrier() const noexcept {
      return _carrier;
    }

    friend bool operator==(FiniteGroup const& x, FiniteGroup const& y) {
      return x._carrier == y._carrier;
    }

   private:
    friend FiniteGroup as_group(FiniteSemigroup const&);

    FiniteSemigroup         _carrier;
    element_id              _identity = 0;
    std::vector<element_id> _inverse;
  };

  //! Throws NotAGroup with the reason when S is not a group.
  FiniteGroup as_group(FiniteSemigroup const& S);

  //! A subgroup, as the sorted set of its elements.
  struct Subgroup {
    element_set members;

    std::size_t size() const noexcept {
      return members.size();
    }

    bool contains(element_id g) const {
      return semiperm::contains(members, g);
    }

    friend bool operator==(Subgroup const&, Subgroup const&) = default;

    //! Orders by size, then lexicographically by members.
    friend std::strong_ordering operator<=>(Subgroup const& x,
                                            Subgroup const& y) {
      if (auto c = x.size() <=> y.size(); c != 0) {
        return c;
      }
      return x.members <=> y.members;
    }
  };

  inline constexpr std::size_t default_subgroup_bound = 24;

  bool is_subgroup(FiniteGroup const& G, element_set const& X);

  //! The subgroup generated by \p gens (the trivial subgroup if empty).
  Subgroup subgroup_closure(FiniteGroup const& G, element_set const& gens);

  //! Checks that \p X is a subgroup; throws Error otherwise.
  Subgroup make_subgroup(FiniteGroup const& G, element_set X);

  Subgroup trivial_subgroup(FiniteGroup const& G);
  Subgroup whole_group(FiniteGroup const& G);

  //! Every subgroup, sorted by (size, members).
  //!
  //! Closes cyclic and two-generated subgroups under pairwise joins until
  //! nothing new appears. Throws BoundExceeded when |G| > bound.
  std::vector<Subgroup> all_subgroups(FiniteGroup const& G,
                                      std::size_t bound = default_subgroup_bound);

  //! Every subgroup K with H <= K <= G, sorted by (size, members).
  std::vector<Subgroup> interval_above(FiniteGroup const& G, Subgroup const& H);

  struct ProductCommute {
    bool        commutes = false;
    element_set HK;
    element_set KH;
  };

  ProductCommute product_commutes(FiniteGroup const& G, Subgroup const& H,
                                  Subgroup const& K);

  //! Right cosets Hg, ordered by their smallest member.
  std::vector<element_set> right_cosets(FiniteGroup const& G, Subgroup const& H);

  //! coset_index(G, H)[g] is the position of Hg in right_cosets(G, H).
  std::vector<element_id> coset_index(FiniteGroup const& G, Subgroup const& H);

  //! G* : the same set with x * y := yx.
  FiniteGroup dual(FiniteGroup const& G);

  //! G1 x G2 with the pair (g1, g2) stored at id g1 * |G2| + g2.
  FiniteGroup direct_product(FiniteGroup const& G1, FiniteGroup const& G2);

  inline element_id pair_id(FiniteGroup const& G2, element_id g1, element_id g2) {
    return static_cast<element_id>(g1 * G2.size() + g2);
  }

  std::size_t element_order(FiniteGroup const& G, element_id g);

  bool is_abelian(FiniteGroup const& G);

  ////////////////////////////////////////////////////////////////////////
  // Small groups
  ////////////////////////////////////////////////////////////////////////

  //! Z_n with g_i g_j = g_{i+j mod n}.
  FiniteGroup cyclic_group(std::size_t n);

  //! The dihedral group of order 2n; element a^i b^j has id i + n j.
  FiniteGroup dihedral_group(std::size_t n);

  //! The dicyclic group of order 4n (n = 2 is Q8); a^i b^j has id i + 2n j.
  FiniteGroup dicyclic_group(std::size_t n);

  FiniteGroup quaternion_group();

  //! The closure of a list of permutations of {0, ..., m - 1}.
  //!
  //! Elements are the permutations in lexicographic order of their image
  //! lists, and (pq)(x) = q(p(x)).
  FiniteGroup
  group_from_permutations(std::vector<std::vector<element_id>> const& gens);

  FiniteGroup symmetric_group(std::size_t k);
  FiniteGroup alternating_group(std::size_t k);

  struct NamedGroup {
    std::string name;
    FiniteGroup group;
  };

  //! One representative of every isomorphism type of order at most 12.
  std::vector<NamedGroup> groups_up_to_order_12();

}  // namespace semiperm
