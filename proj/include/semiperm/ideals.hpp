#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "semiperm/core.hpp"
#include "semiperm/partition.hpp"

namespace semiperm {

  //! A two-sided ideal: a non-empty set I with SI and IS inside I.
  struct IdealSet {
    std::size_t subject_order = 0;
    element_set members;

    std::size_t size() const noexcept {
      return members.size();
    }

    bool contains(element_id a) const {
      return semiperm::contains(members, a);
    }

    friend bool operator==(IdealSet const&, IdealSet const&) = default;
  };

  bool is_ideal(FiniteSemigroup const& S, element_set const& X);

  //! {a} u Sa u aS u SaS, which is S^1 a S^1 without adjoining an identity.
  IdealSet principal_ideal(FiniteSemigroup const& S, element_id a);

  //! {a} u aS
  element_set principal_right_ideal(FiniteSemigroup const& S, element_id a);

  //! {a} u Sa
  element_set principal_left_ideal(FiniteSemigroup const& S, element_id a);

  //! SaS (no identity adjoined).
  element_set two_sided_translate(FiniteSemigroup const& S, element_id a);

  struct IdealLattice {
    //! Sorted by size, then by members.
    std::vector<IdealSet> ideals;
    bool                  is_chain = true;
  };

  //! Every ideal, obtained by closing the principal ideals under union.
  IdealLattice all_ideals(FiniteSemigroup const& S);

  struct GreenStructure {
    Partition R;
    Partition L;
    Partition J;
    Partition H;
  };

  GreenStructure green(FiniteSemigroup const& S);

  //! The minimum ideal.
  IdealSet kernel(FiniteSemigroup const& S);

  //! S / I: the elements of S - I in increasing order, then the collapsed
  //! ideal as the last element. Throws NotAnIdeal.
  FiniteSemigroup rees_quotient(FiniteSemigroup const& S, element_set const& I);

  struct NilpotencyProfile {
    bool                      has_zero = false;
    std::optional<element_id> zero;
    bool                      is_nil       = false;
    bool                      is_nilpotent = false;
    //! Least m with S^m = {0}, when nilpotent.
    std::optional<std::size_t> degree;
    //! S, S^2, S^3, ... up to the point where the chain stabilises.
    std::vector<element_set> layers;
  };

  NilpotencyProfile nilpotency_profile(FiniteSemigroup const& S);

  //! S, S^2, ... until the chain stabilises.
  std::vector<element_set> power_chain(FiniteSemigroup const& S);

  enum class ArchimedeanVariant {
    //! some power of a lies in SbS
    sbs,
    //! some power of a lies in S^1 b S^1
    s1bs1
  };

  bool is_archimedean(FiniteSemigroup const& S,
                      ArchimedeanVariant variant = ArchimedeanVariant::sbs);

  struct SimplicityFlags {
    bool is_simple            = false;
    bool is_completely_simple = false;
  };

  //! A finite simple semigroup is completely simple, so both flags agree.
  SimplicityFlags simplicity_flags(FiniteSemigroup const& S);

  inline bool is_completely_simple(FiniteSemigroup const& S) {
    return simplicity_flags(S).is_completely_simple;
  }

}  // namespace semiperm
