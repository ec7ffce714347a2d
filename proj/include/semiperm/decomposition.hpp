#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiperm/congruence.hpp"
#include "semiperm/core.hpp"

namespace semiperm {

  //! Least congruence whose quotient is a semilattice.
  //!
  //! Generated by the pairs (a, a^2) and (ab, ba); the quotient is checked
  //! to be idempotent and commutative.
  Congruence smallest_semilattice_congruence(FiniteSemigroup const& S);

  struct SemilatticeDecomposition {
    Congruence eta;
    //! Classes of eta in increasing order of smallest member.
    std::vector<element_set> components;
    //! S / eta; element i is components[i].
    FiniteSemigroup   component_semilattice;
    std::vector<bool> component_archimedean;
    //! True exactly when S is a semilattice of archimedean semigroups.
    bool all_components_archimedean = false;
  };

  SemilatticeDecomposition putcha_decomposition(FiniteSemigroup const& S);

  enum class ClassificationCase {
    not_permutable,
    not_putcha,
    arch_cyclic_nilpotent,
    arch_completely_simple,
    two_component
  };

  //! Kind of the upper component S1 of a two-component semigroup.
  enum class UpperKind { group, completely_simple_non_group };

  //! Shape of the lower component S0 (an ideal) when S1 is a group G with
  //! identity e.
  enum class LowerCase {
    //! S0 completely simple.
    completely_simple,
    //! S0 = N non-trivial null, e a right identity of S and SN = {0}.
    null_right,
    //! The left-right dual of null_right.
    null_left,
    //! S0 non-trivial nilpotent and e the identity of S.
    nilpotent_with_identity,
    //! S0 has a kernel K with 1 < |K| and K != S0; recognised only.
    unresolved_kernel_extension,
    //! S1 is not a group and S0 is not completely simple; not analysed.
    not_analyzed
  };

  struct ClassificationEvidence {
    std::vector<element_set>            components;
    std::optional<PermutabilityWitness> witness;
    std::optional<element_id>           generator;
    element_set                         upper;
    element_set                         lower;
    std::optional<element_id>           group_identity;
    element_set                         kernel;
  };

  struct ClassificationReport {
    ClassificationCase       kind = ClassificationCase::not_permutable;
    std::optional<UpperKind> upper;
    std::optional<LowerCase> lower;
    ClassificationEvidence   evidence;

    //! e.g. "ArchCyclicNilpotent" or "TwoComponent{Group,NullRight}".
    std::string name() const;
  };

  std::string to_string(ClassificationCase c);
  std::string to_string(UpperKind k);
  std::string to_string(LowerCase c);

  //! Classifies a finite semigroup as a permutable Putcha semigroup.
  //!
  //! Throws InternalInconsistency if the archimedean dichotomy, the bound on
  //! the number of components or the list of lower-component shapes fails
  //! on the input.
  ClassificationReport classify(FiniteSemigroup const& S);

  //! The decomposition of a semigroup with exactly two archimedean
  //! components into the upper component S1 and the ideal S0.
  struct TwoComponents {
    element_set upper;
    element_set lower;
  };

  //! Returns the two components when S is a semilattice of exactly two
  //! archimedean semigroups.
  std::optional<TwoComponents> two_components(FiniteSemigroup const& S);

}  // namespace semiperm
