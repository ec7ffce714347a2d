#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semiperm/core.hpp"
#include "semiperm/partition.hpp"

namespace semiperm {

  //! A two-sided congruence, stored as its canonical class vector.
  using Congruence = Partition;

  inline constexpr std::size_t default_lattice_cap = 100000;

  //! Least congruence containing every pair.
  Congruence
  congruence_closure(FiniteSemigroup const&                                S,
                     std::vector<std::pair<element_id, element_id>> const& pairs);

  bool is_congruence(FiniteSemigroup const& S, Partition const& p);

  //! The full congruence lattice, identity first and universal last.
  std::vector<Congruence> all_congruences(FiniteSemigroup const& S,
                                          std::size_t cap = default_lattice_cap);

  struct PermutabilityWitness {
    Congruence                        alpha;
    Congruence                        beta;
    std::pair<element_id, element_id> pair;  // in alpha o beta, not beta o alpha
  };

  struct PermutabilityReport {
    bool                                permutable = true;
    std::optional<PermutabilityWitness> witness;
    std::size_t                         lattice_size = 0;
  };

  //! Checks every unordered pair of the lattice for commuting; the first
  //! failure in lattice order is reported.
  PermutabilityReport is_permutable(FiniteSemigroup const& S,
                                    std::size_t cap = default_lattice_cap);

  //! Same as above over a lattice that has already been computed.
  PermutabilityReport
  permutability_of_lattice(std::vector<Congruence> const& lattice);

  //! S / alpha; classes are numbered in increasing order of representative.
  FiniteSemigroup quotient(FiniteSemigroup const& S, Congruence const& alpha);

}  // namespace semiperm
