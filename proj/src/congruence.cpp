#include "semiperm/congruence.hpp"

namespace semiperm {

  Congruence congruence_closure(
      FiniteSemigroup const&                                S,
      std::vector<std::pair<element_id, element_id>> const& pairs) {
    for (auto const& [a, b] : pairs) {
      if (a >= S.size() || b >= S.size()) {
        throw Error("congruence_closure: pair outside the semigroup");
      }
    }
    return TranslationSystem::two_sided(S).closure(pairs);
  }

  bool is_congruence(FiniteSemigroup const& S, Partition const& p) {
    return TranslationSystem::two_sided(S).is_compatible(p);
  }

  std::vector<Congruence> all_congruences(FiniteSemigroup const& S,
                                          std::size_t            cap) {
    return TranslationSystem::two_sided(S).lattice(cap);
  }

  PermutabilityReport
  permutability_of_lattice(std::vector<Congruence> const& lattice) {
    PermutabilityReport report;
    report.lattice_size = lattice.size();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      for (std::size_t j = i + 1; j < lattice.size(); ++j) {
        auto const c = commutes(lattice[i], lattice[j]);
        if (!c.commutes) {
          report.permutable = false;
          report.witness    = PermutabilityWitness{lattice[i], lattice[j],
                                                *c.witness};
          return report;
        }
      }
    }
    return report;
  }

  PermutabilityReport is_permutable(FiniteSemigroup const& S,
                                    std::size_t            cap) {
    return permutability_of_lattice(all_congruences(S, cap));
  }

  FiniteSemigroup quotient(FiniteSemigroup const& S, Congruence const& alpha) {
    if (alpha.subject_order() != S.size()) {
      throw SubjectMismatch("congruence is on a set of a different size");
    }
    if (!is_congruence(S, alpha)) {
      throw Error("quotient: partition is not a congruence");
    }
    auto const              reps = alpha.representatives();
    auto const              k    = reps.size();
    std::vector<element_id> index(S.size());
    for (std::size_t i = 0; i < k; ++i) {
      index[reps[i]] = static_cast<element_id>(i);
    }
    std::vector<element_id> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = index[alpha.class_of(S.product(reps[i], reps[j]))];
      }
    }
    return FiniteSemigroup::from_table_no_checks(k, std::move(table));
  }

}  // namespace semiperm
