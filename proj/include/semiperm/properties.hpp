#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiperm/congruence.hpp"
#include "semiperm/core.hpp"
#include "semiperm/ideals.hpp"

namespace semiperm {

  //! Lazily computed facts about one semigroup, shared between predicates.
  //! Not thread-safe; use one instance per thread.
  class SemigroupFacts {
   public:
    explicit SemigroupFacts(FiniteSemigroup const& S) : _S(S) {}

    FiniteSemigroup const& semigroup() const noexcept {
      return _S;
    }

    std::vector<Congruence> const& congruences();
    bool                           permutable();
    IdealLattice const&            ideals();
    NilpotencyProfile const&       nilpotency();
    bool                           archimedean();
    bool                           completely_simple();

   private:
    FiniteSemigroup const&                 _S;
    std::optional<std::vector<Congruence>> _congruences;
    std::optional<bool>                    _permutable;
    std::optional<IdealLattice>            _ideals;
    std::optional<NilpotencyProfile>       _nilpotency;
    std::optional<bool>                    _archimedean;
    std::optional<bool>                    _completely_simple;
  };

  struct PredicateOutcome {
    //! False when the hypothesis of the statement does not hold.
    bool applicable = true;
    bool holds      = true;
  };

  struct Predicate {
    std::string              name;
    std::vector<std::string> aliases;
    std::string              description;
    //! Tallied only; never yields counterexamples.
    bool count_only = false;
    std::function<PredicateOutcome(SemigroupFacts&)> check;
  };

  //! Every registered predicate, in a fixed order.
  std::vector<Predicate> const& predicate_registry();

  //! By name or alias, ignoring case; nullptr if unknown.
  Predicate const* find_predicate(std::string_view name);

  //! True if some congruence with at least two classes has a group quotient.
  bool has_nontrivial_group_image(FiniteSemigroup const& S);

  bool is_group(FiniteSemigroup const& S);

}  // namespace semiperm
