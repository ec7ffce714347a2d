#include "semiperm/properties.hpp"

#include <algorithm>
#include <cctype>

#include "semiperm/decomposition.hpp"
#include "semiperm/groups.hpp"

namespace semiperm {

  std::vector<Congruence> const& SemigroupFacts::congruences() {
    if (!_congruences) {
      _congruences = all_congruences(_S);
    }
    return *_congruences;
  }

  bool SemigroupFacts::permutable() {
    if (!_permutable) {
      _permutable = permutability_of_lattice(congruences()).permutable;
    }
    return *_permutable;
  }

  IdealLattice const& SemigroupFacts::ideals() {
    if (!_ideals) {
      _ideals = all_ideals(_S);
    }
    return *_ideals;
  }

  NilpotencyProfile const& SemigroupFacts::nilpotency() {
    if (!_nilpotency) {
      _nilpotency = nilpotency_profile(_S);
    }
    return *_nilpotency;
  }

  bool SemigroupFacts::archimedean() {
    if (!_archimedean) {
      _archimedean = is_archimedean(_S);
    }
    return *_archimedean;
  }

  bool SemigroupFacts::completely_simple() {
    if (!_completely_simple) {
      _completely_simple = is_completely_simple(_S);
    }
    return *_completely_simple;
  }

  bool is_group(FiniteSemigroup const& S) {
    auto const e = special_elements(S).identity;
    if (!e) {
      return false;
    }
    for (element_id a = 0; a < S.size(); ++a) {
      auto const row = S.row(a);
      if (std::find(row.begin(), row.end(), *e) == row.end()) {
        return false;
      }
    }
    return true;
  }

  bool has_nontrivial_group_image(FiniteSemigroup const& S) {
    for (auto const& alpha : all_congruences(S)) {
      if (alpha.number_of_classes() > 1 && is_group(quotient(S, alpha))) {
        return true;
      }
    }
    return false;
  }

  namespace {
    PredicateOutcome implies(bool hypothesis, bool conclusion) {
      return {hypothesis, !hypothesis || conclusion};
    }

    struct GroupOverNilpotent {
      element_set G;
      element_set N;
      element_id  e;
      element_id  zero;
    };

    // Two components, a group above a nilpotent ideal.
    std::optional<GroupOverNilpotent> group_over_nilpotent(
        FiniteSemigroup const& S) {
      auto const parts = two_components(S);
      if (!parts) {
        return std::nullopt;
      }
      auto const upper = restrict_to(S, parts->upper);
      if (!is_group(upper)) {
        return std::nullopt;
      }
      auto const lower = nilpotency_profile(restrict_to(S, parts->lower));
      if (!lower.is_nilpotent) {
        return std::nullopt;
      }
      return GroupOverNilpotent{
          parts->upper, parts->lower,
          parts->upper[*special_elements(upper).identity],
          parts->lower[*lower.zero]};
    }

    bool is_left_identity(FiniteSemigroup const& S, element_id e) {
      auto const row = S.row(e);
      for (element_id s = 0; s < S.size(); ++s) {
        if (row[s] != s) {
          return false;
        }
      }
      return true;
    }

    bool is_right_identity(FiniteSemigroup const& S, element_id e) {
      for (element_id s = 0; s < S.size(); ++s) {
        if (S.product(s, e) != s) {
          return false;
        }
      }
      return true;
    }

    std::vector<Predicate> make_registry() {
      std::vector<Predicate> r;

      r.push_back({"ideal-chain",
                   {"lemma2"},
                   "permutable => the ideals form a chain",
                   false,
                   [](SemigroupFacts& f) {
                     return implies(f.permutable(), f.ideals().is_chain);
                   }});

      r.push_back({"nil-ideal-chain",
                   {"lemma3"},
                   "nil => (permutable <=> the ideals form a chain)",
                   false,
                   [](SemigroupFacts& f) -> PredicateOutcome {
                     return {f.nilpotency().is_nil,
                             f.permutable() == f.ideals().is_chain};
                   }});

      r.push_back(
          {"no-group-image",
           {"lemma4"},
           "permutable with a proper ideal K => neither S nor K has a "
           "non-trivial group image",
           false,
           [](SemigroupFacts& f) -> PredicateOutcome {
             auto const& S = f.semigroup();
             if (!f.permutable() || f.ideals().ideals.size() < 2) {
               return {false, true};
             }
             if (has_nontrivial_group_image(S)) {
               return {true, false};
             }
             for (auto const& K : f.ideals().ideals) {
               if (K.size() < S.size()
                   && has_nontrivial_group_image(restrict_to(S, K.members))) {
                 return {true, false};
               }
             }
             return {true, true};
           }});

      r.push_back(
          {"ideal-saturation",
           {"lemma5"},
           "permutable => every ideal lies in one class of every congruence "
           "or is a union of its classes",
           false,
           [](SemigroupFacts& f) -> PredicateOutcome {
             if (!f.permutable()) {
               return {false, true};
             }
             for (auto const& K : f.ideals().ideals) {
               for (auto const& alpha : f.congruences()) {
                 bool one_class = true, saturated = true;
                 for (auto a : K.members) {
                   one_class = one_class && alpha.related(a, K.members[0]);
                   for (auto b : alpha.class_members(a)) {
                     saturated = saturated && K.contains(b);
                   }
                 }
                 if (!one_class && !saturated) {
                   return {true, false};
                 }
               }
             }
             return {true, true};
           }});

      r.push_back({"quotient-permutable",
                   {"lemma7"},
                   "permutable => every quotient is permutable",
                   false,
                   [](SemigroupFacts& f) -> PredicateOutcome {
                     if (!f.permutable()) {
                       return {false, true};
                     }
                     for (auto const& alpha : f.congruences()) {
                       if (!is_permutable(quotient(f.semigroup(), alpha))
                                .permutable) {
                         return {true, false};
                       }
                     }
                     return {true, true};
                   }});

      r.push_back({"semilattice-size",
                   {"lemma8"},
                   "semilattice => (permutable <=> at most 2 elements)",
                   false,
                   [](SemigroupFacts& f) -> PredicateOutcome {
                     return {is_semilattice(f.semigroup()),
                             f.permutable() == (f.semigroup().size() <= 2)};
                   }});

      r.push_back({"nil-nilpotent",
                   {"lemma9"},
                   "nil => nilpotent",
                   false,
                   [](SemigroupFacts& f) {
                     return implies(f.nilpotency().is_nil,
                                    f.nilpotency().is_nilpotent);
                   }});

      r.push_back(
          {"archimedean-extension",
           {"lemma10"},
           "archimedean <=> S / kernel is nilpotent",
           false,
           [](SemigroupFacts& f) -> PredicateOutcome {
             auto const& S = f.semigroup();
             auto const  K = kernel(S).members;
             bool const  extension
                 = is_completely_simple(restrict_to(S, K))
                   && nilpotency_profile(rees_quotient(S, K)).is_nilpotent;
             return {true, f.archimedean() == extension};
           }});

      r.push_back(
          {"archimedean-dichotomy",
           {"theorem1"},
           "archimedean permutable <=> cyclic nilpotent or permutable "
           "completely simple; exclusive except for the trivial semigroup",
           false,
           [](SemigroupFacts& f) -> PredicateOutcome {
             auto const& S = f.semigroup();
             bool const  cyclic_nilpotent
                 = is_monogenic(S).has_value() && f.nilpotency().is_nilpotent;
             bool const cs = f.completely_simple();
             bool const perm = f.permutable();
             bool const arch_perm = perm && f.archimedean();
             if (!arch_perm && !cyclic_nilpotent && !(cs && perm)) {
               return {false, true};
             }
             bool const either = cyclic_nilpotent || (cs && perm);
             bool const both   = cyclic_nilpotent && cs;
             return {true, arch_perm == either && both == (S.size() == 1)};
           }});

      r.push_back({"component-count",
                   {"lemma8-components"},
                   "permutable Putcha => at most 2 archimedean components",
                   false,
                   [](SemigroupFacts& f) -> PredicateOutcome {
                     if (!f.permutable()) {
                       return {false, true};
                     }
                     auto const d = putcha_decomposition(f.semigroup());
                     if (!d.all_components_archimedean) {
                       return {false, true};
                     }
                     return {true, d.components.size() <= 2};
                   }});

      r.push_back({"classification",
                   {"classify"},
                   "classify succeeds without an internal inconsistency",
                   false,
                   [](SemigroupFacts& f) -> PredicateOutcome {
                     try {
                       classify(f.semigroup());
                     } catch (InternalInconsistency const&) {
                       return {true, false};
                     }
                     return {true, true};
                   }});

      r.push_back(
          {"one-sided-identity",
           {"lemma12"},
           "permutable group over nilpotent => the group identity is a "
           "left or right identity",
           false,
           [](SemigroupFacts& f) -> PredicateOutcome {
             if (!f.permutable()) {
               return {false, true};
             }
             auto const shape = group_over_nilpotent(f.semigroup());
             if (!shape) {
               return {false, true};
             }
             auto const& S = f.semigroup();
             return {true, is_left_identity(S, shape->e)
                               || is_right_identity(S, shape->e)};
           }});

      r.push_back(
          {"identity-action",
           {"lemma13"},
           "permutable group over nilpotent with Ne = N => eN = {0} or "
           "eN = N, and dually",
           false,
           [](SemigroupFacts& f) -> PredicateOutcome {
             if (!f.permutable()) {
               return {false, true};
             }
             auto const shape = group_over_nilpotent(f.semigroup());
             if (!shape) {
               return {false, true};
             }
             auto const&       S = f.semigroup();
             element_set const E{shape->e};
             element_set const Z{shape->zero};
             auto const        Ne = set_product(S, shape->N, E);
             auto const        eN = set_product(S, E, shape->N);
             bool              ok = true;
             if (Ne == shape->N) {
               ok = ok && (eN == Z || eN == shape->N);
             }
             if (eN == shape->N) {
               ok = ok && (Ne == Z || Ne == shape->N);
             }
             return {true, ok};
           }});

      r.push_back({"permutable",
                   {},
                   "number of permutable semigroups",
                   true,
                   [](SemigroupFacts& f) -> PredicateOutcome {
                     return {true, f.permutable()};
                   }});
      return r;
    }

    std::string lower(std::string_view s) {
      std::string out(s);
      for (auto& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      return out;
    }
  }  // namespace

  std::vector<Predicate> const& predicate_registry() {
    static std::vector<Predicate> const registry = make_registry();
    return registry;
  }

  Predicate const* find_predicate(std::string_view name) {
    auto const key = lower(name);
    for (auto const& p : predicate_registry()) {
      if (lower(p.name) == key) {
        return &p;
      }
      for (auto const& a : p.aliases) {
        if (lower(a) == key) {
          return &p;
        }
      }
    }
    return nullptr;
  }

}  // namespace semiperm
