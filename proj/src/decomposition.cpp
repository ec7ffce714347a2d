#include "semiperm/decomposition.hpp"

#include <algorithm>

#include "semiperm/groups.hpp"
#include "semiperm/ideals.hpp"

namespace semiperm {

  Congruence smallest_semilattice_congruence(FiniteSemigroup const& S) {
    std::vector<std::pair<element_id, element_id>> pairs;
    for (element_id a = 0; a < S.size(); ++a) {
      pairs.emplace_back(a, S.product(a, a));
      for (element_id b = a + 1; b < S.size(); ++b) {
        pairs.emplace_back(S.product(a, b), S.product(b, a));
      }
    }
    auto eta = congruence_closure(S, pairs);
    if (!is_semilattice(quotient(S, eta))) {
      throw InternalInconsistency("quotient by eta is not a semilattice");
    }
    return eta;
  }

  SemilatticeDecomposition putcha_decomposition(FiniteSemigroup const& S) {
    SemilatticeDecomposition d;
    d.eta                        = smallest_semilattice_congruence(S);
    d.components                 = d.eta.classes();
    d.component_semilattice      = quotient(S, d.eta);
    d.all_components_archimedean = true;
    for (auto const& C : d.components) {
      if (!is_subsemigroup(S, C)) {
        throw InternalInconsistency("a semilattice component is not closed");
      }
      bool const arch = is_archimedean(restrict_to(S, C));
      d.component_archimedean.push_back(arch);
      d.all_components_archimedean = d.all_components_archimedean && arch;
    }
    return d;
  }

  std::string to_string(ClassificationCase c) {
    switch (c) {
      case ClassificationCase::not_permutable:
        return "NotPermutable";
      case ClassificationCase::not_putcha:
        return "NotPutcha";
      case ClassificationCase::arch_cyclic_nilpotent:
        return "ArchCyclicNilpotent";
      case ClassificationCase::arch_completely_simple:
        return "ArchCompletelySimple";
      case ClassificationCase::two_component:
        return "TwoComponent";
    }
    return "?";
  }

  std::string to_string(UpperKind k) {
    return k == UpperKind::group ? "Group" : "CompletelySimpleNonGroup";
  }

  std::string to_string(LowerCase c) {
    switch (c) {
      case LowerCase::completely_simple:
        return "CS";
      case LowerCase::null_right:
        return "NullRight";
      case LowerCase::null_left:
        return "NullLeft";
      case LowerCase::nilpotent_with_identity:
        return "NilpotentWithIdentity";
      case LowerCase::unresolved_kernel_extension:
        return "UnresolvedKernelExtension";
      case LowerCase::not_analyzed:
        return "NotAnalyzed";
    }
    return "?";
  }

  std::string ClassificationReport::name() const {
    auto s = to_string(kind);
    if (kind == ClassificationCase::two_component && upper && lower) {
      s += "{" + to_string(*upper) + "," + to_string(*lower) + "}";
    }
    return s;
  }

  std::optional<TwoComponents> two_components(FiniteSemigroup const& S) {
    auto const d = putcha_decomposition(S);
    if (d.components.size() != 2 || !d.all_components_archimedean) {
      return std::nullopt;
    }
    if (is_ideal(S, d.components[0])) {
      return TwoComponents{d.components[1], d.components[0]};
    }
    return TwoComponents{d.components[0], d.components[1]};
  }

  namespace {
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

    LowerCase lower_case_over_group(FiniteSemigroup const& S,
                                    element_set const&     N,
                                    element_id             e,
                                    element_set const&     K) {
      if (is_completely_simple(restrict_to(S, N))) {
        return LowerCase::completely_simple;
      }
      auto const everything = all_elements(S.size());
      if (K.size() == 1) {
        element_set const zero    = K;
        bool const        is_null = set_product(S, N, N) == zero;
        if (N.size() >= 2 && is_null && is_right_identity(S, e)
            && set_product(S, everything, N) == zero) {
          return LowerCase::null_right;
        }
        if (N.size() >= 2 && is_null && is_left_identity(S, e)
            && set_product(S, N, everything) == zero) {
          return LowerCase::null_left;
        }
        if (is_left_identity(S, e) && is_right_identity(S, e)) {
          return LowerCase::nilpotent_with_identity;
        }
        throw InternalInconsistency(
            "permutable group-over-nilpotent semigroup matches no known "
            "shape");
      }
      auto const Q = rees_quotient(S, K);
      // S - K is numbered increasingly in S / K
      auto const rest  = set_difference(everything, K);
      auto const e_bar = static_cast<element_id>(
          std::lower_bound(rest.begin(), rest.end(), e) - rest.begin());
      if (is_left_identity(Q, e_bar) && is_right_identity(Q, e_bar)) {
        return LowerCase::unresolved_kernel_extension;
      }
      throw InternalInconsistency(
          "group identity is not an identity modulo the kernel");
    }
  }  // namespace

  ClassificationReport classify(FiniteSemigroup const& S) {
    ClassificationReport report;
    auto const           perm = is_permutable(S);
    if (!perm.permutable) {
      report.kind             = ClassificationCase::not_permutable;
      report.evidence.witness = perm.witness;
      return report;
    }
    auto const d               = putcha_decomposition(S);
    report.evidence.components = d.components;
    if (!d.all_components_archimedean) {
      report.kind = ClassificationCase::not_putcha;
      return report;
    }
    report.evidence.kernel = kernel(S).members;
    if (d.components.size() == 1) {
      auto const gen = is_monogenic(S);
      bool const cyclic_nilpotent
          = gen.has_value() && nilpotency_profile(S).is_nilpotent;
      bool const cs = is_completely_simple(S);
      // The trivial semigroup is both; it is reported as cyclic nilpotent.
      if (cyclic_nilpotent && (!cs || S.size() == 1)) {
        report.kind               = ClassificationCase::arch_cyclic_nilpotent;
        report.evidence.generator = gen;
      } else if (cs && !cyclic_nilpotent) {
        report.kind = ClassificationCase::arch_completely_simple;
      } else {
        throw InternalInconsistency(
            "archimedean permutable semigroup is "
            + std::string(cs ? "both" : "neither")
            + " cyclic nilpotent and completely simple");
      }
      return report;
    }
    if (d.components.size() > 2) {
      throw InternalInconsistency(
          "permutable Putcha semigroup with more than two components");
    }
    report.kind = ClassificationCase::two_component;
    auto const parts = is_ideal(S, d.components[0])
                           ? TwoComponents{d.components[1], d.components[0]}
                           : TwoComponents{d.components[0], d.components[1]};
    report.evidence.upper = parts.upper;
    report.evidence.lower = parts.lower;
    auto const upper      = restrict_to(S, parts.upper);
    if (!is_completely_simple(upper)) {
      throw InternalInconsistency("upper component is not completely simple");
    }
    try {
      auto const G = as_group(upper);
      auto const e = parts.upper[G.identity()];
      report.upper = UpperKind::group;
      report.evidence.group_identity = e;
      report.lower = lower_case_over_group(S, parts.lower, e,
                                           report.evidence.kernel);
    } catch (NotAGroup const&) {
      report.upper = UpperKind::completely_simple_non_group;
      report.lower = is_completely_simple(restrict_to(S, parts.lower))
                         ? LowerCase::completely_simple
                         : LowerCase::not_analyzed;
    }
    return report;
  }

}  // namespace semiperm
