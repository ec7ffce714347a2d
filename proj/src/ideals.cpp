#include "semiperm/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semiperm {

  namespace {
    Partition partition_by_sets(std::vector<element_set> const& keyed) {
      std::map<element_set, std::uint32_t> ids;
      std::vector<std::uint32_t>           labels;
      labels.reserve(keyed.size());
      for (auto const& k : keyed) {
        labels.push_back(
            ids.emplace(k, static_cast<std::uint32_t>(ids.size())).first->second);
      }
      return Partition::from_labels(labels);
    }
  }  // namespace

  bool is_ideal(FiniteSemigroup const& S, element_set const& X) {
    if (X.empty()) {
      return false;
    }
    for (auto x : X) {
      if (x >= S.size()) {
        return false;
      }
      for (element_id s = 0; s < S.size(); ++s) {
        if (!contains(X, S.product(s, x)) || !contains(X, S.product(x, s))) {
          return false;
        }
      }
    }
    return true;
  }

  element_set principal_right_ideal(FiniteSemigroup const& S, element_id a) {
    std::vector<element_id> v(S.row(a).begin(), S.row(a).end());
    v.push_back(a);
    return make_set(std::move(v));
  }

  element_set principal_left_ideal(FiniteSemigroup const& S, element_id a) {
    std::vector<element_id> v{a};
    for (element_id s = 0; s < S.size(); ++s) {
      v.push_back(S.product(s, a));
    }
    return make_set(std::move(v));
  }

  element_set two_sided_translate(FiniteSemigroup const& S, element_id a) {
    std::vector<bool> seen(S.size(), false);
    for (element_id s = 0; s < S.size(); ++s) {
      auto const sa = S.product(s, a);
      for (element_id t = 0; t < S.size(); ++t) {
        seen[S.product(sa, t)] = true;
      }
    }
    element_set out;
    for (element_id x = 0; x < S.size(); ++x) {
      if (seen[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  IdealSet principal_ideal(FiniteSemigroup const& S, element_id a) {
    auto left  = principal_left_ideal(S, a);
    auto right = principal_right_ideal(S, a);
    auto both  = two_sided_translate(S, a);
    return {S.size(), set_union(set_union(left, right), both)};
  }

  IdealLattice all_ideals(FiniteSemigroup const& S) {
    std::set<element_set> principals;
    for (element_id a = 0; a < S.size(); ++a) {
      principals.insert(principal_ideal(S, a).members);
    }
    std::set<element_set>    found(principals.begin(), principals.end());
    std::vector<element_set> queue(principals.begin(), principals.end());
    while (!queue.empty()) {
      auto const X = std::move(queue.back());
      queue.pop_back();
      for (auto const& P : principals) {
        auto U = set_union(X, P);
        if (found.insert(U).second) {
          queue.push_back(std::move(U));
        }
      }
    }
    IdealLattice out;
    for (auto const& X : found) {
      out.ideals.push_back({S.size(), X});
    }
    std::sort(out.ideals.begin(),
              out.ideals.end(),
              [](IdealSet const& x, IdealSet const& y) {
                return x.size() != y.size() ? x.size() < y.size()
                                            : x.members < y.members;
              });
    for (std::size_t i = 1; i < out.ideals.size() && out.is_chain; ++i) {
      out.is_chain = is_subset(out.ideals[i - 1].members, out.ideals[i].members);
    }
    return out;
  }

  GreenStructure green(FiniteSemigroup const& S) {
    std::vector<element_set> right, left, two;
    for (element_id a = 0; a < S.size(); ++a) {
      right.push_back(principal_right_ideal(S, a));
      left.push_back(principal_left_ideal(S, a));
      two.push_back(principal_ideal(S, a).members);
    }
    GreenStructure g;
    g.R = partition_by_sets(right);
    g.L = partition_by_sets(left);
    g.J = partition_by_sets(two);
    g.H = meet(g.R, g.L);
    return g;
  }

  IdealSet kernel(FiniteSemigroup const& S) {
    IdealSet best = principal_ideal(S, 0);
    for (element_id a = 1; a < S.size() && best.size() > 1; ++a) {
      auto J = principal_ideal(S, a);
      if (J.size() < best.size()) {
        best = std::move(J);
      }
    }
    return best;
  }

  FiniteSemigroup rees_quotient(FiniteSemigroup const& S,
                                element_set const&     I) {
    if (!is_ideal(S, I)) {
      throw NotAnIdeal("rees_quotient: the given set is not an ideal");
    }
    auto const              outside = set_difference(all_elements(S.size()), I);
    auto const              m       = outside.size() + 1;
    auto const              zero    = static_cast<element_id>(m - 1);
    std::vector<element_id> index(S.size(), zero);
    for (std::size_t i = 0; i < outside.size(); ++i) {
      index[outside[i]] = static_cast<element_id>(i);
    }
    std::vector<element_id> table(m * m, zero);
    for (std::size_t i = 0; i < outside.size(); ++i) {
      for (std::size_t j = 0; j < outside.size(); ++j) {
        table[i * m + j] = index[S.product(outside[i], outside[j])];
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      for (auto a : outside) {
        labels.push_back(S.labels()[a]);
      }
      labels.push_back("0");
    }
    return FiniteSemigroup::from_table_no_checks(
        m, std::move(table), std::move(labels));
  }

  std::vector<element_set> power_chain(FiniteSemigroup const& S) {
    auto const               everything = all_elements(S.size());
    std::vector<element_set> chain{everything};
    while (true) {
      auto next = set_product(S, chain.back(), everything);
      if (next == chain.back()) {
        return chain;
      }
      chain.push_back(std::move(next));
    }
  }

  NilpotencyProfile nilpotency_profile(FiniteSemigroup const& S) {
    NilpotencyProfile p;
    p.zero     = special_elements(S).zero;
    p.has_zero = p.zero.has_value();
    p.layers   = power_chain(S);
    if (!p.has_zero) {
      return p;
    }
    p.is_nil = true;
    for (element_id a = 0; a < S.size() && p.is_nil; ++a) {
      p.is_nil = element_power(S, a, S.size()) == *p.zero;
    }
    if (p.layers.back() == element_set{*p.zero}) {
      p.is_nilpotent = true;
      p.degree       = p.layers.size();
    }
    return p;
  }

  bool is_archimedean(FiniteSemigroup const& S, ArchimedeanVariant variant) {
    auto const               n = S.size();
    std::vector<element_set> ideal_of(n);
    std::vector<element_set> powers_of(n);
    for (element_id b = 0; b < n; ++b) {
      ideal_of[b] = variant == ArchimedeanVariant::sbs
                        ? two_sided_translate(S, b)
                        : principal_ideal(S, b).members;
      // the powers of a first repeat within n steps
      std::vector<element_id> pw;
      element_id              x = b;
      for (std::size_t k = 1; k <= n; ++k) {
        pw.push_back(x);
        x = S.product(x, b);
      }
      powers_of[b] = make_set(std::move(pw));
    }
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        if (set_intersection(powers_of[a], ideal_of[b]).empty()) {
          return false;
        }
      }
    }
    return true;
  }

  SimplicityFlags simplicity_flags(FiniteSemigroup const& S) {
    SimplicityFlags f;
    f.is_simple = true;
    for (element_id a = 0; a < S.size() && f.is_simple; ++a) {
      f.is_simple = principal_ideal(S, a).size() == S.size();
    }
    f.is_completely_simple = f.is_simple;
    if (f.is_simple && special_elements(S).idempotents.empty()) {
      throw InternalInconsistency("finite simple semigroup without idempotent");
    }
    return f;
  }

}  // namespace semiperm
