// Generated instances of the group-over-nilpotent shape in which the group
// identity is the identity of the whole semigroup.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semiperm/construction.hpp"
#include "semiperm/enumeration.hpp"
#include "semiperm/groups.hpp"
#include "semiperm/gset.hpp"
#include "semiperm/ideals.hpp"

namespace families {

  using namespace semiperm;

  struct Instance {
    std::string     description;
    FiniteSemigroup S;
  };

  inline std::vector<NamedGroup> small_groups() {
    std::vector<NamedGroup> out;
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    }
    out.push_back({"K4", direct_product(cyclic_group(2), cyclic_group(2))});
    out.push_back({"S3", symmetric_group(3)});
    return out;
  }

  // Disjoint unions of coset spaces of G* x G with total size <= max_points,
  // each multiset of subgroups taken once.
  inline void for_each_biset(FiniteGroup const& G, std::size_t max_points,
                             std::function<void(GSet const&, std::string)> f) {
    auto const P    = direct_product(dual(G), G);
    auto const subs = all_subgroups(P, P.size());
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (P.size() / subs[i].size() <= max_points) {
        usable.push_back(i);
      }
    }
    std::vector<std::size_t> chosen;
    auto rec = [&](std::size_t from, std::size_t points, auto& self) -> void {
      if (!chosen.empty()) {
        GSet        X = coset_space(P, subs[chosen[0]]);
        std::string d = std::to_string(P.size() / subs[chosen[0]].size());
        for (std::size_t k = 1; k < chosen.size(); ++k) {
          X = disjoint_union(X, coset_space(P, subs[chosen[k]]));
          d += "+" + std::to_string(P.size() / subs[chosen[k]].size());
        }
        f(X, d);
      }
      for (std::size_t u = from; u < usable.size(); ++u) {
        auto const idx = P.size() / subs[usable[u]].size();
        if (points + idx <= max_points) {
          chosen.push_back(usable[u]);
          self(u, points + idx, self);
          chosen.pop_back();
        }
      }
    };
    rec(0, 0, rec);
  }

  // Trivial action on every nilpotent semigroup of order 2..max_nil (up to
  // isomorphism), and layered extensions of degree t = 2..max_nil whose
  // nilpotent part has at most max_nil elements.
  inline std::vector<Instance> theorem3_family(FiniteGroup const& G,
                                               std::string const& name,
                                               std::size_t        max_nil) {
    std::vector<Instance> out;
    for (std::size_t n = 2; n <= max_nil; ++n) {
      for (auto const& N : enumerate_up_to(n, UpTo::iso)) {
        if (nilpotency_profile(N).is_nilpotent) {
          out.push_back({name + " trivially on a nilpotent of order "
                             + std::to_string(n),
                         trivial_action_extension(G, N)});
        }
      }
    }
    for (std::size_t t = 2; t <= max_nil; ++t) {
      // |N| = |X| + (t - 2) + 1
      std::size_t const max_points = max_nil + 1 - t;
      for_each_biset(G, max_points, [&](GSet const& X, std::string d) {
        out.push_back({name + " layered t=" + std::to_string(t) + " on " + d,
                       layered_extension(G, X, t)});
      });
    }
    return out;
  }

}  // namespace families
