#pragma once

#include <vector>

#include "semiperm/construction.hpp"
#include "semiperm/core.hpp"
#include "semiperm/groups.hpp"

namespace fixtures {

  using namespace semiperm;

  inline FiniteSemigroup left_zero(std::size_t n) {
    std::vector<element_id> t(n * n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        t[a * n + b] = a;
      }
    }
    return FiniteSemigroup::from_table_no_checks(n, t);
  }

  inline FiniteSemigroup right_zero(std::size_t n) {
    return transpose(left_zero(n));
  }

  // 0 < 1 < ... < n - 1 with ab = min(a, b); 0 is the zero.
  inline FiniteSemigroup chain(std::size_t n) {
    std::vector<element_id> t(n * n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        t[a * n + b] = std::min(a, b);
      }
    }
    return FiniteSemigroup::from_table_no_checks(n, t);
  }

  // All products equal the last element.
  inline FiniteSemigroup null_semigroup(std::size_t n) {
    std::vector<element_id> t(n * n, static_cast<element_id>(n - 1));
    return FiniteSemigroup::from_table_no_checks(n, t);
  }

  inline ReesMatrixSpec trivial_rees(FiniteGroup const& G, std::size_t I,
                                     std::size_t J) {
    return {G, I, J,
            std::vector<std::vector<element_id>>(
                J, std::vector<element_id>(I, G.identity()))};
  }

  inline FiniteSemigroup rectangular_band(std::size_t I, std::size_t J) {
    return rees_matrix(trivial_rees(cyclic_group(1), I, J));
  }

  inline FiniteGroup klein() {
    return direct_product(cyclic_group(2), cyclic_group(2));
  }

}  // namespace fixtures
