#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiperm/core.hpp"

namespace semiperm {

  //! Exhaustive enumeration is limited to this order.
  inline constexpr std::size_t max_enumeration_order = 5;

  //! canonical_form is limited to this order (n! relabelings).
  inline constexpr std::size_t max_canonical_order = 6;

  enum class UpTo { labeled, iso, iso_and_anti };

  std::string         to_string(UpTo mode);
  std::optional<UpTo> parse_up_to(std::string_view s);

  //! Every associative n x n table, once each, in lexicographic order of
  //! the row-major table.
  //!
  //! Cells are filled row-major and each triple is checked as soon as all
  //! four of its products are known. The search is split by first row over
  //! \p jobs threads; the output does not depend on \p jobs.
  //!
  //! Throws BoundExceeded if n > max_enumeration_order.
  std::vector<FiniteSemigroup> enumerate_associative(std::size_t n,
                                                     std::size_t jobs = 1);

  //! Lexicographically least table over all relabelings (and, for
  //! iso_and_anti, over all relabelings of the transpose). Labels are
  //! dropped. labeled mode returns the table unchanged.
  //!
  //! Throws BoundExceeded if n > max_canonical_order.
  FiniteSemigroup canonical_form(FiniteSemigroup const& S, UpTo mode);

  //! True iff canonical_form(S, mode) == S.
  bool is_canonical(FiniteSemigroup const& S, UpTo mode);

  //! One table per class: all tables for labeled, else the canonical ones,
  //! in lexicographic order.
  std::vector<FiniteSemigroup> enumerate_up_to(std::size_t n, UpTo mode,
                                               std::size_t jobs = 1);

  struct CensusConfig {
    std::size_t              order = 1;
    UpTo                     up_to = UpTo::labeled;
    std::vector<std::string> predicates;
    std::size_t              parallel_width = 1;
    //! Counterexamples kept per predicate; all are counted.
    std::size_t max_counterexamples = 16;
  };

  struct PredicateTally {
    std::string                  name;
    bool                         count_only = false;
    std::size_t                  applicable = 0;
    std::size_t                  holds      = 0;
    std::size_t                  failures   = 0;
    std::vector<FiniteSemigroup> counterexamples;
  };

  struct CensusReport {
    std::size_t                 order = 0;
    UpTo                        up_to = UpTo::labeled;
    std::size_t                 tables = 0;
    std::vector<PredicateTally> predicates;

    bool passed() const;
  };

  //! Runs the named predicates over enumerate_up_to(order, up_to).
  //!
  //! Throws Error on an unknown predicate name.
  CensusReport census_verify(CensusConfig const& config);

  //! One line per predicate.
  std::string format_census(CensusReport const& report);

}  // namespace semiperm
