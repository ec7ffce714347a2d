#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiperm/errors.hpp"

namespace semiperm {

  //! Index of an element in a Cayley table, always in [0, n).
  using element_id = std::uint32_t;

  //! A set of elements stored as a strictly increasing vector.
  using element_set = std::vector<element_id>;

  //! A finite semigroup given by its Cayley table.
  //!
  //! Elements are the integers 0, ..., n - 1 and the entry in row \c a,
  //! column \c b is the product \c ab. Values are immutable once built; the
  //! only way to obtain one from untrusted data is validate_table, which
  //! checks every triple for associativity.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    //! Builds from a row-major table that is known to be associative.
    static FiniteSemigroup from_table_no_checks(std::size_t n,
                                                std::vector<element_id> table,
                                                std::vector<std::string> labels
                                                = {});

    std::size_t size() const noexcept {
      return _n;
    }

    element_id product(element_id a, element_id b) const noexcept {
      return _table[a * _n + b];
    }

    std::span<element_id const> row(element_id a) const noexcept {
      return {_table.data() + a * _n, _n};
    }

    std::span<element_id const> table() const noexcept {
      return _table;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! Label of \p a, or its decimal id when the semigroup is unlabelled.
    std::string label(element_id a) const;

    FiniteSemigroup with_labels(std::vector<std::string> labels) const;

    //! Equality of tables; labels are display data and are ignored.
    friend bool operator==(FiniteSemigroup const& x, FiniteSemigroup const& y) {
      return x._n == y._n && x._table == y._table;
    }

   private:
    std::size_t              _n = 0;
    std::vector<element_id>  _table;
    std::vector<std::string> _labels;
  };

  //! First triple (a, b, c) in lexicographic order with (ab)c != a(bc).
  std::optional<std::array<element_id, 3>>
  find_nonassociative_triple(std::size_t n, std::span<element_id const> table);

  //! Validates a square table of raw integers and returns the semigroup.
  //!
  //! Throws ShapeError for a ragged table or an out-of-range entry and
  //! NonAssociative (carrying the first failing triple) otherwise.
  FiniteSemigroup validate_table(std::size_t                               n,
                                 std::vector<std::vector<long long>> const& raw,
                                 std::vector<std::string> labels = {});

  //! Same as above for a flat row-major table.
  FiniteSemigroup validate_table(std::size_t                   n,
                                 std::vector<long long> const& flat,
                                 std::vector<std::string>      labels = {});

  //! a^k for k >= 1, by square-and-multiply.
  element_id element_power(FiniteSemigroup const& S, element_id a,
                           std::uint64_t k);

  struct SpecialElements {
    std::optional<element_id> zero;
    std::optional<element_id> identity;
    element_set               idempotents;
    element_set               left_identities;
    element_set               right_identities;
  };

  SpecialElements special_elements(FiniteSemigroup const& S);

  enum class Adjoin { identity, zero };

  //! S^1 or S^0: the new element has id n and existing products are kept.
  FiniteSemigroup adjoin(FiniteSemigroup const& S, Adjoin kind);

  //! Least subsemigroup containing \p gens.
  element_set generated_subsemigroup(FiniteSemigroup const& S,
                                     element_set const&     gens);

  //! Smallest single generator of S, if S is monogenic.
  std::optional<element_id> is_monogenic(FiniteSemigroup const& S);

  //! {ab : a in A, b in B}.
  element_set set_product(FiniteSemigroup const& S, element_set const& A,
                          element_set const& B);

  bool is_subsemigroup(FiniteSemigroup const& S, element_set const& X);

  //! The subsemigroup on \p X, relabelled in increasing order of id.
  FiniteSemigroup restrict_to(FiniteSemigroup const& S, element_set const& X);

  //! The semigroup with x*y := yx.
  FiniteSemigroup transpose(FiniteSemigroup const& S);

  //! The image of S under the bijection a -> perm[a].
  FiniteSemigroup relabel(FiniteSemigroup const&         S,
                          std::vector<element_id> const& perm);

  //! True if \p map is a bijection from S to T preserving products.
  bool is_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T,
                      std::vector<element_id> const& map);

  bool is_commutative(FiniteSemigroup const& S);
  bool is_band(FiniteSemigroup const& S);
  bool is_semilattice(FiniteSemigroup const& S);

  //! All elements 0, ..., n - 1.
  element_set all_elements(std::size_t n);

  bool contains(element_set const& X, element_id a);

  bool is_subset(element_set const& X, element_set const& Y);

  element_set set_union(element_set const& X, element_set const& Y);

  element_set set_intersection(element_set const& X, element_set const& Y);

  element_set set_difference(element_set const& X, element_set const& Y);

  //! Sorts and removes duplicates.
  element_set make_set(std::vector<element_id> v);

}  // namespace semiperm
