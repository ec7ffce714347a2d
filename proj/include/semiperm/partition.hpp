#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "semiperm/core.hpp"

namespace semiperm {

  //! An equivalence relation on {0, ..., n - 1} in canonical form.
  //!
  //! class_of(a) is the smallest element of the class of a, so two
  //! partitions are equal exactly when their vectors are equal.
  class Partition {
   public:
    Partition() = default;

    static Partition identity(std::size_t n);
    static Partition universal(std::size_t n);

    //! Canonicalises an arbitrary labelling: a ~ b iff labels[a] == labels[b].
    static Partition from_labels(std::vector<std::uint32_t> const& labels);

    //! Builds from a vector that must already be canonical.
    static Partition from_class_of(std::vector<element_id> class_of);

    static Partition from_classes(std::size_t                     n,
                                  std::vector<element_set> const& classes);

    std::size_t subject_order() const noexcept {
      return _class_of.size();
    }

    element_id class_of(element_id a) const noexcept {
      return _class_of[a];
    }

    std::vector<element_id> const& class_vector() const noexcept {
      return _class_of;
    }

    bool related(element_id a, element_id b) const noexcept {
      return _class_of[a] == _class_of[b];
    }

    std::size_t number_of_classes() const;

    //! Classes ordered by their smallest member.
    std::vector<element_set> classes() const;

    //! The class of a as a sorted set.
    element_set class_members(element_id a) const;

    //! Class representatives in increasing order.
    element_set representatives() const;

    //! True if every class of this partition lies inside a class of other.
    bool refines(Partition const& other) const;

    bool is_identity() const;
    bool is_universal() const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const& x, Partition const& y) {
      return x._class_of <=> y._class_of;
    }

   private:
    std::vector<element_id> _class_of;
  };

  //! Intersection of two partitions on the same set.
  Partition meet(Partition const& x, Partition const& y);

  //! Finest partition coarser than both.
  Partition join_equivalences(Partition const& x, Partition const& y);

  //! A binary relation on {0, ..., n - 1} stored as one bitset per row.
  class Relation {
   public:
    explicit Relation(std::size_t n = 0);

    std::size_t subject_order() const noexcept {
      return _n;
    }

    bool contains(element_id a, element_id b) const noexcept {
      return (_bits[a * _words + b / 64] >> (b % 64)) & 1U;
    }

    void insert(element_id a, element_id b) noexcept {
      _bits[a * _words + b / 64] |= std::uint64_t(1) << (b % 64);
    }

    std::size_t size() const;

    std::vector<std::pair<element_id, element_id>> pairs() const;

    //! First pair in row-major order that is in this relation and not in
    //! \p other.
    std::optional<std::pair<element_id, element_id>>
    first_not_in(Relation const& other) const;

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    friend Relation compose(Partition const&, Partition const&);

    std::size_t                _n;
    std::size_t                _words;
    std::vector<std::uint64_t> _bits;
  };

  //! The relation of a partition, as a set of pairs.
  Relation as_relation(Partition const& p);

  //! a (x o y) b iff there is c with a x c and c y b.
  //!
  //! Throws SubjectMismatch for partitions of different sets.
  Relation compose(Partition const& x, Partition const& y);

  struct CommuteResult {
    bool commutes = true;
    //! A pair in x o y that is not in y o x, when they differ.
    std::optional<std::pair<element_id, element_id>> witness;
  };

  CommuteResult commutes(Partition const& x, Partition const& y);

  namespace detail {
    //! Union-find over {0, ..., n - 1} with path halving.
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n);
      explicit UnionFind(Partition const& p);

      element_id find(element_id a);

      //! Merges the classes of a and b; false if already merged.
      bool unite(element_id a, element_id b);

      Partition to_partition();

     private:
      std::vector<element_id> _parent;
    };
  }  // namespace detail

  //! A finite set with a family of unary maps acting on it.
  //!
  //! A partition is compatible when every map sends related points to
  //! related points. Semigroup congruences use the left and right
  //! translations x -> sx and x -> xs; congruences of a right G-set use the
  //! maps x -> xg.
  class TranslationSystem {
   public:
    TranslationSystem(std::size_t                          points,
                      std::vector<std::vector<element_id>> maps);

    static TranslationSystem two_sided(FiniteSemigroup const& S);

    std::size_t points() const noexcept {
      return _points;
    }

    std::vector<std::vector<element_id>> const& maps() const noexcept {
      return _maps;
    }

    bool is_compatible(Partition const& p) const;

    //! Least compatible partition containing \p base and \p pairs.
    //!
    //! \p base must already be compatible. Runs a union-find worklist:
    //! whenever (a, b) merges two classes, every image (f(a), f(b)) is
    //! queued.
    Partition
    closure(Partition const&                                     base,
            std::vector<std::pair<element_id, element_id>> const& pairs) const;

    Partition
    closure(std::vector<std::pair<element_id, element_id>> const& pairs) const;

    //! Every compatible partition, identity first and universal last
    //! (descending lexicographic order of class vectors).
    //!
    //! Starts from the identity and joins with principal partitions until
    //! nothing new appears. Throws BoundExceeded if more than \p cap
    //! partitions are found.
    std::vector<Partition> lattice(std::size_t cap) const;

   private:
    std::size_t                          _points;
    std::vector<std::vector<element_id>> _maps;
  };

}  // namespace semiperm
