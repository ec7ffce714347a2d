#include "semiperm/core.hpp"

#include <algorithm>
#include <iterator>

namespace semiperm {

  FiniteSemigroup
  FiniteSemigroup::from_table_no_checks(std::size_t                n,
                                        std::vector<element_id>    table,
                                        std::vector<std::string>   labels) {
    if (n == 0) {
      throw ShapeError("a semigroup must have at least one element");
    }
    if (table.size() != n * n) {
      throw ShapeError("expected " + std::to_string(n * n)
                       + " table entries, found "
                       + std::to_string(table.size()));
    }
    if (!labels.empty() && labels.size() != n) {
      throw ShapeError("expected " + std::to_string(n) + " labels, found "
                       + std::to_string(labels.size()));
    }
    FiniteSemigroup S;
    S._n      = n;
    S._table  = std::move(table);
    S._labels = std::move(labels);
    return S;
  }

  std::string FiniteSemigroup::label(element_id a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  FiniteSemigroup
  FiniteSemigroup::with_labels(std::vector<std::string> labels) const {
    return from_table_no_checks(_n, _table, std::move(labels));
  }

  std::optional<std::array<element_id, 3>>
  find_nonassociative_triple(std::size_t n, std::span<element_id const> t) {
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        element_id const ab = t[a * n + b];
        for (element_id c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return std::array<element_id, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup validate_table(std::size_t                   n,
                                 std::vector<long long> const& flat,
                                 std::vector<std::string>      labels) {
    if (n == 0) {
      throw ShapeError("a semigroup must have at least one element");
    }
    if (flat.size() != n * n) {
      throw ShapeError("expected " + std::to_string(n * n)
                       + " table entries, found "
                       + std::to_string(flat.size()));
    }
    std::vector<element_id> table;
    table.reserve(n * n);
    for (std::size_t i = 0; i < flat.size(); ++i) {
      auto const x = flat[i];
      if (x < 0 || static_cast<unsigned long long>(x) >= n) {
        throw ShapeError("entry " + std::to_string(x) + " at row "
                         + std::to_string(i / n) + ", column "
                         + std::to_string(i % n) + " is outside [0, "
                         + std::to_string(n) + ")");
      }
      table.push_back(static_cast<element_id>(x));
    }
    if (auto w = find_nonassociative_triple(n, table)) {
      throw NonAssociative((*w)[0], (*w)[1], (*w)[2]);
    }
    return FiniteSemigroup::from_table_no_checks(
        n, std::move(table), std::move(labels));
  }

  FiniteSemigroup validate_table(std::size_t                               n,
                                 std::vector<std::vector<long long>> const& raw,
                                 std::vector<std::string> labels) {
    if (raw.size() != n) {
      throw ShapeError("expected " + std::to_string(n) + " rows, found "
                       + std::to_string(raw.size()));
    }
    std::vector<long long> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (raw[i].size() != n) {
        throw ShapeError("row " + std::to_string(i) + " has "
                         + std::to_string(raw[i].size())
                         + " entries, expected " + std::to_string(n));
      }
      flat.insert(flat.end(), raw[i].begin(), raw[i].end());
    }
    return validate_table(n, flat, std::move(labels));
  }

  element_id element_power(FiniteSemigroup const& S,
                           element_id             a,
                           std::uint64_t          k) {
    if (k == 0) {
      throw Error("element_power: exponent must be positive");
    }
    if (a >= S.size()) {
      throw Error("element_power: element out of range");
    }
    element_id result = a;
    element_id base   = a;
    --k;
    while (k > 0) {
      if (k & 1) {
        result = S.product(result, base);
      }
      base = S.product(base, base);
      k >>= 1;
    }
    return result;
  }

  SpecialElements special_elements(FiniteSemigroup const& S) {
    SpecialElements out;
    auto const      n = S.size();
    for (element_id a = 0; a < n; ++a) {
      bool is_zero = true, is_left_id = true, is_right_id = true;
      for (element_id s = 0; s < n; ++s) {
        is_zero     = is_zero && S.product(a, s) == a && S.product(s, a) == a;
        is_left_id  = is_left_id && S.product(a, s) == s;
        is_right_id = is_right_id && S.product(s, a) == s;
      }
      if (is_zero) {
        out.zero = a;
      }
      if (is_left_id) {
        out.left_identities.push_back(a);
      }
      if (is_right_id) {
        out.right_identities.push_back(a);
      }
      if (is_left_id && is_right_id) {
        out.identity = a;
      }
      if (S.product(a, a) == a) {
        out.idempotents.push_back(a);
      }
    }
    return out;
  }

  FiniteSemigroup adjoin(FiniteSemigroup const& S, Adjoin kind) {
    auto const              n = S.size();
    auto const              m = n + 1;
    auto const              x = static_cast<element_id>(n);
    std::vector<element_id> table(m * m);
    for (element_id a = 0; a < m; ++a) {
      for (element_id b = 0; b < m; ++b) {
        element_id v;
        if (a < n && b < n) {
          v = S.product(a, b);
        } else if (kind == Adjoin::zero) {
          v = x;
        } else {
          v = (a == x) ? b : a;
        }
        table[a * m + b] = v;
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      labels = S.labels();
      labels.push_back(kind == Adjoin::zero ? "0" : "1");
    }
    return FiniteSemigroup::from_table_no_checks(
        m, std::move(table), std::move(labels));
  }

  element_set generated_subsemigroup(FiniteSemigroup const& S,
                                     element_set const&     gens) {
    std::vector<bool>       seen(S.size(), false);
    std::vector<element_id> members;
    for (auto g : gens) {
      if (!seen[g]) {
        seen[g] = true;
        members.push_back(g);
      }
    }
    // Right multiplication by generators reaches every product of them.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto g : gens) {
        auto const x = S.product(members[i], g);
        if (!seen[x]) {
          seen[x] = true;
          members.push_back(x);
        }
      }
    }
    return make_set(std::move(members));
  }

  std::optional<element_id> is_monogenic(FiniteSemigroup const& S) {
    auto const n = S.size();
    for (element_id a = 0; a < n; ++a) {
      if (generated_subsemigroup(S, {a}).size() == n) {
        return a;
      }
    }
    return std::nullopt;
  }

  element_set set_product(FiniteSemigroup const& S,
                          element_set const&     A,
                          element_set const&     B) {
    std::vector<bool> seen(S.size(), false);
    for (auto a : A) {
      for (auto b : B) {
        seen[S.product(a, b)] = true;
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

  bool is_subsemigroup(FiniteSemigroup const& S, element_set const& X) {
    if (X.empty()) {
      return false;
    }
    for (auto a : X) {
      for (auto b : X) {
        if (!contains(X, S.product(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const& S, element_set const& X) {
    if (!is_subsemigroup(S, X)) {
      throw Error("restrict_to: subset is not a subsemigroup");
    }
    auto const              m = X.size();
    std::vector<element_id> index(S.size(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      index[X[i]] = static_cast<element_id>(i);
    }
    std::vector<element_id>  table(m * m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = index[S.product(X[i], X[j])];
      }
      if (!S.labels().empty()) {
        labels.push_back(S.labels()[X[i]]);
      }
    }
    return FiniteSemigroup::from_table_no_checks(
        m, std::move(table), std::move(labels));
  }

  FiniteSemigroup transpose(FiniteSemigroup const& S) {
    auto const              n = S.size();
    std::vector<element_id> table(n * n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        table[a * n + b] = S.product(b, a);
      }
    }
    return FiniteSemigroup::from_table_no_checks(n, std::move(table),
                                                 S.labels());
  }

  FiniteSemigroup relabel(FiniteSemigroup const&         S,
                          std::vector<element_id> const& perm) {
    auto const              n = S.size();
    std::vector<element_id> table(n * n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        table[perm[a] * n + perm[b]] = perm[S.product(a, b)];
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      labels.resize(n);
      for (element_id a = 0; a < n; ++a) {
        labels[perm[a]] = S.labels()[a];
      }
    }
    return FiniteSemigroup::from_table_no_checks(
        n, std::move(table), std::move(labels));
  }

  bool is_isomorphism(FiniteSemigroup const&         S,
                      FiniteSemigroup const&         T,
                      std::vector<element_id> const& map) {
    auto const n = S.size();
    if (T.size() != n || map.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (auto x : map) {
      if (x >= n || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        if (map[S.product(a, b)] != T.product(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_commutative(FiniteSemigroup const& S) {
    for (element_id a = 0; a < S.size(); ++a) {
      for (element_id b = a + 1; b < S.size(); ++b) {
        if (S.product(a, b) != S.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_band(FiniteSemigroup const& S) {
    for (element_id a = 0; a < S.size(); ++a) {
      if (S.product(a, a) != a) {
        return false;
      }
    }
    return true;
  }

  bool is_semilattice(FiniteSemigroup const& S) {
    return is_band(S) && is_commutative(S);
  }

  element_set all_elements(std::size_t n) {
    element_set out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = static_cast<element_id>(i);
    }
    return out;
  }

  bool contains(element_set const& X, element_id a) {
    return std::binary_search(X.begin(), X.end(), a);
  }

  bool is_subset(element_set const& X, element_set const& Y) {
    return std::includes(Y.begin(), Y.end(), X.begin(), X.end());
  }

  element_set set_union(element_set const& X, element_set const& Y) {
    element_set out;
    std::set_union(
        X.begin(), X.end(), Y.begin(), Y.end(), std::back_inserter(out));
    return out;
  }

  element_set set_intersection(element_set const& X, element_set const& Y) {
    element_set out;
    std::set_intersection(
        X.begin(), X.end(), Y.begin(), Y.end(), std::back_inserter(out));
    return out;
  }

  element_set set_difference(element_set const& X, element_set const& Y) {
    element_set out;
    std::set_difference(
        X.begin(), X.end(), Y.begin(), Y.end(), std::back_inserter(out));
    return out;
  }

  element_set make_set(std::vector<element_id> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

}  // namespace semiperm
