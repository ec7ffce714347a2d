#include "semiperm/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include "semiperm/properties.hpp"

namespace semiperm {

  namespace {
    template <typename F>
    void parallel_for(std::size_t count, std::size_t jobs, F&& f) {
      jobs = std::max<std::size_t>(1, std::min(jobs, count));
      if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
          f(i);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
          for (auto i = next++; i < count; i = next++) {
            f(i);
          }
        });
      }
      for (auto& t : workers) {
        t.join();
      }
    }

    class Backtrack {
     public:
      explicit Backtrack(std::size_t n) : _n(n), _t(n * n, 0) {}

      // Every consistent completion of cells [0, start), given those cells.
      template <typename Emit>
      void run(std::size_t pos, Emit& emit) {
        if (pos == _t.size()) {
          emit(_t);
          return;
        }
        for (element_id v = 0; v < _n; ++v) {
          _t[pos] = v;
          if (consistent(pos)) {
            run(pos + 1, emit);
          }
        }
      }

      std::vector<element_id>& table() noexcept {
        return _t;
      }

      // Checks each triple whose four cells are among [0, k] and include k.
      bool consistent(std::size_t k) const {
        auto const n      = _n;
        auto       filled = [k, n](std::size_t a, std::size_t b) {
          return a * n + b <= k;
        };
        auto const* t = _t.data();
        auto const  i = k / n, j = k % n;
        auto const  v = t[k];
        // ab = cell: (ij)c = i(jc)
        for (std::size_t c = 0; c < n; ++c) {
          if (filled(v, c) && filled(j, c)) {
            auto const jc = t[j * n + c];
            if (filled(i, jc) && t[v * n + c] != t[i * n + jc]) {
              return false;
            }
          }
        }
        // bc = cell: (ai)j = a(ij)
        for (std::size_t a = 0; a < n; ++a) {
          if (filled(a, i) && filled(a, v)) {
            auto const ai = t[a * n + i];
            if (filled(ai, j) && t[ai * n + j] != t[a * n + v]) {
              return false;
            }
          }
        }
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (!filled(x, y)) {
              continue;
            }
            auto const xy = t[x * n + y];
            // (xy)j with xy = i is the cell: x(yj) must equal v
            if (xy == i && filled(y, j)) {
              auto const yj = t[y * n + j];
              if (filled(x, yj) && t[x * n + yj] != v) {
                return false;
              }
            }
            // i(xy) with xy = j is the cell: (ix)y must equal v
            if (xy == j && filled(i, x)) {
              auto const ix = t[i * n + x];
              if (filled(ix, y) && t[ix * n + y] != v) {
                return false;
              }
            }
          }
        }
        return true;
      }

     private:
      std::size_t             _n;
      std::vector<element_id> _t;
    };

    // -1, 0, 1 as the relabeled table of S under q compares with best,
    // where the relabeled (x, y) entry is p[S(q[x], q[y])].
    int compare_relabeled(std::span<element_id const>    S,
                          std::size_t                    n,
                          std::vector<element_id> const& q,
                          std::vector<element_id> const& p,
                          std::span<element_id const>    best) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto const c = p[S[q[x] * n + q[y]]];
          auto const b = best[x * n + y];
          if (c != b) {
            return c < b ? -1 : 1;
          }
        }
      }
      return 0;
    }

    void minimize_over_relabelings(std::span<element_id const> S,
                                   std::size_t                 n,
                                   std::vector<element_id>&    best) {
      std::vector<element_id> q(n), p(n);
      std::iota(q.begin(), q.end(), 0);
      do {
        for (std::size_t x = 0; x < n; ++x) {
          p[q[x]] = static_cast<element_id>(x);
        }
        if (compare_relabeled(S, n, q, p, best) < 0) {
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
              best[x * n + y] = p[S[q[x] * n + q[y]]];
            }
          }
        }
      } while (std::next_permutation(q.begin(), q.end()));
    }

    bool no_smaller_relabeling(std::span<element_id const> S,
                               std::size_t                 n,
                               std::span<element_id const> target) {
      std::vector<element_id> q(n), p(n);
      std::iota(q.begin(), q.end(), 0);
      do {
        for (std::size_t x = 0; x < n; ++x) {
          p[q[x]] = static_cast<element_id>(x);
        }
        if (compare_relabeled(S, n, q, p, target) < 0) {
          return false;
        }
      } while (std::next_permutation(q.begin(), q.end()));
      return true;
    }

    void check_canonical_order(std::size_t n) {
      if (n > max_canonical_order) {
        throw BoundExceeded("canonical forms are limited to order "
                            + std::to_string(max_canonical_order));
      }
    }
  }  // namespace

  std::string to_string(UpTo mode) {
    switch (mode) {
      case UpTo::labeled:
        return "labeled";
      case UpTo::iso:
        return "iso";
      case UpTo::iso_and_anti:
        return "isoanti";
    }
    return "?";
  }

  std::optional<UpTo> parse_up_to(std::string_view s) {
    if (s == "labeled") {
      return UpTo::labeled;
    }
    if (s == "iso") {
      return UpTo::iso;
    }
    if (s == "isoanti") {
      return UpTo::iso_and_anti;
    }
    return std::nullopt;
  }

  std::vector<FiniteSemigroup> enumerate_associative(std::size_t n,
                                                     std::size_t jobs) {
    if (n == 0) {
      throw Error("enumerate_associative: the order must be positive");
    }
    if (n > max_enumeration_order) {
      throw BoundExceeded("exhaustive enumeration is limited to order "
                          + std::to_string(max_enumeration_order));
    }
    // consistent first rows, in lexicographic order
    std::vector<std::vector<element_id>> prefixes;
    {
      Backtrack b(n);
      auto      collect = [&](std::size_t pos, auto& self) -> void {
        if (pos == n) {
          prefixes.emplace_back(b.table().begin(), b.table().begin() + n);
          return;
        }
        for (element_id v = 0; v < n; ++v) {
          b.table()[pos] = v;
          if (b.consistent(pos)) {
            self(pos + 1, self);
          }
        }
      };
      collect(0, collect);
    }
    std::vector<std::vector<FiniteSemigroup>> found(prefixes.size());
    parallel_for(prefixes.size(), jobs, [&](std::size_t task) {
      Backtrack b(n);
      std::copy(prefixes[task].begin(), prefixes[task].end(),
                b.table().begin());
      auto emit = [&](std::vector<element_id> const& t) {
        found[task].push_back(FiniteSemigroup::from_table_no_checks(n, t));
      };
      b.run(n, emit);
    });
    std::vector<FiniteSemigroup> out;
    for (auto& part : found) {
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }

  FiniteSemigroup canonical_form(FiniteSemigroup const& S, UpTo mode) {
    auto const n = S.size();
    if (mode == UpTo::labeled) {
      return FiniteSemigroup::from_table_no_checks(
          n, {S.table().begin(), S.table().end()});
    }
    check_canonical_order(n);
    std::vector<element_id> best(S.table().begin(), S.table().end());
    minimize_over_relabelings(S.table(), n, best);
    if (mode == UpTo::iso_and_anti) {
      auto const T = transpose(S);
      minimize_over_relabelings(T.table(), n, best);
    }
    return FiniteSemigroup::from_table_no_checks(n, std::move(best));
  }

  bool is_canonical(FiniteSemigroup const& S, UpTo mode) {
    if (mode == UpTo::labeled) {
      return true;
    }
    check_canonical_order(S.size());
    if (!no_smaller_relabeling(S.table(), S.size(), S.table())) {
      return false;
    }
    return mode != UpTo::iso_and_anti
           || no_smaller_relabeling(transpose(S).table(), S.size(),
                                    S.table());
  }

  std::vector<FiniteSemigroup> enumerate_up_to(std::size_t n, UpTo mode,
                                               std::size_t jobs) {
    auto all = enumerate_associative(n, jobs);
    if (mode == UpTo::labeled) {
      return all;
    }
    std::vector<char> keep(all.size());
    parallel_for(all.size(), jobs, [&](std::size_t i) {
      keep[i] = is_canonical(all[i], mode);
    });
    std::vector<FiniteSemigroup> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (keep[i]) {
        out.push_back(std::move(all[i]));
      }
    }
    return out;
  }

  bool CensusReport::passed() const {
    return std::all_of(predicates.begin(), predicates.end(),
                       [](auto const& p) { return p.failures == 0; });
  }

  CensusReport census_verify(CensusConfig const& config) {
    std::vector<Predicate const*> predicates;
    for (auto const& name : config.predicates) {
      auto const* p = find_predicate(name);
      if (p == nullptr) {
        throw Error("unknown predicate \"" + name + "\"");
      }
      predicates.push_back(p);
    }
    auto const tables
        = enumerate_up_to(config.order, config.up_to, config.parallel_width);
    std::vector<std::vector<PredicateOutcome>> outcomes(tables.size());
    parallel_for(tables.size(), config.parallel_width, [&](std::size_t i) {
      SemigroupFacts facts(tables[i]);
      for (auto const* p : predicates) {
        outcomes[i].push_back(p->check(facts));
      }
    });

    CensusReport report;
    report.order  = config.order;
    report.up_to  = config.up_to;
    report.tables = tables.size();
    for (std::size_t k = 0; k < predicates.size(); ++k) {
      PredicateTally tally;
      tally.name       = predicates[k]->name;
      tally.count_only = predicates[k]->count_only;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        auto const& o = outcomes[i][k];
        tally.applicable += o.applicable;
        tally.holds += o.applicable && o.holds;
        if (o.applicable && !o.holds && !tally.count_only) {
          ++tally.failures;
          if (tally.counterexamples.size() < config.max_counterexamples) {
            tally.counterexamples.push_back(tables[i]);
          }
        }
      }
      report.predicates.push_back(std::move(tally));
    }
    return report;
  }

  std::string format_census(CensusReport const& report) {
    std::ostringstream out;
    out << "order " << report.order << ", " << to_string(report.up_to) << ": "
        << report.tables << " semigroups\n";
    for (auto const& p : report.predicates) {
      if (p.count_only) {
        out << p.name << ": " << p.holds << " of " << p.applicable << '\n';
      } else {
        out << p.name << ": " << (p.failures == 0 ? "ok" : "FAILED")
            << " (applicable " << p.applicable << ", counterexamples "
            << p.failures << ")\n";
      }
    }
    return out.str();
  }

}  // namespace semiperm
