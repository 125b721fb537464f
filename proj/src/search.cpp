#include "ogs/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <thread>
#include <unordered_map>

#include "ogs/errors.hpp"
#include "ogs/stats.hpp"
#include "ogs/verify.hpp"

namespace ogs {

RequiredOrders required_orders(const GroupSpec& spec) {
  auto multiset = q_integer_factorization(hilbert_polynomial(spec));
  if (!multiset)
    throw internal_fault("Hilbert polynomial failed q-integer factorization");
  RequiredOrders out;
  out.multiset = *multiset;
  std::sort(out.multiset.begin(), out.multiset.end());
  std::vector<long long> perm = out.multiset;
  do {
    out.orderings.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Group elements as dense indices with a full multiplication table; the
// search ceiling keeps the table small (|G|^2 16-bit entries). The table is
// stored transposed (right factor major) so that right-multiplying a whole
// product set by one fixed element walks a single row.
struct IndexedGroup {
  std::vector<ColoredPerm> elements;
  std::vector<std::uint16_t> mul_by; // mul_by[b * size + a] = index of a * b
  std::vector<long long> orders;
  std::size_t size = 0;

  std::uint16_t product(std::uint16_t a, std::uint16_t b) const {
    return mul_by[static_cast<std::size_t>(b) * size + a];
  }
  const std::uint16_t* row(std::uint16_t b) const {
    return mul_by.data() + static_cast<std::size_t>(b) * size;
  }
};

IndexedGroup build_indexed(const std::vector<ColoredPerm>& group) {
  IndexedGroup ig;
  ig.elements = group;
  ig.size = group.size();
  std::unordered_map<ColoredPerm, std::uint16_t, ColoredPermHash> index;
  index.reserve(ig.size);
  for (std::size_t i = 0; i < ig.size; ++i) index.emplace(group[i], static_cast<std::uint16_t>(i));
  ig.mul_by.resize(ig.size * ig.size);
  for (std::size_t j = 0; j < ig.size; ++j)
    for (std::size_t i = 0; i < ig.size; ++i)
      ig.mul_by[j * ig.size + i] = index.at(compose(group[i], group[j]));
  ig.orders.resize(ig.size);
  for (std::size_t i = 0; i < ig.size; ++i) ig.orders[i] = element_order(group[i]);
  return ig;
}

struct UnitResult {
  std::uint64_t examined = 0;
  bool found = false;
  std::vector<std::uint16_t> tuple;
  bool complete = true; // false when aborted by a cap or cancelled
};

// Full depth-first search under one fixed first-element candidate. The
// product set lives in a flag array with rollback marks; a prefix dies on
// the first repeated product.
class UnitSearch {
public:
  UnitSearch(const IndexedGroup& ig, const std::vector<long long>& ordering,
             const std::vector<std::vector<std::uint16_t>>& buckets,
             std::uint16_t identity_index, std::atomic<bool>& stop, std::uint64_t trial_cap,
             std::optional<Clock::time_point> deadline)
      : ig_(ig), ordering_(ordering), buckets_(buckets), stop_(stop), trial_cap_(trial_cap),
        deadline_(deadline), used_(ig.size, 0), products_{identity_index} {
    used_[identity_index] = 1;
  }

  UnitResult run(std::uint16_t first_candidate) {
    if (try_candidate(0, first_candidate) && !result_.found) dfs(1);
    return result_;
  }

private:
  bool budget_ok() {
    if (trial_cap_ && result_.examined >= trial_cap_) {
      result_.complete = false;
      return false;
    }
    if (deadline_ && (result_.examined & 4095) == 0 && Clock::now() > *deadline_) {
      stop_.store(true, std::memory_order_relaxed);
      result_.complete = false;
      return false;
    }
    if (stop_.load(std::memory_order_relaxed)) {
      result_.complete = false;
      return false;
    }
    return true;
  }

  // Extends the product set by prefix * candidate^k for k = 1..m-1; on
  // success records the level and returns true, otherwise rolls back.
  bool try_candidate(std::size_t depth, std::uint16_t cand) {
    ++result_.examined;
    const std::size_t mark = products_.size();
    const long long m = ordering_[depth];
    std::uint16_t ck = cand;
    for (long long k = 1; k < m; ++k) {
      const std::uint16_t* row = ig_.row(ck);
      for (std::size_t idx = 0; idx < mark; ++idx) {
        const std::uint16_t x = row[products_[idx]];
        if (used_[x]) {
          unmark(mark);
          return false;
        }
        used_[x] = 1;
        products_.push_back(x);
      }
      ck = ig_.product(ck, cand);
    }
    marks_.push_back(mark);
    chosen_.push_back(cand);
    if (depth + 1 == ordering_.size()) {
      result_.found = true;
      result_.tuple = chosen_;
    }
    return true;
  }

  void dfs(std::size_t depth) {
    for (std::uint16_t cand : buckets_[depth]) {
      if (result_.found || !budget_ok()) return;
      if (try_candidate(depth, cand)) {
        if (result_.found) return;
        dfs(depth + 1);
        if (result_.found) return;
        pop_level();
      }
    }
  }

  void pop_level() {
    unmark(marks_.back());
    marks_.pop_back();
    chosen_.pop_back();
  }

  void unmark(std::size_t down_to) {
    while (products_.size() > down_to) {
      used_[products_.back()] = 0;
      products_.pop_back();
    }
  }

  const IndexedGroup& ig_;
  const std::vector<long long>& ordering_;
  const std::vector<std::vector<std::uint16_t>>& buckets_;
  std::atomic<bool>& stop_;
  const std::uint64_t trial_cap_;
  const std::optional<Clock::time_point> deadline_;
  std::vector<char> used_;
  std::vector<std::uint16_t> products_;
  std::vector<std::size_t> marks_;
  std::vector<std::uint16_t> chosen_;
  UnitResult result_;
};

Basis search_label_basis(const GroupSpec& spec) {
  Basis b;
  b.n = spec.n();
  b.r = spec.r();
  b.p = spec.p();
  b.perfect = true;
  b.label = "search(r=" + std::to_string(spec.r()) + ",p=" + std::to_string(spec.p()) +
            ",n=" + std::to_string(spec.n()) + ")";
  return b;
}

} // namespace

SearchOutcome search_perfect_hilbertian(const GroupSpec& spec, const SearchLimits& limits) {
  const auto t0 = Clock::now();
  auto elapsed = [&t0] { return std::chrono::duration<double>(Clock::now() - t0).count(); };

  SearchOutcome outcome{spec, {}, {}, std::nullopt, 0, false, 0.0};
  const RequiredOrders req = required_orders(spec);
  outcome.order_multiset = req.multiset;
  outcome.orderings = req.orderings;

  if (spec.order() > limits.group_ceiling)
    throw size_limit_error("group order " + spec.order().str() +
                           " exceeds the search ceiling " +
                           std::to_string(limits.group_ceiling));
  const auto group = enumerate_group(spec, limits.group_ceiling);

  if (req.multiset.empty()) {
    // Trivial group: the empty basis is already perfect and Hilbertian.
    outcome.found = search_label_basis(spec);
    outcome.elapsed_s = elapsed();
    return outcome;
  }

  const IndexedGroup ig = build_indexed(group);
  std::uint16_t identity_index = 0;
  for (std::size_t i = 0; i < ig.size; ++i)
    if (ig.elements[i].is_identity()) identity_index = static_cast<std::uint16_t>(i);

  struct Unit {
    std::size_t ordering_idx;
    std::uint16_t first_candidate;
  };
  std::vector<Unit> units;
  std::vector<std::vector<std::vector<std::uint16_t>>> buckets_per_ordering;
  for (std::size_t oi = 0; oi < req.orderings.size(); ++oi) {
    const auto& ordering = req.orderings[oi];
    std::vector<std::vector<std::uint16_t>> buckets(ordering.size());
    for (std::size_t d = 0; d < ordering.size(); ++d)
      for (std::size_t i = 0; i < ig.size; ++i)
        if (ig.orders[i] == ordering[d]) buckets[d].push_back(static_cast<std::uint16_t>(i));
    for (std::uint16_t cand : buckets[0]) units.push_back({oi, cand});
    buckets_per_ordering.push_back(std::move(buckets));
  }

  std::optional<Clock::time_point> deadline;
  if (limits.time_limit_s > 0)
    deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(limits.time_limit_s));

  std::vector<UnitResult> results(units.size());
  std::atomic<std::size_t> next_unit{0};
  std::atomic<std::size_t> best_found{units.size()};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> global_examined{0};
  const int workers = std::max(1, limits.workers);

  auto worker = [&] {
    for (;;) {
      const std::size_t u = next_unit.fetch_add(1);
      if (u >= units.size()) return;
      if (u > best_found.load()) {
        results[u].complete = false;
        continue;
      }
      std::uint64_t cap = 0;
      if (limits.max_candidates) {
        const std::uint64_t sofar = global_examined.load();
        if (sofar >= limits.max_candidates) {
          stop.store(true);
          results[u].complete = false;
          continue;
        }
        cap = limits.max_candidates - sofar;
      }
      UnitSearch search(ig, req.orderings[units[u].ordering_idx],
                        buckets_per_ordering[units[u].ordering_idx], identity_index, stop, cap,
                        deadline);
      results[u] = search.run(units[u].first_candidate);
      global_examined.fetch_add(results[u].examined);
      if (results[u].found) {
        std::size_t expected = best_found.load();
        while (u < expected && !best_found.compare_exchange_weak(expected, u)) {
        }
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // As-if-sequential merge: counts accumulate over completed units up to and
  // including the first successful one.
  bool truncated = false;
  for (std::size_t u = 0; u < units.size(); ++u) {
    outcome.candidates_examined += results[u].examined;
    if (results[u].found) {
      Basis b = search_label_basis(spec);
      b.moduli = req.orderings[units[u].ordering_idx];
      for (std::uint16_t idx : results[u].tuple) b.elements.push_back(ig.elements[idx]);
      outcome.found = b;
      break;
    }
    if (!results[u].complete) truncated = true;
  }
  outcome.exhausted = !outcome.found && !truncated;

  if (outcome.found) {
    // Independent re-verification of the reported basis.
    auto validation = validate_basis(*outcome.found, group);
    if (std::holds_alternative<FailureWitness>(validation))
      throw internal_fault("search returned a basis that fails validation");
    if (!is_hilbertian(*outcome.found, spec).holds)
      throw internal_fault("search returned a basis that is not Hilbertian");
  }
  outcome.elapsed_s = elapsed();
  return outcome;
}

std::vector<AlphaScanRow> alpha_scan(int r_max, int n_max) {
  if (r_max < 1 || n_max < 1) throw invalid_argument_error("alpha_scan bounds must be >= 1");
  std::vector<AlphaScanRow> rows;
  for (int r = 1; r <= r_max; ++r)
    for (int p = 1; p <= r; ++p) {
      if (r % p != 0) continue;
      for (int n = 1; n <= n_max; ++n) {
        GroupSpec spec(r, p, n);
        rows.push_back({r, p, n, spec.gcd_flag(), select_alpha(spec)});
      }
    }
  return rows;
}

} // namespace ogs
