#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogs/basis.hpp"
#include "ogs/group.hpp"

namespace ogs {

// Element orders a perfect Hilbertian basis must realize, from the q-integer
// factorization of the Hilbert polynomial: the sorted multiset and its
// distinct orderings (lexicographic, deduplicated for repeats).
struct RequiredOrders {
  std::vector<long long> multiset;
  std::vector<std::vector<long long>> orderings;
};

RequiredOrders required_orders(const GroupSpec& spec);

struct SearchLimits {
  std::uint64_t max_candidates = 0; // 0 = unlimited
  double time_limit_s = 0.0;        // 0 = unlimited
  int workers = 1;
  std::uint64_t group_ceiling = 5000; // dense index table bound
};

struct SearchOutcome {
  GroupSpec spec;
  std::vector<long long> order_multiset;
  std::vector<std::vector<long long>> orderings;
  std::optional<Basis> found;
  std::uint64_t candidates_examined = 0;
  bool exhausted = false;
  double elapsed_s = 0.0;
};

// Depth-first search over ordered tuples whose element orders match each
// required ordering in turn, pruning a prefix as soon as its partial product
// set repeats. A completed tuple is re-verified through validate_basis and
// is_hilbertian before being reported. Candidate order is the group
// enumeration order; the outcome (including candidates_examined) is
// independent of the worker count.
SearchOutcome search_perfect_hilbertian(const GroupSpec& spec,
                                        const SearchLimits& limits = {});

struct AlphaScanRow {
  int r, p, n;
  int gcd_flag;
  std::optional<int> alpha;
};

// All (r, p | r, n) cells with r <= r_max, n <= n_max, recording gcd(n,p,r/p)
// and the select_alpha outcome. Theorem guarantee: alpha exists whenever the
// gcd is 1; violations (there should be none) are the caller's to assert.
std::vector<AlphaScanRow> alpha_scan(int r_max, int n_max);

} // namespace ogs
