#include "ogs/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "ogs/errors.hpp"

namespace ogs {

GroupSpec::GroupSpec(int r, int p, int n) : r_(r), p_(p), n_(n) {
  if (r < 1 || p < 1 || n < 1)
    throw invalid_argument_error("GroupSpec parameters must be positive");
  if (r % p != 0)
    throw invalid_argument_error("p must divide r (got r=" + std::to_string(r) +
                                 ", p=" + std::to_string(p) + ")");
}

BigInt GroupSpec::order() const {
  BigInt result = 1;
  for (int i = 2; i <= n_; ++i) result *= i;
  for (int i = 0; i < n_; ++i) result *= r_;
  return result / p_;
}

int GroupSpec::gcd_flag() const {
  return std::gcd(n_, std::gcd(p_, r_ / p_));
}

bool in_subgroup(const ColoredPerm& g, const GroupSpec& spec) {
  if (g.degree() != spec.n() || g.color_modulus() != spec.r())
    throw invalid_argument_error("element does not match group parameters");
  return g.color_sum() % spec.p() == 0;
}

std::vector<ColoredPerm> enumerate_group(const GroupSpec& spec, std::uint64_t ceiling) {
  if (spec.order() > ceiling)
    throw size_limit_error("group order " + spec.order().str() +
                           " exceeds ceiling " + std::to_string(ceiling));
  const int n = spec.n(), r = spec.r(), p = spec.p();
  std::vector<ColoredPerm> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<int> colors(n, 0);
    // odometer over colors, lexicographic
    for (;;) {
      int sum = std::accumulate(colors.begin(), colors.end(), 0);
      if (sum % p == 0) out.emplace_back(colors, perm, r);
      int i = n - 1;
      while (i >= 0 && colors[i] == r - 1) colors[i--] = 0;
      if (i < 0) break;
      ++colors[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<ColoredPerm> closure(const std::vector<ColoredPerm>& generators,
                                 std::uint64_t ceiling) {
  if (generators.empty())
    throw invalid_argument_error("closure needs at least one generator");
  const int n = generators.front().degree();
  const int r = generators.front().color_modulus();
  for (const auto& g : generators)
    if (g.degree() != n || g.color_modulus() != r)
      throw invalid_argument_error("closure generators have mixed parameters");

  std::unordered_set<ColoredPerm, ColoredPermHash> seen;
  std::deque<ColoredPerm> frontier;
  ColoredPerm id = ColoredPerm::identity(n, r);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    ColoredPerm g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      ColoredPerm h = compose(g, s);
      if (seen.insert(h).second) {
        if (seen.size() > ceiling)
          throw size_limit_error("closure exceeds ceiling " + std::to_string(ceiling));
        frontier.push_back(std::move(h));
      }
    }
  }
  std::vector<ColoredPerm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace ogs
