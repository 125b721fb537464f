#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ogs/colored_perm.hpp"

namespace ogs {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultGroupCeiling = 10'000'000;

// Parameters (r,p,n) of the complex reflection group G(r,p,n): the index-p
// subgroup of G(r,n) whose color sum is 0 mod p. Requires p | r.
class GroupSpec {
public:
  GroupSpec(int r, int p, int n);

  int r() const { return r_; }
  int p() const { return p_; }
  int n() const { return n_; }
  int r_over_p() const { return r_ / p_; }

  BigInt order() const;           // n! * r^n / p
  int gcd_flag() const;           // gcd(n, p, r/p)

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) = default;

private:
  int r_, p_, n_;
};

bool in_subgroup(const ColoredPerm& g, const GroupSpec& spec);

// All elements of G(r,p,n) in lexicographic (perm, colors) order.
std::vector<ColoredPerm> enumerate_group(const GroupSpec& spec,
                                         std::uint64_t ceiling = kDefaultGroupCeiling);

// Subgroup generated by the given elements, closed under composition by BFS;
// returned sorted in the same lexicographic order as enumerate_group.
std::vector<ColoredPerm> closure(const std::vector<ColoredPerm>& generators,
                                 std::uint64_t ceiling = kDefaultGroupCeiling);

} // namespace ogs
