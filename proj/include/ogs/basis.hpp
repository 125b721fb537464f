#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ogs/colored_perm.hpp"
#include "ogs/group.hpp"

namespace ogs {

using ExponentVector = std::vector<long long>;

// Structural family of a basis: decides whether the peel decomposition
// applies and which membership test it uses at the top level.
enum class BasisFamily {
  Generic, // table decomposition only
  T,       // t-basis of S_n (and the Weyl a-basis)
  Tau,     // tau-basis of G(r,n)
  U,       // u-basis of G(r,p,n); peels via the color relation of H
};

// An ordered generating system: elements in left-to-right multiplication
// order together with exponent moduli. perfect means every modulus equals
// the element order.
struct Basis {
  std::vector<ColoredPerm> elements;
  std::vector<long long> moduli;
  bool perfect = false;
  std::string label;

  BasisFamily family = BasisFamily::Generic;
  int n = 0, r = 1, p = 1;       // degree and group parameters
  int alpha = 0;                 // u-family: selected color parameter
  std::optional<int> beta;       // u-family: Remark-beta variant
  std::string variant = "standard";

  BigInt span_size() const;
};

int sign_residue(int x, int m); // x mod m in [0, m)

// Smallest alpha in [0, r/p) with gcd(r/p, (n-1)*alpha*p - n) = 1.
std::optional<int> select_alpha(const GroupSpec& spec);

Basis sn_basis(int n);
Basis wreath_basis(int r, int n);

struct RpnVariant {
  enum Kind { Standard, Beta, Zero } kind = Standard;
  int beta = 1;
  static RpnVariant standard() { return {}; }
  static RpnVariant with_beta(int b) { return {Beta, b}; }
  static RpnVariant zero() { return {Zero, 1}; }
};

// The u-basis (u_{n-1},...,u_0) of G(r,p,n); requires gcd(n,p,r/p) = 1,
// gcd(beta, r/p) = 1 for the beta variant, r = p for the zero variant.
// An explicit alpha overrides the smallest valid one (it must satisfy the
// gcd condition itself).
Basis rpn_basis(const GroupSpec& spec, RpnVariant variant = RpnVariant::standard(),
                std::optional<int> forced_alpha = std::nullopt);

enum class WeylType { A, B, D };
Basis weyl_basis(WeylType type, int n);
Basis bplus_basis(int n);

struct DecompositionTable {
  std::unordered_map<ColoredPerm, ExponentVector, ColoredPermHash> entries;

  const ExponentVector& at(const ColoredPerm& g) const;
  bool contains(const ColoredPerm& g) const { return entries.count(g) != 0; }
  std::size_t size() const { return entries.size(); }
};

struct FailureWitness {
  enum Kind { Collision, OutsideGroup, CountMismatch } kind;
  ExponentVector first, second;  // Collision: two tuples with equal product
  ColoredPerm element;           // Collision/OutsideGroup: the product
  BigInt products = 0, group_size = 0; // CountMismatch
  std::string describe() const;
};

using ValidationResult = std::variant<DecompositionTable, FailureWitness>;

// Enumerates all prod(m_i) products a_1^{k_1}...a_n^{k_n}. Returns the
// element -> exponent table when they are distinct and cover the group
// exactly, otherwise the first witness found.
ValidationResult validate_basis(const Basis& basis,
                                const std::vector<ColoredPerm>& group,
                                std::uint64_t ceiling = kDefaultGroupCeiling);

ColoredPerm compose_from_exponents(const Basis& basis, const ExponentVector& ks);

// Table route: enumerate the span and look g up (errors if absent).
ExponentVector decompose_table(const ColoredPerm& g, const Basis& basis);

// Structural route for t/tau/u families: peel the leading element by
// scanning k until a_1^{-k} g lands in the subgroup generated by the rest
// (top letter fixed; u-family additionally c_n = (alpha p - 1) * sum of the
// other colors), then recurse through the color-erasing isomorphism.
// O(sum m_i) compositions per element.
ExponentVector decompose_peel(const ColoredPerm& g, const Basis& basis);

} // namespace ogs
