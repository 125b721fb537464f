#pragma once

#include <unordered_map>
#include <vector>

#include "ogs/basis.hpp"
#include "ogs/colored_perm.hpp"
#include "ogs/group.hpp"
#include "ogs/qpoly.hpp"

namespace ogs {

// Permutation statistics; all three reject colored input (r > 1).
std::vector<int> descent_set(const ColoredPerm& pi);
long long maj(const ColoredPerm& pi);
long long inv_length(const ColoredPerm& pi);

// Flag major index: sum of the unique exponents of g relative to the basis
// (peel route when the family supports it, table route otherwise).
long long fmaj(const ColoredPerm& g, const Basis& basis);
long long fmaj(const ExponentVector& ks);

// Sum of q^fmaj(g) over the group, computed from a validated table and
// cross-asserted against prod [m_i]_q; a mismatch throws internal_fault.
QPolynomial fmaj_polynomial(const Basis& basis, const std::vector<ColoredPerm>& group);
QPolynomial fmaj_polynomial(const DecompositionTable& table, const Basis& basis);

using LengthMap = std::unordered_map<ColoredPerm, long long, ColoredPermHash>;

// Geodesic word lengths from the identity in the right Cayley graph with the
// generator list taken verbatim (callers pass S u S^-1 themselves when
// needed). Errors if some group element is unreached, naming a witness.
LengthMap bfs_length(const std::vector<ColoredPerm>& group,
                     const std::vector<ColoredPerm>& generators);

QPolynomial poincare_polynomial(const std::vector<ColoredPerm>& group,
                                const std::vector<ColoredPerm>& generators);

// Hilb_{r,p,n}(q) = [r]_q [2r]_q ... [(n-1)r]_q [nr/p]_q.
QPolynomial hilbert_polynomial(const GroupSpec& spec);

} // namespace ogs
