#include "ogs/stats.hpp"

#include <deque>

#include "ogs/errors.hpp"

namespace ogs {

namespace {

void require_plain(const ColoredPerm& pi, const char* what) {
  if (pi.color_modulus() > 1)
    throw invalid_argument_error(std::string(what) + " is defined for plain permutations (r = 1)");
}

} // namespace

std::vector<int> descent_set(const ColoredPerm& pi) {
  require_plain(pi, "descent_set");
  std::vector<int> des;
  for (int i = 1; i < pi.degree(); ++i)
    if (pi.image(i) > pi.image(i + 1)) des.push_back(i);
  return des;
}

long long maj(const ColoredPerm& pi) {
  long long s = 0;
  for (int i : descent_set(pi)) s += i;
  return s;
}

long long inv_length(const ColoredPerm& pi) {
  require_plain(pi, "inv_length");
  long long s = 0;
  for (int i = 1; i <= pi.degree(); ++i)
    for (int j = i + 1; j <= pi.degree(); ++j)
      if (pi.image(i) > pi.image(j)) ++s;
  return s;
}

long long fmaj(const ExponentVector& ks) {
  long long s = 0;
  for (long long k : ks) s += k;
  return s;
}

long long fmaj(const ColoredPerm& g, const Basis& basis) {
  return fmaj(basis.family == BasisFamily::Generic ? decompose_table(g, basis)
                                                   : decompose_peel(g, basis));
}

QPolynomial fmaj_polynomial(const DecompositionTable& table, const Basis& basis) {
  QPolynomial by_sum;
  for (const auto& [g, ks] : table.entries) by_sum.add_term(static_cast<int>(fmaj(ks)));
  const QPolynomial by_product = q_product(basis.moduli);
  if (by_sum != by_product)
    throw internal_fault("fmaj summation disagrees with prod [m_i]_q for " + basis.label);
  return by_sum;
}

QPolynomial fmaj_polynomial(const Basis& basis, const std::vector<ColoredPerm>& group) {
  auto result = validate_basis(basis, group);
  if (auto* witness = std::get_if<FailureWitness>(&result))
    throw internal_fault("fmaj_polynomial on an invalid basis (" + basis.label +
                         "): " + witness->describe());
  return fmaj_polynomial(std::get<DecompositionTable>(result), basis);
}

LengthMap bfs_length(const std::vector<ColoredPerm>& group,
                     const std::vector<ColoredPerm>& generators) {
  if (group.empty()) throw invalid_argument_error("empty group");
  const int n = group.front().degree();
  const int r = group.front().color_modulus();
  LengthMap dist;
  dist.reserve(group.size());
  std::deque<ColoredPerm> frontier;
  ColoredPerm id = ColoredPerm::identity(n, r);
  dist.emplace(id, 0);
  frontier.push_back(id);
  while (!frontier.empty()) {
    ColoredPerm g = std::move(frontier.front());
    frontier.pop_front();
    const long long d = dist.at(g);
    for (const auto& s : generators) {
      ColoredPerm h = compose(g, s);
      if (dist.emplace(h, d + 1).second) frontier.push_back(std::move(h));
    }
  }
  for (const auto& g : group)
    if (!dist.count(g))
      throw invalid_argument_error("generators do not generate the group; unreached: " +
                                   format_element(g));
  if (dist.size() != group.size())
    throw invalid_argument_error("generators reach elements outside the group");
  return dist;
}

QPolynomial poincare_polynomial(const std::vector<ColoredPerm>& group,
                                const std::vector<ColoredPerm>& generators) {
  QPolynomial out;
  const LengthMap dist = bfs_length(group, generators);
  for (const auto& [g, d] : dist) out.add_term(static_cast<int>(d));
  return out;
}

QPolynomial hilbert_polynomial(const GroupSpec& spec) {
  std::vector<long long> ms;
  for (int i = 1; i < spec.n(); ++i) ms.push_back(static_cast<long long>(i) * spec.r());
  ms.push_back(static_cast<long long>(spec.n()) * spec.r_over_p());
  return q_product(ms);
}

} // namespace ogs
