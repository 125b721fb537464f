#include "ogs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ogs/errors.hpp"
#include "ogs/stats.hpp"

namespace ogs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ColoredPerm adjacent_transposition(int i, int n, int r) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[i - 1], perm[i]);
  return ColoredPerm(std::vector<int>(n, 0), std::move(perm), r);
}

ColoredPerm sign_change_first(int n) {
  std::vector<int> colors(n, 0);
  colors[0] = 1;
  return ColoredPerm(std::move(colors), ColoredPerm::identity(n, 2).perm(), 2);
}

ColoredPerm last_letter_flip(int n) {
  std::vector<int> colors(n, 0);
  colors[n - 1] = 1;
  return ColoredPerm(std::move(colors), ColoredPerm::identity(n, 2).perm(), 2);
}

std::string exponents_str(const ExponentVector& ks) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
  os << ')';
  return os.str();
}

DecompositionTable validated_table(const Basis& basis, const std::vector<ColoredPerm>& group) {
  auto result = validate_basis(basis, group);
  if (auto* w = std::get_if<FailureWitness>(&result))
    throw internal_fault("basis " + basis.label + " failed validation: " + w->describe());
  return std::get<DecompositionTable>(std::move(result));
}

} // namespace

std::vector<ColoredPerm> coxeter_generators_a(int n) {
  std::vector<ColoredPerm> gens;
  for (int i = 1; i < n; ++i) gens.push_back(adjacent_transposition(i, n, 1));
  return gens;
}

std::vector<ColoredPerm> coxeter_generators_b(int n) {
  std::vector<ColoredPerm> gens;
  gens.push_back(sign_change_first(n));
  for (int i = 1; i < n; ++i) gens.push_back(adjacent_transposition(i, n, 2));
  return gens;
}

std::vector<ColoredPerm> coxeter_generators_d(int n) {
  if (n < 2) throw invalid_argument_error("D_n requires n >= 2");
  std::vector<int> colors(n, 0);
  colors[0] = colors[1] = 1;
  std::vector<ColoredPerm> gens;
  gens.push_back(ColoredPerm(std::move(colors), adjacent_transposition(1, n, 2).perm(), 2));
  for (int i = 1; i < n; ++i) gens.push_back(adjacent_transposition(i, n, 2));
  return gens;
}

std::vector<ColoredPerm> bn_plus_generators(int n) {
  if (n < 2) throw invalid_argument_error("B_n^+ generators require n >= 2");
  std::vector<ColoredPerm> gens;
  std::vector<int> colors(n, 0);
  colors[0] = 1;
  for (int i = 1; i < n; ++i)
    gens.push_back(ColoredPerm(colors, adjacent_transposition(i, n, 2).perm(), 2));
  return gens;
}

long long b_length(const ColoredPerm& w) {
  const auto win = signed_window(w);
  long long len = 0;
  for (std::size_t i = 0; i < win.size(); ++i) {
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[i] > win[j]) ++len;
    if (win[i] < 0) len -= win[i];
  }
  return len;
}

bool in_bn_plus(const ColoredPerm& w) { return b_length(w) % 2 == 0; }

bool in_dn(const ColoredPerm& w) {
  if (w.color_modulus() != 2)
    throw invalid_argument_error("D_n membership requires r = 2");
  return w.color_sum() % 2 == 0;
}

std::vector<ColoredPerm> bn_plus_group(int n) {
  std::vector<ColoredPerm> out;
  for (const auto& g : enumerate_group(GroupSpec(2, 1, n)))
    if (in_bn_plus(g)) out.push_back(g);
  return out;
}

ColoredPerm psi(const ColoredPerm& w) {
  if (!in_dn(w)) throw invalid_argument_error("psi is defined on D_n");
  if (in_bn_plus(w)) return w;
  return compose(w, last_letter_flip(w.degree()));
}

ColoredPerm theta(const ColoredPerm& w, ThetaReading reading) {
  if (!in_bn_plus(w)) throw invalid_argument_error("theta is defined on B_n^+");
  const bool keep = reading == ThetaReading::Prose ? in_dn(w) : in_bn_plus(w);
  if (keep) return w;
  return compose(w, sign_change_first(w.degree()));
}

VerificationReport check_bn_plus_relations(int n) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = "bn-plus-relations";
  rep.group = "B_" + std::to_string(n) + "^+";
  rep.holds = true;

  const auto R = bn_plus_generators(n);
  auto fail = [&](const std::string& what) {
    rep.holds = false;
    if (rep.witness.empty()) rep.witness = what;
  };
  if (element_order(R[0]) != 4) fail("o(r_1) != 4");
  for (std::size_t i = 1; i < R.size(); ++i)
    if (element_order(R[i]) != 2) fail("o(r_" + std::to_string(i + 1) + ") != 2");
  for (std::size_t i = 0; i + 1 < R.size(); ++i)
    if (!power(compose(R[i], R[i + 1]), 3).is_identity())
      fail("(r_i r_{i+1})^3 != 1 at i=" + std::to_string(i + 1));
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t j = i + 2; j < R.size(); ++j)
      if (!power(compose(R[i], R[j]), 2).is_identity())
        fail("(r_i r_j)^2 != 1 at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

  const auto generated = closure(R);
  auto bplus = bn_plus_group(n);
  rep.size = bplus.size();
  if (generated != bplus) fail("closure(R) != B_n^+");
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

VerificationReport is_mahonian(const Basis& basis, const std::vector<ColoredPerm>& group,
                               const std::vector<ColoredPerm>& generators) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = "mahonian(" + basis.label + ")";
  rep.group = std::to_string(group.size()) + " elements";
  rep.size = group.size();
  const QPolynomial fm = fmaj_polynomial(basis, group);
  const QPolynomial poin = poincare_polynomial(group, generators);
  rep.holds = fm == poin;
  if (!rep.holds)
    rep.witness = "Fmaj = " + fm.to_string() + " vs Poincare = " + poin.to_string();
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

VerificationReport is_hilbertian(const Basis& basis, const GroupSpec& spec) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = "hilbertian(" + basis.label + ")";
  rep.group = "G(" + std::to_string(spec.r()) + "," + std::to_string(spec.p()) + "," +
              std::to_string(spec.n()) + ")";
  const auto group = enumerate_group(spec);
  rep.size = group.size();
  const QPolynomial fm = fmaj_polynomial(basis, group);
  const QPolynomial hilb = hilbert_polynomial(spec);
  rep.holds = fm == hilb;
  if (!rep.holds)
    rep.witness = "Fmaj = " + fm.to_string() + " vs Hilb = " + hilb.to_string();
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

VerificationReport parity_criterion(int n) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = "parity-criterion";
  rep.group = "D_" + std::to_string(n) + " and B_" + std::to_string(n) + "^+";
  rep.holds = true;

  const Basis d = weyl_basis(WeylType::D, n);
  const auto dn = enumerate_group(GroupSpec(2, 2, n));
  const auto d_table = validated_table(d, dn);
  const Basis c = bplus_basis(n);
  const auto bplus = bn_plus_group(n);
  const auto c_table = validated_table(c, bplus);
  rep.size = dn.size() + bplus.size();

  for (const auto& w : dn) {
    const bool even = fmaj(d_table.at(w)) % 2 == 0;
    const bool member = in_dn(w) && in_bn_plus(w);
    if (even != member) {
      rep.holds = false;
      rep.witness = "d-basis: w = " + format_element(w) +
                    ", fmaj = " + std::to_string(fmaj(d_table.at(w))) +
                    ", in D_n cap B_n^+ = " + (member ? "true" : "false");
      break;
    }
  }
  if (rep.holds) {
    for (const auto& w : bplus) {
      const bool even = fmaj(c_table.at(w)) % 2 == 0;
      const bool member = in_dn(w) && in_bn_plus(w);
      if (even != member) {
        rep.holds = false;
        rep.witness = "c-basis: w = " + format_element(w) +
                      ", fmaj = " + std::to_string(fmaj(c_table.at(w))) +
                      ", in D_n cap B_n^+ = " + (member ? "true" : "false");
        break;
      }
    }
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

VerificationReport check_psi_bijection(int n) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = "psi-bijection";
  rep.group = "D_" + std::to_string(n) + " -> B_" + std::to_string(n) + "^+";
  const auto dn = enumerate_group(GroupSpec(2, 2, n));
  const auto bplus = bn_plus_group(n);
  rep.size = dn.size();
  std::unordered_set<ColoredPerm, ColoredPermHash> image;
  for (const auto& w : dn) image.insert(psi(w));
  std::unordered_set<ColoredPerm, ColoredPermHash> target(bplus.begin(), bplus.end());
  rep.holds = image.size() == dn.size() && image == target;
  if (!rep.holds) rep.witness = "image has " + std::to_string(image.size()) + " elements";
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

VerificationReport check_fmaj_psi_invariance(int n) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = "fmaj-psi-invariance";
  rep.group = "D_" + std::to_string(n);
  rep.holds = true;
  const Basis d = weyl_basis(WeylType::D, n);
  const auto dn = enumerate_group(GroupSpec(2, 2, n));
  const auto d_table = validated_table(d, dn);
  const Basis c = bplus_basis(n);
  const auto c_table = validated_table(c, bn_plus_group(n));
  rep.size = dn.size();
  for (const auto& w : dn) {
    const long long lhs = fmaj(d_table.at(w));
    const long long rhs = fmaj(c_table.at(psi(w)));
    if (lhs != rhs) {
      rep.holds = false;
      rep.witness = "w = " + format_element(w) + ": fmaj_d = " + std::to_string(lhs) +
                    ", fmaj_c(psi(w)) = " + std::to_string(rhs) + ", exponents " +
                    exponents_str(d_table.at(w)) + " vs " + exponents_str(c_table.at(psi(w)));
      break;
    }
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

VerificationReport check_theta_bijection(int n, ThetaReading reading) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = reading == ThetaReading::Prose ? "theta-bijection" : "theta-bijection(display)";
  rep.group = "B_" + std::to_string(n) + "^+ -> D_" + std::to_string(n);
  const auto bplus = bn_plus_group(n);
  const auto dn = enumerate_group(GroupSpec(2, 2, n));
  rep.size = bplus.size();
  std::unordered_set<ColoredPerm, ColoredPermHash> image;
  for (const auto& w : bplus) image.insert(theta(w, reading));
  std::unordered_set<ColoredPerm, ColoredPermHash> target(dn.begin(), dn.end());
  rep.holds = image.size() == bplus.size() && image == target;
  if (!rep.holds) rep.witness = "image has " + std::to_string(image.size()) +
                                " elements, |D_n| = " + std::to_string(dn.size());
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

VerificationReport check_theta_length_invariance(int n, ThetaReading reading) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.property = reading == ThetaReading::Prose ? "theta-length-invariance"
                                                : "theta-length-invariance(display)";
  rep.group = "B_" + std::to_string(n) + "^+";
  rep.holds = true;

  auto R = bn_plus_generators(n);
  std::vector<ColoredPerm> r_with_inverses = R;
  for (const auto& g : R) {
    ColoredPerm gi = inverse(g);
    if (std::find(r_with_inverses.begin(), r_with_inverses.end(), gi) == r_with_inverses.end())
      r_with_inverses.push_back(gi);
  }
  const auto bplus = bn_plus_group(n);
  const auto dn = enumerate_group(GroupSpec(2, 2, n));
  rep.size = bplus.size();
  const LengthMap lb = bfs_length(bplus, r_with_inverses);
  const LengthMap ld = bfs_length(dn, coxeter_generators_d(n));
  for (const auto& w : bplus) {
    ColoredPerm image = theta(w, reading);
    auto it = ld.find(image);
    if (it == ld.end()) {
      rep.holds = false;
      rep.witness = "theta(" + format_element(w) + ") lies outside D_n";
      break;
    }
    if (lb.at(w) != it->second) {
      rep.holds = false;
      rep.witness = "w = " + format_element(w) + ": l_{B+} = " + std::to_string(lb.at(w)) +
                    ", l_D(theta(w)) = " + std::to_string(it->second);
      break;
    }
  }
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

} // namespace ogs
