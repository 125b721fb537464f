#include "ogs/basis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ogs/errors.hpp"
#include "ogs/verify.hpp"

namespace ogs {

namespace {

// t_i = s_i s_{i-1} ... s_1 = (i+1, i, ..., 1) in one-line notation.
std::vector<int> t_perm(int i, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  if (i >= 1) {
    p[0] = i + 1;
    for (int j = 1; j <= i; ++j) p[j] = j;
  }
  return p;
}

ColoredPerm make_element(std::vector<int> colors, int i, int n, int r) {
  return ColoredPerm(std::move(colors), t_perm(i, n), r);
}

} // namespace

BigInt Basis::span_size() const {
  BigInt s = 1;
  for (long long m : moduli) s *= m;
  return s;
}

int sign_residue(int x, int m) {
  int v = x % m;
  return v < 0 ? v + m : v;
}

std::optional<int> select_alpha(const GroupSpec& spec) {
  const int rp = spec.r_over_p();
  for (int a = 0; a < rp; ++a) {
    const int arg = sign_residue((spec.n() - 1) * a * spec.p() - spec.n(), rp);
    if (std::gcd(rp, arg) == 1) return a;
  }
  return std::nullopt;
}

Basis sn_basis(int n) {
  if (n < 1) throw invalid_argument_error("sn_basis requires n >= 1");
  Basis b;
  b.n = n;
  b.r = 1;
  b.p = 1;
  b.family = BasisFamily::T;
  b.perfect = true;
  b.label = "t(n=" + std::to_string(n) + ")";
  for (int i = n - 1; i >= 1; --i) {
    b.elements.push_back(make_element(std::vector<int>(n, 0), i, n, 1));
    b.moduli.push_back(i + 1);
  }
  return b;
}

Basis wreath_basis(int r, int n) {
  if (r < 1 || n < 1) throw invalid_argument_error("wreath_basis requires r, n >= 1");
  Basis b;
  b.n = n;
  b.r = r;
  b.p = 1;
  b.family = BasisFamily::Tau;
  b.perfect = true;
  b.label = "tau(r=" + std::to_string(r) + ",n=" + std::to_string(n) + ")";
  for (int i = n - 1; i >= 0; --i) {
    std::vector<int> colors(n, 0);
    colors[0] = 1 % r;
    b.elements.push_back(make_element(std::move(colors), i, n, r));
    b.moduli.push_back(static_cast<long long>(r) * (i + 1));
  }
  return b;
}

Basis rpn_basis(const GroupSpec& spec, RpnVariant variant, std::optional<int> forced_alpha) {
  const int r = spec.r(), p = spec.p(), n = spec.n();
  const int rp = spec.r_over_p();
  if (spec.gcd_flag() != 1)
    throw invalid_argument_error("u-basis requires gcd(n,p,r/p) = 1, got gcd = " +
                                 std::to_string(spec.gcd_flag()));
  if (variant.kind == RpnVariant::Zero && r != p)
    throw invalid_argument_error("zero variant requires r = p");
  if (variant.kind == RpnVariant::Beta &&
      std::gcd(sign_residue(variant.beta, rp), rp) != 1)
    throw invalid_argument_error("beta variant requires gcd(beta, r/p) = 1");

  int alpha;
  if (forced_alpha) {
    alpha = *forced_alpha;
    if (alpha < 0 || alpha >= rp ||
        std::gcd(rp, sign_residue((n - 1) * alpha * p - n, rp)) != 1)
      throw invalid_argument_error("alpha=" + std::to_string(alpha) +
                                   " violates gcd(r/p, (n-1)*alpha*p - n) = 1");
  } else {
    auto a = select_alpha(spec);
    if (!a) throw internal_fault("no alpha despite gcd(n,p,r/p)=1");
    alpha = *a;
  }

  Basis b;
  b.n = n;
  b.r = r;
  b.p = p;
  b.alpha = alpha;
  b.family = BasisFamily::U;
  b.perfect = true;
  std::ostringstream label;
  label << "u(r=" << r << ",p=" << p << ",n=" << n << ";alpha=" << alpha;
  if (variant.kind == RpnVariant::Beta) {
    b.beta = variant.beta;
    b.variant = "beta";
    label << ";beta=" << variant.beta;
  } else if (variant.kind == RpnVariant::Zero) {
    b.variant = "zero";
    label << ";zero";
  }
  label << ")";
  b.label = label.str();

  if (n == 1) {
    // Degenerate single generator ((p mod r); id) of order r/p.
    b.elements.push_back(ColoredPerm({p % r}, {1}, r));
    b.moduli.push_back(rp);
    return b;
  }

  std::vector<int> cn(n, 0);
  if (variant.kind != RpnVariant::Zero) {
    const int beta = variant.kind == RpnVariant::Beta ? variant.beta : 1;
    cn[0] = 1 % r;
    cn[n - 1] = sign_residue(beta * p - 1, r);
  }
  b.elements.push_back(make_element(std::move(cn), n - 1, n, r));
  b.moduli.push_back(static_cast<long long>(n) * rp);

  for (int i = n - 2; i >= 0; --i) {
    std::vector<int> c(n, 0);
    c[0] = 1 % r;
    c[n - 1] = sign_residue(alpha * p - 1, r);
    b.elements.push_back(make_element(std::move(c), i, n, r));
    b.moduli.push_back(static_cast<long long>(r) * (i + 1));
  }
  return b;
}

Basis weyl_basis(WeylType type, int n) {
  if (type == WeylType::B) {
    if (n < 1) throw invalid_argument_error("weyl_basis(B) requires n >= 1");
    Basis b;
    b.n = n;
    b.r = 2;
    b.p = 1;
    b.family = BasisFamily::Generic;
    b.perfect = true;
    b.label = "weyl-B(n=" + std::to_string(n) + ")";
    for (int i = n; i >= 1; --i) {
      std::vector<int> colors(n, 0);
      colors[i - 1] = 1;
      b.elements.push_back(make_element(std::move(colors), i - 1, n, 2));
      b.moduli.push_back(2LL * i);
    }
    return b;
  }
  if (n < 2) throw invalid_argument_error("weyl_basis(A/D) requires n >= 2");
  if (type == WeylType::A) {
    Basis b = sn_basis(n);
    b.label = "weyl-A(n=" + std::to_string(n) + ")";
    return b;
  }
  Basis b;
  b.n = n;
  b.r = 2;
  b.p = 2;
  b.family = BasisFamily::Generic;
  b.perfect = true;
  b.label = "weyl-D(n=" + std::to_string(n) + ")";
  b.elements.push_back(make_element(std::vector<int>(n, 0), n - 1, n, 2));
  b.moduli.push_back(n);
  for (int i = n - 1; i >= 1; --i) {
    std::vector<int> colors(n, 0);
    colors[i - 1] = 1;
    colors[n - 1] = (colors[n - 1] + 1) % 2; // delta_i colors letters i and n
    b.elements.push_back(make_element(std::move(colors), i - 1, n, 2));
    b.moduli.push_back(2LL * i);
  }
  return b;
}

Basis bplus_basis(int n) {
  if (n < 2) throw invalid_argument_error("bplus_basis requires n >= 2");
  const Basis d = weyl_basis(WeylType::D, n);
  Basis b;
  b.n = n;
  b.r = 2;
  b.p = 1;
  b.family = BasisFamily::Generic;
  b.perfect = (n % 2 == 1);
  b.label = "bplus(n=" + std::to_string(n) + ")";
  b.moduli = d.moduli;
  for (const auto& delta : d.elements) b.elements.push_back(psi(delta));
  return b;
}

const ExponentVector& DecompositionTable::at(const ColoredPerm& g) const {
  auto it = entries.find(g);
  if (it == entries.end())
    throw invalid_argument_error("element " + format_element(g) + " is not in the basis span");
  return it->second;
}

std::string FailureWitness::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Collision: {
      os << "collision: exponents (";
      for (std::size_t i = 0; i < first.size(); ++i) os << (i ? "," : "") << first[i];
      os << ") and (";
      for (std::size_t i = 0; i < second.size(); ++i) os << (i ? "," : "") << second[i];
      os << ") both yield " << format_element(element);
      break;
    }
    case OutsideGroup:
      os << "product " << format_element(element) << " lies outside the target group";
      break;
    case CountMismatch:
      os << "product count " << products.str() << " != group order " << group_size.str();
      break;
  }
  return os.str();
}

namespace {

// Runs fn(ks, product) over every exponent tuple of the basis in odometer
// order (rightmost digit fastest); returns false if fn asked to stop.
template <typename Fn>
bool for_each_product(const Basis& basis, Fn&& fn) {
  const std::size_t L = basis.elements.size();
  const ColoredPerm id = ColoredPerm::identity(basis.n, basis.r);
  if (L == 0) {
    ExponentVector empty;
    return fn(empty, id);
  }
  std::vector<std::vector<ColoredPerm>> powers(L);
  for (std::size_t i = 0; i < L; ++i) {
    powers[i].reserve(basis.moduli[i]);
    powers[i].push_back(id);
    for (long long k = 1; k < basis.moduli[i]; ++k)
      powers[i].push_back(compose(powers[i].back(), basis.elements[i]));
  }
  ExponentVector ks(L, 0);
  std::vector<ColoredPerm> prefix(L + 1, id);
  std::size_t dirty = 0; // prefixes at indices > dirty are stale
  for (;;) {
    for (std::size_t i = dirty; i < L; ++i)
      prefix[i + 1] = compose(prefix[i], powers[i][ks[i]]);
    if (!fn(ks, prefix[L])) return false;
    std::size_t j = L;
    while (j > 0 && ks[j - 1] + 1 == basis.moduli[j - 1]) ks[--j] = 0;
    if (j == 0) return true;
    ++ks[j - 1];
    dirty = j - 1;
  }
}

} // namespace

ValidationResult validate_basis(const Basis& basis, const std::vector<ColoredPerm>& group,
                                std::uint64_t ceiling) {
  if (basis.span_size() > ceiling)
    throw size_limit_error("basis span " + basis.span_size().str() +
                           " exceeds ceiling " + std::to_string(ceiling));
  if (basis.span_size() != group.size()) {
    FailureWitness w;
    w.kind = FailureWitness::CountMismatch;
    w.products = basis.span_size();
    w.group_size = group.size();
    return w;
  }
  std::unordered_set<ColoredPerm, ColoredPermHash> group_set(group.begin(), group.end());
  DecompositionTable table;
  table.entries.reserve(group.size());
  std::optional<FailureWitness> witness;
  for_each_product(basis, [&](const ExponentVector& ks, const ColoredPerm& g) {
    if (!group_set.count(g)) {
      FailureWitness w;
      w.kind = FailureWitness::OutsideGroup;
      w.element = g;
      w.second = ks;
      witness = std::move(w);
      return false;
    }
    auto [it, inserted] = table.entries.emplace(g, ks);
    if (!inserted) {
      FailureWitness w;
      w.kind = FailureWitness::Collision;
      w.first = it->second;
      w.second = ks;
      w.element = g;
      witness = std::move(w);
      return false;
    }
    return true;
  });
  if (witness) return *witness;
  return table;
}

ColoredPerm compose_from_exponents(const Basis& basis, const ExponentVector& ks) {
  if (ks.size() != basis.elements.size())
    throw invalid_argument_error("exponent vector length mismatch");
  ColoredPerm g = ColoredPerm::identity(basis.n, basis.r);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 0 || ks[i] >= basis.moduli[i])
      throw invalid_argument_error("exponent " + std::to_string(ks[i]) +
                                   " out of range [0," + std::to_string(basis.moduli[i]) + ")");
    g = compose(g, power(basis.elements[i], ks[i]));
  }
  return g;
}

ExponentVector decompose_table(const ColoredPerm& g, const Basis& basis) {
  std::optional<ExponentVector> result;
  for_each_product(basis, [&](const ExponentVector& ks, const ColoredPerm& h) {
    if (h == g) {
      result = ks;
      return false;
    }
    return true;
  });
  if (!result)
    throw invalid_argument_error("element " + format_element(g) + " is not in the basis span");
  return *result;
}

ExponentVector decompose_peel(const ColoredPerm& g, const Basis& basis) {
  if (basis.family == BasisFamily::Generic)
    throw invalid_argument_error("peel decomposition is only defined for t/tau/u bases");
  if (g.degree() != basis.n || g.color_modulus() != basis.r)
    throw invalid_argument_error("element does not match basis parameters");

  const std::size_t L = basis.elements.size();
  if (L == 0) {
    if (!g.is_identity())
      throw invalid_argument_error("element is not in the trivial basis span");
    return {};
  }

  const int n = basis.n, r = basis.r;
  const int coeff = sign_residue(basis.alpha * basis.p - 1, r);

  // Membership in the subgroup generated by the elements after level j:
  // top letter newly fixed there, with color 0 (u-family level 0 instead
  // uses the color relation of the subgroup H).
  auto member_after = [&](std::size_t j, const ColoredPerm& h) {
    if (basis.family == BasisFamily::U) {
      if (j == 0 && n > 1) {
        if (h.image(n) != n) return false;
        const int rest = sign_residue(h.color_sum() - h.color_of(n), r);
        return h.color_of(n) == coeff * rest % r;
      }
      if (n == 1) return h.is_identity();
      const int letter = n - static_cast<int>(j);
      return h.image(letter) == letter && h.color_of(letter) == 0;
    }
    // T (r = 1, leading element t_{n-1}) and Tau (leading tau_{n-1})
    const int letter = n - static_cast<int>(j);
    return h.image(letter) == letter && h.color_of(letter) == 0;
  };

  ExponentVector ks;
  ks.reserve(L);
  ColoredPerm h = g;
  for (std::size_t j = 0; j < L; ++j) {
    const ColoredPerm ainv = inverse(basis.elements[j]);
    bool found = false;
    for (long long k = 0; k < basis.moduli[j]; ++k) {
      if (member_after(j, h)) {
        ks.push_back(k);
        found = true;
        break;
      }
      h = compose(ainv, h);
    }
    if (!found)
      throw invalid_argument_error("element " + format_element(g) +
                                   " is not in the basis span");
  }
  if (!h.is_identity())
    throw internal_fault("peel terminated on a non-identity remainder");
  return ks;
}

} // namespace ogs
