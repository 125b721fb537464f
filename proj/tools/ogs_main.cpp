// ogs: construct, validate, and exploit perfect bases (ordered generating
// systems) for the complex reflection groups G(r,p,n) and their relatives.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogs/basis.hpp"
#include "ogs/colored_perm.hpp"
#include "ogs/errors.hpp"
#include "ogs/group.hpp"
#include "ogs/qpoly.hpp"
#include "ogs/search.hpp"
#include "ogs/stats.hpp"
#include "ogs/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidParameters = 2;
constexpr int kExitInternalFault = 3;

struct Options {
  std::optional<int> r, p, n;
  std::string family;
  std::optional<int> alpha;
  std::optional<int> beta;
  bool zero = false;
  std::string format = "text";
  std::string method = "auto";
  std::string theta_reading = "prose";
  std::uint64_t max_order = 1'000'000;
  double time_limit = 60.0;
  int workers = 1;
  std::uint64_t max_candidates = 0;
  bool verbose = false;
  int max_r = 12, max_n = 6;
  std::string which;
  std::string element_text;
};

void add_group_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--r", opt.r, "color modulus r");
  cmd->add_option("--p", opt.p, "index p (divides r)");
  cmd->add_option("--n", opt.n, "degree n");
  cmd->add_option("--family", opt.family, "basis family: A, B, D, Bplus, tau");
  cmd->add_option("--alpha", opt.alpha, "force the u-basis color parameter alpha");
  cmd->add_option("--beta", opt.beta, "u-basis Remark-beta variant");
  cmd->add_flag("--zero", opt.zero, "u-basis zero variant (requires r = p)");
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-order", opt.max_order, "group size ceiling");
  cmd->add_option("--time-limit", opt.time_limit, "time limit in seconds");
  cmd->add_option("--workers", opt.workers, "worker threads for search");
  cmd->add_flag("--verbose", opt.verbose, "include timings in output");
}

ogs::GroupSpec spec_from(const Options& opt) {
  if (!opt.r || !opt.n)
    throw ogs::invalid_argument_error("--r and --n are required (with optional --p)");
  return ogs::GroupSpec(*opt.r, opt.p.value_or(1), *opt.n);
}

int need_n(const Options& opt) {
  if (!opt.n) throw ogs::invalid_argument_error("--n is required");
  return *opt.n;
}

// Basis plus the group it presents and, when meaningful, its spec.
struct BasisContext {
  ogs::Basis basis;
  std::vector<ogs::ColoredPerm> group;
  std::optional<ogs::GroupSpec> spec;
};

BasisContext make_basis(const Options& opt) {
  BasisContext ctx;
  if (!opt.family.empty()) {
    const int n = need_n(opt);
    if (opt.family == "A") {
      ctx.basis = n == 1 ? ogs::sn_basis(1) : ogs::weyl_basis(ogs::WeylType::A, n);
      ctx.spec = ogs::GroupSpec(1, 1, n);
    } else if (opt.family == "B") {
      ctx.basis = ogs::weyl_basis(ogs::WeylType::B, n);
      ctx.spec = ogs::GroupSpec(2, 1, n);
    } else if (opt.family == "D") {
      ctx.basis = ogs::weyl_basis(ogs::WeylType::D, n);
      ctx.spec = ogs::GroupSpec(2, 2, n);
    } else if (opt.family == "Bplus") {
      ctx.basis = ogs::bplus_basis(n);
      ctx.group = ogs::bn_plus_group(n);
      return ctx;
    } else if (opt.family == "tau") {
      if (!opt.r) throw ogs::invalid_argument_error("--family tau requires --r");
      ctx.basis = ogs::wreath_basis(*opt.r, n);
      ctx.spec = ogs::GroupSpec(*opt.r, 1, n);
    } else {
      throw ogs::invalid_argument_error("unknown family '" + opt.family +
                                        "' (expected A, B, D, Bplus, or tau)");
    }
    ctx.group = ogs::enumerate_group(*ctx.spec, opt.max_order);
    return ctx;
  }
  const ogs::GroupSpec spec = spec_from(opt);
  ogs::RpnVariant variant = ogs::RpnVariant::standard();
  if (opt.zero && opt.beta)
    throw ogs::invalid_argument_error("--zero and --beta are mutually exclusive");
  if (opt.zero) variant = ogs::RpnVariant::zero();
  if (opt.beta) variant = ogs::RpnVariant::with_beta(*opt.beta);
  ctx.basis = ogs::rpn_basis(spec, variant, opt.alpha);
  ctx.spec = spec;
  ctx.group = ogs::enumerate_group(spec, opt.max_order);
  return ctx;
}

std::vector<ogs::ColoredPerm> family_generators(const std::string& family, int n) {
  if (family == "A") return ogs::coxeter_generators_a(n);
  if (family == "B") return ogs::coxeter_generators_b(n);
  if (family == "D") return ogs::coxeter_generators_d(n);
  if (family == "Bplus") {
    auto gens = ogs::bn_plus_generators(n);
    auto with_inv = gens;
    for (const auto& g : gens) {
      auto gi = ogs::inverse(g);
      if (std::find(with_inv.begin(), with_inv.end(), gi) == with_inv.end())
        with_inv.push_back(gi);
    }
    return with_inv;
  }
  throw ogs::invalid_argument_error("no generating set defined for family '" + family + "'");
}

json basis_json(const ogs::Basis& b, const std::optional<ogs::BigInt>& group_order,
                bool distinct_ok) {
  json j;
  j["schema"] = 1;
  j["kind"] = "basis";
  j["label"] = b.label;
  j["r"] = b.r;
  j["p"] = b.p;
  j["n"] = b.n;
  j["alpha"] = b.alpha;
  if (b.beta) j["beta"] = *b.beta;
  j["variant"] = b.variant;
  j["moduli"] = b.moduli;
  std::vector<std::string> elems;
  for (const auto& e : b.elements) elems.push_back(ogs::format_element(e));
  j["elements"] = elems;
  j["perfect"] = b.perfect;
  if (group_order) j["group_order"] = group_order->str();
  j["distinct_products"] = distinct_ok;
  return j;
}

json poly_json(const ogs::QPolynomial& p, const std::string& which) {
  json j;
  j["schema"] = 1;
  j["kind"] = "series";
  j["series"] = which;
  std::vector<std::string> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  j["text"] = p.to_string();
  return j;
}

json report_json(const ogs::VerificationReport& rep, bool verbose) {
  json j;
  j["property"] = rep.property;
  j["group"] = rep.group;
  j["holds"] = rep.holds;
  j["witness"] = rep.witness;
  j["size"] = rep.size;
  if (verbose) j["elapsed_s"] = rep.elapsed_s;
  return j;
}

void print_report(const ogs::VerificationReport& rep, bool verbose) {
  std::cout << "property: " << rep.property << "\n"
            << "group: " << rep.group << "\n"
            << "result: " << (rep.holds ? "HOLDS" : "FAILS") << "\n";
  if (!rep.witness.empty()) std::cout << "witness: " << rep.witness << "\n";
  if (verbose) std::cout << "elapsed: " << rep.elapsed_s << " s\n";
  std::cout << "\n";
}

int cmd_basis(const Options& opt) {
  BasisContext ctx = make_basis(opt);
  auto validation = ogs::validate_basis(ctx.basis, ctx.group, opt.max_order);
  const bool ok = std::holds_alternative<ogs::DecompositionTable>(validation);

  if (opt.format == "json") {
    json j = basis_json(ctx.basis, ogs::BigInt(ctx.group.size()), ok);
    if (!ok) j["witness"] = std::get<ogs::FailureWitness>(validation).describe();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "label: " << ctx.basis.label << "\n";
    std::cout << "elements:";
    for (const auto& e : ctx.basis.elements) std::cout << ' ' << ogs::format_element(e);
    std::cout << "\nmoduli:";
    for (auto m : ctx.basis.moduli) std::cout << ' ' << m;
    std::cout << "\n";
    if (ctx.basis.family == ogs::BasisFamily::U) {
      std::cout << "alpha: " << ctx.basis.alpha << "\n";
      if (ctx.basis.beta) std::cout << "beta: " << *ctx.basis.beta << "\n";
      std::cout << "variant: " << ctx.basis.variant << "\n";
    }
    std::cout << "perfect: " << (ctx.basis.perfect ? "true" : "false") << "\n";
    if (ok) {
      std::cout << "DISTINCT-PRODUCTS: OK (" << ctx.group.size() << " products, group order "
                << ctx.group.size() << ")\n";
    } else {
      std::cout << "DISTINCT-PRODUCTS: FAIL ("
                << std::get<ogs::FailureWitness>(validation).describe() << ")\n";
    }
  }
  return ok ? kExitOk : kExitInternalFault;
}

ogs::ExponentVector decompose_with_method(const ogs::ColoredPerm& g, const ogs::Basis& basis,
                                          const std::string& method) {
  if (method == "table") return ogs::decompose_table(g, basis);
  if (method == "peel") return ogs::decompose_peel(g, basis);
  if (method == "auto")
    return basis.family == ogs::BasisFamily::Generic ? ogs::decompose_table(g, basis)
                                                     : ogs::decompose_peel(g, basis);
  throw ogs::invalid_argument_error("unknown method '" + method + "'");
}

int cmd_decompose(const Options& opt, bool fmaj_only) {
  BasisContext ctx = make_basis(opt);
  const ogs::ColoredPerm g = ogs::parse_element(opt.element_text, ctx.basis.r);
  const auto ks = decompose_with_method(g, ctx.basis, opt.method);
  const long long fm = ogs::fmaj(ks);

  if (opt.format == "json") {
    json j;
    j["schema"] = 1;
    j["kind"] = fmaj_only ? "fmaj" : "decompose";
    j["basis"] = ctx.basis.label;
    j["element"] = ogs::format_element(g);
    if (!fmaj_only) j["exponents"] = ks;
    j["fmaj"] = fm;
    std::cout << j.dump() << "\n";
  } else if (fmaj_only) {
    std::cout << fm << "\n";
  } else {
    std::cout << "element: " << ogs::format_element(g) << "\n";
    std::cout << "exponents:";
    for (auto k : ks) std::cout << ' ' << k;
    std::cout << "\nfmaj: " << fm << "\n";
  }
  return kExitOk;
}

int cmd_series(const Options& opt) {
  ogs::QPolynomial poly;
  if (opt.which == "hilbert") {
    poly = ogs::hilbert_polynomial(spec_from(opt));
  } else if (opt.which == "fmaj") {
    BasisContext ctx = make_basis(opt);
    poly = ogs::fmaj_polynomial(ctx.basis, ctx.group);
  } else if (opt.which == "poincare") {
    if (opt.family.empty())
      throw ogs::invalid_argument_error(
          "series poincare needs --family (a spec-defined generating set)");
    const int n = need_n(opt);
    BasisContext ctx = make_basis(opt);
    poly = ogs::poincare_polynomial(ctx.group, family_generators(opt.family, n));
  } else {
    throw ogs::invalid_argument_error("series expects fmaj, poincare, or hilbert");
  }
  if (opt.format == "json")
    std::cout << poly_json(poly, opt.which).dump() << "\n";
  else
    std::cout << poly.to_string() << "\n";
  return kExitOk;
}

std::vector<ogs::VerificationReport> run_verifications(const Options& opt) {
  std::vector<ogs::VerificationReport> reports;
  const ogs::ThetaReading reading = opt.theta_reading == "display"
                                        ? ogs::ThetaReading::Display
                                        : ogs::ThetaReading::Prose;
  auto mahonian_for = [&](const std::string& family, int n) {
    Options o = opt;
    o.family = family;
    BasisContext ctx = make_basis(o);
    return ogs::is_mahonian(ctx.basis, ctx.group, family_generators(family, n));
  };
  auto hilbertian_here = [&]() {
    BasisContext ctx = make_basis(opt);
    if (!ctx.spec)
      throw ogs::invalid_argument_error("hilbertian check needs a G(r,p,n) basis");
    return ogs::is_hilbertian(ctx.basis, *ctx.spec);
  };

  if (opt.which == "mahonian") {
    if (opt.family.empty())
      throw ogs::invalid_argument_error("verify mahonian needs --family");
    reports.push_back(mahonian_for(opt.family, need_n(opt)));
  } else if (opt.which == "hilbertian") {
    reports.push_back(hilbertian_here());
  } else if (opt.which == "psi-theta") {
    const int n = need_n(opt);
    reports.push_back(ogs::check_psi_bijection(n));
    reports.push_back(ogs::check_fmaj_psi_invariance(n));
    reports.push_back(ogs::check_theta_bijection(n, reading));
    reports.push_back(ogs::check_theta_length_invariance(n, reading));
  } else if (opt.which == "parity") {
    reports.push_back(ogs::parity_criterion(need_n(opt)));
  } else if (opt.which == "all") {
    const int n = need_n(opt);
    reports.push_back(ogs::check_bn_plus_relations(n));
    for (const std::string family : {"A", "B", "D", "Bplus"})
      reports.push_back(mahonian_for(family, n));
    for (const auto& [r, p] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
      ogs::GroupSpec spec(r, p, n);
      reports.push_back(ogs::is_hilbertian(ogs::rpn_basis(spec), spec));
    }
    reports.push_back(ogs::check_psi_bijection(n));
    reports.push_back(ogs::check_fmaj_psi_invariance(n));
    reports.push_back(ogs::check_theta_bijection(n, reading));
    reports.push_back(ogs::check_theta_length_invariance(n, reading));
    reports.push_back(ogs::parity_criterion(n));
  } else {
    throw ogs::invalid_argument_error(
        "verify expects mahonian, hilbertian, psi-theta, parity, or all");
  }
  return reports;
}

int cmd_verify(const Options& opt) {
  const auto reports = run_verifications(opt);
  bool all_hold = true;
  if (opt.format == "json") {
    json j;
    j["schema"] = 1;
    j["kind"] = "verification";
    j["reports"] = json::array();
    for (const auto& rep : reports) {
      j["reports"].push_back(report_json(rep, opt.verbose));
      all_hold = all_hold && rep.holds;
    }
    j["all_hold"] = all_hold;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& rep : reports) {
      print_report(rep, opt.verbose);
      all_hold = all_hold && rep.holds;
    }
    std::cout << (all_hold ? "ALL HOLD" : "FAILURES PRESENT") << "\n";
  }
  return all_hold ? kExitOk : kExitVerificationFailed;
}

int cmd_search(const Options& opt) {
  const ogs::GroupSpec spec = spec_from(opt);
  ogs::SearchLimits limits;
  limits.workers = opt.workers;
  limits.time_limit_s = opt.time_limit;
  limits.max_candidates = opt.max_candidates;
  limits.group_ceiling = std::min<std::uint64_t>(opt.max_order, limits.group_ceiling);
  const ogs::SearchOutcome outcome = ogs::search_perfect_hilbertian(spec, limits);

  if (opt.format == "json") {
    json j;
    j["schema"] = 1;
    j["kind"] = "search";
    j["r"] = spec.r();
    j["p"] = spec.p();
    j["n"] = spec.n();
    j["orders"] = outcome.order_multiset;
    j["orderings"] = outcome.orderings;
    j["candidates_examined"] = outcome.candidates_examined;
    j["exhausted"] = outcome.exhausted;
    if (outcome.found) {
      std::vector<std::string> elems;
      for (const auto& e : outcome.found->elements) elems.push_back(ogs::format_element(e));
      j["found"] = {{"elements", elems}, {"moduli", outcome.found->moduli}};
    } else {
      j["found"] = nullptr;
    }
    if (opt.verbose) j["elapsed_s"] = outcome.elapsed_s;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "spec: G(" << spec.r() << "," << spec.p() << "," << spec.n() << ")\n";
    std::cout << "required orders:";
    for (auto m : outcome.order_multiset) std::cout << ' ' << m;
    std::cout << "\norderings: " << outcome.orderings.size() << "\n";
    std::cout << "candidates examined: " << outcome.candidates_examined << "\n";
    std::cout << "exhausted: " << (outcome.exhausted ? "true" : "false") << "\n";
    if (outcome.found) {
      std::cout << "found:";
      for (const auto& e : outcome.found->elements) std::cout << ' ' << ogs::format_element(e);
      std::cout << "\nmoduli:";
      for (auto m : outcome.found->moduli) std::cout << ' ' << m;
      std::cout << "\n";
    } else {
      std::cout << "found: none\n";
    }
    if (opt.verbose) std::cout << "elapsed: " << outcome.elapsed_s << " s\n";
  }
  return kExitOk;
}

int cmd_alpha_scan(const Options& opt) {
  const auto rows = ogs::alpha_scan(opt.max_r, opt.max_n);
  int violations = 0;
  for (const auto& row : rows)
    if (row.gcd_flag == 1 && !row.alpha) ++violations;

  if (opt.format == "json") {
    json j;
    j["schema"] = 1;
    j["kind"] = "alpha-scan";
    j["max_r"] = opt.max_r;
    j["max_n"] = opt.max_n;
    j["rows"] = json::array();
    for (const auto& row : rows) {
      json rj;
      rj["r"] = row.r;
      rj["p"] = row.p;
      rj["n"] = row.n;
      rj["gcd"] = row.gcd_flag;
      if (row.alpha)
        rj["alpha"] = *row.alpha;
      else
        rj["alpha"] = nullptr;
      j["rows"].push_back(rj);
    }
    j["violations"] = violations;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << "r=" << row.r << " p=" << row.p << " n=" << row.n << " gcd=" << row.gcd_flag
                << " alpha=";
      if (row.alpha)
        std::cout << *row.alpha;
      else
        std::cout << "none";
      std::cout << "\n";
    }
    std::cout << "violations: " << violations << "\n";
  }
  return violations == 0 ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect bases (ordered generating systems) for G(r,p,n)"};
  app.require_subcommand(1);
  Options opt;

  auto* basis_cmd = app.add_subcommand("basis", "construct and validate a basis");
  add_group_flags(basis_cmd, opt);
  add_common_flags(basis_cmd, opt);

  auto* decompose_cmd = app.add_subcommand("decompose", "exponents of an element");
  decompose_cmd->add_option("element", opt.element_text, "element text")->required();
  decompose_cmd->add_option("--method", opt.method, "table, peel, or auto")
      ->check(CLI::IsMember({"table", "peel", "auto"}));
  add_group_flags(decompose_cmd, opt);
  add_common_flags(decompose_cmd, opt);

  auto* fmaj_cmd = app.add_subcommand("fmaj", "flag major index of an element");
  fmaj_cmd->add_option("element", opt.element_text, "element text")->required();
  fmaj_cmd->add_option("--method", opt.method, "table, peel, or auto")
      ->check(CLI::IsMember({"table", "peel", "auto"}));
  add_group_flags(fmaj_cmd, opt);
  add_common_flags(fmaj_cmd, opt);

  auto* series_cmd = app.add_subcommand("series", "fmaj / poincare / hilbert polynomial");
  series_cmd->add_option("which", opt.which, "fmaj, poincare, or hilbert")->required();
  add_group_flags(series_cmd, opt);
  add_common_flags(series_cmd, opt);

  auto* verify_cmd = app.add_subcommand("verify", "run property checkers");
  verify_cmd->add_option("which", opt.which, "mahonian, hilbertian, psi-theta, parity, all")
      ->required();
  verify_cmd->add_option("--theta-reading", opt.theta_reading, "prose or display")
      ->check(CLI::IsMember({"prose", "display"}));
  add_group_flags(verify_cmd, opt);
  add_common_flags(verify_cmd, opt);

  auto* search_cmd = app.add_subcommand("search", "exhaustive perfect-Hilbertian-basis search");
  search_cmd->add_option("--max-candidates", opt.max_candidates, "candidate cap (0 = none)");
  add_group_flags(search_cmd, opt);
  add_common_flags(search_cmd, opt);

  auto* scan_cmd = app.add_subcommand("alpha-scan", "alpha existence scan over (r,p,n)");
  scan_cmd->add_option("--max-r", opt.max_r, "largest r");
  scan_cmd->add_option("--max-n", opt.max_n, "largest n");
  add_common_flags(scan_cmd, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (basis_cmd->parsed()) return cmd_basis(opt);
    if (decompose_cmd->parsed()) return cmd_decompose(opt, false);
    if (fmaj_cmd->parsed()) return cmd_decompose(opt, true);
    if (series_cmd->parsed()) return cmd_series(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (search_cmd->parsed()) return cmd_search(opt);
    if (scan_cmd->parsed()) return cmd_alpha_scan(opt);
  } catch (const ogs::internal_fault& e) {
    std::cerr << "internal fault: " << e.what() << "\n";
    return kExitInternalFault;
  } catch (const ogs::invalid_argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParameters;
  } catch (const ogs::size_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidParameters;
  }
  return kExitOk;
}
