#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("OGS_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "OGS_CLI must point at the ogs binary");
  const std::string cmd = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

} // namespace

TEST_CASE("basis command validates the u-basis of G(4,2,3)") {
  const auto res = run_cli("basis --r 4 --p 2 --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("alpha: 0") != std::string::npos);
  CHECK(res.output.find("moduli: 6 8 4") != std::string::npos);
  CHECK(res.output.find("DISTINCT-PRODUCTS: OK (192 products") != std::string::npos);
}

TEST_CASE("basis command for family D") {
  const auto res = run_cli("basis --family D --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("DISTINCT-PRODUCTS: OK (24 products") != std::string::npos);
}

TEST_CASE("gcd violation exits 2 and cites the condition") {
  const auto res = run_cli("basis --r 4 --p 2 --n 2");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("gcd(n,p,r/p)") != std::string::npos);
}

TEST_CASE("decompose [3,2,1] in the S_3 t-basis") {
  const auto res = run_cli("decompose \"[3,2,1]\" --family A --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("exponents: 2 1") != std::string::npos);
  CHECK(res.output.find("fmaj: 3") != std::string::npos);
}

TEST_CASE("decompose identity yields zeros") {
  const auto res = run_cli("decompose \"c=[0,0,0];w=[1,2,3]\" --r 4 --p 2 --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("exponents: 0 0 0") != std::string::npos);
  CHECK(res.output.find("fmaj: 0") != std::string::npos);
}

TEST_CASE("peel and table methods give identical output") {
  const std::string tail = " --r 6 --p 2 --n 3";
  const auto peel = run_cli("decompose \"c=[3,1,2];w=[2,3,1]\" --method peel" + tail);
  const auto table = run_cli("decompose \"c=[3,1,2];w=[2,3,1]\" --method table" + tail);
  CHECK(peel.exit_code == 0);
  CHECK(peel.output == table.output);
}

TEST_CASE("fmaj command prints the bare statistic") {
  const auto res = run_cli("fmaj \"[3,2,1]\" --family A --n 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "3\n");
}

TEST_CASE("series hilbert bytes") {
  const auto res = run_cli("series hilbert --r 2 --p 1 --n 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "1 + 2q + 2q^2 + 2q^3 + q^4\n");
}

TEST_CASE("series fmaj of the trivial family-A basis") {
  const auto res = run_cli("series fmaj --family A --n 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "1\n");
}

TEST_CASE("series poincare equals series fmaj for Bplus") {
  const auto poin = run_cli("series poincare --family Bplus --n 3");
  const auto fm = run_cli("series fmaj --family Bplus --n 3");
  CHECK(poin.exit_code == 0);
  CHECK(poin.output == fm.output);
}

TEST_CASE("series poincare without a family is invalid") {
  const auto res = run_cli("series poincare --r 4 --p 2 --n 3");
  CHECK(res.exit_code == 2);
}

TEST_CASE("verify hilbertian holds and verify parity fails honestly") {
  const auto ok = run_cli("verify hilbertian --r 6 --p 2 --n 3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("HOLDS") != std::string::npos);

  const auto parity = run_cli("verify parity --n 3");
  CHECK(parity.exit_code == 1);
  CHECK(parity.output.find("FAILS") != std::string::npos);
  CHECK(parity.output.find("witness") != std::string::npos);
}

TEST_CASE("search JSON output and byte-stable reruns") {
  const auto a = run_cli("search --r 4 --p 2 --n 2 --format json");
  const auto b = run_cli("search --r 4 --p 2 --n 2 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const auto j = nlohmann::json::parse(a.output);
  CHECK(j["schema"] == 1);
  CHECK(j["exhausted"] == true);
  CHECK(j["found"].is_null());
  CHECK(j["orders"] == nlohmann::json::array({4, 4}));
  // round-trip byte identity
  CHECK(j.dump() + "\n" == a.output);
}

TEST_CASE("alpha-scan finds alpha on every gcd=1 cell") {
  const auto res = run_cli("alpha-scan --max-r 12 --max-n 6 --format json");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["violations"] == 0);
  CHECK(j.dump() + "\n" == res.output);
}

TEST_CASE("json basis output round-trips") {
  const auto res = run_cli("basis --r 6 --p 3 --n 2 --format json");
  CHECK(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.output);
  CHECK(j["alpha"] == 1);
  CHECK(j["distinct_products"] == true);
  CHECK(j.dump() + "\n" == res.output);
}

TEST_CASE("identical invocations produce identical bytes") {
  const auto a = run_cli("verify psi-theta --n 3 --format json");
  const auto b = run_cli("verify psi-theta --n 3 --format json");
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
}
