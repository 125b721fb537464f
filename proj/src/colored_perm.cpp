#include "ogs/colored_perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ogs/errors.hpp"

namespace ogs {

namespace {

void check_same_shape(const ColoredPerm& g, const ColoredPerm& h) {
  if (g.degree() != h.degree())
    throw invalid_argument_error("degree mismatch: " + std::to_string(g.degree()) +
                                 " vs " + std::to_string(h.degree()));
  if (g.color_modulus() != h.color_modulus())
    throw invalid_argument_error("color modulus mismatch: " +
                                 std::to_string(g.color_modulus()) + " vs " +
                                 std::to_string(h.color_modulus()));
}

} // namespace

ColoredPerm::ColoredPerm(std::vector<int> colors, std::vector<int> perm, int r)
    : r_(r), colors_(std::move(colors)), perm_(std::move(perm)) {
  if (r_ < 1) throw invalid_argument_error("color modulus must be positive");
  if (colors_.size() != perm_.size())
    throw invalid_argument_error("colors and permutation have different lengths");
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : perm_) {
    if (v < 1 || v > n || seen[v - 1])
      throw invalid_argument_error("not a permutation of {1,...,n}");
    seen[v - 1] = 1;
  }
  for (int c : colors_)
    if (c < 0 || c >= r_)
      throw invalid_argument_error("color out of range [0, r)");
}

ColoredPerm ColoredPerm::identity(int n, int r) {
  if (n < 0 || r < 1) throw invalid_argument_error("bad identity parameters");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  return ColoredPerm(std::vector<int>(n, 0), std::move(perm), r);
}

bool ColoredPerm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (perm_[i] != i + 1 || colors_[i] != 0) return false;
  return true;
}

int ColoredPerm::color_sum() const {
  return std::accumulate(colors_.begin(), colors_.end(), 0);
}

bool operator<(const ColoredPerm& a, const ColoredPerm& b) {
  if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
  return a.colors_ < b.colors_;
}

// ((c);pi) * ((c');pi') = ((c_i + c'_{pi^-1(i)}); pi pi'), (pi pi')(x) = pi(pi'(x)).
ColoredPerm compose(const ColoredPerm& g, const ColoredPerm& h) {
  check_same_shape(g, h);
  const int n = g.degree();
  const int r = g.color_modulus();
  std::vector<int> perm(n), colors(n);
  for (int j = 0; j < n; ++j) {
    perm[j] = g.perm()[h.perm()[j] - 1];
    const int i = g.perm()[j]; // i = pi_g(j+1), so pi_g^-1(i) = j+1
    colors[i - 1] = (g.colors()[i - 1] + h.colors()[j]) % r;
  }
  return ColoredPerm(std::move(colors), std::move(perm), r);
}

ColoredPerm inverse(const ColoredPerm& g) {
  const int n = g.degree();
  const int r = g.color_modulus();
  std::vector<int> perm(n), colors(n);
  for (int j = 0; j < n; ++j) {
    const int v = g.perm()[j];
    perm[v - 1] = j + 1;
    colors[j] = (r - g.colors()[v - 1]) % r;
  }
  return ColoredPerm(std::move(colors), std::move(perm), r);
}

ColoredPerm power(const ColoredPerm& g, long long k) {
  if (k < 0) return power(inverse(g), -k);
  ColoredPerm acc = ColoredPerm::identity(g.degree(), g.color_modulus());
  ColoredPerm base = g;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

long long element_order(const ColoredPerm& g) {
  ColoredPerm h = g;
  long long k = 1;
  while (!h.is_identity()) {
    h = compose(h, g);
    ++k;
  }
  return k;
}

std::vector<int> signed_window(const ColoredPerm& g) {
  if (g.color_modulus() > 2)
    throw invalid_argument_error("signed window requires r <= 2");
  std::vector<int> w(g.degree());
  for (int j = 1; j <= g.degree(); ++j) {
    const int v = g.image(j);
    w[j - 1] = g.color_of(v) ? -v : v;
  }
  return w;
}

ColoredPerm from_signed_window(const std::vector<int>& window, int r) {
  const int n = static_cast<int>(window.size());
  std::vector<int> perm(n), colors(n, 0);
  for (int j = 0; j < n; ++j) {
    const int v = std::abs(window[j]);
    if (v < 1 || v > n) throw invalid_argument_error("window letter out of range");
    perm[j] = v;
    if (window[j] < 0) {
      if (r < 2) throw invalid_argument_error("negative letter needs r >= 2");
      colors[v - 1] = 1;
    }
  }
  return ColoredPerm(std::move(colors), std::move(perm), r);
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw invalid_argument_error(std::string("expected '") + c + "' in element text");
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, value);
    if (ec != std::errc() || ptr != s.data() + pos || pos == start)
      throw invalid_argument_error("malformed integer in element text");
    return value;
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
};

std::vector<int> bracket_list(Cursor& cur) {
  cur.expect('[');
  std::vector<int> out;
  if (cur.eat(']')) return out;
  out.push_back(cur.integer());
  while (cur.eat(',')) out.push_back(cur.integer());
  cur.expect(']');
  return out;
}

} // namespace

ColoredPerm parse_element(std::string_view text, int r) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.pos < text.size() && text[cur.pos] == 'c') {
    ++cur.pos;
    cur.expect('=');
    std::vector<int> colors = bracket_list(cur);
    cur.expect(';');
    cur.skip_ws();
    if (cur.pos >= text.size() || text[cur.pos] != 'w')
      throw invalid_argument_error("expected 'w=[...]' in element text");
    ++cur.pos;
    cur.expect('=');
    std::vector<int> perm = bracket_list(cur);
    if (!cur.done()) throw invalid_argument_error("trailing characters in element text");
    return ColoredPerm(std::move(colors), std::move(perm), r);
  }
  if (r > 2)
    throw invalid_argument_error("signed one-line shorthand requires r <= 2");
  std::vector<int> window = bracket_list(cur);
  if (!cur.done()) throw invalid_argument_error("trailing characters in element text");
  return from_signed_window(window, r);
}

std::string format_element(const ColoredPerm& g) {
  std::ostringstream os;
  if (g.color_modulus() <= 2) {
    const auto w = signed_window(g);
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ',';
      os << w[i];
    }
    os << ']';
    return os.str();
  }
  os << "c=[";
  for (int i = 0; i < g.degree(); ++i) {
    if (i) os << ',';
    os << g.colors()[i];
  }
  os << "];w=[";
  for (int i = 0; i < g.degree(); ++i) {
    if (i) os << ',';
    os << g.perm()[i];
  }
  os << ']';
  return os.str();
}

std::size_t ColoredPermHash::operator()(const ColoredPerm& g) const {
  // FNV-1a over colors then perm
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int x) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  mix(g.color_modulus());
  for (int c : g.colors()) mix(c);
  for (int v : g.perm()) mix(v);
  return static_cast<std::size_t>(h);
}

} // namespace ogs
