#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ogs {

// An element of the wreath product G(r,n) = Z_r wr S_n: a permutation of
// {1,...,n} in one-line notation together with a vector of colors in [0,r),
// one color per letter (colors[v-1] is the color of the letter v).
//
// The signed one-line window of g is [w(1),...,w(n)] with w(j) = perm(j)
// carrying the color of the letter perm(j); for r = 2 a colored letter prints
// negative, e.g. colors (1,0) with perm [2,1] is the window [2,-1].
// Products compose as functions, (g*h)(x) = g(h(x)).
class ColoredPerm {
public:
  ColoredPerm() = default;
  ColoredPerm(std::vector<int> colors, std::vector<int> perm, int r);

  static ColoredPerm identity(int n, int r);

  int degree() const { return static_cast<int>(perm_.size()); }
  int color_modulus() const { return r_; }

  // 1-based accessors: image(j) = perm(j), color_of(v) = color of letter v.
  int image(int pos) const { return perm_[pos - 1]; }
  int color_of(int value) const { return colors_[value - 1]; }

  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& colors() const { return colors_; }

  bool is_identity() const;
  int color_sum() const;

  friend bool operator==(const ColoredPerm& a, const ColoredPerm& b) = default;
  friend bool operator<(const ColoredPerm& a, const ColoredPerm& b);

private:
  int r_ = 1;
  std::vector<int> colors_;
  std::vector<int> perm_;
};

ColoredPerm compose(const ColoredPerm& g, const ColoredPerm& h);
ColoredPerm inverse(const ColoredPerm& g);
ColoredPerm power(const ColoredPerm& g, long long k);
long long element_order(const ColoredPerm& g);

// Signed window helpers (r <= 2): window(j) = +-perm(j), negative when the
// letter is colored.
std::vector<int> signed_window(const ColoredPerm& g);
ColoredPerm from_signed_window(const std::vector<int>& window, int r = 2);

// Text format. Canonical: "c=[c1,...,cn];w=[w1,...,wn]". For r <= 2 the
// signed shorthand "[w1,...,wn]" (negative entry = colored letter) is
// accepted and is also what format_element emits.
ColoredPerm parse_element(std::string_view text, int r);
std::string format_element(const ColoredPerm& g);

struct ColoredPermHash {
  std::size_t operator()(const ColoredPerm& g) const;
};

} // namespace ogs
