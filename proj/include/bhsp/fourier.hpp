#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bhsp/bool_function.hpp"

namespace bhsp {

enum class SpectrumKind {
  SignedFourier,    // F^(w) = 2^-n sum_x (-1)^{w.x + f(x)}
  Autocorrelation,  // (F*F)(x) = 2^-n sum_y (-1)^{f(y) + f(x+y)}
  TFold,            // F^(t)(w) = sqrt([F^2]^{*t}(w))
  Real,             // arbitrary real sequence (e.g. a convolution result)
};

const char* to_string(SpectrumKind kind);

// A function Z_2^n -> R. Exact kinds keep integer numerators over a power of
// two denominator; `values` always holds the double rendering.
class Spectrum {
 public:
  static Spectrum exact(int n, SpectrumKind kind, int t, std::vector<std::int64_t> numerators,
                        int denominator_log2);
  static Spectrum real(int n, SpectrumKind kind, int t, std::vector<double> values);

  int n() const noexcept { return n_; }
  SpectrumKind kind() const noexcept { return kind_; }
  int t() const noexcept { return t_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool is_exact() const noexcept { return numerators_.has_value(); }

  double operator[](Point w) const { return values_[w]; }
  std::span<const double> values() const noexcept { return values_; }

  // Only valid when is_exact().
  std::span<const std::int64_t> numerators() const;
  int denominator_log2() const noexcept { return denominator_log2_; }

 private:
  Spectrum() = default;

  int n_ = 0;
  SpectrumKind kind_ = SpectrumKind::Real;
  int t_ = 1;
  std::vector<double> values_;
  std::optional<std::vector<std::int64_t>> numerators_;
  int denominator_log2_ = 0;
};

// Unnormalized in-place butterfly: a(w) <- sum_x (-1)^{w.x} a(x).
// Applying it twice multiplies by the length.
template <typename T>
void butterfly(std::span<T> a) {
  const std::size_t len = a.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const T u = a[j];
        const T v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
}

// Integer Walsh-Hadamard coefficients W(w) = sum_x (-1)^{w.x + f(x)},
// so that F^(w) = W(w) / 2^n.
std::vector<std::int64_t> walsh_coefficients(const BooleanFunction& f);

// Integer autocorrelation A(x) = sum_y (-1)^{f(y) + f(x+y)}, so that
// (F*F)(x) = A(x) / 2^n.
std::vector<std::int64_t> autocorrelation_numerators(const BooleanFunction& f);

Spectrum wht(const BooleanFunction& f);
BooleanFunction inverse_wht(const Spectrum& spectrum);
Spectrum autocorrelation(const BooleanFunction& f);

// (a*b)(x) = sum_y a(y) b(x+y), via the transform route.
Spectrum convolve(const Spectrum& a, const Spectrum& b);

// Exact numerators T(w) = sum_x (-1)^{w.x} A(x)^t with
// [F^(t)(w)]^2 = T(w) / 2^{n(t+1)}. Empty when 128-bit arithmetic would
// overflow (n(t+1) > 125).
std::optional<std::vector<__int128>> tfold_squared_numerators(const BooleanFunction& f, int t);

// [F^(t)(w)]^2 for every w, clamped at zero.
std::vector<double> tfold_squared(const BooleanFunction& f, int t);

Spectrum tfold_spectrum(const BooleanFunction& f, int t);

// Zero pattern of F^(t): exact when the 128-bit route is available, otherwise
// [F^(t)]^2 > kTFoldZeroThreshold.
std::vector<std::uint8_t> tfold_nonzero(const BooleanFunction& f, int t);

inline constexpr double kTFoldZeroThreshold = 1e-9;

}  // namespace bhsp
