#include "bhsp/fourier.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <fmt/core.h>

#include "bhsp/error.hpp"

namespace bhsp {
namespace {

// Largest n(t+1) for which the t-fold numerators fit in a signed 128-bit
// integer (every partial butterfly sum is bounded by 2^{n(t+1)}).
constexpr int kMaxExactTFoldBits = 125;

std::vector<double> scaled(std::span<const std::int64_t> numerators, int denominator_log2) {
  std::vector<double> values(numerators.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::ldexp(static_cast<double>(numerators[i]), -denominator_log2);
  }
  return values;
}

}  // namespace

const char* to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::SignedFourier: return "signed-fourier";
    case SpectrumKind::Autocorrelation: return "autocorrelation";
    case SpectrumKind::TFold: return "tfold";
    case SpectrumKind::Real: return "real";
  }
  return "unknown";
}

Spectrum Spectrum::exact(int n, SpectrumKind kind, int t, std::vector<std::int64_t> numerators,
                         int denominator_log2) {
  if (numerators.size() != std::size_t{1} << n) {
    throw std::invalid_argument(fmt::format("spectrum needs {} values, got {}", std::size_t{1} << n,
                                            numerators.size()));
  }
  Spectrum s;
  s.n_ = n;
  s.kind_ = kind;
  s.t_ = t;
  s.values_ = scaled(numerators, denominator_log2);
  s.numerators_ = std::move(numerators);
  s.denominator_log2_ = denominator_log2;
  return s;
}

Spectrum Spectrum::real(int n, SpectrumKind kind, int t, std::vector<double> values) {
  if (values.size() != std::size_t{1} << n) {
    throw std::invalid_argument(
        fmt::format("spectrum needs {} values, got {}", std::size_t{1} << n, values.size()));
  }
  Spectrum s;
  s.n_ = n;
  s.kind_ = kind;
  s.t_ = t;
  s.values_ = std::move(values);
  return s;
}

std::span<const std::int64_t> Spectrum::numerators() const {
  if (!numerators_) throw std::logic_error("spectrum is not exact");
  return *numerators_;
}

std::vector<std::int64_t> walsh_coefficients(const BooleanFunction& f) {
  std::vector<std::int64_t> a(f.size());
  for (Point x = 0; x < f.size(); ++x) a[x] = f(x) ? -1 : 1;
  butterfly(std::span<std::int64_t>(a));
  return a;
}

std::vector<std::int64_t> autocorrelation_numerators(const BooleanFunction& f) {
  // A = butterfly(W^2) / 2^n. Every partial sum is bounded by sum_w W^2 = 4^n.
  std::vector<std::int64_t> a = walsh_coefficients(f);
  for (auto& v : a) v *= v;
  butterfly(std::span<std::int64_t>(a));
  for (auto& v : a) v >>= f.n();
  return a;
}

Spectrum wht(const BooleanFunction& f) {
  return Spectrum::exact(f.n(), SpectrumKind::SignedFourier, 1, walsh_coefficients(f), f.n());
}

BooleanFunction inverse_wht(const Spectrum& spectrum) {
  const int n = spectrum.n();
  const std::size_t size = spectrum.size();
  std::vector<std::uint8_t> table(size);
  if (spectrum.is_exact()) {
    // sum_w (-1)^{w.x} F^(w) = (-1)^{f(x)}, so the butterfly of the
    // numerators must be +-2^d everywhere.
    std::vector<__int128> a(spectrum.numerators().begin(), spectrum.numerators().end());
    butterfly(std::span<__int128>(a));
    const int d = spectrum.denominator_log2();
    if (d < 0 || d > 100) throw std::invalid_argument("not a Boolean-function spectrum");
    const __int128 unit = __int128{1} << d;
    for (std::size_t x = 0; x < size; ++x) {
      if (a[x] == unit) {
        table[x] = 0;
      } else if (a[x] == -unit) {
        table[x] = 1;
      } else {
        throw std::invalid_argument("not a Boolean-function spectrum");
      }
    }
  } else {
    std::vector<double> a(spectrum.values().begin(), spectrum.values().end());
    butterfly(std::span<double>(a));
    for (std::size_t x = 0; x < size; ++x) {
      if (std::abs(a[x] - 1.0) <= 1e-9) {
        table[x] = 0;
      } else if (std::abs(a[x] + 1.0) <= 1e-9) {
        table[x] = 1;
      } else {
        throw std::invalid_argument("not a Boolean-function spectrum");
      }
    }
  }
  return BooleanFunction(n, std::move(table));
}

Spectrum autocorrelation(const BooleanFunction& f) {
  return Spectrum::exact(f.n(), SpectrumKind::Autocorrelation, 1, autocorrelation_numerators(f), f.n());
}

Spectrum convolve(const Spectrum& a, const Spectrum& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument(fmt::format("convolution size mismatch: n={} vs n={}", a.n(), b.n()));
  }
  const int n = a.n();
  const std::size_t size = a.size();
  if (a.is_exact() && b.is_exact()) {
    std::vector<__int128> ha(a.numerators().begin(), a.numerators().end());
    std::vector<__int128> hb(b.numerators().begin(), b.numerators().end());
    __int128 bound_a = 0;
    __int128 bound_b = 0;
    for (auto v : ha) bound_a += v < 0 ? -v : v;
    for (auto v : hb) bound_b += v < 0 ? -v : v;
    // The final butterfly sums `size` products of magnitude <= bound_a * bound_b.
    const long double magnitude = static_cast<long double>(bound_a) * static_cast<long double>(bound_b) *
                                  static_cast<long double>(size);
    if (magnitude < 0x1.0p120L) {
      butterfly(std::span<__int128>(ha));
      butterfly(std::span<__int128>(hb));
      for (std::size_t i = 0; i < size; ++i) ha[i] *= hb[i];
      butterfly(std::span<__int128>(ha));
      std::vector<std::int64_t> out(size);
      bool fits = true;
      for (std::size_t i = 0; i < size && fits; ++i) {
        const __int128 v = ha[i] >> n;  // exact: divisible by 2^n
        if (v > INT64_MAX || v < INT64_MIN) fits = false;
        out[i] = static_cast<std::int64_t>(v);
      }
      if (fits) {
        return Spectrum::exact(n, SpectrumKind::Real, 1, std::move(out),
                               a.denominator_log2() + b.denominator_log2());
      }
    }
  }
  std::vector<double> ha(a.values().begin(), a.values().end());
  std::vector<double> hb(b.values().begin(), b.values().end());
  butterfly(std::span<double>(ha));
  butterfly(std::span<double>(hb));
  for (std::size_t i = 0; i < size; ++i) ha[i] *= hb[i];
  butterfly(std::span<double>(ha));
  for (auto& v : ha) v = std::ldexp(v, -n);
  return Spectrum::real(n, SpectrumKind::Real, 1, std::move(ha));
}

std::optional<std::vector<__int128>> tfold_squared_numerators(const BooleanFunction& f, int t) {
  if (t < 1) throw std::invalid_argument(fmt::format("t must be >= 1, got {}", t));
  const int n = f.n();
  if (static_cast<long>(n) * (t + 1) > kMaxExactTFoldBits) return std::nullopt;
  const std::vector<std::int64_t> a = autocorrelation_numerators(f);
  std::vector<__int128> p(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    __int128 v = 1;
    for (int i = 0; i < t; ++i) v *= a[x];
    p[x] = v;
  }
  butterfly(std::span<__int128>(p));
  for (auto v : p) {
    if (v < 0) throw InternalError("negative exact t-fold coefficient");
  }
  return p;
}

std::vector<double> tfold_squared(const BooleanFunction& f, int t) {
  const int n = f.n();
  if (auto exact = tfold_squared_numerators(f, t)) {
    std::vector<double> out(exact->size());
    const int shift = n * (t + 1);
    for (std::size_t w = 0; w < out.size(); ++w) {
      out[w] = static_cast<double>(std::ldexp(static_cast<long double>((*exact)[w]), -shift));
    }
    return out;
  }
  // (1/2^n) sum_x (-1)^{w.x} (F*F)(x)^t
  const std::vector<std::int64_t> a = autocorrelation_numerators(f);
  std::vector<double> p(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) p[x] = std::pow(std::ldexp(static_cast<double>(a[x]), -n), t);
  butterfly(std::span<double>(p));
  for (auto& v : p) {
    v = std::ldexp(v, -n);
    if (v < -kTFoldZeroThreshold) {
      throw InternalError(fmt::format("t-fold coefficient {} below zero", v));
    }
    if (v < 1e-12) v = std::max(v, 0.0);
  }
  return p;
}

Spectrum tfold_spectrum(const BooleanFunction& f, int t) {
  if (t < 1) throw std::invalid_argument(fmt::format("t must be >= 1, got {}", t));
  if (t == 1) {
    std::vector<std::int64_t> w = walsh_coefficients(f);
    for (auto& v : w) v = std::abs(v);
    return Spectrum::exact(f.n(), SpectrumKind::TFold, 1, std::move(w), f.n());
  }
  std::vector<double> values = tfold_squared(f, t);
  for (auto& v : values) v = std::sqrt(v);
  return Spectrum::real(f.n(), SpectrumKind::TFold, t, std::move(values));
}

std::vector<std::uint8_t> tfold_nonzero(const BooleanFunction& f, int t) {
  std::vector<std::uint8_t> mask(f.size());
  if (t == 1) {
    const auto w = walsh_coefficients(f);
    for (std::size_t i = 0; i < w.size(); ++i) mask[i] = w[i] != 0;
    return mask;
  }
  if (auto exact = tfold_squared_numerators(f, t)) {
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = (*exact)[i] != 0;
    return mask;
  }
  const auto sq = tfold_squared(f, t);
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = sq[i] > kTFoldZeroThreshold;
  return mask;
}

}  // namespace bhsp
