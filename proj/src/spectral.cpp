#include "bhsp/spectral.hpp"

#include <stdexcept>

#include <fmt/core.h>

#include "bhsp/error.hpp"
#include "bhsp/fourier.hpp"
#include "bhsp/shifts.hpp"

namespace bhsp {

SupportSet::SupportSet(int n, int t, std::vector<std::uint8_t> members)
    : n_(n), t_(t), members_(std::move(members)) {
  if (members_.size() != std::size_t{1} << n) {
    throw std::invalid_argument(fmt::format("support mask needs {} entries", std::size_t{1} << n));
  }
  for (auto& m : members_) {
    m = m != 0;
    count_ += m;
  }
}

std::vector<Point> SupportSet::elements() const {
  std::vector<Point> out;
  out.reserve(count_);
  for (Point w = 0; w < members_.size(); ++w) {
    if (members_[w]) out.push_back(w);
  }
  return out;
}

SupportSet support(const BooleanFunction& f, int t) {
  if (t < 1) throw std::invalid_argument(fmt::format("t must be >= 1, got {}", t));
  return SupportSet(f.n(), t, tfold_nonzero(f, t));
}

SupportSet sumset(const SupportSet& a, const SupportSet& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument(fmt::format("sumset size mismatch: n={} vs n={}", a.n(), b.n()));
  }
  // Count representations x = a + b through the XOR convolution of the two
  // indicators; every count is an integer in [0, 2^n].
  std::vector<std::int64_t> ha(a.mask().begin(), a.mask().end());
  std::vector<std::int64_t> hb(b.mask().begin(), b.mask().end());
  butterfly(std::span<std::int64_t>(ha));
  butterfly(std::span<std::int64_t>(hb));
  for (std::size_t i = 0; i < ha.size(); ++i) ha[i] *= hb[i];
  butterfly(std::span<std::int64_t>(ha));
  std::vector<std::uint8_t> members(ha.size());
  for (std::size_t i = 0; i < ha.size(); ++i) members[i] = ha[i] != 0;
  return SupportSet(a.n(), a.t() + b.t(), std::move(members));
}

std::optional<int> minimal_full_support_t(const BooleanFunction& f) {
  const SupportSet first = support(f, 1);
  if (gf2_rank(first.elements()) < f.n()) return std::nullopt;
  // An anti-shift s confines S_t to {w : w.s = t mod 2} for every t.
  if (find_b_shifts(f).anti_shift) return std::nullopt;
  SupportSet current = first;
  int t = 1;
  while (!current.full()) {
    current = sumset(current, first);
    ++t;
    if (t > f.n()) {
      throw InternalError("support spans Z_2^n without anti-shift but is not full after n steps");
    }
  }
  return t;
}

QrsParams qrs_params(const BooleanFunction& f, int t) {
  const Spectrum spec = tfold_spectrum(f, t);
  const SupportSet s = support(f, t);
  long double total = 0;
  for (double v : spec.values()) total += v;
  const long double size = static_cast<long double>(f.size());
  QrsParams params;
  params.n = f.n();
  params.t = t;
  params.p_min = std::min(1.0, static_cast<double>(total * total / size));
  params.p_max = s.fraction();
  return params;
}

}  // namespace bhsp
