#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bhsp/bool_function.hpp"

namespace bhsp {

// S_t = { w : F^(t)(w) != 0 }.
class SupportSet {
 public:
  SupportSet(int n, int t, std::vector<std::uint8_t> members);

  int n() const noexcept { return n_; }
  int t() const noexcept { return t_; }
  bool contains(Point w) const { return members_[w] != 0; }
  std::size_t size() const noexcept { return count_; }
  std::size_t universe() const noexcept { return members_.size(); }
  bool full() const noexcept { return count_ == members_.size(); }
  double fraction() const noexcept {
    return static_cast<double>(count_) / static_cast<double>(members_.size());
  }
  std::vector<Point> elements() const;
  std::span<const std::uint8_t> mask() const noexcept { return members_; }

  friend bool operator==(const SupportSet& a, const SupportSet& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_;
  int t_;
  std::vector<std::uint8_t> members_;
  std::size_t count_ = 0;
};

struct QrsParams {
  int n = 0;
  int t = 0;
  double p_min = 0.0;
  double p_max = 0.0;
};

SupportSet support(const BooleanFunction& f, int t);

// A + B = { a + b }. The result carries t = a.t() + b.t().
SupportSet sumset(const SupportSet& a, const SupportSet& b);

// Smallest t with S_t = Z_2^n, or nullopt when S_1 does not span Z_2^n or f has an anti-shift.
std::optional<int> minimal_full_support_t(const BooleanFunction& f);

QrsParams qrs_params(const BooleanFunction& f, int t);

}  // namespace bhsp
