#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hss {

enum class SignedSeries { C, D };

inline char series_code(SignedSeries s) { return s == SignedSeries::C ? 'C' : 'D'; }

// A signed sequence with |x_i| = i. Series C is indexed 1..n; series D is
// indexed 0..n-1 with the index-0 entry fixed at 0. The admissibility and
// degree conventions differ between the two series: C compares pair sums
// (including the diagonal i = j) against 2l, D compares strict pairs i < j
// against l.
class SignedSequence {
 public:
  static SignedSequence from_mask(SignedSeries series, int n, std::uint32_t mask) {
    if (n < 1 || n > 30) throw std::invalid_argument("SignedSequence: order out of range");
    SignedSequence s;
    s.series_ = series;
    s.entries_.reserve(static_cast<std::size_t>(n));
    if (series == SignedSeries::C) {
      for (int i = 1; i <= n; ++i)
        s.entries_.push_back((mask >> (i - 1)) & 1u ? i : -i);
    } else {
      s.entries_.push_back(0);
      for (int i = 1; i < n; ++i)
        s.entries_.push_back((mask >> (i - 1)) & 1u ? i : -i);
    }
    return s;
  }

  SignedSeries series() const { return series_; }
  int order() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  // Weight p: sum of the positive entries.
  int weight() const {
    int p = 0;
    for (int x : entries_)
      if (x > 0) p += x;
    return p;
  }

  bool is_admissible(int l) const {
    require_positive(l);
    const int n = order();
    if (series_ == SignedSeries::C) {
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          if (entries_[i] + entries_[j] == 2 * l) return false;
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (entries_[i] + entries_[j] == l) return false;
    }
    return true;
  }

  // Cohomological degree q: pairs whose sum exceeds the series bound.
  int degree(int l) const {
    require_positive(l);
    const int n = order();
    int q = 0;
    if (series_ == SignedSeries::C) {
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          if (entries_[i] + entries_[j] > 2 * l) ++q;
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (entries_[i] + entries_[j] > l) ++q;
    }
    return q;
  }

  int count_entries_greater(int bound) const {
    int t = 0;
    for (int x : entries_)
      if (x > bound) ++t;
    return t;
  }

  // "C:[-1,-2,3]" / "D:[0,1,-2]".
  std::string str() const {
    std::string s(1, series_code(series_));
    s += ":[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    s += "]";
    return s;
  }

  friend bool operator==(const SignedSequence& a, const SignedSequence& b) {
    return a.series_ == b.series_ && a.entries_ == b.entries_;
  }

 private:
  void require_positive(int l) const {
    if (l <= 0) throw std::invalid_argument("SignedSequence: l must be positive");
  }

  SignedSeries series_ = SignedSeries::C;
  std::vector<int> entries_;
};

// 2^n sign patterns for C_n, 2^(n-1) for D_n.
inline std::uint32_t sequence_count(SignedSeries series, int n) {
  return 1u << (series == SignedSeries::C ? n : n - 1);
}

// Visits every sequence exactly once in binary-counter order of the sign
// mask (bit k set means the entry of magnitude k+1 is positive; mask 0 is
// the all-negative sequence).
template <typename Fn>
void for_each_sequence(SignedSeries series, int n, Fn&& fn) {
  const std::uint32_t total = sequence_count(series, n);
  for (std::uint32_t mask = 0; mask < total; ++mask)
    fn(SignedSequence::from_mask(series, n, mask));
}

}  // namespace hss
