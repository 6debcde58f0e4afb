#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hss {

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace detail

// A Young diagram inside an a x b rectangle: at most `box_a` parts, each part
// at most `box_b`. Parts are stored non-increasing with trailing zeros
// stripped; the empty partition is valid.
class Partition {
 public:
  Partition(std::vector<int> parts, int box_a, int box_b)
      : parts_(std::move(parts)), box_a_(box_a), box_b_(box_b) {
    if (box_a_ < 0 || box_b_ < 0) throw std::invalid_argument("Partition: negative box");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    if (static_cast<int>(parts_.size()) > box_a_)
      throw std::invalid_argument("Partition: too many parts for box");
    if (!parts_.empty() && (parts_.front() > box_b_ || parts_.back() < 0))
      throw std::invalid_argument("Partition: part out of box");
  }

  const std::vector<int>& parts() const { return parts_; }
  int box_a() const { return box_a_; }
  int box_b() const { return box_b_; }
  bool empty() const { return parts_.empty(); }

  // Number of cells p.
  int weight() const {
    int w = 0;
    for (int x : parts_) w += x;
    return w;
  }

  // One hook number per cell, row-major: hook(i,j) = arm + leg + 1.
  std::vector<int> hooks() const {
    std::vector<int> hs;
    hs.reserve(static_cast<std::size_t>(weight()));
    if (parts_.empty()) return hs;
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_)
      for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
      for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j)
        hs.push_back(parts_[static_cast<std::size_t>(i)] - j +
                     conj[static_cast<std::size_t>(j)] - i - 1);
    return hs;
  }

  // l-admissible: no hook number equals l. Hooks are positive, so l = 0 is
  // vacuously admissible.
  bool is_admissible(int l) const {
    for (int h : hooks())
      if (h == l) return false;
    return true;
  }

  // Cohomological degree: number of hook numbers strictly greater than l.
  int degree(int l) const {
    int q = 0;
    for (int h : hooks())
      if (h > l) ++q;
    return q;
  }

  // Conjugate diagram in the transposed box; preserves the hook multiset.
  Partition transpose() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
      conj.assign(static_cast<std::size_t>(parts_.front()), 0);
      for (int part : parts_)
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj), box_b_, box_a_);
  }

  // At most one part exceeding 1, i.e. shape (m, 1, 1, ..., 1).
  bool is_hook_shape() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] > 1) return false;
    return true;
  }

  // Increments x_i of the parts read in non-decreasing order (zero parts up
  // to the box height included): x_1 is the smallest padded part, then the
  // successive differences.
  std::vector<int> ascending_increments() const {
    std::vector<int> asc(static_cast<std::size_t>(box_a_), 0);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      asc[static_cast<std::size_t>(box_a_) - 1 - i] = parts_[i];
    std::vector<int> inc(asc.size(), 0);
    for (std::size_t i = 0; i < asc.size(); ++i)
      inc[i] = asc[i] - (i == 0 ? 0 : asc[i - 1]);
    return inc;
  }

  // "(3,1,1) in 3x4"; the empty partition prints as "() in 3x4".
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    s += ") in " + std::to_string(box_a_) + "x" + std::to_string(box_b_);
    return s;
  }

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.box_a_ == y.box_a_ && x.box_b_ == y.box_b_ && x.parts_ == y.parts_;
  }

 private:
  std::vector<int> parts_;
  int box_a_ = 0;
  int box_b_ = 0;
};

// Restartable stream over all partitions in an a x b box, in colexicographic
// order of the padded part vector (lambda_1,...,lambda_a): the last (smallest)
// part is the most significant position. Count is C(a+b, a). The stream
// supports O(a log) seeking by rank, so sweeps can be split into contiguous
// chunks for parallel verification.
class PartitionStream {
 public:
  PartitionStream(int a, int b) : a_(a), b_(b), cur_(static_cast<std::size_t>(a), 0) {
    if (a < 0 || b < 0) throw std::invalid_argument("PartitionStream: negative box");
  }

  static std::uint64_t count(int a, int b) { return detail::binomial(a + b, a); }

  bool done() const { return done_; }

  Partition current() const { return Partition(cur_, a_, b_); }

  void next() {
    // Increment the least significant position that is below b, resetting
    // the prefix to the new value; exhausted once every part equals b.
    for (std::size_t i = 0; i < cur_.size(); ++i) {
      if (cur_[i] < b_) {
        int v = cur_[i] + 1;
        for (std::size_t j = 0; j <= i; ++j) cur_[j] = v;
        return;
      }
    }
    done_ = true;
  }

  // Position the stream at the partition of the given colex rank.
  void seek(std::uint64_t rank) {
    if (rank >= count(a_, b_)) {
      done_ = true;
      return;
    }
    done_ = false;
    int rows = a_, maxpart = b_, base = 0;
    std::fill(cur_.begin(), cur_.end(), 0);
    // Peel off the most significant (last) position first.
    for (int pos = a_ - 1; pos >= 0; --pos) {
      int v = 0;
      for (;; ++v) {
        std::uint64_t block = detail::binomial(rows - 1 + maxpart - v, rows - 1);
        if (rank < block) break;
        rank -= block;
      }
      cur_[static_cast<std::size_t>(pos)] = base + v;
      base += v;
      maxpart -= v;
      --rows;
    }
  }

 private:
  int a_;
  int b_;
  std::vector<int> cur_;
  bool done_ = false;
};

// Convenience eager enumeration (desk-scale boxes only).
inline std::vector<Partition> partitions_in_box(int a, int b) {
  std::vector<Partition> out;
  out.reserve(PartitionStream::count(a, b));
  for (PartitionStream s(a, b); !s.done(); s.next()) out.push_back(s.current());
  return out;
}

}  // namespace hss
