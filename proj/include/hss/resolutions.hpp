#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hss/spaces.hpp"

namespace hss {

// A graded list of twist multisets {d_ij} modelling a resolution
//   0 -> F_k -> ... -> F_1 -> F_0 -> O_X -> 0,   F_i = (+)_j O(-d_ij),
// with F_0 = O_Y fixed (entry 0 is the singleton {0}) and d_ij >= i for
// i > 0. The tool validates shape constraints only; whether a given list
// actually resolves an ideal is sheaf theory outside its scope.
class Resolution {
 public:
  // `twists` holds the entries for homological degrees 1..k; entry 0 is
  // hard-coded to {0}.
  static Resolution from_twists(std::vector<std::vector<int>> twists) {
    if (twists.empty()) throw std::invalid_argument("Resolution: length k must be >= 1");
    Resolution r;
    r.entries_.push_back({0});
    for (std::size_t i = 0; i < twists.size(); ++i) {
      if (twists[i].empty())
        throw std::invalid_argument("Resolution: empty term at degree " +
                                    std::to_string(i + 1));
      std::sort(twists[i].begin(), twists[i].end());
      if (twists[i].front() < static_cast<int>(i + 1))
        throw std::invalid_argument("Resolution: twist below homological degree at term " +
                                    std::to_string(i + 1));
      r.entries_.push_back(std::move(twists[i]));
    }
    return r;
  }

  int codim() const { return static_cast<int>(entries_.size()) - 1; }

  // Twist multiset at homological degree i (0 <= i <= codim), sorted ascending.
  const std::vector<int>& term(int i) const { return entries_[static_cast<std::size_t>(i)]; }

  bool has_twist(int i, int value) const {
    const auto& t = term(i);
    return std::binary_search(t.begin(), t.end(), value);
  }

  // "ci:2,3" for Koszul-built resolutions, "raw:[{2,3},{5}]" otherwise.
  std::string str() const {
    if (!koszul_degrees_.empty()) {
      std::string s = "ci:";
      for (std::size_t i = 0; i < koszul_degrees_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(koszul_degrees_[i]);
      }
      return s;
    }
    std::string s = "raw:[";
    for (int i = 1; i <= codim(); ++i) {
      if (i > 1) s += ",";
      s += "{";
      const auto& t = term(i);
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(t[j]);
      }
      s += "}";
    }
    return s + "]";
  }

  const std::vector<int>& koszul_degrees() const { return koszul_degrees_; }

  friend Resolution koszul(std::vector<int> degrees);

 private:
  std::vector<std::vector<int>> entries_;
  std::vector<int> koszul_degrees_;
};

// Koszul resolution of a complete intersection cut out by hypersurfaces of
// the given degrees: term i is the multiset of sums over i-element subsets.
inline Resolution koszul(std::vector<int> degrees) {
  if (degrees.empty()) throw std::invalid_argument("koszul: need at least one degree");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("koszul: hypersurface degrees must be >= 1");
  if (degrees.size() > 24) throw std::invalid_argument("koszul: too many hypersurfaces");
  std::sort(degrees.begin(), degrees.end());
  const int c = static_cast<int>(degrees.size());
  std::vector<std::vector<int>> terms(static_cast<std::size_t>(c));
  for (std::uint32_t subset = 1; subset < (1u << c); ++subset) {
    int size = 0, sum = 0;
    for (int j = 0; j < c; ++j)
      if (subset >> j & 1u) {
        ++size;
        sum += degrees[static_cast<std::size_t>(j)];
      }
    terms[static_cast<std::size_t>(size - 1)].push_back(sum);
  }
  Resolution r = Resolution::from_twists(std::move(terms));
  r.koszul_degrees_ = std::move(degrees);
  return r;
}

struct ShortResolutionReport {
  bool is_short = false;   // k < dim Y
  bool has_linear = false; // some d_1j = 1
  bool strict = false;     // d_ij >= i + 1 for all i > 0
};

inline ShortResolutionReport validate_short(const Resolution& r, const HssSpace& space) {
  ShortResolutionReport rep;
  rep.is_short = r.codim() < space.dimension;
  rep.has_linear = r.has_twist(1, 1);
  rep.strict = true;
  for (int i = 1; i <= r.codim(); ++i)
    if (r.term(i).front() < i + 1) rep.strict = false;
  return rep;
}

// Alternating sum of term sizes; vanishes for every Koszul resolution
// (binomial alternating sum). Quick sanity check on construction.
inline bool euler_rank_check(const Resolution& r) {
  long long acc = 0;
  for (int i = 0; i <= r.codim(); ++i)
    acc += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(r.term(i).size());
  return acc == 0;
}

// Parses "ci:2,3" and "raw:[{2,3},{5}]".
inline Resolution parse_resolution(const std::string& text) {
  auto parse_int_list = [](const std::string& s) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t pos = 0;
      out.push_back(std::stoi(s.substr(i), &pos));
      i += pos;
      if (i < s.size()) {
        if (s[i] != ',') throw std::invalid_argument("bad integer list: " + s);
        ++i;
      }
    }
    return out;
  };
  if (text.rfind("ci:", 0) == 0) return koszul(parse_int_list(text.substr(3)));
  if (text.rfind("raw:[", 0) == 0 && text.back() == ']') {
    std::string body = text.substr(5, text.size() - 6);
    std::vector<std::vector<int>> terms;
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] != '{') throw std::invalid_argument("bad resolution text: " + text);
      std::size_t close = body.find('}', i);
      if (close == std::string::npos) throw std::invalid_argument("bad resolution text: " + text);
      terms.push_back(parse_int_list(body.substr(i + 1, close - i - 1)));
      i = close + 1;
      if (i < body.size()) {
        if (body[i] != ',') throw std::invalid_argument("bad resolution text: " + text);
        ++i;
      }
    }
    return Resolution::from_twists(std::move(terms));
  }
  throw std::invalid_argument("bad resolution text: " + text);
}

}  // namespace hss
