#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hss/rational.hpp"

namespace hss {

// The compact irreducible Hermitian symmetric spaces. Grassmannian(a,b) is
// G(a, a+b); Lagrangian(n) is Sp(2n)/U(n); Spinor(n) is SO(2n)/U(n); EIII and
// EVII are the two exceptional spaces.
enum class Series { Projective, Quadric, Grassmannian, Lagrangian, Spinor, EIII, EVII };

inline std::string series_name(Series s) {
  switch (s) {
    case Series::Projective: return "Projective";
    case Series::Quadric: return "Quadric";
    case Series::Grassmannian: return "Grassmannian";
    case Series::Lagrangian: return "Lagrangian";
    case Series::Spinor: return "Spinor";
    case Series::EIII: return "EIII";
    case Series::EVII: return "EVII";
  }
  return "?";
}

// Numerical descriptor of a space: complex dimension and Fano index c1, both
// closed-form per series. `embedding_degree` (deg Y = O_Y(1)^dim) is optional
// metadata only: it cancels from every slope comparison, so nothing here
// computes or consumes it.
struct HssSpace {
  Series series = Series::Projective;
  int a = 0;  // Grassmannian row bound; unused otherwise
  int b = 0;  // Grassmannian column bound; unused otherwise
  int n = 0;  // series parameter for Projective/Quadric/Lagrangian/Spinor
  int dimension = 0;
  int index = 0;
  std::optional<long long> embedding_degree;

  // Canonical text key: "P:3", "B:3", "A:2,3", "C:4", "D:5", "E3", "E7".
  std::string key() const {
    switch (series) {
      case Series::Projective: return "P:" + std::to_string(n);
      case Series::Quadric: return "B:" + std::to_string(n);
      case Series::Grassmannian: return "A:" + std::to_string(a) + "," + std::to_string(b);
      case Series::Lagrangian: return "C:" + std::to_string(n);
      case Series::Spinor: return "D:" + std::to_string(n);
      case Series::EIII: return "E3";
      case Series::EVII: return "E7";
    }
    return "?";
  }

  // index == dimension, which happens exactly for quadrics and for the
  // Grassmannian G(2,4) ~ Q^4.
  bool quadric_like() const { return index == dimension; }

  // Q^2 has Picard rank 2; it sits in the catalog but the certification
  // engine refuses it outside the small-dimension table.
  bool reducible_picard() const { return series == Series::Quadric && n == 2; }

  friend bool operator==(const HssSpace& x, const HssSpace& y) {
    return x.series == y.series && x.a == y.a && x.b == y.b && x.n == y.n;
  }
};

inline HssSpace describe_projective(int n) {
  if (n < 1) throw std::invalid_argument("Projective(n) requires n >= 1");
  HssSpace s;
  s.series = Series::Projective;
  s.n = n;
  s.dimension = n;
  s.index = n + 1;
  return s;
}

inline HssSpace describe_quadric(int n) {
  if (n < 2) throw std::invalid_argument("Quadric(n) requires n >= 2");
  HssSpace s;
  s.series = Series::Quadric;
  s.n = n;
  s.dimension = n;
  s.index = n;
  return s;
}

inline HssSpace describe_grassmannian(int a, int b) {
  if (a < 2 || b < 2)
    throw std::invalid_argument(
        "Grassmannian(a,b) requires a,b >= 2; declare G(1,m) as Projective(m)");
  HssSpace s;
  s.series = Series::Grassmannian;
  s.a = a;
  s.b = b;
  s.dimension = a * b;
  s.index = a + b;
  return s;
}

inline HssSpace describe_lagrangian(int n) {
  if (n < 3)
    throw std::invalid_argument(
        "Lagrangian(n) requires n >= 3; lower parameters are projective spaces or quadrics "
        "and must be declared under those series");
  HssSpace s;
  s.series = Series::Lagrangian;
  s.n = n;
  s.dimension = n * (n + 1) / 2;
  s.index = n + 1;
  return s;
}

inline HssSpace describe_spinor(int n) {
  if (n < 5)
    throw std::invalid_argument(
        "Spinor(n) requires n >= 5; D4 is the quadric Q^6 and must be declared as Quadric(6)");
  HssSpace s;
  s.series = Series::Spinor;
  s.n = n;
  s.dimension = n * (n - 1) / 2;
  s.index = 2 * (n - 1);
  return s;
}

inline HssSpace describe_eiii() {
  HssSpace s;
  s.series = Series::EIII;
  s.dimension = 16;
  s.index = 12;
  return s;
}

inline HssSpace describe_evii() {
  HssSpace s;
  s.series = Series::EVII;
  s.dimension = 27;
  s.index = 18;
  return s;
}

inline HssSpace describe(Series series, int p1 = 0, int p2 = 0) {
  switch (series) {
    case Series::Projective: return describe_projective(p1);
    case Series::Quadric: return describe_quadric(p1);
    case Series::Grassmannian: return describe_grassmannian(p1, p2);
    case Series::Lagrangian: return describe_lagrangian(p1);
    case Series::Spinor: return describe_spinor(p1);
    case Series::EIII: return describe_eiii();
    case Series::EVII: return describe_evii();
  }
  throw std::invalid_argument("describe: unknown series");
}

// Destabilization threshold for a rank-p subsheaf: p * index / dimension,
// exact. A subsheaf of determinant O(-d) violates stability iff d <= this.
inline Rational slope_threshold(const HssSpace& space, int p) {
  if (p < 0 || p > space.dimension)
    throw std::invalid_argument("slope_threshold: rank out of range");
  return Rational(static_cast<long long>(p) * space.index, space.dimension);
}

// Accepts the canonical keys plus "Q:n" as an alias for "B:n".
inline HssSpace parse_space_key(const std::string& key) {
  if (key == "E3") return describe_eiii();
  if (key == "E7") return describe_evii();
  auto colon = key.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= key.size())
    throw std::invalid_argument("bad space key: " + key);
  const std::string tag = key.substr(0, colon);
  const std::string rest = key.substr(colon + 1);
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad space key: " + key);
    return v;
  };
  if (tag == "A") {
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad space key: " + key);
    return describe_grassmannian(to_int(rest.substr(0, comma)), to_int(rest.substr(comma + 1)));
  }
  if (tag == "P") return describe_projective(to_int(rest));
  if (tag == "B" || tag == "Q") return describe_quadric(to_int(rest));
  if (tag == "C") return describe_lagrangian(to_int(rest));
  if (tag == "D") return describe_spinor(to_int(rest));
  throw std::invalid_argument("bad space key: " + key);
}

}  // namespace hss
