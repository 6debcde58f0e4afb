#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hss/partitions.hpp"
#include "hss/signed_sequences.hpp"
#include "hss/spaces.hpp"

namespace hss {

// A non-vanishing query H^q(Y, Omega^p_Y(l)). The twist l is unbounded; p and
// q must lie in [0, dim Y].
struct CohomologyQuery {
  HssSpace space;
  int p = 0;
  int q = 0;
  int l = 0;

  std::string text() const {
    return space.key() + " p=" + std::to_string(p) + " q=" + std::to_string(q) +
           " l=" + std::to_string(l);
  }
};

inline CohomologyQuery make_query(const HssSpace& space, int p, int q, int l) {
  if (p < 0 || p > space.dimension || q < 0 || q > space.dimension)
    throw std::invalid_argument("cohomology query: p, q must lie in [0, dim]");
  return CohomologyQuery{space, p, q, l};
}

enum class Nonvanishing { Nonzero, Zero, Unsupported };

inline std::string to_string(Nonvanishing s) {
  switch (s) {
    case Nonvanishing::Nonzero: return "Nonzero";
    case Nonvanishing::Zero: return "Zero";
    case Nonvanishing::Unsupported: return "Unsupported";
  }
  return "?";
}

// Answer to a non-vanishing query. For the combinatorial series (A, C, D) a
// Nonzero answer carries witnesses: the admissible partitions or signed
// sequences of the right weight and degree, printed in canonical form. The
// witness list is truncated at the requested cap, but witness_count is always
// the exact number of combinatorial witnesses (not a cohomology dimension).
// Negative twists are answered through Serre reflection, and the witnesses
// reported are those of the reflected query.
struct CohomologyAnswer {
  Nonvanishing status = Nonvanishing::Zero;
  long long witness_count = 0;
  std::vector<std::string> witnesses;
};

// Serre reflection (space, p, q, l) -> (space, dim-p, dim-q, -l); an involution.
inline CohomologyQuery serre_dual(const CohomologyQuery& query) {
  const int dim = query.space.dimension;
  return CohomologyQuery{query.space, dim - query.p, dim - query.q, -query.l};
}

namespace detail {

constexpr int kDefaultWitnessCap = 16;

inline CohomologyAnswer yes() {
  return CohomologyAnswer{Nonvanishing::Nonzero, 0, {}};
}
inline CohomologyAnswer no() { return CohomologyAnswer{Nonvanishing::Zero, 0, {}}; }

// Bott's list for P^n: H^q(Omega^p(l)) != 0 iff
//   (l > 0, p < l, q = 0) or (l = 0, p = q) or (l < 0, n - p < -l, q = n).
inline Nonvanishing projective_status(int n, int p, int q, int l) {
  const bool nz = (l > 0 && p < l && q == 0) || (l == 0 && p == q) ||
                  (l < 0 && n - p < -l && q == n);
  return nz ? Nonvanishing::Nonzero : Nonvanishing::Zero;
}

// Snow's list for the quadric Q^n: H^q(Omega^p(l)) != 0 iff
//   (p = q, l = 0) or (q = n - p, l = -n + 2p) or (q = 0, l > p) or
//   (q = n, l < -n + p).
inline Nonvanishing quadric_status(int n, int p, int q, int l) {
  const bool nz = (p == q && l == 0) || (q == n - p && l == -n + 2 * p) ||
                  (q == 0 && l > p) || (q == n && l < -n + p);
  return nz ? Nonvanishing::Nonzero : Nonvanishing::Zero;
}

// Type A core: witnesses are l-admissible partitions in the a x b box of
// weight p and degree q. Handles every twist (Hodge diagonal at l = 0, Serre
// reflection below), so it is usable stand-alone for boxes outside the
// catalog floor (a = 1 degenerations in cross-checks).
inline CohomologyAnswer box_nonvanishing(int a, int b, int p, int q, int l, int cap) {
  const int dim = a * b;
  if (l < 0) return box_nonvanishing(a, b, dim - p, dim - q, -l, cap);
  CohomologyAnswer ans = no();
  for (PartitionStream s(a, b); !s.done(); s.next()) {
    Partition lam = s.current();
    if (lam.weight() != p) continue;
    if (l == 0) {
      // Every partition is 0-admissible with degree equal to its weight.
      if (p != q) continue;
    } else {
      if (!lam.is_admissible(l) || lam.degree(l) != q) continue;
    }
    ans.status = Nonvanishing::Nonzero;
    ++ans.witness_count;
    if (static_cast<int>(ans.witnesses.size()) < cap) ans.witnesses.push_back(lam.str());
  }
  return ans;
}

// Types C/D core, parametrised by the sequence order n; dimension and index
// follow from the series. Usable below the catalog floors (C_2, D_3, D_4) for
// the isomorphism cross-checks.
inline int signed_dimension(SignedSeries series, int n) {
  return series == SignedSeries::C ? n * (n + 1) / 2 : n * (n - 1) / 2;
}

inline CohomologyAnswer signed_nonvanishing(SignedSeries series, int n, int p, int q, int l,
                                            int cap) {
  const int dim = signed_dimension(series, n);
  if (l < 0) return signed_nonvanishing(series, n, dim - p, dim - q, -l, cap);
  CohomologyAnswer ans = no();
  const std::uint32_t total = sequence_count(series, n);
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    SignedSequence x = SignedSequence::from_mask(series, n, mask);
    if (x.weight() != p) continue;
    if (l == 0) {
      // Hodge diagonal; every sequence has degree equal to its weight at l = 0.
      if (p != q) continue;
    } else {
      if (!x.is_admissible(l) || x.degree(l) != q) continue;
    }
    ans.status = Nonvanishing::Nonzero;
    ++ans.witness_count;
    if (static_cast<int>(ans.witnesses.size()) < cap) ans.witnesses.push_back(x.str());
  }
  return ans;
}

}  // namespace detail

// Unified non-vanishing oracle for H^q(Y, Omega^p(l)) over the whole catalog.
// Projective spaces and quadrics use the closed-form case lists; types A, C
// and D reduce to the combinatorial criteria (as equivalences) and return
// witnesses; the two exceptional spaces answer only the Hodge diagonal at
// l = 0 and report Unsupported otherwise. Pure and stateless.
inline CohomologyAnswer nonvanishing(const CohomologyQuery& query,
                                     int witness_cap = detail::kDefaultWitnessCap) {
  const HssSpace& y = query.space;
  const int p = query.p, q = query.q, l = query.l;
  switch (y.series) {
    case Series::Projective: {
      CohomologyAnswer a;
      a.status = detail::projective_status(y.n, p, q, l);
      return a;
    }
    case Series::Quadric: {
      CohomologyAnswer a;
      a.status = detail::quadric_status(y.n, p, q, l);
      return a;
    }
    case Series::Grassmannian:
      return detail::box_nonvanishing(y.a, y.b, p, q, l, witness_cap);
    case Series::Lagrangian:
      return detail::signed_nonvanishing(SignedSeries::C, y.n, p, q, l, witness_cap);
    case Series::Spinor:
      return detail::signed_nonvanishing(SignedSeries::D, y.n, p, q, l, witness_cap);
    case Series::EIII:
    case Series::EVII: {
      CohomologyAnswer a;
      if (l == 0)
        a.status = (p == q) ? Nonvanishing::Nonzero : Nonvanishing::Zero;
      else
        a.status = Nonvanishing::Unsupported;
      return a;
    }
  }
  throw std::logic_error("nonvanishing: unknown series");
}

// The classified ways l + q = p * index / dim can hold on a non-vanishing
// group with q < dim. TopForm and ZeroWeight occur on every space; the two
// quadric cases occur exactly on the spaces with index = dimension. The
// middle family (q = dim - p, l = 2p - dim) is the one the G(2,4) ~ Q^4
// boundary witness belongs to.
enum class EqualityCase { TopForm, ZeroWeight, QuadricHodge, QuadricMiddle };

inline std::optional<EqualityCase> classify_equality_case(const HssSpace& y, int p, int q,
                                                          int l) {
  const int dim = y.dimension;
  if (p == dim && q == 0 && l == y.index) return EqualityCase::TopForm;
  if (p == 0 && q == 0 && l == 0) return EqualityCase::ZeroWeight;
  if (y.quadric_like()) {
    if (l == 0 && p == q) return EqualityCase::QuadricHodge;
    if (q == dim - p && l == 2 * p - dim && p > 0 && p < dim) return EqualityCase::QuadricMiddle;
  }
  return std::nullopt;
}

inline std::string equality_case_tag(const HssSpace& y, EqualityCase c, int p, int q, int l) {
  switch (c) {
    case EqualityCase::TopForm: return "top-form (p=dim, q=0, l=index)";
    case EqualityCase::ZeroWeight: return "zero-weight (p=q=0, l=0)";
    case EqualityCase::QuadricHodge: return "quadric-hodge (l=0, p=q)";
    case EqualityCase::QuadricMiddle:
      if (y.dimension == 4 && p == 3 && q == 1 && l == 2) return "Q4-exception";
      return "quadric-middle (q=dim-p, l=2p-dim)";
  }
  return "?";
}

struct LowerBoundReport {
  bool holds = false;
  bool is_equality = false;
  std::string classified_case;  // empty unless is_equality
};

// Checks l + q >= p * index / dim on a non-vanishing group with q < dim, in
// exact integers, and classifies equality instances. The check is carried by
// every catalog space except projective spaces of positive Hodge degree,
// where the Hodge diagonal sits strictly below the threshold; callers that
// sweep projective spaces should expect holds = false there.
inline LowerBoundReport check_lower_bound(const CohomologyQuery& query) {
  if (query.q >= query.space.dimension)
    throw std::invalid_argument("check_lower_bound: requires q < dim");
  if (nonvanishing(query, 0).status != Nonvanishing::Nonzero)
    throw std::invalid_argument("check_lower_bound: requires a non-vanishing group");
  const long long lhs =
      static_cast<long long>(query.l + query.q) * query.space.dimension;
  const long long rhs = static_cast<long long>(query.p) * query.space.index;
  LowerBoundReport r;
  r.holds = lhs >= rhs;
  r.is_equality = lhs == rhs;
  if (r.is_equality) {
    auto c = classify_equality_case(query.space, query.p, query.q, query.l);
    if (!c)
      throw std::logic_error("check_lower_bound: unclassified equality instance at " +
                             query.text());
    r.classified_case = equality_case_tag(query.space, *c, query.p, query.q, query.l);
  }
  return r;
}

// "A:2,3 p=4 q=1 l=3" -> query.
inline CohomologyQuery parse_query(const std::string& text) {
  std::string key;
  std::optional<int> p, q, l;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  skip_ws();
  std::size_t start = i;
  while (i < text.size() && text[i] != ' ') ++i;
  key = text.substr(start, i - start);
  HssSpace space = parse_space_key(key);
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (i + 2 > text.size() || text[i + 1] != '=')
      throw std::invalid_argument("bad query text: " + text);
    char name = text[i];
    i += 2;
    start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    int value = std::stoi(text.substr(start, i - start));
    if (name == 'p') p = value;
    else if (name == 'q') q = value;
    else if (name == 'l') l = value;
    else throw std::invalid_argument("bad query text: " + text);
  }
  if (!p || !q || !l) throw std::invalid_argument("query text needs p=, q=, l=: " + text);
  return make_query(space, *p, *q, *l);
}

}  // namespace hss
