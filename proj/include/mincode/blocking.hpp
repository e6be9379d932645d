#ifndef MINCODE_BLOCKING_HPP
#define MINCODE_BLOCKING_HPP

// Blocking-set checks over subspaces through the origin.
//
// A set B is given as a PointSet over point encodings. In the vectorial
// flavor B holds nonzero vectors; in the projective flavor B holds
// normalized projective representatives. Both flavors meet the same vector
// subspaces: a k-blocking set is tested against every (n-k)-dimensional
// subspace S, with B meeting S through its nonzero points (vectorial) or its
// representatives (projective).
//
// Every witness is the first failure in the canonical subspace order of
// for_each_subspace.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mincode/error.hpp"
#include "mincode/funcspec.hpp"
#include "mincode/geometry.hpp"
#include "mincode/linalg.hpp"

namespace mincode {

enum class Flavor { vectorial, projective };

inline std::string to_string(Flavor flavor) {
  return flavor == Flavor::vectorial ? "vectorial" : "projective";
}

enum class CuttingMethod { span, pairwise };

struct BlockingCheck {
  bool holds = false;
  std::optional<Subspace> missed;
};

struct CuttingCheck {
  bool holds = false;
  /// S and a second subspace S' != S of the same dimension with B cap S inside S'.
  std::optional<std::pair<Subspace, Subspace>> witness;
};

struct KsCheck {
  bool holds = false;
  std::optional<Subspace> missed;
  std::optional<Subspace> contained;
};

struct BlockingReport {
  Flavor flavor = Flavor::vectorial;
  std::size_t k = 1;
  std::optional<std::size_t> s;
  bool is_blocking = false;
  std::optional<bool> is_cutting;
  std::optional<bool> is_ks_blocking;
  /// Vector span dimension (vectorial) or projective dimension (projective).
  long set_dimension = 0;
  std::optional<Subspace> missed_subspace;
  std::optional<Subspace> contains_forbidden_subspace;
  std::optional<std::pair<Subspace, Subspace>> failing_subspace_pair;
};

namespace detail {

inline void require_blocking_input(const AmbientSpace& space, const PointSet& set, Flavor flavor) {
  if (space.n() < 2) throw Error(ErrorKind::DimensionOutOfRange, "blocking checks need n >= 2");
  if (set.universe() != space.size()) throw Error(ErrorKind::InvalidArgument, "point set does not match the space");
  if (set.contains(0)) {
    throw Error(ErrorKind::OriginInSet, "the origin is not allowed in a " + to_string(flavor) + " blocking set");
  }
  if (flavor == Flavor::projective) {
    set.for_each([&](PointCode c) {
      if (!space.is_projective_representative(c)) {
        throw Error(ErrorKind::InvalidArgument, "projective sets must hold normalized representatives");
      }
    });
  }
}

inline void require_k(const AmbientSpace& space, std::size_t k) {
  if (k < 1 || k + 1 > space.n()) {
    throw Error(ErrorKind::DimensionOutOfRange, "k must lie in [1, n-1]");
  }
}

inline std::vector<PointCode> meet(const AmbientSpace& space, const PointSet& set, const Subspace& s, Flavor flavor) {
  std::vector<PointCode> out;
  for (PointCode c : subspace_points(space, s, flavor == Flavor::projective)) {
    if (set.contains(c)) out.push_back(c);
  }
  return out;
}

// A subspace S' != S with dim S' = dim S containing span(inside), where
// span(inside) is a proper subspace of S.
inline Subspace other_subspace_containing(const AmbientSpace& space, const Subspace& s, const EchelonBasis& inside) {
  EchelonBasis grow = inside;
  for (const Vector& row : s.rows) {
    if (grow.rank() + 1 >= s.dim()) break;
    grow.add(row);
  }
  for (std::size_t i = 0; i < space.n(); ++i) {
    const Point e = space.unit(i);
    if (!s.contains(space.field(), e)) {
      grow.add(e);
      break;
    }
  }
  return subspace_from_basis(grow);
}

}  // namespace detail

/// B meets every (n-k)-dimensional subspace through the origin.
inline BlockingCheck is_blocking(const AmbientSpace& space, const PointSet& set, std::size_t k,
                                 Flavor flavor = Flavor::vectorial) {
  detail::require_blocking_input(space, set, flavor);
  detail::require_k(space, k);
  BlockingCheck result{true, std::nullopt};
  for_each_subspace(space, space.n() - k, [&](const Subspace& s) {
    for (PointCode c : subspace_points(space, s, flavor == Flavor::projective)) {
      if (set.contains(c)) return true;
    }
    result = {false, s};
    return false;
  });
  return result;
}

inline BlockingCheck is_vectorial_blocking(const AmbientSpace& space, const PointSet& set, std::size_t k) {
  return is_blocking(space, set, k, Flavor::vectorial);
}

/// B cap S spans S for every (n-k)-dimensional S. The pairwise method checks
/// instead that B cap S lies in no other subspace of that dimension; it is
/// quadratic in the number of subspaces and kept as a cross-check.
inline CuttingCheck is_cutting(const AmbientSpace& space, const PointSet& set, std::size_t k, Flavor flavor,
                               CuttingMethod method = CuttingMethod::span) {
  detail::require_blocking_input(space, set, flavor);
  detail::require_k(space, k);
  const std::size_t d = space.n() - k;
  const Field& field = space.field();
  CuttingCheck result{true, std::nullopt};

  if (method == CuttingMethod::span) {
    Point x(space.n());
    for_each_subspace(space, d, [&](const Subspace& s) {
      EchelonBasis basis(field, space.n());
      for (PointCode c : detail::meet(space, set, s, flavor)) {
        space.decode_into(c, x);
        basis.add(x);
        if (basis.rank() == d) return true;
      }
      result = {false, std::make_pair(s, detail::other_subspace_containing(space, s, basis))};
      return false;
    });
    return result;
  }

  const std::vector<Subspace> all = enumerate_subspaces(space, d);
  for (const Subspace& s : all) {
    std::vector<Point> inside;
    for (PointCode c : detail::meet(space, set, s, flavor)) inside.push_back(space.decode(c));
    for (const Subspace& other : all) {
      if (other == s) continue;
      const bool covered = std::all_of(inside.begin(), inside.end(),
                                       [&](const Point& x) { return other.contains(field, x); });
      if (covered) return {false, std::make_pair(s, other)};
    }
  }
  return result;
}

/// B is k-blocking and contains no s-dimensional subspace. In the vectorial
/// flavor s is a vector dimension and the subspace is taken without the
/// origin; in the projective flavor s is a projective dimension.
inline KsCheck is_ks_blocking(const AmbientSpace& space, const PointSet& set, std::size_t k, std::size_t s,
                              Flavor flavor = Flavor::vectorial) {
  const BlockingCheck blocking = is_blocking(space, set, k, flavor);
  const std::size_t dim = flavor == Flavor::vectorial ? s : s + 1;
  if (dim < 1 || dim > space.n()) throw Error(ErrorKind::DimensionOutOfRange, "s outside the ambient space");

  KsCheck result{blocking.holds, blocking.missed, std::nullopt};
  auto inside = [&](const Subspace& sub) {
    for (PointCode c : subspace_points(space, sub, flavor == Flavor::projective)) {
      if (!set.contains(c)) return false;
    }
    return true;
  };
  if (dim == space.n()) {
    Matrix identity;
    for (std::size_t i = 0; i < space.n(); ++i) identity.push_back(space.unit(i));
    const Subspace whole = span_of(space, identity);
    if (inside(whole)) result.contained = whole;
  } else {
    for_each_subspace(space, dim, [&](const Subspace& sub) {
      if (!inside(sub)) return true;
      result.contained = sub;
      return false;
    });
  }
  result.holds = blocking.holds && !result.contained;
  return result;
}

inline BlockingReport analyze_blocking_set(const AmbientSpace& space, const PointSet& set, std::size_t k,
                                           Flavor flavor, bool check_cutting, std::optional<std::size_t> s) {
  BlockingReport report;
  report.flavor = flavor;
  report.k = k;
  report.s = s;
  const BlockingCheck blocking = is_blocking(space, set, k, flavor);
  report.is_blocking = blocking.holds;
  report.missed_subspace = blocking.missed;
  const auto span = static_cast<long>(span_dim(space, set));
  report.set_dimension = flavor == Flavor::vectorial ? span : span - 1;
  if (check_cutting) {
    const CuttingCheck cutting = is_cutting(space, set, k, flavor);
    report.is_cutting = cutting.holds;
    report.failing_subspace_pair = cutting.witness;
  }
  if (s) {
    const KsCheck ks = is_ks_blocking(space, set, k, *s, flavor);
    report.is_ks_blocking = ks.holds;
    report.contains_forbidden_subspace = ks.contained;
  }
  return report;
}

struct ConditionCheck {
  bool holds = false;
  std::optional<Point> failing_v;
};

/// For every v != 0 some x has f(x) != 0 and f(x) + v.x = 0.
inline ConditionCheck condition_b(const Function& f) {
  const AmbientSpace& space = f.space();
  const Field& field = space.field();
  const std::vector<Element> values = f.table();
  std::vector<Point> points(space.size());
  for (PointCode c = 0; c < space.size(); ++c) points[c] = space.decode(c);
  for (PointCode v = 1; v < space.size(); ++v) {
    bool found = false;
    for (PointCode x = 1; x < space.size() && !found; ++x) {
      if (values[x] != 0 && field.add(values[x], dot(field, points[v], points[x])) == 0) found = true;
    }
    if (!found) return {false, points[v]};
  }
  return {true, std::nullopt};
}

/// For every v != 0 some x has v.x != 0 and f(x) != 0, i.e. H(v) cup V(f) is not everything.
inline ConditionCheck condition_c(const Function& f) {
  const AmbientSpace& space = f.space();
  const Field& field = space.field();
  const std::vector<Element> values = f.table();
  std::vector<Point> points(space.size());
  for (PointCode c = 0; c < space.size(); ++c) points[c] = space.decode(c);
  for (PointCode v = 1; v < space.size(); ++v) {
    bool found = false;
    for (PointCode x = 1; x < space.size() && !found; ++x) {
      if (values[x] != 0 && dot(field, points[v], points[x]) != 0) found = true;
    }
    if (!found) return {false, points[v]};
  }
  return {true, std::nullopt};
}

/// Literal search for x != 0 with u f(x) + v.x = 0 and u' f(x) + v'.x != 0
/// for every u, u'. Independent of the span-based cutting check.
inline bool lemma_blocking_oracle(const Function& f, std::span<const Element> v, std::span<const Element> w) {
  const AmbientSpace& space = f.space();
  const Field& field = space.field();
  const Point pv(v.begin(), v.end()), pw(w.begin(), w.end());
  if (std::all_of(pv.begin(), pv.end(), [](Element c) { return c == 0; }) ||
      std::all_of(pw.begin(), pw.end(), [](Element c) { return c == 0; })) {
    throw Error(ErrorKind::ZeroNormal, "hyperplane normal vector is zero");
  }
  if (space.normalize(space.encode(pv)) == space.normalize(space.encode(pw))) {
    throw Error(ErrorKind::SameHyperplane, "H(v) and H(v') coincide");
  }
  const unsigned q = space.q();
  Point x(space.n());
  for (PointCode c = 1; c < space.size(); ++c) {
    space.decode_into(c, x);
    const Element fx = f(x);
    const Element vx = dot(field, pv, x), wx = dot(field, pw, x);
    bool all = true;
    for (Element u = 0; u < q && all; ++u) {
      for (Element u2 = 0; u2 < q && all; ++u2) {
        const bool first_zero = field.add(field.mul(u, fx), vx) == 0;
        const bool second_nonzero = field.add(field.mul(u2, fx), wx) != 0;
        all = first_zero && second_nonzero;
      }
    }
    if (all) return true;
  }
  return false;
}

struct TheoremReport {
  CodeMode mode = CodeMode::affine;
  std::size_t n = 0;
  std::size_t set_size = 0;
  long expected_dimension = 0;
  long dimension = 0;
  bool dimension_ok = false;
  bool blocking = false;
  bool cutting = false;
  /// s = n-1 (vector dimension) or n-2 (projective dimension).
  std::size_t s = 0;
  bool ks_blocking = false;
  bool condition_b = false;
  bool condition_c = false;
  /// All hypotheses hold, so the code of f is minimal.
  bool applies = false;
  std::optional<std::pair<Subspace, Subspace>> cutting_witness;
  std::optional<Subspace> missed_subspace;
  std::optional<Subspace> forbidden_subspace;
  std::optional<Point> condition_b_failure;
  std::optional<Point> condition_c_failure;
};

/// Hypotheses (a) and (b) of the affine or projective main theorem, plus (c).
inline TheoremReport theorem_hypotheses(const Function& f, CodeMode mode) {
  if (mode == CodeMode::generic) throw Error(ErrorKind::InvalidArgument, "theorem needs affine or projective mode");
  const AmbientSpace& space = f.space();
  const bool projective = mode == CodeMode::projective;
  const Flavor flavor = projective ? Flavor::projective : Flavor::vectorial;
  const PointSet set = zero_set(f, projective ? ZeroMode::projective : ZeroMode::affine_star);
  const auto n = static_cast<long>(space.n());

  TheoremReport report;
  report.mode = mode;
  report.n = space.n();
  report.set_size = set.size();
  const auto span = static_cast<long>(span_dim(space, set));
  report.dimension = projective ? span - 1 : span;
  report.expected_dimension = projective ? n - 1 : n;
  report.dimension_ok = report.dimension == report.expected_dimension;

  const CuttingCheck cutting = is_cutting(space, set, 1, flavor);
  report.cutting = cutting.holds;
  report.cutting_witness = cutting.witness;

  report.s = projective ? space.n() - 2 : space.n() - 1;
  const KsCheck ks = is_ks_blocking(space, set, 1, report.s, flavor);
  report.blocking = !ks.missed.has_value();
  report.missed_subspace = ks.missed;
  report.ks_blocking = ks.holds;
  report.forbidden_subspace = ks.contained;

  const ConditionCheck b = condition_b(f);
  report.condition_b = b.holds;
  report.condition_b_failure = b.failing_v;
  const ConditionCheck c = condition_c(f);
  report.condition_c = c.holds;
  report.condition_c_failure = c.failing_v;

  report.applies = report.dimension_ok && report.cutting && report.ks_blocking && report.condition_b;
  return report;
}

}  // namespace mincode

#endif  // MINCODE_BLOCKING_HPP
