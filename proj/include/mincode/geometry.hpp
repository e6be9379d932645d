#ifndef MINCODE_GEOMETRY_HPP
#define MINCODE_GEOMETRY_HPP

// Points, hyperplanes and subspaces through the origin of F_q^n.
//
// A point x = (x_1, ..., x_n) is encoded as sum code(x_i) * q^(i-1), so x_1
// is the least significant digit. Every enumeration in this header returns
// points in increasing encoding order. Projective points are represented
// by the vector whose first nonzero coordinate is 1.

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mincode/error.hpp"
#include "mincode/field.hpp"
#include "mincode/linalg.hpp"

namespace mincode {

using PointCode = std::uint64_t;
using Point = std::vector<Element>;

class AmbientSpace {
 public:
  /// Hard ceiling on q^n for any space object; enumeration budgets are lower.
  static constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 40;

  AmbientSpace(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
    if (n_ < 1) throw Error(ErrorKind::DimensionOutOfRange, "ambient dimension must be at least 1");
    size_ = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      size_ *= field_.order();
      if (size_ > kMaxPoints) {
        throw Error(ErrorKind::EnumerationCap, "q^n exceeds " + std::to_string(kMaxPoints));
      }
    }
  }

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  unsigned q() const noexcept { return field_.order(); }

  /// q^n, origin included.
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t projective_size() const noexcept { return (size_ - 1) / (q() - 1); }

  PointCode encode(std::span<const Element> x) const {
    PointCode code = 0;
    for (std::size_t i = n_; i-- > 0;) code = code * q() + x[i];
    return code;
  }

  void decode_into(PointCode code, std::span<Element> out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = static_cast<Element>(code % q());
      code /= q();
    }
  }

  Point decode(PointCode code) const {
    Point x(n_);
    decode_into(code, x);
    return x;
  }

  Point unit(std::size_t i) const {
    Point e(n_, 0);
    e[i] = 1;
    return e;
  }

  /// Scales x so its first nonzero coordinate is 1; the origin maps to itself.
  PointCode normalize(PointCode code) const {
    Point x = decode(code);
    auto lead = std::find_if(x.begin(), x.end(), [](Element c) { return c != 0; });
    if (lead == x.end() || *lead == 1) return code;
    const Element s = field_.inv(*lead);
    for (Element& c : x) c = field_.mul(c, s);
    return encode(x);
  }

  bool is_projective_representative(PointCode code) const {
    return code != 0 && normalize(code) == code;
  }

  friend bool operator==(const AmbientSpace& a, const AmbientSpace& b) {
    return a.n_ == b.n_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::size_t n_;
  std::uint64_t size_;
};

/// Membership bitmap over point encodings [0, q^n).
class PointSet {
 public:
  explicit PointSet(std::uint64_t universe) : bits_(universe) {}

  void insert(PointCode x) { bits_.set(x); }
  void erase(PointCode x) { bits_.reset(x); }
  bool contains(PointCode x) const { return x < bits_.size() && bits_.test(x); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::uint64_t universe() const { return bits_.size(); }

  bool is_subset_of(const PointSet& other) const { return bits_.is_subset_of(other.bits_); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) fn(static_cast<PointCode>(i));
  }

  std::vector<PointCode> members() const {
    std::vector<PointCode> out;
    out.reserve(size());
    for_each([&](PointCode x) { out.push_back(x); });
    return out;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

inline Element dot(const Field& field, std::span<const Element> u, std::span<const Element> v) {
  Element s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0 && v[i] != 0) s = field.add(s, field.mul(u[i], v[i]));
  }
  return s;
}

/// F_q^n minus the origin, increasing encoding.
inline std::vector<PointCode> enumerate_affine_points(const AmbientSpace& space) {
  std::vector<PointCode> pts(space.size() - 1);
  for (PointCode x = 1; x < space.size(); ++x) pts[x - 1] = x;
  return pts;
}

/// One normalized representative per 1-dimensional subspace, increasing encoding.
inline std::vector<PointCode> enumerate_projective_points(const AmbientSpace& space) {
  std::vector<PointCode> pts;
  pts.reserve(space.projective_size());
  // The first nonzero coordinate of x is its lowest nonzero base-q digit.
  const unsigned q = space.q();
  for (PointCode x = 1; x < space.size(); ++x) {
    PointCode rest = x;
    while (rest % q == 0) rest /= q;
    if (rest % q == 1) pts.push_back(x);
  }
  return pts;
}

/// H(v) = {x : v.x = 0}, with or without the origin.
inline PointSet hyperplane_points(const AmbientSpace& space, std::span<const Element> v, bool include_origin) {
  if (std::all_of(v.begin(), v.end(), [](Element c) { return c == 0; })) {
    throw Error(ErrorKind::ZeroNormal, "hyperplane normal vector is zero");
  }
  PointSet h(space.size());
  Point x(space.n());
  for (PointCode code = include_origin ? 0 : 1; code < space.size(); ++code) {
    space.decode_into(code, x);
    if (dot(space.field(), v, x) == 0) h.insert(code);
  }
  return h;
}

/// A subspace through the origin held by its canonical reduced row-echelon basis.
struct Subspace {
  Matrix rows;
  std::vector<std::size_t> pivots;

  std::size_t dim() const noexcept { return rows.size(); }

  bool contains(const Field& field, std::span<const Element> x) const {
    // x lies in the row space iff it equals its pivot-coordinate combination.
    Vector r(x.begin(), x.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Element c = r[pivots[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (rows[i][j] != 0) r[j] = field.sub(r[j], field.mul(c, rows[i][j]));
      }
    }
    return std::all_of(r.begin(), r.end(), [](Element e) { return e == 0; });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows == b.rows; }
};

inline Subspace subspace_from_basis(const EchelonBasis& basis) {
  return Subspace{basis.rows(), basis.pivots()};
}

/// Canonical basis of span(vectors).
inline Subspace span_of(const AmbientSpace& space, const Matrix& vectors) {
  EchelonBasis basis(space.field(), space.n());
  for (const Vector& v : vectors) basis.add(v);
  return subspace_from_basis(basis);
}

/// Points of S by coefficient combinations of its rows. With projective_reps
/// only combinations whose first nonzero coefficient is 1 are produced; these
/// are exactly the normalized representatives because the rows are in RREF.
inline std::vector<PointCode> subspace_points(const AmbientSpace& space, const Subspace& s, bool projective_reps,
                                              bool include_origin = false) {
  const Field& f = space.field();
  const unsigned q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) total *= q;
  std::vector<PointCode> out;
  Vector coeff(s.dim(), 0);
  Point x(space.n());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    bool leading_seen = false, keep = true;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      coeff[i] = static_cast<Element>(rest % q);
      rest /= q;
      if (!leading_seen && coeff[i] != 0) {
        leading_seen = true;
        if (projective_reps && coeff[i] != 1) keep = false;
      }
    }
    if (!leading_seen && !include_origin) continue;
    if (!keep) continue;
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t j = 0; j < space.n(); ++j) {
        if (s.rows[i][j] != 0) x[j] = f.add(x[j], f.mul(coeff[i], s.rows[i][j]));
      }
    }
    out.push_back(space.encode(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw Error(ErrorKind::EnumerationCap, "integer overflow in power");
    r *= base;
  }
  return r;
}

/// Number of d-dimensional subspaces of F_q^n.
inline std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t d) {
  if (d > n) return 0;
  // prod_{i<d} (q^(n-i) - 1) / (q^(i+1) - 1), kept exact by dividing at each step
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    num *= checked_pow(q, n - i) - 1;
    den *= checked_pow(q, i + 1) - 1;
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

/// Calls fn(Subspace) for every d-dimensional subspace in canonical order:
/// pivot-column sets in lexicographic order, then free entries counted
/// with the earliest (row, column) position least significant. Stops early
/// when fn returns false.
template <class Fn>
void for_each_subspace(const AmbientSpace& space, std::size_t d, Fn&& fn) {
  const std::size_t n = space.n();
  if (d < 1 || d + 1 > n) {
    throw Error(ErrorKind::DimensionOutOfRange,
                "subspace dimension " + std::to_string(d) + " outside [1, " + std::to_string(n - 1) + "]");
  }
  const unsigned q = space.q();
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = piv[i] + 1; j < n; ++j) {
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.emplace_back(i, j);
      }
    }
    const std::uint64_t count = checked_pow(q, free.size());
    Subspace s;
    s.pivots = piv;
    s.rows.assign(d, Vector(n, 0));
    for (std::size_t i = 0; i < d; ++i) s.rows[i][piv[i]] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (const auto& [i, j] : free) {
        s.rows[i][j] = static_cast<Element>(rest % q);
        rest /= q;
      }
      if (!fn(static_cast<const Subspace&>(s))) return;
    }
    // next pivot combination: bump the rightmost pivot that can still move
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
    if (i == 0) return;
    ++piv[--i];
    for (std::size_t j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

inline std::vector<Subspace> enumerate_subspaces(const AmbientSpace& space, std::size_t d) {
  std::vector<Subspace> out;
  for_each_subspace(space, d, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

/// Rank of the listed vectors.
template <class Range>
std::size_t span_dim(const AmbientSpace& space, const Range& codes) {
  EchelonBasis basis(space.field(), space.n());
  Point x(space.n());
  for (PointCode c : codes) {
    space.decode_into(c, x);
    basis.add(x);
    if (basis.rank() == space.n()) break;
  }
  return basis.rank();
}

inline std::size_t span_dim(const AmbientSpace& space, const PointSet& set) {
  return span_dim(space, set.members());
}

}  // namespace mincode

#endif  // MINCODE_GEOMETRY_HPP
