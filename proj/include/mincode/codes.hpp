#ifndef MINCODE_CODES_HPP
#define MINCODE_CODES_HPP

// Linear codes C_f and their minimality.
//
// C_f has one column per nonzero point x (affine) or per projective
// representative (projective). Generator row 0 holds f(x); rows 1..n hold the
// coordinates of x, so the codeword with message (u, v) is c(u,v) =
// (u f(x) + v.x)_x. Codewords are enumerated over an independent subset of
// the generator rows; a message index is sum a_i q^i over that basis and a
// scalar class is represented by the message whose first nonzero
// coefficient is 1.

#include <boost/dynamic_bitset.hpp>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mincode/config.hpp"
#include "mincode/error.hpp"
#include "mincode/field.hpp"
#include "mincode/funcspec.hpp"
#include "mincode/geometry.hpp"
#include "mincode/linalg.hpp"

namespace mincode {

using Support = boost::dynamic_bitset<std::uint64_t>;

class LinearCode {
 public:
  static LinearCode from_generator(Field field, Matrix rows, CodeMode mode = CodeMode::generic,
                                   std::size_t n_ambient = 0, std::vector<PointCode> columns = {}) {
    if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "generator matrix has no rows");
    const std::size_t length = rows.front().size();
    for (const Vector& row : rows) {
      if (row.size() != length) throw Error(ErrorKind::InvalidArgument, "generator rows differ in length");
      for (Element e : row) {
        if (!field.contains(e)) throw Error(ErrorKind::InvalidArgument, "generator entry outside the field");
      }
    }
    if (!columns.empty() && columns.size() != length) {
      throw Error(ErrorKind::InvalidArgument, "column labels do not match the code length");
    }
    LinearCode code(std::move(field), std::move(rows), mode, n_ambient, std::move(columns));
    return code;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return generator_.front().size(); }
  std::size_t dim() const noexcept { return basis_rows_.size(); }
  CodeMode mode() const noexcept { return mode_; }
  /// The n of F_q^n for codes of a function; 0 for generic codes.
  std::size_t n_ambient() const noexcept { return n_ambient_; }
  const Matrix& generator_rows() const noexcept { return generator_; }
  /// Indices of the generator rows used as the enumeration basis.
  const std::vector<std::size_t>& basis_rows() const noexcept { return basis_rows_; }
  /// Point encodings labelling the columns (empty for generic codes).
  const std::vector<PointCode>& columns() const noexcept { return columns_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  Matrix basis() const {
    Matrix out;
    for (std::size_t i : basis_rows_) out.push_back(generator_[i]);
    return out;
  }

  /// #zeros of generator row 0, i.e. #V(f)* or #V_p(f), for codes of a function.
  std::optional<std::uint64_t> zero_count() const {
    if (mode_ == CodeMode::generic) return std::nullopt;
    std::uint64_t zeros = 0;
    for (Element e : generator_.front()) zeros += (e == 0);
    return zeros;
  }

  /// Column j of the result is column perm[j] of this code.
  LinearCode permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != length()) throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
    std::vector<bool> seen(length(), false);
    for (std::size_t p : perm) {
      if (p >= length() || seen[p]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
      seen[p] = true;
    }
    Matrix rows = generator_;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t j = 0; j < perm.size(); ++j) rows[r][j] = generator_[r][perm[j]];
    }
    std::vector<PointCode> cols;
    for (std::size_t p : perm) {
      if (!columns_.empty()) cols.push_back(columns_[p]);
    }
    return LinearCode(field_, std::move(rows), mode_, n_ambient_, std::move(cols));
  }

 private:
  LinearCode(Field field, Matrix rows, CodeMode mode, std::size_t n_ambient, std::vector<PointCode> columns)
      : field_(std::move(field)),
        generator_(std::move(rows)),
        mode_(mode),
        n_ambient_(n_ambient),
        columns_(std::move(columns)) {
    basis_rows_ = independent_rows(field_, generator_);
    if (basis_rows_.size() < generator_.size()) {
      warnings_.push_back("DegenerateDimension: generator rows span dimension " + std::to_string(basis_rows_.size()) +
                          " < " + std::to_string(generator_.size()));
    }
  }

  Field field_;
  Matrix generator_;
  CodeMode mode_;
  std::size_t n_ambient_;
  std::vector<PointCode> columns_;
  std::vector<std::size_t> basis_rows_;
  std::vector<std::string> warnings_;
};

namespace detail {

inline LinearCode build_function_code(const Function& f, CodeMode mode, const Budgets& budgets) {
  const AmbientSpace& space = f.space();
  if (space.size() > budgets.enumeration_cap) {
    throw Error(ErrorKind::EnumerationCap, "q^n = " + std::to_string(space.size()) + " exceeds the enumeration cap " +
                                               std::to_string(budgets.enumeration_cap));
  }
  if (mode == CodeMode::projective && !scalar_compatible(f)) {
    throw Error(ErrorKind::NotScalarCompatible, f.name() + " is not compatible with scaling");
  }
  std::vector<PointCode> columns =
      mode == CodeMode::projective ? enumerate_projective_points(space) : enumerate_affine_points(space);
  Matrix rows(space.n() + 1, Vector(columns.size(), 0));
  Point x(space.n());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    space.decode_into(columns[j], x);
    rows[0][j] = f(x);
    for (std::size_t i = 0; i < space.n(); ++i) rows[i + 1][j] = x[i];
  }
  return LinearCode::from_generator(space.field(), std::move(rows), mode, space.n(), std::move(columns));
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t codeword_count(const LinearCode& code) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dim(); ++i) total = saturating_mul(total, code.field().order());
  return total;
}

inline bool is_class_representative(std::uint64_t index, unsigned q) {
  if (index == 0) return false;
  while (index % q == 0) index /= q;
  return index % q == 1;
}

inline std::vector<std::uint64_t> class_representatives(const LinearCode& code) {
  std::vector<std::uint64_t> reps;
  const std::uint64_t total = codeword_count(code);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    if (is_class_representative(idx, code.field().order())) reps.push_back(idx);
  }
  return reps;
}

/// Visits every codeword in increasing message index, updating the value
/// vector by one scaled row addition per changed digit. Digits are element
/// codes, so moving from d to d+1 adds (d+1 - d) times the row, which is
/// not the row itself outside prime fields.
template <class Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn) {
  const Field& field = code.field();
  const unsigned q = field.order();
  const Matrix basis = code.basis();
  const std::size_t dim = basis.size(), length = code.length();
  std::vector<Element> step(q);
  for (Element d = 0; d < q; ++d) step[d] = field.sub((d + 1) % q, d);
  std::vector<Element> digits(dim, 0);
  Vector values(length, 0);
  const std::uint64_t total = codeword_count(code);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(idx, static_cast<const Vector&>(values));
    for (std::size_t i = 0; i < dim; ++i) {
      const Vector& row = basis[i];
      const Element a = step[digits[i]];
      for (std::size_t j = 0; j < length; ++j) {
        if (row[j] != 0) values[j] = field.add(values[j], field.mul(a, row[j]));
      }
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
}

inline void require_weight_budget(const LinearCode& code, const Budgets& budgets) {
  const std::uint64_t work = saturating_mul(codeword_count(code), code.length());
  if (work > budgets.weight_work) {
    throw Error(ErrorKind::BudgetExceeded,
                "enumerating q^dim x length = " + std::to_string(work) + " exceeds weight_work budget");
  }
}

inline void require_pair_budget(const LinearCode& code, std::uint64_t classes, const Budgets& budgets) {
  const std::uint64_t work = saturating_mul(saturating_mul(classes, classes), code.length());
  if (work > budgets.pair_compares) {
    throw Error(ErrorKind::BudgetExceeded,
                "pairwise check needs " + std::to_string(work) + " column compares, over the pair_compares budget");
  }
}

inline std::vector<Element> digits_of(std::uint64_t index, std::size_t dim, unsigned q) {
  std::vector<Element> d(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    d[i] = static_cast<Element>(index % q);
    index /= q;
  }
  return d;
}

}  // namespace detail

/// C_f over F_q^n minus the origin.
inline LinearCode build_affine_code(const Function& f, const Budgets& budgets = {}) {
  return detail::build_function_code(f, CodeMode::affine, budgets);
}

/// C~_f over projective representatives; f must be scalar compatible.
inline LinearCode build_projective_code(const Function& f, const Budgets& budgets = {}) {
  return detail::build_function_code(f, CodeMode::projective, budgets);
}

struct Codeword {
  /// Coefficients over the generator rows: (u, v_1, ..., v_n) for codes of a function.
  Vector message;
  Vector values;
  std::size_t weight = 0;
  Support support;

  Element u() const { return message.at(0); }
  Point v() const { return Point(message.begin() + 1, message.end()); }
};

inline Codeword codeword(const LinearCode& code, std::span<const Element> message) {
  const Matrix& rows = code.generator_rows();
  if (message.size() != rows.size()) throw Error(ErrorKind::InvalidArgument, "message length mismatch");
  const Field& field = code.field();
  Codeword c;
  c.message.assign(message.begin(), message.end());
  c.values.assign(code.length(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < code.length(); ++j) {
      if (rows[i][j] != 0) c.values[j] = field.add(c.values[j], field.mul(message[i], rows[i][j]));
    }
  }
  c.support.resize(code.length());
  for (std::size_t j = 0; j < code.length(); ++j) {
    if (c.values[j] != 0) c.support.set(j);
  }
  c.weight = c.support.count();
  return c;
}

/// c(u, v) for a code of a function.
inline Codeword codeword(const LinearCode& code, Element u, std::span<const Element> v) {
  if (code.mode() == CodeMode::generic || v.size() != code.n_ambient()) {
    throw Error(ErrorKind::InvalidArgument, "c(u,v) needs a code of a function and |v| = n");
  }
  Vector message{u};
  message.insert(message.end(), v.begin(), v.end());
  return codeword(code, message);
}

/// Message over the generator rows for an enumeration index.
inline Vector message_of(const LinearCode& code, std::uint64_t index) {
  Vector message(code.generator_rows().size(), 0);
  const auto digits = detail::digits_of(index, code.dim(), code.field().order());
  for (std::size_t i = 0; i < code.dim(); ++i) message[code.basis_rows()[i]] = digits[i];
  return message;
}

/// Weight of every codeword, indexed by message index.
inline std::vector<std::uint32_t> codeword_weights(const LinearCode& code, const Budgets& budgets = {}) {
  detail::require_weight_budget(code, budgets);
  std::vector<std::uint32_t> weights(detail::codeword_count(code));
  detail::for_each_codeword(code, [&](std::uint64_t idx, const Vector& values) {
    std::uint32_t w = 0;
    for (Element e : values) w += (e != 0);
    weights[idx] = w;
  });
  return weights;
}

/// weight -> number of codewords, the zero word included.
inline std::map<std::size_t, std::uint64_t> weight_distribution(const LinearCode& code, const Budgets& budgets = {}) {
  std::map<std::size_t, std::uint64_t> dist;
  for (std::uint32_t w : codeword_weights(code, budgets)) ++dist[w];
  return dist;
}

enum class MinimalityMethod { brute, hdz, theorem };

inline std::string to_string(MinimalityMethod m) {
  switch (m) {
    case MinimalityMethod::brute: return "brute";
    case MinimalityMethod::hdz: return "hdz";
    case MinimalityMethod::theorem: return "theorem";
  }
  return "brute";
}

/// Messages of two independent codewords with supp(covered) inside supp(covering).
struct CoveringWitness {
  Vector covering;
  Vector covered;
  std::size_t covering_weight = 0;
  std::size_t covered_weight = 0;
};

/// Messages of independent codewords c, c' with
/// sum_{a != 0} wt(c' - a c) == (q-1) wt(c') - wt(c).
struct HdzWitness {
  Vector c;
  Vector c_prime;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct MinimalityReport {
  bool minimal = false;
  /// False when the method could not decide (theorem hypotheses not met).
  bool conclusive = true;
  MinimalityMethod method = MinimalityMethod::brute;
  std::optional<CoveringWitness> covering;
  std::optional<HdzWitness> hdz;
};

namespace detail {

inline std::vector<Support> representative_supports(const LinearCode& code, const std::vector<std::uint64_t>& reps) {
  std::vector<Support> supports;
  supports.reserve(reps.size());
  std::size_t next = 0;
  for_each_codeword(code, [&](std::uint64_t idx, const Vector& values) {
    if (next < reps.size() && reps[next] == idx) {
      Support s(values.size());
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (values[j] != 0) s.set(j);
      }
      supports.push_back(std::move(s));
      ++next;
    }
  });
  return supports;
}

}  // namespace detail

/// Compares the supports of every ordered pair of distinct scalar classes.
/// Containment, equality included, of one support in another falsifies
/// minimality. Reports the first pair (covering, covered) in index order.
inline MinimalityReport is_minimal_bruteforce(const LinearCode& code, const Budgets& budgets = {}) {
  MinimalityReport report;
  report.method = MinimalityMethod::brute;
  const std::vector<std::uint64_t> reps = detail::class_representatives(code);
  detail::require_pair_budget(code, reps.size(), budgets);
  detail::require_weight_budget(code, budgets);
  const std::vector<Support> supports = detail::representative_supports(code, reps);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i == j || !supports[j].is_subset_of(supports[i])) continue;
      report.minimal = false;
      report.covering = CoveringWitness{message_of(code, reps[i]), message_of(code, reps[j]), supports[i].count(),
                                        supports[j].count()};
      return report;
    }
  }
  report.minimal = true;
  return report;
}

/// Evaluates the weight identity for every ordered pair of distinct scalar
/// classes using the weight table only; no supports are compared.
inline MinimalityReport is_minimal_hdz(const LinearCode& code, const Budgets& budgets = {}) {
  MinimalityReport report;
  report.method = MinimalityMethod::hdz;
  const Field& field = code.field();
  const unsigned q = field.order();
  const std::size_t dim = code.dim();
  const std::vector<std::uint64_t> reps = detail::class_representatives(code);
  detail::require_pair_budget(code, reps.size(), budgets);
  const std::vector<std::uint32_t> weights = codeword_weights(code, budgets);

  std::vector<std::vector<Element>> digits;
  digits.reserve(reps.size());
  for (std::uint64_t idx : reps) digits.push_back(detail::digits_of(idx, dim, q));

  auto index_of = [&](const std::vector<Element>& d) {
    std::uint64_t idx = 0;
    for (std::size_t i = dim; i-- > 0;) idx = idx * q + d[i];
    return idx;
  };

  std::vector<Element> diff(dim);
  for (std::size_t i = 0; i < reps.size(); ++i) {      // c
    for (std::size_t j = 0; j < reps.size(); ++j) {    // c'
      if (i == j) continue;
      std::int64_t lhs = 0;
      for (Element a = 1; a < q; ++a) {
        for (std::size_t t = 0; t < dim; ++t) diff[t] = field.sub(digits[j][t], field.mul(a, digits[i][t]));
        lhs += weights[index_of(diff)];
      }
      const std::int64_t rhs =
          static_cast<std::int64_t>(q - 1) * weights[reps[j]] - static_cast<std::int64_t>(weights[reps[i]]);
      if (lhs == rhs) {
        report.minimal = false;
        report.hdz = HdzWitness{message_of(code, reps[i]), message_of(code, reps[j]), lhs, rhs};
        return report;
      }
    }
  }
  report.minimal = true;
  return report;
}

/// One codeword per scalar class whose support contains no other class's support.
inline std::vector<Codeword> minimal_codewords(const LinearCode& code, const Budgets& budgets = {}) {
  std::vector<Codeword> out;
  if (code.dim() == 0) return out;
  const std::vector<std::uint64_t> reps = detail::class_representatives(code);
  detail::require_pair_budget(code, reps.size(), budgets);
  detail::require_weight_budget(code, budgets);
  const std::vector<Support> supports = detail::representative_supports(code, reps);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < reps.size() && minimal; ++j) {
      if (i != j && supports[j].is_subset_of(supports[i])) minimal = false;
    }
    if (minimal) out.push_back(codeword(code, message_of(code, reps[i])));
  }
  return out;
}

struct ABReport {
  std::size_t w_min = 0;
  std::size_t w_max = 0;
  /// w_max (q-1) < w_min q
  bool satisfies_ab = false;
  std::optional<std::uint64_t> zero_count;
  std::optional<std::uint64_t> zero_threshold;
  bool zero_count_threshold_hit = false;
};

/// 2q^(n-1) - q^(n-2) - 1 (affine), divided by q-1 (projective). Exact: q = 1 mod q-1.
inline std::uint64_t ab_zero_threshold(std::uint64_t q, std::size_t n, CodeMode mode) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "zero-count threshold needs n >= 2");
  const std::uint64_t t = 2 * checked_pow(q, n - 1) - checked_pow(q, n - 2) - 1;
  return mode == CodeMode::projective ? t / (q - 1) : t;
}

struct RThreshold {
  double value = 0;
  std::uint64_t min_r = 0;
};

/// 2 + log_{1-1/q}((q - sqrt q)/(q - 1)) and the least integer r >= it.
inline RThreshold ab_r_threshold(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "r threshold needs q >= 2");
  const double qd = static_cast<double>(q);
  const double value = 2.0 + std::log((qd - std::sqrt(qd)) / (qd - 1.0)) / std::log(1.0 - 1.0 / qd);
  const double nearest = std::round(value);
  const double r = std::fabs(value - nearest) < 1e-9 ? nearest : std::ceil(value);
  return {value, static_cast<std::uint64_t>(r)};
}

inline ABReport ab_check(const LinearCode& code, const Budgets& budgets = {}) {
  if (code.dim() == 0) throw Error(ErrorKind::InvalidArgument, "AB check needs a nonzero code");
  ABReport report;
  const std::vector<std::uint32_t> weights = codeword_weights(code, budgets);
  report.w_min = code.length();
  report.w_max = 0;
  for (std::size_t idx = 1; idx < weights.size(); ++idx) {
    report.w_min = std::min<std::size_t>(report.w_min, weights[idx]);
    report.w_max = std::max<std::size_t>(report.w_max, weights[idx]);
  }
  const std::uint64_t q = code.field().order();
  report.satisfies_ab = report.w_max * (q - 1) < report.w_min * q;
  report.zero_count = code.zero_count();
  if (report.zero_count && code.n_ambient() >= 2) {
    report.zero_threshold = ab_zero_threshold(q, code.n_ambient(), code.mode());
    report.zero_count_threshold_hit = *report.zero_count >= *report.zero_threshold;
  }
  return report;
}

}  // namespace mincode

#endif  // MINCODE_CODES_HPP
