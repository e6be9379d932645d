#ifndef MINCODE_LINALG_HPP
#define MINCODE_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mincode/field.hpp"

namespace mincode {

using Vector = std::vector<Element>;
using Matrix = std::vector<Vector>;

/// Reduced row-echelon basis of a growing span. Rows keep leading entry 1
/// and zeros in every other row's pivot column.
class EchelonBasis {
 public:
  EchelonBasis(const Field& field, std::size_t width) : field_(&field), width_(width) {}

  /// Reduces v against the basis; returns the residue (zero iff v is in the span).
  Vector reduce(std::span<const Element> v) const {
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element c = r[pivots_[i]];
      if (c == 0) continue;
      const Vector& row = rows_[i];
      for (std::size_t j = pivots_[i]; j < width_; ++j) {
        if (row[j] != 0) r[j] = field_->sub(r[j], field_->mul(c, row[j]));
      }
    }
    return r;
  }

  bool contains(std::span<const Element> v) const {
    const Vector r = reduce(v);
    for (Element x : r) {
      if (x != 0) return false;
    }
    return true;
  }

  /// Adds v to the span; returns true iff the rank grew.
  bool add(std::span<const Element> v) {
    Vector r = reduce(v);
    std::size_t pivot = 0;
    while (pivot < width_ && r[pivot] == 0) ++pivot;
    if (pivot == width_) return false;
    const Element scale = field_->inv(r[pivot]);
    for (std::size_t j = pivot; j < width_; ++j) r[j] = field_->mul(r[j], scale);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element c = rows_[i][pivot];
      if (c == 0) continue;
      for (std::size_t j = pivot; j < width_; ++j) {
        if (r[j] != 0) rows_[i][j] = field_->sub(rows_[i][j], field_->mul(c, r[j]));
      }
    }
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }
  const Matrix& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

 private:
  const Field* field_;
  std::size_t width_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const Field& field, const Matrix& rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(field, rows.front().size());
  for (const Vector& row : rows) {
    basis.add(row);
    if (basis.rank() == basis.width()) break;
  }
  return basis.rank();
}

/// Indices of a maximal independent subset of rows, chosen greedily in order.
inline std::vector<std::size_t> independent_rows(const Field& field, const Matrix& rows) {
  std::vector<std::size_t> chosen;
  if (rows.empty()) return chosen;
  EchelonBasis basis(field, rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (basis.add(rows[i])) chosen.push_back(i);
  }
  return chosen;
}

}  // namespace mincode

#endif  // MINCODE_LINALG_HPP
