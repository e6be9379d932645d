#ifndef MINCODE_SURVEY_HPP
#define MINCODE_SURVEY_HPP

// Parameter sweep over the family f_{r,k}: for each r in a range, the code
// parameters, the zero count, whether the minimality theorem applies, a
// brute-force minimality verdict and the AB verdict. Every row records where
// each verdict came from, so budget overruns degrade visibly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincode/blocking.hpp"
#include "mincode/codes.hpp"
#include "mincode/config.hpp"
#include "mincode/funcspec.hpp"

namespace mincode {

struct SurveyRow {
  std::uint64_t q = 0;
  std::size_t r = 0;
  std::size_t k = 0;
  CodeMode mode = CodeMode::affine;
  std::uint64_t length = 0;
  std::size_t dim = 0;
  /// #V(f)* (affine) or #V_p(f) (projective) from the closed form
  std::uint64_t zero_count = 0;
  std::optional<std::uint64_t> zero_count_bruteforce;
  std::uint64_t zero_threshold = 0;
  bool zero_threshold_hit = false;
  bool theorem_applies = false;
  /// "checked": hypotheses certified exhaustively; "closed_form": r >= 2 and k >= 2
  std::string theorem_source;
  std::optional<bool> minimal_verified;
  std::optional<bool> ab_satisfied;
  /// "weights", "threshold" or "unknown"
  std::string ab_source;
  std::optional<std::size_t> w_min;
  std::optional<std::size_t> w_max;
};

/// Zeros of f_{r,k} counted by evaluation, origin included.
inline std::uint64_t count_zeros_bruteforce(const Function& f) {
  const AmbientSpace& space = f.space();
  std::uint64_t zeros = 0;
  Point x(space.n());
  for (PointCode c = 0; c < space.size(); ++c) {
    space.decode_into(c, x);
    zeros += (f(x) == 0);
  }
  return zeros;
}

inline SurveyRow survey_row(const Field& field, std::size_t r, std::size_t k, CodeMode mode, const Budgets& budgets) {
  SurveyRow row;
  row.q = field.order();
  row.r = r;
  row.k = k;
  row.mode = mode;
  const std::size_t n = r * k;
  const std::uint64_t q = row.q;
  const bool projective = mode == CodeMode::projective;
  const std::uint64_t points = checked_pow(q, n);
  row.length = projective ? (points - 1) / (q - 1) : points - 1;

  const std::uint64_t with_origin = cardinality_formula(q, r, k);
  row.zero_count = projective ? (with_origin - 1) / (q - 1) : with_origin - 1;
  row.zero_threshold = ab_zero_threshold(q, n, mode);
  row.zero_threshold_hit = row.zero_count >= row.zero_threshold;

  const Function f = Function::monomial_blocks(field, r, k);
  if (points <= budgets.zero_count_cap) {
    const std::uint64_t brute = count_zeros_bruteforce(f);
    row.zero_count_bruteforce = projective ? (brute - 1) / (q - 1) : brute - 1;
  }

  const std::uint64_t hyperplanes = (points - 1) / (q - 1);
  const bool certify = points <= budgets.enumeration_cap &&
                       detail::saturating_mul(hyperplanes, points / q) <= budgets.hypothesis_work;
  if (certify) {
    row.theorem_applies = theorem_hypotheses(f, mode).applies;
    row.theorem_source = "checked";
  } else {
    row.theorem_applies = r >= 2 && k >= 2;
    row.theorem_source = "closed_form";
  }

  // f_{r,k} is linear exactly when r = 1
  row.dim = r >= 2 ? n + 1 : n;
  row.ab_source = "unknown";
  if (points <= budgets.enumeration_cap) {
    const LinearCode code = projective ? build_projective_code(f, budgets) : build_affine_code(f, budgets);
    row.dim = code.dim();
    try {
      const ABReport ab = ab_check(code, budgets);
      row.ab_satisfied = ab.satisfies_ab;
      row.ab_source = "weights";
      row.w_min = ab.w_min;
      row.w_max = ab.w_max;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
    }
    try {
      row.minimal_verified = is_minimal_bruteforce(code, budgets).minimal;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
    }
  }
  if (!row.ab_satisfied.has_value() && row.zero_threshold_hit) {
    row.ab_satisfied = false;
    row.ab_source = "threshold";
  }
  return row;
}

inline std::vector<SurveyRow> survey(const Field& field, std::size_t r_lo, std::size_t r_hi, std::size_t k,
                                     CodeMode mode, const Budgets& budgets = {}) {
  if (r_lo < 1 || r_lo > r_hi) throw Error(ErrorKind::InvalidArgument, "empty r range");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  if (r_lo * k < 2) throw Error(ErrorKind::InvalidArgument, "survey rows need n = r*k >= 2");
  if (mode == CodeMode::generic) throw Error(ErrorKind::InvalidArgument, "survey needs affine or projective mode");
  std::vector<SurveyRow> rows;
  for (std::size_t r = r_lo; r <= r_hi; ++r) rows.push_back(survey_row(field, r, k, mode, budgets));
  return rows;
}

}  // namespace mincode

#endif  // MINCODE_SURVEY_HPP
