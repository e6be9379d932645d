#ifndef MINCODE_REPRO_HPP
#define MINCODE_REPRO_HPP

// The acceptance suite: eight end-to-end checks of the code families, the
// minimality checkers, the blocking-set certification and the AB analysis.
// Shared by the `repro` command and the acceptance test binary.

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mincode/blocking.hpp"
#include "mincode/codes.hpp"
#include "mincode/funcspec.hpp"
#include "mincode/survey.hpp"

namespace mincode {

struct AcceptanceResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

namespace detail {

// Collects failed expectations with a short message each.
struct Checker {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  bool expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
    return ok;
  }
};

inline std::string join_failures(const Checker& c) {
  std::string out;
  for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) out += (i ? "; " : "") + c.failures[i];
  if (c.failures.size() > 5) out += "; ... " + std::to_string(c.failures.size() - 5) + " more";
  return out;
}

inline std::string params(const LinearCode& code) {
  return "[" + std::to_string(code.length()) + "," + std::to_string(code.dim()) + "]";
}

// 2 + t with (1 - 1/q)^t = (q - sqrt q)/(q - 1), t by bisection; no logarithms.
inline double r_threshold_by_bisection(double q) {
  const double target = (q - std::sqrt(q)) / (q - 1.0);
  double lo = 0, hi = 64;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    if (std::pow(1.0 - 1.0 / q, mid) > target) lo = mid;
    else hi = mid;
  }
  return 2 + (lo + hi) / 2;
}

inline LinearCode random_small_code(std::mt19937_64& rng) {
  const unsigned q = rng() % 2 ? 3 : 2;
  const std::size_t length = 2 + rng() % 11;
  const std::size_t dim = 1 + rng() % 4;
  const double density = rng() % 2 ? 0.8 : 0.3;
  std::bernoulli_distribution nonzero(density);
  Matrix rows(dim, Vector(length));
  for (auto& row : rows)
    for (auto& e : row) e = nonzero(rng) ? static_cast<Element>(1 + rng() % (q - 1)) : 0;
  return LinearCode::from_generator(Field::make(q), rows);
}

inline Function random_table_function(const AmbientSpace& space, std::mt19937_64& rng, double zero_share) {
  std::bernoulli_distribution zero(zero_share);
  std::vector<Element> values(space.size());
  for (auto& e : values) e = zero(rng) ? 0 : static_cast<Element>(1 + rng() % (space.q() - 1));
  return Function::dense(space, values);
}

inline bool weight_laws_hold(const Function& f, const LinearCode& code, Checker& chk) {
  const AmbientSpace& space = f.space();
  const std::uint64_t q = space.q();
  const bool projective = code.mode() == CodeMode::projective;
  const std::uint64_t all = space.size(), hyper = all / q;
  const std::uint64_t simplex = projective ? (all - hyper) / (q - 1) : all - hyper;
  const std::uint64_t zeros = zero_set(f, projective ? ZeroMode::projective : ZeroMode::affine_star).size();
  bool ok = true;
  Point v(space.n());
  for (PointCode c = 1; c < space.size(); ++c) {
    space.decode_into(c, v);
    if (codeword(code, 0, v).weight != simplex) {
      ok = chk.expect(false, f.name() + ": wt(c(0,v)) != " + std::to_string(simplex));
      break;
    }
  }
  const Point origin(space.n(), 0);
  for (Element u = 1; u < q; ++u) {
    if (codeword(code, u, origin).weight != code.length() - zeros) {
      ok = chk.expect(false, f.name() + ": wt(c(u,0)) != length - zeros");
      break;
    }
  }
  chk.expect(true, "");
  return ok;
}

}  // namespace detail

inline AcceptanceResult acceptance_parameters() {
  detail::Checker chk;
  struct Case {
    unsigned q;
    std::size_t r, k;
    bool projective;
    std::size_t length, dim;
  };
  std::string detail;
  for (const Case& c : {Case{2, 2, 2, false, 15, 5}, Case{2, 3, 2, false, 63, 7}, Case{3, 2, 2, true, 40, 5}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Function f = Function::monomial_blocks(Field::make(c.q), c.r, c.k);
    const LinearCode code = c.projective ? build_projective_code(f) : build_affine_code(f);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string label = std::string(c.projective ? "projective " : "") + f.name() + " q=" + std::to_string(c.q);
    chk.expect(code.length() == c.length && code.dim() == c.dim, label + " gave " + detail::params(code));
    chk.expect(secs < 1.0, label + " took over 1 s");
    detail += (detail.empty() ? "" : ", ") + detail::params(code);
  }
  return {1, "code parameters", chk.failures.empty(), chk.failures.empty() ? detail : detail::join_failures(chk)};
}

inline AcceptanceResult acceptance_zero_count() {
  detail::Checker chk;
  std::size_t cases = 0;
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (std::size_t r : {2u, 3u}) {
      for (std::size_t k : {2u, 3u}) {
        if (checked_pow(q, r * k) > 10'000'000) continue;
        ++cases;
        const Function f = Function::monomial_blocks(Field::of_order(q), r, k);
        const std::uint64_t brute = count_zeros_bruteforce(f);
        const std::uint64_t formula = cardinality_formula(q, r, k);
        const std::string label = "q=" + std::to_string(q) + " r=" + std::to_string(r) + " k=" + std::to_string(k);
        chk.expect(brute == formula, label + ": brute " + std::to_string(brute) + " vs formula " + std::to_string(formula));
        const std::uint64_t prev = cardinality_formula(q, r, k - 1);
        const std::uint64_t qr = checked_pow(q, r), q1r = checked_pow(q - 1, r), q1r1 = checked_pow(q - 1, r - 1);
        const std::uint64_t recursion = prev * (qr - q1r) + (checked_pow(q, (k - 1) * r) - prev) * q1r1;
        chk.expect(recursion == formula, label + ": recursion identity fails");
      }
    }
  }
  return {2, "zero-count formula", chk.failures.empty(),
          chk.failures.empty() ? std::to_string(cases) + " (q,r,k) cases match, recursion holds" : detail::join_failures(chk)};
}

inline AcceptanceResult acceptance_minimality() {
  detail::Checker chk;
  struct Case {
    unsigned q;
    std::size_t r, k;
    bool projective;
    std::uint64_t words;
  };
  for (const Case& c : {Case{2, 2, 2, false, 32}, Case{2, 3, 2, false, 128}, Case{3, 2, 2, false, 243},
                        Case{3, 2, 2, true, 243}}) {
    const Function f = Function::monomial_blocks(Field::make(c.q), c.r, c.k);
    const LinearCode code = c.projective ? build_projective_code(f) : build_affine_code(f);
    const std::string label = std::string(c.projective ? "projective " : "") + f.name() + " q=" + std::to_string(c.q);
    chk.expect(detail::codeword_count(code) == c.words, label + ": codeword count");
    chk.expect(is_minimal_bruteforce(code).minimal, label + ": brute force says not minimal");
    chk.expect(is_minimal_hdz(code).minimal, label + ": HDZ says not minimal");
  }
  return {3, "minimality of the monomial-block codes", chk.failures.empty(),
          chk.failures.empty() ? "4 codes minimal under brute force and HDZ" : detail::join_failures(chk)};
}

inline AcceptanceResult acceptance_ab_failure() {
  detail::Checker chk;
  const Function f = Function::monomial_blocks(Field::make(2), 3, 2);
  const LinearCode code = build_affine_code(f);
  const std::uint64_t zeros = count_zeros_bruteforce(f) - 1;
  const std::uint64_t threshold = ab_zero_threshold(2, 6, CodeMode::affine);
  chk.expect(zeros == 49, "#V* = " + std::to_string(zeros));
  chk.expect(threshold == 47, "threshold = " + std::to_string(threshold));
  chk.expect(zeros >= threshold, "zero count below threshold");
  const ABReport ab = ab_check(code);
  chk.expect(ab.w_max * 1 >= ab.w_min * 2 && !ab.satisfies_ab, "AB not violated");
  chk.expect(is_minimal_bruteforce(code).minimal, "code not minimal");
  const RThreshold t2 = ab_r_threshold(2), t3 = ab_r_threshold(3);
  const double i2 = detail::r_threshold_by_bisection(2), i3 = detail::r_threshold_by_bisection(3);
  chk.expect(std::fabs(t2.value - 2.771553) <= 1e-6, "r threshold q=2 is " + std::to_string(t2.value));
  chk.expect(std::fabs(t2.value - i2) <= 1e-3 && std::fabs(t3.value - i3) <= 1e-3,
             "r thresholds disagree with the bisection evaluation");
  chk.expect(t2.min_r == 3, "min r for q=2 is " + std::to_string(t2.min_r));
  chk.expect(t3.min_r == 4, "min r for q=3 is " + std::to_string(t3.min_r));
  std::ostringstream detail;
  detail.precision(6);
  detail << std::fixed << "#V*=" << zeros << ">=" << threshold << ", w_min=" << ab.w_min << " w_max=" << ab.w_max
         << ", r(2)=" << t2.value << " r(3)=" << t3.value;
  return {4, "AB failure for r=3, k=2 over GF(2)", chk.failures.empty(),
          chk.failures.empty() ? detail.str() : detail::join_failures(chk)};
}

inline AcceptanceResult acceptance_blocking() {
  detail::Checker chk;
  for (const auto& [q, r, k] : {std::tuple{2u, 2u, 2u}, std::tuple{2u, 3u, 2u}, std::tuple{3u, 2u, 2u}}) {
    const Function f = Function::monomial_blocks(Field::make(q), r, k);
    const TheoremReport rep = theorem_hypotheses(f, CodeMode::affine);
    const bool all = rep.dimension_ok && rep.blocking && rep.cutting && rep.ks_blocking && rep.condition_b &&
                     rep.condition_c && rep.applies;
    chk.expect(all, f.name() + " q=" + std::to_string(q) + ": a hypothesis fails");
  }
  const AmbientSpace space(Field::make(2), 4);
  const PointSet h = hyperplane_points(space, Point{1, 0, 0, 0}, false);
  chk.expect(!is_cutting(space, h, 1, Flavor::vectorial).holds, "H(v)* reported cutting");
  const Function zero = Function::dense(space, std::vector<Element>(space.size(), 0));
  const TheoremReport z = theorem_hypotheses(zero, CodeMode::affine);
  chk.expect(!z.ks_blocking, "f = 0 passes the (1,n-1) check");
  chk.expect(!z.condition_b, "f = 0 passes condition (b)");
  chk.expect(!z.applies, "f = 0 satisfies the theorem");
  return {5, "blocking-set certification", chk.failures.empty(),
          chk.failures.empty() ? "3 families certified, 2 negative controls rejected" : detail::join_failures(chk)};
}

inline std::vector<Function> acceptance_functions(std::uint64_t seed) {
  std::vector<Function> out;
  for (unsigned q : {2u, 3u, 4u, 5u}) out.push_back(Function::monomial_blocks(Field::of_order(q), 2, 2));
  out.push_back(Function::monomial_blocks(Field::make(2), 3, 2));
  out.push_back(Function::monomial_blocks(Field::make(2), 2, 3));
  out.push_back(Function::weight_staircase(Field::make(3), 4, 2, {1, 2}));
  std::mt19937_64 rng(seed);
  for (unsigned q : {2u, 3u}) {
    const AmbientSpace space(Field::make(q), 3);
    for (int i = 0; i < 4; ++i) out.push_back(detail::random_table_function(space, rng, 0.5));
  }
  return out;
}

inline AcceptanceResult acceptance_weight_laws(std::uint64_t seed) {
  detail::Checker chk;
  std::size_t codes = 0;
  for (const Function& f : acceptance_functions(seed)) {
    detail::weight_laws_hold(f, build_affine_code(f), chk);
    ++codes;
    if (scalar_compatible(f)) {
      detail::weight_laws_hold(f, build_projective_code(f), chk);
      ++codes;
    }
  }
  return {6, "weight laws", chk.failures.empty(),
          chk.failures.empty() ? std::to_string(codes) + " codes checked for every u and v" : detail::join_failures(chk)};
}

inline AcceptanceResult acceptance_oracles(std::uint64_t seed) {
  detail::Checker chk;
  std::mt19937_64 rng(seed);
  int minimal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LinearCode code = detail::random_small_code(rng);
    if (code.dim() == 0) {
      chk.expect(true, "");
      continue;
    }
    const bool brute = is_minimal_bruteforce(code).minimal, hdz = is_minimal_hdz(code).minimal;
    chk.expect(brute == hdz, "random code " + std::to_string(trial) + ": brute force and HDZ disagree");
    minimal += brute;
  }

  std::size_t pairs = 0;
  for (unsigned q : {2u, 3u}) {
    const AmbientSpace space(Field::make(q), 4);
    std::vector<Function> functions{Function::monomial_blocks(Field::make(q), 2, 2),
                                    Function::dense(space, std::vector<Element>(space.size(), 0))};
    for (double share : {0.3, 0.6, 0.9}) functions.push_back(detail::random_table_function(space, rng, share));
    const std::vector<PointCode> normals = enumerate_projective_points(space);
    for (const Function& f : functions) {
      const PointSet zeros = zero_set(f, ZeroMode::affine_star);
      bool all = true;
      for (PointCode v : normals) {
        const Point pv = space.decode(v);
        std::vector<PointCode> meet;
        hyperplane_points(space, pv, false).for_each([&](PointCode c) {
          if (zeros.contains(c)) meet.push_back(c);
        });
        Matrix pts;
        for (PointCode c : meet) pts.push_back(space.decode(c));
        const Subspace span = pts.empty() ? Subspace{} : span_of(space, pts);
        for (PointCode w : normals) {
          if (w == v) continue;
          const Point pw = space.decode(w);
          const bool inside = std::all_of(span.rows.begin(), span.rows.end(),
                                          [&](const Vector& row) { return dot(space.field(), pw, row) == 0; });
          const bool oracle = lemma_blocking_oracle(f, pv, pw);
          chk.expect(oracle == !inside, "q=" + std::to_string(q) + " " + f.name() + ": oracle disagrees with span");
          all = all && oracle;
          ++pairs;
        }
      }
      chk.expect(all == is_cutting(space, zeros, 1, Flavor::vectorial).holds,
                 "q=" + std::to_string(q) + " " + f.name() + ": oracle disagrees with the cutting check");
    }
  }
  return {7, "oracle equivalence", chk.failures.empty(),
          chk.failures.empty() ? "200 random codes (" + std::to_string(minimal) + " minimal) agree; " +
                                     std::to_string(pairs) + " hyperplane pairs agree"
                               : detail::join_failures(chk)};
}

inline AcceptanceResult acceptance_soundness(std::uint64_t seed) {
  detail::Checker chk;
  std::mt19937_64 rng(seed ^ 0x5eed);
  std::size_t ab_codes = 0, theorem_codes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LinearCode code = detail::random_small_code(rng);
    if (code.dim() == 0) continue;
    if (ab_check(code).satisfies_ab) {
      ++ab_codes;
      chk.expect(is_minimal_bruteforce(code).minimal, "random AB code reported non-minimal");
    }
  }
  for (const Function& f : acceptance_functions(seed)) {
    const LinearCode code = build_affine_code(f);
    const bool minimal = is_minimal_bruteforce(code).minimal;
    if (ab_check(code).satisfies_ab) {
      ++ab_codes;
      chk.expect(minimal, f.name() + ": AB code reported non-minimal");
    }
    if (theorem_hypotheses(f, CodeMode::affine).applies) {
      ++theorem_codes;
      chk.expect(minimal && is_minimal_hdz(code).minimal, f.name() + ": theorem applies but not minimal");
    }
  }

  const LinearCode base = build_affine_code(Function::monomial_blocks(Field::make(2), 2, 2));
  const auto dist = weight_distribution(base);
  const ABReport ab = ab_check(base);
  const bool brute = is_minimal_bruteforce(base).minimal, hdz = is_minimal_hdz(base).minimal;
  std::vector<std::size_t> perm(base.length());
  for (int trial = 0; trial < 10; ++trial) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const LinearCode p = base.permuted(perm);
    const ABReport pab = ab_check(p);
    const bool same = p.dim() == base.dim() && weight_distribution(p) == dist &&
                      is_minimal_bruteforce(p).minimal == brute && is_minimal_hdz(p).minimal == hdz &&
                      pab.w_min == ab.w_min && pab.w_max == ab.w_max && pab.satisfies_ab == ab.satisfies_ab;
    chk.expect(same, "permutation " + std::to_string(trial) + " changed a verdict");
  }
  return {8, "soundness cross-checks", chk.failures.empty(),
          chk.failures.empty() ? std::to_string(ab_codes) + " AB codes minimal, " + std::to_string(theorem_codes) +
                                     " theorem codes minimal, 10 permutations invariant"
                               : detail::join_failures(chk)};
}

/// Runs criteria in order; `only` selects a single id (0 = all).
inline std::vector<AcceptanceResult> run_acceptance(std::uint64_t seed = 20240601, int only = 0) {
  const std::vector<std::pair<double, std::function<AcceptanceResult()>>> suite{
      {3.0, acceptance_parameters},
      {60.0, acceptance_zero_count},
      {10.0, acceptance_minimality},
      {5.0, acceptance_ab_failure},
      {30.0, acceptance_blocking},
      {60.0, [seed] { return acceptance_weight_laws(seed); }},
      {120.0, [seed] { return acceptance_oracles(seed); }},
      {60.0, [seed] { return acceptance_soundness(seed); }},
  };
  std::vector<AcceptanceResult> results;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    AcceptanceResult r;
    try {
      r = suite[i].second();
    } catch (const std::exception& e) {
      r = {static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false, std::string("error: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.limit_seconds = suite[i].first;
    if (r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += " (over the " + std::to_string(static_cast<int>(r.limit_seconds)) + " s limit)";
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace mincode

#endif  // MINCODE_REPRO_HPP
