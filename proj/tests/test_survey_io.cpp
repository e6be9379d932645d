#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "mincode/io.hpp"

namespace mincode {
namespace {

// Minimum and maximum nonzero weight over a prime field by summing every
// combination of generator rows.
std::pair<std::size_t, std::size_t> weight_range(const Matrix& rows, unsigned p) {
  const std::size_t len = rows.front().size();
  std::size_t lo = len, hi = 0;
  std::vector<unsigned> coef(rows.size(), 0);
  std::vector<unsigned> w(len);
  while (true) {
    std::size_t i = 0;
    while (i < coef.size() && ++coef[i] == p) coef[i++] = 0;
    if (i == coef.size()) break;
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (coef[r] == 0) continue;
      for (std::size_t j = 0; j < len; ++j) w[j] += coef[r] * rows[r][j];
    }
    std::size_t weight = 0;
    for (unsigned e : w) weight += e % p != 0;
    if (weight == 0) continue;
    lo = std::min(lo, weight);
    hi = std::max(hi, weight);
  }
  return {lo, hi};
}

std::vector<bool> ab_column(const std::vector<SurveyRow>& rows) {
  std::vector<bool> out;
  for (const SurveyRow& r : rows) out.push_back(r.ab_satisfied.value());
  return out;
}

TEST(Survey, BinaryRowsTwoThroughFive) {
  const auto rows = survey(Field::make(2), 2, 5, 2, CodeMode::affine);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(ab_column(rows), (std::vector<bool>{true, false, false, false}));
  for (const SurveyRow& r : rows) {
    EXPECT_EQ(r.length, (std::uint64_t{1} << (2 * r.r)) - 1);
    EXPECT_EQ(r.dim, 2 * r.r + 1);
    EXPECT_EQ(r.zero_count_bruteforce, r.zero_count);
    EXPECT_TRUE(r.theorem_applies);
    EXPECT_EQ(r.theorem_source, "checked");
    EXPECT_EQ(r.minimal_verified, true);
    EXPECT_EQ(r.ab_source, "weights");
    // a hit threshold forces an AB failure
    if (r.zero_threshold_hit) { EXPECT_FALSE(*r.ab_satisfied); }
  }
  EXPECT_EQ(rows[1].zero_count, 49u);
  EXPECT_EQ(rows[1].zero_threshold, 47u);
}

TEST(Survey, TernaryRowsTwoThroughFour) {
  const auto rows = survey(Field::make(3), 2, 4, 2, CodeMode::affine);
  ASSERT_EQ(rows.size(), 3u);
  // the zero-count threshold first fires at r = 4, in line with the r threshold 3.124
  EXPECT_EQ(rows[0].zero_threshold_hit, false);
  EXPECT_EQ(rows[1].zero_threshold_hit, false);
  EXPECT_EQ(rows[2].zero_threshold_hit, true);
  // the full weight distribution already violates AB at r = 3
  EXPECT_EQ(ab_column(rows), (std::vector<bool>{true, false, false}));
  const LinearCode r3 = build_affine_code(Function::monomial_blocks(Field::make(3), 3, 2));
  const auto [lo, hi] = weight_range(r3.generator_rows(), 3);
  EXPECT_EQ(rows[1].w_min, lo);
  EXPECT_EQ(rows[1].w_max, hi);
  EXPECT_GE(hi * 2, lo * 3);
  // r = 4 is beyond the pairwise budget, so minimality is not enumerated
  EXPECT_FALSE(rows[2].minimal_verified.has_value());
  EXPECT_TRUE(rows[2].theorem_applies);
}

TEST(Survey, ProjectiveRows) {
  const auto rows = survey(Field::make(3), 2, 3, 2, CodeMode::projective);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].length, 40u);
  EXPECT_EQ(rows[0].zero_count, 16u);
  EXPECT_EQ(rows[0].zero_count_bruteforce, 16u);
  EXPECT_EQ(rows[0].zero_threshold, 22u);
  for (const SurveyRow& r : rows) {
    EXPECT_TRUE(r.theorem_applies);
    EXPECT_EQ(r.minimal_verified, true);
  }
  const LinearCode p = build_projective_code(Function::monomial_blocks(Field::make(3), 2, 2));
  const auto [lo, hi] = weight_range(p.generator_rows(), 3);
  EXPECT_EQ(rows[0].w_min, lo);
  EXPECT_EQ(rows[0].w_max, hi);
}

TEST(Survey, BudgetsDegradeVisibly) {
  Budgets tight;
  tight.enumeration_cap = 16;
  tight.hypothesis_work = 15 * 8;  // enough for q^n = 16 only
  tight.zero_count_cap = 16;
  const auto rows = survey(Field::make(2), 2, 4, 2, CodeMode::affine, tight);
  EXPECT_EQ(rows[0].theorem_source, "checked");
  EXPECT_TRUE(rows[0].minimal_verified.has_value());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].theorem_source, "closed_form");
    EXPECT_FALSE(rows[i].minimal_verified.has_value());
    EXPECT_FALSE(rows[i].zero_count_bruteforce.has_value());
    EXPECT_EQ(rows[i].ab_source, "threshold");
    EXPECT_EQ(rows[i].ab_satisfied, false);
    EXPECT_EQ(rows[i].dim, 2 * rows[i].r + 1);
  }
  const auto ternary = survey(Field::make(3), 3, 3, 2, CodeMode::affine, tight);
  EXPECT_EQ(ternary[0].ab_source, "unknown");
  EXPECT_FALSE(ternary[0].ab_satisfied.has_value());
}

TEST(Survey, InvalidRanges) {
  for (auto [lo, hi, k] : {std::tuple{5u, 4u, 2u}, std::tuple{0u, 2u, 2u}, std::tuple{1u, 2u, 0u}, std::tuple{1u, 1u, 1u}}) {
    try {
      survey(Field::make(2), lo, hi, k, CodeMode::affine);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
    }
  }
  EXPECT_THROW(survey(Field::make(2), 2, 2, 2, CodeMode::generic), Error);
}

TEST(Survey, JsonIsDeterministic) {
  const auto a = survey(Field::make(2), 2, 3, 2, CodeMode::affine);
  const auto b = survey(Field::make(2), 2, 3, 2, CodeMode::affine);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
  const Json j = to_json(a[0]);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys.front(), "q");
  EXPECT_TRUE(j.contains("theorem_applies"));
  EXPECT_TRUE(j.contains("minimal_verified"));
  EXPECT_TRUE(j.contains("ab_satisfied"));
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Io, PointSetParsing) {
  std::istringstream in("# comment\n3 2\n\n1 0\n0 2\n");
  const PointFile pf = read_point_set(in, Flavor::vectorial);
  EXPECT_EQ(pf.space.q(), 3u);
  EXPECT_EQ(pf.points.size(), 2u);
  EXPECT_TRUE(pf.points.contains(pf.space.encode(Point{0, 2})));

  std::istringstream proj("3 2\n2 0\n0 2\n");
  const PointFile pp = read_point_set(proj, Flavor::projective);
  EXPECT_TRUE(pp.points.contains(pp.space.encode(Point{1, 0})));
  EXPECT_TRUE(pp.points.contains(pp.space.encode(Point{0, 1})));

  std::istringstream origin("2 2\n0 0\n1 1\n");
  const PointFile po = read_point_set(origin, Flavor::vectorial);
  EXPECT_TRUE(po.points.contains(0));
  EXPECT_EQ(kind_of([&] { is_blocking(po.space, po.points, 1); }), ErrorKind::OriginInSet);

  std::istringstream gf4("4 2 1 1 1\n3 2\n");
  EXPECT_EQ(read_point_set(gf4, Flavor::vectorial).space.field().modulus(), (std::vector<unsigned>{1, 1, 1}));
}

TEST(Io, PointSetErrors) {
  const std::vector<std::string> bad{
      "",                   // no header
      "2\n",                // short header
      "6 2\n",              // bad field
      "2 2\n1 0\n1 0\n",    // duplicate
      "2 2\n1 2\n",         // coordinate out of range
      "2 2\n1\n",           // wrong arity
      "2 2\n1 x\n",         // not a number
      "3 2\n1 0\n2 0\n",    // duplicate after normalizing, projective only
  };
  for (std::size_t i = 0; i + 1 < bad.size(); ++i) {
    std::istringstream in(bad[i]);
    EXPECT_EQ(kind_of([&] { read_point_set(in, Flavor::vectorial); }), ErrorKind::InputFormat) << i;
  }
  std::istringstream ok(bad.back());
  EXPECT_EQ(read_point_set(ok, Flavor::vectorial).points.size(), 2u);
  std::istringstream dup(bad.back());
  EXPECT_EQ(kind_of([&] { read_point_set(dup, Flavor::projective); }), ErrorKind::InputFormat);

  std::istringstream located("2 2\n\n1 0\n1 5\n");
  try {
    read_point_set(located, Flavor::vectorial, "pts.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("pts.txt:4"), std::string::npos);
  }
}

TEST(Io, PointSetRoundTrip) {
  const Function f = Function::monomial_blocks(Field::make(3), 2, 2);
  const PointSet zeros = zero_set(f, ZeroMode::projective);
  std::stringstream ss;
  write_point_set(ss, f.space(), zeros);
  const PointFile back = read_point_set(ss, Flavor::projective);
  EXPECT_TRUE(back.points == zeros);
}

TEST(Io, FunctionTable) {
  const Function f = Function::weight_staircase(Field::make(3), 4, 2, {1, 2});
  std::stringstream ss;
  write_function_table(ss, f);
  const Function g = read_function_table(ss);
  EXPECT_EQ(g.table(), f.table());

  std::istringstream partial("2 2\n1 1 1\n");
  const Function h = read_function_table(partial);
  EXPECT_EQ(h.table(), (std::vector<Element>{0, 0, 0, 1}));

  for (const char* text : {"2 2\n1 1 2\n", "2 2\n1 1 1\n1 1 0\n", "2 2\n1 1\n"}) {
    std::istringstream in(text);
    EXPECT_EQ(kind_of([&] { read_function_table(in); }), ErrorKind::InputFormat) << text;
  }
}

TEST(Io, PolynomialFile) {
  // x1 x2 - x3^2 over GF(5): f is the indicator of the cone
  std::istringstream in("5 3\n1 1 1 0\n4 0 0 2\n");
  const Function f = read_polynomial(in);
  const AmbientSpace& s = f.space();
  for (PointCode c = 0; c < s.size(); ++c) {
    const Point x = s.decode(c);
    EXPECT_EQ(f.at(c), (x[0] * x[1] + 4 * x[2] * x[2]) % 5 == 0 ? 1u : 0u);
  }
  std::istringstream bad("5 3\n7 1 1 0\n");
  EXPECT_EQ(kind_of([&] { read_polynomial(bad); }), ErrorKind::InputFormat);
}

TEST(Io, GeneratorMatrixRoundTrip) {
  const LinearCode code = build_projective_code(Function::monomial_blocks(Field::make(3), 2, 2));
  std::stringstream ss;
  write_generator_matrix(ss, code);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "3 40 5 projective");
  const LinearCode back = read_generator_matrix(ss);
  EXPECT_EQ(back.mode(), CodeMode::projective);
  EXPECT_EQ(back.n_ambient(), 4u);
  EXPECT_EQ(back.generator_rows(), code.basis());
  EXPECT_EQ(back.columns(), code.columns());
  EXPECT_EQ(weight_distribution(back), weight_distribution(code));

  std::istringstream generic("2 3 2 generic\n1 0 0\n1 1 0\n");
  const LinearCode g = read_generator_matrix(generic);
  EXPECT_EQ(g.mode(), CodeMode::generic);
  EXPECT_FALSE(is_minimal_bruteforce(g).minimal);

  // claims affine but the coordinate rows are not canonical
  std::istringstream relabeled("2 3 3 affine\n1 1 0\n0 1 1\n1 0 1\n");
  EXPECT_EQ(read_generator_matrix(relabeled).mode(), CodeMode::generic);

  for (const char* text : {"2 3 2\n1 0 0\n", "2 3 2 weird\n1 0 0\n0 1 0\n", "2 3 2 generic\n1 0 0\n",
                           "2 3 1 generic\n1 0 2\n", "2 3 1 generic\n1 0\n"}) {
    std::istringstream in(text);
    EXPECT_EQ(kind_of([&] { read_generator_matrix(in); }), ErrorKind::InputFormat) << text;
  }
}

TEST(Io, ReportJson) {
  const Function f = Function::monomial_blocks(Field::make(2), 2, 2);
  const PointSet zeros = zero_set(f, ZeroMode::affine_star);
  const BlockingReport rep = analyze_blocking_set(f.space(), zeros, 1, Flavor::vectorial, true, 3);
  const Json j = to_json(rep);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"flavor", "k", "s", "blocking", "cutting", "ks_blocking", "dimension",
                                            "witnesses"}));
  EXPECT_EQ(j["cutting"], true);
  EXPECT_EQ(j["ks_blocking"], true);
  EXPECT_EQ(j["dimension"], 4);
  EXPECT_TRUE(j["witnesses"].empty());

  const PointSet h = hyperplane_points(f.space(), Point{1, 0, 0, 0}, false);
  const Json hj = to_json(analyze_blocking_set(f.space(), h, 1, Flavor::vectorial, true, 3));
  EXPECT_EQ(hj["cutting"], false);
  EXPECT_EQ(hj["dimension"], 3);
  EXPECT_EQ(hj["witnesses"].size(), 2u);
  // f is bent: f + v.x has weight 6 for ten v and 10 for six
  EXPECT_EQ(to_json(weight_distribution(build_affine_code(f))).dump(), R"({"0":1,"6":10,"8":15,"10":6})");
}

TEST(Config, BudgetsFromFileAndEnvironment) {
  Budgets b;
  EXPECT_TRUE(b.set("pair_compares", "12"));
  EXPECT_EQ(b.pair_compares, 12u);
  EXPECT_FALSE(b.set("nonsense", "1"));
  EXPECT_EQ(kind_of([&] { b.set("weight_work", "12x"); }), ErrorKind::InputFormat);

  const auto path = std::filesystem::temp_directory_path() / "mincode_budget_test.conf";
  {
    std::ofstream out(path);
    out << "# budgets\nweight_work = 99\n\nzero_count_cap=5\n";
  }
  b.apply_file(path.string());
  EXPECT_EQ(b.weight_work, 99u);
  EXPECT_EQ(b.zero_count_cap, 5u);
  {
    std::ofstream out(path);
    out << "weight_work 99\n";
  }
  EXPECT_EQ(kind_of([&] { b.apply_file(path.string()); }), ErrorKind::InputFormat);
  std::filesystem::remove(path);

  setenv("MINCODE_HYPOTHESIS_WORK", "7", 1);
  b.apply_environment();
  EXPECT_EQ(b.hypothesis_work, 7u);
  unsetenv("MINCODE_HYPOTHESIS_WORK");
}

}  // namespace
}  // namespace mincode
