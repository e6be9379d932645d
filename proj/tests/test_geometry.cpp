#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "mincode/geometry.hpp"

namespace mincode {
namespace {

// [n choose d]_q by the q-Pascal recursion, independent of the product formula.
std::uint64_t gaussian_recursive(std::uint64_t q, std::size_t n, std::size_t d) {
  if (d == 0 || d == n) return 1;
  if (d > n) return 0;
  std::uint64_t qd = 1;
  for (std::size_t i = 0; i < d; ++i) qd *= q;
  return gaussian_recursive(q, n - 1, d - 1) + qd * gaussian_recursive(q, n - 1, d);
}

std::vector<Point> decode_all(const AmbientSpace& space, const std::vector<PointCode>& codes) {
  std::vector<Point> out;
  for (PointCode c : codes) out.push_back(space.decode(c));
  return out;
}

TEST(Geometry, AffineEnumerationOrder) {
  const AmbientSpace s22(Field::make(2), 2);
  EXPECT_EQ(decode_all(s22, enumerate_affine_points(s22)), (std::vector<Point>{{1, 0}, {0, 1}, {1, 1}}));
  const AmbientSpace s31(Field::make(3), 1);
  EXPECT_EQ(decode_all(s31, enumerate_affine_points(s31)), (std::vector<Point>{{1}, {2}}));
  const AmbientSpace s24(Field::make(2), 4);
  const auto pts = decode_all(s24, enumerate_affine_points(s24));
  ASSERT_EQ(pts.size(), 15u);
  EXPECT_EQ(pts.front(), (Point{1, 0, 0, 0}));
  EXPECT_EQ(pts.back(), (Point{1, 1, 1, 1}));
}

TEST(Geometry, ProjectiveEnumeration) {
  const AmbientSpace s32(Field::make(3), 2);
  EXPECT_EQ(decode_all(s32, enumerate_projective_points(s32)),
            (std::vector<Point>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  for (std::size_t n = 1; n <= 5; ++n) {
    const AmbientSpace s(Field::make(2), n);
    EXPECT_EQ(enumerate_projective_points(s), enumerate_affine_points(s));
  }
  EXPECT_EQ(enumerate_projective_points(AmbientSpace(Field::make(3), 4)).size(), 40u);
}

TEST(Geometry, EveryNonzeroPointHasUniqueRepresentativeAndScalar) {
  for (unsigned q : {3u, 4u, 5u}) {
    const AmbientSpace space(Field::of_order(q), 3);
    const auto reps = enumerate_projective_points(space);
    std::vector<int> hits(space.size(), 0);
    for (PointCode r : reps) {
      const Point x = space.decode(r);
      for (Element lambda = 1; lambda < q; ++lambda) {
        Point y = x;
        for (Element& c : y) c = space.field().mul(lambda, c);
        ++hits[space.encode(y)];
        EXPECT_EQ(space.normalize(space.encode(y)), r);
      }
    }
    EXPECT_EQ(hits[0], 0);
    for (PointCode c = 1; c < space.size(); ++c) EXPECT_EQ(hits[c], 1) << "q=" << q << " point " << c;
  }
}

TEST(Geometry, Dot) {
  const Field f3 = Field::make(3), f2 = Field::make(2);
  EXPECT_EQ(dot(f3, Point{1, 2}, Point{2, 1}), 1u);
  EXPECT_EQ(dot(f2, Point{1, 1, 0}, Point{1, 1, 1}), 0u);
  const AmbientSpace s(Field::of_order(5), 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(dot(s.field(), s.unit(i), s.unit(j)), i == j ? 1u : 0u);
}

TEST(Geometry, HyperplanePoints) {
  const AmbientSpace s22(Field::make(2), 2);
  EXPECT_EQ(decode_all(s22, hyperplane_points(s22, Point{1, 1}, false).members()), (std::vector<Point>{{1, 1}}));
  const AmbientSpace s23(Field::make(2), 3);
  EXPECT_EQ(decode_all(s23, hyperplane_points(s23, Point{1, 0, 0}, false).members()),
            (std::vector<Point>{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}}));
  const AmbientSpace s33(Field::make(3), 3);
  for (PointCode v = 1; v < s33.size(); ++v) {
    EXPECT_EQ(hyperplane_points(s33, s33.decode(v), true).size(), 9u);
    EXPECT_EQ(hyperplane_points(s33, s33.decode(v), false).size(), 8u);
  }
  try {
    hyperplane_points(s33, Point{0, 0, 0}, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroNormal);
  }
}

TEST(Geometry, HyperplanesCoincideExactlyForProportionalNormals) {
  for (unsigned q : {2u, 3u, 4u}) {
    const AmbientSpace s(Field::of_order(q), 3);
    for (PointCode v = 1; v < s.size(); ++v) {
      const PointSet hv = hyperplane_points(s, s.decode(v), true);
      for (PointCode w = 1; w < s.size(); ++w) {
        const bool same = hv == hyperplane_points(s, s.decode(w), true);
        EXPECT_EQ(same, s.normalize(v) == s.normalize(w));
      }
    }
  }
}

TEST(Geometry, SubspaceCountsMatchGaussianBinomial) {
  EXPECT_EQ(enumerate_subspaces(AmbientSpace(Field::make(2), 4), 2).size(), 35u);
  EXPECT_EQ(enumerate_subspaces(AmbientSpace(Field::make(3), 2), 1).size(), 4u);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (std::size_t n = 2; n <= 5; ++n) {
      const AmbientSpace space(Field::of_order(q), n);
      for (std::size_t d = 1; d < n; ++d) {
        std::set<Matrix> seen;
        std::size_t count = 0;
        for_each_subspace(space, d, [&](const Subspace& s) {
          ++count;
          seen.insert(s.rows);
          return true;
        });
        EXPECT_EQ(count, gaussian_recursive(q, n, d)) << q << " " << n << " " << d;
        EXPECT_EQ(seen.size(), count);
        EXPECT_EQ(gaussian_binomial(q, n, d), count);
      }
    }
  }
}

TEST(Geometry, SubspacesAreCanonicalAndHaveRightSize) {
  const AmbientSpace space(Field::make(3), 4);
  for (std::size_t d = 1; d < 4; ++d) {
    for (const Subspace& s : enumerate_subspaces(space, d)) {
      // re-canonicalizing the span reproduces the same basis
      EXPECT_EQ(span_of(space, s.rows), s);
      const auto pts = subspace_points(space, s, false);
      EXPECT_EQ(pts.size(), static_cast<std::size_t>(std::pow(3, d)) - 1);
      for (PointCode c : pts) EXPECT_TRUE(s.contains(space.field(), space.decode(c)));
      const auto reps = subspace_points(space, s, true);
      EXPECT_EQ(reps.size(), pts.size() / 2);
      for (PointCode c : reps) EXPECT_TRUE(space.is_projective_representative(c));
    }
  }
}

TEST(Geometry, HyperplaneSubspacesBijectWithProjectiveNormals) {
  const AmbientSpace space(Field::make(3), 3);
  std::set<std::vector<PointCode>> from_subspaces, from_normals;
  for (const Subspace& s : enumerate_subspaces(space, 2)) from_subspaces.insert(subspace_points(space, s, false));
  for (PointCode v : enumerate_projective_points(space)) {
    from_normals.insert(hyperplane_points(space, space.decode(v), false).members());
  }
  EXPECT_EQ(from_subspaces.size(), 13u);
  EXPECT_EQ(from_subspaces, from_normals);
}

TEST(Geometry, DimensionOutOfRange) {
  const AmbientSpace space(Field::make(2), 3);
  EXPECT_THROW(enumerate_subspaces(space, 0), Error);
  EXPECT_THROW(enumerate_subspaces(space, 3), Error);
}

TEST(Geometry, SpanDim) {
  const AmbientSpace s23(Field::make(2), 3);
  EXPECT_EQ(span_dim(s23, std::vector<PointCode>{}), 0u);
  EXPECT_EQ(span_dim(s23, hyperplane_points(s23, Point{1, 0, 0}, false)), 2u);
  const AmbientSpace s33(Field::make(3), 3);
  EXPECT_EQ(span_dim(s33, std::vector<PointCode>{s33.encode(Point{1, 0, 0}), s33.encode(Point{2, 0, 0})}), 1u);
  for (unsigned q : {2u, 3u}) {
    const AmbientSpace s(Field::of_order(q), 4);
    for (PointCode v : enumerate_projective_points(s)) {
      EXPECT_EQ(span_dim(s, hyperplane_points(s, s.decode(v), false)), 3u);
    }
  }
}

}  // namespace
}  // namespace mincode
