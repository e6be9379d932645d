#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mincode/field.hpp"

namespace mincode {
namespace {

// Schoolbook product of element codes as polynomials over GF(p), reduced by
// repeatedly cancelling the top coefficient. Independent of the log tables.
Element reference_mul(Element a, Element b, unsigned p, const std::vector<unsigned>& modulus) {
  const std::size_t m = modulus.size() - 1;
  std::vector<unsigned> pa(m), pb(m), prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    pa[i] = a % p;
    a /= p;
    pb[i] = b % p;
    b /= p;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
  for (std::size_t top = 2 * m - 1; top >= m; --top) {
    const unsigned c = prod[top];
    if (c == 0) continue;
    // modulus is monic: subtract c * t^(top-m) * modulus
    for (std::size_t i = 0; i <= m; ++i) prod[top - m + i] = (prod[top - m + i] + p * p - c * modulus[i]) % p;
  }
  Element code = 0, place = 1;
  for (std::size_t i = 0; i < m; ++i) {
    code += prod[i] * place;
    place *= p;
  }
  return code;
}

TEST(Field, PrimeFieldBasics) {
  const Field f = Field::make(3);
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.add(2, 2), 1u);
  EXPECT_EQ(f.neg(1), 2u);
  EXPECT_EQ(Field::make(5).inv(2), 3u);
}

TEST(Field, Gf4MultiplicationMatchesModulus) {
  const Field f = Field::make(2, 2, std::vector<unsigned>{1, 1, 1});
  EXPECT_EQ(f.order(), 4u);
  EXPECT_EQ(f.mul(2, 2), 3u);  // t * t = t + 1
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) EXPECT_EQ(f.mul(a, b), reference_mul(a, b, 2, {1, 1, 1}));
}

TEST(Field, Errors) {
  EXPECT_THROW(
      {
        try {
          Field::make(4, 1);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::NonPrimeCharacteristic);
          throw;
        }
      },
      Error);
  try {
    Field::make(2, 2, std::vector<unsigned>{1, 0, 1});  // t^2 + 1 = (t + 1)^2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
  try {
    Field::make(3, 3, std::vector<unsigned>{0, 0, 0, 1});  // t^3
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
  try {
    Field::of_order(32);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedOrder);
  }
  try {
    Field::make(3).inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
  }
  EXPECT_THROW(Field::of_order(6), Error);
}

TEST(Field, UserModulusOverridesBuiltin) {
  // t^2 + 2t + 2 is irreducible over GF(3) as well
  const Field f = Field::make(3, 2, std::vector<unsigned>{2, 2, 1});
  for (Element a = 0; a < 9; ++a)
    for (Element b = 0; b < 9; ++b) EXPECT_EQ(f.mul(a, b), reference_mul(a, b, 3, {2, 2, 1}));
  // 32 needs a user modulus: t^5 + t^2 + 1
  const Field g = Field::of_order(32, std::vector<unsigned>{1, 0, 1, 0, 0, 1});
  EXPECT_EQ(g.order(), 32u);
  EXPECT_EQ(g.mul(g.inv(7), 7), 1u);
}

class FieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldAxioms, ExhaustiveLaws) {
  const Field f = Field::of_order(GetParam());
  const unsigned q = f.order();
  if (f.degree() > 1) {
    for (Element a = 0; a < q; ++a)
      for (Element b = 0; b < q; ++b)
        ASSERT_EQ(f.mul(a, b), reference_mul(a, b, f.characteristic(), f.modulus())) << a << "*" << b;
  }
  for (Element a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    EXPECT_EQ(f.pow(a, q), a);
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    for (Element b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
    }
  }
  auto triple = [&](Element a, Element b, Element c) {
    EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
  };
  if (q <= 9) {
    for (Element a = 0; a < q; ++a)
      for (Element b = 0; b < q; ++b)
        for (Element c = 0; c < q; ++c) triple(a, b, c);
  } else {
    std::mt19937 rng(q);
    std::uniform_int_distribution<Element> pick(0, q - 1);
    for (int i = 0; i < 2000; ++i) triple(pick(rng), pick(rng), pick(rng));
  }
}

INSTANTIATE_TEST_SUITE_P(SupportedOrders, FieldAxioms,
                         ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u));

}  // namespace
}  // namespace mincode
