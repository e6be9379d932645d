#ifndef MINCODE_FIELD_HPP
#define MINCODE_FIELD_HPP

// Exact arithmetic in GF(p^m).
//
// An element is an integer code in [0, q) whose base-p digits are the
// coefficients of a polynomial in t, constant term least significant.
// Multiplication goes through log/antilog tables built from a primitive
// element; addition is digit-wise mod p (XOR for p = 2) and is tabulated
// for small q.
//
// Built-in moduli, coefficient lists written constant term first:
//   q = 4   t^2 + t + 1        [1,1,1]
//   q = 8   t^3 + t + 1        [1,1,0,1]
//   q = 9   t^2 + 1            [1,0,1]
//   q = 16  t^4 + t + 1        [1,1,0,0,1]
//   q = 25  t^2 + t + 1        [1,1,1]   (over GF(5))
//   q = 27  t^3 + 2t + 1       [1,2,0,1]

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincode/error.hpp"

namespace mincode {

using Element = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned inverse_mod_prime(unsigned a, unsigned p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  for (unsigned e = p - 2; e > 0; e >>= 1) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<unsigned>(result);
}

// Remainder of a modulo b over GF(p); b must be nonzero after trimming.
inline Poly poly_mod(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  const unsigned lead_inv = inverse_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const unsigned factor = static_cast<unsigned>(std::uint64_t{a.back()} * lead_inv % p);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const unsigned sub = static_cast<unsigned>(std::uint64_t{factor} * b[i] % p);
      a[i + shift] = (a[i + shift] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& modulus, unsigned p) {
  const std::size_t m = modulus.size() - 1;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(d + 1, 0);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (poly_mod(modulus, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  /// Largest order for which log/antilog tables are built.
  static constexpr std::uint64_t kMaxOrder = 1U << 16;

  /// Builds GF(p^m). For m > 1 the modulus is given constant term first
  /// (m + 1 entries, monic); without one, the built-in table is used.
  static Field make(unsigned p, unsigned m = 1, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) {
      throw Error(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    }
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxOrder) {
        throw Error(ErrorKind::UnsupportedOrder, "field order exceeds " + std::to_string(kMaxOrder));
      }
    }
    std::vector<unsigned> poly;
    if (m > 1) {
      if (modulus) {
        poly = *modulus;
      } else if (auto builtin = builtin_modulus(q)) {
        poly = *builtin;
      } else {
        throw Error(ErrorKind::UnsupportedOrder,
                    "no built-in modulus for q = " + std::to_string(q) + "; supply one explicitly");
      }
      if (poly.size() != m + 1 || poly.back() != 1) {
        throw Error(ErrorKind::ReducibleModulus, "modulus must be monic of degree " + std::to_string(m));
      }
      for (unsigned c : poly) {
        if (c >= p) throw Error(ErrorKind::ReducibleModulus, "modulus coefficient out of range");
      }
      if (!detail::is_irreducible(poly, p)) {
        throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
      }
    } else if (modulus && !modulus->empty()) {
      throw Error(ErrorKind::InvalidArgument, "prime fields take no modulus");
    }
    return Field(p, m, static_cast<unsigned>(q), std::move(poly));
  }

  /// Accepts a prime power q and resolves (p, m).
  static Field of_order(std::uint64_t q, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
    if (q < 2) throw Error(ErrorKind::NonPrimeCharacteristic, "field order must be at least 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) {
      throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
    }
    return make(static_cast<unsigned>(p), m, std::move(modulus));
  }

  static std::optional<std::vector<unsigned>> builtin_modulus(std::uint64_t q) {
    switch (q) {
      case 4: return std::vector<unsigned>{1, 1, 1};
      case 8: return std::vector<unsigned>{1, 1, 0, 1};
      case 9: return std::vector<unsigned>{1, 0, 1};
      case 16: return std::vector<unsigned>{1, 1, 0, 0, 1};
      case 25: return std::vector<unsigned>{1, 1, 1};
      case 27: return std::vector<unsigned>{1, 2, 0, 1};
      default: return std::nullopt;
    }
  }

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  unsigned order() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    if (p_ == 2) return a ^ b;
    return digitwise(a, b, false);
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element neg(Element a) const { return neg_[a]; }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Element inv(Element a) const {
    if (a == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// a^e with the convention 0^0 = 1.
  Element pow(Element a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
  }

  /// A fixed generator of the multiplicative group.
  Element primitive() const noexcept { return exp_[1]; }

  bool contains(std::uint64_t a) const noexcept { return a < q_; }

  std::string describe() const {
    std::string s = "GF(" + std::to_string(q_) + ")";
    if (m_ > 1) {
      s += " mod [";
      for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
      }
      s += "]";
    }
    return s;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(unsigned p, unsigned m, unsigned q, std::vector<unsigned> modulus)
      : p_(p), m_(m), q_(q), modulus_(std::move(modulus)) {
    build_tables();
  }

  Element digitwise(Element a, Element b, bool negate_b) const {
    Element result = 0, place = 1;
    for (unsigned i = 0; i < m_; ++i) {
      const unsigned da = a % p_, db = b % p_;
      const unsigned d = negate_b ? (da + p_ - db) % p_ : (da + db) % p_;
      result += d * place;
      place *= p_;
      a /= p_;
      b /= p_;
    }
    return result;
  }

  // Product of two element codes as polynomials reduced by the modulus.
  Element poly_mul(Element a, Element b) const {
    if (m_ == 1) return static_cast<Element>(std::uint64_t{a} * b % p_);
    detail::Poly pa(m_), pb(m_), prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
      pa[i] = a % p_;
      pb[i] = b % p_;
      a /= p_;
      b /= p_;
    }
    for (unsigned i = 0; i < m_; ++i) {
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    }
    const detail::Poly rem = detail::poly_mod(prod, modulus_, p_);
    Element code = 0, place = 1;
    for (unsigned c : rem) {
      code += c * place;
      place *= p_;
    }
    return code;
  }

  void build_tables() {
    neg_.resize(q_);
    for (Element a = 0; a < q_; ++a) {
      neg_[a] = (p_ == 2) ? a : digitwise(0, a, true);
    }
    if (q_ <= 256) {
      add_table_.resize(std::size_t{q_} * q_);
      for (Element a = 0; a < q_; ++a) {
        for (Element b = 0; b < q_; ++b) {
          add_table_[a * q_ + b] = (p_ == 2) ? (a ^ b) : digitwise(a, b, false);
        }
      }
    }
    // exp_ is doubled so log[a] + log[b] never needs a reduction.
    exp_.assign(2 * std::size_t{q_ - 1} + 1, 0);
    log_.assign(q_, 0);
    for (Element g = 1; g < q_; ++g) {
      Element x = 1;
      std::uint32_t order = 0;
      do {
        x = poly_mul(x, g);
        ++order;
      } while (x != 1 && order < q_);
      if (order != q_ - 1) continue;
      x = 1;
      for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        exp_[i + q_ - 1] = x;
        log_[x] = i;
        x = poly_mul(x, g);
      }
      exp_[2 * (q_ - 1)] = 1;
      return;
    }
    throw Error(ErrorKind::ReducibleModulus, "no primitive element found");
  }

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_table_;
  std::vector<Element> neg_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace mincode

#endif  // MINCODE_FIELD_HPP
