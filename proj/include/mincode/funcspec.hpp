#ifndef MINCODE_FUNCSPEC_HPP
#define MINCODE_FUNCSPEC_HPP

// Functions f: F_q^n -> F_q and their zero sets.
//
// Four variants share one evaluation interface:
//   DenseTable         q^n values indexed by point encoding
//   MonomialBlocks     sum over j < k of x_{jr+1} x_{jr+2} ... x_{jr+r}, n = r*k
//   WeightStaircase    alpha_i when wt(x) = i <= k, 0 when wt(x) > k
//   PolyZeroIndicator  1 on the zero set of a polynomial P, 0 elsewhere
//
// The value at the origin is stored but never used by code construction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mincode/error.hpp"
#include "mincode/field.hpp"
#include "mincode/geometry.hpp"

namespace mincode {

struct Monomial {
  Element coefficient;
  std::vector<unsigned> exponents;
};

/// Polynomial function with exponents reduced by x^q = x (0 stays 0).
class PolynomialSpec {
 public:
  PolynomialSpec(const AmbientSpace& space, std::vector<Monomial> monomials) {
    const unsigned q = space.q();
    for (Monomial& mono : monomials) {
      if (mono.exponents.size() != space.n()) {
        throw Error(ErrorKind::InvalidArgument, "monomial arity does not match ambient dimension");
      }
      if (!space.field().contains(mono.coefficient)) {
        throw Error(ErrorKind::InvalidArgument, "monomial coefficient outside the field");
      }
      if (mono.coefficient == 0) continue;
      for (unsigned& e : mono.exponents) {
        if (e >= q) e = (e - 1) % (q - 1) + 1;
      }
      // merge like terms
      auto same = std::find_if(monomials_.begin(), monomials_.end(),
                               [&](const Monomial& m) { return m.exponents == mono.exponents; });
      if (same != monomials_.end()) {
        same->coefficient = space.field().add(same->coefficient, mono.coefficient);
      } else {
        monomials_.push_back(std::move(mono));
      }
    }
    std::erase_if(monomials_, [](const Monomial& m) { return m.coefficient == 0; });
  }

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  Element evaluate(const Field& field, std::span<const Element> x) const {
    Element sum = 0;
    for (const Monomial& mono : monomials_) {
      Element term = mono.coefficient;
      for (std::size_t i = 0; i < x.size() && term != 0; ++i) {
        if (mono.exponents[i] != 0) term = field.mul(term, field.pow(x[i], mono.exponents[i]));
      }
      sum = field.add(sum, term);
    }
    return sum;
  }

  /// Total degree when every monomial has the same one.
  std::optional<unsigned> homogeneous_degree() const {
    std::optional<unsigned> deg;
    for (const Monomial& mono : monomials_) {
      unsigned d = 0;
      for (unsigned e : mono.exponents) d += e;
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg ? deg : std::optional<unsigned>{0};
  }

 private:
  std::vector<Monomial> monomials_;
};

struct DenseTable {
  std::vector<Element> values;
};

struct MonomialBlocks {
  std::size_t r;
  std::size_t k;
};

struct WeightStaircase {
  std::size_t k;
  std::vector<Element> alphas;
};

struct PolyZeroIndicator {
  PolynomialSpec poly;
};

enum class ZeroMode { affine_star, affine_with_origin, projective };

/// Column labelling of a code: all nonzero points, projective
/// representatives, or an arbitrary generator matrix.
enum class CodeMode { affine, projective, generic };

inline std::string to_string(CodeMode mode) {
  switch (mode) {
    case CodeMode::affine: return "affine";
    case CodeMode::projective: return "projective";
    case CodeMode::generic: return "generic";
  }
  return "generic";
}

class Function {
 public:
  using Definition = std::variant<DenseTable, MonomialBlocks, WeightStaircase, PolyZeroIndicator>;

  static Function dense(AmbientSpace space, std::vector<Element> values) {
    if (values.size() != space.size()) {
      throw Error(ErrorKind::InvalidArgument, "dense table must have q^n entries");
    }
    for (Element v : values) {
      if (!space.field().contains(v)) throw Error(ErrorKind::InvalidArgument, "table value outside the field");
    }
    return Function(std::move(space), DenseTable{std::move(values)});
  }

  /// f_{r,k} on n = r*k variables.
  static Function monomial_blocks(Field field, std::size_t r, std::size_t k) {
    if (r < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "f_{r,k} needs r >= 1 and k >= 1");
    return Function(AmbientSpace(std::move(field), r * k), MonomialBlocks{r, k});
  }

  static Function weight_staircase(Field field, std::size_t n, std::size_t k, std::vector<Element> alphas) {
    if (n <= 3) throw Error(ErrorKind::InvalidArgument, "staircase function needs n > 3");
    if (k < 2 || k > n - 2) throw Error(ErrorKind::InvalidArgument, "staircase function needs 2 <= k <= n-2");
    if (alphas.size() != k) throw Error(ErrorKind::InvalidArgument, "staircase function needs k values");
    for (Element a : alphas) {
      if (a == 0 || !field.contains(a)) throw Error(ErrorKind::InvalidArgument, "staircase values must be nonzero");
    }
    Function f(AmbientSpace(std::move(field), n), WeightStaircase{k, std::move(alphas)});
    if (f.space().q() % 2 == 0) {
      f.warnings_.push_back("staircase function over even q: the cutting property is only guaranteed for odd q");
    }
    return f;
  }

  static Function poly_zero_indicator(AmbientSpace space, PolynomialSpec poly) {
    return Function(std::move(space), PolyZeroIndicator{std::move(poly)});
  }

  const AmbientSpace& space() const noexcept { return space_; }
  const Field& field() const noexcept { return space_.field(); }
  const Definition& definition() const noexcept { return def_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  Element operator()(std::span<const Element> x) const {
    const Field& f = field();
    return std::visit(
        [&](const auto& d) -> Element {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, DenseTable>) {
            return d.values[space_.encode(x)];
          } else if constexpr (std::is_same_v<T, MonomialBlocks>) {
            Element sum = 0;
            for (std::size_t j = 0; j < d.k; ++j) {
              Element prod = 1;
              for (std::size_t i = 0; i < d.r && prod != 0; ++i) prod = f.mul(prod, x[j * d.r + i]);
              sum = f.add(sum, prod);
            }
            return sum;
          } else if constexpr (std::is_same_v<T, WeightStaircase>) {
            const auto wt = static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Element c) { return c != 0; }));
            return (wt == 0 || wt > d.k) ? 0 : d.alphas[wt - 1];
          } else {
            return d.poly.evaluate(f, x) == 0 ? 1 : 0;
          }
        },
        def_);
  }

  Element at(PointCode code) const {
    if (const auto* table = std::get_if<DenseTable>(&def_)) return table->values[code];
    Point x = space_.decode(code);
    return (*this)(x);
  }

  /// Values at every encoding, origin included.
  std::vector<Element> table() const {
    if (const auto* t = std::get_if<DenseTable>(&def_)) return t->values;
    std::vector<Element> values(space_.size());
    Point x(space_.n());
    for (PointCode c = 0; c < space_.size(); ++c) {
      space_.decode_into(c, x);
      values[c] = (*this)(x);
    }
    return values;
  }

  std::string name() const {
    return std::visit(
        [](const auto& d) -> std::string {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, DenseTable>) {
            return "table";
          } else if constexpr (std::is_same_v<T, MonomialBlocks>) {
            return "frk(r=" + std::to_string(d.r) + ",k=" + std::to_string(d.k) + ")";
          } else if constexpr (std::is_same_v<T, WeightStaircase>) {
            return "staircase(k=" + std::to_string(d.k) + ")";
          } else {
            return "polyzero";
          }
        },
        def_);
  }

 private:
  Function(AmbientSpace space, Definition def) : space_(std::move(space)), def_(std::move(def)) {}

  AmbientSpace space_;
  Definition def_;
  std::vector<std::string> warnings_;
};

/// The d >= 0 with f(lambda x) = lambda^d f(x) for all lambda != 0 and all x,
/// checked exhaustively. f_{r,k} reports r; other variants report the least
/// such d in [0, q-2].
inline std::optional<unsigned> scalar_compatible(const Function& f) {
  const AmbientSpace& space = f.space();
  const Field& field = space.field();
  const unsigned q = space.q();
  const std::vector<Element> values = f.table();
  Point x(space.n()), y(space.n());

  auto holds = [&](unsigned d) {
    for (PointCode c = 1; c < space.size(); ++c) {
      space.decode_into(c, x);
      for (Element lambda = 2; lambda < q; ++lambda) {
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = field.mul(lambda, x[i]);
        if (values[space.encode(y)] != field.mul(field.pow(lambda, d), values[c])) return false;
      }
    }
    return true;
  };

  if (const auto* blocks = std::get_if<MonomialBlocks>(&f.definition())) {
    const auto r = static_cast<unsigned>(blocks->r);
    return holds(r) ? std::optional<unsigned>{r} : std::nullopt;
  }
  for (unsigned d = 0; d + 1 < std::max(q, 2U); ++d) {
    if (holds(d)) return d;
  }
  return std::nullopt;
}

/// Membership bitmap of V(f)*, V(f) or V_p(f) over point encodings.
inline PointSet zero_set(const Function& f, ZeroMode mode) {
  const AmbientSpace& space = f.space();
  PointSet zeros(space.size());
  if (mode == ZeroMode::projective) {
    if (!scalar_compatible(f)) {
      throw Error(ErrorKind::NotScalarCompatible, "zero set of " + f.name() + " is not invariant under scaling");
    }
    for (PointCode c : enumerate_projective_points(space)) {
      if (f.at(c) == 0) zeros.insert(c);
    }
    return zeros;
  }
  const std::vector<Element> values = f.table();
  for (PointCode c = (mode == ZeroMode::affine_with_origin ? 0 : 1); c < space.size(); ++c) {
    if (values[c] == 0) zeros.insert(c);
  }
  return zeros;
}

/// Closed form for #V(f_{r,k}), origin included:
/// (q-1) q^(k-1) (q^(r-1) - (q-1)^(r-1))^k + q^(rk-1).
inline std::uint64_t cardinality_formula(std::uint64_t q, std::uint64_t r, std::uint64_t k) {
  if (q < 2 || r < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "cardinality formula needs q>=2, r>=1, k>=1");
  const std::uint64_t base = checked_pow(q, r - 1) - checked_pow(q - 1, r - 1);
  const std::uint64_t a = (q - 1) * checked_pow(q, k - 1);
  const std::uint64_t b = checked_pow(base, k);
  if (b != 0 && a > UINT64_MAX / b) throw Error(ErrorKind::EnumerationCap, "cardinality overflows 64 bits");
  return a * b + checked_pow(q, r * k - 1);
}

/// True iff f(x) = v.x on every nonzero x for v = (f(e_1), ..., f(e_n)).
/// The value at the origin is ignored, matching its role in the codes.
inline bool is_linear(const Function& f) {
  const AmbientSpace& space = f.space();
  Point v(space.n());
  for (std::size_t i = 0; i < space.n(); ++i) v[i] = f(space.unit(i));
  Point x(space.n());
  for (PointCode c = 1; c < space.size(); ++c) {
    space.decode_into(c, x);
    if (f(x) != dot(space.field(), v, x)) return false;
  }
  return true;
}

}  // namespace mincode

#endif  // MINCODE_FUNCSPEC_HPP
