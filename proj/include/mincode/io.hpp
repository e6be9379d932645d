#ifndef MINCODE_IO_HPP
#define MINCODE_IO_HPP

// Text file formats and JSON reports.
//
// Every input file starts with a header line "q n [c_0 ... c_m]" where the
// optional coefficients give the field modulus for q = p^m, constant term
// first. Entries are integer element codes. Blank lines and lines starting
// with '#' are ignored.
//
//   point set       one point per line: x_1 ... x_n
//   function table  x_1 ... x_n value   (unlisted points map to 0)
//   polynomial      coefficient e_1 ... e_n   (one monomial per line)
//
// Generator matrices are written as "q length dim mode" followed by dim rows
// of length codes.

#include <istream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mincode/blocking.hpp"
#include "mincode/codes.hpp"
#include "mincode/error.hpp"
#include "mincode/funcspec.hpp"
#include "mincode/geometry.hpp"
#include "mincode/survey.hpp"

namespace mincode {

using Json = nlohmann::ordered_json;

namespace detail {

struct LineReader {
  std::istream& in;
  std::string source;
  std::size_t lineno = 0;

  // Next non-blank, non-comment line split into unsigned integers.
  std::optional<std::vector<std::uint64_t>> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ss(line);
      std::vector<std::uint64_t> values;
      std::string token;
      while (ss >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos) fail("expected an unsigned integer, got '" + token + "'");
        try {
          values.push_back(std::stoull(token));
        } catch (const std::exception&) {
          fail("integer out of range: " + token);
        }
      }
      return values;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InputFormat, source + ":" + std::to_string(lineno) + ": " + what);
  }
};

inline AmbientSpace read_header(LineReader& reader) {
  const auto header = reader.next();
  if (!header) reader.fail("missing header line 'q n [modulus]'");
  if (header->size() < 2) reader.fail("header needs 'q n'");
  const std::uint64_t q = (*header)[0], n = (*header)[1];
  std::optional<std::vector<unsigned>> modulus;
  if (header->size() > 2) modulus = std::vector<unsigned>(header->begin() + 2, header->end());
  try {
    return AmbientSpace(Field::of_order(q, modulus), n);
  } catch (const Error& e) {
    reader.fail(std::string("bad header: ") + e.what());
  }
}

inline Point read_point(LineReader& reader, const std::vector<std::uint64_t>& values, const AmbientSpace& space) {
  Point x(space.n());
  for (std::size_t i = 0; i < space.n(); ++i) {
    if (values[i] >= space.q()) reader.fail("coordinate " + std::to_string(values[i]) + " outside [0, q)");
    x[i] = static_cast<Element>(values[i]);
  }
  return x;
}

}  // namespace detail

inline std::string space_header(const AmbientSpace& space) {
  std::string s = std::to_string(space.q()) + " " + std::to_string(space.n());
  if (space.field().degree() > 1) {
    for (unsigned c : space.field().modulus()) s += " " + std::to_string(c);
  }
  return s;
}

struct PointFile {
  AmbientSpace space;
  PointSet points;
};

/// Reads a point-set file. In the projective flavor each point is replaced
/// by its normalized representative. Duplicates are rejected; the origin is
/// kept so that the blocking checks can report it.
inline PointFile read_point_set(std::istream& in, Flavor flavor, const std::string& source = "<points>") {
  detail::LineReader reader{in, source};
  AmbientSpace space = detail::read_header(reader);
  PointSet set(space.size());
  while (auto values = reader.next()) {
    if (values->size() != space.n()) reader.fail("expected " + std::to_string(space.n()) + " coordinates");
    PointCode code = space.encode(detail::read_point(reader, *values, space));
    if (flavor == Flavor::projective) code = space.normalize(code);
    if (set.contains(code)) reader.fail("duplicate point");
    set.insert(code);
  }
  return {std::move(space), std::move(set)};
}

inline void write_point_set(std::ostream& out, const AmbientSpace& space, const PointSet& set) {
  out << space_header(space) << '\n';
  set.for_each([&](PointCode c) {
    const Point x = space.decode(c);
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i];
    out << '\n';
  });
}

inline Function read_function_table(std::istream& in, const std::string& source = "<table>") {
  detail::LineReader reader{in, source};
  AmbientSpace space = detail::read_header(reader);
  std::vector<Element> values(space.size(), 0);
  std::vector<bool> seen(space.size(), false);
  while (auto row = reader.next()) {
    if (row->size() != space.n() + 1) reader.fail("expected n coordinates and a value");
    const PointCode code = space.encode(detail::read_point(reader, *row, space));
    if (seen[code]) reader.fail("duplicate point");
    seen[code] = true;
    if (row->back() >= space.q()) reader.fail("value outside [0, q)");
    values[code] = static_cast<Element>(row->back());
  }
  return Function::dense(std::move(space), std::move(values));
}

inline void write_function_table(std::ostream& out, const Function& f) {
  const AmbientSpace& space = f.space();
  out << space_header(space) << '\n';
  const std::vector<Element> values = f.table();
  for (PointCode c = 0; c < space.size(); ++c) {
    if (values[c] == 0) continue;
    for (Element e : space.decode(c)) out << e << ' ';
    out << values[c] << '\n';
  }
}

inline Function read_polynomial(std::istream& in, const std::string& source = "<poly>") {
  detail::LineReader reader{in, source};
  AmbientSpace space = detail::read_header(reader);
  std::vector<Monomial> monomials;
  while (auto row = reader.next()) {
    if (row->size() != space.n() + 1) reader.fail("expected a coefficient and n exponents");
    if ((*row)[0] >= space.q()) reader.fail("coefficient outside [0, q)");
    Monomial m{static_cast<Element>((*row)[0]), {}};
    for (std::size_t i = 1; i < row->size(); ++i) m.exponents.push_back(static_cast<unsigned>((*row)[i]));
    monomials.push_back(std::move(m));
  }
  PolynomialSpec poly(space, std::move(monomials));
  return Function::poly_zero_indicator(std::move(space), std::move(poly));
}

/// Writes the basis rows of the code.
inline void write_generator_matrix(std::ostream& out, const LinearCode& code) {
  out << code.field().order() << ' ' << code.length() << ' ' << code.dim() << ' ' << to_string(code.mode()) << '\n';
  for (const Vector& row : code.basis()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

/// Reads a generator-matrix file. A full-rank affine or projective matrix
/// of the expected shape keeps its mode and canonical column labels.
inline LinearCode read_generator_matrix(std::istream& in, const std::string& source = "<matrix>",
                                        std::optional<std::vector<unsigned>> modulus = std::nullopt) {
  detail::LineReader reader{in, source};
  std::string header;
  std::size_t header_line = 0;
  while (std::getline(in, header)) {
    ++header_line;
    const auto first = header.find_first_not_of(" \t\r");
    if (first != std::string::npos && header[first] != '#') break;
    header.clear();
  }
  reader.lineno = header_line;
  std::istringstream hs(header);
  std::uint64_t q = 0, length = 0, dim = 0;
  std::string mode_name;
  if (!(hs >> q >> length >> dim >> mode_name)) reader.fail("header needs 'q length dim mode'");
  CodeMode mode;
  if (mode_name == "affine") mode = CodeMode::affine;
  else if (mode_name == "projective") mode = CodeMode::projective;
  else if (mode_name == "generic") mode = CodeMode::generic;
  else reader.fail("unknown mode '" + mode_name + "'");
  Field field = [&]() {
    try {
      return Field::of_order(q, modulus);
    } catch (const Error& e) {
      reader.fail(std::string("bad field: ") + e.what());
    }
  }();
  Matrix rows;
  while (auto row = reader.next()) {
    if (row->size() != length) reader.fail("expected " + std::to_string(length) + " entries");
    Vector r;
    for (std::uint64_t v : *row) {
      if (v >= q) reader.fail("entry outside [0, q)");
      r.push_back(static_cast<Element>(v));
    }
    rows.push_back(std::move(r));
  }
  if (rows.size() != dim) reader.fail("expected " + std::to_string(dim) + " rows, found " + std::to_string(rows.size()));
  if (rows.empty()) reader.fail("generator matrix has no rows");

  if (mode != CodeMode::generic && dim >= 3) {
    const std::size_t n = dim - 1;
    try {
      const AmbientSpace space(field, n);
      const std::vector<PointCode> cols =
          mode == CodeMode::projective ? enumerate_projective_points(space) : enumerate_affine_points(space);
      bool canonical = cols.size() == length;
      for (std::size_t j = 0; canonical && j < length; ++j) {
        const Point x = space.decode(cols[j]);
        for (std::size_t i = 0; i < n && canonical; ++i) canonical = rows[i + 1][j] == x[i];
      }
      if (canonical) return LinearCode::from_generator(field, std::move(rows), mode, n, cols);
    } catch (const Error&) {
    }
  }
  return LinearCode::from_generator(std::move(field), std::move(rows), CodeMode::generic);
}

// ---- JSON ----

inline Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const Vector& row : s.rows) basis.push_back(row);
  return Json{{"dim", s.dim()}, {"basis", basis}};
}

inline Json to_json(const BlockingReport& r) {
  Json j;
  j["flavor"] = to_string(r.flavor);
  j["k"] = r.k;
  j["s"] = r.s ? Json(*r.s) : Json(nullptr);
  j["blocking"] = r.is_blocking;
  j["cutting"] = r.is_cutting ? Json(*r.is_cutting) : Json(nullptr);
  j["ks_blocking"] = r.is_ks_blocking ? Json(*r.is_ks_blocking) : Json(nullptr);
  j["dimension"] = r.set_dimension;
  Json witnesses = Json::array();
  if (r.missed_subspace) witnesses.push_back({{"kind", "missed_subspace"}, {"subspace", to_json(*r.missed_subspace)}});
  if (r.failing_subspace_pair) {
    witnesses.push_back({{"kind", "cutting_pair"},
                         {"subspace", to_json(r.failing_subspace_pair->first)},
                         {"contained_in", to_json(r.failing_subspace_pair->second)}});
  }
  if (r.contains_forbidden_subspace) {
    witnesses.push_back({{"kind", "contained_subspace"}, {"subspace", to_json(*r.contains_forbidden_subspace)}});
  }
  j["witnesses"] = witnesses;
  return j;
}

inline Json to_json(const TheoremReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  j["set_size"] = r.set_size;
  j["dimension"] = r.dimension;
  j["expected_dimension"] = r.expected_dimension;
  j["dimension_ok"] = r.dimension_ok;
  j["blocking"] = r.blocking;
  j["cutting"] = r.cutting;
  j["s"] = r.s;
  j["ks_blocking"] = r.ks_blocking;
  j["condition_b"] = r.condition_b;
  j["condition_c"] = r.condition_c;
  j["applies"] = r.applies;
  Json witnesses = Json::array();
  if (r.cutting_witness) {
    witnesses.push_back({{"kind", "cutting_pair"},
                         {"subspace", to_json(r.cutting_witness->first)},
                         {"contained_in", to_json(r.cutting_witness->second)}});
  }
  if (r.missed_subspace) witnesses.push_back({{"kind", "missed_subspace"}, {"subspace", to_json(*r.missed_subspace)}});
  if (r.forbidden_subspace) {
    witnesses.push_back({{"kind", "contained_subspace"}, {"subspace", to_json(*r.forbidden_subspace)}});
  }
  if (r.condition_b_failure) witnesses.push_back({{"kind", "condition_b"}, {"v", *r.condition_b_failure}});
  if (r.condition_c_failure) witnesses.push_back({{"kind", "condition_c"}, {"v", *r.condition_c_failure}});
  j["witnesses"] = witnesses;
  return j;
}

inline Json to_json(const MinimalityReport& r) {
  Json j;
  j["minimal"] = r.minimal;
  j["conclusive"] = r.conclusive;
  j["method"] = to_string(r.method);
  if (r.covering) {
    j["witness"] = {{"covering_message", r.covering->covering},
                    {"covered_message", r.covering->covered},
                    {"covering_weight", r.covering->covering_weight},
                    {"covered_weight", r.covering->covered_weight}};
  } else if (r.hdz) {
    j["witness"] = {{"c_message", r.hdz->c}, {"c_prime_message", r.hdz->c_prime}, {"lhs", r.hdz->lhs}, {"rhs", r.hdz->rhs}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json to_json(const ABReport& r) {
  Json j;
  j["w_min"] = r.w_min;
  j["w_max"] = r.w_max;
  j["satisfied"] = r.satisfies_ab;
  j["zero_count"] = r.zero_count ? Json(*r.zero_count) : Json(nullptr);
  j["zero_threshold"] = r.zero_threshold ? Json(*r.zero_threshold) : Json(nullptr);
  j["threshold_hit"] = r.zero_count_threshold_hit;
  return j;
}

inline Json to_json(const std::map<std::size_t, std::uint64_t>& weights) {
  Json j = Json::object();
  for (const auto& [w, count] : weights) j[std::to_string(w)] = count;
  return j;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const SurveyRow& r) {
  Json j;
  j["q"] = r.q;
  j["r"] = r.r;
  j["k"] = r.k;
  j["mode"] = to_string(r.mode);
  j["length"] = r.length;
  j["dim"] = r.dim;
  j["zero_count"] = r.zero_count;
  j["zero_count_bruteforce"] = optional_json(r.zero_count_bruteforce);
  j["zero_threshold"] = r.zero_threshold;
  j["zero_threshold_hit"] = r.zero_threshold_hit;
  j["theorem_applies"] = r.theorem_applies;
  j["theorem_source"] = r.theorem_source;
  j["minimal_verified"] = optional_json(r.minimal_verified);
  j["ab_satisfied"] = optional_json(r.ab_satisfied);
  j["ab_source"] = r.ab_source;
  j["w_min"] = optional_json(r.w_min);
  j["w_max"] = optional_json(r.w_max);
  return j;
}

}  // namespace mincode

#endif  // MINCODE_IO_HPP
