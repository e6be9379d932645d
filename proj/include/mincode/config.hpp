#ifndef MINCODE_CONFIG_HPP
#define MINCODE_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <string>

#include "mincode/error.hpp"

namespace mincode {

/// Work limits for the exhaustive routines. Exceeding one raises
/// BudgetExceeded or EnumerationCap; the survey turns that into a
/// theorem-based verdict flagged as such.
struct Budgets {
  /// scalar-class pairs x code length, for the pairwise minimality checks
  std::uint64_t pair_compares = 10'000'000'000ULL;
  /// q^dim x code length, for enumerating every codeword
  std::uint64_t weight_work = 2'000'000'000ULL;
  /// q^n, for materializing the columns of a code
  std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
  /// q^n, for brute-force zero counts
  std::uint64_t zero_count_cap = 10'000'000ULL;
  /// hyperplanes x q^(n-1), for certifying the theorem hypotheses
  std::uint64_t hypothesis_work = 200'000'000ULL;

  /// Sets one budget by name; returns false for an unknown key.
  bool set(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InputFormat, "budget " + key + " expects an unsigned integer, got '" + value + "'");
    }
    if (key == "pair_compares") pair_compares = v;
    else if (key == "weight_work") weight_work = v;
    else if (key == "enumeration_cap") enumeration_cap = v;
    else if (key == "zero_count_cap") zero_count_cap = v;
    else if (key == "hypothesis_work") hypothesis_work = v;
    else return false;
    return true;
  }

  /// MINCODE_PAIR_COMPARES, MINCODE_WEIGHT_WORK, MINCODE_ENUMERATION_CAP,
  /// MINCODE_ZERO_COUNT_CAP, MINCODE_HYPOTHESIS_WORK.
  void apply_environment() {
    const std::pair<const char*, const char*> names[] = {
        {"MINCODE_PAIR_COMPARES", "pair_compares"},   {"MINCODE_WEIGHT_WORK", "weight_work"},
        {"MINCODE_ENUMERATION_CAP", "enumeration_cap"}, {"MINCODE_ZERO_COUNT_CAP", "zero_count_cap"},
        {"MINCODE_HYPOTHESIS_WORK", "hypothesis_work"},
    };
    for (const auto& [env, key] : names) {
      if (const char* value = std::getenv(env)) set(key, value);
    }
  }

  /// Reads `key=value` lines; blank lines and lines starting with '#' are skipped.
  void apply_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InputFormat, "cannot open config file " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::InputFormat, path + ":" + std::to_string(lineno) + ": expected key=value");
      }
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      if (!set(key, trim(line.substr(eq + 1)))) {
        throw Error(ErrorKind::InputFormat, path + ":" + std::to_string(lineno) + ": unknown budget '" + key + "'");
      }
    }
  }
};

}  // namespace mincode

#endif  // MINCODE_CONFIG_HPP
