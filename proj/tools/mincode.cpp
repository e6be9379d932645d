// mincode: build and analyze linear codes of functions over finite fields.
//
// Exit codes: 0 success, 1 a requested assertion failed, 2 usage error or
// exhausted budget, 3 malformed or invalid input file.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mincode/mincode.hpp"

namespace {

using namespace mincode;

constexpr int kAssertionFailed = 1;
constexpr int kUsage = 2;
constexpr int kInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by every command that needs a function f.
struct FunctionFlags {
  unsigned q = 0;
  std::string modulus;
  std::string family;
  std::size_t r = 0, k = 0, n = 0;
  std::string alphas;
  std::string poly;
  std::string table;
  bool projective = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "field order p^m");
    cmd->add_option("--modulus", modulus, "irreducible modulus, comma separated, constant term first");
    cmd->add_option("--family", family, "built-in function family")->check(CLI::IsMember({"frk", "staircase", "polyzero"}));
    cmd->add_option("--r", r, "block degree for frk");
    cmd->add_option("--k", k, "number of blocks (frk) or weight cutoff (staircase)");
    cmd->add_option("--n", n, "number of variables for staircase");
    cmd->add_option("--alphas", alphas, "staircase values a_1,...,a_k");
    cmd->add_option("--poly", poly, "polynomial file for polyzero");
    cmd->add_option("--table", table, "function-table file");
    cmd->add_flag("--projective", projective, "use projective points");
  }

  bool given() const { return !family.empty() || !table.empty(); }
};

std::vector<unsigned> parse_list(const std::string& text, const std::string& what) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError(what + ": expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

std::optional<std::vector<unsigned>> modulus_of(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_list(text, "--modulus");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InputFormat, "cannot open " + path);
  return in;
}

Field field_of(const FunctionFlags& ff) {
  if (ff.q == 0) throw UsageError("--q is required");
  return Field::of_order(ff.q, modulus_of(ff.modulus));
}

Function make_function(const FunctionFlags& ff) {
  if (!ff.table.empty() && !ff.family.empty()) throw UsageError("give either --table or --family, not both");
  if (!ff.table.empty()) {
    std::ifstream in = open_input(ff.table);
    return read_function_table(in, ff.table);
  }
  if (ff.family == "frk") {
    if (ff.r == 0 || ff.k == 0) throw UsageError("--family frk needs --r and --k");
    return Function::monomial_blocks(field_of(ff), ff.r, ff.k);
  }
  if (ff.family == "staircase") {
    if (ff.n == 0 || ff.k == 0 || ff.alphas.empty()) throw UsageError("--family staircase needs --n, --k and --alphas");
    const auto a = parse_list(ff.alphas, "--alphas");
    return Function::weight_staircase(field_of(ff), ff.n, ff.k, std::vector<Element>(a.begin(), a.end()));
  }
  if (ff.family == "polyzero") {
    if (ff.poly.empty()) throw UsageError("--family polyzero needs --poly");
    std::ifstream in = open_input(ff.poly);
    return read_polynomial(in, ff.poly);
  }
  throw UsageError("a function is required: --family frk|staircase|polyzero or --table FILE");
}

LinearCode make_code(const Function& f, bool projective, const Budgets& budgets) {
  return projective ? build_projective_code(f, budgets) : build_affine_code(f, budgets);
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

void emit(const Json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

std::string code_label(const LinearCode& code) {
  return "[" + std::to_string(code.length()) + "," + std::to_string(code.dim()) + "]";
}

// ---- commands ----

int cmd_build(const FunctionFlags& ff, const std::string& out, const std::string& format, const Budgets& budgets) {
  const Function f = make_function(ff);
  print_warnings(f.warnings());
  const LinearCode code = make_code(f, ff.projective, budgets);
  print_warnings(code.warnings());
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw UsageError("cannot write " + out);
    write_generator_matrix(file, code);
  }
  if (format == "json") {
    Json j;
    j["q"] = code.field().order();
    j["function"] = f.name();
    j["mode"] = to_string(code.mode());
    j["length"] = code.length();
    j["dim"] = code.dim();
    j["warnings"] = code.warnings();
    if (!out.empty()) j["out"] = out;
    emit(j, format);
  } else {
    std::cout << code_label(code) << " code (" << to_string(code.mode()) << ", q=" << code.field().order() << ", "
              << f.name() << ")";
    if (!out.empty()) std::cout << " -> " << out;
    std::cout << '\n';
  }
  return 0;
}

struct AnalyzeFlags {
  std::string in;
  std::string minimality;
  bool weights = false;
  bool ab = false;
  bool expect_minimal = false;
  bool expect_ab_fail = false;
};

int cmd_analyze(const FunctionFlags& ff, const AnalyzeFlags& af, const std::string& format, const Budgets& budgets) {
  std::optional<Function> f;
  std::optional<LinearCode> code;
  if (!af.in.empty()) {
    if (ff.given()) throw UsageError("give either --in or a function, not both");
    std::ifstream in = open_input(af.in);
    code = read_generator_matrix(in, af.in, modulus_of(ff.modulus));
  } else {
    f = make_function(ff);
    print_warnings(f->warnings());
    code = make_code(*f, ff.projective, budgets);
  }
  print_warnings(code->warnings());

  Json j;
  j["q"] = code->field().order();
  if (f) j["function"] = f->name();
  j["mode"] = to_string(code->mode());
  j["length"] = code->length();
  j["dim"] = code->dim();
  if (af.weights) j["weights"] = to_json(weight_distribution(*code, budgets));

  int status = 0;
  std::string method = af.minimality;
  if (method.empty() && af.expect_minimal) method = "both";
  if (!method.empty()) {
    std::vector<MinimalityReport> reports;
    if (method == "brute" || method == "both") reports.push_back(is_minimal_bruteforce(*code, budgets));
    if (method == "hdz" || method == "both") reports.push_back(is_minimal_hdz(*code, budgets));
    if (method == "theorem") {
      if (!f) throw UsageError("--minimality theorem needs a function, not --in");
      const CodeMode mode = ff.projective ? CodeMode::projective : CodeMode::affine;
      const TheoremReport t = theorem_hypotheses(*f, mode);
      MinimalityReport rep;
      rep.method = MinimalityMethod::theorem;
      rep.minimal = t.applies;
      rep.conclusive = t.applies;
      reports.push_back(rep);
      j["theorem"] = to_json(t);
    }
    bool minimal = true, conclusive = true;
    for (const auto& rep : reports) {
      minimal = minimal && rep.minimal;
      conclusive = conclusive && rep.conclusive;
    }
    j["minimal"] = conclusive ? Json(minimal) : Json(nullptr);
    j["method"] = method;
    if (reports.size() == 2 && reports[0].minimal != reports[1].minimal) {
      j["agree"] = false;
      std::cerr << "error: brute force and HDZ disagree\n";
      status = kAssertionFailed;
    }
    Json checks = Json::array();
    for (const auto& rep : reports) {
      Json check = to_json(rep);
      if (rep.covering) {
        check["witness"]["covering_codeword"] = codeword(*code, rep.covering->covering).values;
        check["witness"]["covered_codeword"] = codeword(*code, rep.covering->covered).values;
      }
      if (rep.hdz) {
        check["witness"]["c_codeword"] = codeword(*code, rep.hdz->c).values;
        check["witness"]["c_prime_codeword"] = codeword(*code, rep.hdz->c_prime).values;
      }
      checks.push_back(check);
    }
    j["checks"] = checks;
    if (af.expect_minimal && !(conclusive && minimal)) {
      std::cerr << "assertion failed: code is " << (conclusive ? "not minimal" : "not certified minimal") << '\n';
      status = kAssertionFailed;
    }
  }
  if (af.ab || af.expect_ab_fail) {
    const ABReport ab = ab_check(*code, budgets);
    j["ab"] = to_json(ab);
    if (af.expect_ab_fail && ab.satisfies_ab) {
      std::cerr << "assertion failed: code satisfies AB (w_min " << ab.w_min << ", w_max " << ab.w_max << ")\n";
      status = kAssertionFailed;
    }
  }
  emit(j, format);
  return status;
}

int cmd_theorem(const FunctionFlags& ff, bool expect, const std::string& format) {
  const Function f = make_function(ff);
  print_warnings(f.warnings());
  const TheoremReport t = theorem_hypotheses(f, ff.projective ? CodeMode::projective : CodeMode::affine);
  Json j;
  j["function"] = f.name();
  j["q"] = f.field().order();
  j.update(to_json(t));
  emit(j, format);
  if (expect && !t.applies) {
    std::cerr << "assertion failed: the hypotheses do not all hold\n";
    return kAssertionFailed;
  }
  return 0;
}

int cmd_blocking(const std::string& in_path, std::size_t k, bool cutting, const std::string& flavor_name,
                 std::optional<std::size_t> s, const std::string& format) {
  const Flavor flavor = flavor_name == "projective" ? Flavor::projective : Flavor::vectorial;
  std::ifstream in = open_input(in_path);
  const PointFile pf = read_point_set(in, flavor, in_path);
  emit(to_json(analyze_blocking_set(pf.space, pf.points, k, flavor, cutting, s)), format);
  return 0;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--r expects A..B, got '" + text + "'");
  }
}

int cmd_survey(const FunctionFlags& ff, const std::string& range, const std::string& format, const Budgets& budgets) {
  const auto [lo, hi] = parse_range(range);
  if (ff.k == 0) throw UsageError("--k is required");
  const auto rows = survey(field_of(ff), lo, hi, ff.k, ff.projective ? CodeMode::projective : CodeMode::affine, budgets);
  if (format == "tsv") {
    const std::vector<std::string> cols{"q", "r", "k", "mode", "length", "dim", "zero_count", "zero_count_bruteforce",
                                        "zero_threshold", "zero_threshold_hit", "theorem_applies", "theorem_source",
                                        "minimal_verified", "ab_satisfied", "ab_source", "w_min", "w_max"};
    for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "\t" : "") << cols[i];
    std::cout << '\n';
    for (const auto& row : rows) {
      const Json j = to_json(row);
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const Json& v = j.at(cols[i]);
        std::cout << (i ? "\t" : "") << (v.is_string() ? v.get<std::string>() : v.is_null() ? "-" : v.dump());
      }
      std::cout << '\n';
    }
    return 0;
  }
  Json j = Json::array();
  for (const auto& row : rows) j.push_back(to_json(row));
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& row : j) std::cout << row.dump() << '\n';
  }
  return 0;
}

int cmd_export(const FunctionFlags& ff, const std::string& what, const std::string& out) {
  const Function f = make_function(ff);
  print_warnings(f.warnings());
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw UsageError("cannot write " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;
  if (what == "zeros") {
    write_point_set(os, f.space(), zero_set(f, ff.projective ? ZeroMode::projective : ZeroMode::affine_star));
  } else {
    write_function_table(os, f);
  }
  return 0;
}

int cmd_repro(std::uint64_t seed, int only, const std::string& format) {
  const auto results = run_acceptance(seed, only);
  bool all = true;
  Json j = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    j.push_back({{"criterion", r.id},
                 {"name", r.name},
                 {"passed", r.passed},
                 {"seconds", std::round(r.seconds * 1000) / 1000},
                 {"detail", r.detail}});
  }
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::printf("%s  %d  %-40s %7.2f s  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                  r.detail.c_str());
    }
  }
  return all ? 0 : kAssertionFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InputFormat:
    case ErrorKind::OriginInSet:
      return kInput;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear codes of functions over finite fields: minimality, blocking sets, AB condition"};
  app.require_subcommand(1);
  std::string config;
  app.add_option("--config", config, "budget file with key=value lines");

  FunctionFlags build_ff, analyze_ff, theorem_ff, survey_ff, export_ff;
  std::string format = "";
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };

  CLI::App* build = app.add_subcommand("build", "build C_f or its projective version");
  build_ff.attach(build);
  std::string build_out;
  build->add_option("--out", build_out, "write the generator matrix here");
  add_format(build, {"text", "json"});

  CLI::App* analyze = app.add_subcommand("analyze", "weights, minimality and AB analysis of a code");
  analyze_ff.attach(analyze);
  AnalyzeFlags af;
  analyze->add_option("--in", af.in, "generator-matrix file");
  analyze->add_option("--minimality", af.minimality, "minimality checker")
      ->check(CLI::IsMember({"brute", "hdz", "both", "theorem"}));
  analyze->add_flag("--weights", af.weights, "print the weight distribution");
  analyze->add_flag("--ab", af.ab, "check the AB condition");
  analyze->add_flag("--expect-minimal", af.expect_minimal, "exit 1 unless the code is minimal");
  analyze->add_flag("--expect-ab-fail", af.expect_ab_fail, "exit 1 unless the code violates AB");
  add_format(analyze, {"text", "json"});

  CLI::App* theorem = app.add_subcommand("theorem", "check the blocking-set hypotheses for f");
  theorem_ff.attach(theorem);
  bool expect_applies = false;
  theorem->add_flag("--expect-applies", expect_applies, "exit 1 unless every hypothesis holds");
  add_format(theorem, {"text", "json"});

  CLI::App* blocking = app.add_subcommand("blocking", "check a point set for blocking properties");
  std::string points;
  std::size_t block_k = 1;
  bool cutting = false;
  std::string flavor = "vectorial";
  std::optional<std::size_t> s;
  blocking->add_option("--in", points, "point-set file")->required();
  blocking->add_option("--k", block_k, "blocking order k");
  blocking->add_flag("--cutting", cutting, "also check the cutting property");
  blocking->add_option("--flavor", flavor, "vectorial or projective")
      ->check(CLI::IsMember({"vectorial", "projective"}));
  blocking->add_option("--s", s, "also check (k,s)-blocking");
  add_format(blocking, {"text", "json"});

  CLI::App* surv = app.add_subcommand("survey", "tabulate the family f_{r,k} over a range of r");
  survey_ff.attach(surv);
  surv->remove_option(surv->get_option("--r"));
  std::string range;
  surv->add_option("--r", range, "range A..B")->required();
  add_format(surv, {"json", "tsv", "text"});

  CLI::App* exp = app.add_subcommand("export", "write the zero set or the value table of f");
  export_ff.attach(exp);
  std::string what = "zeros", export_out;
  exp->add_option("--what", what, "zeros or table")->check(CLI::IsMember({"zeros", "table"}));
  exp->add_option("--out", export_out, "output file (default stdout)");

  CLI::App* repro = app.add_subcommand("repro", "run the acceptance suite");
  std::uint64_t seed = 20240601;
  int only = 0;
  repro->add_option("--seed", seed, "seed for the randomized checks");
  repro->add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 8));
  add_format(repro, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Budgets budgets;
    budgets.apply_environment();
    if (!config.empty()) budgets.apply_file(config);
    auto fmt = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };
    if (*build) return cmd_build(build_ff, build_out, fmt("text"), budgets);
    if (*analyze) return cmd_analyze(analyze_ff, af, fmt("json"), budgets);
    if (*theorem) return cmd_theorem(theorem_ff, expect_applies, fmt("json"));
    if (*blocking) return cmd_blocking(points, block_k, cutting, flavor, s, fmt("json"));
    if (*surv) return cmd_survey(survey_ff, range, fmt("json"), budgets);
    if (*exp) return cmd_export(export_ff, what, export_out);
    if (*repro) return cmd_repro(seed, only, fmt("text"));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}
