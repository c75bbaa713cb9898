// prm: finite fields, Reed-Muller codes, point-count bounds and censuses.
//
// Exit status: 0 success, 1 failed verification or internal error,
// 2 domain violation, 3 budget exceeded, 64 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prm/analysis.hpp"
#include "prm/error.hpp"
#include "prm/report.hpp"
#include "prm/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerify = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct FieldArgs {
  std::uint32_t q = 0, p = 0, e = 1;
};

struct Args {
  FieldArgs field;
  int d = 0, m = 2;
  std::string kind = "PRM";
  std::string mode;
  std::size_t top = 3;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0xC0DE;
  std::uint64_t samples = 100000;
  int workers = 0;
  std::string format = "json";
  std::string config;
  std::string level = "quick";
  std::string form;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PRM_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000'000ull;
}

prm::FieldPtr field_of(const FieldArgs& f) {
  if (f.q != 0) return prm::make_field_of_order(f.q);
  if (f.p != 0) return prm::make_field(f.p, f.e);
  throw CLI::ValidationError("field", "give --q or --p/--e");
}

void add_field_options(CLI::App* cmd, FieldArgs& f) {
  auto* q = cmd->add_option("--q", f.q, "Field order q = p^e");
  auto* p = cmd->add_option("--p", f.p, "Characteristic");
  cmd->add_option("--e", f.e, "Extension degree")->needs(p);
  q->excludes(p);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_form_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw prm::Error(prm::Errc::InvalidArgument, "cannot read " + arg.substr(1));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

// A form given as JSON, or as a comma-separated coefficient list over --q/--d/--m.
prm::Form parse_form(const Args& a) {
  const std::string text = read_form_arg(a.form);
  if (!text.empty() && text.find('{') != std::string::npos) {
    try {
      return prm::form_from_json(json::parse(text));
    } catch (const json::parse_error& ex) {
      throw prm::Error(prm::Errc::InvalidArgument, std::string("bad form JSON: ") + ex.what());
    }
  }
  std::vector<prm::Elem> coeffs;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) coeffs.push_back(static_cast<prm::Elem>(std::stoul(tok)));
  const auto field = field_of(a.field);
  const auto expected = prm::monomial_basis(a.m + 1, a.d, true).size();
  if (coeffs.size() != expected)
    throw prm::Error(prm::Errc::LengthMismatch, "expected " + std::to_string(expected) + " coefficients");
  for (auto c : coeffs)
    if (c >= field->q()) throw prm::Error(prm::Errc::InvalidArgument, "coefficient outside the field");
  return prm::Form(field, a.m + 1, a.d, true, std::move(coeffs));
}

prm::CodeKind kind_of(const std::string& s) {
  if (s == "GRM" || s == "grm") return prm::CodeKind::GRM;
  if (s == "PRM" || s == "prm") return prm::CodeKind::PRM;
  throw CLI::ValidationError("--kind", "expected GRM or PRM");
}

int run_verify(const Args& a) {
  const auto level = prm::level_from_string(a.level);
  if (!level) throw CLI::ValidationError("--level", "expected quick, full or long");
  json rows = json::array();
  const bool text = a.format != "json";
  const auto results = prm::run_acceptance(*level, a.workers, [&](const prm::CriterionResult& r) {
    if (text)
      std::cout << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << " [" << r.detail << "]"
                << std::endl;
  });
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    rows.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (!text) emit(json{{"level", a.level}, {"criteria", rows}, {"passed", ok}});
  return ok ? 0 : kExitVerify;
}

int dispatch(const CLI::App& app, Args& a) {
  if (a.budget == 0) a.budget = default_budget();
  const auto used = app.get_subcommands();
  const std::string name = used.empty() ? "" : used.front()->get_name();

  if (name == "field") {
    emit(prm::field_json(*field_of(a.field)));
  } else if (name == "code") {
    const auto code = prm::build_code(kind_of(a.kind), field_of(a.field), a.d, a.m, true);
    auto j = prm::code_json(code);
    json rows = json::array();
    for (std::size_t i = 0; i < code.k; ++i) {
      const auto r = code.row(i);
      rows.push_back(std::vector<prm::Elem>(r.begin(), r.end()));
    }
    j["generator"] = rows;
    emit(j);
  } else if (name == "spectrum") {
    const auto code = prm::build_code(kind_of(a.kind), field_of(a.field), a.d, a.m, true);
    prm::SpectrumOptions opts;
    if (a.mode.empty() || a.mode == "exhaustive")
      opts.mode = prm::SpectrumMode::ExhaustiveUpToScalar;
    else if (a.mode == "exhaustive-full")
      opts.mode = prm::SpectrumMode::ExhaustiveFull;
    else if (a.mode == "sampled")
      opts.mode = prm::SpectrumMode::Sampled;
    else
      throw CLI::ValidationError("--mode", "expected exhaustive, exhaustive-full or sampled");
    opts.samples = a.samples;
    opts.seed = a.seed;
    opts.budget = a.budget;
    opts.workers = a.workers;
    const auto spectrum = prm::weight_spectrum(code, opts);
    if (a.format == "csv")
      std::cout << prm::spectrum_csv(spectrum);
    else
      emit(prm::spectrum_json(code, spectrum, a.top));
  } else if (name == "bounds") {
    const auto field = field_of(a.field);
    emit(prm::bounds_json(field->q(), static_cast<int>(field->e()), a.d, a.m));
  } else if (name == "extremal") {
    const auto tag = prm::config_tag_from_string(a.config);
    if (!tag) throw CLI::ValidationError("--config", "unknown configuration '" + a.config + "'");
    emit(prm::construction_json(prm::build_construction(*tag, field_of(a.field), a.d, a.m)));
  } else if (name == "census") {
    prm::CensusOptions opts;
    if (a.mode.empty() || a.mode == "exhaustive")
      opts.mode = prm::CensusMode::Exhaustive;
    else if (a.mode == "sampled")
      opts.mode = prm::CensusMode::Sampled;
    else
      throw CLI::ValidationError("--mode", "expected exhaustive or sampled");
    opts.samples = a.samples;
    opts.seed = a.seed;
    opts.top_k = a.top;
    opts.budget = a.budget;
    opts.workers = a.workers;
    const auto report = prm::census(field_of(a.field), a.d, a.m, opts);
    if (a.format == "csv")
      std::cout << prm::census_csv(report);
    else
      emit(prm::census_json(report));
    return report.all_ok() ? 0 : kExitVerify;
  } else if (name == "classify") {
    const auto form = parse_form(a);
    auto j = prm::classification_json(prm::classify(form));
    j["form"] = prm::form_text(form);
    emit(j);
  } else if (name == "verify") {
    return run_verify(a);
  } else {
    std::cerr << app.help();
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reed-Muller codes and point counts of hypersurfaces over finite fields"};
  app.require_subcommand(1);
  Args a;

  auto* field = app.add_subcommand("field", "Field tables for GF(q)");
  add_field_options(field, a.field);

  auto* code = app.add_subcommand("code", "Generator matrix of GRM(d,m) or PRM(d,m)");
  add_field_options(code, a.field);
  code->add_option("--kind", a.kind, "GRM or PRM")->capture_default_str();
  code->add_option("--d", a.d, "Degree")->required();
  code->add_option("--m", a.m, "Dimension")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Weight distribution of a code");
  add_field_options(spectrum, a.field);
  spectrum->add_option("--kind", a.kind, "GRM or PRM")->capture_default_str();
  spectrum->add_option("--d", a.d, "Degree")->required();
  spectrum->add_option("--m", a.m, "Dimension")->capture_default_str();
  spectrum->add_option("--mode", a.mode, "exhaustive, exhaustive-full or sampled");
  spectrum->add_option("--samples", a.samples, "Samples in sampled mode")->capture_default_str();
  spectrum->add_option("--top", a.top, "Lowest weights to list")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Evaluate every point-count bound");
  add_field_options(bounds, a.field);
  bounds->add_option("--d", a.d, "Degree")->required();
  bounds->add_option("--m", a.m, "Dimension")->capture_default_str();

  auto* extremal = app.add_subcommand("extremal", "Build an extremal configuration and count its points");
  add_field_options(extremal, a.field);
  extremal->add_option("--config", a.config, "Configuration tag")->required();
  extremal->add_option("--d", a.d, "Degree, where the configuration has one");
  extremal->add_option("--m", a.m, "Dimension, where the configuration has one")->capture_default_str();

  auto* census = app.add_subcommand("census", "Point-count census of plane curves or hypersurfaces");
  add_field_options(census, a.field);
  census->add_option("--d", a.d, "Degree")->required();
  census->add_option("--m", a.m, "Dimension")->capture_default_str();
  census->add_option("--mode", a.mode, "exhaustive or sampled");
  census->add_option("--samples", a.samples, "Samples in sampled mode")->capture_default_str();
  census->add_option("--top", a.top, "Distinct counts to report")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Classify a form by its linear content");
  add_field_options(classify, a.field);
  classify->add_option("--form", a.form, "Form JSON, @file, or comma-separated coefficients")->required();
  classify->add_option("--d", a.d, "Degree for coefficient lists");
  classify->add_option("--m", a.m, "Dimension for coefficient lists")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--level", a.level, "quick, full or long")->capture_default_str();

  for (auto* cmd : {spectrum, census, verify}) {
    cmd->add_option("--workers", a.workers, "Worker threads (0 = all cores)")->capture_default_str();
  }
  for (auto* cmd : {spectrum, census}) {
    cmd->add_option("--budget", a.budget, "Maximum forms to enumerate (default 1e10, or PRM_BUDGET)");
    cmd->add_option("--seed", a.seed, "Sampling seed")->capture_default_str();
  }
  for (auto* cmd : {spectrum, census, verify})
    cmd->add_option("--format", a.format, "json, csv or text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return dispatch(app, a);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const prm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case prm::Errc::BudgetExceeded: return kExitBudget;
      case prm::Errc::Internal: return kExitVerify;
      default: return kExitDomain;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
