#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "bring/continuation.hpp"
#include "bring/periods.hpp"
#include "bring/pipeline.hpp"
#include "serialize.hpp"

namespace fs = std::filesystem;
using namespace bring;
using namespace bring::cli;

namespace {

enum ExitCode { kOk = 0, kInvalidInput = 2, kNumericalFailure = 3, kVerificationMismatch = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<json> read_json(const fs::path& p) {
  if (!fs::exists(p)) return std::nullopt;
  std::ifstream in(p);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(fmt::format("{}: {}", p.string(), e.what()));
  }
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write " + p.string());
  out << s;
}

void write_json(const fs::path& p, const json& j) { write_text(p, j.dump(2) + "\n"); }

class Driver {
 public:
  Driver(PipelineConfig cfg, fs::path out, bool print_json)
      : cfg_(cfg), out_(std::move(out)), print_json_(print_json) {
    fs::create_directories(out_);
    report_ = read_json(out_ / "report.json").value_or(json::object());
    if (!report_.is_object()) throw InputError("report.json is not an object");
  }

  int curve() {
    if (!curve_) curve_ = run_curve(cfg_);
    emit("curve", curve_section(*curve_));
    return kOk;
  }

  int branch_points() {
    emit("branch_points", branch_points_section());
    return kOk;
  }

  int monodromy_stage() {
    if (!monodromy_) monodromy_ = monodromy(cfg_.base);
    json sec = monodromy_section(*monodromy_, cfg_.base);
    write_json(out_ / "monodromy.json", stamp(sec));
    emit("monodromy", sec);
    return kOk;
  }

  int real_paths() {
    if (!real_) real_ = trace_real_paths();
    write_text(out_ / "real_paths.csv", real_paths_csv(*real_, cfg_.seed));
    emit("real_paths", real_paths_section(*real_));
    return kOk;
  }

  int homology() {
    const HomologyStage& h = ensure_homology();
    write_text(out_ / "cycles.csv", cycles_csv(h, cfg_.seed));
    emit("homology", homology_section(h));
    return kOk;
  }

  int periods() {
    const PeriodStage& p = ensure_periods();
    json sec = periods_section(p, cfg_);
    write_json(out_ / "periods.json", stamp(sec));
    emit("periods", sec);
    return kOk;
  }

  int riemann() {
    const PeriodStage& p = ensure_periods();
    if (!riemann_) riemann_ = run_riemann(p, phi(), cfg_);
    json sec = riemann_section(*riemann_, p);
    write_json(out_ / "riemann_constants.json", stamp(sec));
    emit("riemann_constants", sec);
    return kOk;
  }

  int verify_all() {
    const bool quiet = print_json_;
    print_json_ = false;
    curve();
    branch_points();
    monodromy_stage();
    real_paths();
    homology();
    periods();
    riemann();
    PipelineResults r;
    r.curve = *curve_;
    r.monodromy = *monodromy_;
    r.real = *real_;
    r.homology = ensure_homology();
    r.periods = ensure_periods();
    r.riemann = *riemann_;
    const auto criteria = evaluate_criteria(r);
    const bool ok = std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.pass; });
    json sec = {{"criteria", criteria_json(criteria)}, {"all_pass", ok}};
    print_json_ = quiet;
    if (!print_json_)
      for (const auto& c : criteria)
        std::cout << fmt::format("[{}] {:2d} {}: {}\n", c.pass ? "PASS" : "FAIL", c.id, c.name, c.detail);
    emit("verification", sec);
    return ok ? kOk : kVerificationMismatch;
  }

 private:
  json stamp(json sec) const {
    sec["schema_version"] = kSchemaVersion;
    sec["seed"] = cfg_.seed;
    return sec;
  }

  void emit(const std::string& name, const json& sec) {
    report_["schema_version"] = kSchemaVersion;
    report_["seed"] = cfg_.seed;
    report_["config"] = config_json(cfg_);
    report_[name] = sec;
    write_json(out_ / "report.json", report_);
    if (print_json_)
      std::cout << stamp(sec).dump(2) << "\n";
    else if (name != "verification")
      std::cout << fmt::format("{}: written to {}\n", name, (out_ / "report.json").string());
  }

  const HomologyStage& ensure_homology() {
    if (!homology_) {
      if (report_.contains("homology") && report_["homology"].contains("spokes"))
        homology_ = run_homology(spokes_from(report_["homology"]["spokes"]));
      else
        homology_ = run_homology();
    }
    return *homology_;
  }

  IntMat phi() {
    if (homology_) return homology_->phi;
    if (report_.contains("homology") && report_["homology"].contains("phi"))
      return intmat_from(report_["homology"]["phi"]);
    return ensure_homology().phi;
  }

  const PeriodStage& ensure_periods() {
    if (periods_) return *periods_;
    if (auto stored = read_json(out_ / "periods.json")) {
      const json& c = (*stored)["config"];
      if (c.is_object() && c.value("quad_order", -1) == cfg_.quad_order &&
          c.value("tol_periods", -1.0) == cfg_.tol_periods && stored->contains("alpha_periods")) {
        periods_ = run_periods(mat8x4_from((*stored)["alpha_periods"]));
        return *periods_;
      }
    }
    periods_ = run_periods(ensure_homology(), cfg_);
    return *periods_;
  }

  PipelineConfig cfg_;
  fs::path out_;
  bool print_json_;
  json report_;
  std::optional<CurveStage> curve_;
  std::optional<MonodromyReport> monodromy_;
  std::optional<RealPathReport> real_;
  std::optional<HomologyStage> homology_;
  std::optional<PeriodStage> periods_;
  std::optional<RiemannStage> riemann_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period matrix and Riemann constants of Bring's curve"};
  app.require_subcommand(1);
  app.fallthrough();

  PipelineConfig cfg;
  std::string out = "out";
  bool print_json = false;
  std::vector<double> base{2.0, 0.0};
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--tol-periods", cfg.tol_periods, "Quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tol-theta", cfg.tol_theta, "Theta vanishing tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--quad-order", cfg.quad_order, "Gauss-Legendre order")
      ->check(CLI::Range(2, 200))
      ->capture_default_str();
  app.add_option("--divisors", cfg.divisors, "Random divisors in the theta test")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  app.add_option("--base", base, "Monodromy base point: re [im]")->expected(1, 2);
  app.add_flag("--json", print_json, "Print the stage report as JSON");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"curve", "Plane models, discriminant and singular points"},
      {"branch-points", "Branch points and Puiseux places"},
      {"monodromy", "Monodromy permutations"},
      {"real-paths", "Real locus samples"},
      {"homology", "Cycles, intersection numbers and symmetry actions"},
      {"periods", "Period matrix"},
      {"riemann-constants", "Vector of Riemann constants"},
      {"verify-all", "Run every check"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }
  cfg.base = cplx(base.at(0), base.size() > 1 ? base[1] : 0.0);

  try {
    Driver d(cfg, out, print_json);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "curve") return d.curve();
    if (cmd == "branch-points") return d.branch_points();
    if (cmd == "monodromy") return d.monodromy_stage();
    if (cmd == "real-paths") return d.real_paths();
    if (cmd == "homology") return d.homology();
    if (cmd == "periods") return d.periods();
    if (cmd == "riemann-constants") return d.riemann();
    return d.verify_all();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed stored result: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}
