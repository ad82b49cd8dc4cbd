// Command-line driver: builds the finite objects, runs the verification
// suites, and emits JSON or text reports. Exit codes: 0 pass, 1 verification
// failure, 2 usage or scale-guard error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "declab/verify.hpp"

namespace {

struct Output {
  std::string format = "json";
  std::string path;
};

int emit(const nlohmann::json& report, const Output& out) {
  std::string payload =
      (out.format == "text") ? declab::verify::text_summary(report) : report.dump(2) + "\n";
  if (out.path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out.path);
    if (!f) {
      std::cerr << "cannot open output path: " << out.path << "\n";
      return 2;
    }
    f << payload;
  }
  return declab::verify::passed(report) ? 0 : 1;
}

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "write the report to a file instead of stdout");
}

void validate_pk(int p, int k) {
  if (!declab::is_small_prime(p))
    throw CLI::ValidationError("--p", "p must be one of 2, 3, 5, 7");
  if (k < 1) throw CLI::ValidationError("--k", "k must be at least 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decomp-lab: exact verification of building and decomposition structure"};
  app.require_subcommand(1);

  Output out;
  int p = 2, k = 1;
  std::uint64_t seed = 20240901;

  auto* building = app.add_subcommand("building", "construct a building and report its shape");
  std::string kind;
  bool with_homology = false;
  building->add_option("kind", kind, "gl or sp")->required()->check(CLI::IsMember({"gl", "sp"}));
  building->add_option("--p", p, "prime")->required();
  building->add_option("--k", k, "rank parameter")->required();
  building->add_flag("--homology", with_homology, "include reduced integer homology");
  add_output_flags(building, out);

  auto* verify = app.add_subcommand("verify", "run one verifier");
  std::string target;
  bool slow = false;
  verify->add_option("target", target, "what to verify")
      ->required()
      ->check(CLI::IsMember({"theorem-1-1", "theorem-1-2", "partition-fixed", "example-2-3",
                             "example-5-2", "character", "subdivision", "suspension",
                             "join-cor-1-3", "sphere-counts"}));
  verify->add_option("--p", p, "prime");
  verify->add_option("--k", k, "rank parameter");
  verify->add_option("--seed", seed, "seed for randomized property checks");
  add_output_flags(verify, out);

  auto* suite = app.add_subcommand("suite", "run every verifier within the guards");
  int max_p = 5, max_k = 3;
  bool all = false;
  suite->add_option("--max-p", max_p, "largest prime to include")->capture_default_str();
  suite->add_option("--max-k", max_k, "largest rank to include")->capture_default_str();
  suite->add_flag("--slow", slow, "include the slow large-parameter runs");
  suite->add_flag("--all", all, "alias for the default full fast matrix");
  suite->add_option("--seed", seed, "seed for randomized property checks");
  add_output_flags(suite, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  }

  try {
    nlohmann::json report;
    if (building->parsed()) {
      validate_pk(p, k);
      report = declab::verify::building_report(
          kind == "gl" ? declab::buildings::BuildingKind::GL : declab::buildings::BuildingKind::Sp,
          p, k, with_homology);
    } else if (verify->parsed()) {
      validate_pk(p, k);
      if (target == "theorem-1-1") report = declab::verify::theorem_1_1(p, k);
      else if (target == "theorem-1-2") report = declab::verify::theorem_1_2(p, k);
      else if (target == "partition-fixed") report = declab::verify::partition_fixed(p, k);
      else if (target == "example-2-3") report = declab::verify::example_2_3();
      else if (target == "example-5-2") report = declab::verify::example_5_2(p);
      else if (target == "character") report = declab::verify::character_check(p, k);
      else if (target == "subdivision") report = declab::verify::subdivision_invariance(seed);
      else if (target == "suspension") report = declab::verify::suspension_check(p, k);
      else if (target == "join-cor-1-3") report = declab::verify::join_spheres(p);
      else if (target == "sphere-counts") report = declab::verify::sphere_counts();
    } else {
      report = declab::verify::suite(max_p, max_k, slow, seed);
    }
    return emit(report, out);
  } catch (const declab::ScaleGuardError& e) {
    std::cerr << "scale guard: " << e.what() << "\n";
    return 2;
  } catch (const declab::CheckError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
