// Command-line front end for glued ellipse configurations.
#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <random>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "glued/config.hpp"
#include "glued/error.hpp"
#include "glued/families.hpp"
#include "glued/harness.hpp"
#include "glued/invariants.hpp"
#include "glued/project.hpp"
#include "glued/render.hpp"
#include "glued/skein.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitGenericity = 2;
constexpr int kExitVerification = 3;

int exit_code_for(const glued::Error& e) {
  switch (e.kind()) {
    case glued::ErrorKind::MaxRetriesExceeded:
    case glued::ErrorKind::NonGenericProjection:
    case glued::ErrorKind::NonGenericDirection:
      return kExitGenericity;
    default:
      return kExitValidation;
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw glued::Error(glued::ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string poly_or_error(const std::function<glued::LaurentPoly()>& f, const char* var) {
  try {
    return f().to_string(var);
  } catch (const glued::Error& e) {
    if (e.kind() != glued::ErrorKind::TooManyCrossings) throw;
    return std::string("unavailable (") + e.what() + ")";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Glued ellipse knots: validation, diagrams, invariants and verification suites"};
  app.require_subcommand(1);
  double eps = 0.0;
  app.add_option("--epsilon", eps, "Geometric tolerance (default 1e-9)")->check(CLI::PositiveNumber);

  std::string file, out_path, family_name, results_dir = "results";
  std::uint64_t seed = 1;
  int param = 0, m = 0, count = 0;
  std::vector<std::string> suites;

  auto* validate = app.add_subcommand("validate", "Validate a configuration and print its gluing summary");
  validate->add_option("file", file, "Configuration file")->required();

  auto* diagram = app.add_subcommand("diagram", "Print PD code, Gauss code and writhe");
  diagram->add_option("file", file, "Configuration file")->required();
  diagram->add_option("--seed", seed, "Projection seed");

  auto* invariants = app.add_subcommand("invariants", "Print knot invariants and identification");
  invariants->add_option("file", file, "Configuration file")->required();
  invariants->add_option("--seed", seed, "Projection seed");

  auto* family = app.add_subcommand("family", "Write a configuration of a named family");
  family->add_option("name", family_name, "max_writhe | three_color | low_crossing | connect_sum_trefoils")
      ->required();
  family->add_option("param", param, "Family parameter")->required();
  family->add_option("--out", out_path, "Output file (default stdout)");

  auto* sample = app.add_subcommand("sample", "Emit random configurations");
  sample->add_option("--m", m, "Number of ellipses")->required()->check(CLI::Range(1, 64));
  sample->add_option("--count", count, "Number of configurations")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed, "Sampling seed");
  sample->add_option("--out-dir", out_path, "Write <index>.cfg files here instead of stdout");

  auto* skein = app.add_subcommand("skein-check", "Check the Conway and bracket expansion identities");
  skein->add_option("file", file, "Configuration file")->required();
  skein->add_option("--seed", seed, "Projection seed");

  auto* verify = app.add_subcommand("verify", "Run verification suites and persist reports");
  verify->add_option("--suite", suites, "Suite name (repeatable; default all)");
  verify->add_option("--seed", seed, "Suite seed")->default_val(glued::kDefaultSeed);
  verify->add_option("--results", results_dir, "Results directory")->default_val("results");
  verify->add_flag_callback(
      "--list", [] {
        for (const auto& n : glued::suite_names()) std::cout << n << "\n";
        std::exit(0);
      },
      "List suite names");

  auto* render = app.add_subcommand("render", "Write an SVG drawing of the diagram");
  render->add_option("file", file, "Configuration file")->required();
  render->add_option("--out", out_path, "SVG output file")->required();
  render->add_option("--seed", seed, "Projection seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eps > 0.0) glued::set_epsilon(eps);

    if (*validate) {
      const auto cfg = glued::load_config(file);
      std::cout << "valid\n" << glued::format_summary(cfg, glued::summarize(cfg));
    } else if (*diagram) {
      const auto cfg = glued::load_config(file);
      const auto p = glued::project_knot_generic(cfg, seed);
      const auto& d = p.diagram;
      const auto& dir = p.spec.frame.direction;
      std::cout << "direction " << dir.x() << " " << dir.y() << " " << dir.z() << "\n";
      std::cout << "crossings " << d.crossing_count() << "\n";
      std::cout << "writhe " << d.writhe() << "\n";
      std::cout << "pd " << (d.crossing_count() ? d.pd_text() : "(none)") << "\n";
      std::cout << "gauss " << (d.crossing_count() ? d.gauss_text() : "(none)") << "\n";
    } else if (*invariants) {
      const auto cfg = glued::load_config(file);
      const auto d = glued::project_knot_generic(cfg, seed).diagram;
      const auto s = glued::simplify(d);
      const auto id = glued::identify(d);
      std::cout << "crossings " << d.crossing_count() << " (simplified " << s.crossing_count() << ")\n";
      std::cout << "writhe " << d.writhe() << "\n";
      std::cout << "alternating " << (glued::is_alternating(s) ? "yes" : "no") << " (simplified diagram)\n";
      std::cout << "tricolorings " << glued::tricolorings(d) << "\n";
      std::cout << "determinant " << glued::determinant(d) << "\n";
      std::cout << "jones " << poly_or_error([&] { return glued::jones(d); }, "t") << "\n";
      std::cout << "conway " << poly_or_error([&] { return glued::conway(d); }, "z") << "\n";
      std::cout << "alexander " << glued::alexander(d).to_string("t") << "\n";
      std::cout << "identification " << id.name << (id.chirality.empty() ? "" : " (" + id.chirality + ")");
      for (const auto& a : id.aliases) std::cout << " = " << a;
      std::cout << "\n";
    } else if (*family) {
      const auto f = glued::parse_family(family_name);
      const auto cfg = glued::generate(f, param);
      write_output(out_path, glued::format_config(cfg, std::string(glued::family_name(f)) + " " +
                                                           std::to_string(param)));
    } else if (*sample) {
      std::mt19937_64 rng(seed);
      if (!out_path.empty()) std::filesystem::create_directories(out_path);
      for (int i = 0; i < count; ++i) {
        const std::uint64_t s = rng();
        const auto cfg = glued::random_config(m, s);
        const std::string text = glued::format_config(cfg, "sample " + std::to_string(i) + " seed " +
                                                               std::to_string(s));
        if (out_path.empty()) {
          std::cout << text << (i + 1 < count ? "\n" : "");
        } else {
          write_output((std::filesystem::path(out_path) / (std::to_string(i) + ".cfg")).string(), text);
        }
      }
    } else if (*skein) {
      const auto cfg = glued::load_config(file);
      const auto spec = glued::common_generic_spec(cfg, seed);
      const auto c = glued::check_conway_expansion(cfg, spec);
      const auto b = glued::check_bracket_expansion(cfg, {}, spec);
      std::cout << c.to_text() << "\n" << b.to_text();
      if (!c.pass() || !b.pass()) return kExitVerification;
    } else if (*verify) {
      for (const auto& s : suites) {
        if (!glued::is_suite_name(s)) {
          throw glued::Error(glued::ErrorKind::InvalidArgument, "unknown suite '" + s + "' (see verify --list)");
        }
      }
      const int rc = glued::run_all(results_dir, seed, suites);
      for (const auto& name : suites.empty() ? glued::suite_names() : suites) {
        std::ifstream in(std::filesystem::path(results_dir) / "reports" / (name + ".txt"));
        std::string first, status;
        std::getline(in, first);
        std::getline(in, status);
        std::cout << name << ": " << status.substr(status.find(' ') + 1) << "\n";
      }
      std::cout << "reports written to " << (std::filesystem::path(results_dir) / "reports").string() << "\n";
      return rc == 0 ? 0 : kExitVerification;
    } else if (*render) {
      const auto cfg = glued::load_config(file);
      const auto p = glued::project_knot_generic(cfg, seed);
      write_output(out_path, glued::render_svg(cfg, p.spec));
    }
  } catch (const glued::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
