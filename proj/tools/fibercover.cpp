#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fibercover/corpus.hpp"
#include "fibercover/cover_io.hpp"
#include "fibercover/dessin.hpp"
#include "fibercover/error.hpp"
#include "fibercover/fiber.hpp"
#include "fibercover/monodromy.hpp"
#include "fibercover/report.hpp"

using namespace fibercover;

namespace {

BranchedCover load_cover(const std::string& path) { return parse_cover_file(read_input(path)); }

RationalMap load_map(const std::string& arg) {
  if (arg == "-" || std::filesystem::is_regular_file(arg)) return parse_map_argument(read_input(arg));
  return parse_map_argument(arg);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path);
  out << text;
}

struct DecomposeArgs {
  std::string first, second, report, format = "text";
  bool isomorphism = false, jacobian = false, serial = false;
};

int emit_decomposition(const BranchedCover& c1, const BranchedCover& c2, const DecomposeArgs& a) {
  Execution exec = a.serial ? Execution::serial : Execution::parallel;
  FiberDecomposition dec = decompose(c1, c2, exec);
  std::optional<IsomorphismReport> iso;
  std::optional<JacobianReport> jac;
  if (a.isomorphism) iso = components_pairwise_isomorphic(dec, exec);
  if (a.jacobian) jac = jacobian_report(c1, c2, dec);
  DecompositionReport r = make_report(dec, iso ? &*iso : nullptr, jac ? &*jac : nullptr);
  ReportFormat format = a.format == "structured" ? ReportFormat::structured : ReportFormat::text;
  write_output(a.report, emit_report(r, format));
  return 0;
}

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber products of branched covers of Riemann surfaces"};
  app.require_subcommand(1);

  auto* cover = app.add_subcommand("cover", "Inspect a cover file")->require_subcommand(1);
  std::string cover_path;
  auto* validate_cmd = cover->add_subcommand("validate", "Check the relation, transitivity and shape");
  validate_cmd->add_option("file", cover_path, "cover file or -")->required();
  auto* genus_cmd = cover->add_subcommand("genus", "Riemann-Hurwitz genus");
  genus_cmd->add_option("file", cover_path, "cover file or -")->required();

  auto* fiber = app.add_subcommand("fiber", "Fiber products of two covers")->require_subcommand(1);
  DecomposeArgs dargs;
  auto* decompose_cmd = fiber->add_subcommand("decompose", "Irreducible components and singular points");
  decompose_cmd->add_option("first", dargs.first)->required();
  decompose_cmd->add_option("second", dargs.second)->required();
  decompose_cmd->add_option("--report", dargs.report, "output file (default stdout)");
  decompose_cmd->add_option("--format", dargs.format)->check(CLI::IsMember({"text", "structured"}));
  decompose_cmd->add_flag("--isomorphism", dargs.isomorphism, "pairwise component isomorphism");
  decompose_cmd->add_flag("--jacobian", dargs.jacobian, "Jacobian dimension report");
  decompose_cmd->add_flag("--serial", dargs.serial, "use the serial reference kernels");
  auto* criteria_cmd = fiber->add_subcommand("criteria", "Irreducibility criteria");
  criteria_cmd->add_option("first", dargs.first)->required();
  criteria_cmd->add_option("second", dargs.second)->required();

  auto* dessin = app.add_subcommand("dessin", "Dessins d'enfants")->require_subcommand(1);
  auto* product_cmd = dessin->add_subcommand("product", "Dessins of the fiber product of two Belyi covers");
  product_cmd->add_option("first", dargs.first)->required();
  product_cmd->add_option("second", dargs.second)->required();

  auto* map = app.add_subcommand("map", "Rational maps of the sphere")->require_subcommand(1);
  std::string map_arg, map_arg2, out_path;
  int resolution = 1;
  bool show_critical = false;
  auto* monodromy_cmd = map->add_subcommand("monodromy", "Numerical monodromy as a cover file");
  monodromy_cmd->add_option("map", map_arg, "expression, map file, or -")->required();
  monodromy_cmd->add_option("--out", out_path, "cover file to write (default stdout)");
  monodromy_cmd->add_option("--resolution", resolution, "tracking step refinement")->check(CLI::Range(1, 64));
  monodromy_cmd->add_flag("--critical", show_critical, "list critical values on stderr");
  auto* map_product_cmd = map->add_subcommand("product", "Fiber product of two maps over a shared loop system");
  map_product_cmd->add_option("first", map_arg)->required();
  map_product_cmd->add_option("second", map_arg2)->required();
  map_product_cmd->add_option("--report", dargs.report, "output file (default stdout)");
  map_product_cmd->add_option("--format", dargs.format)->check(CLI::IsMember({"text", "structured"}));
  map_product_cmd->add_flag("--isomorphism", dargs.isomorphism, "pairwise component isomorphism");

  auto* corpus = app.add_subcommand("corpus", "Bundled example corpus")->require_subcommand(1);
  std::string corpus_dir = default_corpus_dir().string();
  auto* run_cmd = corpus->add_subcommand("run", "Run every case and compare with expectations");
  run_cmd->add_option("--dir", corpus_dir, "corpus directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate_cmd->parsed()) {
      BranchedCover c = parse_cover_text(read_input(cover_path));
      ValidationReport report = validate(c);
      if (!report.ok()) {
        std::cout << "invalid\n" << report.summary() << "\n";
        return 1;
      }
      std::cout << "valid: degree " << c.degree << ", base genus " << c.base_genus << ", genus "
                << genus(c) << "\n";
      return 0;
    }
    if (genus_cmd->parsed()) {
      std::cout << genus(load_cover(cover_path)) << "\n";
      return 0;
    }
    if (decompose_cmd->parsed())
      return emit_decomposition(load_cover(dargs.first), load_cover(dargs.second), dargs);
    if (criteria_cmd->parsed()) {
      BranchedCover c1 = load_cover(dargs.first), c2 = load_cover(dargs.second);
      CriteriaReport r = criteria(c1, c2);
      std::cout << "cond1: " << yes(r.cond1) << "\n";
      std::cout << "cond2: " << yes(r.cond2) << "\n";
      std::cout << "predicted_irreducible: " << yes(r.predicted_irreducible) << "\n";
      std::cout << "components: " << r.actual_component_count << "\n";
      std::cout << "bound: " << component_bound(c1, c2) << "\n";
      for (const auto& pl : r.per_label)
        std::cout << "label: " << pl.label.to_string() << " a1=" << pl.a1 << " a2=" << pl.a2 << "\n";
      return 0;
    }
    if (product_cmd->parsed()) {
      Dessin d1 = dessin_from_cover(load_cover(dargs.first));
      Dessin d2 = dessin_from_cover(load_cover(dargs.second));
      DessinCriteria crit = dessin_criteria(d1, d2);
      std::cout << "cond1: " << yes(crit.cond1) << "\n";
      std::cout << "cond2: " << yes(crit.cond2) << "\n";
      std::cout << "predicted_single_dessin: " << yes(crit.predicted_single_dessin) << "\n";
      auto dessins = dessin_fiber_product(d1, d2);
      std::cout << "dessins: " << dessins.size() << "\n";
      for (std::size_t k = 0; k < dessins.size(); ++k)
        std::cout << "dessin " << k + 1 << ": edges " << dessins[k].edges() << ", valence "
                  << valence(dessins[k]).to_string() << ", genus " << euler_genus(dessins[k]) << "\n";
      return 0;
    }
    if (monodromy_cmd->parsed()) {
      RationalMap f = load_map(map_arg);
      if (show_critical)
        for (const auto& cv : critical_values(f))
          std::cerr << cv.label.to_string() << " " << cv.type.to_string()
                    << (cv.exact || cv.at_infinity ? "" : " ~ " + std::to_string(cv.approx.real()) + (cv.approx.imag() < 0 ? "" : "+") + std::to_string(cv.approx.imag()) + "i")
                    << "\n";
      TrackingOptions opts;
      opts.resolution = resolution;
      write_output(out_path, "# monodromy of " + f.to_string() + "\n" + emit_cover_file(monodromy(f, opts)));
      return 0;
    }
    if (map_product_cmd->parsed()) {
      auto [c1, c2] = monodromy_pair(load_map(map_arg), load_map(map_arg2));
      return emit_decomposition(c1, c2, dargs);
    }
    if (run_cmd->parsed()) {
      auto outcomes = run_corpus(corpus_dir);
      std::cout << corpus_table(outcomes);
      return corpus_passed(outcomes) ? 0 : 3;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
