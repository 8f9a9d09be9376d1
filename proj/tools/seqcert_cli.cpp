// seqcert command-line surface: ingest JSON descriptors, run the deciders,
// emit verdict reports and the canonical fixture families.
//
// Exit codes: 0 converges / precompact, 1 diverges / not precompact,
// 2 inconclusive, 3 input error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "seqcert/basis.hpp"
#include "seqcert/json_io.hpp"
#include "seqcert/version.hpp"

namespace {

using seqcert::Json;

struct RunConfig {
  std::string input_path;
  std::string eps_grid_arg = "1e-1,1e-2,1e-3,1e-4,1e-5,1e-6";
  seqcert::Index k_max = 64;
  double delta = 1e-9;
  std::uint64_t seed = 0;
  std::string out_path;  // empty: stdout (or "fixtures" dir for fixtures)
};

std::vector<double> parse_eps_grid(const std::string& arg) {
  std::vector<double> grid;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("eps-grid: bad number '" + tok + "'");
    grid.push_back(v);
  }
  if (grid.empty()) throw std::invalid_argument("eps-grid: empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("eps-grid: values must be > 0");
    if (i > 0 && !(grid[i] < grid[i - 1])) {
      throw std::invalid_argument("eps-grid: must be strictly descending");
    }
  }
  return grid;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw seqcert::ParseError(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

void emit(const Json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << report.dump(2) << "\n";
}

Json config_echo(const RunConfig& cfg, const std::vector<double>& grid) {
  return Json{{"eps_grid", grid},
              {"k_max", cfg.k_max},
              {"delta", cfg.delta},
              {"seed", cfg.seed}};
}

int run_check_convergence(const RunConfig& cfg) {
  const auto grid = parse_eps_grid(cfg.eps_grid_arg);
  const Json doc = load_json(cfg.input_path);
  if (!doc.contains("family")) throw seqcert::ParseError("missing field \"family\"");
  if (!doc.contains("candidate")) throw seqcert::ParseError("missing field \"candidate\"");
  const seqcert::Family family = seqcert::family_from_json(doc["family"]);
  const seqcert::SeqElement candidate = seqcert::element_from_json(doc["candidate"]);
  if (!(family.space() == candidate.space())) {
    throw seqcert::ParseError(
        "family and candidate disagree on the space (" + family.space().name() +
        " vs " + candidate.space().name() + ")");
  }

  seqcert::DecideOptions opts;
  opts.eps_grid = grid;
  opts.k_max = cfg.k_max;
  opts.delta = cfg.delta;

  const std::string decider = doc.value("decider", std::string("general"));
  seqcert::Verdict verdict;
  if (decider == "general") verdict = seqcert::decide_convergence(family, candidate, opts);
  else if (decider == "lp") verdict = seqcert::decide_lp(family, candidate, opts);
  else if (decider == "c0") verdict = seqcert::decide_c0(family, candidate, opts);
  else if (decider == "hilbert") verdict = seqcert::decide_hilbert(family, candidate, opts);
  else if (decider == "c") verdict = seqcert::decide_c(family, candidate, opts);
  else throw seqcert::ParseError("field \"decider\": unknown decider \"" + decider + "\"");

  Json report = seqcert::verdict_to_json(verdict);
  report["command"] = "check-convergence";
  report["config"] = config_echo(cfg, grid);
  report["library_version"] = seqcert::kVersion;
  emit(report, cfg.out_path);
  switch (verdict.tag) {
    case seqcert::Verdict::Tag::Converges: return 0;
    case seqcert::Verdict::Tag::Diverges: return 1;
    case seqcert::Verdict::Tag::Inconclusive: return 2;
  }
  return 2;
}

int run_check_compactness(const RunConfig& cfg) {
  const auto grid = parse_eps_grid(cfg.eps_grid_arg);
  const Json doc = load_json(cfg.input_path);
  const seqcert::SetDescriptor set = seqcert::set_from_json(doc);
  const seqcert::CompactnessVerdict verdict =
      seqcert::check_precompact(set, grid, cfg.k_max);

  Json report = seqcert::compactness_verdict_to_json(verdict);
  report["command"] = "check-compactness";
  report["config"] = config_echo(cfg, grid);
  report["library_version"] = seqcert::kVersion;
  emit(report, cfg.out_path);
  switch (verdict.tag) {
    case seqcert::CompactnessVerdict::Tag::Precompact: return 0;
    case seqcert::CompactnessVerdict::Tag::NotPrecompact: return 1;
    case seqcert::CompactnessVerdict::Tag::Inconclusive: return 2;
  }
  return 2;
}

seqcert::BasisDescriptor basis_from_json(const Json& doc,
                                         const seqcert::SpaceKind& space) {
  if (!doc.contains("basis")) return seqcert::BasisDescriptor::for_space(space);
  const Json& b = doc["basis"];
  const std::string family = b.value("family", std::string("standard"));
  if (family == "standard") return seqcert::BasisDescriptor::standard();
  if (family == "c_standard") return seqcert::BasisDescriptor::c_standard();
  if (family == "finite_rotation") {
    if (!b.contains("matrix") || !b["matrix"].is_array()) {
      throw seqcert::ParseError("missing field \"basis.matrix\"");
    }
    const auto& rows = b["matrix"];
    const Eigen::Index d = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd q(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (!rows[i].is_array() || static_cast<Eigen::Index>(rows[i].size()) != d) {
        throw seqcert::ParseError("field \"basis.matrix\": not square");
      }
      for (Eigen::Index k = 0; k < d; ++k) q(i, k) = rows[i][k].get<double>();
    }
    return seqcert::BasisDescriptor::finite_rotation(q);
  }
  throw seqcert::ParseError("field \"basis.family\": unknown basis \"" + family + "\"");
}

int run_expand(const RunConfig& cfg) {
  const Json doc = load_json(cfg.input_path);
  if (!doc.contains("element")) throw seqcert::ParseError("missing field \"element\"");
  const seqcert::SeqElement x = seqcert::element_from_json(doc["element"]);
  const seqcert::Index k = doc.value("k", seqcert::Index(8));
  const auto basis = basis_from_json(doc, x.space());
  const auto coords = seqcert::expand(x, basis, k, cfg.delta);

  Json report;
  report["command"] = "expand";
  report["coordinates"] = coords;
  report["first_index"] =
      basis.family == seqcert::BasisDescriptor::Family::CStandard ? 0 : 1;
  report["config"] = config_echo(cfg, parse_eps_grid(cfg.eps_grid_arg));
  report["library_version"] = seqcert::kVersion;
  emit(report, cfg.out_path);
  return 0;
}

int run_norms(const RunConfig& cfg) {
  const Json doc = load_json(cfg.input_path);
  const seqcert::SeqElement x =
      seqcert::element_from_json(doc.contains("element") ? doc["element"] : doc);
  const seqcert::NormInterval nb = seqcert::norm_bounds(x);

  Json report;
  report["command"] = "norms";
  report["norm"] = {{"lo", nb.lo}, {"hi", nb.hi}};
  report["tail_norms"] = Json::array();
  for (seqcert::Index K : {0, 1, 2, 4, 8, 16, 32, 64}) {
    const seqcert::NormInterval tb = seqcert::tail_norm_bounds(x, K);
    report["tail_norms"].push_back({{"K", K}, {"lo", tb.lo}, {"hi", tb.hi}});
  }
  report["config"] = config_echo(cfg, parse_eps_grid(cfg.eps_grid_arg));
  report["library_version"] = seqcert::kVersion;
  emit(report, cfg.out_path);
  return 0;
}

int run_fixtures(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.out_path.empty() ? fs::path("fixtures")
                                            : fs::path(cfg.out_path);
  fs::create_directories(dir);

  using seqcert::Family;
  using seqcert::SeqElement;
  using seqcert::SetDescriptor;
  using seqcert::SpaceKind;
  using seqcert::TailModel;
  using seqcert::Vector;

  const SpaceKind l2 = SpaceKind::lp(2.0);
  const SeqElement zero_l2 = SeqElement::zero(l2);
  const SeqElement zero_c = SeqElement::zero(SpaceKind::c());

  auto write = [&](const std::string& name, Json j) {
    std::ofstream out(dir / name);
    out << j.dump(2) << "\n";
  };

  auto convergence_fixture = [&](const Family& f, const SeqElement& cand,
                                 const std::string& verdict) {
    Json j;
    j["kind"] = "convergence";
    j["family"] = seqcert::family_to_json(f);
    j["candidate"] = seqcert::element_to_json(cand);
    j["documented_verdict"] = verdict;
    return j;
  };
  auto compactness_fixture = [&](const SetDescriptor& s,
                                 const std::string& verdict) {
    Json j = seqcert::set_to_json(s);
    j["kind"] = "compactness";
    j["documented_verdict"] = verdict;
    return j;
  };

  Vector member(2);
  member << 1.0, 0.5;
  write("constant.json",
        convergence_fixture(
            Family::constant(SeqElement(l2, member, TailModel::zero())),
            SeqElement(l2, member, TailModel::zero()), "converges"));
  write("basis_shift.json",
        convergence_fixture(Family::basis_shift(l2, 1.0), zero_l2, "diverges"));
  write("alternating.json",
        convergence_fixture(Family::alternating(l2, 1.0), zero_l2, "diverges"));
  write("geometric_ramp.json",
        convergence_fixture(Family::geometric_ramp(l2, 0.5), zero_l2, "converges"));
  write("plateau_shift.json",
        convergence_fixture(Family::plateau_shift(), zero_c, "diverges"));

  write("hilbert_cube.json",
        compactness_fixture(
            SetDescriptor::hilbert_cube(l2, TailModel::geometric(1.0, 0.5)),
            "precompact"));
  write("basis_vectors.json",
        compactness_fixture(SetDescriptor::basis_vectors(l2, 1.0),
                            "not_precompact"));
  write("ball.json",
        compactness_fixture(SetDescriptor::ball(l2, 1.0), "not_precompact"));
  write("finite_set.json",
        compactness_fixture(
            SetDescriptor::finite_set(
                l2, {SeqElement::basis_vector(l2, 1),
                     SeqElement::basis_vector(l2, 2).scaled(2.0)}),
            "precompact"));

  std::cout << "wrote 9 fixtures to " << dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified convergence and precompactness decisions in "
               "sequence spaces with Schauder bases"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  RunConfig cfg;
  app.add_option("--eps-grid", cfg.eps_grid_arg,
                 "comma-separated strictly descending positive epsilons");
  app.add_option("--k-max", cfg.k_max, "coordinate/tail index cap");
  app.add_option("--delta", cfg.delta, "decision tolerance");
  app.add_option("--seed", cfg.seed, "RNG seed (echoed in reports)");
  app.add_option("--out", cfg.out_path, "output path (report file or fixtures dir)");

  auto* conv = app.add_subcommand("check-convergence",
                                  "decide convergence of a family to a candidate");
  conv->add_option("input", cfg.input_path, "JSON input file")->required();
  auto* comp = app.add_subcommand("check-compactness",
                                  "decide precompactness of a described set");
  comp->add_option("input", cfg.input_path, "JSON input file")->required();
  auto* expand_cmd = app.add_subcommand("expand", "Schauder coordinates of an element");
  expand_cmd->add_option("input", cfg.input_path, "JSON input file")->required();
  auto* norms_cmd = app.add_subcommand("norms", "norm and tail-norm enclosures");
  norms_cmd->add_option("input", cfg.input_path, "JSON input file")->required();
  app.add_subcommand("fixtures", "write the canonical fixture families");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!(cfg.delta > 0.0)) throw std::invalid_argument("delta must be > 0");
    if (conv->parsed()) return run_check_convergence(cfg);
    if (comp->parsed()) return run_check_compactness(cfg);
    if (expand_cmd->parsed()) return run_expand(cfg);
    if (norms_cmd->parsed()) return run_norms(cfg);
    return run_fixtures(cfg);
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    err["library_version"] = seqcert::kVersion;
    std::cerr << err.dump(2) << "\n";
    return 3;
  }
}
