#include "vclines/generators.hpp"
#include "vclines/json_io.hpp"
#include "vclines/svg.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using vclines::Json;

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kFalse = 3 };

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text(out_path, j.dump(2) + "\n");
}

void maybe_svg(const vclines::PointConfig& cfg, const std::string& svg_path) {
  if (!svg_path.empty()) write_text(svg_path, vclines::config_svg(cfg));
}

struct ConfigArgs {
  std::string input;
  std::string out;
  std::string svg;
};

void add_config_args(CLI::App* cmd, ConfigArgs& args) {
  cmd->add_option("--input", args.input, "point config JSON file")->required();
  cmd->add_option("--out", args.out, "write the JSON report here instead of stdout");
  cmd->add_option("--svg", args.svg, "also write an incidence drawing (SVG) of the input");
}

int run_check_shatter(const ConfigArgs& args, int k, bool witnesses, int limit) {
  vclines::PointConfig cfg = vclines::config_from_json(read_json_file(args.input));
  maybe_svg(cfg, args.svg);
  vclines::ShatterReport report = vclines::shatters(cfg, k, witnesses, limit);
  emit(vclines::shatter_report_json(cfg, report), args.out);
  return report.shattered ? kOk : kFalse;
}

int run_axioms(const ConfigArgs& args, const std::string& b2) {
  vclines::B2Reading reading = b2 == "real-plane" ? vclines::B2Reading::real_plane
                                                  : vclines::B2Reading::within_config;
  vclines::PointConfig cfg = vclines::config_from_json(read_json_file(args.input));
  maybe_svg(cfg, args.svg);

  auto [cover_size, cover] = vclines::min_line_cover(cfg);
  Json out{{"n", cfg.size()}, {"collin", cfg.collin()}, {"min_cover_size", cover_size}};
  int code = kOk;

  if (cfg.size() == 5) {
    auto [two_cover, no_four] = vclines::check_F2(cfg);
    out["conditions"] = Json::array({vclines::verdict_json(two_cover),
                                     vclines::verdict_json(no_four)});
    out["predicted_shattered"] = two_cover.holds && no_four.holds;
    code = two_cover.holds && no_four.holds ? kOk : kFalse;
  } else if (cfg.size() == 9) {
    vclines::F3Characterization c = vclines::characterize_F3(cfg, reading);
    out["characterization"] = vclines::characterization_json(c);
    auto x = vclines::is_x_configuration(cfg);
    out["x_configuration"] = x ? Json(*x) : Json(nullptr);
    code = c.predicted_shattered ? kOk : kFalse;
  } else {
    Json conds = Json::array();
    conds.push_back(vclines::verdict_json(vclines::check_O(cfg)));
    conds.push_back(vclines::verdict_json(vclines::check_A1(cfg)));
    conds.push_back(vclines::verdict_json(vclines::check_A2(cfg)));
    if (cfg.collin() <= 3) {
      conds.push_back(vclines::verdict_json(vclines::check_B1(cfg)));
      conds.push_back(vclines::verdict_json(vclines::check_B2(cfg, reading)));
    }
    out["conditions"] = std::move(conds);
  }
  emit(out, args.out);
  return code;
}

int run_classify(const ConfigArgs& args, int k) {
  vclines::PointConfig cfg = vclines::config_from_json(read_json_file(args.input));
  maybe_svg(cfg, args.svg);
  try {
    vclines::CaseLabel label = vclines::classify_case(cfg, k);
    emit(Json{{"k", k},
              {"label", vclines::case_label_str(label)},
              {"structure", vclines::structure_json(vclines::shatter_structure(cfg))}},
         args.out);
    return kOk;
  } catch (const vclines::not_shattered_error& e) {
    emit(Json{{"k", k}, {"error", e.what()}}, args.out);
    return kFalse;
  }
}

int run_iso(const std::string& a_path, const std::string& b_path, const std::string& out) {
  vclines::PointConfig a = vclines::config_from_json(read_json_file(a_path));
  vclines::PointConfig b = vclines::config_from_json(read_json_file(b_path));
  vclines::ShatterStructure sa = vclines::shatter_structure(a);
  vclines::ShatterStructure sb = vclines::shatter_structure(b);
  std::optional<vclines::IsoCertificate> cert = vclines::shatter_isomorphic(sa, sb);
  Json j{{"isomorphic", cert.has_value()}};
  if (cert) j["certificate"] = vclines::certificate_json(*cert);
  emit(j, out);
  return cert ? kOk : kFalse;
}

std::string label_file_name(vclines::CaseLabel label) {
  std::string s = vclines::case_label_str(label);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s + ".json";
}

int run_reps(int k, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  Json written = Json::array();
  for (const auto& [label, cfg] : vclines::representatives(k)) {
    std::filesystem::path p = std::filesystem::path(out_dir) / label_file_name(label);
    write_text(p.string(), vclines::config_json(cfg).dump(2) + "\n");
    written.push_back(Json{{"label", vclines::case_label_str(label)}, {"file", p.string()}});
  }
  std::cout << Json{{"k", k}, {"written", std::move(written)}}.dump(2) << "\n";
  return kOk;
}

int run_reduce_dim(const std::string& input, int to_dim, const std::string& out) {
  vclines::AffineConfig cfg = vclines::affine_from_json(read_json_file(input));
  if (to_dim < 2 || to_dim > cfg.ambient)
    throw std::invalid_argument("--to-dim must lie in [2, n]");
  Json steps = Json::array();
  while (cfg.ambient > to_dim) {
    vclines::Reduction step = vclines::reduce_dimension(cfg);
    cfg = step.reduced;
    steps.push_back(vclines::reduction_json(step));
  }
  Json j{{"to_dim", to_dim}, {"steps", std::move(steps)}, {"result", vclines::affine_json(cfg)}};
  if (cfg.ambient == 2) {
    Json pts = Json::array();
    for (const vclines::AffineSubspace& e : cfg.elements)
      pts.push_back(Json::array(
          {vclines::rational_str(e.offset[0]), vclines::rational_str(e.offset[1])}));
    j["points"] = std::move(pts);
  }
  emit(j, out);
  return kOk;
}

int run_abstract(bool sk, const std::string& input, int k, int limit, const std::string& out) {
  vclines::FiniteSetSystem sys = vclines::system_from_json(read_json_file(input));
  Json j{{"ground", sys.ground}, {"k", k}};
  if (sk) {
    j["d_k"] = vclines::vc_dim(vclines::k_fold_union(sys, k), limit);
    j["s_k"] = vclines::s_k_count(sys, k, limit);
  } else {
    j["vc_dim"] = vclines::vc_dim(k == 1 ? sys : vclines::k_fold_union(sys, k), limit);
  }
  emit(j, out);
  return kOk;
}

struct FuzzResult {
  bool mismatch = false;
  Json config;
};

int run_fuzz(int k, int samples, std::uint64_t seed, int span, int lines, int threads,
             const std::string& ce_path, const std::string& out) {
  if (lines <= 0) lines = k == 3 ? 3 : 2;
  std::vector<FuzzResult> results(samples);
  auto worker = [&](int offset) {
    for (int i = offset; i < samples; i += threads) {
      vclines::Rng rng(vclines::derive_seed(seed, i));
      vclines::PointConfig cfg = k == 3 ? vclines::equivalence_sample9(rng, span, lines)
                                        : vclines::equivalence_sample5(rng, span, lines);
      bool predicted;
      if (k == 3) {
        predicted = vclines::characterize_F3(cfg).predicted_shattered;
      } else {
        auto [two_cover, no_four] = vclines::check_F2(cfg);
        predicted = two_cover.holds && no_four.holds;
      }
      bool actual = vclines::shatters(cfg, k).shattered;
      if (predicted != actual)
        results[i] = {true, vclines::config_json(cfg)};
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (std::thread& t : pool) t.join();

  int mismatches = 0;
  std::optional<int> first;
  for (int i = 0; i < samples; ++i)
    if (results[i].mismatch) {
      ++mismatches;
      if (!first) first = i;
    }
  Json j{{"k", k}, {"samples", samples}, {"seed", seed},
         {"span", span}, {"lines", lines}, {"mismatches", mismatches}};
  if (first) {
    write_text(ce_path, results[*first].config.dump(2) + "\n");
    j["first_counterexample"] = Json{{"index", *first}, {"file", ce_path}};
  }
  emit(j, out);
  return mismatches == 0 ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedures for point sets shattered by unions of lines"};
  app.require_subcommand(1);

  ConfigArgs shatter_args;
  int shatter_k = 0;
  bool witnesses = false;
  int limit = 0;
  CLI::App* check = app.add_subcommand(
      "check-shatter", "decide whether k-fold unions of lines shatter the config "
                       "(exit 0 shattered, 3 not)");
  check->add_option("--k", shatter_k, "number of lines in a union")->required()
      ->check(CLI::PositiveNumber);
  add_config_args(check, shatter_args);
  check->add_flag("--witnesses", witnesses, "include an isolating cover per subset");
  check->add_option("--limit", limit,
                    "point-count guard (default 16, env VCLINES_MAX_POINTS)");

  ConfigArgs axiom_args;
  std::string b2 = "within-config";
  CLI::App* axioms = app.add_subcommand(
      "axioms", "evaluate the cover/pairing/cross-line conditions; for 5- and 9-point "
                "configs exit reflects the predicted shattering verdict");
  add_config_args(axioms, axiom_args);
  axioms->add_option("--b2-interpretation", b2,
                     "how the meeting condition reads line intersections")
      ->check(CLI::IsMember({"within-config", "real-plane"}));

  ConfigArgs classify_args;
  int classify_k = 0;
  CLI::App* classify = app.add_subcommand(
      "classify", "structure class of a maximal shattered config (exit 3 when not shattered)");
  classify->add_option("--k", classify_k, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  add_config_args(classify, classify_args);

  std::string iso_a, iso_b, iso_out;
  CLI::App* iso = app.add_subcommand(
      "iso", "decide shatter-isomorphism of two configs (exit 0 iso, 3 not)");
  iso->add_option("--a", iso_a, "first config JSON")->required();
  iso->add_option("--b", iso_b, "second config JSON")->required();
  iso->add_option("--out", iso_out, "write the JSON report here instead of stdout");

  int reps_k = 0;
  std::string reps_dir;
  CLI::App* reps = app.add_subcommand(
      "reps", "write built-in representatives of every structure class as JSON files");
  reps->add_option("--k", reps_k, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  reps->add_option("--out", reps_dir, "output directory")->required();

  std::string rd_input, rd_out;
  int to_dim = 2;
  CLI::App* reduce = app.add_subcommand(
      "reduce-dim", "intersect codimension-2 flats with good hyperplane translates down "
                    "to the target dimension");
  reduce->add_option("--input", rd_input, "affine config JSON file")->required();
  reduce->add_option("--to-dim", to_dim, "target ambient dimension (default 2)");
  reduce->add_option("--out", rd_out, "write the JSON report here instead of stdout");

  std::string abs_input, abs_out;
  int abs_k = 1;
  int abs_limit = 0;
  CLI::App* abstract = app.add_subcommand("abstract", "finite set-system calculations");
  abstract->require_subcommand(1);
  CLI::App* abs_vc = abstract->add_subcommand("vc", "VC dimension of the k-fold union");
  CLI::App* abs_sk = abstract->add_subcommand(
      "sk", "number of non-isomorphic maximum shattered structures for the k-fold union");
  for (CLI::App* sub : {abs_vc, abs_sk}) {
    sub->add_option("--input", abs_input, "set system JSON file")->required();
    sub->add_option("--k", abs_k, "union arity (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--limit", abs_limit,
                    "ground-size guard (default 12, env VCLINES_MAX_GROUND)");
    sub->add_option("--out", abs_out, "write the JSON report here instead of stdout");
  }

  int fuzz_k = 0, fuzz_samples = 100, fuzz_span = 10, fuzz_lines = 0;
  int fuzz_threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::uint64_t fuzz_seed = 0;
  std::string fuzz_out, fuzz_ce = "counterexample.json";
  CLI::App* fuzz = app.add_subcommand(
      "fuzz-equivalence", "cross-check the condition-based verdict against the exact "
                          "shattering decision on seeded random configs");
  fuzz->add_option("--k", fuzz_k, "2 (5-point configs) or 3 (9-point configs)")
      ->required()->check(CLI::IsMember({2, 3}));
  fuzz->add_option("--samples", fuzz_samples, "number of configs (default 100)")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fuzz_seed, "base seed; sample i uses a derived stream");
  fuzz->add_option("--span", fuzz_span,
                   "coordinate bound for generated points (default 10, heights stay "
                   "well under 64; smaller values hit more degeneracies)");
  fuzz->add_option("--lines", fuzz_lines,
                   "carrier-line cap for the on-lines branches (default 3 for k=3, 2 "
                   "for k=2; points per line follow from the config size)");
  fuzz->add_option("--threads", fuzz_threads, "worker threads (verdicts are per-sample "
                                              "seeded, so the output is thread-independent)");
  fuzz->add_option("--counterexample-out", fuzz_ce,
                   "file for the first mismatching config (default counterexample.json)");
  fuzz->add_option("--out", fuzz_out, "write the JSON summary here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check_shatter(shatter_args, shatter_k, witnesses, limit);
    if (*axioms) return run_axioms(axiom_args, b2);
    if (*classify) return run_classify(classify_args, classify_k);
    if (*iso) return run_iso(iso_a, iso_b, iso_out);
    if (*reps) return run_reps(reps_k, reps_dir);
    if (*reduce) return run_reduce_dim(rd_input, to_dim, rd_out);
    if (*abstract)
      return run_abstract(abs_sk->parsed(), abs_input, abs_k, abs_limit, abs_out);
    if (*fuzz)
      return run_fuzz(fuzz_k, fuzz_samples, fuzz_seed, fuzz_span, fuzz_lines, fuzz_threads,
                      fuzz_ce, fuzz_out);
  } catch (const Json::parse_error& e) {
    std::cerr << "malformed JSON at byte " << e.byte << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
