#include "cli/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/manifest.hpp"
#include "cli/svg_overlay.hpp"
#include "sdn/sdn.hpp"

namespace sdn::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  double T = kDefaultT;
  double C = kDefaultC;
  double a = kDefaultRadiusScale;
  double safety_factor = 0.99;
  double kkt_tol = 1e-3;
  std::size_t max_updates = 0;
  std::size_t bins = kDefaultBins;
  double threshold = 0.0;
  std::size_t bin = 0;
  bool auto_threshold = false;
  std::size_t max_nodes = kDefaultMaxSkeletonNodes;
  std::string polarity = "dark";
  int binarize_threshold = 128;
  bool allow_error = false;
  bool verbose = false;
  std::string out_dir = ".";
  std::string reference;

  // Set when the option was given on the command line or in the config file.
  const CLI::Option* a_opt = nullptr;
  const CLI::Option* threshold_opt = nullptr;
  const CLI::Option* bin_opt = nullptr;
};

struct Paths {
  std::string input;
  std::string script;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  if (!out) throw IoError(fmt::format("error writing '{}'", path.string()));
}

fs::path output_dir(const Options& opt) {
  const fs::path dir = opt.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
  return dir;
}

fs::path output_path(const Options& opt, const std::string& input, const std::string& suffix) {
  return output_dir(opt) / (fs::path(input).stem().string() + suffix);
}

BinarizeOptions binarize_options(const Options& opt) {
  return BinarizeOptions{opt.binarize_threshold, parse_polarity(opt.polarity)};
}

double radius_scale(const Options& opt, const SdnModel& model) {
  return opt.a_opt && opt.a_opt->count() > 0 ? opt.a : model.constants().a;
}

int cmd_train(const Options& opt, const Paths& paths, std::ostream& out, std::ostream& err) {
  const BinaryImage image = load_image(paths.input, binarize_options(opt));

  TrainConfig config;
  config.T = opt.T;
  config.C = opt.C;
  config.a = opt.a;
  config.safety_factor = opt.safety_factor;
  config.kkt_tol = opt.kkt_tol;
  config.max_updates = opt.max_updates;
  ProgressCallback progress;
  if (opt.verbose) {
    progress = [&err](const TrainProgress& p) {
      err << fmt::format("update {:>9}  Q={:.9g}  kkt={:.3g}\n", p.update, p.objective, p.kkt_violation);
    };
  }

  const auto start = std::chrono::steady_clock::now();
  const TrainResult result = train_image(image, config, progress);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const SdnModel& model = result.model;
  const std::size_t errors = pixel_error(model, image);
  const fs::path model_path = output_path(opt, paths.input, ".sdn");
  save_model(model, model_path);

  RunManifest manifest;
  manifest.command = "train";
  manifest.input = paths.input;
  manifest.config = {{"T", opt.T},
                     {"C", opt.C},
                     {"a", opt.a},
                     {"m", double(opt.bins)},
                     {"safety_factor", opt.safety_factor},
                     {"kkt_tol", opt.kkt_tol}};
  manifest.note = "seedless and deterministic: fixed pair-selection order, lowest index wins ties";
  manifest.outputs = {model_path.string()};
  manifest.metrics = {{"pixel_error", double(errors)},
                      {"k", double(model.size())},
                      {"s1", double(model.foreground_count())},
                      {"s2", double(model.background_count())},
                      {"train_seconds", seconds},
                      {"updates", double(result.stats.updates)},
                      {"kkt_violation", result.stats.kkt_violation},
                      {"objective", result.stats.objective}};
  const fs::path manifest_path = output_path(opt, paths.input, ".train.json");
  manifest.write(manifest_path);

  out << fmt::format("image {}x{}  pixels {}  foreground {}\n", image.width(), image.height(), image.size(),
                     image.foreground_count());
  out << fmt::format("k={} s1={} s2={} pixel_error={}\n", model.size(), model.foreground_count(),
                     model.background_count(), errors);
  out << fmt::format("model: {}\nmanifest: {}\n", model_path.string(), manifest_path.string());
  if (errors > 0 && !opt.allow_error) {
    err << fmt::format("reconstruction has {} wrong pixels (use --allow-error to accept)\n", errors);
    return kPixelError;
  }
  return kSuccess;
}

int cmd_reconstruct(const Options& opt, const Paths& paths, std::ostream& out, std::ostream& err) {
  const SdnModel model = load_model(paths.input);
  const BinaryImage recon = reconstruct(model);
  const fs::path pgm = output_path(opt, paths.input, ".recon.pgm");
  save_pgm(recon, pgm, parse_polarity(opt.polarity));
  out << fmt::format("reconstruction: {}\n", pgm.string());

  RunManifest manifest{"reconstruct", paths.input, {}, {pgm.string()}, {}, {}};
  int code = kSuccess;
  if (!opt.reference.empty()) {
    const BinaryImage reference = load_image(opt.reference, binarize_options(opt));
    const std::size_t errors = pixel_error(model, reference);
    manifest.metrics["pixel_error"] = double(errors);
    out << fmt::format("pixel_error={}\n", errors);
    if (errors > 0 && !opt.allow_error) {
      err << fmt::format("reconstruction differs from the reference in {} pixels\n", errors);
      code = kPixelError;
    }
  }
  manifest.write(output_path(opt, paths.input, ".reconstruct.json"));
  return code;
}

int cmd_oneclass(const Options& opt, const Paths& paths, std::ostream& out, std::ostream&) {
  const SdnModel model = load_model(paths.input);
  const double a = radius_scale(opt, model);
  const BinaryImage image = render_one_class(model, model.source_width(), model.source_height(), a);
  const fs::path pgm = output_path(opt, paths.input, ".oneclass.pgm");
  save_pgm(image, pgm, parse_polarity(opt.polarity));
  const std::size_t agree = image.size() - hamming_distance(image, reconstruct(model));
  out << fmt::format("one-class render (a={:g}, {} foreground domains): {}\n", a, model.foreground_count(),
                     pgm.string());
  out << fmt::format("agreement with full classifier: {}/{} pixels\n", agree, image.size());
  RunManifest manifest{"oneclass", paths.input, {{"a", a}}, {pgm.string()},
                       {{"agreement", double(agree) / double(image.size())}}, {}};
  manifest.write(output_path(opt, paths.input, ".oneclass.json"));
  return kSuccess;
}

int cmd_skeleton(const Options& opt, const Paths& paths, std::ostream& out, std::ostream&) {
  const SdnModel model = load_model(paths.input);
  const double a = radius_scale(opt, model);
  const SigmaHistogram histogram = sigma_histogram(model, opt.bins);
  out << format_histogram_table(histogram);

  ThresholdChoice choice = AutoThreshold{opt.max_nodes};
  if (!opt.auto_threshold && opt.threshold_opt->count() > 0) {
    choice = SigmaThreshold{opt.threshold};
  } else if (!opt.auto_threshold && opt.bin_opt->count() > 0) {
    choice = BinThreshold{opt.bin};
  }
  const SkeletonGraph graph = extract_skeleton(model, choice, opt.bins, a);

  const fs::path txt = output_path(opt, paths.input, ".skeleton.txt");
  const fs::path svg = output_path(opt, paths.input, ".skeleton.svg");
  write_text(txt, format_skeleton(graph));
  write_text(svg, render_overlay_svg(reconstruct(model), threshold_domains(model, graph.threshold), a, &graph));

  std::size_t fallback = 0;
  for (const auto& e : graph.edges) fallback += e.kind == EdgeKind::ClosestFallback;
  out << fmt::format("threshold sigma^2 > {:.6g}: {} nodes, {} edges ({} closest-fallback)\n", graph.threshold,
                     graph.nodes.size(), graph.edges.size(), fallback);
  out << fmt::format("skeleton: {}\noverlay: {}\n", txt.string(), svg.string());
  RunManifest manifest{"skeleton",
                       paths.input,
                       {{"a", a}, {"m", double(opt.bins)}, {"threshold", graph.threshold}},
                       {txt.string(), svg.string()},
                       {{"nodes", double(graph.nodes.size())}, {"edges", double(graph.edges.size())}},
                       {}};
  manifest.write(output_path(opt, paths.input, ".skeleton.json"));
  return kSuccess;
}

int cmd_transform(const Options& opt, const Paths& paths, std::ostream& out, std::ostream&) {
  const SdnModel model = load_model(paths.input);
  const double a = radius_scale(opt, model);
  const auto transforms = parse_transform_script(read_text(paths.script));
  const SdnModel moved = transform_groups(model, transforms, a);
  const BinaryImage image = render_one_class(moved, model.source_width(), model.source_height(), a);

  const fs::path pgm = output_path(opt, paths.input, ".transformed.pgm");
  const fs::path moved_model = output_path(opt, paths.input, ".transformed.sdn");
  save_pgm(image, pgm, parse_polarity(opt.polarity));
  save_model(moved, moved_model);
  out << fmt::format("applied {} group transforms\nrender: {}\nmodel: {}\n", transforms.size(), pgm.string(),
                     moved_model.string());
  RunManifest manifest{"transform", paths.input, {{"a", a}}, {pgm.string(), moved_model.string()},
                       {{"transforms", double(transforms.size())}}, paths.script};
  manifest.write(output_path(opt, paths.input, ".transform.json"));
  return kSuccess;
}

int cmd_groups(const Options& opt, const Paths& paths, std::ostream& out, std::ostream&) {
  const SdnModel model = load_model(paths.input);
  const auto groups = group_domains(model, radius_scale(opt, model));
  out << fmt::format("{} groups\n", groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out << fmt::format("GROUP {} MEMBERS {} CENTROID {:.6g} {:.6g}\n", g, groups[g].member_ids.size(),
                       groups[g].centroid.col, groups[g].centroid.row);
  }
  return kSuccess;
}

int cmd_inspect(const Options& opt, const Paths& paths, std::ostream& out, std::ostream&) {
  const SdnModel model = load_model(paths.input);
  const auto& k = model.constants();
  out << fmt::format("source {}x{}  T={:g} C={:g} a={:g}\n", model.source_width(), model.source_height(), k.T, k.C,
                     k.a);
  out << fmt::format("k={} s1={} s2={} ({:.2f}% of pixels)\n", model.size(), model.foreground_count(),
                     model.background_count(),
                     100.0 * double(model.size()) / (double(model.source_width()) * model.source_height()));
  if (model.foreground_count() > 0) out << format_histogram_table(sigma_histogram(model, opt.bins));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Similarity domains network: sparse RBF shape models and skeletons", "sdn"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults (flags override it)");

  Options opt;
  app.add_option("--T", opt.T, "cross-class kernel bound")->capture_default_str();
  app.add_option("--C", opt.C, "box bound on alpha")->capture_default_str();
  opt.a_opt = app.add_option("--a", opt.a, "radius scale in sqrt(a*sigma^2)")->capture_default_str();
  app.add_option("--safety-factor", opt.safety_factor, "shrink factor on the fitted sigma^2")->capture_default_str();
  app.add_option("--kkt-tol", opt.kkt_tol, "KKT stopping tolerance")->capture_default_str();
  app.add_option("--max-updates", opt.max_updates, "cap on solver pair updates (0 = automatic)")
      ->capture_default_str();
  app.add_option("--bins", opt.bins, "histogram bins for sigma^2")->capture_default_str()->check(CLI::PositiveNumber);
  opt.threshold_opt = app.add_option("--threshold", opt.threshold, "keep foreground domains with sigma^2 above this");
  opt.bin_opt = app.add_option("--bin", opt.bin, "keep this histogram bin and all larger ones");
  app.add_flag("--auto", opt.auto_threshold, "pick the skeleton threshold automatically (default)");
  app.add_option("--max-nodes", opt.max_nodes, "node cap for --auto")->capture_default_str();
  app.add_option("--polarity", opt.polarity, "dark or bright foreground")->capture_default_str();
  app.add_option("--binarize-threshold", opt.binarize_threshold, "gray level threshold")->capture_default_str();
  app.add_flag("--allow-error", opt.allow_error, "exit 0 even when pixel error is nonzero");
  app.add_flag("--verbose,-v", opt.verbose, "report solver progress");
  app.add_option("--out-dir,-o", opt.out_dir, "directory for outputs")->capture_default_str();

  Paths paths;
  auto* train = app.add_subcommand("train", "train a model on a binary image");
  train->add_option("image", paths.input, "PGM or PNG input")->required();
  auto* recon = app.add_subcommand("reconstruct", "render the full classifier to PGM");
  recon->add_option("model", paths.input)->required();
  recon->add_option("--reference", opt.reference, "image to count pixel errors against");
  auto* oneclass = app.add_subcommand("oneclass", "render the foreground-only approximation");
  oneclass->add_option("model", paths.input)->required();
  auto* skeleton = app.add_subcommand("skeleton", "extract the skeleton from large domains");
  skeleton->add_option("model", paths.input)->required();
  auto* transform = app.add_subcommand("transform", "scale and shift domain groups");
  transform->add_option("model", paths.input)->required();
  transform->add_option("script", paths.script, "lines 'GROUP <id> SCALE <s> SHIFT <dx> <dy>'")->required();
  auto* groups = app.add_subcommand("groups", "list domain groups");
  groups->add_option("model", paths.input)->required();
  auto* inspect = app.add_subcommand("inspect", "summarize a model file");
  inspect->add_option("model", paths.input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidation;
  }

  try {
    if (train->parsed()) return cmd_train(opt, paths, out, err);
    if (recon->parsed()) return cmd_reconstruct(opt, paths, out, err);
    if (oneclass->parsed()) return cmd_oneclass(opt, paths, out, err);
    if (skeleton->parsed()) return cmd_skeleton(opt, paths, out, err);
    if (transform->parsed()) return cmd_transform(opt, paths, out, err);
    if (groups->parsed()) return cmd_groups(opt, paths, out, err);
    if (inspect->parsed()) return cmd_inspect(opt, paths, out, err);
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kConvergence;
  } catch (const EmptySkeletonError& e) {
    err << "empty skeleton: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kValidation;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace sdn::cli
