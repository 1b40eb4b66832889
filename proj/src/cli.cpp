#include "qlam/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qlam/cleaning.hpp"
#include "qlam/leaf_io.hpp"
#include "qlam/render.hpp"
#include "qlam/renorm.hpp"

namespace qlam {

namespace {

HyperbolicRoot root_from_args(const std::vector<std::string>& endpoints) {
  return make_root(Chord(Angle::parse(endpoints.at(0)), Angle::parse(endpoints.at(1))));
}

std::vector<LeafRecord> minor_records(const std::vector<MinorLeaf>& minors,
                                      const std::vector<Angle>& points = {}) {
  std::vector<MinorLeaf> sorted = minors;
  std::sort(sorted.begin(), sorted.end(),
            [](const MinorLeaf& x, const MinorLeaf& y) {
              if (x.period != y.period) return x.period < y.period;
              return x.chord < y.chord;
            });
  std::vector<LeafRecord> records;
  records.reserve(sorted.size() + points.size());
  for (const auto& m : sorted) {
    records.emplace_back(m.chord, "period " + std::to_string(m.period));
  }
  for (const auto& p : points) records.emplace_back(Chord(p, p), "endpoints");
  return records;
}

int command_gen_qml(int max_period, const std::string& out) {
  write_leaf_file(out, minor_records(lavaurs_qml(max_period)));
  return 0;
}

int command_clean_l(int max_period, const std::string& out_kept,
                    const std::string& out_erased) {
  const QmlL result = build_qml_l(max_period);
  write_leaf_file(out_kept, minor_records(result.kept, result.retained_endpoints));
  write_leaf_file(out_erased, minor_records(result.erased));
  return 0;
}

int command_nr(int max_period, int dyadic_depth, const std::string& out_dir) {
  const QmlNr result = build_qml_nr(max_period, dyadic_depth);
  std::filesystem::create_directories(out_dir);
  const auto path = [&](const char* name) {
    return (std::filesystem::path(out_dir) / name).string();
  };
  write_leaf_file(path("kept.leaves"), minor_records(result.kept));
  write_leaf_file(path("erased.leaves"), minor_records(result.erased));
  write_leaf_file(path("vgaps.leaves"), plain_records(result.v_gap_edges));
  write_leaf_file(path("canr.leaves"), plain_records(result.ca_nr_edges));
  return 0;
}

int command_pullback(const std::string& leaf, const std::vector<std::string>& quad,
                     int depth, const std::string& out) {
  CriticalPortrait portrait = [&] {
    if (!leaf.empty()) {
      // --leaf t: the critical leaf collapsing to the angle t
      const Angle t = Angle::parse(leaf);
      return CriticalPortrait::critical_leaf(
          Angle::from_fraction(t.numerator(), t.denominator() * 2));
    }
    std::vector<Angle> vertices;
    for (const auto& s : quad) vertices.push_back(Angle::parse(s));
    return CriticalPortrait::critical_quadrilateral(std::move(vertices));
  }();
  const Lamination result = build_pullback(portrait, depth);
  write_leaf_file(out, plain_records(result.leaves()));
  return 0;
}

int command_tune(bool inverse, const std::vector<std::string>& root_endpoints,
                 const std::string& angle, std::ostream& out) {
  const HyperbolicRoot root = root_from_args(root_endpoints);
  const Angle t = Angle::parse(angle);
  if (!inverse) {
    out << tune(root, t).str() << '\n';
    return 0;
  }
  const auto result = untune(root, t);
  out << (result ? result->str() : "none") << '\n';
  return 0;
}

int command_classify(const std::vector<std::string>& minor, std::ostream& out) {
  const MinorLeaf m = make_minor(Chord(Angle::parse(minor.at(0)), Angle::parse(minor.at(1))));
  if (!is_valid_minor(m.chord)) {
    throw std::invalid_argument("not a valid minor: " + m.chord.str());
  }
  out << component_type_name(component_type(m)) << ' '
      << (is_fixed_return(m) ? "fixed-return" : "non-fixed-return") << '\n';
  return 0;
}

int command_hausdorff(const std::string& file1, const std::string& file2,
                      std::ostream& out) {
  const Lamination l1 = read_leaf_file(file1).to_lamination();
  const Lamination l2 = read_leaf_file(file2).to_lamination();
  const Rational d = hausdorff_distance(l1, l2);
  if (d == 0) {
    out << "0\n";
  } else {
    out << d << '\n';
  }
  return 0;
}

int command_render(const std::string& in, const std::string& out_path,
                   const std::vector<double>& zoom) {
  std::vector<RenderLayer> layers;
  std::string token;
  std::istringstream files(in);
  while (std::getline(files, token, ',')) {
    const LeafFile file = read_leaf_file(token);
    layers.push_back({token, file.chords, file.points});
  }
  RenderStyle style;
  std::optional<Viewport> viewport;
  if (!zoom.empty()) viewport = Viewport{zoom.at(0), zoom.at(1), zoom.at(2)};
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
  file << render_svg(layers, style, viewport);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quadratic invariant laminations under angle doubling"};
  app.require_subcommand(1);

  int max_period = 8;
  int dyadic_depth = 4;
  int depth = 6;
  std::string out_path, out_kept, out_erased, out_dir, leaf, angle, in_files;
  std::vector<std::string> quad, root_endpoints, minor;
  std::vector<double> zoom;
  std::string hausdorff_a, hausdorff_b;

  auto* gen = app.add_subcommand("gen-qml", "generate the quadratic minor lamination");
  gen->add_option("--max-period", max_period)->required()->check(CLI::Range(2, 24));
  gen->add_option("--out", out_path)->required();

  auto* clean = app.add_subcommand("clean-l", "erase non-fixed-return minors");
  clean->add_option("--max-period", max_period)->required()->check(CLI::Range(2, 24));
  clean->add_option("--out-kept", out_kept)->required();
  clean->add_option("--out-erased", out_erased)->required();

  auto* nr = app.add_subcommand("nr", "build the non-renormalizable lamination");
  nr->add_option("--max-period", max_period)->required()->check(CLI::Range(2, 24));
  nr->add_option("--dyadic-depth", dyadic_depth)->required()->check(CLI::Range(0, 24));
  nr->add_option("--out-dir", out_dir)->required();

  auto* pullback_cmd = app.add_subcommand("pullback", "iterate sibling preimages");
  auto* leaf_opt = pullback_cmd->add_option("--leaf", leaf, "collapse angle of a critical leaf");
  auto* quad_opt = pullback_cmd->add_option("--quad", quad)->expected(4);
  pullback_cmd->add_option("--depth", depth)->required()->check(CLI::Range(0, 32));
  pullback_cmd->add_option("--out", out_path)->required();
  leaf_opt->excludes(quad_opt);

  auto* tune_cmd = app.add_subcommand("tune", "binary-word tuning substitution");
  tune_cmd->add_option("--root", root_endpoints)->expected(2)->required();
  tune_cmd->add_option("--angle", angle)->required();

  auto* untune_cmd = app.add_subcommand("untune", "inverse block parse");
  untune_cmd->add_option("--root", root_endpoints)->expected(2)->required();
  untune_cmd->add_option("--angle", angle)->required();

  auto* classify = app.add_subcommand("classify", "component type of a minor");
  classify->add_option("--minor", minor)->expected(2)->required();

  auto* hausdorff = app.add_subcommand("hausdorff", "distance between two leaf files");
  hausdorff->add_option("file1", hausdorff_a)->required();
  hausdorff->add_option("file2", hausdorff_b)->required();

  auto* render = app.add_subcommand("render", "SVG of one or more leaf files");
  render->add_option("--in", in_files)->required();
  render->add_option("--out", out_path)->required();
  render->add_option("--zoom", zoom, "cx cy scale")->expected(3);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (gen->parsed()) return command_gen_qml(max_period, out_path);
    if (clean->parsed()) return command_clean_l(max_period, out_kept, out_erased);
    if (nr->parsed()) return command_nr(max_period, dyadic_depth, out_dir);
    if (pullback_cmd->parsed()) {
      if (leaf.empty() && quad.empty()) {
        err << "pullback requires --leaf or --quad\n";
        return 1;
      }
      return command_pullback(leaf, quad, depth, out_path);
    }
    if (tune_cmd->parsed()) return command_tune(false, root_endpoints, angle, out);
    if (untune_cmd->parsed()) return command_tune(true, root_endpoints, angle, out);
    if (classify->parsed()) return command_classify(minor, out);
    if (hausdorff->parsed()) return command_hausdorff(hausdorff_a, hausdorff_b, out);
    if (render->parsed()) return command_render(in_files, out_path, zoom);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace qlam
