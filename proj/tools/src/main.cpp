// dirmet: command-line front end.
//
// Every invocation prints one JSON object on stdout. Diagnostics and
// timings go to stderr. Exit status: 0 success, 1 I/O or format error,
// 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirmet/constructions.hpp"
#include "dirmet/distances.hpp"
#include "dirmet/gallery.hpp"
#include "dirmet/io.hpp"
#include "dirmet_tools/checks.hpp"

namespace {

using nlohmann::json;
using namespace dirmet;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;

struct Options {
  std::size_t exhaustive_gh = 16;
  std::size_t exhaustive_cdis = 12;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  double tol = kDistanceTolerance;
  std::string out;

  SearchBudget budget() const {
    SearchBudget b;
    b.exhaustive_gh = exhaustive_gh;
    b.exhaustive_cdis = exhaustive_cdis;
    b.restarts = restarts;
    b.seed = seed;
    return b;
  }
};

json ext(ExtReal v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json certificate_json(const Certificate& c) {
  if (const auto* maps = std::get_if<MapPair>(&c)) {
    return {{"type", "maps"}, {"forward", maps->forward}, {"backward", maps->backward}};
  }
  if (const auto* pairs = std::get_if<std::vector<PointPair>>(&c)) {
    json p = json::array();
    for (const auto& [x, y] : *pairs) p.push_back({x, y});
    return {{"type", "pairs"}, {"pairs", std::move(p)}};
  }
  return nullptr;
}

std::vector<Point2> parse_points(const std::string& text) {
  std::vector<Point2> pts;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw io::FormatError("--points: expected x,y;x,y;...");
    try {
      pts.push_back({std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1))});
    } catch (const std::exception&) {
      throw io::FormatError("--points: bad number in \"" + item + "\"");
    }
  }
  return pts;
}

std::size_t resolve_point(const FiniteDSpace& s, const std::string& key) {
  if (auto i = s.find(key)) return *i;
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || v >= s.size()) {
    throw io::FormatError("no point with label or index \"" + key + "\"");
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> resolve_set(const FiniteDSpace& s, const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string key;
  while (std::getline(ss, key, ';')) out.push_back(resolve_point(s, key));
  if (out.empty()) throw io::FormatError("empty point set");
  return out;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string name;
  std::size_t k = 8;
  std::size_t n = 5;
  std::size_t m = 2;
  std::size_t subdivisions = 1;
  std::string steps = "default";
  std::string points = "1,0;2,0;0,1;0,2;1,1;-1,0.5;-2,1";
};

int run_gen(const GenArgs& a, const Options& o) {
  gallery::GridSpec spec;
  spec.k = a.k;
  if (a.steps == "unit") {
    spec.steps = gallery::GridSpec::unit_steps();
  } else if (a.steps != "default") {
    throw io::FormatError("--steps must be default or unit");
  }
  FiniteDSpace s;
  if (a.name == "interval") {
    s = gallery::directed_interval(a.k);
  } else if (a.name == "square") {
    s = gallery::directed_square_grid(spec);
  } else if (a.name == "torus") {
    s = gallery::flat_torus_grid(spec);
  } else if (a.name == "source-sink") {
    s = gallery::source_sink_interval(a.k);
  } else if (a.name == "open-book") {
    s = gallery::open_book(a.n, a.m);
  } else if (a.name == "sncf") {
    s = gallery::sncf_plane(parse_points(a.points));
  } else if (a.name == "hollow-square") {
    s = gallery::hollow_square(a.subdivisions);
  } else {
    throw io::FormatError("unknown space \"" + a.name + "\"");
  }
  json report{{"command", "gen"},
              {"name", a.name},
              {"points", s.size()},
              {"edges", s.edges().size()}};
  if (a.name == "open-book") report["zz_ab"] = ext(zigzag_row(s, 0)[1]);
  if (o.out.empty()) {
    report["space"] = json::parse(io::space_to_json(s));
  } else {
    io::save_text(o.out, io::space_to_json(s));
    report["file"] = o.out;
  }
  emit(report);
  return kOk;
}

// --- zigzag ----------------------------------------------------------------

int run_zigzag(const std::string& path, const Options& o) {
  const DirectedMetricSpace z(io::load_space(path));
  json report{{"command", "zigzag"},
              {"points", z.size()},
              {"diameter", z.size() > 0 ? ext(diameter(z.zz())) : json(0)}};
  if (o.out.empty()) {
    json zz = json::array(), reach = json::array();
    for (std::size_t i = 0; i < z.size(); ++i) {
      json zr = json::array(), rr = json::array();
      for (std::size_t j = 0; j < z.size(); ++j) {
        zr.push_back(ext(z.zz()(i, j)));
        rr.push_back(z.reach()(i, j) ? 1 : 0);
      }
      zz.push_back(std::move(zr));
      reach.push_back(std::move(rr));
    }
    report["zz"] = std::move(zz);
    report["reach"] = std::move(reach);
  } else {
    const std::string zz_path = o.out + "_zz.csv";
    const std::string reach_path = o.out + "_reach.csv";
    io::save_text(zz_path, io::matrix_csv(z.zz()));
    io::save_text(reach_path, io::reachability_csv(z.reach()));
    report["files"] = {zz_path, reach_path};
  }
  emit(report);
  return kOk;
}

// --- dist ------------------------------------------------------------------

struct DistArgs {
  std::string kind;
  std::vector<std::string> files;
  std::string set_a, set_b;
};

int run_dist(const DistArgs& a, const Options& o) {
  if (a.kind == "hausdorff") {
    if (a.files.size() != 1 || a.set_a.empty() || a.set_b.empty()) {
      throw io::FormatError("hausdorff takes one space file plus --A and --B");
    }
    const DirectedMetricSpace z(io::load_space(a.files[0]));
    const auto sa = resolve_set(z.space(), a.set_a);
    const auto sb = resolve_set(z.space(), a.set_b);
    emit({{"command", "dist"},
          {"kind", "hausdorff"},
          {"value", ext(directed_hausdorff(z, sa, sb))},
          {"base_value", ext(hausdorff(z.space().base().materialize(), sa, sb))},
          {"exact", true}});
    return kOk;
  }
  if (a.files.size() != 2) throw io::FormatError(a.kind + " takes two space files");
  const DirectedMetricSpace x(io::load_space(a.files[0]));
  const DirectedMetricSpace y(io::load_space(a.files[1]));
  DistanceReport r;
  DistanceKind kind;
  if (a.kind == "gh") {
    kind = DistanceKind::kGromovHausdorff;
    r = gh_distance(x, y, o.budget());
  } else if (a.kind == "dis") {
    kind = DistanceKind::kDistortion;
    r = distortion_distance(x, y, o.budget());
  } else if (a.kind == "cdis") {
    kind = DistanceKind::kDCorrespondence;
    r = dcorrespondence_distance(x, y, o.budget());
  } else {
    throw io::FormatError("unknown distance \"" + a.kind + "\"");
  }
  json report{{"command", "dist"},
              {"kind", std::string(to_string(kind))},
              {"value", ext(r.value)},
              {"lower_bound", ext(r.lower_bound)},
              {"exact", r.exact},
              {"certificate", certificate_json(r.certificate)}};
  if (!o.out.empty()) {
    io::save_text(o.out, report.dump(2) + "\n");
    report["file"] = o.out;
  }
  emit(report);
  return kOk;
}

// --- ball ------------------------------------------------------------------

struct BallArgs {
  std::string file;
  std::string center;
  double radius = 0.0;
  std::string metric = "zigzag";
};

std::string ball_svg(const std::vector<Point2>& pts, const gallery::BallGrid& b) {
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Point2& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double size = 480.0, pad = 16.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  auto sx = [&](double v) { return pad + (v - lo_x) / span * size; };
  auto sy = [&](double v) { return pad + size - (v - lo_y) / span * size; };
  char buf[160];
  std::string svg;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n",
                size + 2 * pad, size + 2 * pad);
  svg += buf;
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool in = b.membership[i];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"%s\"/>\n",
                  sx(pts[i].x), sy(pts[i].y), i == b.center ? 4.0 : 2.5,
                  i == b.center ? "#d62728" : (in ? "#1f77b4" : "#c7c7c7"));
    svg += buf;
  }
  svg += "</svg>\n";
  return svg;
}

int run_ball(const BallArgs& a, const Options& o) {
  const FiniteDSpace s = io::load_space(a.file);
  const std::size_t c = resolve_point(s, a.center);
  if (!(a.radius >= 0.0)) throw io::FormatError("--radius must be >= 0");
  std::vector<ExtReal> row;
  if (a.metric == "zigzag") {
    row = zigzag_row(s, c);
  } else if (a.metric == "base") {
    row = s.base().row(c);
  } else {
    throw io::FormatError("--metric must be base or zigzag");
  }
  // Widen by the tolerance so grid points exactly on the sphere count.
  gallery::BallGrid b = gallery::ball(row, c, a.radius + o.tol);
  b.radius = a.radius;
  std::size_t members = 0;
  std::string csv = "index,label,distance,inside\n";
  json inside = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    csv += std::to_string(i) + "," + s.label(i) + "," + to_string(row[i]) + "," +
           (b.membership[i] ? "1" : "0") + "\n";
    if (b.membership[i]) {
      ++members;
      inside.push_back(i);
    }
  }
  json report{{"command", "ball"},
              {"center", s.label(c)},
              {"radius", a.radius},
              {"metric", a.metric},
              {"members", members},
              {"points", s.size()}};
  const auto coords = gallery::label_coordinates(s);
  if (o.out.empty()) {
    report["inside"] = std::move(inside);
  } else {
    io::save_text(o.out + ".csv", csv);
    json files = {o.out + ".csv"};
    if (coords) {
      io::save_text(o.out + ".svg", ball_svg(*coords, b));
      files.push_back(o.out + ".svg");
    } else {
      std::cerr << "notice: labels carry no coordinates; SVG skipped\n";
    }
    report["files"] = std::move(files);
  }
  emit(report);
  return kOk;
}

// --- verify ----------------------------------------------------------------

int run_verify(const std::string& suite, const Options& o) {
  if (!tools::is_suite(suite)) throw io::FormatError("unknown suite \"" + suite + "\"");
  tools::CheckContext ctx;
  ctx.budget = o.budget();
  ctx.tol = o.tol;
  ctx.seed = o.seed;
  std::vector<tools::CheckResult> results;
  for (const std::string& id : tools::suite_checks(suite)) {
    results.push_back(tools::run_check(id, ctx));
    const auto& r = results.back();
    std::fprintf(stderr, "%-18s %s  %7.2fs  %s\n", r.id.c_str(),
                 r.passed ? "pass" : "FAIL", r.seconds, r.detail.c_str());
  }
  const json report = tools::suite_report(suite, ctx, results);
  if (!o.out.empty()) io::save_text(o.out, report.dump(2) + "\n");
  emit(report);
  return report["passed"].get<bool>() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zigzag metrics and directed distances of finite directed spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--budget-exhaustive-gh", o.exhaustive_gh,
                 "gh is exhaustive when |X|*|Y| <= this")->capture_default_str();
  app.add_option("--budget-exhaustive-cdis", o.exhaustive_cdis,
                 "cdis is exhaustive when |X|*|Y| <= this")->capture_default_str();
  app.add_option("--restarts", o.restarts, "local-search restarts")->capture_default_str();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--tol", o.tol, "distance tolerance")->capture_default_str();
  app.add_option("--out", o.out, "output path or prefix");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a gallery space");
  gen_cmd->add_option("name", gen.name,
                      "interval | square | torus | source-sink | open-book | sncf | hollow-square")
      ->required();
  gen_cmd->add_option("--k", gen.k, "subdivisions")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "open book sheets")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "edges per sheet")->capture_default_str();
  gen_cmd->add_option("--subdivisions", gen.subdivisions, "hollow square side split")
      ->capture_default_str();
  gen_cmd->add_option("--steps", gen.steps, "default | unit")->capture_default_str();
  gen_cmd->add_option("--points", gen.points, "sncf samples x,y;x,y;...")->capture_default_str();

  std::string zz_file;
  auto* zz_cmd = app.add_subcommand("zigzag", "zigzag and reachability matrices");
  zz_cmd->add_option("file", zz_file, "space file")->required();

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "distance report with certificate");
  dist_cmd->add_option("kind", dist.kind, "gh | dis | cdis | hausdorff")->required();
  dist_cmd->add_option("files", dist.files, "space files")->required();
  dist_cmd->add_option("--A", dist.set_a, "hausdorff: first subset (labels or indices, ';')");
  dist_cmd->add_option("--B", dist.set_b, "hausdorff: second subset");

  BallArgs ball;
  auto* ball_cmd = app.add_subcommand("ball", "closed ball as CSV and SVG");
  ball_cmd->add_option("file", ball.file, "space file")->required();
  ball_cmd->add_option("--center", ball.center, "label or index")->required();
  ball_cmd->add_option("--radius", ball.radius, "radius")->required();
  ball_cmd->add_option("--metric", ball.metric, "base | zigzag")->capture_default_str();

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("suite", suite, "core | distances | examples | all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen_cmd) return run_gen(gen, o);
    if (*zz_cmd) return run_zigzag(zz_file, o);
    if (*dist_cmd) return run_dist(dist, o);
    if (*ball_cmd) return run_ball(ball, o);
    if (*verify_cmd) return run_verify(suite, o);
  } catch (const io::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    emit({{"error", "format"}, {"message", e.what()}});
    return kInputError;
  } catch (const io::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    emit({{"error", "io"}, {"message", e.what()}});
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    emit({{"error", "input"}, {"message", e.what()}});
    return kInputError;
  }
  return kInputError;
}
