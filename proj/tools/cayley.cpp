#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayley/annulus.hpp"
#include "cayley/ball_table.hpp"
#include "cayley/deadends.hpp"
#include "cayley/error.hpp"
#include "cayley/models.hpp"
#include "cayley/paths.hpp"
#include "json.hpp"
#include "table_writer.hpp"

namespace cayley::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInsufficient = 3 };

struct RunConfig {
  std::string model;
  int n = -1;
  int nmax = -1;
  int r = -1;
  int rcap = -1;
  bool filtered = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::size_t budget = kDefaultBudget;
  std::string cache_dir;
  std::string out;
  std::string format = "csv";
  // subcommand specific
  std::string dump;
  std::string summary;
  int margin = -1;
  std::string in;
  std::string element;
  std::string construct;
  std::string experiment;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

ModelPtr load_model(const RunConfig& cfg) {
  require(!cfg.model.empty(), "--model is required");
  return make_group(cfg.model);
}

BallTable load_table(const ModelPtr& model, int N, const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cached_ball(model, N, cfg.budget, cfg.cache_dir);
  return enumerate_ball(model, N, cfg.budget);
}

// Largest table within budget up to radius N.
BallTable load_table_within_budget(const ModelPtr& model, int N, const RunConfig& cfg) {
  try {
    return load_table(model, N, cfg);
  } catch (const BudgetExceeded& e) {
    if (e.completed_radius() < 0) throw;
    return load_table(model, e.completed_radius(), cfg);
  }
}

void emit(const TableWriter& table, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    table.write(std::cout, cfg.format);
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open " + cfg.out + " for writing");
  table.write(f, cfg.format);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
}

std::pair<int, int> n_range(const RunConfig& cfg, int default_n) {
  int lo = cfg.n >= 0 ? cfg.n : default_n;
  int hi = cfg.nmax >= 0 ? cfg.nmax : lo;
  require(lo >= 0 && hi >= lo, "need 0 <= --n <= --nmax");
  return {lo, hi};
}

Cell opt_int(std::optional<int> v) {
  if (!v) return std::monostate{};
  return static_cast<std::int64_t>(*v);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::int64_t I(std::size_t v) { return static_cast<std::int64_t>(v); }

int cmd_enumerate(const RunConfig& cfg) {
  auto model = load_model(cfg);
  require(cfg.n >= 0, "--n (radius N) is required");
  auto table = load_table(model, cfg.n, cfg);
  TableWriter out(model->name(), {"n", "|S(n)|", "|B(n)|"});
  std::size_t ball = 0;
  for (int k = 0; k <= table.radius(); ++k) {
    ball += table.sphere_size(k);
    out.add({std::int64_t{k}, I(table.sphere_size(k)), I(ball)});
  }
  emit(out, cfg);
  return kOk;
}

int cmd_thickness(const RunConfig& cfg) {
  auto model = load_model(cfg);
  auto [lo, hi] = n_range(cfg, 1);
  int rcap = cfg.rcap >= 0 ? cfg.rcap : hi + 2;
  auto table = load_table(model, std::max(2 * hi, hi + rcap), cfg);
  TableWriter out(model->name(), {"model", "n", "thickness", "component_counts"});
  for (int n = lo; n <= hi; ++n) {
    auto res = connection_thickness(n, rcap, table);
    Cell th = res.thickness ? Cell(static_cast<std::int64_t>(*res.thickness)) : Cell(std::string(">cap"));
    out.add({model->name(), std::int64_t{n}, th, join(res.component_counts)});
  }
  emit(out, cfg);
  return kOk;
}

int cmd_components(const RunConfig& cfg) {
  auto model = load_model(cfg);
  require(cfg.n >= 0, "--n is required");
  auto [lo, hi] = n_range(cfg, cfg.n);
  int r_lo = cfg.r >= 0 ? cfg.r : 0;
  int r_hi = cfg.rcap >= 0 ? cfg.rcap : r_lo;
  require(r_hi >= r_lo, "need --r <= --rcap");
  require(cfg.dump.empty() || (lo == hi && r_lo == r_hi), "--dump needs a single (n, r)");
  int N = cfg.filtered ? std::max(2 * hi, hi + r_hi) : hi + r_hi;
  auto table = load_table(model, N, cfg);
  TableWriter out(model->name(), {"model", "n", "r", "filtered", "vertices", "blocks", "H", "h", "diameter",
                                  "thickness_flag"});
  TableWriter dump(model->name(), {"component_id", "element_encoding"});
  for (int n = lo; n <= hi; ++n)
    for (int r = r_lo; r <= r_hi; ++r) {
      auto annulus = build_annulus(n, r, cfg.filtered, table);
      auto part = components(annulus, cfg.filtered ? Restriction::SphereInfinite : Restriction::Sphere);
      bool connected = is_connected(annulus);
      Cell diam = std::monostate{};
      if (!connected) {
        diam = std::string("disconnected");
      } else if (annulus.vertex_count() <= 20000) {
        auto d = induced_diameter(annulus);
        diam = opt_int(d.diameter);
      }
      out.add({model->name(), std::int64_t{n}, std::int64_t{r}, std::int64_t{cfg.filtered}, I(annulus.vertex_count()),
               I(part.blocks.size()), part.H, part.h, diam, std::int64_t{connected}});
      if (!cfg.dump.empty())
        for (const auto& b : part.blocks)
          for (auto i : b.members) dump.add({I(b.id), model->format(table.element(i))});
    }
  emit(out, cfg);
  if (!cfg.dump.empty()) {
    std::ofstream f(cfg.dump, std::ios::binary);
    if (!f) throw UsageError("cannot open " + cfg.dump + " for writing");
    dump.write_csv(f);
  }
  return kOk;
}

int cmd_deadends(const RunConfig& cfg) {
  auto model = load_model(cfg);
  require(cfg.n >= 0, "--n is required");
  auto [lo, hi] = n_range(cfg, cfg.n);
  auto table = load_table(model, 2 * hi + 2, cfg);
  DeadEndAnalyzer analyzer(table, cfg.margin >= 0 ? std::optional<int>(cfg.margin) : std::nullopt);
  TableWriter out(model->name(), {"model", "n", "element", "is_deadend", "width", "rd", "sd", "straight"});
  TableWriter summary(model->name(), {"model", "n", "sphere", "infinite", "straight", "deadends", "max_rd",
                                      "max_width", "max_sd", "straight_ratio", "finite_ratio"});
  for (int n = lo; n <= hi; ++n) {
    auto reports = analyzer.find_deadends(n);
    int max_w = 0, max_sd = 0;
    for (const auto& d : reports) {
      out.add({model->name(), std::int64_t{n}, d.element, std::int64_t{d.is_deadend}, std::int64_t{d.width},
               std::int64_t{d.retreat_depth}, std::int64_t{d.shadow_depth}, std::int64_t{d.straight}});
      max_w = std::max(max_w, d.width);
      max_sd = std::max(max_sd, d.shadow_depth);
    }
    auto counts = analyzer.s_infinity_ratio(n);
    int max_rd = 0;
    auto range = table.level_range(n);
    for (std::size_t i = range.begin; i < range.end; ++i) max_rd = std::max(max_rd, analyzer.retreat_depth(i));
    summary.add({model->name(), std::int64_t{n}, I(counts.sphere), I(counts.infinite), I(counts.straight),
                 I(reports.size()), std::int64_t{max_rd}, std::int64_t{max_w}, std::int64_t{max_sd},
                 counts.straight_ratio(), counts.finite_ratio()});
  }
  emit(out, cfg);
  if (!cfg.summary.empty()) {
    std::ofstream f(cfg.summary, std::ios::binary);
    if (!f) throw UsageError("cannot open " + cfg.summary + " for writing");
    summary.write(f, cfg.format);
  }
  return kOk;
}

Element zwz_start(int n) { return WreathElement{n + 1, {}}; }
Element zwz_end(int n) {
  WreathElement g{0, {}};
  g.lamps.set(0, n + 1);
  return g;
}

int cmd_distortion(const RunConfig& cfg) {
  auto model = load_model(cfg);
  require(cfg.n >= 0, "--n is required");
  auto [lo, hi] = n_range(cfg, cfg.n);
  int r = cfg.r >= 0 ? cfg.r : 2;
  int N = cfg.filtered ? std::max(2 * hi, hi + r) : hi + r;
  auto table = load_table(model, N, cfg);
  bool zwz = model->info().family == Family::ZwrZ;
  TableWriter out(model->name(), {"model", "n", "r", "filtered", "vertices", "components", "diameter",
                                  "lower_bound", "diameter_over_n2", "sprawl", "sprawl_over_n2", "start_end"});
  for (int n = lo; n <= hi; ++n) {
    auto annulus = build_annulus(n, r, cfg.filtered, table);
    auto part = components(annulus, Restriction::Full);
    double n2 = n > 0 ? static_cast<double>(n) * n : 1.0;
    Cell diam = std::monostate{}, lower = std::monostate{}, dn2 = std::monostate{}, spr = std::monostate{},
         sn2 = std::monostate{}, se = std::monostate{};
    if (part.blocks.size() <= 1) {
      auto d = induced_diameter(annulus);
      diam = opt_int(d.diameter);
      lower = std::int64_t{d.lower_bound};
      if (d.diameter) dn2 = *d.diameter / n2;
      if (annulus.vertex_count() > 0) {
        double s = sprawl_estimate(annulus, cfg.samples, cfg.seed);
        spr = s;
        sn2 = s / n2;
      }
    } else {
      diam = std::string("disconnected");
    }
    if (zwz) {
      auto d = induced_distance(annulus, zwz_start(n), zwz_end(n));
      se = d ? Cell(static_cast<std::int64_t>(*d)) : Cell(std::string("disconnected"));
    }
    out.add({model->name(), std::int64_t{n}, std::int64_t{r}, std::int64_t{cfg.filtered}, I(annulus.vertex_count()),
             I(part.blocks.size()), diam, lower, dn2, spr, sn2, se});
  }
  emit(out, cfg);
  return kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_verify(const RunConfig& cfg) {
  require(cfg.in.empty() != cfg.element.empty(), "give exactly one of --in (check a certificate) or --element (build one)");
  if (!cfg.element.empty()) {
    auto model = load_model(cfg);
    Element g = model->parse(cfg.element);
    PathCertificate cert;
    if (cfg.construct == "line") {
      require(cfg.n >= 0, "--n is required");
      cert = line_connect_canonical(g, cfg.n, *model);
    } else if (cfg.construct == "tree") {
      require(cfg.r >= 0, "--r (the ball radius R) is required");
      cert = tree_connect_elementary(g, cfg.r, *model);
    } else if (cfg.construct == "zwz") {
      require(cfg.n >= 0, "--n is required");
      cert = zwz_collapse(g, cfg.n, *model);
    } else {
      throw UsageError("--construct must be line, tree or zwz");
    }
    auto res = verify_certificate(cert, *model);
    write_text(cfg.out, serialize_certificate(cert));
    std::cerr << (res.ok ? "ok" : "violation at step " + std::to_string(*res.first_violation) + ": " + res.reason)
              << " (" << cert.size() << " steps)\n";
    return res.ok ? kOk : kFailed;
  }
  PathCertificate cert = parse_certificate(read_file(cfg.in));
  std::string descriptor = !cfg.model.empty() ? cfg.model : cert.model;
  require(!descriptor.empty(), "certificate has no model header; pass --model");
  auto model = make_group(descriptor);
  VerifyResult res;
  if (model->info().has_exact_length) {
    res = verify_certificate(cert, *model);
  } else {
    auto table = load_table(model, cert.high, cfg);
    res = verify_certificate(cert, table);
  }
  TableWriter out(model->name(), {"model", "steps", "low", "high", "ok", "first_violation", "reason"});
  out.add({model->name(), I(cert.size()), std::int64_t{cert.low}, std::int64_t{cert.high}, std::int64_t{res.ok},
           res.first_violation ? Cell(I(*res.first_violation)) : Cell(std::monostate{}), res.reason});
  emit(out, cfg);
  return res.ok ? kOk : kFailed;
}

// Experiments without acceptance numbers.

int exp_plane_conjecture(RunConfig cfg) {
  if (cfg.model.empty()) cfg.model = "plane-lamplighter m=2";
  auto model = load_model(cfg);
  auto [lo, hi] = n_range(cfg, 1);
  if (cfg.nmax < 0) hi = std::max(hi, 3);
  int rcap = cfg.rcap >= 0 ? cfg.rcap : 4;
  auto table = load_table_within_budget(model, std::max(2 * hi, hi + rcap), cfg);
  TableWriter out(model->name(), {"model", "n", "table_radius", "rcap", "thickness", "component_counts"});
  for (int n = lo; n <= hi; ++n) {
    int cap = std::min(rcap, table.radius() - n);
    if (cap < 0 || table.radius() < 2 * n) break;
    auto res = connection_thickness(n, cap, table);
    Cell th = res.thickness ? Cell(static_cast<std::int64_t>(*res.thickness)) : Cell(std::string(">cap"));
    out.add({model->name(), std::int64_t{n}, std::int64_t{table.radius()}, std::int64_t{cap}, th,
             join(res.component_counts)});
  }
  emit(out, cfg);
  return kOk;
}

int exp_entropy_curve(RunConfig cfg) {
  if (cfg.model.empty()) cfg.model = "line-lamplighter m=2";
  auto model = load_model(cfg);
  int n = cfg.n >= 0 ? cfg.n : 10;
  int rcap = cfg.rcap >= 0 ? cfg.rcap : n + 2;
  auto table = load_table_within_budget(model, std::max(2 * n, n + rcap), cfg);
  require(table.radius() >= 2 * n, "budget too small for B(2n)");
  TableWriter out(model->name(), {"model", "n", "r", "blocks", "H", "h", "h_pi", "blocks_pi"});
  int top = std::min(rcap, table.radius() - n);
  for (int r = 0; r <= top; ++r) {
    auto annulus = build_annulus(n, r, true, table);
    auto inf = components(annulus, Restriction::SphereInfinite);
    auto all = components(build_annulus(n, r, false, table), Restriction::Sphere);
    out.add({model->name(), std::int64_t{n}, std::int64_t{r}, I(inf.blocks.size()), inf.H, inf.h, all.h,
             I(all.blocks.size())});
    if (inf.blocks.size() <= 1 && is_connected(annulus)) break;
  }
  emit(out, cfg);
  return kOk;
}

int exp_sd_question(RunConfig cfg) {
  if (cfg.model.empty()) cfg.model = "line-lamplighter m=2";
  auto model = load_model(cfg);
  auto [lo, hi] = n_range(cfg, 2);
  if (cfg.nmax < 0) hi = std::max(hi, 6);
  auto table = load_table(model, 2 * hi + 2, cfg);
  DeadEndAnalyzer analyzer(table, cfg.margin >= 0 ? std::optional<int>(cfg.margin) : std::nullopt);
  TableWriter out(model->name(), {"model", "n", "deadends", "max_sd", "ceil_half", "above_ceil_half"});
  for (int n = lo; n <= hi; ++n) {
    auto reports = analyzer.find_deadends(n);
    int max_sd = 0, above = 0, half = (n + 1) / 2;
    for (const auto& d : reports) {
      max_sd = std::max(max_sd, d.shadow_depth);
      above += d.shadow_depth > half;
    }
    out.add({model->name(), std::int64_t{n}, I(reports.size()), std::int64_t{max_sd}, std::int64_t{half},
             std::int64_t{above}});
  }
  emit(out, cfg);
  return kOk;
}

int exp_almost_convexity(RunConfig cfg) {
  if (cfg.model.empty()) cfg.model = "zz-walk-or-switch";
  auto model = load_model(cfg);
  auto [lo, hi] = n_range(cfg, 3);
  if (cfg.nmax < 0) hi = std::max(hi, 7);
  int r = cfg.r >= 0 ? cfg.r : 2;
  auto table = load_table(model, hi + r, cfg);
  TableWriter out(model->name(), {"model", "r", "n", "pairs", "detour"});
  for (const auto& row : almost_convexity_probe(r, lo, hi, table)) {
    Cell detour = row.detour ? Cell(static_cast<std::int64_t>(*row.detour)) : Cell(std::string("unbounded"));
    out.add({model->name(), std::int64_t{r}, std::int64_t{row.n}, I(row.pairs), detour});
  }
  emit(out, cfg);
  return kOk;
}

int exp_ladder_cutset(RunConfig cfg) {
  if (cfg.model.empty()) cfg.model = "ladder-lamplighter m=2 set=sws";
  auto model = load_model(cfg);
  auto [lo, hi] = n_range(cfg, 2);
  if (cfg.nmax < 0) hi = std::max(hi, 3);
  auto table = load_table(model, hi + 2, cfg);
  TableWriter out(model->name(), {"model", "n", "left", "right", "separation", "pass"});
  for (int n = lo; n <= hi; ++n) {
    auto res = verify_ladder_cutset(n, table);
    out.add({model->name(), std::int64_t{n}, I(res.left), I(res.right), std::int64_t{res.separation},
             std::int64_t{res.pass}});
  }
  emit(out, cfg);
  return kOk;
}

int cmd_experiment(const RunConfig& cfg) {
  if (cfg.experiment == "plane-conjecture") return exp_plane_conjecture(cfg);
  if (cfg.experiment == "entropy-curve") return exp_entropy_curve(cfg);
  if (cfg.experiment == "sd-question") return exp_sd_question(cfg);
  if (cfg.experiment == "almost-convexity") return exp_almost_convexity(cfg);
  if (cfg.experiment == "ladder-cutset") return exp_ladder_cutset(cfg);
  throw UsageError("unknown experiment '" + cfg.experiment +
                   "' (plane-conjecture, entropy-curve, sd-question, almost-convexity, ladder-cutset)");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::InsufficientRadius:
    case ErrorKind::RadiusOutOfRange:
      return kInsufficient;
    case ErrorKind::Internal:
    case ErrorKind::CacheError:
      return kFailed;
    default:
      return kUsage;
  }
}

}  // namespace

int run(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("CAYLEY_CACHE")) cfg.cache_dir = env;

  CLI::App app{"Cayley graph sphere and annulus analysis"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print version and model-registry hash as JSON");
  app.add_option("--model", cfg.model, "Model descriptor, e.g. \"line-lamplighter m=2\"");
  app.add_option("--n", cfg.n, "Radius (N for enumerate, first n otherwise)");
  app.add_option("--nmax", cfg.nmax, "Last radius of a range");
  app.add_option("--r", cfg.r, "Annulus thickness (R for tree certificates)");
  app.add_option("--rcap", cfg.rcap, "Thickness cap or last thickness of a range");
  app.add_flag("--filtered", cfg.filtered, "Restrict to the infinite part S(n,r)^inf");
  app.add_option("--samples", cfg.samples, "Sample count for sprawl");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--threads", cfg.threads, "Worker cap (runs are single-threaded)")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Maximum ball size in elements");
  app.add_option("--cache-dir", cfg.cache_dir, "Ball cache directory (default $CAYLEY_CACHE)");
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "Sphere and ball sizes up to N");
  auto* thickness = app.add_subcommand("thickness", "Connection thickness per n");
  auto* comps = app.add_subcommand("components", "Annulus components and partition entropy");
  comps->add_option("--dump", cfg.dump, "Write component membership for a single (n, r)");
  auto* deadends = app.add_subcommand("deadends", "Dead-ends with width, retreat and shadow depth");
  deadends->add_option("--summary", cfg.summary, "Write per-n counts and ratios");
  deadends->add_option("--margin", cfg.margin, "Straightness margin (default: certify up to N/2)");
  auto* distortion = app.add_subcommand("distortion", "Induced diameter and sprawl of annuli");
  auto* verify = app.add_subcommand("verify", "Check a path certificate or build one");
  verify->add_option("--in", cfg.in, "Certificate file to check");
  verify->add_option("--element", cfg.element, "Start element for a new certificate");
  verify->add_option("--construct", cfg.construct, "line, tree or zwz");
  auto* experiment = app.add_subcommand("experiment", "Exploratory runs without acceptance numbers");
  experiment->add_option("name", cfg.experiment, "plane-conjecture, entropy-curve, sd-question, almost-convexity, ladder-cutset")
      ->required();
  experiment->add_option("--margin", cfg.margin, "Straightness margin (default: certify up to N/2)");
  for (auto* sub : {enumerate, thickness, comps, deadends, distortion, verify, experiment}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (version) {
    nlohmann::ordered_json v;
    v["name"] = "cayley";
    v["version"] = kVersion;
    v["registry_hash"] = model_registry_hash();
    std::cout << v.dump() << "\n";
    return kOk;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (thickness->parsed()) return cmd_thickness(cfg);
    if (comps->parsed()) return cmd_components(cfg);
    if (deadends->parsed()) return cmd_deadends(cfg);
    if (distortion->parsed()) return cmd_distortion(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (experiment->parsed()) return cmd_experiment(cfg);
    std::cerr << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (completed radius " << e.completed_radius() << ")\n";
    return kInsufficient;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace cayley::cli

int main(int argc, char** argv) { return cayley::cli::run(argc, argv); }
