#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "manyfaces/arrangement.hpp"
#include "manyfaces/generate.hpp"
#include "manyfaces/io.hpp"
#include "manyfaces/render.hpp"
#include "manyfaces/solver.hpp"

using namespace manyfaces;

namespace {

struct Common {
  std::string backend = "combined";
  std::string policy = "reject";
  int r = 0;
  bool trace = false;
  std::uint64_t seed = 1;
};

SolverConfig make_config(const Common& c) {
  SolverConfig cfg;
  auto b = parse_backend(c.backend);
  if (!b) throw CLI::ValidationError("--backend", "unknown backend '" + c.backend + "'");
  cfg.backend = *b;
  if (c.policy == "reject") cfg.policy = Policy::Reject;
  else if (c.policy == "perturb") cfg.policy = Policy::Perturb;
  else throw CLI::ValidationError("--policy", "expected reject or perturb");
  if (c.r > 0) cfg.rOverride = c.r;
  cfg.seed = c.seed;
  return cfg;
}

void print_trace(const SolveResult& res) {
  const auto& t = res.trace;
  std::cerr << "backend path=" << path_name(t.path) << " n=" << t.n << " m=" << t.m << " r=" << t.top_r
            << " primal_steps=" << t.stats.primal_steps << " dual_steps=" << t.stats.dual_steps
            << " brute_calls=" << t.stats.brute_calls << " depth=" << t.stats.max_depth
            << " totalK=" << t.stats.hull_set_total << " maxcross=" << t.chains.max_crossings
            << " size_violations=" << t.stats.size_violations << " ms=" << t.ms << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.push_back(t);
  return out;
}

// Least-squares slope of log(ms) against log(n).
double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
  const double k = double(pts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [n, ms] : pts) {
    const double x = std::log(n), y = std::log(std::max(ms, 1e-6));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = k * sxx - sx * sx;
  return den == 0 ? 0 : (k * sxy - sx * sy) / den;
}

int cmd_solve(const std::string& path, const Common& c) {
  RawInstance raw = parse_instance_file(path);
  SolveResult res = solve(raw, make_config(c));
  write_faces(std::cout, res.faces);
  if (c.trace) print_trace(res);
  return 0;
}

int cmd_verify(int seeds, int max_n, const std::string& backends, const Common& c) {
  std::vector<Backend> bs;
  for (const auto& name : split_list(backends)) {
    auto b = parse_backend(name);
    if (!b) throw CLI::ValidationError("--backend", "unknown backend '" + name + "'");
    bs.push_back(*b);
  }
  int checked = 0, failed = 0;
  for (int s = 0; s < seeds; ++s) {
    std::mt19937_64 rng(c.seed + std::uint64_t(s));
    const int n = 1 + int(rng() % std::uint64_t(max_n)), m = 1 + int(rng() % std::uint64_t(max_n));
    for (GenKind kind : {GenKind::Uniform, GenKind::Grid, GenKind::Clustered}) {
      Instance in = generate_instance(kind, n, m, c.seed + std::uint64_t(s));
      FaceSet ref = non_empty_faces_naive(in);
      for (Backend b : bs) {
        SolverConfig cfg = make_config(c);
        cfg.backend = b;
        cfg.baseN = cfg.baseM = 4;
        ++checked;
        try {
          SolveResult res = solve(in, cfg);
          if (!same_faces(res.faces, ref)) {
            ++failed;
            std::cout << "mismatch seed=" << s << " kind=" << gen_kind_name(kind) << " n=" << n << " m=" << m
                      << " backend=" << backend_name(b) << " faces=" << res.faces.size() << " expected=" << ref.size()
                      << "\n";
          }
        } catch (const std::exception& e) {
          ++failed;
          std::cout << "error seed=" << s << " kind=" << gen_kind_name(kind) << " n=" << n << " m=" << m
                    << " backend=" << backend_name(b) << ": " << e.what() << "\n";
        }
      }
    }
  }
  std::cout << "verified " << checked << " runs, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_bench(const std::string& sizes, const std::string& backends, const std::string& kind_name, int seeds,
              const std::string& out, const Common& c) {
  auto kind = parse_gen_kind(kind_name);
  if (!kind) throw CLI::ValidationError("--kind", "unknown kind '" + kind_name + "'");
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw GeomError(ErrorCode::IoError, "cannot write " + out);
  }
  std::ostream& os = out.empty() ? std::cout : file;
  os << "backend,n,m,ms,maxcross,totalK,faceComplexity,seed\n";
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  const auto names = split_list(backends);
  for (const auto& size : split_list(sizes)) {
    const int n = std::stoi(size);
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t seed = c.seed + std::uint64_t(s);
      Instance in = generate_instance(*kind, n, n, seed);
      for (const auto& name : names) {
        Common cc = c;
        cc.backend = name;
        SolverConfig cfg = make_config(cc);
        cfg.trust_input = true;
        SolveResult res = solve(in, cfg);
        os << name << "," << n << "," << n << "," << res.trace.ms << "," << res.trace.chains.max_crossings << ","
           << res.trace.stats.hull_set_total << "," << res.faces.total_complexity() << "," << seed << "\n";
        os.flush();
        series[name].emplace_back(double(n), res.trace.ms);
        if (c.trace) print_trace(res);
      }
    }
  }
  for (const auto& name : names) os << "# slope " << name << " " << loglog_slope(series[name]) << "\n";
  return 0;
}

int cmd_render(const std::string& path, const std::string& out, const Common& c) {
  RawInstance raw = parse_instance_file(path);
  SolveResult res = solve(raw, make_config(c));
  // Face indices refer to the input lines; vertical ones are left undrawn.
  Instance in;
  in.points = raw.points;
  bool vertical = false;
  for (const auto& l : raw.lines) vertical = vertical || l.vertical;
  if (vertical) {
    std::cerr << "render: instances with vertical lines are not supported\n";
    return 2;
  }
  for (const auto& l : raw.lines) in.lines.push_back(Line{l.a, l.b});
  if (out.empty()) std::cout << render_svg(in, res.faces);
  else write_svg(out, in, res.faces);
  if (c.trace) print_trace(res);
  return 0;
}

int cmd_gen(const std::string& kind_name, int n, int m, const std::string& out, const Common& c) {
  auto kind = parse_gen_kind(kind_name);
  if (!kind) throw CLI::ValidationError("--kind", "unknown kind '" + kind_name + "'");
  Instance in = generate_instance(*kind, n, m, c.seed);
  if (out.empty()) {
    write_instance(std::cout, in);
    return 0;
  }
  std::ofstream f(out);
  if (!f) throw GeomError(ErrorCode::IoError, "cannot write " + out);
  write_instance(f, in);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-empty faces of a line arrangement with respect to a point set"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--policy", c.policy, "reject or perturb points lying on lines")->capture_default_str();
    sub->add_option("--r", c.r, "override r of the top-level step");
    sub->add_flag("--trace", c.trace, "print recursion statistics to stderr");
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  };

  std::string file, out, kind = "uniform", sizes = "1024,2048,4096", backends = "naive,primal,dual,combined";
  int seeds = 50, max_n = 48, n = 16, m = 16;

  auto* solve_cmd = app.add_subcommand("solve", "print the non-empty faces of an instance file");
  solve_cmd->add_option("file", file, "instance file")->required();
  solve_cmd->add_option("--backend", c.backend, "naive, primal, dual or combined")->capture_default_str();
  add_common(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "compare backends with the arrangement oracle");
  verify_cmd->add_option("--seeds", seeds, "number of seeded instances per kind")->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "largest n and m")->capture_default_str()->check(CLI::Range(1, 4096));
  verify_cmd->add_option("--backend", backends, "comma separated backends")->capture_default_str();
  add_common(verify_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "time backends on generated instances with m = n");
  bench_cmd->add_option("--sizes", sizes, "comma separated n")->capture_default_str();
  bench_cmd->add_option("--backend", backends, "comma separated backends")->capture_default_str();
  bench_cmd->add_option("--kind", kind, "uniform, grid or clustered")->capture_default_str();
  bench_cmd->add_option("--seeds", seeds, "instances per size")->default_val(1);
  bench_cmd->add_option("--out", out, "CSV file (default stdout)");
  add_common(bench_cmd);

  auto* render_cmd = app.add_subcommand("render", "draw lines, points and non-empty faces as SVG");
  render_cmd->add_option("file", file, "instance file")->required();
  render_cmd->add_option("--out", out, "SVG file (default stdout)");
  render_cmd->add_option("--backend", c.backend, "naive, primal, dual or combined")->capture_default_str();
  add_common(render_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance file");
  gen_cmd->add_option("--kind", kind, "uniform, grid or clustered")->capture_default_str();
  gen_cmd->add_option("--n", n, "number of lines")->capture_default_str()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--m", m, "number of points")->capture_default_str()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--out", out, "instance file (default stdout)");
  add_common(gen_cmd);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve_cmd) return cmd_solve(file, c);
    if (*verify_cmd) return cmd_verify(seeds, max_n, backends, c);
    if (*bench_cmd) return cmd_bench(sizes, backends, kind, seeds, out, c);
    if (*render_cmd) return cmd_render(file, out, c);
    if (*gen_cmd) return cmd_gen(kind, n, m, out, c);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
