#include "holext/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "holext/errors.hpp"
#include "holext/exttest.hpp"
#include "holext/funcspec.hpp"
#include "holext/reconstruct.hpp"
#include "holext/report_json.hpp"

namespace holext {

namespace {

struct RunConfig {
  std::string command;
  std::string fn;
  std::string line_through;
  std::string dir;
  std::string a;
  std::string b;
  std::string demo;
  std::optional<std::uint64_t> seed;
  int M = -1;  // -1: command default
  int N = -1;
  int V = -1;
  double tol = kDefaultTol;
  std::string out_path;
  std::string plot_path;
  std::string config_path;
  bool force = false;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

Verdict verdict_of(Classification c) {
  switch (c) {
    case Classification::InA: return Verdict::Pass;
    case Classification::NotInA: return Verdict::Fail;
    case Classification::Inconclusive: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

// "key = value" lines become flags placed ahead of the command-line flags, so the latter win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::string> extra;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty() || key == "config") throw ConfigError(path + ":" + std::to_string(lineno) + ": bad key");
    if (key == "force") {
      if (value == "true" || value == "1" || value == "yes") extra.push_back("--force");
      continue;
    }
    extra.push_back("--" + key);
    extra.push_back(value);
  }
  std::size_t at = 0;
  while (at < args.size() && args[at].rfind("-", 0) == 0) ++at;
  if (at < args.size()) ++at;
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
  return args;
}

void emit_json(const RunConfig& cfg, const Json& report, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw ConfigError("cannot write '" + cfg.out_path + "'");
  f << text;
}

void emit_plot(const RunConfig& cfg, const std::string& csv) {
  if (cfg.plot_path.empty()) return;
  std::ofstream f(cfg.plot_path);
  if (!f) throw ConfigError("cannot write '" + cfg.plot_path + "'");
  f << csv;
}

std::uint64_t require_seed(const RunConfig& cfg, const std::string& why) {
  if (!cfg.seed) throw ConfigError("--seed is required " + why);
  return *cfg.seed;
}

BoundaryFunction require_fn(const RunConfig& cfg) {
  if (cfg.fn.empty()) throw ConfigError("--fn is required");
  return parse_function(cfg.fn);
}

ClassifyOptions classify_options(const RunConfig& cfg) {
  ClassifyOptions opt;
  opt.tol = cfg.tol;
  opt.seed = cfg.seed.value_or(1);
  if (cfg.M > 0) opt.bunch_lines = static_cast<std::size_t>(cfg.M);
  if (cfg.N > 0) opt.bunch_samples = static_cast<std::size_t>(cfg.N);
  if (cfg.V >= 0) opt.max_nu = cfg.V;
  return opt;
}

Json params_of(const RunConfig& cfg) {
  Json p{{"fn", cfg.fn}, {"tol", cfg.tol}};
  if (!cfg.a.empty()) p["a"] = cfg.a;
  if (!cfg.b.empty()) p["b"] = cfg.b;
  if (!cfg.line_through.empty()) p["line_through"] = cfg.line_through;
  if (!cfg.dir.empty()) p["dir"] = cfg.dir;
  if (cfg.M >= 0) p["M"] = cfg.M;
  if (cfg.N >= 0) p["N"] = cfg.N;
  if (cfg.V >= 0) p["V"] = cfg.V;
  if (cfg.seed) p["seed"] = *cfg.seed;
  if (cfg.force) p["force"] = true;
  return p;
}

// ---------------------------------------------------------------------------

int cmd_moment_test(const RunConfig& cfg, std::ostream& out) {
  const BoundaryFunction f = require_fn(cfg);
  const std::size_t n = cfg.N > 0 ? static_cast<std::size_t>(cfg.N) : 256;
  std::optional<ComplexLine> line;
  if (!cfg.line_through.empty() || !cfg.dir.empty()) {
    if (cfg.line_through.empty() || cfg.dir.empty()) throw ConfigError("--line-through and --dir go together");
    line.emplace(parse_point(cfg.line_through, f.dim()), parse_point(cfg.dir, f.dim()));
  } else {
    Rng rng(require_seed(cfg, "when no line is given"));
    const CPoint p = random_ball_point(f.dim(), 0.5, rng);
    line.emplace(p, random_unit_vector(f.dim(), rng));
  }
  const auto fft = holomorphic_extension_test(f, *line, n, cfg.tol, "line");
  const auto sweep = moment_sweep(f, *line, 10, n, cfg.tol);
  const std::vector<Verdict> both{fft.verdict, sweep.verdict};
  const Verdict verdict = combine(both);

  Json params = params_of(cfg);
  params["N"] = n;
  params["line"] = Json{{"base", to_json(line->base())}, {"direction", to_json(line->direction())}};
  Json residuals{{"fft", fft.residual},
                 {"moment", sweep.residual},
                 {"fft_verdict", to_string(fft.verdict)},
                 {"moment_verdict", to_string(sweep.verdict)},
                 {"agree", fft.verdict == sweep.verdict},
                 {"negative_coefficients", fft.residuals},
                 {"moments", to_json(sweep)["poles"]}};
  emit_json(cfg, make_report("moment-test", params, residuals, fft.scale, verdict), out);

  std::ostringstream csv;
  csv << std::setprecision(17) << "m,abs_coefficient\n";
  for (std::size_t m = 0; m < fft.residuals.size(); ++m) csv << -static_cast<long>(m + 1) << ',' << fft.residuals[m] << '\n';
  emit_plot(cfg, csv.str());
  return exit_for(verdict);
}

Json classification_residuals(const ClassificationReport& rep) {
  double fam = 0.0, neg = 0.0, hol = 0.0;
  for (const auto& f : rep.families) fam = std::max(fam, f.worst_ratio);
  for (const auto& s : rep.slices) {
    double& slot = s.nu < 0 ? neg : hol;
    slot = std::max(slot, bound_ratio(s.residual, s.scale, rep.tol, s.noise_floor));
  }
  return Json{{"bunch_a", rep.bunch_a.worst_residual},
              {"bunch_b", rep.bunch_b.worst_residual},
              {"circle_families_bound_ratio", fam},
              {"negative_slices_bound_ratio", neg},
              {"holomorphic_slices_bound_ratio", hol}};
}

std::string slice_csv(const ClassificationReport& rep) {
  std::ostringstream csv;
  csv << std::setprecision(17) << "nu,check,residual,scale,noise_floor,verdict\n";
  for (const auto& s : rep.slices)
    csv << s.nu << ',' << s.check << ',' << s.residual << ',' << s.scale << ',' << s.noise_floor << ','
        << to_string(s.verdict) << '\n';
  return csv.str();
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const BoundaryFunction f = require_fn(cfg);
  if (cfg.a.empty() || cfg.b.empty()) throw ConfigError("classify needs --a and --b");
  const CPoint a = parse_point(cfg.a, f.dim());
  const CPoint b = parse_point(cfg.b, f.dim());
  const auto rep = two_bunch_classify(f, a, b, classify_options(cfg));
  const Verdict v = verdict_of(rep.classification);
  Json report = make_report("classify", params_of(cfg), classification_residuals(rep), rep.f_scale, v);
  report["classification"] = to_string(rep.classification);
  report["notes"] = rep.notes;
  report["report"] = to_json(rep);
  emit_json(cfg, report, out);
  emit_plot(cfg, slice_csv(rep));
  return exit_for(v);
}

int cmd_reconstruct(const RunConfig& cfg, std::ostream& out) {
  const BoundaryFunction f = require_fn(cfg);
  const CPoint a = parse_point(cfg.a.empty() ? "0,0" : cfg.a, f.dim());
  const CPoint b = parse_point(cfg.b.empty() ? "0.5,0" : cfg.b, f.dim());
  const int V = cfg.V >= 0 ? cfg.V : 12;
  const int M = cfg.M >= 0 ? cfg.M : 12;
  Json params = params_of(cfg);
  params["V"] = V;
  params["M"] = M;

  Json classification = nullptr;
  if (!cfg.force) {
    RunConfig ccfg = cfg;
    ccfg.M = -1;
    ccfg.V = -1;
    const auto rep = two_bunch_classify(f, a, b, classify_options(ccfg));
    classification = to_string(rep.classification);
    if (rep.classification != Classification::InA) {
      const Verdict v = verdict_of(rep.classification);
      Json report = make_report("reconstruct", params, classification_residuals(rep), rep.f_scale, v);
      report["classification"] = classification;
      report["notes"] = rep.notes;
      emit_json(cfg, report, out);
      return exit_for(v);
    }
  }
  const ExtensionModel model = assemble_extension(f, V, M, GridSpec{}, cfg.tol, cfg.seed.value_or(1));
  const ForelliReport forelli = forelli_check(model, 16, 1e-10 * std::max(1.0, model.f_scale), cfg.seed.value_or(1));
  const Verdict v = judge(model.boundary_error, std::max(1.0, model.f_scale), 100.0 * cfg.tol);
  Json residuals{{"boundary_error", model.boundary_error}, {"forelli", forelli.worst_residual}};
  Json report = make_report("reconstruct", params, residuals, model.f_scale, v);
  report["classification"] = classification;
  report["model"] = to_json(model);
  emit_json(cfg, report, out);

  std::ostringstream csv;
  csv << std::setprecision(17) << "nu,mu,re,im\n";
  for (int nu = 0; nu <= V; ++nu) {
    for (int mu = 0; mu <= M; ++mu)
      csv << nu << ',' << mu << ',' << model.coeff(nu, mu).real() << ',' << model.coeff(nu, mu).imag() << '\n';
  }
  emit_plot(cfg, csv.str());
  return exit_for(v);
}

// ---------------------------------------------------------------------------

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

int demo_counterexample(const RunConfig& cfg, std::ostream& out) {
  const BoundaryFunction f = example_counterexample();
  const std::uint64_t seed = cfg.seed.value_or(1);
  const CPoint a{0.0, 0.0};
  const CPoint b{0.5, 0.0};
  out << "f(z) = |z1|^2 on the unit sphere of C^2.\n"
      << "Every circle L cap S through 0 has |z1|^2 constant on it, so f extends (as a constant)\n"
      << "into every line through 0, although f is not the boundary value of a holomorphic function.\n\n";
  const auto bunch = bunch_test(f, a, 200, 256, cfg.tol, seed);
  out << "bunch test at a = 0: " << bunch.tested << " lines, worst relative residual " << fmt(bunch.worst_residual)
      << ", verdict " << to_string(bunch.verdict) << "\n";
  const auto rep = two_bunch_classify(f, a, b, classify_options(cfg));
  out << "two-bunch classification with b = (0.5, 0): " << to_string(rep.classification) << "\n";
  for (const auto& n : rep.notes) out << "  note: " << n << "\n";
  const bool ok = bunch.verdict == Verdict::Pass && rep.classification == Classification::NotInA;
  out << (ok ? "reproduced: one bunch is not enough, two bunches detect f.\n" : "NOT reproduced.\n");

  std::ostringstream csv;
  csv << std::setprecision(17) << "line,residual,scale\n";
  for (std::size_t i = 0; i < bunch.reports.size(); ++i)
    csv << i << ',' << bunch.reports[i].residual << ',' << bunch.reports[i].scale << '\n';
  emit_plot(cfg, csv.str());
  if (!cfg.out_path.empty())
    emit_json(cfg, make_report("demo counterexample", params_of(cfg),
                               Json{{"bunch_a", bunch.worst_residual}, {"classification", to_json(rep)}}, rep.f_scale,
                               ok ? Verdict::Pass : Verdict::Fail),
              out);
  return ok ? kExitPass : kExitFail;
}

int demo_globevnik(const RunConfig& cfg, std::ostream& out) {
  const unsigned k = 2;
  const BoundaryFunction f = example_globevnik(k);
  const std::uint64_t seed = cfg.seed.value_or(1);
  out << "f(z) = z2^2 / conj(z2) = z2^3 / (1 - |z1|^2) on the sphere of C^2 (finite smoothness at z2 = 0).\n\n";
  const CPoint a{0.3, 0.0};
  const CPoint b{-0.4, 0.0};
  const auto ba = bunch_test(f, a, 200, 256, 1e-9, seed);
  const auto bb = bunch_test(f, b, 200, 256, 1e-9, seed + 1);
  out << "bunch at (0.3, 0): " << ba.tested << " lines, worst " << fmt(ba.worst_residual) << ", "
      << to_string(ba.verdict) << "\n";
  out << "bunch at (-0.4, 0): " << bb.tested << " lines, worst " << fmt(bb.worst_residual) << ", "
      << to_string(bb.verdict) << "\n";
  const ComplexLine avoid(CPoint{0.0, 0.7}, CPoint{1.0, 0.5});
  const auto direct = holomorphic_extension_test(f, avoid, 256, cfg.tol, "avoiding");
  out << "line through (0, 0.7) with direction (1, 0.5), which misses {z2 = 0} in the closed ball: relative residual "
      << fmt(direct.relative_residual()) << ", " << to_string(direct.verdict) << "\n";
  const auto order = vanishing_order(f, 3);
  out << "F_3 growth exponent against (1 - |z1|^2): " << std::setprecision(4) << order.exponent << "\n";
  const auto rep = two_bunch_classify(f, a, b, classify_options(cfg));
  out << "two-bunch classification: " << to_string(rep.classification) << "\n";
  for (const auto& n : rep.notes) out << "  note: " << n << "\n";
  const bool ok = ba.verdict == Verdict::Pass && bb.verdict == Verdict::Pass && direct.verdict == Verdict::Fail &&
                  std::abs(order.exponent + 1.0) <= 0.05 && rep.classification == Classification::NotInA;
  out << (ok ? "reproduced: both bunches pass, yet f is not in the ball algebra.\n" : "NOT reproduced.\n");

  std::ostringstream csv;
  csv << std::setprecision(17) << "r,max_abs_F3\n";
  for (double r = 0.1; r < 0.951; r += 0.05) {
    double m = 0.0;
    for (int j = 0; j < 16; ++j) m = std::max(m, std::abs(f_nu(f, 3, std::polar(r, 2.0 * std::numbers::pi * j / 16.0))));
    csv << r << ',' << m << '\n';
  }
  emit_plot(cfg, csv.str());
  return ok ? kExitPass : kExitFail;
}

int demo_exterior(const RunConfig& cfg, std::ostream& out) {
  const BoundaryFunction f = example_counterexample();
  out << "f(z) = |z1|^2. Every complex line parallel to a coordinate axis meets the sphere in a circle\n"
      << "on which f is constant, so f extends holomorphically (as a constant) into each of them.\n\n";
  std::ostringstream csv;
  csv << std::setprecision(17) << "axis,re_offset,im_offset,spread,residual\n";
  double worst_spread = 0.0;
  std::vector<Verdict> verdicts;
  std::size_t count = 0;
  for (int axis = 0; axis < 2; ++axis) {
    for (int i = 1; i <= 4; ++i) {
      for (int j = 0; j < 8; ++j) {
        const cplx c = std::polar(0.22 * i, 2.0 * std::numbers::pi * j / 8.0);
        const CPoint base = axis == 0 ? CPoint{0.0, c} : CPoint{c, 0.0};
        const CPoint dir = axis == 0 ? CPoint{1.0, 0.0} : CPoint{0.0, 1.0};
        const ComplexLine line(base, dir);
        const auto circle = sphere_intersection(line);
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& s : sample_circle(circle, 256)) {
          const double v = f.evaluate(s.z).real();
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        const auto rep = holomorphic_extension_test(f, line, 256, cfg.tol);
        worst_spread = std::max(worst_spread, hi - lo);
        verdicts.push_back(rep.verdict);
        ++count;
        csv << (axis == 0 ? "z1" : "z2") << ',' << c.real() << ',' << c.imag() << ',' << hi - lo << ','
            << rep.residual << '\n';
      }
    }
  }
  const Verdict lines_verdict = combine(verdicts);
  out << count << " axis-parallel lines: max spread of f along a circle " << fmt(worst_spread)
      << ", moment tests " << to_string(lines_verdict) << "\n";
  const auto rep = two_bunch_classify(f, CPoint{0.0, 0.0}, CPoint{0.5, 0.0}, classify_options(cfg));
  out << "two-bunch classification with a = 0, b = (0.5, 0): " << to_string(rep.classification) << "\n";
  const bool ok =
      worst_spread <= 1e-12 && lines_verdict == Verdict::Pass && rep.classification == Classification::NotInA;
  out << (ok ? "reproduced: the axis-parallel family is not sufficient.\n" : "NOT reproduced.\n");
  emit_plot(cfg, csv.str());
  return ok ? kExitPass : kExitFail;
}

int demo_projection(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = require_seed(cfg, "for demo projection-lemma");
  const CPoint a = parse_point(cfg.a.empty() ? "0.5,0" : cfg.a, 2);
  if (std::abs(a[1]) > 1e-14) throw ConfigError("projection-lemma needs a point of the form (a1, 0)");
  if (std::abs(a[0]) >= 1.0) throw ConfigError("projection-lemma needs |a1| < 1");
  const cplx a1 = a[0];
  out << "Lines through (a1, 0) meet the sphere in circles whose projections to the z1-plane are\n"
      << "hyperbolic circles centered at a1: |u_a1(z1)| is constant along each of them.\n\n"
      << "line   predicted r   min |u|        max |u|        spread\n";
  Rng rng(seed);
  std::ostringstream csv;
  csv << std::setprecision(17) << "line,theta,re_w,im_w,abs_u\n";
  double worst = 0.0;
  for (int l = 0; l < 20; ++l) {
    CPoint d = random_unit_vector(2, rng);
    if (std::abs(d[0]) < 1e-6) d = CPoint{1.0, 1.0};
    const ComplexLine line(a, d);
    const auto h = project_to_hyperbolic_circle(line, a1);
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& s : sample_circle(sphere_intersection(line), 64)) {
      const double u = std::abs(disc_automorphism(a1, s.z[0]));
      lo = std::min(lo, u);
      hi = std::max(hi, u);
      csv << l << ',' << s.theta << ',' << s.z[0].real() << ',' << s.z[0].imag() << ',' << u << '\n';
    }
    worst = std::max(worst, hi - lo);
    out << std::setw(4) << l << "   " << std::fixed << std::setprecision(9) << h.radius() << "   " << lo << "   "
        << hi << "   " << std::scientific << std::setprecision(2) << hi - lo << std::defaultfloat << "\n";
  }
  const bool ok = worst <= 1e-10;
  out << "worst spread " << fmt(worst) << (ok ? "  (constant to 1e-10)\n" : "  NOT constant\n");
  emit_plot(cfg, csv.str());
  return ok ? kExitPass : kExitFail;
}

int cmd_demo(const RunConfig& cfg, std::ostream& out) {
  if (cfg.demo == "counterexample") return demo_counterexample(cfg, out);
  if (cfg.demo == "globevnik") return demo_globevnik(cfg, out);
  if (cfg.demo == "exterior-insufficiency") return demo_exterior(cfg, out);
  if (cfg.demo == "projection-lemma") return demo_projection(cfg, out);
  throw Error(ErrorCode::UnknownDemo, "unknown demo '" + cfg.demo +
                                          "' (counterexample, globevnik, exterior-insufficiency, projection-lemma)");
}

void add_common(CLI::App& sub, RunConfig& cfg) {
  const auto last = CLI::MultiOptionPolicy::TakeLast;
  sub.add_option("--fn", cfg.fn, "function spec")->multi_option_policy(last);
  sub.add_option("--seed", cfg.seed, "random seed")->multi_option_policy(last);
  sub.add_option("--tol", cfg.tol, "relative tolerance")->multi_option_policy(last)->check(CLI::PositiveNumber);
  sub.add_option("--M", cfg.M, "lines per bunch (classify) or z1 degree (reconstruct)")
      ->multi_option_policy(last)
      ->check(CLI::Range(0, 4096));
  sub.add_option("--N", cfg.N, "samples per circle")->multi_option_policy(last)->check(CLI::Range(16, 1 << 20));
  sub.add_option("--V", cfg.V, "largest slice order")->multi_option_policy(last)->check(CLI::Range(0, 256));
  sub.add_option("--a", cfg.a, "point a")->multi_option_policy(last);
  sub.add_option("--b", cfg.b, "point b")->multi_option_policy(last);
  sub.add_option("--out", cfg.out_path, "write the JSON report here")->multi_option_policy(last);
  sub.add_option("--plot-out", cfg.plot_path, "write CSV plot data here")->multi_option_policy(last);
  sub.add_option("--config", cfg.config_path, "file of 'key = value' lines")->multi_option_policy(last);
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Holomorphic extension tests on the unit sphere", "holext"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto* moment = app.add_subcommand("moment-test", "holomorphic extension test on one complex line");
  add_common(*moment, cfg);
  moment->add_option("--line-through", cfg.line_through, "point on the line")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  moment->add_option("--dir", cfg.dir, "line direction")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  auto* classify = app.add_subcommand("classify", "two-bunch classification in C^2");
  add_common(*classify, cfg);

  auto* demo = app.add_subcommand("demo", "worked scenarios");
  add_common(*demo, cfg);
  demo->add_option("name", cfg.demo, "counterexample | globevnik | exterior-insufficiency | projection-lemma")
      ->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "global holomorphic extension model");
  add_common(*reconstruct, cfg);
  reconstruct->add_flag("--force", cfg.force, "skip the classification gate");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (moment->parsed()) return cmd_moment_test(cfg, out);
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (demo->parsed()) return cmd_demo(cfg, out);
    if (reconstruct->parsed()) return cmd_reconstruct(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::UnknownDemo:
      case ErrorCode::InvalidArgument:
      case ErrorCode::DimensionMismatch: return kExitConfigError;
      default: return kExitMathError;
    }
  }
  return kExitConfigError;
}

}  // namespace holext
