#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <regex>
#include <sstream>

#include "nlft/converge.hpp"
#include "nlft/csv.hpp"
#include "nlft/errors.hpp"
#include "nlft/herglotz.hpp"
#include "nlft/inverse.hpp"
#include "nlft/properties.hpp"
#include "nlft/spec_io.hpp"

namespace nlft::cli {

namespace {

double plain_number(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + whole + "'");
  }
  if (used != s.size()) throw InputError("not a number: '" + whole + "'");
  return v;
}

// Output sink: the given stream for "-" or an empty path, else a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot write " + path);
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

void check_T(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) throw InputError("T must be positive");
}

void check_tol(double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw InputError("tol must lie in (0, 1)");
}

InverseMethod parse_method(const std::string& m) {
  if (m == "toeplitz") return InverseMethod::toeplitz;
  if (m == "opuc") return InverseMethod::opuc;
  throw InputError("unknown method '" + m + "' (toeplitz|opuc)");
}

ToeplitzSolver parse_solver(const std::string& s) {
  if (s == "levinson") return ToeplitzSolver::levinson;
  if (s == "cholesky") return ToeplitzSolver::cholesky;
  throw InputError("unknown solver '" + s + "' (levinson|cholesky)");
}

std::vector<cplx> make_grid(const std::string& re, const std::string& im) {
  std::vector<cplx> grid;
  for (double y : parse_grid(im))
    for (double x : parse_grid(re)) grid.emplace_back(x, y);
  return grid;
}

// Periodic inputs are used as given; anything else is periodized at T.
Measure periodic_input(const Measure& mu, std::optional<double> T) {
  if (mu.periodic()) {
    if (T && std::abs(*T - mu.half_period()) > 1e-12 * *T)
      throw InputError("--T disagrees with the period of the measure");
    return mu;
  }
  if (!T) throw InputError("--T is required for a non-periodic measure");
  check_T(*T);
  return periodize(mu, *T);
}

std::optional<RealCurve> figure1_oracle(const Measure& mu) {
  if (auto f = closed_form_potential(mu)) return f;
  if (auto h = closed_form_hamiltonian(mu)) return potential_from_hamiltonian(*h);
  return std::nullopt;
}

struct Options {
  std::string potential, measure, out, grid_re = "-5:5:101", grid_im = "1", method = "toeplitz",
                                       solver = "levinson", t_list, ratios;
  std::string T_text;
  std::size_t N = 32;
  double tol = 1e-12;
  std::uint64_t seed = kDefaultSeed;
  std::size_t instances = 100;
  bool grid_given = false;
};

std::optional<double> T_option(const Options& o) {
  if (o.T_text.empty()) return std::nullopt;
  return parse_real(o.T_text);
}

int cmd_forward(const Options& o, std::ostream& out, std::ostream& err) {
  const Potential pot = potential_from_file(o.potential);
  const auto grid = make_grid(o.grid_re, o.grid_im);
  const auto rows = std::visit([&](const auto& p) { return forward_sweep(p, grid); }, pot);
  double drift = 0.0;
  for (const auto& r : rows) {
    drift = std::max(drift, r.det_drift);
    schur_ratio(r);  // resonance check
  }
  if (drift > 1e-9) err << "warning: determinant drift " << drift << "\n";
  Sink sink(o.out, out);
  csv::write_forward(*sink, rows);
  return kOk;
}

int cmd_inverse(const Options& o, std::ostream& out) {
  if (o.N < 1) throw InputError("N must be at least 1");
  const Measure mu = periodic_input(measure_from_file(o.measure), T_option(o));
  const TrigMoments mom = trig_moments(mu, o.N - 1);
  const StepHamiltonian h = parse_method(o.method) == InverseMethod::toeplitz
                                ? toeplitz_h11(mom, o.N, parse_solver(o.solver))
                                : opuc_h11(mom, o.N);
  Sink sink(o.out, out);
  csv::write_inverse(*sink, h, potential_from_h11(h));
  return kOk;
}

int cmd_periodize(const Options& o, std::ostream& out) {
  const auto T = T_option(o);
  if (!T) throw InputError("--T is required");
  check_T(*T);
  Sink sink(o.out, out);
  *sink << measure_to_spec(periodize(measure_from_file(o.measure), *T));
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  check_tol(o.tol);
  const Measure mu = measure_from_file(o.measure);
  const auto Ts = parse_real_list(o.t_list);
  for (double T : Ts) check_T(T);
  const auto grid = o.grid_given ? make_grid(o.grid_re, o.grid_im) : default_zgrid();
  const auto rows = convergence_sweep(mu, Ts, grid, o.tol);
  {
    Sink sink(o.out, out);
    csv::write_sweep(*sink, rows);
  }
  if (!o.ratios.empty()) {
    Sink sink(o.ratios, out);
    *sink << "z_re,z_im,T_from,T_to,ratio\n";
    for (const auto& r : error_ratios(rows))
      *sink << csv::fmt(r.z.real()) << ',' << csv::fmt(r.z.imag()) << ',' << csv::fmt(r.T_from) << ','
            << csv::fmt(r.T_to) << ',' << csv::fmt(r.ratio) << '\n';
  }
  return kOk;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  check_tol(o.tol);
  if (o.N < 1) throw InputError("N must be at least 1");
  const auto T = T_option(o);
  if (!T) throw InputError("--T is required");
  check_T(*T);
  const auto grid = o.grid_given ? make_grid(o.grid_re, o.grid_im) : default_zgrid();
  const auto rows = roundtrip(measure_from_file(o.measure), *T, o.N, grid, parse_method(o.method), o.tol);
  double worst = 0.0;
  {
    Sink sink(o.out, out);
    *sink << "z_re,z_im,forward_re,forward_im,target_re,target_im,abs_err\n";
    for (const auto& r : rows) {
      worst = std::max(worst, r.abs_err);
      *sink << csv::fmt(r.z.real()) << ',' << csv::fmt(r.z.imag()) << ',' << csv::fmt(r.forward.real()) << ','
            << csv::fmt(r.forward.imag()) << ',' << csv::fmt(r.target.real()) << ','
            << csv::fmt(r.target.imag()) << ',' << csv::fmt(r.abs_err) << '\n';
    }
  }
  if (!o.out.empty() && o.out != "-") out << "max residual " << csv::fmt(worst) << "\n";
  return kOk;
}

int cmd_figure1(const Options& o, std::ostream& out) {
  if (o.N < 1) throw InputError("N must be at least 1");
  const Measure mu = measure_from_file(o.measure);
  std::vector<std::string> literals;
  {
    std::stringstream ss(o.t_list);
    for (std::string tok; std::getline(ss, tok, ',');) literals.push_back(tok);
  }
  if (literals.empty()) throw InputError("--T-list is empty");
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  const auto oracle = figure1_oracle(mu);
  const RealCurve alt2 = [](double t) { return -2.0 / (1.0 + 2.0 * t); };
  const RealCurve alt4 = [](double t) { return -4.0 * std::sqrt(2.0 * kPi) / (1.0 + 2.0 * t); };

  std::ofstream summary(dir / "summary.txt", std::ios::binary);
  if (!summary) throw InputError("cannot write " + (dir / "summary.txt").string());
  summary << "# oracle: " << (oracle ? "closed form f(t) = -1/2 d/dt log h11(t)" : "none (oracle_f = nan)") << "\n";
  summary << "# alternatives: -2/(1+2t) and -4 sqrt(2 pi)/(1+2t), reported only\n";
  summary << "T,rows,max_dev_oracle_t_le_3,max_dev_neg2_t_le_3,max_dev_neg4rt2pi_t_le_3\n";
  for (const auto& lit : literals) {
    const double T = parse_real(lit);
    check_T(T);
    const RealCurve curve = oracle ? *oracle : RealCurve([](double) { return std::nan(""); });
    const auto rows = figure1_data(mu, T, o.N, curve);
    const auto path = dir / ("figure1_" + file_token(lit) + ".csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    csv::write_figure1(f, rows);
    summary << csv::fmt(T) << ',' << rows.size() << ','
            << (oracle ? csv::fmt(figure1_deviation(rows, 3.0, *oracle)) : std::string("nan")) << ','
            << csv::fmt(figure1_deviation(rows, 3.0, alt2)) << ',' << csv::fmt(figure1_deviation(rows, 3.0, alt4))
            << '\n';
    out << "wrote " << path.string() << "\n";
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_property_suite(o.seed, o.instances)) {
    ok = ok && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.module << ": " << r.name << " (n=" << r.instances
        << ", worst=" << r.worst << ", bound " << r.bound << ")";
    if (!r.detail.empty()) out << " " << r.detail;
    out << "\n";
  }
  return ok ? kOk : kPropertyViolation;
}

}  // namespace

double parse_real(const std::string& token) {
  static const std::regex pi_form(R"(^\s*([0-9.eE+-]*)\s*\*?\s*pi\s*(?:/\s*([0-9.eE+-]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(token, m, pi_form)) {
    double v = kPi;
    if (m[1].length() > 0) {
      const std::string coef = m[1];
      v *= coef == "-" ? -1.0 : coef == "+" ? 1.0 : plain_number(coef, token);
    }
    if (m[2].matched) v /= plain_number(m[2], token);
    return v;
  }
  std::string t = token;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  return plain_number(t, token);
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(parse_real(tok));
  if (out.empty()) throw InputError("empty list");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 1) return {parse_real(parts[0])};
  if (parts.size() != 3) throw InputError("grid must be lo:hi:count, got '" + text + "'");
  const double lo = parse_real(parts[0]);
  const double hi = parse_real(parts[1]);
  const double c = plain_number(parts[2], text);
  if (!(c >= 1.0) || c != std::floor(c)) throw InputError("grid count must be a positive integer");
  const auto n = static_cast<std::size_t>(c);
  if (n == 1) return {lo};
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  xs.back() = hi;
  return xs;
}

std::string file_token(const std::string& literal) {
  std::string t;
  for (char c : literal) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') t += c;
    else if (c == '/') t += '_';
  }
  return t.empty() ? "T" : t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Forward and inverse non-linear Fourier transform of half-line Dirac systems", "nlft"};
  app.require_subcommand(1);
  Options o;

  auto* fwd = app.add_subcommand("forward", "b/a, |a|, |b| of a potential on a z grid");
  fwd->add_option("--potential", o.potential, "potential JSON")->required();
  fwd->add_option("--grid-re", o.grid_re, "lo:hi:count for Re z");
  fwd->add_option("--grid-im", o.grid_im, "lo:hi:count or value for Im z");
  fwd->add_option("--out", o.out, "CSV output (default stdout)");

  auto* inv = app.add_subcommand("inverse", "Hamiltonian steps and masses of a measure");
  inv->add_option("--measure", o.measure, "measure JSON")->required();
  inv->add_option("--T", o.T_text, "half period (pi literals allowed)");
  inv->add_option("--N", o.N, "number of steps");
  inv->add_option("--method", o.method, "toeplitz|opuc");
  inv->add_option("--solver", o.solver, "levinson|cholesky (toeplitz only)");
  inv->add_option("--out", o.out, "CSV output (default stdout)");

  auto* per = app.add_subcommand("periodize", "2T-periodization of a measure, as JSON");
  per->add_option("--measure", o.measure, "measure JSON")->required();
  per->add_option("--T", o.T_text, "half period")->required();
  per->add_option("--out", o.out, "JSON output (default stdout)");

  auto* swp = app.add_subcommand("sweep", "|f^T(z) - f(z)| over T and z");
  swp->add_option("--measure", o.measure, "measure JSON")->required();
  swp->add_option("--T-list", o.t_list, "comma-separated T values")->required();
  auto* sre = swp->add_option("--grid-re", o.grid_re, "lo:hi:count for Re z (default: 50-point grid)");
  auto* sim = swp->add_option("--grid-im", o.grid_im, "lo:hi:count or value for Im z");
  swp->add_option("--tol", o.tol, "quadrature tolerance");
  swp->add_option("--ratios", o.ratios, "CSV of consecutive error ratios");
  swp->add_option("--out", o.out, "CSV output (default stdout)");

  auto* rt = app.add_subcommand("roundtrip", "forward of inverse against the periodized Schur function");
  rt->add_option("--measure", o.measure, "measure JSON")->required();
  rt->add_option("--T", o.T_text, "half period")->required();
  rt->add_option("--N", o.N, "number of steps");
  rt->add_option("--method", o.method, "toeplitz|opuc");
  rt->add_option("--tol", o.tol, "quadrature tolerance");
  auto* rre = rt->add_option("--grid-re", o.grid_re, "lo:hi:count for Re z (default: 50-point grid)");
  auto* rim = rt->add_option("--grid-im", o.grid_im, "lo:hi:count or value for Im z");
  rt->add_option("--out", o.out, "CSV output (default stdout)");

  auto* fig = app.add_subcommand("figure1", "scaled masses against the oracle potential, one CSV per T");
  fig->add_option("--measure", o.measure, "measure JSON")->required();
  fig->add_option("--T-list", o.t_list, "comma-separated T values")->required();
  fig->add_option("--N", o.N, "rows per T");
  fig->add_option("--out", o.out, "output directory");

  auto* chk = app.add_subcommand("check", "run the property suite");
  chk->add_option("--seed", o.seed, "generator seed");
  chk->add_option("--instances", o.instances, "random instances per property");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "nlft: " << e.what() << "\n";
    return kInputError;
  }
  o.grid_given = (sre->count() + sim->count() + rre->count() + rim->count()) > 0;

  try {
    if (*fwd) return cmd_forward(o, out, err);
    if (*inv) return cmd_inverse(o, out);
    if (*per) return cmd_periodize(o, out);
    if (*swp) return cmd_sweep(o, out);
    if (*rt) return cmd_roundtrip(o, out);
    if (*fig) return cmd_figure1(o, out);
    if (*chk) return cmd_check(o, out);
  } catch (const InputError& e) {
    err << "nlft: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericalError& e) {
    err << "nlft: numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "nlft: input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace nlft::cli
