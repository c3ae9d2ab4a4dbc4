#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/cone.hpp"
#include "hardy/constants.hpp"
#include "hardy/extremal.hpp"
#include "hardy/io.hpp"
#include "hardy/norms.hpp"
#include "hardy/verify.hpp"
#include "plot.hpp"

namespace hardy::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Table };

struct Shared {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;
  double tol = 0.0;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "table") return Format::Table;
    return Format::Json;
  }
};

void add_shared(CLI::App* sub, Shared& shared, std::uint64_t seed, double tol) {
  shared.seed = seed;
  shared.tol = tol;
  sub->add_option("--format", shared.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--out", shared.out_path, "Write output to this path instead of stdout");
  sub->add_option("--seed", shared.seed, "Random seed")->capture_default_str();
  sub->add_option("--tol", shared.tol, "Tolerance")->capture_default_str();
}

void emit(const Shared& shared, const std::string& text, std::ostream& out) {
  if (shared.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(shared.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + shared.out_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + shared.out_path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Fixed-width human table; no stability promise.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i + 1 == row.size()) {
          os << row[i];
        } else {
          os << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
        }
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string short_num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::vector<double> p_range(double lo, double hi, double step) {
  if (!(lo > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw UsageError("p range must be positive and finite");
  }
  if (hi < lo) throw UsageError("--pmax must not be below --pmin");
  if (hi == lo) return {lo};
  if (!(step > 0.0)) throw UsageError("--step must be positive");
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (n > 100000) throw UsageError("p range has too many points");
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

// ---------------------------------------------------------------- cp

struct CpArgs {
  Shared shared;
  double pmin = 1.0;
  double pmax = 5.0;
  double step = 0.5;
  double p = 0.0;
};

int cmd_cp(const CpArgs& a, std::ostream& out) {
  const std::vector<double> ps = a.p > 0.0 ? std::vector<double>{a.p} : p_range(a.pmin, a.pmax, a.step);
  if (!(a.shared.tol > 0.0)) throw UsageError("--tol must be positive");
  struct Row {
    double p, c, root, pm1, prime, quad;
  };
  std::vector<Row> rows;
  for (double p : ps) {
    rows.push_back({p, cp(p), cp_root(p), p - 1.0, cp_prime(p), cp_quadrature(p, a.shared.tol)});
  }

  std::string text;
  switch (a.shared.fmt()) {
    case Format::Json: {
      Json arr = Json::array();
      for (const Row& r : rows) {
        Json j;
        j["p"] = r.p;
        j["cp"] = r.c;
        j["cp_root"] = r.root;
        j["p_minus_1"] = r.pm1;
        j["cp_prime"] = r.prime;
        j["cp_quadrature"] = r.quad;
        j["sharp"] = r.p > 1.0 ? io::to_json(sharp(r.p)) : Json(nullptr);
        arr.push_back(std::move(j));
      }
      Json doc;
      doc["command"] = "cp";
      doc["quadrature_tol"] = a.shared.tol;
      doc["rows"] = std::move(arr);
      text = dump(doc);
      break;
    }
    case Format::Csv:
      text = "p,cp,cp_root,p_minus_1,cp_prime,cp_quadrature\n";
      for (const Row& r : rows) {
        text += io::csv_line({io::number(r.p), io::number(r.c), io::number(r.root),
                              io::number(r.pm1), io::number(r.prime), io::number(r.quad)}) +
                "\n";
      }
      break;
    case Format::Table: {
      Table t({"p", "C_p", "C_p^(1/p)", "p-1", "dC_p/dp"});
      for (const Row& r : rows) {
        t.add({short_num(r.p), short_num(r.c), short_num(r.root), short_num(r.pm1), short_num(r.prime)});
      }
      text = t.str();
      break;
    }
  }
  emit(a.shared, text, out);
  return kExitOk;
}

// ------------------------------------------------------------ verify

struct VerifyArgs {
  Shared shared;
  std::string suite = "all";
  std::size_t samples = 1000;
  std::vector<double> p;
  bool random_p = false;
  std::size_t pieces = 8;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.samples < 1) throw UsageError("--samples must be >= 1");
  if (a.pieces < 1) throw UsageError("--pieces must be >= 1");
  if (!(a.shared.tol > 0.0)) throw UsageError("--tol must be positive");
  SweepOptions options;
  options.samples = a.samples;
  options.seed = a.shared.seed;
  if (!a.p.empty()) options.p_grid = a.p;
  for (double p : options.p_grid) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw UsageError("--p values must be >= 1");
  }
  options.random_p = a.random_p;
  options.max_pieces = a.pieces;
  options.slack = a.shared.tol;
  const Suite suite = suite_from_name(a.suite);
  const std::vector<VerificationReport> reports = run_suite(suite, options);
  bool passed = true;
  for (const VerificationReport& r : reports) passed = passed && r.passed;

  std::string text;
  switch (a.shared.fmt()) {
    case Format::Json: {
      Json doc;
      doc["command"] = "verify";
      doc["suite"] = a.suite;
      doc["seed"] = a.shared.seed;
      doc["samples"] = a.samples;
      doc["p_grid"] = options.p_grid;
      doc["random_p"] = a.random_p;
      doc["slack"] = options.slack;
      doc["passed"] = passed;
      Json arr = Json::array();
      for (const VerificationReport& r : reports) arr.push_back(io::to_json(r));
      doc["reports"] = std::move(arr);
      text = dump(doc);
      break;
    }
    case Format::Csv:
      text = "suite,seed,check_name,samples,worst_violation,tolerance,passed\n";
      for (const VerificationReport& r : reports) {
        text += io::csv_line({a.suite, std::to_string(a.shared.seed), r.check_name,
                              std::to_string(r.samples), io::number(r.worst_violation),
                              io::number(r.tolerance), r.passed ? "true" : "false"}) +
                "\n";
      }
      break;
    case Format::Table: {
      Table t({"status", "check", "samples", "worst", "tol"});
      for (const VerificationReport& r : reports) {
        t.add({r.passed ? "PASS" : "FAIL", r.check_name, std::to_string(r.samples),
               short_num(r.worst_violation), short_num(r.tolerance)});
      }
      text = "suite=" + a.suite + " seed=" + std::to_string(a.shared.seed) +
             " samples=" + std::to_string(a.samples) + "\n" + t.str() +
             (passed ? "all checks passed\n" : "some checks FAILED\n");
      break;
    }
  }
  emit(a.shared, text, out);
  return passed ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------- extremal

struct ExtremalArgs {
  Shared shared;
  double p = 0.0;
  std::string mode = "sup";
  std::size_t pieces = 8;
  std::size_t budget = 5000;
  std::size_t restarts = 8;
};

double sharp_target(double p, SearchMode mode) {
  const auto [lo, hi] = dual_bounds(p);
  return mode == SearchMode::Sup ? hi : lo;
}

SearchResult run_search(const ExtremalArgs& a) {
  if (!(a.p > 1.0) || !std::isfinite(a.p)) throw UsageError("--p must be > 1");
  if (a.pieces < 1 || a.budget < 1 || a.restarts < 1) {
    throw UsageError("--pieces, --budget and --restarts must be >= 1");
  }
  SearchOptions options;
  options.pieces = a.pieces;
  options.budget = a.budget;
  options.restarts = a.restarts;
  options.seed = a.shared.seed;
  return search(a.p, mode_from_name(a.mode), options);
}

int cmd_extremal(const ExtremalArgs& a, std::ostream& out) {
  const SearchResult r = run_search(a);
  const double target = sharp_target(a.p, r.mode);
  const double gap = std::abs(r.best_ratio - target);

  std::string text;
  switch (a.shared.fmt()) {
    case Format::Json: {
      Json doc;
      doc["command"] = "extremal";
      doc["seed"] = a.shared.seed;
      doc["pieces"] = a.pieces;
      doc["budget"] = a.budget;
      doc["restarts"] = a.restarts;
      doc["sharp_bound"] = target;
      doc["gap"] = gap;
      doc["tol"] = a.shared.tol;
      doc["within_tol"] = gap <= a.shared.tol;
      doc["result"] = io::to_json(r);
      text = dump(doc);
      break;
    }
    case Format::Csv:
      text = "seed,iteration,ratio\n";
      for (const TracePoint& t : r.trace) {
        text += io::csv_line({std::to_string(a.shared.seed), std::to_string(t.iteration),
                              io::number(t.ratio)}) +
                "\n";
      }
      break;
    case Format::Table: {
      std::ostringstream os;
      os << std::setprecision(15);
      os << "p=" << a.p << " mode=" << a.mode << " seed=" << a.shared.seed << "\n"
         << "best ratio     " << r.best_ratio << "\n"
         << "sharp bound    " << target << "\n"
         << "gap            " << gap << (gap <= a.shared.tol ? "  (within tol)" : "  (outside tol)")
         << "\n"
         << "evaluations    " << r.iterations << "\n"
         << "witness pieces " << r.best_function.size() << "\n";
      text = os.str();
      break;
    }
  }
  emit(a.shared, text, out);
  return kExitOk;
}

// ------------------------------------------------------ family, keps

struct FamilyArgs {
  Shared shared;
  double p = 0.0;
  std::vector<double> q;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  if (!(a.p > 1.0) || !std::isfinite(a.p)) throw UsageError("--p must be > 1");
  std::vector<double> q = a.q;
  if (q.empty()) {
    for (double x : default_q_list(a.p)) {
      if (x > 1.0) q.push_back(x);
    }
  }
  const FamilyScan scan = family_scan(a.p, q);
  std::string text;
  switch (a.shared.fmt()) {
    case Format::Json: {
      Json doc;
      doc["command"] = "family";
      doc["limit_test1"] = a.p - 1.0;
      doc["limit_test2"] = (a.p - 1.0) * (a.p - 1.0);
      doc["scan"] = io::to_json(scan);
      text = dump(doc);
      break;
    }
    case Format::Csv:
      text = "q,ratio_test1,ratio_test2,eps_check\n";
      for (std::size_t i = 0; i < scan.q_list.size(); ++i) {
        text += io::csv_line({io::number(scan.q_list[i]), io::number(scan.ratios_test1[i]),
                              io::number(scan.ratios_test2[i]), io::number(scan.eps_check[i])}) +
                "\n";
      }
      break;
    case Format::Table: {
      Table t({"q", "test1", "test2", "eps*|g_q|"});
      for (std::size_t i = 0; i < scan.q_list.size(); ++i) {
        t.add({short_num(scan.q_list[i]), short_num(scan.ratios_test1[i]),
               short_num(scan.ratios_test2[i]), short_num(scan.eps_check[i])});
      }
      text = "limits: test1 -> " + short_num(a.p - 1.0) + ", test2 -> " +
             short_num((a.p - 1.0) * (a.p - 1.0)) + "\n" + t.str();
      break;
    }
  }
  emit(a.shared, text, out);
  return kExitOk;
}

struct KepsArgs {
  Shared shared;
  double p = 0.0;
  std::vector<double> eps{0.1, 0.01, 0.001};
};

int cmd_keps(const KepsArgs& a, std::ostream& out) {
  if (!(a.p > 1.0) || !std::isfinite(a.p)) throw UsageError("--p must be > 1");
  const std::vector<KepsRow> rows = keps_scan(a.p, a.eps);
  std::string text;
  switch (a.shared.fmt()) {
    case Format::Json: {
      Json doc;
      doc["command"] = "keps";
      doc["p"] = a.p;
      doc["limit_dual_image"] = 1.0;
      doc["limit_sqrd_image"] = cp_root(a.p);
      Json arr = Json::array();
      for (const KepsRow& r : rows) arr.push_back(io::to_json(r));
      doc["rows"] = std::move(arr);
      text = dump(doc);
      break;
    }
    case Format::Csv:
      text = "eps,norm_dual_image,norm_sqrd_image\n";
      for (const KepsRow& r : rows) {
        text += io::csv_line({io::number(r.eps), io::number(r.norm_dual_image),
                              io::number(r.norm_sqrd_image)}) +
                "\n";
      }
      break;
    case Format::Table: {
      Table t({"eps", "|H* k|", "|(H*^2-H*) k|"});
      for (const KepsRow& r : rows) {
        t.add({short_num(r.eps), short_num(r.norm_dual_image), short_num(r.norm_sqrd_image)});
      }
      text = "limits: 1 and C_p^(1/p) = " + short_num(cp_root(a.p)) + "\n" + t.str();
      break;
    }
  }
  emit(a.shared, text, out);
  return kExitOk;
}

// ------------------------------------------------------------- norms

struct NormsArgs {
  Shared shared;
  std::string input;
  double p = 0.0;
};

int cmd_norms(const NormsArgs& a, std::ostream& out) {
  if (!(a.p > 1.0) || !std::isfinite(a.p)) throw UsageError("--p must be > 1");
  std::ifstream file(a.input);
  if (!file) throw IoError("cannot read '" + a.input + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw IoError("'" + a.input + "' is not valid JSON: " + e.what());
  }
  const NormReport r = doc.contains("breakpoints") ? norm_report(io::step_from_json(doc), a.p)
                                                   : norm_report(io::piecewise_from_json(doc), a.p);
  std::string text;
  switch (a.shared.fmt()) {
    case Format::Json:
      text = dump(io::to_json(r));
      break;
    case Format::Csv:
      text = io::csv_header(r) + "\n" + io::csv_row(r) + "\n";
      break;
    case Format::Table: {
      Table t({"quantity", "value"});
      t.add({"||f||", short_num(r.norm_f)});
      t.add({"||(H-I)f||", short_num(r.norm_hardy_osc)});
      t.add({"||(H*-I)f||", short_num(r.norm_dual_osc)});
      t.add({"dual ratio", short_num(r.ratio_dual)});
      t.add({"hardy ratio", short_num(r.ratio_hardy)});
      t.add({"dual/hardy", short_num(r.ratio_dual_over_hardy)});
      text = t.str();
      break;
    }
  }
  emit(a.shared, text, out);
  return kExitOk;
}

// -------------------------------------------------------------- plot

struct PlotArgs {
  Shared shared;
  std::string what = "cp-root";
  double pmin = 1.0;
  double pmax = 4.0;
  double p = 0.0;
  std::string mode = "sup";
  std::size_t pieces = 8;
  std::size_t budget = 5000;
  std::size_t restarts = 8;
};

plot::Series constant_line(const std::string& label, double x0, double x1, double y,
                           const std::string& color) {
  return {label, {x0, x1}, {y, y}, color, true};
}

int cmd_plot(const PlotArgs& a, std::ostream& out) {
  plot::Figure fig;
  if (a.what == "cp-root") {
    if (!(a.pmin > 0.0) || !(a.pmax > a.pmin)) throw UsageError("need 0 < --pmin < --pmax");
    plot::Series root{"C_p^(1/p)", {}, {}, "#1f77b4", false};
    plot::Series linear{"p - 1", {}, {}, "#d62728", false};
    for (int i = 0; i <= 200; ++i) {
      const double p = a.pmin + (a.pmax - a.pmin) * i / 200.0;
      root.x.push_back(p);
      root.y.push_back(cp_root(p));
      linear.x.push_back(p);
      linear.y.push_back(p - 1.0);
    }
    fig = {"C_p^(1/p) against p - 1", "p", "constant", {root, linear}};
  } else if (a.what == "family") {
    if (!(a.p > 1.0)) throw UsageError("--p must be > 1");
    std::vector<double> q;
    std::vector<double> x;
    for (int i = 0; i <= 60; ++i) {
      const double k = 0.5 + 3.5 * i / 60.0;
      const double qq = a.p - std::pow(10.0, -k);
      if (qq > 1.0) {
        q.push_back(qq);
        x.push_back(k);
      }
    }
    if (q.size() < 2) throw UsageError("--p too close to 1 for a family plot");
    const FamilyScan scan = family_scan(a.p, q);
    fig = {"f_q / g_q ratios as q -> p", "-log10(p - q)", "ratio",
           {{"test1", x, scan.ratios_test1, "#1f77b4", false},
            constant_line("p - 1", x.front(), x.back(), a.p - 1.0, "#1f77b4"),
            {"test2", x, scan.ratios_test2, "#d62728", false},
            constant_line("(p - 1)^2", x.front(), x.back(), (a.p - 1.0) * (a.p - 1.0), "#d62728")}};
  } else if (a.what == "keps") {
    if (!(a.p > 1.0)) throw UsageError("--p must be > 1");
    std::vector<double> eps;
    std::vector<double> x;
    for (int i = 0; i <= 30; ++i) {
      const double k = 0.3 + 2.7 * i / 30.0;
      eps.push_back(std::pow(10.0, -k));
      x.push_back(k);
    }
    const std::vector<KepsRow> rows = keps_scan(a.p, eps);
    plot::Series image{"|H* k_eps|", x, {}, "#1f77b4", false};
    plot::Series sqrd{"|(H*^2 - H*) k_eps|", x, {}, "#d62728", false};
    for (const KepsRow& r : rows) {
      image.y.push_back(r.norm_dual_image);
      sqrd.y.push_back(r.norm_sqrd_image);
    }
    fig = {"k_eps norms as eps -> 0", "-log10(eps)", "norm",
           {image, constant_line("1", x.front(), x.back(), 1.0, "#1f77b4"), sqrd,
            constant_line("C_p^(1/p)", x.front(), x.back(), cp_root(a.p), "#d62728")}};
  } else if (a.what == "trace") {
    ExtremalArgs e;
    e.shared = a.shared;
    e.p = a.p;
    e.mode = a.mode;
    e.pieces = a.pieces;
    e.budget = a.budget;
    e.restarts = a.restarts;
    const SearchResult r = run_search(e);
    plot::Series trace{"best ratio", {}, {}, "#1f77b4", false};
    for (const TracePoint& t : r.trace) {
      trace.x.push_back(static_cast<double>(t.iteration));
      trace.y.push_back(t.ratio);
    }
    const double last = trace.x.empty() ? 1.0 : trace.x.back();
    fig = {"extremal search trace (seed " + std::to_string(a.shared.seed) + ")", "evaluation",
           "ratio", {trace, constant_line("sharp bound", 0.0, last, sharp_target(a.p, r.mode), "#d62728")}};
  } else {
    throw UsageError("unknown plot '" + a.what + "'");
  }
  emit(a.shared, plot::render_svg(fig), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillation operators on the cone of nonincreasing functions"};
  app.require_subcommand(1);

  CpArgs cp_args;
  CLI::App* cp_cmd = app.add_subcommand("cp", "Table of C_p, C_p^(1/p), p-1 and dC_p/dp");
  add_shared(cp_cmd, cp_args.shared, 0, 1e-13);
  cp_cmd->add_option("--pmin", cp_args.pmin)->capture_default_str();
  cp_cmd->add_option("--pmax", cp_args.pmax)->capture_default_str();
  cp_cmd->add_option("--step", cp_args.step)->capture_default_str();
  cp_cmd->add_option("--p", cp_args.p, "Single p (overrides the range)");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  add_shared(verify_cmd, verify_args.shared, 42, 1e-12);
  verify_cmd->add_option("--suite", verify_args.suite)
      ->check(CLI::IsMember({"main", "kolyada", "compare", "sqrd", "lemmas", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--samples", verify_args.samples)->capture_default_str();
  verify_cmd->add_option("--p", verify_args.p, "p grid (default 1,1.25,1.5,1.75,2,2.5,3,4)");
  verify_cmd->add_flag("--random-p", verify_args.random_p, "Draw p uniformly from [1,4] per sample");
  verify_cmd->add_option("--pieces", verify_args.pieces, "Maximum steps per random sample")
      ->capture_default_str();

  ExtremalArgs ext_args;
  CLI::App* ext_cmd = app.add_subcommand("extremal", "Search the cone for extreme ratios");
  add_shared(ext_cmd, ext_args.shared, 0, 1e-6);
  ext_cmd->add_option("--p", ext_args.p)->required();
  ext_cmd->add_option("--mode", ext_args.mode)->check(CLI::IsMember({"sup", "inf"}))->capture_default_str();
  ext_cmd->add_option("--pieces", ext_args.pieces)->capture_default_str();
  ext_cmd->add_option("--budget", ext_args.budget, "Evaluations per restart")->capture_default_str();
  ext_cmd->add_option("--restarts", ext_args.restarts)->capture_default_str();

  FamilyArgs fam_args;
  CLI::App* fam_cmd = app.add_subcommand("family", "Closed-form ratios along the f_q / g_q family");
  add_shared(fam_cmd, fam_args.shared, 0, 0.0);
  fam_cmd->add_option("--p", fam_args.p)->required();
  fam_cmd->add_option("--q", fam_args.q, "q values in (1,p) (default p - 10^-k, k=1..4)");

  KepsArgs keps_args;
  CLI::App* keps_cmd = app.add_subcommand("keps", "Norms of the k_eps images");
  add_shared(keps_cmd, keps_args.shared, 0, 0.0);
  keps_cmd->add_option("--p", keps_args.p)->required();
  keps_cmd->add_option("--eps", keps_args.eps)->capture_default_str();

  NormsArgs norms_args;
  CLI::App* norms_cmd = app.add_subcommand("norms", "Norm report for a function read from JSON");
  add_shared(norms_cmd, norms_args.shared, 0, 0.0);
  norms_cmd->add_option("--input", norms_args.input)->required();
  norms_cmd->add_option("--p", norms_args.p)->required();

  PlotArgs plot_args;
  CLI::App* plot_cmd = app.add_subcommand("plot", "Write an SVG plot");
  add_shared(plot_cmd, plot_args.shared, 0, 0.0);
  plot_cmd->add_option("--what", plot_args.what)
      ->check(CLI::IsMember({"cp-root", "family", "keps", "trace"}))
      ->capture_default_str();
  plot_cmd->add_option("--pmin", plot_args.pmin)->capture_default_str();
  plot_cmd->add_option("--pmax", plot_args.pmax)->capture_default_str();
  plot_cmd->add_option("--p", plot_args.p);
  plot_cmd->add_option("--mode", plot_args.mode)->check(CLI::IsMember({"sup", "inf"}));
  plot_cmd->add_option("--pieces", plot_args.pieces);
  plot_cmd->add_option("--budget", plot_args.budget);
  plot_cmd->add_option("--restarts", plot_args.restarts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cp_cmd) return cmd_cp(cp_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*ext_cmd) return cmd_extremal(ext_args, out);
    if (*fam_cmd) return cmd_family(fam_args, out);
    if (*keps_cmd) return cmd_keps(keps_args, out);
    if (*norms_cmd) return cmd_norms(norms_args, out);
    if (*plot_cmd) return cmd_plot(plot_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const io::FormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hardy::cli
