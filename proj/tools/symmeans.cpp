// symmeans: compute elementary symmetric means exactly, decide attainability,
// apply the attainability-preserving transforms, verify the inequality
// family, and search numerically for near-extremal tuples.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symm/io_json.hpp"
#include "symm/version.hpp"

namespace {

using namespace symm;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonOpts {
  Mode mode = Mode::exact;
  bool mode_explicit = false;
  uint64_t seed = 0;
  double tolerance = 1e-9;
  std::string out;
  std::string config_file;
  std::optional<Rational> c_main_override, c_prev_override, c_lee_override;
  std::string r_grid_spec;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& p : split_csv(text)) out.push_back(parse_rational(p));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& p : split_csv(text)) out.push_back(std::stoi(p));
  return out;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = value;
  }
  return kv;
}

// precedence: explicit flag > SYMM_MODE env > config file > default (exact)
void resolve_common(CommonOpts& opt) {
  std::map<std::string, std::string> file;
  if (!opt.config_file.empty()) file = read_config_file(opt.config_file);

  auto file_at = [&](const std::string& key) -> std::optional<std::string> {
    auto it = file.find(key);
    if (it == file.end()) return std::nullopt;
    return it->second;
  };

  if (!opt.mode_explicit) {
    if (auto m = file_at("mode")) {
      auto parsed = mode_from_name(*m);
      if (!parsed) throw std::runtime_error("config: bad mode '" + *m + "'");
      opt.mode = *parsed;
    }
    if (const char* env = std::getenv("SYMM_MODE")) {
      auto parsed = mode_from_name(env);
      if (!parsed) throw std::runtime_error("SYMM_MODE: bad mode '" + std::string(env) + "'");
      opt.mode = *parsed;
    }
  }
  if (auto v = file_at("seed"); v && opt.seed == 0) opt.seed = std::stoull(*v);
  if (auto v = file_at("tolerance"); v && opt.tolerance == 1e-9) opt.tolerance = std::stod(*v);
  if (auto v = file_at("out"); v && opt.out.empty()) opt.out = *v;
  if (auto v = file_at("r_grid"); v && opt.r_grid_spec.empty()) opt.r_grid_spec = *v;
  if (auto v = file_at("c_main"); v && !opt.c_main_override) opt.c_main_override = parse_rational(*v);
  if (auto v = file_at("c_prev"); v && !opt.c_prev_override) opt.c_prev_override = parse_rational(*v);
  if (auto v = file_at("c_lee"); v && !opt.c_lee_override) opt.c_lee_override = parse_rational(*v);
}

ConfigEcho make_echo(const CommonOpts& opt) {
  ConfigEcho echo;
  echo["mode"] = mode_name(opt.mode);
  echo["seed"] = std::to_string(opt.seed);
  char tol[32];
  std::snprintf(tol, sizeof tol, "%g", opt.tolerance);
  echo["tolerance"] = tol;
  if (opt.c_main_override) echo["c_main"] = format_rational(*opt.c_main_override);
  if (opt.c_prev_override) echo["c_prev"] = format_rational(*opt.c_prev_override);
  if (opt.c_lee_override) echo["c_lee"] = format_rational(*opt.c_lee_override);
  if (!opt.r_grid_spec.empty()) echo["r_grid"] = opt.r_grid_spec;
  return echo;
}

Json config_header(const std::string& command, const CommonOpts& opt) {
  Json j{{"type", "config"}, {"version", kVersion}, {"command", command}};
  for (const auto& [key, value] : make_echo(opt)) j[key] = value;
  return j;
}

// 48-bit dyadic truncation of sqrt(2), via integer sqrt
Rational sqrt2_dyadic() {
  static const Rational v = sqrt_bracket(Rational(2), 48).lo;
  return v;
}

// default grid: 33 log-spaced points 2^-8 .. 2^8 (half-integer exponents use
// a dyadic sqrt(2) so every point stays rational), plus delta (k/n)^{1/2} for
// delta in {1/4, 1/2, 1} when k and n are supplied
std::vector<Rational> default_r_grid(std::optional<int> k, std::optional<int> n) {
  std::vector<Rational> grid;
  for (int i = 0; i <= 32; ++i) {
    int twice_e = -16 + i;  // exponent e = twice_e / 2
    int fl = twice_e >= 0 ? twice_e / 2 : -((-twice_e + 1) / 2);
    Rational base = fl >= 0 ? Rational(pow_int(Int(2), static_cast<unsigned long>(fl)))
                            : make_frac(Int(1), pow_int(Int(2), static_cast<unsigned long>(-fl)));
    grid.push_back(twice_e % 2 == 0 ? base : Rational(base * sqrt2_dyadic()));
  }
  if (k && n && *n > 0) {
    Rational root = sqrt_bracket(make_frac(*k, *n), 48).lo;
    if (sgn(root) > 0)
      for (int d : {4, 2, 1}) grid.push_back(Rational(root / d));
  }
  return grid;
}

std::vector<Rational> resolve_r_grid(const CommonOpts& opt, std::optional<int> k,
                                     std::optional<int> n) {
  if (opt.r_grid_spec.empty()) return default_r_grid(k, n);
  auto grid = parse_rational_list(opt.r_grid_spec);
  for (const Rational& r : grid)
    if (sgn(r) <= 0) throw std::runtime_error("r grid values must be positive");
  return grid;
}

void write_artifact(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output path: " + path);
  out << payload;
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

// ---------------------------------------------------------------------------

int cmd_compute(const CommonOpts& opt, const std::string& roots_arg,
                const std::string& means_arg, bool want_unnormalized) {
  Json result;
  if (!means_arg.empty()) {
    MeansTuple<Rational> s(parse_rational_list(means_arg));
    result = to_json(s);
    if (want_unnormalized) {
      Json arr = Json::array();
      for (const Rational& v : unnormalized(s)) arr.push_back(format_rational(v));
      result["unnormalized"] = arr;
    }
  } else {
    if (opt.mode == Mode::floating) {
      std::vector<double> roots;
      for (const Rational& q : parse_rational_list(roots_arg)) roots.push_back(to_double(q));
      MeansTuple<double> s = elementary_means(RootTuple<double>(std::move(roots)));
      result = to_json(s);
      if (want_unnormalized) result["unnormalized"] = unnormalized(s);
    } else {
      RootTuple<Rational> y(parse_rational_list(roots_arg));
      MeansTuple<Rational> s = elementary_means(y);
      result = to_json(s);
      if (want_unnormalized) {
        Json arr = Json::array();
        for (const Rational& v : unnormalized(s)) arr.push_back(format_rational(v));
        result["unnormalized"] = arr;
      }
    }
  }
  Json out = config_header("compute", opt);
  out["result"] = result;
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_attainable(const CommonOpts& opt, const std::string& means_arg, bool snap) {
  if (opt.mode == Mode::floating && !snap) {
    std::cerr << "attainable: float mode requires --snap (the predicate is decided exactly "
                 "on denominator-2^53 rationals)\n";
    return kExitUsage;
  }
  std::vector<Rational> means = parse_rational_list(means_arg);
  if (snap)
    for (Rational& q : means) q = snap_to_dyadic(q);
  MeansTuple<Rational> s(std::move(means));
  AttainVerdict v = is_attainable(s);
  Json out = config_header("attainable", opt);
  out["result"] = to_json(v);
  std::cout << out.dump() << "\n";
  return v.attainable ? kExitOk : kExitNegative;
}

struct VerifyArgs {
  std::string check;
  std::string means_arg, roots_arg;
  std::optional<int> k, l;
  std::optional<Rational> r;
  std::optional<Rational> theta;
  std::string form = "r1";
};

int cmd_verify(const CommonOpts& opt, const VerifyArgs& args) {
  std::optional<RootTuple<Rational>> roots;
  MeansTuple<Rational> s;
  if (!args.roots_arg.empty()) {
    roots = RootTuple<Rational>(parse_rational_list(args.roots_arg));
    s = elementary_means(*roots);
  } else if (!args.means_arg.empty()) {
    s = MeansTuple<Rational>(parse_rational_list(args.means_arg));
  } else {
    std::cerr << "verify: --means or --roots required\n";
    return kExitUsage;
  }
  const int n = s.n();

  std::vector<Json> reports;
  const std::string& name = args.check;

  Rational cm = opt.c_main_override.value_or(c_main().hi);
  Rational cp = opt.c_prev_override.value_or(c_prev().hi);
  Rational cl = opt.c_lee_override.value_or(lee_default_c());

  auto as_float = [&](const MeansTuple<Rational>& sr) {
    std::vector<double> m;
    for (const Rational& q : sr.means) m.push_back(to_double(q));
    return MeansTuple<double>(std::move(m));
  };

  const bool exact = opt.mode == Mode::exact;
  if (name == "newton") {
    reports.push_back(to_json(exact ? check_newton(s) : check_newton(as_float(s), opt.tolerance)));
  } else if (name == "maclaurin") {
    if (roots)
      reports.push_back(to_json(check_maclaurin(*roots)));
    else
      reports.push_back(to_json(check_maclaurin(s)));
  } else if (name == "rosset") {
    reports.push_back(to_json(exact ? check_rosset(s) : check_rosset(as_float(s), opt.tolerance)));
  } else if (name == "amgm") {
    if (!roots) {
      std::cerr << "verify: --check amgm requires --roots\n";
      return kExitUsage;
    }
    reports.push_back(to_json(check_amgm_bound(*roots)));
  } else if (name == "step") {
    int lo = args.l.value_or(2), hi = args.l.value_or(n);
    for (int l = lo; l <= hi; ++l) reports.push_back(to_json(check_step_bound(s, l)));
  } else if (name == "prev") {
    for (int k = args.k.value_or(1); k <= args.k.value_or(n - 1); ++k)
      for (int l = args.l.value_or(k); l <= args.l.value_or(n); ++l) {
        if (k > l || k >= n) continue;
        reports.push_back(to_json(check_prev_bound(s, k, l, cp)));
      }
  } else if (name == "main") {
    for (int k = args.k.value_or(1); k <= args.k.value_or(n - 1); ++k)
      for (int l = args.l.value_or(k + 1); l <= args.l.value_or(n); ++l) {
        if (k >= l) continue;
        reports.push_back(to_json(check_main(s, k, l, cm)));
      }
  } else if (name == "lee") {
    if (!args.theta) {
      std::cerr << "verify: --check lee requires --theta\n";
      return kExitUsage;
    }
    std::vector<Rational> S = unnormalized(s);
    for (int k = args.k.value_or(1); k <= args.k.value_or(n - 1); ++k)
      reports.push_back(to_json(check_lee_form(S, k, *args.theta, cl)));
  } else if (name == "new") {
    NewForm form = args.form == "r2" ? NewForm::r2 : NewForm::r1;
    if (args.form != "r1" && args.form != "r2") {
      std::cerr << "verify: --form must be r1 or r2\n";
      return kExitUsage;
    }
    int l = args.l.value_or(n);
    std::vector<Rational> grid =
        args.r ? std::vector<Rational>{*args.r} : resolve_r_grid(opt, args.k, n);
    for (const Rational& r : grid) {
      Json j = to_json(check_new_inequality(s, l, r, form));
      j["r"] = format_rational(r);
      reports.push_back(std::move(j));
    }
  } else {
    std::cerr << "verify: unknown check '" << name << "'\n";
    return kExitUsage;
  }

  if (reports.empty()) {
    std::cerr << "verify: no applicable indices for '" << name << "' on an n=" << n
              << " tuple\n";
    return kExitUsage;
  }

  std::cout << config_header("verify", opt).dump() << "\n";
  bool all_hold = true;
  for (const Json& rep : reports) {
    std::cout << rep.dump() << "\n";
    all_hold = all_hold && rep.at("holds").get<bool>();
  }
  return all_hold ? kExitOk : kExitNegative;
}

int cmd_search(const CommonOpts& opt, const SearchConfig& cfg) {
  SearchResult res = multi_start_search(cfg);
  std::string payload = search_records_jsonl(cfg, res.records, make_echo(opt));
  write_artifact(opt.out, payload);
  Json best{{"type", "best"}, {"record", to_json(res.best)}};
  std::cout << best.dump() << "\n";
  return kExitOk;
}

int cmd_family(const CommonOpts& opt, int n, bool want_unnormalized) {
  MeansTuple<Rational> s = extremal_family<Rational>(n);
  Json out = config_header("family", opt);
  out["result"] = to_json(s);
  if (want_unnormalized) {
    Json arr = Json::array();
    for (const Rational& v : unnormalized(s)) arr.push_back(format_rational(v));
    out["result"]["unnormalized"] = arr;
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_table(const CommonOpts& opt, const std::string& n_list_arg) {
  std::vector<int> n_list = parse_int_list(n_list_arg);
  std::vector<KevRow> rows = kev_table(n_list);
  write_artifact(opt.out, kev_table_csv(rows, make_echo(opt)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elementary symmetric means: exact computation, attainability, "
               "inequality verification, extremal search"};
  app.set_version_flag("--version", symm::kVersion);
  app.require_subcommand(1);

  CommonOpts opt;
  std::string mode_name_arg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_name_arg, "exact|float (default exact)");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--tolerance", opt.tolerance, "float-mode relative tolerance");
    sub->add_option("--out", opt.out, "output path ('-' for stdout)");
    sub->add_option("--config", opt.config_file, "key=value config file");
    sub->add_option("--c-main", [&](const std::vector<std::string>& v) {
      opt.c_main_override = symm::parse_rational(v.at(0));
      return true;
    }, "override for the main-inequality constant");
    sub->add_option("--c-prev", [&](const std::vector<std::string>& v) {
      opt.c_prev_override = symm::parse_rational(v.at(0));
      return true;
    }, "override for the prev-bound constant");
    sub->add_option("--c-lee", [&](const std::vector<std::string>& v) {
      opt.c_lee_override = symm::parse_rational(v.at(0));
      return true;
    }, "override for the lee-form constant");
    sub->add_option("--r-grid", opt.r_grid_spec, "comma list of positive rationals");
  };

  // compute
  std::string roots_arg, means_arg;
  bool want_unnormalized = false;
  CLI::App* compute = app.add_subcommand("compute", "means of a root tuple (or echo means)");
  compute->add_option("--roots", roots_arg, "comma list of roots");
  compute->add_option("--means", means_arg, "comma list s_0,...,s_n");
  compute->add_flag("--unnormalized", want_unnormalized, "also print S_k = C(n,k) s_k");
  add_common(compute);

  // attainable
  std::string att_means;
  bool att_snap = false;
  CLI::App* attainable = app.add_subcommand("attainable", "decide attainability of a means tuple");
  attainable->add_option("--means", att_means, "comma list s_0,...,s_n")->required();
  attainable->add_flag("--snap", att_snap, "snap inputs to denominator 2^53 first");
  add_common(attainable);

  // verify
  VerifyArgs vargs;
  int vk = 0, vl = 0;
  std::string vr, vtheta;
  CLI::App* verify = app.add_subcommand("verify", "verify an inequality; one JSON report per line");
  verify->add_option("--check", vargs.check,
                     "newton|maclaurin|rosset|amgm|step|prev|main|lee|new")->required();
  verify->add_option("--means", vargs.means_arg, "comma list s_0,...,s_n");
  verify->add_option("--roots", vargs.roots_arg, "comma list of roots");
  CLI::Option* okk = verify->add_option("--k", vk, "first index");
  CLI::Option* oll = verify->add_option("--l", vl, "second index");
  verify->add_option("--r", vr, "single r value (rational)");
  verify->add_option("--theta", vtheta, "theta for the lee form (rational)");
  verify->add_option("--form", vargs.form, "r1|r2 for --check new");
  add_common(verify);

  // search
  SearchConfig cfg;
  std::string dist_arg = "gauss";
  CLI::App* search = app.add_subcommand("search", "multi-start pattern search; JSONL records");
  search->add_option("--n", cfg.n, "tuple size")->required();
  search->add_option("--k", cfg.k, "lower index")->required();
  search->add_option("--l", cfg.l, "upper index")->required();
  search->add_option("--budget", cfg.budget, "objective evaluations per restart");
  search->add_option("--restarts", cfg.restarts, "number of independent starts");
  search->add_option("--dist", dist_arg, "gauss|rademacher|heavy_tail");
  add_common(search);

  // family
  int family_n = 0;
  bool family_unnorm = false;
  CLI::App* family = app.add_subcommand("family", "the balanced +-1 extremal family");
  family->add_option("--n", family_n, "even tuple size")->required();
  family->add_flag("--unnormalized", family_unnorm, "also print S_k");
  add_common(family);

  // table
  std::string n_list_arg;
  CLI::App* table = app.add_subcommand("table", "normalized-ratio table on the extremal family");
  table->add_option("--n-list", n_list_arg, "comma list of even n")->required();
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!mode_name_arg.empty()) {
      auto parsed = symm::mode_from_name(mode_name_arg);
      if (!parsed) throw std::runtime_error("bad --mode '" + mode_name_arg + "'");
      opt.mode = *parsed;
      opt.mode_explicit = true;
    }
    resolve_common(opt);

    if (compute->parsed()) return cmd_compute(opt, roots_arg, means_arg, want_unnormalized);
    if (attainable->parsed()) return cmd_attainable(opt, att_means, att_snap);
    if (verify->parsed()) {
      if (okk->count()) vargs.k = vk;
      if (oll->count()) vargs.l = vl;
      if (!vr.empty()) vargs.r = symm::parse_rational(vr);
      if (!vtheta.empty()) vargs.theta = symm::parse_rational(vtheta);
      return cmd_verify(opt, vargs);
    }
    if (search->parsed()) {
      auto d = symm::dist_from_name(dist_arg);
      if (!d) throw std::runtime_error("bad --dist '" + dist_arg + "'");
      cfg.dist = *d;
      cfg.seed = opt.seed;
      return cmd_search(opt, cfg);
    }
    if (family->parsed()) return cmd_family(opt, family_n, family_unnorm);
    if (table->parsed()) return cmd_table(opt, n_list_arg);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
