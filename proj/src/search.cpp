#include "symm/search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symm {

void validate(const SearchConfig& cfg) {
  if (cfg.n < 2 || cfg.k < 1 || cfg.k >= cfg.l || cfg.l > cfg.n)
    throw std::domain_error("SearchConfig: need 1 <= k < l <= n");
  if (cfg.budget < 1 || cfg.restarts < 1)
    throw std::domain_error("SearchConfig: budget and restarts must be >= 1");
  if (!(cfg.step_init > 0) || !(cfg.step_decay > 0) || !(cfg.step_decay < 1))
    throw std::domain_error("SearchConfig: bad step schedule");
}

double objective(const RootTuple<double>& y, int k, int l) {
  const int n = y.n();
  if (k < 1 || k >= l || l > n) throw std::domain_error("objective: need 1 <= k < l <= n");
  MeansTuple<double> s = elementary_means(y);
  double num = std::pow(std::fabs(s[l]), 1.0 / l);
  double den = 0;
  for (int kp = k; kp <= k + 1; ++kp)
    den = std::max(den, std::sqrt(static_cast<double>(l) / kp) *
                            std::pow(std::fabs(s[kp]), 1.0 / kp));
  if (den == 0.0) return num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return num / den;
}

ObjectiveBracket objective_bracket(const RootTuple<Rational>& y, int k, int l,
                                   unsigned long bits) {
  const int n = y.n();
  if (k < 1 || k >= l || l > n)
    throw std::domain_error("objective_bracket: need 1 <= k < l <= n");
  MeansTuple<Rational> s = elementary_means(y);

  ObjectiveBracket out;
  if (sgn(s[k]) == 0 && sgn(s[k + 1]) == 0) {
    out.anomaly = sgn(s[l]) != 0;
    return out;  // value stays [0,0]; meaningless when anomalous
  }
  if (sgn(s[l]) == 0) return out;  // exactly zero

  for (;; bits *= 2) {
    RatInterval num = nth_root_bracket(s[l] * s[l], 2ul * static_cast<unsigned long>(l), bits);
    RatInterval den{Rational(0), Rational(0)};
    for (int kp = k; kp <= k + 1; ++kp) {
      RatInterval root =
          nth_root_bracket(s[kp] * s[kp], 2ul * static_cast<unsigned long>(kp), bits);
      RatInterval weight = sqrt_bracket(make_frac(l, kp), bits);
      den = max_iv(den, mul_pos(weight, root));
    }
    if (sgn(den.lo) > 0) {
      out.value = div_pos(num, den);
      return out;
    }
    if (bits > 65536) throw std::runtime_error("objective_bracket: bracket failed to separate");
  }
}

SearchRecord local_search(const RootTuple<double>& start, const SearchConfig& cfg) {
  validate(cfg);
  if (start.n() != cfg.n) throw std::domain_error("local_search: start size != cfg.n");

  std::vector<double> y = start.roots;
  long evals = 0;
  bool anomaly_seen = false;

  auto eval = [&](const std::vector<double>& v) {
    ++evals;
    double val = objective(RootTuple<double>(v), cfg.k, cfg.l);
    if (std::isinf(val)) {
      // sentinel: exact recheck decides whether this is a genuine anomaly;
      // either way the value is not propagated as a maximum
      ObjectiveBracket ob = objective_bracket(snap_roots(RootTuple<double>(v)), cfg.k, cfg.l);
      if (ob.anomaly) anomaly_seen = true;
      return -1.0;
    }
    return val;
  };

  double best = eval(y);
  double step = cfg.step_init;
  const double step_min = 0x1.0p-20;

  while (evals < cfg.budget && step >= step_min) {
    bool improved = false;
    for (int i = 0; i < cfg.n && evals < cfg.budget; ++i) {
      for (double dir : {1.0, -1.0}) {
        if (evals >= cfg.budget) break;
        std::vector<double> cand = y;
        cand[static_cast<size_t>(i)] += dir * step;
        double val = eval(cand);
        if (val > best) {
          y = std::move(cand);
          best = val;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= cfg.step_decay;
  }

  SearchRecord rec;
  rec.roots = y;
  rec.ratio = objective(RootTuple<double>(y), cfg.k, cfg.l);  // recomputed verbatim
  rec.k = cfg.k;
  rec.l = cfg.l;
  rec.n = cfg.n;
  rec.seed = cfg.seed;
  rec.iterations = evals;
  rec.anomaly = anomaly_seen;
  return rec;
}

RootTuple<double> pm_one_start(int n) {
  if (n < 2 || n % 2) throw std::domain_error("pm_one_start: n must be even");
  std::vector<double> r(static_cast<size_t>(n), 1.0);
  for (int i = n / 2; i < n; ++i) r[static_cast<size_t>(i)] = -1.0;
  return RootTuple<double>(std::move(r));
}

namespace {

RootTuple<double> make_start(const SearchConfig& cfg, int restart_index) {
  const bool even = cfg.n % 2 == 0;
  if (restart_index == 0) {
    if (even) return pm_one_start(cfg.n);
    return RootTuple<double>(std::vector<double>(static_cast<size_t>(cfg.n), 1.0));
  }
  if (restart_index == 1 && even)
    return RootTuple<double>(std::vector<double>(static_cast<size_t>(cfg.n), 1.0));
  SplitMix64 rng = substream(cfg.seed, static_cast<uint64_t>(restart_index));
  std::vector<double> r(static_cast<size_t>(cfg.n));
  for (double& x : r) x = draw(rng, cfg.dist);
  return RootTuple<double>(std::move(r));
}

void verify_exact(SearchRecord& rec) {
  RootTuple<Rational> y = snap_roots(RootTuple<double>(rec.roots));
  ObjectiveBracket ob = objective_bracket(y, rec.k, rec.l);
  rec.exact_verified = true;
  if (ob.anomaly) {
    rec.anomaly = true;
    return;
  }
  rec.ratio_exact_lo = format_rational(ob.value.lo);
  rec.ratio_exact_hi = format_rational(ob.value.hi);
  // certified check against the main inequality
  MeansTuple<Rational> s = elementary_means(y);
  if (!check_main(s, rec.k, rec.l).holds) rec.anomaly = true;
}

}  // namespace

SearchResult multi_start_search(const SearchConfig& cfg) {
  validate(cfg);
  SearchResult out;
  out.records.reserve(static_cast<size_t>(cfg.restarts));
  for (int rix = 0; rix < cfg.restarts; ++rix) {
    SearchRecord rec = local_search(make_start(cfg, rix), cfg);
    rec.timestamp = rix;  // logical time: emission order
    out.records.push_back(std::move(rec));
  }

  double best = 0;
  for (const SearchRecord& rec : out.records)
    if (std::isfinite(rec.ratio)) best = std::max(best, rec.ratio);
  for (SearchRecord& rec : out.records)
    if (std::isfinite(rec.ratio) && rec.ratio >= 0.99 * best) verify_exact(rec);

  size_t best_ix = 0;
  for (size_t i = 1; i < out.records.size(); ++i)
    if (std::isfinite(out.records[i].ratio) && out.records[i].ratio > out.records[best_ix].ratio)
      best_ix = i;
  out.best = out.records[best_ix];
  return out;
}

Rational kev_ratio_pow2k(int n, int k) {
  if (n < 2 || n % 2) throw std::domain_error("kev_ratio_pow2k: n must be even");
  if (k < 2 || k % 2 || k > n) throw std::domain_error("kev_ratio_pow2k: k must be even, <= n");
  Rational sk = make_frac(binomial(n / 2, k / 2), binomial(n, k));
  return sk * sk * pow_rat(make_frac(n, k), static_cast<unsigned long>(k));
}

std::vector<KevRow> kev_table(const std::vector<int>& n_list) {
  std::vector<KevRow> rows;
  for (int n : n_list) {
    if (n < 2 || n % 2) throw std::domain_error("kev_table: n must be even");
    for (int k = 2; k <= n; k += 2) {
      RatInterval b = nth_root_bracket(kev_ratio_pow2k(n, k), 2ul * static_cast<unsigned long>(k), 64);
      rows.push_back({n, k, to_double(b.mid())});
    }
  }
  return rows;
}

const Rational& kev_bracket_lo() {
  static const Rational lo = make_frac(63, 100);
  return lo;
}

const Rational& kev_bracket_hi() {
  static const Rational hi = Rational(1);
  return hi;
}

}  // namespace symm
