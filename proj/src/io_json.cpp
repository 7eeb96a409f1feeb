#include "symm/io_json.hpp"

#include <cstdio>
#include <sstream>

#include "symm/version.hpp"

namespace symm {

namespace {

Json rationals_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& q : v) a.push_back(format_rational(q));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& a) {
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const auto& e : a) {
    if (e.is_string())
      v.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number())
      v.push_back(snap_to_dyadic(e.get<double>()));
    else
      throw std::invalid_argument("expected rational string or number");
  }
  return v;
}

}  // namespace

Json to_json(const MeansTuple<Rational>& s) {
  return Json{{"n", s.n()}, {"means", rationals_to_json(s.means)}, {"mode", "exact"}};
}

Json to_json(const MeansTuple<double>& s) {
  return Json{{"n", s.n()}, {"means", s.means}, {"mode", "float"}};
}

Json to_json(const RootTuple<Rational>& y) {
  return Json{{"n", y.n()}, {"roots", rationals_to_json(y.roots)}, {"mode", "exact"}};
}

Json to_json(const RootTuple<double>& y) {
  return Json{{"n", y.n()}, {"roots", y.roots}, {"mode", "float"}};
}

Json to_json(const AttainVerdict& v) {
  return Json{{"attainable", v.attainable},
              {"real_root_count", v.real_root_count},
              {"degree_after_squarefree", v.degree_after_squarefree}};
}

Json to_json(const IneqReport& rep) {
  Json j{{"name", rep.name}, {"holds", rep.holds}, {"worst_index", rep.worst_index}};
  if (rep.mode == Mode::exact) {
    j["slack"] = format_rational(rep.slack);
    j["slack_power"] = rep.slack_power;
  } else {
    j["slack"] = rep.slack_value;
  }
  j["constant"] = format_rational(rep.constant_used);
  j["mode"] = mode_name(rep.mode);
  if (rep.status != "checked") j["status"] = rep.status;
  return j;
}

Json to_json(const SearchRecord& rec) {
  Json j{{"type", "record"}, {"roots", rec.roots}, {"ratio", rec.ratio},
         {"k", rec.k},       {"l", rec.l},         {"n", rec.n},
         {"seed", rec.seed}, {"iterations", rec.iterations}, {"timestamp", rec.timestamp},
         {"anomaly", rec.anomaly}};
  if (rec.exact_verified) {
    j["exact_verified"] = true;
    j["ratio_exact_lo"] = rec.ratio_exact_lo;
    j["ratio_exact_hi"] = rec.ratio_exact_hi;
  }
  return j;
}

Json to_json(const SearchConfig& cfg) {
  return Json{{"n", cfg.n},
              {"k", cfg.k},
              {"l", cfg.l},
              {"budget", cfg.budget},
              {"restarts", cfg.restarts},
              {"seed", cfg.seed},
              {"dist", dist_name(cfg.dist)},
              {"step_init", cfg.step_init},
              {"step_decay", cfg.step_decay}};
}

MeansTuple<Rational> means_from_json(const Json& j) {
  return MeansTuple<Rational>(rationals_from_json(j.at("means")));
}

RootTuple<Rational> roots_from_json(const Json& j) {
  return RootTuple<Rational>(rationals_from_json(j.at("roots")));
}

std::string search_records_jsonl(const SearchConfig& cfg, const std::vector<SearchRecord>& records,
                                 const ConfigEcho& extra) {
  Json head{{"type", "config"}, {"version", kVersion}, {"config", to_json(cfg)}};
  for (const auto& [key, value] : extra)
    if (!head["config"].contains(key)) head["config"][key] = value;
  std::string out = head.dump();
  out.push_back('\n');
  for (const SearchRecord& rec : records) {
    out += to_json(rec).dump();
    out.push_back('\n');
  }
  return out;
}

std::string kev_table_csv(const std::vector<KevRow>& rows, const ConfigEcho& extra) {
  std::ostringstream os;
  os << "# version=" << kVersion;
  for (const auto& [key, value] : extra) os << ' ' << key << '=' << value;
  os << "\nn,k,normalized_ratio\n";
  char buf[64];
  for (const KevRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%.12g", row.normalized_ratio);
    os << row.n << ',' << row.k << ',' << buf << '\n';
  }
  return os.str();
}

}  // namespace symm
