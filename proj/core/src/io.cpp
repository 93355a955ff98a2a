#include "hardycomp/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hardycomp::io {

using Json = nlohmann::ordered_json;

namespace {

std::string now_iso8601() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

void stamp(Json& j, bool timestamp) {
  if (timestamp) j["timestamp"] = now_iso8601();
}

Json complex_to_json(const Complex& c) {
  return Json::array({c.real(), c.imag()});
}

Complex complex_from_json(const Json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json trend_common(const std::vector<int>& rungs, const std::vector<double>& rung_values,
                  Trend verdict) {
  Json j;
  j["verdict"] = trend_name(verdict);
  j["rungs"] = rungs;
  j["rung_maxima"] = rung_values;
  return j;
}

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ",";
    line += cells[i];
  }
  return line + "\r\n";
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string shapiro_json(const ShapiroTrend& t, bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/shapiro/v1";
  stamp(j, timestamp);
  j.update(trend_common(t.rungs, t.rung_max, t.verdict));
  j["limit_guess"] = t.limit_guess;
  j["heuristic"] = t.heuristic;
  j["rays"] = t.ray_angles.size();
  return j.dump(2);
}

std::string compactness_json(const CompactnessTrend& t, bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/compactness/v1";
  stamp(j, timestamp);
  j["p"] = t.p;
  j["base_nodes"] = t.base_nodes;
  j["verdict"] = trend_name(t.verdict);
  j["rungs"] = t.rungs;
  j["max_scores"] = t.rung_max;
  j["per_ray_max"] = t.per_ray_max;
  return j.dump(2);
}

std::string contact_json(const ContactProfile& c, bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/contact/v1";
  stamp(j, timestamp);
  j["n_nodes"] = c.n_nodes;
  j["tau"] = c.tau;
  j["measure"] = c.measure;
  j["m0"] = c.m0;
  j["m0_stderr"] = c.m0_stderr;
  j["fit_alpha"] = c.fit_alpha;
  j["fit_c"] = c.fit_c;
  j["verdict"] = contact_verdict_name(c.verdict);
  return j.dump(2);
}

std::string pullback_json(const PullbackReport& r, bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/pullback/v1";
  stamp(j, timestamp);
  j["n_arcs"] = r.n_arcs;
  j["n_nodes"] = r.n_nodes;
  j["recentered"] = r.recentered;
  j["tau_min"] = r.tau_min;
  j["m_e_hat"] = r.m_e_hat;
  j["delta"] = r.delta;
  j["nu"] = r.nu;
  j["density"] = r.density;
  j["stderr_nu"] = r.stderr_nu;
  std::vector<int> f;
  for (bool b : r.in_f) f.push_back(b ? 1 : 0);
  j["in_f"] = f;
  j["status"] = r.status;
  return j.dump(2);
}

std::string hump_json(const HumpCertificate& c, bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/hump-certificate/v1";
  stamp(j, timestamp);
  j["symbol"] = c.symbol_text;
  j["ray"] = c.ray;
  j["p"] = c.p;
  j["delta"] = c.delta;
  j["d"] = c.d;
  j["target_k"] = c.target_k;
  j["complete"] = c.complete;
  j["failure_stage"] = c.failure_stage;
  j["failure_reason"] = c.failure_reason;
  Json grid;
  grid["anchors"] = c.grid.anchors;
  grid["min_scale"] = c.grid.min_scale;
  grid["log_spacing"] = c.grid.log_spacing;
  grid["floor_offset"] = c.grid.floor_offset;
  j["grid"] = grid;
  Json stages = Json::array();
  for (const HumpStage& st : c.stages) {
    Json s;
    s["rung"] = st.rung;
    s["gap"] = st.gap;
    s["eps"] = st.eps;
    s["prior_mass"] = st.prior_mass;
    s["outside_mass"] = st.outside_mass;
    s["inside_mass"] = st.inside_mass;
    s["small_bound"] = st.small_bound;
    s["large_bound"] = st.large_bound;
    stages.push_back(std::move(s));
  }
  j["stages"] = stages;
  if (c.frame) {
    Json f;
    f["trials"] = c.frame->trials;
    f["seed"] = c.frame->seed;
    f["c1_hat"] = c.frame->c1_hat;
    f["c2_hat"] = c.frame->c2_hat;
    j["frame"] = f;
  }
  return j.dump(2);
}

HumpCertificate hump_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("schema").get<std::string>() != "hardycomp/hump-certificate/v1") {
    throw DomainError("not a hump certificate");
  }
  HumpCertificate c;
  c.symbol_text = j.at("symbol").get<std::string>();
  c.ray = j.at("ray").get<double>();
  c.p = j.at("p").get<double>();
  c.delta = j.at("delta").get<double>();
  c.d = j.at("d").get<double>();
  c.target_k = j.at("target_k").get<int>();
  c.complete = j.at("complete").get<bool>();
  c.failure_stage = j.at("failure_stage").get<int>();
  c.failure_reason = j.at("failure_reason").get<std::string>();
  const Json& g = j.at("grid");
  c.grid.anchors = g.at("anchors").get<std::vector<double>>();
  c.grid.min_scale = g.at("min_scale").get<double>();
  c.grid.log_spacing = g.at("log_spacing").get<double>();
  c.grid.floor_offset = g.at("floor_offset").get<double>();
  for (const Json& s : j.at("stages")) {
    HumpStage st;
    st.rung = s.at("rung").get<int>();
    st.gap = s.at("gap").get<double>();
    st.eps = s.at("eps").get<double>();
    st.prior_mass = s.at("prior_mass").get<std::vector<double>>();
    st.outside_mass = s.at("outside_mass").get<double>();
    st.inside_mass = s.at("inside_mass").get<double>();
    st.small_bound = s.at("small_bound").get<double>();
    st.large_bound = s.at("large_bound").get<double>();
    c.stages.push_back(std::move(st));
  }
  if (j.contains("frame")) {
    FrameStats f;
    f.trials = j.at("frame").at("trials").get<int>();
    f.seed = j.at("frame").at("seed").get<std::uint64_t>();
    f.c1_hat = j.at("frame").at("c1_hat").get<double>();
    f.c2_hat = j.at("frame").at("c2_hat").get<double>();
    c.frame = f;
  }
  return c;
}

std::string lacunary_json(const LacunaryCertificate& c, bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/lacunary-certificate/v1";
  stamp(j, timestamp);
  j["symbol"] = c.symbol_text;
  j["powers"] = c.powers;
  j["q_min"] = c.q_min;
  j["m_e"] = c.m_e;
  j["grid_nodes"] = c.grid_nodes;
  Json gram = Json::array();
  for (const auto& row : c.gram) {
    Json r = Json::array();
    for (const Complex& v : row) r.push_back(complex_to_json(v));
    gram.push_back(std::move(r));
  }
  j["gram"] = gram;
  Json b;
  b["trials"] = c.bound_checks.trials;
  b["seed"] = c.bound_checks.seed;
  b["min_quotient"] = c.bound_checks.min_quotient;
  b["max_quotient"] = c.bound_checks.max_quotient;
  j["bound_checks"] = b;
  return j.dump(2);
}

LacunaryCertificate lacunary_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("schema").get<std::string>() != "hardycomp/lacunary-certificate/v1") {
    throw DomainError("not a lacunary certificate");
  }
  LacunaryCertificate c;
  c.symbol_text = j.at("symbol").get<std::string>();
  c.powers = j.at("powers").get<std::vector<int>>();
  c.q_min = j.at("q_min").get<double>();
  c.m_e = j.at("m_e").get<double>();
  c.grid_nodes = j.at("grid_nodes").get<int>();
  for (const Json& row : j.at("gram")) {
    std::vector<Complex> r;
    for (const Json& v : row) r.push_back(complex_from_json(v));
    c.gram.push_back(std::move(r));
  }
  const Json& b = j.at("bound_checks");
  c.bound_checks.trials = b.at("trials").get<int>();
  c.bound_checks.seed = b.at("seed").get<std::uint64_t>();
  c.bound_checks.min_quotient = b.at("min_quotient").get<double>();
  c.bound_checks.max_quotient = b.at("max_quotient").get<double>();
  return c;
}

std::string paley_json(const PaleyStats& s, const std::vector<int>& powers, double p,
                       bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/paley/v1";
  stamp(j, timestamp);
  j["powers"] = powers;
  j["p"] = p;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["grid_nodes"] = s.grid_nodes;
  j["ratio_min"] = s.ratio_min;
  j["ratio_max"] = s.ratio_max;
  j["max_p4_mismatch"] = s.max_p4_mismatch;
  return j.dump(2);
}

std::string report_json(const TrichotomyReport& r, bool timestamp) {
  Json j;
  j["schema"] = "hardycomp/trichotomy-report/v1";
  stamp(j, timestamp);
  j["symbol"] = r.symbol_text;
  j["p"] = r.p;
  j["verdict"] = verdict_name(r.verdict);
  j["exit_code"] = verdict_exit_code(r.verdict);
  j["constant_symbol"] = r.constant_symbol;
  j["p2_collapse_note"] = r.p2_collapse_note;
  j["seed"] = r.seed;
  j["base_nodes"] = r.base_nodes;
  j["note"] = r.note;
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (r.shapiro) j["shapiro"] = Json::parse(shapiro_json(*r.shapiro, false));
  if (r.compactness) j["compactness"] = Json::parse(compactness_json(*r.compactness, false));
  if (r.contact) j["contact"] = Json::parse(contact_json(*r.contact, false));
  if (r.hump) j["hump"] = Json::parse(hump_json(*r.hump, false));
  if (r.lacunary) j["lacunary"] = Json::parse(lacunary_json(*r.lacunary, false));
  if (r.pullback) j["pullback"] = Json::parse(pullback_json(*r.pullback, false));
  return j.dump(2);
}

std::string error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["schema"] = "hardycomp/error/v1";
  j["kind"] = kind;
  j["message"] = message;
  return j.dump(2);
}

std::string compactness_csv(const CompactnessTrend& t) {
  std::string out = csv_join({"ray_angle", "abs_a", "score"});
  for (std::size_t i = 0; i < t.ray_angles.size(); ++i) {
    for (std::size_t k = 0; k < t.rungs.size(); ++k) {
      const double abs_a = 1.0 - std::ldexp(1.0, -t.rungs[k]);
      out += csv_join({num(t.ray_angles[i]), num(abs_a), num(t.scores[i][k])});
    }
  }
  return out;
}

std::string shapiro_csv(const ShapiroTrend& t) {
  std::string out = csv_join({"theta", "abs_w", "ratio"});
  for (std::size_t i = 0; i < t.ray_angles.size(); ++i) {
    for (std::size_t k = 0; k < t.rungs.size(); ++k) {
      const double abs_w = 1.0 - std::ldexp(1.0, -t.rungs[k]);
      out += csv_join({num(t.ray_angles[i]), num(abs_w), num(t.ratios[i][k])});
    }
  }
  return out;
}

std::string contact_curve_csv(const ContactProfile& c) {
  std::string out = csv_join({"tau", "measure"});
  for (std::size_t i = 0; i < c.tau.size(); ++i) {
    out += csv_join({num(c.tau[i]), num(c.measure[i])});
  }
  return out;
}

std::string contact_profile_csv(const ContactProfile& c) {
  std::string out = csv_join({"theta", "abs_phi"});
  for (std::size_t i = 0; i < c.theta.size(); ++i) {
    out += csv_join({num(c.theta[i]), num(c.modulus[i])});
  }
  return out;
}

std::string pullback_csv(const PullbackReport& r) {
  std::string out = csv_join({"arc_midpoint", "density"});
  for (int k = 0; k < r.n_arcs; ++k) {
    const double mid = kTwoPi * (k + 0.5) / r.n_arcs;
    out += csv_join({num(mid), num(r.density[k])});
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace hardycomp::io
