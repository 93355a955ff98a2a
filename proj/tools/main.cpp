// Command-line interface: classify, shapiro, compactness, contact, hump,
// lacunary, paley, pullback. JSON artifacts via --out, CSV via --csv.
// classify exits 0/1/2/3 for the three alternatives and "inconclusive";
// usage errors exit 64, domain errors 65, numeric failures 70.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hardycomp/classifier.hpp"
#include "hardycomp/io.hpp"

using namespace hardycomp;

namespace {

struct Common {
  bool error_json = false;
  bool no_timestamp = false;
  int threads = 1;
};

int thread_default() {
  if (const char* env = std::getenv("HARDYCOMP_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

void emit(const std::string& path, const std::string& content) {
  if (!path.empty()) io::write_file(path, content);
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_double_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composition operator toolkit for Hardy spaces"};
  app.require_subcommand(1);

  Common common;
  common.threads = thread_default();
  app.add_flag("--error-json", common.error_json, "emit structured JSON on errors");
  app.add_flag("--no-timestamp", common.no_timestamp, "omit timestamps from artifacts");
  app.add_option("--threads", common.threads, "worker threads (default HARDYCOMP_THREADS or 1)");

  // ---- classify ----
  auto* c_cmd = app.add_subcommand("classify", "full trichotomy classification");
  std::string c_symbol, c_out;
  double c_p = 2.0, c_grid_scale = 1.0;
  std::uint64_t c_seed = 0;
  c_cmd->add_option("--symbol", c_symbol, "symbol expression")->required();
  c_cmd->add_option("--p", c_p, "Hardy exponent")->required();
  c_cmd->add_option("--seed", c_seed, "rng seed for certificate trials")->required();
  c_cmd->add_option("--grid-scale", c_grid_scale, "node count multiplier");
  c_cmd->add_option("--out", c_out, "write the JSON report here");

  // ---- shapiro ----
  auto* s_cmd = app.add_subcommand("shapiro", "counting-function ratio trend");
  std::string s_symbol, s_out, s_csv;
  int s_rays = 128, s_mlo = 4, s_mhi = 14;
  s_cmd->add_option("--symbol", s_symbol)->required();
  s_cmd->add_option("--rays", s_rays);
  s_cmd->add_option("--m-lo", s_mlo);
  s_cmd->add_option("--m-hi", s_mhi);
  s_cmd->add_option("--out", s_out);
  s_cmd->add_option("--csv", s_csv);

  // ---- compactness ----
  auto* k_cmd = app.add_subcommand("compactness", "test-function score trend");
  std::string k_symbol, k_out, k_csv;
  double k_p = 2.0;
  int k_rays = 64, k_mlo = 1, k_mhi = 12, k_nodes = QuadratureGrid::kDefaultNodes;
  k_cmd->add_option("--symbol", k_symbol)->required();
  k_cmd->add_option("--p", k_p)->required();
  k_cmd->add_option("--rays", k_rays);
  k_cmd->add_option("--m-lo", k_mlo);
  k_cmd->add_option("--m-hi", k_mhi);
  k_cmd->add_option("--nodes", k_nodes);
  k_cmd->add_option("--out", k_out);
  k_cmd->add_option("--csv", k_csv);

  // ---- contact ----
  auto* t_cmd = app.add_subcommand("contact", "contact-set measure curve");
  std::string t_symbol, t_out, t_csv, t_profile_csv, t_tau;
  int t_nodes = QuadratureGrid::kDefaultNodes;
  t_cmd->add_option("--symbol", t_symbol)->required();
  t_cmd->add_option("--tau", t_tau, "comma list, strictly decreasing");
  t_cmd->add_option("--nodes", t_nodes);
  t_cmd->add_option("--out", t_out);
  t_cmd->add_option("--csv", t_csv, "measure curve CSV");
  t_cmd->add_option("--profile-csv", t_profile_csv, "(theta, |phi|) CSV");

  // ---- hump ----
  auto* h_cmd = app.add_subcommand("hump", "gliding-hump certificate");
  std::string h_symbol, h_out, h_verify;
  double h_p = 1.0, h_delta = 0.1, h_ray = 0.0;
  int h_k = 6, h_rungs = 500, h_trials = 1000;
  std::uint64_t h_seed = 0;
  auto* h_sym_opt = h_cmd->add_option("--symbol", h_symbol);
  auto* h_p_opt = h_cmd->add_option("--p", h_p);
  h_cmd->add_option("--delta", h_delta);
  h_cmd->add_option("--K", h_k);
  auto* h_ray_opt = h_cmd->add_option("--ray", h_ray, "test-point ray (default: best scoring)");
  h_cmd->add_option("--rungs", h_rungs);
  h_cmd->add_option("--trials", h_trials);
  auto* h_seed_opt = h_cmd->add_option("--seed", h_seed);
  h_cmd->add_option("--out", h_out);
  h_cmd->add_option("--verify", h_verify, "replay a stored certificate");

  // ---- lacunary ----
  auto* l_cmd = app.add_subcommand("lacunary", "near-orthogonal power certificate");
  std::string l_symbol, l_out, l_verify;
  double l_q = 2.0, l_me = 0.0;
  int l_k = 6, l_trials = 1000, l_nodes = QuadratureGrid::kDefaultNodes;
  std::uint64_t l_seed = 0;
  auto* l_sym_opt = l_cmd->add_option("--symbol", l_symbol);
  l_cmd->add_option("--K", l_k);
  l_cmd->add_option("--q", l_q);
  l_cmd->add_option("--m-e", l_me, "contact measure (default: estimated)");
  l_cmd->add_option("--trials", l_trials);
  auto* l_seed_opt = l_cmd->add_option("--seed", l_seed);
  l_cmd->add_option("--nodes", l_nodes);
  l_cmd->add_option("--out", l_out);
  l_cmd->add_option("--verify", l_verify, "replay a stored certificate");

  // ---- paley ----
  auto* p_cmd = app.add_subcommand("paley", "lacunary monomial norm equivalence");
  std::string p_powers, p_out;
  double p_p = 4.0;
  int p_trials = 1000;
  std::uint64_t p_seed = 0;
  p_cmd->add_option("--powers", p_powers, "comma list of exponents")->required();
  p_cmd->add_option("--p", p_p)->required();
  p_cmd->add_option("--trials", p_trials);
  p_cmd->add_option("--seed", p_seed)->required();
  p_cmd->add_option("--out", p_out);

  // ---- pullback ----
  auto* b_cmd = app.add_subcommand("pullback", "boundary pushforward density");
  std::string b_symbol, b_out, b_csv;
  int b_arcs = 64, b_nodes = 1 << 16;
  double b_delta = 0.0;
  b_cmd->add_option("--symbol", b_symbol)->required();
  b_cmd->add_option("--arcs", b_arcs);
  b_cmd->add_option("--nodes", b_nodes);
  b_cmd->add_option("--delta", b_delta, "density threshold (default: half max)");
  b_cmd->add_option("--out", b_out);
  b_cmd->add_option("--csv", b_csv);

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const bool ts = !common.no_timestamp;

  try {
    if (c_cmd->parsed()) {
      ClassifyConfig cfg;
      cfg.p = c_p;
      cfg.seed = c_seed;
      cfg.threads = common.threads;
      cfg.grid_scale = c_grid_scale;
      const TrichotomyReport rep = classify(Symbol::parse(c_symbol), cfg);
      std::cout << "verdict: " << verdict_name(rep.verdict)
                << " (symbol " << rep.symbol_text << ", p=" << rep.p << ")\n";
      emit(c_out, io::report_json(rep, ts));
      return verdict_exit_code(rep.verdict);
    }

    if (s_cmd->parsed()) {
      const ShapiroTrend t =
          shapiro_trend(Symbol::parse(s_symbol), s_rays, s_mlo, s_mhi, common.threads);
      std::cout << "shapiro trend: " << trend_name(t.verdict)
                << ", limit guess " << t.limit_guess << " (heuristic)\n";
      emit(s_out, io::shapiro_json(t, ts));
      emit(s_csv, io::shapiro_csv(t));
      return 0;
    }

    if (k_cmd->parsed()) {
      const CompactnessTrend t =
          compactness_score(Symbol::parse(k_symbol), k_p, k_rays, k_mlo, k_mhi,
                            QuadratureGrid::uniform(k_nodes), common.threads);
      std::cout << "compactness trend: " << trend_name(t.verdict)
                << ", final max score " << t.rung_max.back() << "\n";
      emit(k_out, io::compactness_json(t, ts));
      emit(k_csv, io::compactness_csv(t));
      return 0;
    }

    if (t_cmd->parsed()) {
      const auto ladder = t_tau.empty() ? default_tau_ladder() : parse_double_list(t_tau);
      const ContactProfile c =
          contact_measure(Symbol::parse(t_symbol), ladder, QuadratureGrid::uniform(t_nodes));
      std::cout << "contact measure: m0=" << c.m0 << " ("
                << contact_verdict_name(c.verdict) << ")\n";
      emit(t_out, io::contact_json(c, ts));
      emit(t_csv, io::contact_curve_csv(c));
      emit(t_profile_csv, io::contact_profile_csv(c));
      return 0;
    }

    if (h_cmd->parsed()) {
      if (!h_verify.empty()) {
        const HumpCertificate cert = io::hump_from_json(io::read_file(h_verify));
        const Symbol phi = Symbol::parse(cert.symbol_text);
        const ReplayReport rep = replay_certificate(phi, cert);
        std::cout << "replay: " << (rep.ok ? "ok" : ("FAILED: " + rep.detail))
                  << ", max deviation " << rep.max_deviation << "\n";
        return rep.ok ? 0 : 1;
      }
      if (!*h_sym_opt || !*h_p_opt || !*h_seed_opt) {
        std::cerr << "hump requires --symbol, --p and --seed (or --verify)\n";
        return 64;
      }
      const Symbol phi = Symbol::parse(h_symbol);
      double ray = h_ray;
      if (!*h_ray_opt) {
        ray = compactness_score(phi, h_p, 64, 1, 12, QuadratureGrid::uniform(),
                                common.threads)
                  .best_ray();
      }
      const HumpCertificate cert = run_hump_pipeline(
          phi, h_p, ray, h_delta, h_k, h_rungs, h_trials, h_seed, common.threads);
      if (cert.complete) {
        std::cout << "hump certificate complete: K=" << cert.stages.size()
                  << ", d=" << cert.d;
        if (cert.frame) std::cout << ", c1_hat=" << cert.frame->c1_hat;
        std::cout << "\n";
      } else {
        std::cout << "hump certificate PARTIAL at stage " << cert.failure_stage
                  << ": " << cert.failure_reason << "\n";
      }
      emit(h_out, io::hump_json(cert, ts));
      return cert.complete ? 0 : 1;
    }

    if (l_cmd->parsed()) {
      if (!l_verify.empty()) {
        const LacunaryCertificate cert = io::lacunary_from_json(io::read_file(l_verify));
        const Symbol phi = Symbol::parse(cert.symbol_text);
        const GramMatrix fresh =
            gram_matrix(phi, cert.powers, QuadratureGrid::uniform(l_nodes));
        double max_dev = 0.0;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
          for (std::size_t b = 0; b < fresh.size(); ++b) {
            max_dev = std::max(max_dev, std::abs(fresh[a][b] - cert.gram[a][b]));
          }
        }
        const bool ok = max_dev <= 1e-10;
        std::cout << "replay: " << (ok ? "ok" : "FAILED")
                  << ", max gram deviation " << max_dev << "\n";
        return ok ? 0 : 1;
      }
      if (!*l_sym_opt || !*l_seed_opt) {
        std::cerr << "lacunary requires --symbol and --seed (or --verify)\n";
        return 64;
      }
      const Symbol phi = Symbol::parse(l_symbol);
      const QuadratureGrid grid = QuadratureGrid::uniform(l_nodes);
      double m_e = l_me;
      if (m_e <= 0.0) {
        const ContactProfile c = contact_measure(phi, default_tau_ladder(), grid);
        if (c.verdict != ContactVerdict::positive) {
          throw DomainError("contact set has measure zero; no lacunary certificate");
        }
        m_e = c.m0;
      }
      LacunaryCertificate cert = select_lacunary_powers(phi, m_e, l_k, l_q, grid);
      cert.bound_checks = l2_lower_bound_verify(phi, cert, l_trials, l_seed, common.threads);
      std::cout << "lacunary certificate: K=" << cert.powers.size()
                << ", min quotient " << cert.bound_checks.min_quotient
                << " (target " << 0.5 * cert.m_e << ")\n";
      emit(l_out, io::lacunary_json(cert, ts));
      return 0;
    }

    if (p_cmd->parsed()) {
      const std::vector<int> powers = parse_int_list(p_powers);
      const PaleyStats st = paley_equivalence_check(powers, p_p, p_trials, p_seed,
                                                    QuadratureGrid::uniform(),
                                                    common.threads);
      std::cout << "paley ratios in [" << st.ratio_min << ", " << st.ratio_max << "]\n";
      emit(p_out, io::paley_json(st, powers, p_p, ts));
      return 0;
    }

    if (b_cmd->parsed()) {
      const PullbackReport rep = pullback_density(
          Symbol::parse(b_symbol), b_arcs, QuadratureGrid::uniform(b_nodes), b_delta);
      int f_count = 0;
      for (bool b : rep.in_f) f_count += b ? 1 : 0;
      std::cout << "pullback: m_e_hat=" << rep.m_e_hat << ", |F|=" << f_count
                << " arcs, delta=" << rep.delta;
      if (!rep.status.empty()) std::cout << " (" << rep.status << ")";
      std::cout << "\n";
      emit(b_out, io::pullback_json(rep, ts));
      emit(b_csv, io::pullback_csv(rep));
      return 0;
    }
  } catch (const ParseError& e) {
    if (common.error_json) std::cout << io::error_json("parse", e.what()) << "\n";
    std::cerr << "parse error: " << e.what() << "\n";
    return 65;
  } catch (const DomainError& e) {
    if (common.error_json) std::cout << io::error_json("domain", e.what()) << "\n";
    std::cerr << "domain error: " << e.what() << "\n";
    return 65;
  } catch (const NumericError& e) {
    if (common.error_json) std::cout << io::error_json("numeric", e.what()) << "\n";
    std::cerr << "numeric error: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    if (common.error_json) std::cout << io::error_json("internal", e.what()) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return 64;
}
