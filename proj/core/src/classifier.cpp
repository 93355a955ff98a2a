#include "hardycomp/classifier.hpp"

#include <chrono>
#include <cmath>

namespace hardycomp {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::compact: return "compact";
    case Verdict::fixes_lp_only: return "fixes-lp-only";
    case Verdict::fixes_l2: return "fixes-l2";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::compact: return 0;
    case Verdict::fixes_lp_only: return 1;
    case Verdict::fixes_l2: return 2;
    case Verdict::inconclusive: return 3;
  }
  return 3;
}

Verdict decide_verdict(Trend shapiro, Trend compactness, ContactVerdict contact,
                       double p) {
  if (shapiro == Trend::vanishing && compactness == Trend::vanishing) {
    return Verdict::compact;
  }
  if (shapiro == Trend::non_vanishing && compactness == Trend::non_vanishing) {
    if (p == 2.0) return Verdict::fixes_l2;  // the middle case is vacuous at p = 2
    switch (contact) {
      case ContactVerdict::zero: return Verdict::fixes_lp_only;
      case ContactVerdict::positive: return Verdict::fixes_l2;
      case ContactVerdict::inconclusive: return Verdict::inconclusive;
    }
  }
  // The two criteria disagree (or one is undecided): refuse to guess.
  return Verdict::inconclusive;
}

TrichotomyReport classify(const Symbol& phi, const ClassifyConfig& cfg) {
  if (cfg.p < 1.0) throw DomainError("classification requires p >= 1");
  const auto t0 = std::chrono::steady_clock::now();

  TrichotomyReport rep;
  rep.symbol_text = phi.text();
  rep.p = cfg.p;
  rep.seed = cfg.seed;
  rep.p2_collapse_note = (cfg.p == 2.0);

  const int nodes = std::max(256, static_cast<int>(cfg.base_nodes * cfg.grid_scale));
  rep.base_nodes = nodes;
  const QuadratureGrid grid = QuadratureGrid::uniform(nodes);

  if (phi.is_constant()) {
    rep.constant_symbol = true;
    rep.verdict = Verdict::compact;
    rep.note = "constant symbol: rank-one composition, compact";
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  rep.shapiro = shapiro_trend(phi, cfg.shapiro_rays, cfg.shapiro_m_lo,
                              cfg.shapiro_m_hi, cfg.threads);
  rep.compactness = compactness_score(phi, cfg.p, cfg.compactness_rays,
                                      cfg.compactness_m_lo, cfg.compactness_m_hi,
                                      grid, cfg.threads);

  ContactVerdict contact_verdict = ContactVerdict::inconclusive;
  const bool non_compact = rep.shapiro->verdict == Trend::non_vanishing &&
                           rep.compactness->verdict == Trend::non_vanishing;
  if (non_compact) {
    const auto ladder = default_tau_ladder();
    rep.contact = contact_measure(phi, ladder, grid);
    contact_verdict = rep.contact->verdict;
  }

  rep.verdict = decide_verdict(rep.shapiro->verdict, rep.compactness->verdict,
                               contact_verdict, cfg.p);

  if (rep.shapiro->verdict != rep.compactness->verdict) {
    rep.note = "the two compactness criteria disagree at this resolution";
  }

  // Certificates for the non-compact verdicts.
  if (rep.verdict == Verdict::fixes_lp_only || rep.verdict == Verdict::fixes_l2) {
    const double ray = rep.compactness->best_ray();
    try {
      rep.hump = run_hump_pipeline(phi, cfg.p, ray, cfg.hump_delta, cfg.hump_k,
                                   cfg.hump_rungs, cfg.hump_trials, cfg.seed,
                                   cfg.threads);
    } catch (const Error& e) {
      rep.note += std::string(rep.note.empty() ? "" : "; ") +
                  "hump certificate unavailable: " + e.what();
    }
  }
  if (rep.verdict == Verdict::fixes_l2 && contact_verdict == ContactVerdict::positive) {
    try {
      auto cert = select_lacunary_powers(phi, rep.contact->m0, cfg.lacunary_k,
                                         cfg.lacunary_q, grid);
      cert.bound_checks =
          l2_lower_bound_verify(phi, cert, cfg.lacunary_trials, cfg.seed, cfg.threads);
      rep.lacunary = std::move(cert);
    } catch (const Error& e) {
      rep.note += std::string(rep.note.empty() ? "" : "; ") +
                  "lacunary certificate unavailable: " + e.what();
    }
    try {
      const QuadratureGrid pull_grid = QuadratureGrid::uniform(
          std::max(256, static_cast<int>(cfg.pullback_nodes * cfg.grid_scale)));
      rep.pullback = pullback_density(phi, cfg.pullback_arcs, pull_grid, 0.0);
    } catch (const Error& e) {
      rep.note += std::string(rep.note.empty() ? "" : "; ") +
                  "pullback report unavailable: " + e.what();
    }
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hardycomp
