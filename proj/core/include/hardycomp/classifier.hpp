#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hardycomp/contact.hpp"
#include "hardycomp/gliding_hump.hpp"
#include "hardycomp/hardy.hpp"
#include "hardycomp/lacunary.hpp"
#include "hardycomp/nevanlinna.hpp"
#include "hardycomp/symbol.hpp"

namespace hardycomp {

enum class Verdict { compact, fixes_lp_only, fixes_l2, inconclusive };

std::string verdict_name(Verdict v);
int verdict_exit_code(Verdict v);  // 0 / 1 / 2 / 3

struct ClassifyConfig {
  double p = 2.0;
  std::uint64_t seed = 0;
  int threads = 1;
  double grid_scale = 1.0;  // multiplies every node count (stability checks)

  int shapiro_rays = 128;
  int shapiro_m_lo = 4;
  int shapiro_m_hi = 14;

  int compactness_rays = 64;
  int compactness_m_lo = 1;
  int compactness_m_hi = 12;
  int base_nodes = QuadratureGrid::kDefaultNodes;

  int hump_k = 6;
  double hump_delta = 0.1;
  int hump_rungs = 500;
  int hump_trials = 256;

  int lacunary_k = 6;
  double lacunary_q = 2.0;
  int lacunary_trials = 256;

  int pullback_arcs = 64;
  int pullback_nodes = 1 << 16;
};

struct TrichotomyReport {
  std::string symbol_text;
  double p = 2.0;
  Verdict verdict = Verdict::inconclusive;
  bool constant_symbol = false;
  bool p2_collapse_note = false;  // at p = 2 the middle alternative is vacuous

  std::optional<ShapiroTrend> shapiro;
  std::optional<CompactnessTrend> compactness;
  std::optional<ContactProfile> contact;
  std::optional<HumpCertificate> hump;
  std::optional<LacunaryCertificate> lacunary;
  std::optional<PullbackReport> pullback;

  std::string note;
  double elapsed_seconds = 0.0;
  int base_nodes = 0;
  std::uint64_t seed = 0;
};

/// Pure verdict table from the gathered evidence; the trends and the contact
/// verdict are never overridden here.
Verdict decide_verdict(Trend shapiro, Trend compactness, ContactVerdict contact,
                       double p);

TrichotomyReport classify(const Symbol& phi, const ClassifyConfig& cfg);

}  // namespace hardycomp
