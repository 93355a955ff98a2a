#pragma once

#include <string>
#include <vector>

#include "hardycomp/classifier.hpp"
#include "hardycomp/contact.hpp"
#include "hardycomp/gliding_hump.hpp"
#include "hardycomp/lacunary.hpp"

// Serialization layer: versioned JSON artifacts (schema "hardycomp/<kind>/v1")
// and RFC 4180 CSV emission for plotting. Artifacts embed grid provenance so
// every reported number is auditable; a "timestamp" field is the only
// non-deterministic member.

namespace hardycomp::io {

std::string shapiro_json(const ShapiroTrend& t, bool timestamp = true);
std::string compactness_json(const CompactnessTrend& t, bool timestamp = true);
std::string contact_json(const ContactProfile& c, bool timestamp = true);
std::string pullback_json(const PullbackReport& r, bool timestamp = true);
std::string hump_json(const HumpCertificate& c, bool timestamp = true);
std::string lacunary_json(const LacunaryCertificate& c, bool timestamp = true);
std::string paley_json(const PaleyStats& s, const std::vector<int>& powers, double p,
                       bool timestamp = true);
std::string report_json(const TrichotomyReport& r, bool timestamp = true);
std::string error_json(const std::string& kind, const std::string& message);

HumpCertificate hump_from_json(const std::string& text);
LacunaryCertificate lacunary_from_json(const std::string& text);

// CSV rows:  compactness (ray_angle, abs_a, score); shapiro (theta, abs_w,
// ratio); contact curve (tau, measure); contact profile (theta, abs_phi);
// pullback (arc_midpoint, density).
std::string compactness_csv(const CompactnessTrend& t);
std::string shapiro_csv(const ShapiroTrend& t);
std::string contact_curve_csv(const ContactProfile& c);
std::string contact_profile_csv(const ContactProfile& c);
std::string pullback_csv(const PullbackReport& r);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hardycomp::io
