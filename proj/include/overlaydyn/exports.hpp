#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "overlaydyn/basemap.hpp"
#include "overlaydyn/corpus.hpp"
#include "overlaydyn/dynamics.hpp"
#include "overlaydyn/overlay.hpp"

namespace overlaydyn {

/// Shortest decimal string that round-trips the double (std::to_chars).
std::string formatNumber(double value);

/// Header `year,n_source,n_target,od_source,od_target,mod,odr,status`.
/// Undefined measures become empty cells; the status column names the
/// reason per measure, or "ok".
void writeSeriesCsv(std::ostream& out, const DiversitySeries& series);
void writeSeriesCsv(const std::filesystem::path& path, const DiversitySeries& series);

/// Self-contained 960x480 line chart of MOD (and ODR where defined) with an
/// ODR = 1 reference line; gaps where rows are undefined.
void writeSeriesSvg(std::ostream& out, const DiversitySeries& series);
void writeSeriesSvg(const std::filesystem::path& path, const DiversitySeries& series);

/// `category,weight` sorted by descending weight, ties by category id.
void writeProfileCsv(std::ostream& out, const OverlayProfile& profile, const Basemap& basemap);
void writeProfileCsv(const std::filesystem::path& path, const OverlayProfile& profile, const Basemap& basemap);

/// Re-read a profile CSV as (category, weight) pairs.
std::vector<std::pair<std::string, double>> readProfileCsv(const std::filesystem::path& path);

/// GraphML overlay export: nodes are in-profile categories (attribute
/// `weight`); edges carry `distance` for in-profile pairs with d < 1.
void writeProfileGraphml(std::ostream& out, const OverlayProfile& profile, const Basemap& basemap);
void writeProfileGraphml(const std::filesystem::path& path, const OverlayProfile& profile,
                         const Basemap& basemap);

/// Expansion report CSV: the six iteration columns plus a `total` footer row;
/// the threshold schedule is echoed as a leading comment line.
void writeExpansionReportCsv(std::ostream& out, const ExpansionReport& report,
                             const std::vector<int>& thresholds);
void writeExpansionReportCsv(const std::filesystem::path& path, const ExpansionReport& report,
                             const std::vector<int>& thresholds);

/// JSONL corpus writer, records sorted by id.
void writeCorpusJsonl(const std::filesystem::path& path, const DocumentStore& store, const DocSet& subset);

}  // namespace overlaydyn
