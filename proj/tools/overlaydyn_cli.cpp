// Command-line pipeline: corpus expansion, diversity time series, overlay exports.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "overlaydyn/corpus.hpp"
#include "overlaydyn/dynamics.hpp"
#include "overlaydyn/exports.hpp"

namespace fs = std::filesystem;
using namespace overlaydyn;

namespace {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel logLevelFromEnv() {
    const char* env = std::getenv("OVERLAYDYN_LOG");
    if (!env) return LogLevel::Warn;
    const std::string v = env;
    if (v == "error") return LogLevel::Error;
    if (v == "warn") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

void log(LogLevel level, const std::string& msg) {
    static const LogLevel active = logLevelFromEnv();
    if (level > active) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

struct CommonOptions {
    std::string basemapPath;
    std::string basemapMode = "similarity";
    std::string corpusPath;
    std::string outDir = ".";
    std::string counting = "fractional";
};

void addCommonFlags(CLI::App* cmd, CommonOptions& opt, bool needsBasemap) {
    if (needsBasemap) {
        cmd->add_option("--basemap", opt.basemapPath, "basemap CSV (cat_a,cat_b,value)")->required();
        cmd->add_option("--basemap-mode", opt.basemapMode, "value column semantics")
            ->check(CLI::IsMember({"distance", "similarity"}));
        cmd->add_option("--counting", opt.counting, "multi-category counting scheme")
            ->check(CLI::IsMember({"fractional", "whole"}));
    }
    cmd->add_option("--corpus", opt.corpusPath, "corpus JSONL file")->required();
    cmd->add_option("--out", opt.outDir, "output directory (created if absent)");
}

Basemap loadBasemap(const CommonOptions& opt) {
    const auto mode = opt.basemapMode == "distance" ? BasemapMode::Distance : BasemapMode::Similarity;
    return Basemap::load(opt.basemapPath, mode);
}

Counting parseCounting(const CommonOptions& opt) {
    return opt.counting == "whole" ? Counting::Whole : Counting::Fractional;
}

std::vector<int> parseThresholds(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            const int v = std::stoi(tok);
            if (v <= 0) throw Error("threshold must be positive: " + tok);
            out.push_back(v);
        } catch (const std::invalid_argument&) {
            throw Error("bad threshold token: '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw Error("empty threshold list");
    return out;
}

// "YMIN:YMAX" -> pair; either side empty means "use corpus bound".
std::pair<std::optional<int>, std::optional<int>> parseYears(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error("--years expects YMIN:YMAX, got '" + s + "'");
    std::pair<std::optional<int>, std::optional<int>> out;
    const std::string lo = s.substr(0, colon), hi = s.substr(colon + 1);
    try {
        if (!lo.empty()) out.first = std::stoi(lo);
        if (!hi.empty()) out.second = std::stoi(hi);
    } catch (const std::exception&) {
        throw Error("--years expects integers, got '" + s + "'");
    }
    return out;
}

fs::path ensureOutDir(const CommonOptions& opt) {
    fs::path dir(opt.outDir);
    fs::create_directories(dir);
    return dir;
}

int cmdExpand(const CommonOptions& opt, const std::string& seedPath, const std::string& thresholdSpec,
              int maxGenerations) {
    const DocumentStore store = DocumentStore::fromJsonl(opt.corpusPath);

    DocSet seed;
    std::ifstream in(seedPath);
    if (!in) throw Error("cannot open seed file: " + seedPath);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) seed.insert(line);
    }
    if (seed.empty()) throw Error("empty seed file: " + seedPath);

    const auto thresholds = parseThresholds(thresholdSpec);
    const auto result = snowballExpand(store, seed, thresholds, maxGenerations);
    log(LogLevel::Info, "expansion converged with corpus of " + std::to_string(result.corpus.size()));

    const fs::path dir = ensureOutDir(opt);
    writeExpansionReportCsv(dir / "expansion_report.csv", result.report, thresholds);
    writeCorpusJsonl(dir / "corpus_expanded.jsonl", store, result.corpus);
    return 0;
}

int cmdSeries(const CommonOptions& opt, const std::string& modeToken, const std::string& yearSpec,
              bool excludeOverlap) {
    const Basemap basemap = loadBasemap(opt);
    const DocumentStore store = DocumentStore::fromJsonl(opt.corpusPath);
    const CitationGraph graph = CitationGraph::build(store);
    if (graph.danglingReferenceCount() > 0)
        log(LogLevel::Warn,
            std::to_string(graph.danglingReferenceCount()) + " references point outside the corpus");

    const auto mode = parseSliceMode(modeToken);
    if (!mode) throw Error("unknown series mode: " + modeToken);

    SliceSpec spec;
    spec.mode = *mode;
    spec.counting = parseCounting(opt);
    spec.excludeSelfCitingOverlap = excludeOverlap;

    DiversitySeries series{spec, {}};
    if (store.size() == 0) {
        log(LogLevel::Warn, "empty corpus: emitting header-only series");
    } else {
        spec.yearMin = store.minYear();
        spec.yearMax = store.maxYear();
        if (!yearSpec.empty()) {
            auto [lo, hi] = parseYears(yearSpec);
            if (lo) spec.yearMin = *lo;
            if (hi) spec.yearMax = *hi;
            if (spec.yearMin > spec.yearMax)
                throw Error("--years range is empty: " + yearSpec);
            // Clip the request to the corpus coverage.
            if (spec.yearMin < store.minYear()) {
                log(LogLevel::Warn, "clipping year range start to corpus minimum " +
                                        std::to_string(store.minYear()));
                spec.yearMin = store.minYear();
            }
            if (spec.yearMax > store.maxYear()) {
                log(LogLevel::Warn, "clipping year range end to corpus maximum " +
                                        std::to_string(store.maxYear()));
                spec.yearMax = store.maxYear();
            }
        }
        series = computeSeries(store, graph, basemap, spec);
    }

    std::string stem = "series_" + std::string(to_string(spec.mode));
    std::replace(stem.begin(), stem.end(), '-', '_');
    const fs::path dir = ensureOutDir(opt);
    writeSeriesCsv(dir / (stem + ".csv"), series);
    writeSeriesSvg(dir / (stem + ".svg"), series);
    return 0;
}

int cmdOverlayExport(const CommonOptions& opt, int year, const std::string& side, bool cumulative) {
    const Basemap basemap = loadBasemap(opt);
    const DocumentStore store = DocumentStore::fromJsonl(opt.corpusPath);
    const CitationGraph graph = CitationGraph::build(store);

    DocSet cited = cumulative ? cumulativeCohort(store, year) : cohort(store, year);
    DocSet docs = side == "citing" ? graph.citingSet(cited) : cited;

    const OverlayProfile profile = buildOverlay(store, docs, basemap, parseCounting(opt));

    std::string stem = "overlay_" + std::to_string(year) + "_" + side;
    if (cumulative) stem += "_cumulative";
    const fs::path dir = ensureOutDir(opt);
    if (profile.empty()) {
        log(LogLevel::Warn, "empty profile for year " + std::to_string(year) + " side " + side);
        std::ofstream marker(dir / (stem + ".empty"), std::ios::binary);
        marker << "empty profile: no category-bearing documents in this slice\n";
        return 0;
    }
    writeProfileCsv(dir / (stem + ".csv"), profile, basemap);
    writeProfileGraphml(dir / (stem + ".graphml"), profile, basemap);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlay-map knowledge diffusion toolkit"};
    app.require_subcommand(1);

    CommonOptions expandOpt, seriesOpt, exportOpt;

    auto* expand = app.add_subcommand("expand", "snowball corpus expansion with the iteration report");
    addCommonFlags(expand, expandOpt, false);
    std::string seedPath, thresholdSpec = "3,10";
    int maxGenerations = 10;
    expand->add_option("--seed", seedPath, "file of seed doc ids, one per line")->required();
    expand->add_option("--thresholds", thresholdSpec, "per-generation frequency thresholds, e.g. 3,10");
    expand->add_option("--max-generations", maxGenerations, "iteration cap")->check(CLI::PositiveNumber);

    auto* series = app.add_subcommand("series", "diversity time series (CSV + SVG chart)");
    addCommonFlags(series, seriesOpt, true);
    std::string modeToken, yearSpec;
    bool excludeOverlap = false;
    series->add_option("--mode", modeToken, "typeA-cross | typeA-cumulative | typeB | typeC")->required();
    series->add_option("--years", yearSpec, "YMIN:YMAX (defaults to corpus coverage)");
    series->add_flag("--exclude-self-citing-overlap", excludeOverlap,
                     "drop source docs from citing sets (sensitivity analysis)");

    auto* overlayExport = app.add_subcommand("overlay-export", "profile CSV + GraphML for one slice");
    addCommonFlags(overlayExport, exportOpt, true);
    int year = 0;
    std::string side = "cited";
    bool cumulative = false;
    overlayExport->add_option("--year", year, "slice year")->required();
    overlayExport->add_option("--side", side, "cited | citing")->check(CLI::IsMember({"cited", "citing"}));
    overlayExport->add_flag("--cumulative", cumulative, "aggregate all years up to --year");

    try {
        app.parse(argc, argv);
        if (expand->parsed()) return cmdExpand(expandOpt, seedPath, thresholdSpec, maxGenerations);
        if (series->parsed()) return cmdSeries(seriesOpt, modeToken, yearSpec, excludeOverlap);
        if (overlayExport->parsed()) return cmdOverlayExport(exportOpt, year, side, cumulative);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
