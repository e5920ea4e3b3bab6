#include "overlaydyn/dynamics.hpp"

#include <algorithm>

namespace overlaydyn {
namespace {

DocSet citersOf(const CitationGraph& graph, const DocSet& source, const SliceSpec& spec) {
    DocSet citing = graph.citingSet(source);
    if (spec.excludeSelfCitingOverlap)
        for (const auto& id : source) citing.erase(id);
    return citing;
}

}  // namespace

std::string_view to_string(SliceMode mode) {
    switch (mode) {
        case SliceMode::TypeACross: return "typeA-cross";
        case SliceMode::TypeACumulative: return "typeA-cumulative";
        case SliceMode::TypeB: return "typeB";
        case SliceMode::TypeC: return "typeC";
    }
    return "unknown";
}

std::optional<SliceMode> parseSliceMode(std::string_view token) {
    if (token == "typeA-cross") return SliceMode::TypeACross;
    if (token == "typeA-cumulative") return SliceMode::TypeACumulative;
    if (token == "typeB") return SliceMode::TypeB;
    if (token == "typeC") return SliceMode::TypeC;
    return std::nullopt;
}

SeriesRow compareSets(const DocumentStore& store, const DocSet& source, const DocSet& target,
                      const Basemap& basemap, Counting counting, int year) {
    SeriesRow row;
    row.year = year;
    row.nSource = static_cast<long>(source.size());
    row.nTarget = static_cast<long>(target.size());
    const OverlayProfile src = buildOverlay(store, source, basemap, counting);
    const OverlayProfile tgt = buildOverlay(store, target, basemap, counting);
    row.odSource = overlayDiversity(src, basemap);
    row.odTarget = overlayDiversity(tgt, basemap);
    row.mod = meanOverlayDistance(src, tgt, basemap);
    row.odr = overlayDiversityRatio(src, tgt, basemap);
    return row;
}

DiversitySeries typeACrossSeries(const DocumentStore& store, const CitationGraph& graph,
                                 const Basemap& basemap, const SliceSpec& spec) {
    DiversitySeries series{spec, {}};
    for (int year = spec.yearMin; year <= spec.yearMax; ++year) {
        const DocSet source = cohort(store, year);
        const DocSet target = citersOf(graph, source, spec);
        series.rows.push_back(compareSets(store, source, target, basemap, spec.counting, year));
    }
    return series;
}

DiversitySeries typeACumulativeSeries(const DocumentStore& store, const CitationGraph& graph,
                                      const Basemap& basemap, const SliceSpec& spec) {
    DiversitySeries series{spec, {}};
    for (int year = spec.yearMin; year <= spec.yearMax; ++year) {
        const DocSet source = cumulativeCohort(store, year);
        const DocSet target = citersOf(graph, source, spec);
        series.rows.push_back(compareSets(store, source, target, basemap, spec.counting, year));
    }
    return series;
}

DiversitySeries typeBSeries(const DocumentStore& store, const Basemap& basemap, const SliceSpec& spec) {
    DiversitySeries series{spec, {}};
    for (int year = spec.yearMin + 1; year <= spec.yearMax; ++year) {
        const DocSet source = cohort(store, year - 1);
        const DocSet target = cohort(store, year);
        series.rows.push_back(compareSets(store, source, target, basemap, spec.counting, year));
    }
    return series;
}

DiversitySeries typeCSeries(const DocumentStore& store, const CitationGraph& graph,
                            const Basemap& basemap, const SliceSpec& spec) {
    DiversitySeries series{spec, {}};
    for (int year = spec.yearMin + 1; year <= spec.yearMax; ++year) {
        const DocSet source = citersOf(graph, cohort(store, year - 1), spec);
        const DocSet target = citersOf(graph, cohort(store, year), spec);
        series.rows.push_back(compareSets(store, source, target, basemap, spec.counting, year));
    }
    return series;
}

DiversitySeries computeSeries(const DocumentStore& store, const CitationGraph& graph,
                              const Basemap& basemap, const SliceSpec& spec) {
    switch (spec.mode) {
        case SliceMode::TypeACross: return typeACrossSeries(store, graph, basemap, spec);
        case SliceMode::TypeACumulative: return typeACumulativeSeries(store, graph, basemap, spec);
        case SliceMode::TypeB: return typeBSeries(store, basemap, spec);
        case SliceMode::TypeC: return typeCSeries(store, graph, basemap, spec);
    }
    throw Error("unknown slice mode");
}

}  // namespace overlaydyn
