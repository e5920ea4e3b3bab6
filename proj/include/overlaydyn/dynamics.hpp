#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "overlaydyn/corpus.hpp"
#include "overlaydyn/diversity.hpp"
#include "overlaydyn/overlay.hpp"

namespace overlaydyn {

enum class SliceMode {
    TypeACross,       // per-year cohort vs its citing set
    TypeACumulative,  // cumulative cohort vs its citing set
    TypeB,            // consecutive source cohorts
    TypeC,            // consecutive citing cohorts
};

std::string_view to_string(SliceMode mode);
std::optional<SliceMode> parseSliceMode(std::string_view token);

struct SliceSpec {
    SliceMode mode = SliceMode::TypeACross;
    int yearMin = 0;
    int yearMax = 0;
    Counting counting = Counting::Fractional;
    // Sensitivity option: drop source docs from the citing side.
    bool excludeSelfCitingOverlap = false;
};

struct SeriesRow {
    int year = 0;
    long nSource = 0;
    long nTarget = 0;
    MeasureValue odSource{MeasureKind::OD, MeasureStatus::UndefinedEmptyProfile};
    MeasureValue odTarget{MeasureKind::OD, MeasureStatus::UndefinedEmptyProfile};
    MeasureValue mod{MeasureKind::MOD, MeasureStatus::UndefinedEmptyProfile};
    MeasureValue odr{MeasureKind::ODR, MeasureStatus::UndefinedEmptyProfile};
};

struct DiversitySeries {
    SliceSpec spec;
    std::vector<SeriesRow> rows;  // years strictly ascending
};

/// Measures between one source/target document pair; the building block all
/// series share.
SeriesRow compareSets(const DocumentStore& store, const DocSet& source, const DocSet& target,
                      const Basemap& basemap, Counting counting, int year);

/// Cross-sectional type A: one row per year, cohort(Y) against its citers.
DiversitySeries typeACrossSeries(const DocumentStore& store, const CitationGraph& graph,
                                 const Basemap& basemap, const SliceSpec& spec);

/// Cumulative type A: cumulative_cohort(Y) against the citers of the aggregate.
DiversitySeries typeACumulativeSeries(const DocumentStore& store, const CitationGraph& graph,
                                      const Basemap& basemap, const SliceSpec& spec);

/// Type B: consecutive source cohorts (Y-1, Y); no citation graph involved.
DiversitySeries typeBSeries(const DocumentStore& store, const Basemap& basemap, const SliceSpec& spec);

/// Type C: consecutive citing cohorts of (Y-1, Y).
DiversitySeries typeCSeries(const DocumentStore& store, const CitationGraph& graph,
                            const Basemap& basemap, const SliceSpec& spec);

/// Dispatch on spec.mode.
DiversitySeries computeSeries(const DocumentStore& store, const CitationGraph& graph,
                              const Basemap& basemap, const SliceSpec& spec);

}  // namespace overlaydyn
