#pragma once

#include <string_view>

#include "overlaydyn/basemap.hpp"
#include "overlaydyn/overlay.hpp"

namespace overlaydyn {

enum class MeasureKind { OD, MOD, ODR };

enum class MeasureStatus {
    Ok,
    UndefinedZeroSource,    // ODR with a zero-diversity source map
    UndefinedEmptyProfile,  // any measure over an empty profile
};

struct MeasureValue {
    MeasureKind kind;
    MeasureStatus status;
    double value = 0.0;  // meaningful only when status == Ok

    bool ok() const { return status == MeasureStatus::Ok; }
};

std::string_view to_string(MeasureStatus status);

/// Stirling index of one profile: sum over all ordered support pairs of
/// p_i * p_j * d_ij (the zero diagonal makes this twice the unordered sum).
MeasureValue overlayDiversity(const OverlayProfile& profile, const Basemap& basemap);

/// Average weighted distance between a source and a target map:
/// (1/(n*m)) * sum over source support x target support of p_i * p_j * d_ij.
/// Same-named categories on both sides contribute d = 0 cells to the sum
/// and still count in n*m.
MeasureValue meanOverlayDistance(const OverlayProfile& source, const OverlayProfile& target,
                                 const Basemap& basemap);

/// OD(target) / OD(source). A zero-diversity source yields
/// UndefinedZeroSource, never a numeric value.
MeasureValue overlayDiversityRatio(const OverlayProfile& source, const OverlayProfile& target,
                                   const Basemap& basemap);

}  // namespace overlaydyn
