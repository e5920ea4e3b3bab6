#include "overlaydyn/diversity.hpp"

namespace overlaydyn {
namespace {

void requireCompatible(const OverlayProfile& p, const Basemap& basemap) {
    if (p.weights().size() != basemap.size())
        throw UnknownCategory("profile was built against a different basemap (dimension " +
                              std::to_string(p.weights().size()) + " vs " + std::to_string(basemap.size()) + ")");
}

}  // namespace

std::string_view to_string(MeasureStatus status) {
    switch (status) {
        case MeasureStatus::Ok: return "ok";
        case MeasureStatus::UndefinedZeroSource: return "undefined_zero_source";
        case MeasureStatus::UndefinedEmptyProfile: return "undefined_empty_profile";
    }
    return "unknown";
}

MeasureValue overlayDiversity(const OverlayProfile& profile, const Basemap& basemap) {
    if (profile.empty()) return {MeasureKind::OD, MeasureStatus::UndefinedEmptyProfile};
    requireCompatible(profile, basemap);
    const auto& p = profile.weights();
    const double od = p.dot(basemap.distances() * p);
    return {MeasureKind::OD, MeasureStatus::Ok, od};
}

MeasureValue meanOverlayDistance(const OverlayProfile& source, const OverlayProfile& target,
                                 const Basemap& basemap) {
    if (source.empty() || target.empty()) return {MeasureKind::MOD, MeasureStatus::UndefinedEmptyProfile};
    requireCompatible(source, basemap);
    requireCompatible(target, basemap);
    const double raw = source.weights().dot(basemap.distances() * target.weights());
    const double cells = static_cast<double>(source.supportSize()) * static_cast<double>(target.supportSize());
    return {MeasureKind::MOD, MeasureStatus::Ok, raw / cells};
}

MeasureValue overlayDiversityRatio(const OverlayProfile& source, const OverlayProfile& target,
                                   const Basemap& basemap) {
    if (source.empty() || target.empty()) return {MeasureKind::ODR, MeasureStatus::UndefinedEmptyProfile};
    const MeasureValue odSource = overlayDiversity(source, basemap);
    const MeasureValue odTarget = overlayDiversity(target, basemap);
    if (odSource.value == 0.0) return {MeasureKind::ODR, MeasureStatus::UndefinedZeroSource};
    return {MeasureKind::ODR, MeasureStatus::Ok, odTarget.value / odSource.value};
}

}  // namespace overlaydyn
