#include "overlaydyn/overlay.hpp"

#include <set>

namespace overlaydyn {

OverlayProfile::OverlayProfile(Eigen::VectorXd weights, long docCount, long skippedNoCategory)
    : weights_(std::move(weights)), docCount_(docCount), skippedNoCategory_(skippedNoCategory) {
    supportSize_ = static_cast<int>((weights_.array() > 0.0).count());
}

std::vector<std::pair<Index, double>> OverlayProfile::support() const {
    std::vector<std::pair<Index, double>> out;
    out.reserve(static_cast<std::size_t>(supportSize_));
    for (Index i = 0; i < weights_.size(); ++i)
        if (weights_(i) > 0.0) out.emplace_back(i, weights_(i));
    return out;
}

OverlayProfile buildOverlay(const DocumentStore& store, const DocSet& docs, const Basemap& basemap,
                            Counting counting) {
    // Fail fast on categories outside the basemap, listing all offenders.
    std::set<std::string> unknown;
    for (const auto& id : docs)
        for (const auto& cat : store.get(id).categories)
            if (!basemap.indexOf(cat)) unknown.insert(cat);
    if (!unknown.empty()) {
        std::string msg = "categories not in basemap:";
        for (const auto& c : unknown) msg += " " + c;
        throw UnknownCategory(msg);
    }

    Eigen::VectorXd mass = Eigen::VectorXd::Zero(basemap.size());
    long contributing = 0;
    long skipped = 0;
    for (const auto& id : docs) {
        const auto& cats = store.get(id).categories;
        if (cats.empty()) {
            ++skipped;
            continue;
        }
        ++contributing;
        const double share = counting == Counting::Fractional ? 1.0 / static_cast<double>(cats.size()) : 1.0;
        for (const auto& cat : cats) mass(*basemap.indexOf(cat)) += share;
    }

    const double total = mass.sum();
    if (total > 0.0) mass /= total;
    return OverlayProfile(std::move(mass), contributing, skipped);
}

}  // namespace overlaydyn
