#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "overlaydyn/basemap.hpp"
#include "overlaydyn/corpus.hpp"

namespace overlaydyn {

/// How a multi-category document contributes to the profile.
enum class Counting {
    Fractional,  // each doc spreads unit weight evenly over its categories
    Whole,       // each doc contributes 1 to each of its categories
};

/// A document set projected onto the basemap: a normalized weight
/// distribution over categories. Stored dense in basemap order; categories
/// with zero weight carry exactly 0 and do not count towards the support.
class OverlayProfile {
public:
    OverlayProfile() = default;
    OverlayProfile(Eigen::VectorXd weights, long docCount, long skippedNoCategory);

    const Eigen::VectorXd& weights() const { return weights_; }
    double weightAt(Index i) const { return weights_(i); }

    /// Number of categories with strictly positive weight (the n of 1/(n*m)).
    int supportSize() const { return supportSize_; }
    long docCount() const { return docCount_; }
    long skippedNoCategory() const { return skippedNoCategory_; }

    bool empty() const { return supportSize_ == 0; }

    /// (category index, weight) pairs in basemap order, positive weights only.
    std::vector<std::pair<Index, double>> support() const;

private:
    Eigen::VectorXd weights_;
    int supportSize_ = 0;
    long docCount_ = 0;
    long skippedNoCategory_ = 0;
};

/// Project `docs` onto `basemap`. Documents without categories are skipped
/// and tallied on the profile. Throws UnknownCategory listing every
/// category missing from the basemap.
OverlayProfile buildOverlay(const DocumentStore& store, const DocSet& docs, const Basemap& basemap,
                            Counting counting);

}  // namespace overlaydyn
