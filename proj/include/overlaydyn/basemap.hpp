#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "overlaydyn/errors.hpp"

namespace overlaydyn {

using Index = Eigen::Index;

/// How the value column of a basemap file is interpreted.
enum class BasemapMode {
    Distance,    // value stored as d_ij directly
    Similarity,  // d_ij = 1 - value
};

/// Field categories and their pairwise cognitive distances.
///
/// The distance matrix is dense and symmetric with zero diagonal and
/// entries in [0,1]; pairs absent from the input file sit at the maximal
/// distance 1. Immutable after construction, so concurrent reads are safe.
class Basemap {
public:
    static Basemap load(const std::filesystem::path& path, BasemapMode mode);

    /// Build from in-memory (cat_a, cat_b, value) rows; same contract as load().
    static Basemap fromRows(const std::vector<std::tuple<std::string, std::string, double>>& rows,
                            BasemapMode mode, std::string source = "<memory>");

    Index size() const { return static_cast<Index>(categories_.size()); }
    const std::vector<std::string>& categories() const { return categories_; }
    const Eigen::MatrixXd& distances() const { return distances_; }
    const std::string& source() const { return source_; }

    std::optional<Index> indexOf(std::string_view category) const;

    /// Index lookup that throws UnknownCategory, naming the offender.
    Index requireIndex(std::string_view category) const;

    double distance(std::string_view a, std::string_view b) const;
    double distanceAt(Index i, Index j) const { return distances_(i, j); }

    /// Largest off-diagonal distance (0 for maps with fewer than two categories).
    double maxDistance() const;

private:
    Basemap() = default;

    std::vector<std::string> categories_;
    std::unordered_map<std::string, Index> index_;
    Eigen::MatrixXd distances_;
    std::string source_;
};

}  // namespace overlaydyn
