// Shared synthetic fixtures: random instances for the oracle-equivalence
// suites and the two-phase "saturation" corpus.
#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "overlaydyn/basemap.hpp"
#include "overlaydyn/corpus.hpp"
#include "overlaydyn/overlay.hpp"
#include "oracle.hpp"

namespace fixtures {

inline std::vector<std::string> categoryNames(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("SC" + std::to_string(i));
    return out;
}

struct RandomInstance {
    overlaydyn::Basemap basemap;
    overlaydyn::OverlayProfile profile;
    oracle::Profile naive;
    oracle::Dist naiveDist;
};

// Random symmetric distances and a random simplex profile over support <= maxSupport.
inline RandomInstance randomInstance(std::mt19937& rng, int maxSupport = 10) {
    std::uniform_int_distribution<int> supportDist(1, maxSupport);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const int n = supportDist(rng);
    const auto names = categoryNames(n);

    std::vector<std::tuple<std::string, std::string, double>> rows;
    oracle::Dist naiveDist;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = unit(rng);
            rows.emplace_back(names[i], names[j], d);
            naiveDist[{names[i], names[j]}] = d;
        }
    }
    auto basemap = overlaydyn::Basemap::fromRows(rows, overlaydyn::BasemapMode::Distance);
    if (n == 1)  // fromRows never saw the lone category
        basemap = overlaydyn::Basemap::fromRows({{names[0], names[0], 0.0}}, overlaydyn::BasemapMode::Distance);

    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w(i) = unit(rng) + 1e-6;
    w /= w.sum();

    oracle::Profile naive;
    for (int i = 0; i < n; ++i) naive[basemap.categories()[static_cast<overlaydyn::Index>(i)]] = w(i);

    return {std::move(basemap), overlaydyn::OverlayProfile(w, n, 0), std::move(naive),
            std::move(naiveDist)};
}

// Two-phase corpus: fields A,B only until 2005; distant C,D burst in over
// 2006-2007, then persist with a smaller annual share; one broad E doc per
// year keeps the citing side slightly wider than the cited side.
inline overlaydyn::Basemap saturationBasemap() {
    using Row = std::tuple<std::string, std::string, double>;
    std::vector<Row> rows = {
        {"A", "B", 0.2}, {"C", "D", 0.3}, {"A", "C", 1.0}, {"A", "D", 1.0},
        {"B", "C", 1.0}, {"B", "D", 1.0}, {"A", "E", 0.6}, {"B", "E", 0.6},
        {"C", "E", 0.6}, {"D", "E", 0.6},
    };
    return overlaydyn::Basemap::fromRows(rows, overlaydyn::BasemapMode::Distance, "saturation-fixture");
}

constexpr int kSaturationYearMin = 2000;
constexpr int kSaturationInflux = 2006;   // first year C and D appear
constexpr int kSaturationYearMax = 2011;

inline overlaydyn::DocumentStore saturationStore() {
    using Cats = std::vector<std::string>;
    auto composition = [](int year) -> std::vector<Cats> {
        if (year < kSaturationInflux)  // phase 1: close fields only
            return {{"A"}, {"A"}, {"B"}, {"A", "B"}};
        if (year == kSaturationInflux)  // burst: distant fields dominate one year
            return {{"C"}, {"C"}, {"C"}, {"C"}, {"D"}, {"D"}, {"D"},
                    {"C", "D"}, {"C", "D"}, {"C", "D"}, {"A"}, {"B"}};
        // stable phase: distant fields persist at a lower annual share
        return {{"A"}, {"A"}, {"B"}, {"A", "B"}, {"C", "D"}};
    };

    overlaydyn::DocumentStore store;
    std::vector<std::string> previousYear;
    for (int year = kSaturationYearMin; year <= kSaturationYearMax; ++year) {
        auto slots = composition(year);
        if (year > kSaturationYearMin) slots.push_back({"E"});  // broadens the citing side

        std::vector<std::string> thisYear;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            overlaydyn::DocumentRecord rec;
            rec.id = "y" + std::to_string(year) + "_" + std::to_string(i);
            rec.year = year;
            rec.categories = slots[i];
            if (!previousYear.empty()) {
                rec.references.push_back(previousYear[i % previousYear.size()]);
                rec.references.push_back(previousYear[(i + 1) % previousYear.size()]);
            }
            thisYear.push_back(rec.id);
            store.insert(std::move(rec));
        }
        previousYear = std::move(thisYear);
    }
    return store;
}

}  // namespace fixtures
