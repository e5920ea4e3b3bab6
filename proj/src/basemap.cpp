#include "overlaydyn/basemap.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace overlaydyn {
namespace {

std::vector<std::string> splitCsvLine(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parseValue(const std::string& token, std::size_t lineNo) {
    const std::string t = trim(token);
    double v = 0.0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size())
        throw MalformedRow("basemap line " + std::to_string(lineNo) + ": non-numeric value '" + t + "'");
    return v;
}

}  // namespace

Basemap Basemap::fromRows(const std::vector<std::tuple<std::string, std::string, double>>& rows,
                          BasemapMode mode, std::string source) {
    Basemap b;
    b.source_ = std::move(source);

    // First pass: collect categories in order of first appearance,
    // detect duplicate / conflicting pair declarations.
    std::map<std::pair<Index, Index>, double> pairValue;
    auto intern = [&b](const std::string& name) -> Index {
        auto it = b.index_.find(name);
        if (it != b.index_.end()) return it->second;
        const Index idx = static_cast<Index>(b.categories_.size());
        b.categories_.push_back(name);
        b.index_.emplace(name, idx);
        return idx;
    };

    std::size_t row = 0;
    for (const auto& [catA, catB, value] : rows) {
        ++row;
        if (catA.empty() || catB.empty())
            throw MalformedRow("basemap row " + std::to_string(row) + ": empty category name");
        if (value < 0.0 || value > 1.0)
            throw ValueOutOfRange("basemap row " + std::to_string(row) + ": value " + std::to_string(value) +
                                  " outside [0,1] for pair (" + catA + "," + catB + ")");
        const Index ia = intern(catA);
        const Index ib = intern(catB);
        const auto key = std::minmax(ia, ib);
        auto [it, fresh] = pairValue.emplace(std::make_pair(key.first, key.second), value);
        if (!fresh) {
            if (it->second != value)
                throw AsymmetricInput("basemap row " + std::to_string(row) + ": pair (" + catA + "," + catB +
                                      ") conflicts with an earlier declaration (" + std::to_string(it->second) +
                                      " vs " + std::to_string(value) + ")");
            throw DuplicateCategoryDeclaration("basemap row " + std::to_string(row) + ": pair (" + catA + "," +
                                               catB + ") declared twice");
        }
    }

    const Index n = b.size();
    // Unlisted pairs are maximally distant; the diagonal is forced to zero.
    b.distances_ = Eigen::MatrixXd::Ones(n, n);
    b.distances_.diagonal().setZero();
    for (const auto& [key, value] : pairValue) {
        const double d = (mode == BasemapMode::Similarity) ? 1.0 - value : value;
        if (key.first == key.second) continue;  // self-distance stays 0
        b.distances_(key.first, key.second) = d;
        b.distances_(key.second, key.first) = d;
    }
    return b;
}

Basemap Basemap::load(const std::filesystem::path& path, BasemapMode mode) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open basemap file: " + path.string());

    std::vector<std::tuple<std::string, std::string, double>> rows;
    std::string line;
    std::size_t lineNo = 0;
    bool sawHeader = false;
    while (std::getline(in, line)) {
        ++lineNo;
        if (trim(line).empty()) continue;
        auto fields = splitCsvLine(line);
        if (!sawHeader) {
            sawHeader = true;
            if (fields.size() == 3 && trim(fields[0]) == "cat_a" && trim(fields[1]) == "cat_b" &&
                trim(fields[2]) == "value")
                continue;  // header is optional on input
        }
        if (fields.size() != 3)
            throw MalformedRow("basemap line " + std::to_string(lineNo) + ": expected 3 columns, got " +
                               std::to_string(fields.size()));
        rows.emplace_back(trim(fields[0]), trim(fields[1]), parseValue(fields[2], lineNo));
    }
    return fromRows(rows, mode, path.string());
}

std::optional<Index> Basemap::indexOf(std::string_view category) const {
    auto it = index_.find(std::string(category));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Index Basemap::requireIndex(std::string_view category) const {
    auto idx = indexOf(category);
    if (!idx) throw UnknownCategory("unknown category: " + std::string(category));
    return *idx;
}

double Basemap::distance(std::string_view a, std::string_view b) const {
    return distances_(requireIndex(a), requireIndex(b));
}

double Basemap::maxDistance() const {
    if (size() < 2) return 0.0;
    return distances_.maxCoeff();
}

}  // namespace overlaydyn
