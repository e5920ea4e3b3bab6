#include "overlaydyn/exports.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace overlaydyn {
namespace {

std::ofstream openOut(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps line endings platform-stable
    if (!out) throw Error("cannot open output file: " + path.string());
    return out;
}

std::string measureCell(const MeasureValue& m) {
    return m.ok() ? formatNumber(m.value) : std::string{};
}

void appendStatus(std::string& status, const char* field, const MeasureValue& m) {
    if (m.ok()) return;
    if (!status.empty()) status += ';';
    status += field;
    status += '=';
    status += to_string(m.status);
}

std::string xmlEscape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

// Fixed two-decimal pixel coordinates keep the SVG byte-stable.
std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string formatNumber(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw Error("number formatting failed");
    return std::string(buf, end);
}

void writeSeriesCsv(std::ostream& out, const DiversitySeries& series) {
    out << "year,n_source,n_target,od_source,od_target,mod,odr,status\n";
    for (const auto& row : series.rows) {
        std::string status;
        appendStatus(status, "od_source", row.odSource);
        appendStatus(status, "od_target", row.odTarget);
        appendStatus(status, "mod", row.mod);
        appendStatus(status, "odr", row.odr);
        if (status.empty()) status = "ok";
        out << row.year << ',' << row.nSource << ',' << row.nTarget << ',' << measureCell(row.odSource)
            << ',' << measureCell(row.odTarget) << ',' << measureCell(row.mod) << ','
            << measureCell(row.odr) << ',' << status << '\n';
    }
}

void writeSeriesCsv(const std::filesystem::path& path, const DiversitySeries& series) {
    auto out = openOut(path);
    writeSeriesCsv(out, series);
}

void writeSeriesSvg(std::ostream& out, const DiversitySeries& series) {
    constexpr double width = 960, height = 480;
    constexpr double left = 64, right = 936, top = 24, bottom = 440;

    int yearMin = series.spec.yearMin, yearMax = series.spec.yearMax;
    if (!series.rows.empty()) {
        yearMin = series.rows.front().year;
        yearMax = series.rows.back().year;
    }
    double vmax = 1.0;  // keep the ODR = 1 reference inside the frame
    for (const auto& row : series.rows) {
        if (row.mod.ok()) vmax = std::max(vmax, row.mod.value);
        if (row.odr.ok()) vmax = std::max(vmax, row.odr.value);
    }
    vmax *= 1.05;

    const double yearSpan = std::max(1, yearMax - yearMin);
    auto x = [&](int year) { return left + (right - left) * (year - yearMin) / yearSpan; };
    auto y = [&](double v) { return bottom - (bottom - top) * v / vmax; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 480\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<line x1=\"" << px(left) << "\" y1=\"" << px(bottom) << "\" x2=\"" << px(right) << "\" y2=\""
        << px(bottom) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << px(left) << "\" y1=\"" << px(top) << "\" x2=\"" << px(left) << "\" y2=\""
        << px(bottom) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(left) << "\" y=\"" << px(bottom + 18) << "\" font-size=\"12\">" << yearMin
        << "</text>\n";
    out << "<text x=\"" << px(right - 30) << "\" y=\"" << px(bottom + 18) << "\" font-size=\"12\">" << yearMax
        << "</text>\n";
    out << "<text x=\"" << px(left - 40) << "\" y=\"" << px(bottom) << "\" font-size=\"12\">0</text>\n";
    out << "<text x=\"" << px(left - 56) << "\" y=\"" << px(top + 10) << "\" font-size=\"12\">"
        << px(vmax) << "</text>\n";

    // ODR = 1 reference
    out << "<line x1=\"" << px(left) << "\" y1=\"" << px(y(1.0)) << "\" x2=\"" << px(right) << "\" y2=\""
        << px(y(1.0)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
    out << "<text x=\"" << px(right - 52) << "\" y=\"" << px(y(1.0) - 4)
        << "\" font-size=\"11\" fill=\"gray\">ODR=1</text>\n";

    auto emitLine = [&](const char* color, auto getter, const char* label, double labelY) {
        std::vector<std::string> segment;
        auto flush = [&]() {
            if (segment.size() >= 2) {
                out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
                for (std::size_t i = 0; i < segment.size(); ++i) out << (i ? " " : "") << segment[i];
                out << "\"/>\n";
            } else if (segment.size() == 1) {
                auto comma = segment[0].find(',');
                out << "<circle cx=\"" << segment[0].substr(0, comma) << "\" cy=\""
                    << segment[0].substr(comma + 1) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
            }
            segment.clear();
        };
        for (const auto& row : series.rows) {
            const MeasureValue& m = getter(row);
            if (m.ok())
                segment.push_back(px(x(row.year)) + "," + px(y(m.value)));
            else
                flush();
        }
        flush();
        out << "<text x=\"" << px(right - 120) << "\" y=\"" << px(labelY) << "\" font-size=\"12\" fill=\""
            << color << "\">" << label << "</text>\n";
    };

    emitLine("steelblue", [](const SeriesRow& r) -> const MeasureValue& { return r.mod; }, "MOD", top + 14);
    emitLine("firebrick", [](const SeriesRow& r) -> const MeasureValue& { return r.odr; }, "ODR", top + 30);
    out << "</svg>\n";
}

void writeSeriesSvg(const std::filesystem::path& path, const DiversitySeries& series) {
    auto out = openOut(path);
    writeSeriesSvg(out, series);
}

void writeProfileCsv(std::ostream& out, const OverlayProfile& profile, const Basemap& basemap) {
    auto rows = profile.support();
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return basemap.categories()[a.first] < basemap.categories()[b.first];
    });
    out << "category,weight\n";
    for (const auto& [idx, weight] : rows)
        out << basemap.categories()[idx] << ',' << formatNumber(weight) << '\n';
}

void writeProfileCsv(const std::filesystem::path& path, const OverlayProfile& profile,
                     const Basemap& basemap) {
    auto out = openOut(path);
    writeProfileCsv(out, profile, basemap);
}

std::vector<std::pair<std::string, double>> readProfileCsv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open profile file: " + path.string());
    std::vector<std::pair<std::string, double>> out;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == "category,weight") continue;
        auto comma = line.rfind(',');
        if (comma == std::string::npos)
            throw MalformedRow("profile line " + std::to_string(lineNo) + ": missing comma");
        double w = 0.0;
        const char* first = line.data() + comma + 1;
        auto [p, ec] = std::from_chars(first, line.data() + line.size(), w);
        if (ec != std::errc{} || p != line.data() + line.size())
            throw MalformedRow("profile line " + std::to_string(lineNo) + ": bad weight");
        out.emplace_back(line.substr(0, comma), w);
    }
    return out;
}

void writeProfileGraphml(std::ostream& out, const OverlayProfile& profile, const Basemap& basemap) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"weight\" for=\"node\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <key id=\"distance\" for=\"edge\" attr.name=\"distance\" attr.type=\"double\"/>\n"
        << "  <graph id=\"overlay\" edgedefault=\"undirected\">\n";
    const auto support = profile.support();
    for (const auto& [idx, weight] : support) {
        out << "    <node id=\"" << xmlEscape(basemap.categories()[idx]) << "\">"
            << "<data key=\"weight\">" << formatNumber(weight) << "</data></node>\n";
    }
    std::size_t edgeId = 0;
    for (std::size_t a = 0; a < support.size(); ++a) {
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            const double d = basemap.distanceAt(support[a].first, support[b].first);
            if (d >= 1.0) continue;
            out << "    <edge id=\"e" << edgeId++ << "\" source=\""
                << xmlEscape(basemap.categories()[support[a].first]) << "\" target=\""
                << xmlEscape(basemap.categories()[support[b].first]) << "\">"
                << "<data key=\"distance\">" << formatNumber(d) << "</data></edge>\n";
        }
    }
    out << "  </graph>\n</graphml>\n";
}

void writeProfileGraphml(const std::filesystem::path& path, const OverlayProfile& profile,
                         const Basemap& basemap) {
    auto out = openOut(path);
    writeProfileGraphml(out, profile, basemap);
}

void writeExpansionReportCsv(std::ostream& out, const ExpansionReport& report,
                             const std::vector<int>& thresholds) {
    out << "# thresholds:";
    for (std::size_t i = 0; i < thresholds.size(); ++i) out << (i ? "," : " ") << thresholds[i];
    out << '\n';
    out << "generation,n_source_docs,n_references,n_unique_references,threshold,n_relevant_retrievable\n";
    for (const auto& row : report.rows) {
        out << row.generation << ',' << row.sourceDocs << ',' << row.references << ','
            << row.uniqueReferences << ',' << row.threshold << ',' << row.relevantRetrievable << '\n';
    }
    out << "total," << report.total << ",,,,\n";
}

void writeExpansionReportCsv(const std::filesystem::path& path, const ExpansionReport& report,
                             const std::vector<int>& thresholds) {
    auto out = openOut(path);
    writeExpansionReportCsv(out, report, thresholds);
}

void writeCorpusJsonl(const std::filesystem::path& path, const DocumentStore& store, const DocSet& subset) {
    auto out = openOut(path);
    for (const auto& id : subset) {  // DocSet is ordered, so output is sorted by id
        const auto& doc = store.get(id);
        nlohmann::json j;
        j["id"] = doc.id;
        j["year"] = doc.year;
        j["categories"] = doc.categories;
        j["references"] = doc.references;
        out << j.dump() << '\n';
    }
}

}  // namespace overlaydyn
