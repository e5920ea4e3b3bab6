#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "overlaydyn/exports.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = OVERLAYDYN_CLI_PATH;

int run(const std::string& args) {
    const int rc = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Workspace {
    fs::path dir;
    Workspace(const std::string& name) : dir(fs::temp_directory_path() / name) {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }
    fs::path file(const std::string& name, const std::string& content) const {
        const fs::path p = dir / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
};

const char* kToyBasemap = "cat_a,cat_b,value\nA,B,0.6\nB,C,0.4\nA,C,0.0\n";  // similarity mode

std::string toyCorpus() {
    return R"({"id":"a1","year":1990,"categories":["A"],"references":[]})"
           "\n"
           R"({"id":"a2","year":1990,"categories":["B"],"references":[]})"
           "\n"
           R"({"id":"b1","year":1991,"categories":["A","B"],"references":["a1"]})"
           "\n"
           R"({"id":"b2","year":1991,"categories":["C"],"references":["a1","a2"]})"
           "\n";
}

}  // namespace

TEST_CASE("series: toy corpus produces the two expected rows") {
    Workspace ws("odcli_series");
    const auto basemap = ws.file("basemap.csv", kToyBasemap);
    const auto corpus = ws.file("corpus.jsonl", toyCorpus());
    const auto out = ws.dir / "out";
    REQUIRE(run("series --mode typeA-cross --basemap " + basemap.string() + " --corpus " +
                corpus.string() + " --out " + out.string()) == 0);

    const std::string csv = slurp(out / "series_typeA_cross.csv");
    CHECK(csv.rfind("year,n_source,n_target,od_source,od_target,mod,odr,status\n", 0) == 0);
    // 1990: source {a1,a2} (A,B), target {b1,b2}; 1991: no citers -> undefined cells
    CHECK(csv.find("1990,2,2,") != std::string::npos);
    CHECK(csv.find("1991,2,0,") != std::string::npos);
    CHECK(csv.find("undefined_empty_profile") != std::string::npos);
    CHECK(fs::exists(out / "series_typeA_cross.svg"));
}

TEST_CASE("series: rerun is byte-identical") {
    Workspace ws("odcli_det");
    const auto basemap = ws.file("basemap.csv", kToyBasemap);
    const auto corpus = ws.file("corpus.jsonl", toyCorpus());
    const auto out1 = ws.dir / "o1";
    const auto out2 = ws.dir / "o2";
    const std::string common = " --basemap " + basemap.string() + " --corpus " + corpus.string();
    REQUIRE(run("series --mode typeB" + common + " --out " + out1.string()) == 0);
    REQUIRE(run("series --mode typeB" + common + " --out " + out2.string()) == 0);
    CHECK(slurp(out1 / "series_typeB.csv") == slurp(out2 / "series_typeB.csv"));
    CHECK(slurp(out1 / "series_typeB.svg") == slurp(out2 / "series_typeB.svg"));
}

TEST_CASE("series: category outside the basemap exits 2 naming it") {
    Workspace ws("odcli_unknowncat");
    const auto basemap = ws.file("basemap.csv", "cat_a,cat_b,value\nA,B,0.6\n");
    const auto corpus =
        ws.file("corpus.jsonl", R"({"id":"d","year":1990,"categories":["ZZZ"],"references":[]})"
                                "\n");
    CHECK(run("series --mode typeA-cross --basemap " + basemap.string() + " --corpus " + corpus.string() +
              " --out " + (ws.dir / "out").string()) == 2);
}

TEST_CASE("series: years flag clips to corpus coverage") {
    Workspace ws("odcli_years");
    const auto basemap = ws.file("basemap.csv", kToyBasemap);
    const auto corpus = ws.file("corpus.jsonl", toyCorpus());
    const auto out = ws.dir / "out";
    REQUIRE(run("series --mode typeA-cross --years 1980:2050 --basemap " + basemap.string() +
                " --corpus " + corpus.string() + " --out " + out.string()) == 0);
    const std::string csv = slurp(out / "series_typeA_cross.csv");
    CHECK(csv.find("1980,") == std::string::npos);
    CHECK(csv.find("1990,") != std::string::npos);
}

TEST_CASE("expand: hand-traced snowball run") {
    Workspace ws("odcli_expand");
    const std::string corpus =
        R"({"id":"s1","year":2000,"categories":[],"references":["r1","r2"]})"
        "\n"
        R"({"id":"s2","year":2000,"categories":[],"references":["r1","r3"]})"
        "\n"
        R"({"id":"r1","year":1995,"categories":[],"references":["r4"]})"
        "\n"
        R"({"id":"r2","year":1995,"categories":[],"references":[]})"
        "\n"
        R"({"id":"r3","year":1995,"categories":[],"references":[]})"
        "\n"
        R"({"id":"r4","year":1990,"categories":[],"references":[]})"
        "\n";
    const auto corpusPath = ws.file("corpus.jsonl", corpus);
    const auto seed = ws.file("seed.txt", "s1\ns2\n");
    const auto out = ws.dir / "out";
    REQUIRE(run("expand --corpus " + corpusPath.string() + " --seed " + seed.string() +
                " --thresholds 2 --out " + out.string()) == 0);

    const std::string report = slurp(out / "expansion_report.csv");
    CHECK(report.find("# thresholds: 2\n") != std::string::npos);
    CHECK(report.find("initial,2,4,3,2,1\n") != std::string::npos);
    CHECK(report.find("gen2,1,1,1,2,0\n") != std::string::npos);
    CHECK(report.find("total,3,,,,\n") != std::string::npos);

    const std::string expanded = slurp(out / "corpus_expanded.jsonl");
    CHECK(expanded.find("\"r1\"") != std::string::npos);
    CHECK(expanded.find("\"id\":\"r2\"") == std::string::npos);
}

TEST_CASE("expand: empty seed file exits 2") {
    Workspace ws("odcli_emptyseed");
    const auto corpusPath =
        ws.file("corpus.jsonl", R"({"id":"s1","year":2000,"categories":[],"references":[]})"
                                "\n");
    const auto seed = ws.file("seed.txt", "");
    CHECK(run("expand --corpus " + corpusPath.string() + " --seed " + seed.string() + " --out " +
              (ws.dir / "out").string()) == 2);
}

TEST_CASE("expand: multi-element threshold list is echoed in the report") {
    Workspace ws("odcli_thresholds");
    const auto corpusPath =
        ws.file("corpus.jsonl", R"({"id":"s1","year":2000,"categories":[],"references":[]})"
                                "\n");
    const auto seed = ws.file("seed.txt", "s1\n");
    const auto out = ws.dir / "out";
    REQUIRE(run("expand --corpus " + corpusPath.string() + " --seed " + seed.string() +
                " --thresholds 3,10 --out " + out.string()) == 0);
    CHECK(slurp(out / "expansion_report.csv").find("# thresholds: 3,10\n") != std::string::npos);
}

TEST_CASE("overlay-export: profile CSV and GraphML for a derived 3-SC profile") {
    Workspace ws("odcli_export");
    const auto basemap =
        ws.file("basemap.csv", "cat_a,cat_b,value\nA,B,0.4\nA,C,1.0\nB,C,0.6\n");
    // cited cohort 1990 has categories A, B, C; A-C sits at distance 1 -> omitted from edges
    const std::string corpus = R"({"id":"d1","year":1990,"categories":["A"],"references":[]})"
                               "\n"
                               R"({"id":"d2","year":1990,"categories":["B"],"references":[]})"
                               "\n"
                               R"({"id":"d3","year":1990,"categories":["C"],"references":[]})"
                               "\n";
    const auto corpusPath = ws.file("corpus.jsonl", corpus);
    const auto out = ws.dir / "out";
    REQUIRE(run("overlay-export --year 1990 --side cited --basemap-mode distance --basemap " +
                basemap.string() + " --corpus " + corpusPath.string() + " --out " + out.string()) == 0);

    const std::string graphml = slurp(out / "overlay_1990_cited.graphml");
    CHECK(graphml.find("<node id=\"A\">") != std::string::npos);
    CHECK(graphml.find("<node id=\"B\">") != std::string::npos);
    CHECK(graphml.find("<node id=\"C\">") != std::string::npos);
    CHECK(graphml.find("source=\"A\" target=\"B\"") != std::string::npos);
    CHECK(graphml.find("source=\"B\" target=\"C\"") != std::string::npos);
    CHECK(graphml.find("source=\"A\" target=\"C\"") == std::string::npos);  // d = 1 pruned
    CHECK(graphml.find("<data key=\"distance\">0.4</data>") != std::string::npos);

    const std::string csv = slurp(out / "overlay_1990_cited.csv");
    CHECK(csv.rfind("category,weight\n", 0) == 0);
}

TEST_CASE("overlay-export: single-SC profile gives one node and no edges") {
    Workspace ws("odcli_export1");
    const auto basemap = ws.file("basemap.csv", kToyBasemap);
    const auto corpusPath =
        ws.file("corpus.jsonl", R"({"id":"d1","year":1990,"categories":["A"],"references":[]})"
                                "\n");
    const auto out = ws.dir / "out";
    REQUIRE(run("overlay-export --year 1990 --side cited --basemap " + basemap.string() + " --corpus " +
                corpusPath.string() + " --out " + out.string()) == 0);
    const std::string graphml = slurp(out / "overlay_1990_cited.graphml");
    CHECK(graphml.find("<node id=\"A\">") != std::string::npos);
    CHECK(graphml.find("<edge") == std::string::npos);
    CHECK(graphml.find("<data key=\"weight\">1</data>") != std::string::npos);
}

TEST_CASE("overlay-export: citing side with no citers leaves a marker and exits 0") {
    Workspace ws("odcli_exportempty");
    const auto basemap = ws.file("basemap.csv", kToyBasemap);
    const auto corpusPath =
        ws.file("corpus.jsonl", R"({"id":"d1","year":1990,"categories":["A"],"references":[]})"
                                "\n");
    const auto out = ws.dir / "out";
    REQUIRE(run("overlay-export --year 1990 --side citing --basemap " + basemap.string() + " --corpus " +
                corpusPath.string() + " --out " + out.string()) == 0);
    CHECK(fs::exists(out / "overlay_1990_citing.empty"));
    CHECK_FALSE(fs::exists(out / "overlay_1990_citing.csv"));
}

TEST_CASE("profile CSV round-trips through the reader") {
    Workspace ws("odcli_roundtrip");
    const auto basemap = ws.file("basemap.csv", kToyBasemap);
    const auto corpus = ws.file("corpus.jsonl", toyCorpus());
    const auto out = ws.dir / "out";
    REQUIRE(run("overlay-export --year 1991 --side cited --basemap " + basemap.string() + " --corpus " +
                corpus.string() + " --out " + out.string()) == 0);
    // expected fractional profile of {b1:[A,B], b2:[C]}: A 0.25, B 0.25, C 0.5
    const auto rows = overlaydyn::readProfileCsv(out / "overlay_1991_cited.csv");
    REQUIRE(rows.size() == 3);
    double total = 0.0;
    for (const auto& [cat, w] : rows) {
        total += w;
        const double expected = cat == "C" ? 0.5 : 0.25;
        CHECK(std::abs(w - expected) <= 1e-12);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("missing input file exits 2") {
    Workspace ws("odcli_missing");
    CHECK(run("series --mode typeB --basemap /nonexistent.csv --corpus /nonexistent.jsonl --out " +
              (ws.dir / "out").string()) == 2);
}
