#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "coauth/report.hpp"
#include "common.hpp"

using namespace coauth;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("coauth_test_" + name + "_" + std::to_string(std::random_device{}()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_SUITE("report") {

TEST_CASE("worked example summary") {
    const Corpus c = testing::worked_example();
    const BipartiteGraph g = build_pag(c);
    const CoauthorGraph cg = build_cag(g);
    const Analysis a = analyze(c, g, cg, {});
    CHECK(a.authors_per_paper.avg == 2.5);
    CHECK(a.papers_per_author.avg == 1.25);
    CHECK(a.coauthors_per_author.avg == 2.0);
    CHECK(a.coauthor_edges == 4);
    REQUIRE(a.productivity_r.value);
    CHECK(*a.productivity_r.value == doctest::Approx(0.816496580927726));
    // two papers, two years: every fit is under-determined
    CHECK(a.degenerate());
    CHECK_FALSE(a.trend_papers.value);
    CHECK_FALSE(a.papers_per_author_fit.value);

    const auto j = summary_json(c, a);
    CHECK(j["corpus"]["papers"] == 2);
    CHECK(j["corpus"]["authors"] == 4);
    CHECK(j["authors_per_paper"]["avg"] == 2.5);
    CHECK(j["coauthorship"]["edges"] == 4);
    CHECK(j["coauthorship"]["directed_edges"] == 8);
    CHECK(j["productivity_collaboration"]["r"] == 0.816497);
    CHECK(j["top_by_papers"][0]["author"] == "bravo");
    CHECK(j["top_by_papers"][0]["papers"] == 2);
}

TEST_CASE("analyze writes the bundle and flags degeneracy") {
    const fs::path dir = scratch("bundle");
    write(dir / "in.jsonl", testing::kWorkedExample);
    AnalyzeArgs args;
    args.input = dir / "in.jsonl";
    args.out_dir = dir / "out";
    std::ostringstream diag;
    CHECK(run_analyze(args, diag) == 2);
    for (const char* f : {"summary.json", "authors_per_paper.csv", "papers_per_author.csv", "coauthors_per_author.csv",
                          "mixing_papers.csv", "mixing_coauthors.csv", "trend.csv", "pag.graphml", "cag.graphml",
                          "pag.dot", "cag.dot"})
        CHECK_MESSAGE(fs::exists(args.out_dir / f), f);
    CHECK(diag.str().find("degenerate") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("bad input writes nothing") {
    const fs::path dir = scratch("bad");
    AnalyzeArgs args;
    args.out_dir = dir / "out";
    std::ostringstream diag;

    write(dir / "empty.jsonl", "");
    args.input = dir / "empty.jsonl";
    CHECK(run_analyze(args, diag) == 1);
    CHECK_FALSE(fs::exists(args.out_dir));

    write(dir / "broken.jsonl", "{\"id\":\"1\",\"year\":2000,\"authors\":[\"A\"]}\n{oops\n");
    args.input = dir / "broken.jsonl";
    CHECK(run_analyze(args, diag) == 1);
    CHECK_FALSE(fs::exists(args.out_dir));

    args.input = dir / "missing.jsonl";
    CHECK(run_analyze(args, diag) == 1);
    CHECK(diag.str().find("error:") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("export flags control graph files") {
    const fs::path dir = scratch("flags");
    write(dir / "in.jsonl", testing::kWorkedExample);
    AnalyzeArgs args;
    args.input = dir / "in.jsonl";
    args.out_dir = dir / "out";
    args.export_dot = false;
    std::ostringstream diag;
    run_analyze(args, diag);
    CHECK(fs::exists(args.out_dir / "cag.graphml"));
    CHECK_FALSE(fs::exists(args.out_dir / "cag.dot"));
    fs::remove_all(dir);
}

}
