#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coauth/coauthor.hpp"
#include "common.hpp"
#include "oracle.hpp"

using namespace coauth;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const CoauthorGraph& cg) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : cg.edges()) out.emplace_back(e.a, e.b);
    return out;
}

}  // namespace

TEST_SUITE("coauthor") {

TEST_CASE("worked example CAG") {
    const CoauthorGraph cg = build_cag(build_pag(testing::worked_example()));
    // 0-based form of {(1,2),(2,3),(2,4),(3,4)}
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 1}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(edge_pairs(cg) == expected);
    CHECK(coauthor_degrees(cg) == std::vector<std::size_t>{1, 3, 2, 2});
    const auto s = coauthors_per_author_stats(cg);
    CHECK(s.min == 1);
    CHECK(s.avg == 2.0);
    CHECK(s.max == 3);
    CHECK(cg.adjacent(2, 1));
    CHECK_FALSE(cg.adjacent(0, 2));
    CHECK(cg.weight(1, 0) == 1);
    CHECK(cg.weight(0, 3) == 0);

    const auto comps = components(cg);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members.size() == 4);
    CHECK(comps[0].central.front().key.surname == "bravo");

    const auto top1 = top_authors_by_coauthors(cg, 1);
    REQUIRE(top1.size() == 1);
    CHECK(top1[0] == RankedAuthor{AuthorKey{"bravo", ""}, 3});
}

TEST_CASE("single author paper gives an isolated vertex") {
    const CoauthorGraph cg = build_cag(build_pag(testing::parse_jsonl("{\"id\":\"P\",\"year\":2000,\"authors\":[\"Solo\"]}\n")));
    CHECK(cg.vertex_count() == 1);
    CHECK(cg.edge_count() == 0);
    CHECK(coauthor_degrees(cg) == std::vector<std::size_t>{0});
    const auto s = coauthors_per_author_stats(cg);
    CHECK(s.min == 0);
    CHECK(s.avg == 0.0);
    CHECK(s.max == 0);
}

TEST_CASE("edge weights count shared papers") {
    const CoauthorGraph cg = build_cag(build_pag(testing::parse_jsonl(
        "{\"id\":\"1\",\"year\":2000,\"authors\":[\"Alpha\",\"Bravo\"]}\n"
        "{\"id\":\"2\",\"year\":2000,\"authors\":[\"Bravo\",\"Alpha\",\"Charlie\"]}\n")));
    CHECK(cg.weight(0, 1) == 2);
    CHECK(cg.weight(1, 2) == 1);
    CHECK(coauthor_degrees(cg) == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("two disjoint papers give two components") {
    const CoauthorGraph cg = build_cag(build_pag(testing::parse_jsonl(
        "{\"id\":\"1\",\"year\":2000,\"authors\":[\"Alpha\",\"Bravo\"]}\n"
        "{\"id\":\"2\",\"year\":2000,\"authors\":[\"Charlie\",\"Delta\"]}\n")));
    const auto comps = components(cg);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members == std::vector<std::size_t>{0, 1});
    CHECK(comps[1].members == std::vector<std::size_t>{2, 3});
    CHECK(component_labels(cg) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("star paper ties broken lexicographically") {
    const CoauthorGraph cg = build_cag(build_pag(testing::parse_jsonl(
        "{\"id\":\"P\",\"year\":2000,\"authors\":[\"Hub\",\"Sa\",\"Sb\",\"Sc\"]}\n")));
    const auto top = top_authors_by_coauthors(cg, 4);
    REQUIRE(top.size() == 4);
    for (const auto& r : top) CHECK(r.value == 3);
    CHECK(top[0].key.surname == "hub");
    CHECK(top[1].key.surname == "sa");
    CHECK(top[3].key.surname == "sc");
}

TEST_CASE("CAG, degrees and components match brute force on random corpora") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const auto raw = oracle::random_papers(rng);
        const BipartiteGraph g = build_pag(oracle::to_corpus(raw));
        const CoauthorGraph cg = build_cag(g);
        const auto names = oracle::author_list(raw);
        const auto dense = oracle::cam(raw, names);
        const std::size_t m = names.size();

        std::size_t dense_edges = 0;
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                CHECK(cg.adjacent(j, k) == (dense[j][k] == 1));
                if (j < k && dense[j][k]) ++dense_edges;
            }
        CHECK(cg.edge_count() == dense_edges);

        const auto deg = coauthor_degrees(cg);
        CHECK(deg == oracle::row_sums(dense));
        std::size_t sum = 0;
        for (auto d : deg) sum += d;
        CHECK(sum == 2 * cg.edge_count());

        std::size_t bound = 0;
        for (const auto& p : raw) bound += p.authors.size() * (p.authors.size() - 1) / 2;
        CHECK(cg.edge_count() <= bound);
        // per-author bound: sum over own papers of (M_i - 1)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t cap = 0;
            for (std::size_t i = 0; i < g.paper_count(); ++i)
                if (g.incident(i, j)) cap += g.authors_of(i).size() - 1;
            CHECK(deg[j] <= cap);
        }

        std::set<std::set<std::size_t>> got;
        for (const auto& comp : components(cg)) {
            got.insert(std::set<std::size_t>(comp.members.begin(), comp.members.end()));
            CHECK(std::is_sorted(comp.central.begin(), comp.central.end(),
                                 [](const RankedAuthor& x, const RankedAuthor& y) { return x.value > y.value; }));
            CHECK(comp.central.size() == comp.members.size());
        }
        CHECK(got == oracle::closure_components(dense));
        const auto comps = components(cg);
        for (std::size_t c = 1; c < comps.size(); ++c) CHECK(comps[c - 1].members.front() < comps[c].members.front());

        // direct construction from the corpus (no PAG) yields the same edges
        std::set<std::pair<std::string, std::string>> direct;
        for (const auto& p : raw)
            for (const auto& a : p.authors)
                for (const auto& b : p.authors)
                    if (a < b) direct.emplace(a, b);
        std::set<std::pair<std::string, std::string>> from_pag;
        for (const auto& e : cg.edges()) {
            auto x = names[e.a], y = names[e.b];
            if (y < x) std::swap(x, y);
            from_pag.emplace(x, y);
        }
        CHECK(direct == from_pag);
    }
}

}
