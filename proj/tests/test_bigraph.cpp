#include <doctest.h>

#include <algorithm>
#include <random>

#include "coauth/bigraph.hpp"
#include "coauth/error.hpp"
#include "common.hpp"
#include "oracle.hpp"

using namespace coauth;

TEST_SUITE("bigraph") {

TEST_CASE("worked example PAG") {
    const BipartiteGraph g = build_pag(testing::worked_example());
    // 0-based form of {(1,1),(1,2),(2,2),(2,3),(2,4)}
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}};
    CHECK(g.edges() == expected);
    CHECK(paper_degrees(g) == std::vector<std::size_t>{2, 3});
    CHECK(author_degrees(g) == std::vector<std::size_t>{1, 2, 1, 1});

    const auto a = authors_per_paper_stats(g);
    CHECK(a.min == 2);
    CHECK(a.avg == 2.5);
    CHECK(a.max == 3);
    const auto p = papers_per_author_stats(g);
    CHECK(p.min == 1);
    CHECK(p.avg == 1.25);
    CHECK(p.max == 2);
}

TEST_CASE("single paper single author") {
    const BipartiteGraph g = build_pag(testing::parse_jsonl("{\"id\":\"P1\",\"year\":2000,\"authors\":[\"Alpha\"]}\n"));
    CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}});
    CHECK(paper_degrees(g) == std::vector<std::size_t>{1});
}

TEST_CASE("single-author corpus has unit paper degrees") {
    const BipartiteGraph g = build_pag(testing::parse_jsonl(
        "{\"id\":\"1\",\"year\":2000,\"authors\":[\"Alpha\"]}\n"
        "{\"id\":\"2\",\"year\":2000,\"authors\":[\"Bravo\"]}\n"
        "{\"id\":\"3\",\"year\":2000,\"authors\":[\"Alpha\"]}\n"));
    CHECK(paper_degrees(g) == std::vector<std::size_t>{1, 1, 1});
    CHECK(author_degrees(g) == std::vector<std::size_t>{2, 1});
}

TEST_CASE("top authors by papers") {
    const BipartiteGraph g = build_pag(testing::worked_example());
    const auto top1 = top_authors_by_papers(g, 1);
    REQUIRE(top1.size() == 1);
    CHECK(top1[0] == RankedAuthor{AuthorKey{"bravo", ""}, 2});
    const auto top10 = top_authors_by_papers(g, 10);
    REQUIRE(top10.size() == 4);
    CHECK(top10[0].key.surname == "bravo");
    // ties broken by key
    CHECK(top10[1].key.surname == "alpha");
    CHECK(top10[2].key.surname == "charlie");
    CHECK(top10[3].key.surname == "delta");
    CHECK(top_authors_by_papers(g).size() == 4);
}

TEST_CASE("empty corpus is rejected") {
    CHECK_THROWS_AS(build_pag(Corpus{}), EmptyCorpus);
}

TEST_CASE("incidence, degrees and ranking match brute force on random corpora") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const auto raw = oracle::random_papers(rng);
        const Corpus c = oracle::to_corpus(raw);
        const BipartiteGraph g = build_pag(c);
        const auto names = oracle::author_list(raw);
        const auto dense = oracle::pam(raw, names);
        REQUIRE(g.author_count() == names.size());
        for (std::size_t j = 0; j < names.size(); ++j) REQUIRE(g.author_keys()[j].to_string() == names[j]);
        for (std::size_t i = 0; i < raw.size(); ++i)
            for (std::size_t j = 0; j < names.size(); ++j) CHECK(g.incident(i, j) == (dense[i][j] == 1));

        const auto pd = paper_degrees(g);
        const auto ad = author_degrees(g);
        CHECK(pd == oracle::row_sums(dense));
        CHECK(ad == oracle::col_sums(dense, names.size()));

        // handshake across the bipartition and exact averages
        std::size_t sp = 0, sa = 0;
        for (auto d : pd) sp += d;
        for (auto d : ad) sa += d;
        CHECK(sp == g.edge_count());
        CHECK(sa == g.edge_count());
        CHECK(authors_per_paper_stats(g).avg * g.paper_count() == doctest::Approx(g.edge_count()).epsilon(1e-15));
        CHECK(authors_per_paper_stats(g).avg == static_cast<double>(g.edge_count()) / g.paper_count());
        CHECK(papers_per_author_stats(g).avg == static_cast<double>(g.edge_count()) / g.author_count());

        // full sort oracle for top-k
        std::vector<std::pair<std::size_t, std::string>> all;
        for (std::size_t j = 0; j < names.size(); ++j) all.emplace_back(ad[j], names[j]);
        std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first > y.first : x.second < y.second;
        });
        const auto top = top_authors_by_papers(g, 5);
        REQUIRE(top.size() == std::min<std::size_t>(5, names.size()));
        for (std::size_t i = 0; i < top.size(); ++i) {
            CHECK(top[i].value == all[i].first);
            CHECK(top[i].key.to_string() == all[i].second);
        }
    }
}

TEST_CASE("shuffled record order gives identical statistics") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto raw = oracle::random_papers(rng);
        const BipartiteGraph g1 = build_pag(oracle::to_corpus(raw));
        std::shuffle(raw.begin(), raw.end(), rng);
        const BipartiteGraph g2 = build_pag(oracle::to_corpus(raw));
        CHECK(g1.edge_count() == g2.edge_count());
        const auto s1 = papers_per_author_stats(g1), s2 = papers_per_author_stats(g2);
        CHECK(s1.avg == s2.avg);
        CHECK(s1.max == s2.max);
        CHECK(authors_per_paper_stats(g1).avg == authors_per_paper_stats(g2).avg);
        CHECK(top_authors_by_papers(g1, 10) == top_authors_by_papers(g2, 10));
        auto d1 = author_degrees(g1), d2 = author_degrees(g2);
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        CHECK(d1 == d2);
    }
}

}
