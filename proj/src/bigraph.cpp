#include "coauth/bigraph.hpp"

#include <algorithm>
#include <numeric>

#include "coauth/error.hpp"

namespace coauth {

DegreeStats degree_stats(const std::vector<std::size_t>& degrees) {
    DegreeStats s;
    if (degrees.empty()) return s;
    const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    s.min = *lo;
    s.max = *hi;
    // Integer sum is exact; a single division keeps avg = |E| / n exactly.
    s.total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
    s.count = degrees.size();
    s.avg = static_cast<double>(s.total) / static_cast<double>(s.count);
    return s;
}

std::vector<RankedAuthor> top_k(const std::vector<AuthorKey>& keys,
                                const std::vector<std::size_t>& values, std::size_t k) {
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const std::size_t n = std::min(k, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (values[a] != values[b]) return values[a] > values[b];
                          return keys[a] < keys[b];
                      });
    std::vector<RankedAuthor> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back({keys[order[i]], values[order[i]]});
    return out;
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> paper_ids, std::vector<AuthorKey> author_keys,
                               std::vector<std::vector<std::size_t>> paper_authors)
    : paper_ids_(std::move(paper_ids)),
      author_keys_(std::move(author_keys)),
      paper_authors_(std::move(paper_authors)),
      author_papers_(author_keys_.size()) {
    if (paper_authors_.size() != paper_ids_.size()) throw Error("paper adjacency size mismatch");
    for (std::size_t i = 0; i < paper_authors_.size(); ++i) {
        auto& adj = paper_authors_[i];
        std::sort(adj.begin(), adj.end());
        if (adj.empty()) throw Error("paper '" + paper_ids_[i] + "' has no authors");
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw Error("paper '" + paper_ids_[i] + "' lists an author twice");
        for (std::size_t j : adj) {
            if (j >= author_keys_.size()) throw Error("author index out of range");
            author_papers_[j].push_back(i);
        }
        edge_count_ += adj.size();
    }
    for (std::size_t j = 0; j < author_papers_.size(); ++j)
        if (author_papers_[j].empty()) throw Error("author " + author_keys_[j].to_string() + " has no papers");
}

bool BipartiteGraph::incident(std::size_t paper, std::size_t author) const {
    const auto& adj = paper_authors_.at(paper);
    return std::binary_search(adj.begin(), adj.end(), author);
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < paper_authors_.size(); ++i)
        for (std::size_t j : paper_authors_[i]) out.emplace_back(i, j);
    return out;
}

BipartiteGraph build_pag(const Corpus& c) {
    if (c.empty()) throw EmptyCorpus();
    std::vector<std::string> ids;
    std::vector<std::vector<std::size_t>> adj;
    ids.reserve(c.paper_count());
    adj.reserve(c.paper_count());
    for (const auto& p : c.papers()) {
        ids.push_back(p.id);
        auto& row = adj.emplace_back();
        row.reserve(p.authors.size());
        for (const auto& a : p.authors) row.push_back(*c.author_index(a));
    }
    return BipartiteGraph(std::move(ids), c.authors(), std::move(adj));
}

std::vector<std::size_t> paper_degrees(const BipartiteGraph& g) {
    std::vector<std::size_t> d(g.paper_count());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = g.authors_of(i).size();
    return d;
}

std::vector<std::size_t> author_degrees(const BipartiteGraph& g) {
    std::vector<std::size_t> d(g.author_count());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = g.papers_of(j).size();
    return d;
}

DegreeStats authors_per_paper_stats(const BipartiteGraph& g) { return degree_stats(paper_degrees(g)); }

DegreeStats papers_per_author_stats(const BipartiteGraph& g) { return degree_stats(author_degrees(g)); }

std::vector<RankedAuthor> top_authors_by_papers(const BipartiteGraph& g, std::size_t k) {
    return top_k(g.author_keys(), author_degrees(g), k);
}

}  // namespace coauth
