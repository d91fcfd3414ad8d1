#include "coauth/coauthor.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "coauth/error.hpp"

namespace coauth {

namespace {

class DisjointSets {
  public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

  private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
};

}  // namespace

CoauthorGraph::CoauthorGraph(std::vector<AuthorKey> author_keys, std::vector<CoauthorEdge> edges)
    : author_keys_(std::move(author_keys)), edges_(std::move(edges)), adjacency_(author_keys_.size()) {
    for (auto& e : edges_) {
        if (e.a == e.b) throw Error("self-loop in co-authorship graph");
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.b >= author_keys_.size()) throw Error("co-author index out of range");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const CoauthorEdge& x, const CoauthorEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const CoauthorEdge& x, const CoauthorEdge& y) {
        return x.a == y.a && x.b == y.b;
    });
    if (dup != edges_.end()) throw Error("duplicate co-authorship edge");
    for (const auto& e : edges_) {
        adjacency_[e.a].push_back(e.b);
        adjacency_[e.b].push_back(e.a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool CoauthorGraph::adjacent(std::size_t u, std::size_t v) const {
    const auto& adj = adjacency_.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::size_t CoauthorGraph::weight(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                                     [](const CoauthorEdge& e, const std::pair<std::size_t, std::size_t>& k) {
                                         return std::tie(e.a, e.b) < std::tie(k.first, k.second);
                                     });
    return (it != edges_.end() && it->a == u && it->b == v) ? it->weight : 0;
}

CoauthorGraph build_cag(const BipartiteGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.paper_count(); ++i) {
        const auto& authors = g.authors_of(i);  // sorted
        for (std::size_t x = 0; x < authors.size(); ++x)
            for (std::size_t y = x + 1; y < authors.size(); ++y) pairs.emplace_back(authors[x], authors[y]);
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<CoauthorEdge> edges;
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        edges.push_back({pairs[i].first, pairs[i].second, j - i});
        i = j;
    }
    return CoauthorGraph(g.author_keys(), std::move(edges));
}

std::vector<std::size_t> coauthor_degrees(const CoauthorGraph& cg) {
    std::vector<std::size_t> d(cg.vertex_count());
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = cg.neighbors(v).size();
    return d;
}

DegreeStats coauthors_per_author_stats(const CoauthorGraph& cg) { return degree_stats(coauthor_degrees(cg)); }

std::vector<RankedAuthor> top_authors_by_coauthors(const CoauthorGraph& cg, std::size_t k) {
    return top_k(cg.author_keys(), coauthor_degrees(cg), k);
}

std::vector<std::size_t> component_labels(const CoauthorGraph& cg) {
    DisjointSets sets(cg.vertex_count());
    for (const auto& e : cg.edges()) sets.unite(e.a, e.b);

    // Visiting vertices in index order numbers components by smallest member.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> root_label(cg.vertex_count(), unset);
    std::vector<std::size_t> label(cg.vertex_count());
    std::size_t next = 0;
    for (std::size_t v = 0; v < cg.vertex_count(); ++v) {
        auto& l = root_label[sets.find(v)];
        if (l == unset) l = next++;
        label[v] = l;
    }
    return label;
}

std::vector<Component> components(const CoauthorGraph& cg) {
    const auto label = component_labels(cg);
    const auto degrees = coauthor_degrees(cg);
    const std::size_t count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;

    std::vector<Component> out(count);
    for (std::size_t v = 0; v < label.size(); ++v) out[label[v]].members.push_back(v);
    for (auto& comp : out) {
        std::vector<AuthorKey> keys;
        std::vector<std::size_t> values;
        for (std::size_t v : comp.members) {
            keys.push_back(cg.author_keys()[v]);
            values.push_back(degrees[v]);
        }
        comp.central = top_k(keys, values, keys.size());
    }
    return out;
}

}  // namespace coauth
