#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coauth/bigraph.hpp"

namespace coauth {

struct CoauthorEdge {
    std::size_t a = 0;  // a < b
    std::size_t b = 0;
    std::size_t weight = 0;  // number of shared papers
    bool operator==(const CoauthorEdge&) const = default;
};

/// Co-authorship graph. Edges are unordered pairs with a < b, sorted; the
/// adjacency lists hold both directions. No self-loops.
class CoauthorGraph {
  public:
    CoauthorGraph(std::vector<AuthorKey> author_keys, std::vector<CoauthorEdge> edges);

    std::size_t vertex_count() const noexcept { return author_keys_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<AuthorKey>& author_keys() const noexcept { return author_keys_; }
    const std::vector<CoauthorEdge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

    bool adjacent(std::size_t u, std::size_t v) const;
    /// 0 when not adjacent.
    std::size_t weight(std::size_t u, std::size_t v) const;

  private:
    std::vector<AuthorKey> author_keys_;
    std::vector<CoauthorEdge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Replaces each paper vertex by a complete graph on its authors.
CoauthorGraph build_cag(const BipartiteGraph& g);

std::vector<std::size_t> coauthor_degrees(const CoauthorGraph& cg);
DegreeStats coauthors_per_author_stats(const CoauthorGraph& cg);
std::vector<RankedAuthor> top_authors_by_coauthors(const CoauthorGraph& cg, std::size_t k = 5);

struct Component {
    std::vector<std::size_t> members;  // ascending
    std::vector<RankedAuthor> central;  // members by co-author count, descending
};

/// Connected components ordered by smallest member index.
std::vector<Component> components(const CoauthorGraph& cg);

/// Component id per vertex, matching the order of components().
std::vector<std::size_t> component_labels(const CoauthorGraph& cg);

}  // namespace coauth
