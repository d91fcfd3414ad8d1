#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coauth/corpus.hpp"

namespace coauth {

/// min / mean / max over a degree vector.
struct DegreeStats {
    std::size_t min = 0;
    double avg = 0.0;
    std::size_t max = 0;
    std::size_t total = 0;  // sum of degrees; avg == total / count
    std::size_t count = 0;
};

DegreeStats degree_stats(const std::vector<std::size_t>& degrees);

struct RankedAuthor {
    AuthorKey key;
    std::size_t value = 0;
    bool operator==(const RankedAuthor&) const = default;
};

/// Descending by value, ties by key; at most k entries.
std::vector<RankedAuthor> top_k(const std::vector<AuthorKey>& keys,
                                const std::vector<std::size_t>& values, std::size_t k);

/// Paper-author bipartite graph. The incidence relation is stored as sorted
/// adjacency lists on both sides; PAM_{i,j} = 1 iff j is in paper_authors(i).
class BipartiteGraph {
  public:
    BipartiteGraph(std::vector<std::string> paper_ids, std::vector<AuthorKey> author_keys,
                   std::vector<std::vector<std::size_t>> paper_authors);

    std::size_t paper_count() const noexcept { return paper_ids_.size(); }
    std::size_t author_count() const noexcept { return author_keys_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<std::string>& paper_ids() const noexcept { return paper_ids_; }
    const std::vector<AuthorKey>& author_keys() const noexcept { return author_keys_; }
    const std::vector<std::size_t>& authors_of(std::size_t paper) const { return paper_authors_.at(paper); }
    const std::vector<std::size_t>& papers_of(std::size_t author) const { return author_papers_.at(author); }

    bool incident(std::size_t paper, std::size_t author) const;

    /// (i, j) pairs, 0-based, in paper order then author index order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  private:
    std::vector<std::string> paper_ids_;
    std::vector<AuthorKey> author_keys_;
    std::vector<std::vector<std::size_t>> paper_authors_;
    std::vector<std::vector<std::size_t>> author_papers_;
    std::size_t edge_count_ = 0;
};

/// Union of per-paper stars. Throws EmptyCorpus on an empty corpus.
BipartiteGraph build_pag(const Corpus& c);

std::vector<std::size_t> paper_degrees(const BipartiteGraph& g);
std::vector<std::size_t> author_degrees(const BipartiteGraph& g);

DegreeStats authors_per_paper_stats(const BipartiteGraph& g);
DegreeStats papers_per_author_stats(const BipartiteGraph& g);

std::vector<RankedAuthor> top_authors_by_papers(const BipartiteGraph& g, std::size_t k = 5);

}  // namespace coauth
