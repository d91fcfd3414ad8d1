#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coauth/bigraph.hpp"
#include "coauth/coauthor.hpp"

namespace coauth {

enum class Attribute { papers, coauthors };

std::string to_string(Attribute a);

/// Per-author value of the chosen attribute: Delta^A for papers, Delta^C
/// for coauthors.
std::vector<double> attribute_values(const BipartiteGraph& g, const CoauthorGraph& cg, Attribute a);

/// Pearson r between papers-per-author and coauthors-per-author.
/// Throws UndefinedCorrelation on length mismatch, n < 2 or a constant vector.
double productivity_collaboration_correlation(std::span<const double> papers,
                                              std::span<const double> coauthors);
double productivity_collaboration_correlation(const std::vector<std::size_t>& papers,
                                              const std::vector<std::size_t>& coauthors);

struct MixingResult {
    double r = 0.0;
    std::size_t n_directed_edges = 0;
    /// (tau_start, tau_end) per directed edge; both directions of every
    /// undirected edge are present.
    std::vector<std::pair<double, double>> edge_pairs;
};

/// Scalar assortativity: Pearson correlation of endpoint values over the
/// bidirectional edge list. `tau` is indexed by vertex.
/// Throws UndefinedMixing for an edgeless graph or constant endpoint values.
MixingResult assortativity(const CoauthorGraph& cg, std::span<const double> tau);

struct MixingRow {
    double tau_start = 0.0;
    double tau_end = 0.0;
    std::size_t count = 0;
    bool operator==(const MixingRow&) const = default;
};

/// Directed-edge counts per (tau_start, tau_end), sorted by both values.
std::vector<MixingRow> mixing_plot_data(const MixingResult& result);

/// Mixing matrix over the distinct attribute classes: fraction[i][j] is the
/// share of directed edges from class i to class j, marginal[i] = sum_j.
struct MixingMatrix {
    std::vector<double> classes;
    std::vector<std::vector<double>> fraction;
    std::vector<double> marginal;

    /// r = sum_ij x_i x_j (e_ij - a_i b_j) / (sigma_a sigma_b), evaluated on
    /// the matrix rather than the edge list.
    double assortativity() const;
};

MixingMatrix mixing_matrix(const MixingResult& result);

}  // namespace coauth
