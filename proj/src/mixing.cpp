#include "coauth/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "coauth/error.hpp"
#include "coauth/stats.hpp"

namespace coauth {

std::string to_string(Attribute a) { return a == Attribute::papers ? "papers" : "coauthors"; }

std::vector<double> attribute_values(const BipartiteGraph& g, const CoauthorGraph& cg, Attribute a) {
    const auto deg = a == Attribute::papers ? author_degrees(g) : coauthor_degrees(cg);
    return {deg.begin(), deg.end()};
}

double productivity_collaboration_correlation(std::span<const double> papers,
                                              std::span<const double> coauthors) {
    if (papers.size() != coauthors.size())
        throw UndefinedCorrelation("attribute vectors differ in length");
    if (papers.size() < 2) throw UndefinedCorrelation("need at least 2 authors");
    const double r = stats::pearson(papers, coauthors);
    if (std::isnan(r)) throw UndefinedCorrelation("zero variance in papers or co-authors per author");
    return r;
}

double productivity_collaboration_correlation(const std::vector<std::size_t>& papers,
                                              const std::vector<std::size_t>& coauthors) {
    const std::vector<double> p(papers.begin(), papers.end());
    const std::vector<double> c(coauthors.begin(), coauthors.end());
    return productivity_collaboration_correlation(std::span<const double>(p), std::span<const double>(c));
}

MixingResult assortativity(const CoauthorGraph& cg, std::span<const double> tau) {
    if (tau.size() != cg.vertex_count()) throw Error("attribute vector does not match vertex count");
    if (cg.edge_count() == 0) throw UndefinedMixing("co-authorship graph has no edges");

    MixingResult res;
    res.edge_pairs.reserve(2 * cg.edge_count());
    for (const auto& e : cg.edges()) {
        res.edge_pairs.emplace_back(tau[e.a], tau[e.b]);
        res.edge_pairs.emplace_back(tau[e.b], tau[e.a]);
    }
    res.n_directed_edges = res.edge_pairs.size();

    std::vector<double> start, end;
    start.reserve(res.n_directed_edges);
    end.reserve(res.n_directed_edges);
    for (const auto& [s, t] : res.edge_pairs) {
        start.push_back(s);
        end.push_back(t);
    }
    res.r = stats::pearson(start, end);
    if (std::isnan(res.r)) throw UndefinedMixing("endpoint attribute values have zero variance");
    return res;
}

std::vector<MixingRow> mixing_plot_data(const MixingResult& result) {
    std::map<std::pair<double, double>, std::size_t> counts;
    for (const auto& p : result.edge_pairs) ++counts[p];
    std::vector<MixingRow> rows;
    rows.reserve(counts.size());
    for (const auto& [k, n] : counts) rows.push_back({k.first, k.second, n});
    return rows;
}

MixingMatrix mixing_matrix(const MixingResult& result) {
    MixingMatrix m;
    for (const auto& [s, t] : result.edge_pairs) {
        m.classes.push_back(s);
        m.classes.push_back(t);
    }
    std::sort(m.classes.begin(), m.classes.end());
    m.classes.erase(std::unique(m.classes.begin(), m.classes.end()), m.classes.end());

    const std::size_t k = m.classes.size();
    m.fraction.assign(k, std::vector<double>(k, 0.0));
    m.marginal.assign(k, 0.0);
    const auto index = [&](double v) {
        return static_cast<std::size_t>(std::lower_bound(m.classes.begin(), m.classes.end(), v) - m.classes.begin());
    };
    std::vector<std::vector<std::size_t>> counts(k, std::vector<std::size_t>(k, 0));
    for (const auto& [s, t] : result.edge_pairs) ++counts[index(s)][index(t)];

    const double total = static_cast<double>(result.edge_pairs.size());
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t row = 0;
        for (std::size_t j = 0; j < k; ++j) {
            m.fraction[i][j] = static_cast<double>(counts[i][j]) / total;
            row += counts[i][j];
        }
        m.marginal[i] = static_cast<double>(row) / total;
    }
    return m;
}

double MixingMatrix::assortativity() const {
    const std::size_t k = classes.size();
    std::vector<double> col(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) col[j] += fraction[i][j];

    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        mean_a += classes[i] * marginal[i];
        mean_b += classes[i] * col[i];
    }
    double var_a = 0.0, var_b = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        var_a += (classes[i] - mean_a) * (classes[i] - mean_a) * marginal[i];
        var_b += (classes[i] - mean_b) * (classes[i] - mean_b) * col[i];
        for (std::size_t j = 0; j < k; ++j)
            cov += (classes[i] - mean_a) * (classes[j] - mean_b) * fraction[i][j];
    }
    if (var_a == 0.0 || var_b == 0.0) throw UndefinedMixing("single attribute class");
    return cov / std::sqrt(var_a * var_b);
}

}  // namespace coauth
