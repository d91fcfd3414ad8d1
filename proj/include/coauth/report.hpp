#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coauth/bigraph.hpp"
#include "coauth/coauthor.hpp"
#include "coauth/corpus.hpp"
#include "coauth/mixing.hpp"
#include "coauth/powerfit.hpp"
#include "coauth/trend.hpp"

namespace coauth {

struct AnalysisOptions {
    std::size_t top_k = 5;
    double alpha = kDefaultAlpha;
    std::size_t horizon = 5;
};

template <class T>
struct Outcome {
    std::optional<T> value;
    std::string error;  // set when value is empty
};

/// Everything computed from one corpus. Statistics that cannot be computed
/// (too few points, zero variance) carry the reason instead of a value.
struct Analysis {
    AnalysisOptions options;
    std::vector<YearRow> years;
    std::vector<std::size_t> paper_deg, author_deg, coauthor_deg;
    DegreeStats authors_per_paper, papers_per_author, coauthors_per_author;
    FrequencyDistribution authors_per_paper_dist, papers_per_author_dist, coauthors_per_author_dist;
    Outcome<PowerLawFit> authors_per_paper_fit, papers_per_author_fit, coauthors_per_author_fit;
    Outcome<double> productivity_r;
    Outcome<MixingResult> mixing_papers, mixing_coauthors;
    Outcome<TrendFit> trend_papers, trend_authors;
    std::vector<RankedAuthor> top_by_papers, top_by_coauthors;
    std::vector<Component> comps;
    std::size_t coauthor_edges = 0;

    bool degenerate() const;
};

Analysis analyze(const Corpus& c, const BipartiteGraph& g, const CoauthorGraph& cg,
                 const AnalysisOptions& opt);

/// Table-shaped summary document; numbers rounded to 6 significant digits.
nlohmann::ordered_json summary_json(const Corpus& c, const Analysis& a);

struct AnalyzeArgs {
    std::filesystem::path input;
    InputFormat format = InputFormat::jsonl;
    std::filesystem::path out_dir = "report";
    AnalysisOptions options;
    bool export_dot = true;
    bool export_graphml = true;
};

/// Runs the whole pipeline and writes the bundle. Returns 0 on success,
/// 1 on input failure (nothing written), 2 when some statistic is
/// degenerate (everything computable is still written).
int run_analyze(const AnalyzeArgs& args, std::ostream& diag);

}  // namespace coauth
