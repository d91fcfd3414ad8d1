#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "coauth/bigraph.hpp"
#include "coauth/coauthor.hpp"
#include "coauth/corpus.hpp"
#include "coauth/csv.hpp"
#include "coauth/mixing.hpp"
#include "coauth/powerfit.hpp"
#include "coauth/trend.hpp"

namespace coauth::io {

std::string xml_escape(std::string_view s);

/// Number formatting shared by CSV and JSON outputs: 6 significant digits.
double round_sig6(double v);
std::string format_number(double v);

void write_pag_graphml(const Corpus& c, const BipartiteGraph& g, std::ostream& out);
void write_pag_dot(const Corpus& c, const BipartiteGraph& g, std::ostream& out);
void write_cag_graphml(const Corpus& c, const BipartiteGraph& g, const CoauthorGraph& cg, std::ostream& out);
void write_cag_dot(const Corpus& c, const BipartiteGraph& g, const CoauthorGraph& cg, std::ostream& out);

/// degree,frequency,fitted_frequency; fitted column empty without a fit.
void write_distribution_csv(const FrequencyDistribution& fd, const std::optional<PowerLawFit>& fit,
                            std::ostream& out);

void write_mixing_csv(const std::vector<MixingRow>& rows, std::ostream& out);

void write_trend_csv(const std::vector<YearRow>& rows, const std::optional<TrendFit>& papers,
                     const std::optional<TrendFit>& authors, std::size_t horizon, std::ostream& out);

}  // namespace coauth::io
