#include "coauth/export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace coauth::io {

namespace {

constexpr const char* kGraphmlHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n"
    "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n"
    "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
    "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    out += '"';
    return out;
}

void key(std::ostream& out, const char* id, const char* domain, const char* type) {
    out << "  <key id=\"" << id << "\" for=\"" << domain << "\" attr.name=\"" << id << "\" attr.type=\"" << type
        << "\"/>\n";
}

template <class T>
void data(std::ostream& out, const char* k, const T& v) {
    out << "<data key=\"" << k << "\">" << v << "</data>";
}

}  // namespace

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

double round_sig6(double v) {
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    if (v == std::trunc(v) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", v);
    }
    return buf;
}

void write_pag_graphml(const Corpus& c, const BipartiteGraph& g, std::ostream& out) {
    out << kGraphmlHeader;
    key(out, "kind", "node", "string");
    key(out, "label", "node", "string");
    key(out, "year", "node", "int");
    key(out, "degree", "node", "int");
    out << "  <graph id=\"PAG\" edgedefault=\"undirected\">\n";
    for (std::size_t i = 0; i < g.paper_count(); ++i) {
        out << "    <node id=\"p" << i << "\">";
        data(out, "kind", "paper");
        data(out, "label", xml_escape(g.paper_ids()[i]));
        data(out, "year", c.papers()[i].year);
        data(out, "degree", g.authors_of(i).size());
        out << "</node>\n";
    }
    for (std::size_t j = 0; j < g.author_count(); ++j) {
        out << "    <node id=\"a" << j << "\">";
        data(out, "kind", "author");
        data(out, "label", xml_escape(c.display_name(j)));
        data(out, "degree", g.papers_of(j).size());
        out << "</node>\n";
    }
    for (const auto& [i, j] : g.edges()) out << "    <edge source=\"p" << i << "\" target=\"a" << j << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_pag_dot(const Corpus& c, const BipartiteGraph& g, std::ostream& out) {
    out << "graph PAG {\n";
    for (std::size_t i = 0; i < g.paper_count(); ++i)
        out << "  p" << i << " [shape=box, label=" << dot_quote(g.paper_ids()[i]) << "];\n";
    for (std::size_t j = 0; j < g.author_count(); ++j)
        out << "  a" << j << " [shape=circle, label=" << dot_quote(c.display_name(j)) << "];\n";
    for (const auto& [i, j] : g.edges()) out << "  p" << i << " -- a" << j << ";\n";
    out << "}\n";
}

void write_cag_graphml(const Corpus& c, const BipartiteGraph& g, const CoauthorGraph& cg, std::ostream& out) {
    const auto papers = author_degrees(g);
    const auto coauthors = coauthor_degrees(cg);
    const auto comp = component_labels(cg);
    out << kGraphmlHeader;
    key(out, "label", "node", "string");
    key(out, "key", "node", "string");
    key(out, "papers", "node", "int");
    key(out, "coauthors", "node", "int");
    key(out, "component", "node", "int");
    key(out, "weight", "edge", "int");
    out << "  <graph id=\"CAG\" edgedefault=\"undirected\">\n";
    for (std::size_t v = 0; v < cg.vertex_count(); ++v) {
        out << "    <node id=\"a" << v << "\">";
        data(out, "label", xml_escape(c.display_name(v)));
        data(out, "key", xml_escape(cg.author_keys()[v].to_string()));
        data(out, "papers", papers[v]);
        data(out, "coauthors", coauthors[v]);
        data(out, "component", comp[v]);
        out << "</node>\n";
    }
    for (const auto& e : cg.edges()) {
        out << "    <edge source=\"a" << e.a << "\" target=\"a" << e.b << "\">";
        data(out, "weight", e.weight);
        out << "</edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_cag_dot(const Corpus& c, const BipartiteGraph& g, const CoauthorGraph& cg, std::ostream& out) {
    const auto papers = author_degrees(g);
    const auto coauthors = coauthor_degrees(cg);
    const auto comp = component_labels(cg);
    out << "graph CAG {\n";
    for (std::size_t v = 0; v < cg.vertex_count(); ++v)
        out << "  a" << v << " [shape=circle, label=" << dot_quote(c.display_name(v)) << ", papers=" << papers[v]
            << ", coauthors=" << coauthors[v] << ", component=" << comp[v] << "];\n";
    for (const auto& e : cg.edges()) out << "  a" << e.a << " -- a" << e.b << " [weight=" << e.weight << "];\n";
    out << "}\n";
}

void write_distribution_csv(const FrequencyDistribution& fd, const std::optional<PowerLawFit>& fit,
                            std::ostream& out) {
    out << "degree,frequency,fitted_frequency\n";
    for (const auto& p : fd) {
        out << p.degree << ',' << p.frequency << ',';
        if (fit && p.degree > 0) out << format_number(fit->predict(static_cast<double>(p.degree)));
        out << '\n';
    }
}

void write_mixing_csv(const std::vector<MixingRow>& rows, std::ostream& out) {
    out << "tau_start,tau_end,count\n";
    for (const auto& r : rows) out << format_number(r.tau_start) << ',' << format_number(r.tau_end) << ',' << r.count << '\n';
}

void write_trend_csv(const std::vector<YearRow>& rows, const std::optional<TrendFit>& papers,
                     const std::optional<TrendFit>& authors, std::size_t horizon, std::ostream& out) {
    out << "year,observed_cumulative_papers,observed_cumulative_authors,fitted_papers,fitted_authors,is_extrapolated\n";
    const auto fitted = [](const std::optional<TrendFit>& f, int year) {
        return f ? format_number(f->predict(year)) : std::string();
    };
    for (const auto& r : rows)
        out << r.year << ',' << r.cumulative_papers << ',' << r.cumulative_authors << ',' << fitted(papers, r.year)
            << ',' << fitted(authors, r.year) << ",0\n";
    if (rows.empty() || (!papers && !authors)) return;
    for (std::size_t h = 1; h <= horizon; ++h) {
        const int year = rows.back().year + static_cast<int>(h);
        out << year << ",,," << fitted(papers, year) << ',' << fitted(authors, year) << ",1\n";
    }
}

}  // namespace coauth::io
