#include "coauth/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "coauth/error.hpp"
#include "coauth/export.hpp"

namespace coauth {

namespace {

using json = nlohmann::ordered_json;

template <class T, class F>
Outcome<T> attempt(F&& f) {
    Outcome<T> o;
    try {
        o.value = f();
    } catch (const Error& e) {
        o.error = e.what();
    }
    return o;
}

json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return io::round_sig6(v);
}

json stats_json(const DegreeStats& s) {
    json j;
    j["min"] = s.min;
    j["avg"] = num(s.avg);
    j["max"] = s.max;
    return j;
}

json fit_json(const Outcome<PowerLawFit>& o) {
    json j;
    if (!o.value) {
        j["error"] = o.error;
        return j;
    }
    const auto& f = *o.value;
    j["c"] = num(f.c);
    j["phi"] = num(f.phi);
    j["r2"] = num(f.r_squared);
    j["se_log_c"] = num(f.se_log_c);
    j["se_phi"] = num(f.se_phi);
    j["t_log_c"] = num(f.t_log_c);
    j["t_phi"] = num(f.t_phi);
    j["p_log_c"] = num(f.p_log_c);
    j["p_phi"] = num(f.p_phi);
    j["alpha"] = num(f.alpha);
    j["log_c_significant"] = f.log_c_significant;
    j["phi_significant"] = f.phi_significant;
    j["n_points"] = f.n_points;
    return j;
}

json degree_block(const DegreeStats& s, const FrequencyDistribution& fd, const Outcome<PowerLawFit>& fit) {
    json j = stats_json(s);
    std::size_t nonzero = 0;
    for (const auto& p : fd)
        if (p.degree > 0) ++nonzero;
    j["distinct_degrees"] = nonzero;
    j["power_law"] = fit_json(fit);
    return j;
}

json ranked_json(const std::vector<RankedAuthor>& list, const char* field) {
    json arr = json::array();
    for (const auto& r : list) {
        json e;
        e["author"] = r.key.to_string();
        e[field] = r.value;
        arr.push_back(std::move(e));
    }
    return arr;
}

json mixing_json(Attribute a, const Outcome<MixingResult>& o) {
    json j;
    j["attribute"] = to_string(a);
    if (o.value) {
        j["r"] = num(o.value->r);
        j["n_edges"] = o.value->n_directed_edges;
    } else {
        j["r"] = nullptr;
        j["error"] = o.error;
    }
    return j;
}

json trend_json(const Outcome<TrendFit>& o) {
    json j;
    if (!o.value) {
        j["error"] = o.error;
        return j;
    }
    j["slope"] = num(o.value->slope);
    j["intercept"] = num(o.value->intercept);
    j["r2"] = num(o.value->r_squared);
    json ex = json::array();
    for (const auto& [year, v] : o.value->extrapolation) {
        json e;
        e["year"] = year;
        e["predicted"] = num(v);
        ex.push_back(std::move(e));
    }
    j["extrapolation"] = std::move(ex);
    return j;
}

// Order-free census: depends only on component sizes and member keys.
json components_json(const std::vector<Component>& comps, std::size_t top_k) {
    json j;
    std::size_t isolated = 0, largest = 0;
    std::map<std::size_t, std::size_t> size_hist;
    for (const auto& c : comps) {
        ++size_hist[c.members.size()];
        largest = std::max(largest, c.members.size());
        if (c.members.size() == 1) ++isolated;
    }
    j["count"] = comps.size();
    j["largest"] = largest;
    j["isolated_authors"] = isolated;
    json hist = json::array();
    for (auto it = size_hist.rbegin(); it != size_hist.rend(); ++it) {
        json e;
        e["size"] = it->first;
        e["count"] = it->second;
        hist.push_back(std::move(e));
    }
    j["size_distribution"] = std::move(hist);

    std::vector<const Component*> order;
    for (const auto& c : comps) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const Component* a, const Component* b) {
        if (a->members.size() != b->members.size()) return a->members.size() > b->members.size();
        return a->central.front().key < b->central.front().key;
    });
    json top = json::array();
    for (std::size_t i = 0; i < std::min(top_k, order.size()); ++i) {
        json e;
        e["size"] = order[i]->members.size();
        const auto& central = order[i]->central;
        e["central"] = ranked_json({central.begin(), central.begin() + static_cast<std::ptrdiff_t>(
                                                                          std::min(top_k, central.size()))},
                                   "coauthors");
        top.push_back(std::move(e));
    }
    j["largest_components"] = std::move(top);
    return j;
}

template <class Fn>
bool write_file(const std::filesystem::path& path, std::ostream& diag, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        diag << "error: cannot write " << path.string() << '\n';
        return false;
    }
    fn(out);
    return static_cast<bool>(out);
}

}  // namespace

bool Analysis::degenerate() const {
    return !authors_per_paper_fit.value || !papers_per_author_fit.value || !coauthors_per_author_fit.value ||
           !productivity_r.value || !mixing_papers.value || !mixing_coauthors.value || !trend_papers.value ||
           !trend_authors.value;
}

Analysis analyze(const Corpus& c, const BipartiteGraph& g, const CoauthorGraph& cg, const AnalysisOptions& opt) {
    Analysis a;
    a.options = opt;
    a.years = corpus_summary(c);
    a.paper_deg = paper_degrees(g);
    a.author_deg = author_degrees(g);
    a.coauthor_deg = coauthor_degrees(cg);
    a.authors_per_paper = degree_stats(a.paper_deg);
    a.papers_per_author = degree_stats(a.author_deg);
    a.coauthors_per_author = degree_stats(a.coauthor_deg);

    a.authors_per_paper_dist = frequency_distribution(a.paper_deg);
    a.papers_per_author_dist = frequency_distribution(a.author_deg);
    a.coauthors_per_author_dist = frequency_distribution(a.coauthor_deg, true);
    a.authors_per_paper_fit = attempt<PowerLawFit>([&] { return fit_power_law(a.authors_per_paper_dist, opt.alpha); });
    a.papers_per_author_fit = attempt<PowerLawFit>([&] { return fit_power_law(a.papers_per_author_dist, opt.alpha); });
    a.coauthors_per_author_fit =
        attempt<PowerLawFit>([&] { return fit_power_law(a.coauthors_per_author_dist, opt.alpha); });

    a.productivity_r =
        attempt<double>([&] { return productivity_collaboration_correlation(a.author_deg, a.coauthor_deg); });
    a.mixing_papers = attempt<MixingResult>(
        [&] { return assortativity(cg, attribute_values(g, cg, Attribute::papers)); });
    a.mixing_coauthors = attempt<MixingResult>(
        [&] { return assortativity(cg, attribute_values(g, cg, Attribute::coauthors)); });

    a.trend_papers = attempt<TrendFit>([&] { return fit_trend(cumulative_papers_series(a.years), opt.horizon); });
    a.trend_authors = attempt<TrendFit>([&] { return fit_trend(cumulative_authors_series(a.years), opt.horizon); });

    a.top_by_papers = top_authors_by_papers(g, opt.top_k);
    a.top_by_coauthors = top_authors_by_coauthors(cg, opt.top_k);
    a.comps = components(cg);
    a.coauthor_edges = cg.edge_count();
    return a;
}

nlohmann::ordered_json summary_json(const Corpus& c, const Analysis& a) {
    json j;
    json& corpus = j["corpus"];
    corpus["papers"] = c.paper_count();
    corpus["authors"] = c.author_count();
    corpus["raw_names"] = c.raw_name_count();
    corpus["authorships"] = c.authorship_count();
    corpus["first_year"] = a.years.front().year;
    corpus["last_year"] = a.years.back().year;

    json& params = j["parameters"];
    params["alpha"] = num(a.options.alpha);
    params["top_k"] = a.options.top_k;
    params["horizon"] = a.options.horizon;

    j["authors_per_paper"] = degree_block(a.authors_per_paper, a.authors_per_paper_dist, a.authors_per_paper_fit);
    j["papers_per_author"] = degree_block(a.papers_per_author, a.papers_per_author_dist, a.papers_per_author_fit);
    j["papers_per_author"]["lotka_deviation"] =
        a.papers_per_author_fit.value ? num(lotka_comparison(*a.papers_per_author_fit.value)) : json(nullptr);
    j["coauthors_per_author"] =
        degree_block(a.coauthors_per_author, a.coauthors_per_author_dist, a.coauthors_per_author_fit);

    json& prod = j["productivity_collaboration"];
    if (a.productivity_r.value) {
        prod["r"] = num(*a.productivity_r.value);
    } else {
        prod["r"] = nullptr;
        prod["error"] = a.productivity_r.error;
    }

    json& mix = j["assortativity"];
    mix["papers"] = mixing_json(Attribute::papers, a.mixing_papers);
    mix["coauthors"] = mixing_json(Attribute::coauthors, a.mixing_coauthors);

    json& co = j["coauthorship"];
    co["edges"] = a.coauthor_edges;
    co["directed_edges"] = 2 * a.coauthor_edges;
    co["components"] = components_json(a.comps, a.options.top_k);

    json years = json::array();
    for (const auto& r : a.years) {
        json e;
        e["year"] = r.year;
        e["papers"] = r.papers;
        e["new_authors"] = r.new_authors;
        e["cumulative_papers"] = r.cumulative_papers;
        e["cumulative_authors"] = r.cumulative_authors;
        years.push_back(std::move(e));
    }
    j["years"] = std::move(years);
    j["trend"]["papers"] = trend_json(a.trend_papers);
    j["trend"]["authors"] = trend_json(a.trend_authors);

    j["top_by_papers"] = ranked_json(a.top_by_papers, "papers");
    j["top_by_coauthors"] = ranked_json(a.top_by_coauthors, "coauthors");
    return j;
}

int run_analyze(const AnalyzeArgs& args, std::ostream& diag) {
    namespace fs = std::filesystem;
    std::optional<Corpus> corpus;
    try {
        corpus = parse_corpus_file(args.input.string(), args.format);
    } catch (const Error& e) {
        diag << "error: " << args.input.string() << ": " << e.what() << '\n';
        return 1;
    }
    for (const auto& w : corpus->warnings()) diag << "warning: " << w << '\n';

    const BipartiteGraph g = build_pag(*corpus);
    const CoauthorGraph cg = build_cag(g);
    const Analysis a = analyze(*corpus, g, cg, args.options);

    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) {
        diag << "error: cannot create " << args.out_dir.string() << ": " << ec.message() << '\n';
        return 1;
    }
    const auto& dir = args.out_dir;
    bool ok = true;
    ok &= write_file(dir / "summary.json", diag, [&](std::ostream& o) { o << summary_json(*corpus, a).dump(2) << '\n'; });
    ok &= write_file(dir / "authors_per_paper.csv", diag, [&](std::ostream& o) {
        io::write_distribution_csv(a.authors_per_paper_dist, a.authors_per_paper_fit.value, o);
    });
    ok &= write_file(dir / "papers_per_author.csv", diag, [&](std::ostream& o) {
        io::write_distribution_csv(a.papers_per_author_dist, a.papers_per_author_fit.value, o);
    });
    ok &= write_file(dir / "coauthors_per_author.csv", diag, [&](std::ostream& o) {
        io::write_distribution_csv(a.coauthors_per_author_dist, a.coauthors_per_author_fit.value, o);
    });
    ok &= write_file(dir / "mixing_papers.csv", diag, [&](std::ostream& o) {
        io::write_mixing_csv(a.mixing_papers.value ? mixing_plot_data(*a.mixing_papers.value) : std::vector<MixingRow>{}, o);
    });
    ok &= write_file(dir / "mixing_coauthors.csv", diag, [&](std::ostream& o) {
        io::write_mixing_csv(
            a.mixing_coauthors.value ? mixing_plot_data(*a.mixing_coauthors.value) : std::vector<MixingRow>{}, o);
    });
    ok &= write_file(dir / "trend.csv", diag, [&](std::ostream& o) {
        io::write_trend_csv(a.years, a.trend_papers.value, a.trend_authors.value, args.options.horizon, o);
    });
    if (args.export_graphml) {
        ok &= write_file(dir / "pag.graphml", diag, [&](std::ostream& o) { io::write_pag_graphml(*corpus, g, o); });
        ok &= write_file(dir / "cag.graphml", diag, [&](std::ostream& o) { io::write_cag_graphml(*corpus, g, cg, o); });
    }
    if (args.export_dot) {
        ok &= write_file(dir / "pag.dot", diag, [&](std::ostream& o) { io::write_pag_dot(*corpus, g, o); });
        ok &= write_file(dir / "cag.dot", diag, [&](std::ostream& o) { io::write_cag_dot(*corpus, g, cg, o); });
    }
    if (!ok) return 1;

    if (a.degenerate()) {
        const auto report = [&](const char* what, const std::string& err) {
            if (!err.empty()) diag << "degenerate: " << what << ": " << err << '\n';
        };
        report("authors per paper fit", a.authors_per_paper_fit.error);
        report("papers per author fit", a.papers_per_author_fit.error);
        report("co-authors per author fit", a.coauthors_per_author_fit.error);
        report("productivity correlation", a.productivity_r.error);
        report("assortativity (papers)", a.mixing_papers.error);
        report("assortativity (co-authors)", a.mixing_coauthors.error);
        report("paper trend", a.trend_papers.error);
        report("author trend", a.trend_authors.error);
        return 2;
    }
    return 0;
}

}  // namespace coauth
