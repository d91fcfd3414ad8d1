// coauth: co-authorship analysis of a bibliographic corpus.
//
//   coauth analyze corpus.jsonl --out report/
//   coauth synth --seed 42 --papers 5000 --phi -2 > corpus.jsonl

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coauth/corpus.hpp"
#include "coauth/error.hpp"
#include "coauth/report.hpp"
#include "coauth/synth.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Authorship-pattern statistics for bibliographic corpora"};
    app.require_subcommand(1);

    coauth::AnalyzeArgs analyze;
    std::string input, format = "jsonl", exports = "dot,graphml";
    auto* an = app.add_subcommand("analyze", "Build PAG/CAG and write the report bundle");
    an->add_option("path", input, "Corpus file (JSONL or CSV)")->required();
    an->add_option("--format", format, "Input format")->check(CLI::IsMember({"jsonl", "csv"}));
    an->add_option("--out", analyze.out_dir, "Output directory")->capture_default_str();
    an->add_option("--top-k", analyze.options.top_k, "Length of top-author lists")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    an->add_option("--alpha", analyze.options.alpha, "Significance level for power-law coefficients")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    an->add_option("--horizon", analyze.options.horizon, "Years to extrapolate trends")->capture_default_str();
    an->add_option("--export", exports, "Graph export formats: dot, graphml, or both comma-separated")
        ->capture_default_str();

    coauth::SynthOptions synth;
    auto* sy = app.add_subcommand("synth", "Write a seeded synthetic JSONL corpus to stdout");
    sy->add_option("--seed", synth.seed, "RNG seed")->capture_default_str();
    sy->add_option("--papers", synth.papers, "Number of papers")->capture_default_str();
    sy->add_option("--phi", synth.phi, "Papers-per-author power-law exponent (< -1)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*an) {
        analyze.input = input;
        analyze.format = *coauth::format_from_string(format);
        analyze.export_dot = analyze.export_graphml = false;
        std::stringstream list(exports);
        for (std::string item; std::getline(list, item, ',');) {
            if (item == "dot") analyze.export_dot = true;
            else if (item == "graphml") analyze.export_graphml = true;
            else if (!item.empty()) {
                std::cerr << "error: unknown export format '" << item << "'\n";
                return 1;
            }
        }
        if (analyze.options.alpha <= 0.0 || analyze.options.alpha >= 1.0) {
            std::cerr << "error: --alpha must lie strictly between 0 and 1\n";
            return 1;
        }
        return coauth::run_analyze(analyze, std::cerr);
    }

    try {
        coauth::write_synth_jsonl(synth, std::cout);
    } catch (const coauth::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
