#pragma once

#include <cstdint>
#include <ostream>

#include "coauth/corpus.hpp"

namespace coauth {

struct SynthOptions {
    std::uint64_t seed = 1;
    std::size_t papers = 1000;
    double phi = -2.0;
    std::size_t max_papers_per_author = 1000;
    int first_year = 2000;
    int last_year = 2010;
};

/// Random corpus whose papers-per-author counts are i.i.d. draws from
/// P(k) ~ k^phi on [1, min(max_papers_per_author, papers)], sampled by
/// inverse transform. Authors are drawn until their paper slots cover every
/// paper at least once. Throws Error on phi >= -1 or papers == 0.
Corpus synthesize_corpus(const SynthOptions& opt);

void write_synth_jsonl(const SynthOptions& opt, std::ostream& out);

}  // namespace coauth
