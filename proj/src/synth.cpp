#include "coauth/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "coauth/error.hpp"

namespace coauth {

namespace {

// Engine output is fully specified by the standard; the distributions are
// not, so draws are derived from raw 64-bit words by hand.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n), rejection sampling against modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % n;
    }

  private:
    std::mt19937_64 engine_;
};

struct SynthPaper {
    std::string id;
    int year = 0;
    std::vector<std::string> authors;
};

std::string author_name(std::size_t j) {
    std::string tail;
    std::size_t v = j;
    do {
        tail.insert(tail.begin(), static_cast<char>('a' + v % 26));
        v /= 26;
    } while (v > 0);
    std::string name(1, static_cast<char>('A' + j % 26));
    return name + ". Syn" + tail;
}

std::vector<SynthPaper> generate(const SynthOptions& opt) {
    if (opt.papers == 0) throw Error("synth: number of papers must be at least 1");
    if (!(opt.phi < -1.0)) throw Error("synth: phi must be below -1");
    if (opt.max_papers_per_author == 0) throw Error("synth: max papers per author must be at least 1");
    if (opt.first_year > opt.last_year) throw Error("synth: first year after last year");

    Rng rng(opt.seed);
    const std::size_t support = std::min(opt.max_papers_per_author, opt.papers);

    std::vector<double> cdf(support);
    double acc = 0.0;
    for (std::size_t k = 1; k <= support; ++k) cdf[k - 1] = acc += std::pow(static_cast<double>(k), opt.phi);
    for (auto& v : cdf) v /= acc;
    cdf.back() = 1.0;

    std::vector<std::size_t> productivity;
    std::size_t slots = 0;
    while (slots < opt.papers) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t k = static_cast<std::size_t>(it - cdf.begin()) + 1;
        productivity.push_back(k);
        slots += k;
    }

    std::vector<std::size_t> order(opt.papers);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    std::vector<SynthPaper> papers(opt.papers);
    const auto span = static_cast<std::uint64_t>(opt.last_year - opt.first_year) + 1;
    for (std::size_t i = 0; i < papers.size(); ++i) {
        std::ostringstream id;
        id << 'S' << i + 1;
        papers[i].id = id.str();
        papers[i].year = opt.first_year + static_cast<int>(rng.below(span));
    }

    // Consecutive slots of one author land on distinct papers because
    // k <= number of papers; slots >= papers leaves no paper empty.
    std::size_t s = 0;
    for (std::size_t j = 0; j < productivity.size(); ++j) {
        const std::string name = author_name(j);
        for (std::size_t r = 0; r < productivity[j]; ++r, ++s) papers[order[s % opt.papers]].authors.push_back(name);
    }
    return papers;
}

}  // namespace

void write_synth_jsonl(const SynthOptions& opt, std::ostream& out) {
    for (const auto& p : generate(opt)) {
        nlohmann::ordered_json row;
        row["id"] = p.id;
        row["year"] = p.year;
        row["authors"] = p.authors;
        out << row.dump() << '\n';
    }
}

Corpus synthesize_corpus(const SynthOptions& opt) {
    std::stringstream buf;
    write_synth_jsonl(opt, buf);
    return parse_corpus(buf, InputFormat::jsonl);
}

}  // namespace coauth
