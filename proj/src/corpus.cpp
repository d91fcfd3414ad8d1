#include "coauth/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "coauth/csv.hpp"
#include "coauth/error.hpp"

namespace coauth {

namespace {

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string lower_ascii(std::string s) {
    for (auto& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

void check_year(long long year, std::size_t line) {
    if (year < kMinYear || year > kMaxYear)
        throw ParseError(line, "year " + std::to_string(year) + " outside [1900, 2100]");
}

// Normalizes the raw author line and appends the record.
void add_record(Corpus& c, std::size_t line, std::string id, int year,
                const std::vector<std::string>& raw_authors) {
    if (id.empty()) throw ParseError(line, "empty paper id");
    if (raw_authors.empty()) throw ParseError(line, "paper '" + id + "' has no authors");

    PaperRecord rec{std::move(id), year, {}};
    std::vector<std::pair<AuthorKey, std::string>> display;
    for (const auto& raw : raw_authors) {
        NormalizedName n;
        try {
            n = normalize_name_detailed(raw);
        } catch (const MalformedName& e) {
            throw ParseError(line, e.what());
        }
        for (auto& w : n.warnings) c.add_warning("line " + std::to_string(line) + ": " + w);
        if (std::find(rec.authors.begin(), rec.authors.end(), n.key) != rec.authors.end()) {
            c.add_warning("line " + std::to_string(line) + ": '" + raw + "' repeats author " +
                          n.key.to_string() + " on paper '" + rec.id + "'");
            continue;
        }
        rec.authors.push_back(n.key);
        display.emplace_back(n.key, trim(raw));
    }
    c.add_paper(std::move(rec), raw_authors.size());
    for (const auto& [key, name] : display) c.set_display_name(key, name);
}

void parse_jsonl(std::istream& in, Corpus& c) {
    using nlohmann::json;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (trim(text).empty()) continue;
        json row;
        try {
            row = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(line, std::string("invalid JSON: ") + e.what());
        }
        if (!row.is_object()) throw ParseError(line, "expected a JSON object");

        const auto id = row.find("id");
        if (id == row.end() || !id->is_string()) throw ParseError(line, "missing string field 'id'");
        const auto year = row.find("year");
        if (year == row.end() || !year->is_number_integer())
            throw ParseError(line, "missing integer field 'year'");
        const auto authors = row.find("authors");
        if (authors == row.end() || !authors->is_array())
            throw ParseError(line, "missing array field 'authors'");

        long long y = 0;
        if (year->is_number_unsigned()) {
            const auto u = year->get<unsigned long long>();
            y = u > static_cast<unsigned long long>(kMaxYear) ? kMaxYear + 1LL : static_cast<long long>(u);
        } else {
            y = year->get<long long>();
        }
        check_year(y, line);

        std::vector<std::string> names;
        for (const auto& a : *authors) {
            if (!a.is_string()) throw ParseError(line, "author entries must be strings");
            names.push_back(a.get<std::string>());
        }
        add_record(c, line, id->get<std::string>(), static_cast<int>(y), names);
    }
}

void parse_csv(std::istream& in, Corpus& c) {
    std::size_t line = 0;
    auto header = io::read_csv_record(in, line);
    if (!header) return;
    std::size_t id_col = std::numeric_limits<std::size_t>::max();
    std::size_t year_col = id_col;
    std::size_t authors_col = id_col;
    for (std::size_t i = 0; i < header->size(); ++i) {
        std::string name = lower_ascii(trim((*header)[i]));
        if (i == 0 && name.rfind("\xEF\xBB\xBF", 0) == 0) name.erase(0, 3);
        if (name == "id") id_col = i;
        else if (name == "year") year_col = i;
        else if (name == "authors") authors_col = i;
    }
    if (id_col == std::numeric_limits<std::size_t>::max() ||
        year_col == std::numeric_limits<std::size_t>::max() ||
        authors_col == std::numeric_limits<std::size_t>::max())
        throw ParseError(1, "CSV header must contain id, year and authors");

    while (auto rec = io::read_csv_record(in, line)) {
        if (rec->size() == 1 && trim((*rec)[0]).empty()) continue;
        if (rec->size() != header->size())
            throw ParseError(line, "expected " + std::to_string(header->size()) + " fields, got " +
                                       std::to_string(rec->size()));
        const std::string year_text = trim((*rec)[year_col]);
        long long y = 0;
        const auto [ptr, ec] = std::from_chars(year_text.data(), year_text.data() + year_text.size(), y);
        if (ec != std::errc{} || ptr != year_text.data() + year_text.size() || year_text.empty())
            throw ParseError(line, "invalid year '" + year_text + "'");
        check_year(y, line);

        std::vector<std::string> names;
        const std::string& field = (*rec)[authors_col];
        std::size_t pos = 0;
        while (pos <= field.size()) {
            const auto semi = field.find(';', pos);
            const auto end = semi == std::string::npos ? field.size() : semi;
            std::string name = trim(std::string_view(field).substr(pos, end - pos));
            if (!name.empty()) names.push_back(std::move(name));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        add_record(c, line, trim((*rec)[id_col]), static_cast<int>(y), names);
    }
}

}  // namespace

std::optional<InputFormat> format_from_string(const std::string& s) {
    const std::string l = lower_ascii(s);
    if (l == "jsonl") return InputFormat::jsonl;
    if (l == "csv") return InputFormat::csv;
    return std::nullopt;
}

void Corpus::add_paper(PaperRecord paper, std::size_t raw_names) {
    if (!paper_ids_.emplace(paper.id, papers_.size()).second) throw DuplicatePaperId(paper.id);
    for (const auto& key : paper.authors) {
        if (author_index_.emplace(key, authors_.size()).second) authors_.push_back(key);
    }
    raw_name_count_ += raw_names;
    authorship_count_ += paper.authors.size();
    papers_.push_back(std::move(paper));
}

void Corpus::set_display_name(const AuthorKey& key, const std::string& name) {
    if (auto idx = author_index(key)) display_.emplace(*idx, name);
}

std::optional<std::size_t> Corpus::author_index(const AuthorKey& key) const {
    const auto it = author_index_.find(key);
    if (it == author_index_.end()) return std::nullopt;
    return it->second;
}

std::string Corpus::display_name(std::size_t author) const {
    const auto it = display_.find(author);
    return it != display_.end() ? it->second : authors_.at(author).to_string();
}

Corpus parse_corpus(std::istream& in, InputFormat format) {
    Corpus c;
    if (format == InputFormat::jsonl) parse_jsonl(in, c);
    else parse_csv(in, c);
    if (c.empty()) throw EmptyCorpus();
    return c;
}

Corpus parse_corpus_file(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_corpus(in, format);
}

void write_jsonl(const Corpus& c, std::ostream& out) {
    for (const auto& p : c.papers()) {
        nlohmann::ordered_json row;
        row["id"] = p.id;
        row["year"] = p.year;
        auto& authors = row["authors"] = nlohmann::ordered_json::array();
        for (const auto& a : p.authors) authors.push_back(a.to_string());
        out << row.dump() << '\n';
    }
}

std::vector<YearRow> corpus_summary(const Corpus& c) {
    if (c.empty()) throw EmptyCorpus();
    int lo = c.papers().front().year;
    int hi = lo;
    for (const auto& p : c.papers()) {
        lo = std::min(lo, p.year);
        hi = std::max(hi, p.year);
    }

    std::vector<int> first_year(c.author_count(), hi + 1);
    std::vector<YearRow> rows(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].year = lo + static_cast<int>(i);

    for (const auto& p : c.papers()) {
        ++rows[static_cast<std::size_t>(p.year - lo)].papers;
        for (const auto& a : p.authors) {
            auto& fy = first_year[*c.author_index(a)];
            fy = std::min(fy, p.year);
        }
    }
    for (int fy : first_year) ++rows[static_cast<std::size_t>(fy - lo)].new_authors;

    std::size_t cum_p = 0, cum_a = 0;
    for (auto& r : rows) {
        cum_p += r.papers;
        cum_a += r.new_authors;
        r.cumulative_papers = cum_p;
        r.cumulative_authors = cum_a;
    }
    return rows;
}

}  // namespace coauth
