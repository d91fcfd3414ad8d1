#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coauth/name.hpp"

namespace coauth {

struct PaperRecord {
    std::string id;
    int year = 0;
    std::vector<AuthorKey> authors;  // no duplicates, size >= 1

    bool operator==(const PaperRecord&) const = default;
};

enum class InputFormat { jsonl, csv };

std::optional<InputFormat> format_from_string(const std::string& s);

/// The archive: papers in input order plus the distinct-author set.
///
/// Authors are indexed by first appearance, so with papers P1:[A1,A2] and
/// P2:[A2,A3,A4] the author indices come out as A1..A4 in that order.
class Corpus {
  public:
    Corpus() = default;

    /// Appends a paper; keys must already be normalized and duplicate-free.
    /// Throws DuplicatePaperId. `raw_names` is the number of author-line
    /// entries the record had before de-duplication.
    void add_paper(PaperRecord paper, std::size_t raw_names);

    /// Remembers a human-readable label for a key (first one wins).
    void set_display_name(const AuthorKey& key, const std::string& name);

    const std::vector<PaperRecord>& papers() const noexcept { return papers_; }
    const std::vector<AuthorKey>& authors() const noexcept { return authors_; }
    std::size_t paper_count() const noexcept { return papers_.size(); }
    std::size_t author_count() const noexcept { return authors_.size(); }
    std::size_t raw_name_count() const noexcept { return raw_name_count_; }
    /// Sum over papers of M_i.
    std::size_t authorship_count() const noexcept { return authorship_count_; }

    /// O(log M) lookup in the ordered author index.
    std::optional<std::size_t> author_index(const AuthorKey& key) const;
    std::string display_name(std::size_t author) const;

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

    bool empty() const noexcept { return papers_.empty(); }

    /// Equality over papers, authors and L; display names and warnings are
    /// presentation only.
    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.papers_ == b.papers_ && a.authors_ == b.authors_ &&
               a.raw_name_count_ == b.raw_name_count_;
    }

  private:
    std::vector<PaperRecord> papers_;
    std::vector<AuthorKey> authors_;
    std::map<AuthorKey, std::size_t> author_index_;
    std::map<std::string, std::size_t> paper_ids_;
    std::map<std::size_t, std::string> display_;
    std::size_t raw_name_count_ = 0;
    std::size_t authorship_count_ = 0;
    std::vector<std::string> warnings_;
};

/// Throws ParseError, DuplicatePaperId, EmptyCorpus.
Corpus parse_corpus(std::istream& in, InputFormat format);
Corpus parse_corpus_file(const std::string& path, InputFormat format);

/// Canonical JSONL rendering (keys in their text form).
void write_jsonl(const Corpus& c, std::ostream& out);

struct YearRow {
    int year = 0;
    std::size_t papers = 0;
    std::size_t new_authors = 0;
    std::size_t cumulative_papers = 0;
    std::size_t cumulative_authors = 0;
};

/// Per-year counts from the first to the last year, zero years included.
std::vector<YearRow> corpus_summary(const Corpus& c);

}  // namespace coauth
