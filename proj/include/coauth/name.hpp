#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coauth {

/// Disambiguation unit: case-folded surname plus given-name initials.
/// Two raw names with equal keys are treated as the same author.
struct AuthorKey {
    std::string surname;
    std::string initials;

    auto operator<=>(const AuthorKey&) const = default;
    bool operator==(const AuthorKey&) const = default;

    /// Canonical text form, e.g. "delacruz, j." or "naval, p.c.". Feeding it
    /// back through normalize_name yields the same key.
    std::string to_string() const;
};

struct NormalizedName {
    AuthorKey key;
    std::vector<std::string> warnings;
};

/// Parses "Given [Middle] Surname" or "Surname, Given [Middle]" into a key.
/// Throws MalformedName when no surname can be found.
NormalizedName normalize_name_detailed(std::string_view raw);

inline AuthorKey normalize_name(std::string_view raw) { return normalize_name_detailed(raw).key; }

/// NFD-decompose, drop combining marks, case-fold. UTF-8 in and out.
std::string fold_text(std::string_view utf8);

}  // namespace coauth
