#include "coauth/name.hpp"

#include <algorithm>
#include <array>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "coauth/error.hpp"

namespace coauth {

namespace {

using icu::UnicodeString;

UnicodeString strip_marks(const UnicodeString& in) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
    if (U_FAILURE(status)) throw Error("ICU NFD normalizer unavailable");
    UnicodeString decomposed = nfd->normalize(in, status);
    if (U_FAILURE(status)) throw Error("ICU normalization failed");

    UnicodeString out;
    for (int32_t i = 0; i < decomposed.length();) {
        UChar32 c = decomposed.char32At(i);
        if (u_charType(c) != U_NON_SPACING_MARK) out.append(c);
        i += U16_LENGTH(c);
    }
    return out;
}

std::string to_utf8(const UnicodeString& s) {
    std::string out;
    s.toUTF8String(out);
    return out;
}

UnicodeString letters_only(const UnicodeString& s) {
    UnicodeString out;
    for (int32_t i = 0; i < s.length();) {
        UChar32 c = s.char32At(i);
        if (u_isalpha(c)) out.append(c);
        i += U16_LENGTH(c);
    }
    return out;
}

std::string folded_letters(const UnicodeString& s) {
    UnicodeString l = letters_only(s);
    l.foldCase();
    return to_utf8(l);
}

std::vector<UnicodeString> split_on(const UnicodeString& s, bool (*is_sep)(UChar32)) {
    std::vector<UnicodeString> parts;
    UnicodeString cur;
    for (int32_t i = 0; i < s.length();) {
        UChar32 c = s.char32At(i);
        if (is_sep(c)) {
            parts.push_back(cur);
            cur.remove();
        } else {
            cur.append(c);
        }
        i += U16_LENGTH(c);
    }
    parts.push_back(cur);
    return parts;
}

bool is_space(UChar32 c) { return u_isUWhiteSpace(c); }
bool is_comma(UChar32 c) { return c == ','; }
bool is_initial_sep(UChar32 c) { return c == '.' || c == '-' || c == 0x2010 || c == 0x2011; }

// Whitespace tokens that contain at least one letter.
std::vector<UnicodeString> words(const UnicodeString& s) {
    std::vector<UnicodeString> out;
    for (auto& w : split_on(s, is_space))
        if (!letters_only(w).isEmpty()) out.push_back(w);
    return out;
}

bool is_particle(const UnicodeString& token) {
    static constexpr std::array<std::string_view, 17> particles = {
        "de", "del", "dela", "delos", "delas", "la", "las", "los", "van",
        "von", "der", "den", "da", "di", "du", "dos", "das"};
    const std::string f = folded_letters(token);
    return std::find(particles.begin(), particles.end(), f) != particles.end();
}

bool is_suffix(const UnicodeString& token) {
    UnicodeString t = token;
    t.trim();
    if (t.endsWith(UnicodeString(".")) ) t.truncate(t.length() - 1);
    // Internal punctuation means initials ("I.V."), not a suffix.
    if (letters_only(t).length() != t.length()) return false;
    static constexpr std::array<std::string_view, 5> suffixes = {"jr", "sr", "ii", "iii", "iv"};
    t.foldCase();
    return std::find(suffixes.begin(), suffixes.end(), to_utf8(t)) != suffixes.end();
}

bool has_lowercase(const UnicodeString& s) {
    for (int32_t i = 0; i < s.length();) {
        UChar32 c = s.char32At(i);
        if (u_islower(c)) return true;
        i += U16_LENGTH(c);
    }
    return false;
}

// "PC", "JDL": a short all-caps token reads as a cluster of initials.
bool is_initial_cluster(const UnicodeString& part) {
    const UnicodeString l = letters_only(part);
    return l.length() >= 2 && l.length() <= 3 && l == part && !has_lowercase(l);
}

// Drops suffix tokens but never the last remaining one.
void drop_suffixes(std::vector<UnicodeString>& tokens, std::vector<std::string>& warnings,
                   const std::string& raw) {
    for (auto it = tokens.begin(); it != tokens.end() && tokens.size() > 1;) {
        if (is_suffix(*it)) {
            warnings.push_back("suffix '" + to_utf8(*it) + "' dropped from name '" + raw + "'");
            it = tokens.erase(it);
        } else {
            ++it;
        }
    }
}

}  // namespace

std::string fold_text(std::string_view utf8) {
    UnicodeString s = strip_marks(UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), utf8.size())));
    s.foldCase();
    return to_utf8(s);
}

std::string AuthorKey::to_string() const {
    std::string out = surname;
    if (initials.empty()) return out;
    out += ", ";
    // initials are ASCII after folding in the common case, but may be
    // multi-byte; walk code points.
    UnicodeString ini = UnicodeString::fromUTF8(initials);
    for (int32_t i = 0; i < ini.length();) {
        UChar32 c = ini.char32At(i);
        out += to_utf8(UnicodeString(c));
        out += '.';
        i += U16_LENGTH(c);
    }
    return out;
}

NormalizedName normalize_name_detailed(std::string_view raw) {
    const std::string raw_str(raw);
    UnicodeString s = strip_marks(UnicodeString::fromUTF8(icu::StringPiece(raw.data(), raw.size())));
    s.trim();
    if (s.isEmpty()) throw MalformedName("empty author name");

    NormalizedName result;
    const bool all_upper = !has_lowercase(s);

    std::vector<UnicodeString> surname_tokens;
    std::vector<UnicodeString> given_tokens;

    std::vector<UnicodeString> parts;
    for (auto& p : split_on(s, is_comma))
        if (!letters_only(p).isEmpty()) parts.push_back(p);
    if (parts.empty()) throw MalformedName("no surname in '" + raw_str + "'");

    const bool has_comma = s.indexOf(UChar(',')) >= 0;
    if (has_comma && parts.size() >= 2) {
        surname_tokens = words(parts[0]);
        drop_suffixes(surname_tokens, result.warnings, raw_str);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            auto w = words(parts[i]);
            given_tokens.insert(given_tokens.end(), w.begin(), w.end());
        }
        for (auto it = given_tokens.begin(); it != given_tokens.end();) {
            if (is_suffix(*it)) {
                result.warnings.push_back("suffix '" + to_utf8(*it) + "' dropped from name '" + raw_str + "'");
                it = given_tokens.erase(it);
            } else {
                ++it;
            }
        }
    } else {
        auto tokens = words(parts[0]);
        drop_suffixes(tokens, result.warnings, raw_str);
        std::size_t start = tokens.size() - 1;
        while (start >= 2 && is_particle(tokens[start - 1])) --start;
        surname_tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(start), tokens.end());
        given_tokens.assign(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(start));
    }

    for (const auto& t : surname_tokens) result.key.surname += folded_letters(t);
    if (result.key.surname.empty()) throw MalformedName("no surname in '" + raw_str + "'");

    for (const auto& t : given_tokens) {
        for (const auto& part : split_on(t, is_initial_sep)) {
            UnicodeString l = letters_only(part);
            if (l.isEmpty()) continue;
            if (!all_upper && is_initial_cluster(part)) {
                l.foldCase();
                result.key.initials += to_utf8(l);
            } else {
                UnicodeString first(l.char32At(0));
                first.foldCase();
                result.key.initials += to_utf8(first);
            }
        }
    }
    return result;
}

}  // namespace coauth
