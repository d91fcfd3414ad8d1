#pragma once

#include <sstream>
#include <string>

#include "coauth/corpus.hpp"

namespace testing {

// Two-paper archive: P1 by A1, A2; P2 by A2, A3, A4.
inline const char* kWorkedExample =
    "{\"id\":\"P1\",\"year\":2000,\"authors\":[\"Alpha\",\"Bravo\"]}\n"
    "{\"id\":\"P2\",\"year\":2001,\"authors\":[\"Bravo\",\"Charlie\",\"Delta\"]}\n";

inline coauth::Corpus parse_jsonl(const std::string& text) {
    std::istringstream in(text);
    return coauth::parse_corpus(in, coauth::InputFormat::jsonl);
}

inline coauth::Corpus worked_example() { return parse_jsonl(kWorkedExample); }

}  // namespace testing
