#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coauth {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MalformedName : public Error {
  public:
    explicit MalformedName(const std::string& msg) : Error(msg) {}
};

/// A malformed input row. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

  private:
    std::size_t line_;
    std::string reason_;
};

class DuplicatePaperId : public Error {
  public:
    explicit DuplicatePaperId(const std::string& id)
        : Error("duplicate paper id '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

  private:
    std::string id_;
};

class EmptyCorpus : public Error {
  public:
    EmptyCorpus() : Error("corpus contains no valid records") {}
};

class DegenerateFit : public Error {
  public:
    explicit DegenerateFit(const std::string& msg) : Error(msg) {}
};

class UndefinedCorrelation : public Error {
  public:
    explicit UndefinedCorrelation(const std::string& msg) : Error(msg) {}
};

class UndefinedMixing : public Error {
  public:
    explicit UndefinedMixing(const std::string& msg) : Error(msg) {}
};

}  // namespace coauth
