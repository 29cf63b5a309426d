#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclen {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain (bad vertex id, empty set, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Malformed graph6 text or named-graph expression.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A lemma or theorem precondition does not hold on the given input.
class HypothesisError : public Error {
public:
    HypothesisError(std::string hypothesis, const std::string& detail)
        : Error("hypothesis not met: " + hypothesis + (detail.empty() ? "" : " (" + detail + ")")),
          hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

// Input exceeds a desk-scale cap (exact spectrum, path oracle, generator).
class Refused : public Error {
public:
    using Error::Error;
};

// A search that a proven statement guarantees to succeed came back empty.
// Never caught silently: it means either a bug here or a counterexample.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

}  // namespace cyclen
