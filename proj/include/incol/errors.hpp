#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace incol {

/// Malformed input text (edge lists, DIMACS files, coloring documents).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A coloring document whose colors fall outside 1..num_colors or whose
/// assignment is not total over the graph's incidences.
class MalformedColoring : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algorithm's stated hypothesis does not hold for the input
/// (density bound violated, degeneracy too large, ...). Carries the
/// offending vertex set when one exists.
class HypothesisViolation : public std::runtime_error {
public:
    HypothesisViolation(std::string msg, std::vector<int> witness = {})
        : std::runtime_error(std::move(msg)), witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

/// A generator exhausted its retry budget without meeting its targets.
class GenerationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state the underlying theory rules out (peeling stalled on a graph
/// that must contain a reducible piece, or a local extension search that
/// must succeed came up empty). Carries the offending graph as edge-list
/// text so it can be preserved and inspected.
class InternalContradiction : public std::runtime_error {
public:
    InternalContradiction(std::string msg, std::string graph_text)
        : std::runtime_error(std::move(msg)), graph_text_(std::move(graph_text)) {}
    const std::string& graph_text() const { return graph_text_; }

private:
    std::string graph_text_;
};

/// Tiered repair search ran out of options; the local instance is attached.
class ExtensionExhausted : public InternalContradiction {
public:
    using InternalContradiction::InternalContradiction;
};

}  // namespace incol
