#pragma once

#include <stdexcept>
#include <string>

namespace entgraph {

// Input/format problems (graph files, state JSON). CLI maps these to exit 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Tolerance violations, non-convergence, ambiguous verdicts. CLI maps these to exit 3.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No realizing state found for a graph. CLI maps this to exit 1.
class synthesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace entgraph
