#pragma once

#include <stdexcept>
#include <string>

namespace irissr {

// I/O failures, split so callers can react to each case.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileNotFoundError : IoError {
    explicit FileNotFoundError(const std::string& path)
        : IoError("file not found: " + path) {}
};

struct MalformedFileError : IoError {
    using IoError::IoError;
};

struct UnsupportedFormatError : IoError {
    using IoError::IoError;
};

// Text-format parse failure; carries the 1-based line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_number(line) {}
    int line_number;
};

// Iteration blew up (non-finite values); names the offending iteration.
struct NumericalError : std::runtime_error {
    NumericalError(const std::string& what, int iteration)
        : std::runtime_error(what + " (iteration " + std::to_string(iteration) + ")"),
          iteration(iteration) {}
    int iteration;
};

// Model fitting did not converge.
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidAnnotationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace irissr
