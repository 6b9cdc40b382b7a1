#ifndef SPECNET_ERRORS_HPP
#define SPECNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specnet {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorCategory {
    usage = 2,       // bad invocation, unknown metric name, malformed request
    validation = 3,  // input violates a structural invariant
    domain = 4,      // operation undefined for the given values
    io = 5,          // file system / parse-level failure
};

inline const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::usage: return "usage";
        case ErrorCategory::validation: return "validation";
        case ErrorCategory::domain: return "domain";
        case ErrorCategory::io: return "io";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }
    int exit_code() const { return static_cast<int>(category_); }

private:
    ErrorCategory category_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(ErrorCategory::usage, m) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error(ErrorCategory::validation, m) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& m) : Error(ErrorCategory::domain, m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCategory::io, m) {}
};

}  // namespace specnet

#endif
