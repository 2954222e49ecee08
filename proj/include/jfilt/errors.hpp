#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jfilt {

using Integer = mpz_class;

// Malformed input: bad generator index, alphabet mismatch, broken graph data.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold. The message
// starts with the name of the violated clause.
class PreconditionError : public std::logic_error {
public:
    PreconditionError(const std::string& clause, const std::string& detail)
        : std::logic_error(clause + ": " + detail), clause_(clause) {}

    const std::string& clause() const { return clause_; }

private:
    std::string clause_;
};

} // namespace jfilt
