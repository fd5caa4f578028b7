#pragma once

#include <stdexcept>
#include <string>

namespace lensspec {

/// Base class for every error raised by the library. `kind()` is a stable
/// identifier used by the CLI for machine-parsable diagnostics.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

class InvalidParameters : public Error {
   public:
    explicit InvalidParameters(const std::string& what) : Error("InvalidParameters", what) {}
};

class DimensionMismatch : public Error {
   public:
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

/// A series expansion produced a nonzero coefficient at a negative power of z.
class NegativeOrderTerm : public Error {
   public:
    explicit NegativeOrderTerm(const std::string& what) : Error("NegativeOrderTerm", what) {}
};

class NotDominant : public Error {
   public:
    explicit NotDominant(const std::string& what) : Error("NotDominant", what) {}
};

class ParseError : public Error {
   public:
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace lensspec
