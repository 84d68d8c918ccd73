#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sqlsynth {

// Base class for every failure the library reports. `kind()` carries the
// machine-readable error name so CLI layers can map errors to exit codes
// without string-matching messages.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

// Parsing -------------------------------------------------------------

class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& message, std::size_t byte_offset)
        : Error("SyntaxError", message + " (at byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

  private:
    std::size_t byte_offset_;
};

class UnsupportedFeature : public Error {
  public:
    explicit UnsupportedFeature(const std::string& construct)
        : Error("UnsupportedFeature", construct) {}
};

class UnknownIdentifier : public Error {
  public:
    explicit UnknownIdentifier(const std::string& message) : Error("UnknownIdentifier", message) {}
};

class IncompleteTree : public Error {
  public:
    explicit IncompleteTree(const std::string& message) : Error("IncompleteTree", message) {}
};

// Templates / schema --------------------------------------------------

class EmptySeedSet : public Error {
  public:
    explicit EmptySeedSet(const std::string& message) : Error("EmptySeedSet", message) {}
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& message) : Error("ValidationError", message) {}
};

class AliasCollision : public Error {
  public:
    explicit AliasCollision(const std::string& message) : Error("AliasCollision", message) {}
};

// Generation ----------------------------------------------------------

class NoEligibleTable : public Error {
  public:
    explicit NoEligibleTable(const std::string& message) : Error("NoEligibleTable", message) {}
};

class NoEligibleColumn : public Error {
  public:
    explicit NoEligibleColumn(const std::string& message) : Error("NoEligibleColumn", message) {}
};

class EmptyColumn : public Error {
  public:
    explicit EmptyColumn(const std::string& message) : Error("EmptyColumn", message) {}
};

// Backends ------------------------------------------------------------

class BackendUnavailable : public Error {
  public:
    explicit BackendUnavailable(const std::string& message)
        : Error("BackendUnavailable", message) {}
};

class MalformedResponse : public Error {
  public:
    explicit MalformedResponse(const std::string& message) : Error("MalformedResponse", message) {}
};

class RateLimited : public Error {
  public:
    explicit RateLimited(const std::string& message) : Error("RateLimited", message) {}
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& message) : Error("DimensionMismatch", message) {}
};

class ZeroVector : public Error {
  public:
    explicit ZeroVector(const std::string& message) : Error("ZeroVector", message) {}
};

// Database / evaluation -----------------------------------------------

class SqlError : public Error {
  public:
    explicit SqlError(const std::string& message) : Error("SqlError", message) {}
};

class Timeout : public Error {
  public:
    explicit Timeout(const std::string& message) : Error("Timeout", message) {}
};

class GoldFailure : public Error {
  public:
    explicit GoldFailure(const std::string& message) : Error("GoldFailure", message) {}
};

class LengthMismatch : public Error {
  public:
    explicit LengthMismatch(const std::string& message) : Error("LengthMismatch", message) {}
};

// Files ---------------------------------------------------------------

class FormatError : public Error {
  public:
    explicit FormatError(const std::string& message) : Error("FormatError", message) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& message) : Error("IoError", message) {}
};

class InsufficientPairs : public Error {
  public:
    explicit InsufficientPairs(const std::string& message) : Error("InsufficientPairs", message) {}
};

}  // namespace sqlsynth
