#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace flagspec {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Structural validation failures (bad design, bad graph, bad claim).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NonIntegralParams : public ValidationError {
 public:
  explicit NonIntegralParams(const std::string& what)
      : ValidationError("NonIntegralParams", what) {}
};

class MalformedDesign : public ValidationError {
 public:
  explicit MalformedDesign(const std::string& what)
      : ValidationError("MalformedDesign", what) {}
};

class UnequalBlockSizes : public ValidationError {
 public:
  explicit UnequalBlockSizes(const std::string& what)
      : ValidationError("UnequalBlockSizes", what) {}
};

class PairCountMismatch : public ValidationError {
 public:
  PairCountMismatch(int p, int q, long found, long expected);
  std::pair<int, int> pair() const noexcept { return pair_; }
  long found() const noexcept { return found_; }
  long expected() const noexcept { return expected_; }

 private:
  std::pair<int, int> pair_;
  long found_;
  long expected_;
};

class RepeatedBlock : public ValidationError {
 public:
  explicit RepeatedBlock(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class TrivialDesign : public ValidationError {
 public:
  explicit TrivialDesign(const std::string& what)
      : ValidationError("TrivialDesign", what) {}
};

class NotABiplane : public ValidationError {
 public:
  explicit NotABiplane(const std::string& what)
      : ValidationError("NotABiplane", what) {}
};

class InvalidGraph : public ValidationError {
 public:
  explicit InvalidGraph(const std::string& what)
      : ValidationError("InvalidGraph", what) {}
};

class SameVertex : public ValidationError {
 public:
  explicit SameVertex(int v)
      : ValidationError("SameVertex",
                        "common_neighbors needs two distinct vertices, got " +
                            std::to_string(v) + " twice") {}
};

class InvalidClaim : public ValidationError {
 public:
  explicit InvalidClaim(const std::string& what)
      : ValidationError("InvalidClaim", what) {}
};

class NonIntegralClaim : public ValidationError {
 public:
  explicit NonIntegralClaim(const std::string& what)
      : ValidationError("NonIntegralClaim", what) {}
};

class UnknownCatalogId : public ValidationError {
 public:
  explicit UnknownCatalogId(const std::string& id)
      : ValidationError("UnknownCatalogId", "unknown catalog id '" + id + "'") {}
};

class UnknownGraphName : public ValidationError {
 public:
  explicit UnknownGraphName(const std::string& name)
      : ValidationError("UnknownGraphName",
                        "unknown reference graph '" + name + "'") {}
};

/// Malformed interchange text (JSON, graph6, claim strings).
class ParseError : public ValidationError {
 public:
  explicit ParseError(const std::string& what)
      : ValidationError("ParseError", what) {}
};

/// Unreadable or missing input files.
class FileError : public Error {
 public:
  explicit FileError(const std::string& what) : Error("FileError", what) {}
};

}  // namespace flagspec
