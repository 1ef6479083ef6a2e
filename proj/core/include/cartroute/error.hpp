#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartroute {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments or violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `location` is a byte offset for XML and a 1-based
/// line number for the line-oriented formats; `location_kind` says which.
class ParseError : public Error {
 public:
  enum class Location { kByteOffset, kLine, kNone };

  ParseError(const std::string& what, Location kind, std::uint64_t location)
      : Error(what), kind_(kind), location_(location) {}
  explicit ParseError(const std::string& what)
      : Error(what), kind_(Location::kNone), location_(0) {}

  Location location_kind() const noexcept { return kind_; }
  std::uint64_t location() const noexcept { return location_; }

 private:
  Location kind_;
  std::uint64_t location_;
};

/// Nodes that the elevation source does not cover.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& what, std::vector<std::int64_t> node_ids)
      : Error(what), node_ids_(std::move(node_ids)) {}

  const std::vector<std::int64_t>& node_ids() const noexcept { return node_ids_; }

 private:
  std::vector<std::int64_t> node_ids_;
};

class NoPathError : public Error {
 public:
  NoPathError(const std::string& what, std::int64_t source, std::int64_t target)
      : Error(what), source_(source), target_(target) {}

  std::int64_t source() const noexcept { return source_; }
  std::int64_t target() const noexcept { return target_; }

 private:
  std::int64_t source_;
  std::int64_t target_;
};

class NegativeCycleError : public Error {
 public:
  NegativeCycleError(const std::string& what, std::int64_t witness)
      : Error(what), witness_(witness) {}

  /// A node whose distance kept decreasing; lies on or downstream of the cycle.
  std::int64_t witness() const noexcept { return witness_; }

 private:
  std::int64_t witness_;
};

}  // namespace cartroute
