#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "factineq/chebyshev.hpp"
#include "factineq/claims.hpp"
#include "factineq/errors.hpp"

namespace factineq {

/// A claim file could not be read or parsed.
class ClaimFileError : public Error {
 public:
  ClaimFileError(std::string path, std::size_t line, std::size_t offset, const std::string& message)
      : Error(path + ":" + std::to_string(line) + ":" + std::to_string(offset) + ": " + message),
        path_(std::move(path)),
        line_(line),
        offset_(offset) {}

  const std::string& path() const noexcept { return path_; }
  /// 1-based line number, 0 when the file itself could not be read.
  std::size_t line() const noexcept { return line_; }
  /// Byte offset within the line.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string path_;
  std::size_t line_;
  std::size_t offset_;
};

struct ClaimEntry {
  std::string name;
  std::string summand;
  Relation relation;
  std::string bound;
  std::size_t line = 0;
};

/// Parsed contents of a line-oriented claim file:
///
///   # comment
///   claim <name> : sum <expr-in-k> (<=|>=) <expr-in-n>
struct ClaimFile {
  std::string path;
  std::vector<ClaimEntry> entries;

  /// Claims registered under "user.<name>".
  std::vector<BoundClaim> claims() const;
};

inline constexpr std::string_view kUserNamespace = "user.";

/// Parses claim-file text. Throws ClaimFileError with line and offset.
ClaimFile parseClaimFile(std::string_view text, std::string path = "<input>");

/// Reads and parses a claim file from disk.
ClaimFile loadClaimFile(const std::filesystem::path& path);

}  // namespace factineq
