#pragma once

#include <stdexcept>
#include <string>

namespace pansharp {

// Base type for every library error so callers can catch one thing.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidKernel : Error {
  explicit InvalidKernel(const std::string& msg) : Error(msg) {}
};

struct InvalidRange : Error {
  explicit InvalidRange(const std::string& msg) : Error(msg) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

struct NothingToSynthesize : Error {
  explicit NothingToSynthesize(const std::string& msg) : Error(msg) {}
};

struct TooFewBands : Error {
  explicit TooFewBands(const std::string& msg) : Error(msg) {}
};

struct BandIndexError : Error {
  explicit BandIndexError(const std::string& msg) : Error(msg) {}
};

struct ImageTooSmall : Error {
  explicit ImageTooSmall(const std::string& msg) : Error(msg) {}
};

struct StaleTape : Error {
  explicit StaleTape(const std::string& msg) : Error(msg) {}
};

struct NonFiniteGradient : Error {
  explicit NonFiniteGradient(const std::string& msg) : Error(msg) {}
};

struct EmptyCorpus : Error {
  explicit EmptyCorpus(const std::string& msg) : Error(msg) {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& msg) : Error(msg) {}
};

// Malformed file content; carries the byte offset where parsing stopped.
struct FormatError : Error {
  FormatError(const std::string& msg, std::size_t offset)
      : Error(msg + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace pansharp
