#pragma once

#include <stdexcept>
#include <string>

namespace hda {

/// Malformed input: bad JSON, unknown fields, unresolved ids on the command line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed model that fails structural validation.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path argument that is not a cube path, or a junction that does not compose.
class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A homotopy-class closure grew past the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string what, std::size_t cap)
      : std::runtime_error(std::move(what)), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace hda
