#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromafun {

// Input text could not be decoded (graph6, JSON, homomorphism vectors).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// A configured limit (vertex count, coloring budget, state budget) was exceeded.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace chromafun
