#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace residuum {

enum class Errc {
  invalid_argument,
  overflow,
  zero_input,
  odd_input,
  not_ordered,     // expected M > N
  below_minimum,   // expected N >= 1
  not_coprime,
  same_parity,
  not_divisor,
  non_integral,
  bad_ending,      // final decimal digit outside the admissible set
  outside_class,
  negative_radicand,
  irrational_root,
  domain,
  syntax,
  unknown_identifier,
  grid_mismatch,
  boundary_violation,
  unknown_claim,
  io,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Syntax and identifier errors from the coefficient parser carry the byte
// offset into the source text.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, const std::string& what)
      : Error(code, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace residuum
