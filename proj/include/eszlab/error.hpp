#pragma once

#include <stdexcept>
#include <string>

namespace eszlab {

// Stable error codes so callers (and the CLI) can distinguish failure modes
// without string matching.
enum class errc {
  division_by_zero,
  parse,
  unknown_variable,
  zero_polynomial,
  degree,
  not_squarefree,
  decomposition_identity,
  decomposition_has_z,
  decomposition_no_z_dep,
  decomposition_degree,
  budget_exceeded,
  collinear,
  coincident_points,
  not_a_square,
  not_a_kth_power,
  zero_shift,
  zero_element,
  range_too_small,
  invalid_argument,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

// Parse failures additionally carry the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& what, errc code = errc::parse)
      : Error(code, what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace eszlab
