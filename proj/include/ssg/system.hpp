#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/polynomial.hpp"
#include "ssg/ring.hpp"

namespace ssg {

/// A polynomial system read from text. Variable i of the ring is named
/// variables[i]; variable 0 is the greatest.
struct SystemDescription {
  Ring ring;
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads a system in the line format
///
///     ring <prime> <grevlex|lex> <var> <var> ...
///     <polynomial>
///     ...
///
/// `#` starts a comment. A polynomial is a sum of signed terms; a term is a
/// product of integers and `var` or `var^exp` factors, joined by `*` or plain
/// juxtaposition. Integers are reduced modulo the prime.
SystemDescription parse_system(std::string_view text);

std::string format_ring_header(const SystemDescription& desc);
std::string format_polynomial(const Polynomial& p, std::span<const std::string> variables);
// Header line followed by one generator per line, as stored.
std::string format_system(const SystemDescription& desc);
// Header line followed by the basis made monic and sorted by ascending head.
std::string format_basis(std::span<const Polynomial> basis, const SystemDescription& desc);

}  // namespace ssg
