#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "liekms/errors.hpp"
#include "liekms/lie_algebra.hpp"

namespace liekms {

/// Parses a linear combination of basis labels with rational coefficients:
///   expr := [sign] term (sign term)*
///   term := [rational "*"] label,  rational := "p" | "p/q"
/// Whitespace-insensitive. Unknown labels and malformed rationals raise
/// parse_error with the offending position.
inline Element parse_element(const AlgebraPtr& algebra, const std::string& expr) {
  std::vector<Rational> coords(algebra->dim());
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
    if (pos == start) throw parse_error("expected digits", start);
    return expr.substr(start, pos - start);
  };

  skip_ws();
  if (pos == expr.size()) throw parse_error("empty element expression", pos);

  bool first = true;
  while (true) {
    skip_ws();
    if (pos == expr.size()) break;
    int sign = 1;
    if (expr[pos] == '+' || expr[pos] == '-') {
      sign = expr[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms", pos);
    }
    skip_ws();
    if (pos == expr.size()) throw parse_error("dangling sign at end of expression", pos);

    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(expr[pos]))) {
      std::size_t coeff_pos = pos;
      std::string num = read_digits();
      std::string den = "1";
      if (pos < expr.size() && expr[pos] == '/') {
        ++pos;
        if (pos == expr.size() || !std::isdigit(static_cast<unsigned char>(expr[pos])))
          throw parse_error("malformed rational: missing denominator", pos);
        den = read_digits();
      }
      try {
        coeff = Rational::parse(num + "/" + den);
      } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), coeff_pos);
      }
      skip_ws();
      if (pos == expr.size() || expr[pos] != '*')
        throw parse_error("expected '*' between coefficient and label", pos);
      ++pos;
      skip_ws();
    }

    std::size_t label_pos = pos;
    while (pos < expr.size() &&
           (std::isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_'))
      ++pos;
    if (pos == label_pos) throw parse_error("expected basis label", label_pos);
    std::string label = expr.substr(label_pos, pos - label_pos);
    int index = algebra->label_index(label);
    if (index < 0) throw parse_error("unknown basis label '" + label + "'", label_pos);
    coords[index] += Rational(sign) * coeff;
    first = false;
  }
  return Element(algebra, std::move(coords));
}

}  // namespace liekms
