#pragma once

#include <iosfwd>
#include <string>

#include "tc/algebra.hpp"

namespace tc {

// Line-oriented algebra presentation format.
//
//   field Q            rational coefficients
//   field F <p>        prime-field coefficients
//   basis <name> <d>   one basis element of degree d; the first one is the
//                      unit and must have degree 0
//   prod <a> <b> = <term> [+|- <term> ...]
//                      structure constants; a term is `<coeff>*<name>` or a
//                      bare `<name>` (coefficient 1); coefficients are exact
//                      rationals like 2, -1, 1/2
//
// Omitted pairs are zero, so unit rows (`prod 1 x = x`) must be written out.
// Only one orientation of a pair is required; the mirror follows from graded
// commutativity.  Blank lines and lines starting with '#' are ignored.  The
// field line must precede everything else.
class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Presentation parse_presentation(std::istream& in, const std::string& label);
Presentation parse_presentation_text(const std::string& text,
                                     const std::string& label);
Presentation load_presentation(const std::string& path);

// Deterministic serialization: field, basis in declared order, then the
// nonzero products with i <= j in row-major order.  Parsing the output
// reproduces the same validated algebra.
std::string serialize_presentation(const Presentation& p);

}  // namespace tc
