#ifndef ARBOREAL_PARSE_HPP
#define ARBOREAL_PARSE_HPP

#include <stdexcept>
#include <string>

#include "arboreal/ratfunc.hpp"

namespace arboreal {

// Grammar: integer and p/q rational literals, variable t, operators
// + - * ^, parentheses, / between polynomial expressions for rational
// functions. Whitespace insignificant.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " +
                           std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

RatFunc parse_ratfunc(const std::string& text);
// Like parse_ratfunc but rejects inputs whose reduced form has a
// nonconstant denominator.
Poly parse_poly(const std::string& text);

// Canonical text form; render/parse round-trips exactly.
std::string render(const Poly& p);
std::string render(const RatFunc& f);

}  // namespace arboreal

#endif
