#pragma once

// Text forms.  Field elements: "z^u", bracketed coefficient vectors
// "[c0,c1,...]", integers, and for F_p(y) expressions in y with + - * / and
// parentheses.  Skew polynomials: "c0 + c1*t + ... + cn*t^n" (any term
// order), with parentheses around composite coefficients, or a JSON array
// of coefficient literals, low-to-high.  Parse errors carry the offending
// position.

#include <string>

#include "skewlab/irred.hpp"
#include "skewlab/skew.hpp"
#include "skewlab/twist.hpp"

namespace skewlab {

class ParseError : public std::invalid_argument {
 public:
  ParseError(size_t pos, const std::string& what)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what),
        pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

FqIdx parse_fq_elem(const FqContext& F, const std::string& s);
RatFunc parse_ratfunc(const FuncField& K, const std::string& s);
SkewPolyFq parse_skew_fq(const FqTwist& tw, const std::string& s);
SkewPolyFunc parse_skew_func(const FuncTwist& tw, const std::string& s);

std::string format_fq_elem(const FqContext& F, FqIdx a);
std::string format_ratfunc(const FuncField& K, const RatFunc& a);
std::string format_skew_fq(const FqTwist& tw, const SkewPolyFq& f);
std::string format_skew_func(const FuncTwist& tw, const SkewPolyFunc& f);

}  // namespace skewlab
