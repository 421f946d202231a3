#pragma once

// A session is a parsed field + twist specification: either F_{p^h} with a
// Frobenius power and zero/inner delta, or F_p(y) with Frobenius/identity
// sigma and zero/(d/dy) delta.

#include <string>
#include <variant>
#include <vector>

#include "skewlab/twist.hpp"

namespace skewlab {

struct Session {
  std::variant<FqTwist, FuncTwist> twist;
  int jobs = 1;
  std::vector<std::string> warnings;

  bool is_fq() const { return std::holds_alternative<FqTwist>(twist); }
  const FqTwist& fq() const { return std::get<FqTwist>(twist); }
  const FuncTwist& func() const { return std::get<FuncTwist>(twist); }
  std::string describe() const {
    return is_fq() ? fq().describe() : func().describe();
  }
};

// field: "p^h", "p^h/mod=[c0,...]", or "funcfield:p".
// sigma: finite field: a Frobenius power ("1", "r=1"; default 1, or 0 when
//        h = 1); function field: "frob" (default) or "id".
// delta: "zero" (default), "inner:ELEM" (finite field), "ddy" (function
//        field, sigma = id).  inner with c = 0 or r = 0 is normalized to
//        zero with a warning.
Session make_session(const std::string& field, const std::string& sigma, const std::string& delta);

}  // namespace skewlab
