#include "skewlab/session.hpp"

#include <stdexcept>

#include "skewlab/parse.hpp"

namespace skewlab {

namespace {

int64_t parse_int(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(std::string("invalid ") + what + ": '" + s + "'");
  }
}

}  // namespace

Session make_session(const std::string& field, const std::string& sigma, const std::string& delta) {
  std::vector<std::string> warnings;

  if (field.rfind("funcfield:", 0) == 0) {
    int64_t p = parse_int(field.substr(10), "function field characteristic");
    FuncField K(p);
    FuncSigmaKind sk;
    std::string sg = sigma.empty() ? "frob" : sigma;
    if (sg == "frob" || sg == "frobenius")
      sk = FuncSigmaKind::Frobenius;
    else if (sg == "id" || sg == "identity")
      sk = FuncSigmaKind::Identity;
    else
      throw std::invalid_argument("function-field sigma must be 'frob' or 'id'");
    std::string dl = delta.empty() ? "zero" : delta;
    FuncDeltaKind dk;
    if (dl == "zero")
      dk = FuncDeltaKind::Zero;
    else if (dl == "ddy")
      dk = FuncDeltaKind::Ddy;
    else if (dl.rfind("inner", 0) == 0)
      throw std::invalid_argument("inner derivations are a finite-field feature");
    else
      throw std::invalid_argument("function-field delta must be 'zero' or 'ddy'");
    Session s{FuncTwist(K, sk, dk), 1, std::move(warnings)};
    return s;
  }

  // finite field: p^h with optional /mod=[...]
  std::string spec = field;
  std::optional<FpPoly> modulus;
  size_t slash = spec.find('/');
  if (slash != std::string::npos) {
    std::string modpart = spec.substr(slash + 1);
    spec = spec.substr(0, slash);
    if (modpart.rfind("mod=", 0) != 0) throw std::invalid_argument("expected /mod=[...] in field spec");
    std::string vec = modpart.substr(4);
    if (vec.size() < 2 || vec.front() != '[' || vec.back() != ']')
      throw std::invalid_argument("modulus must be a bracketed coefficient vector");
    FpPoly m;
    std::string body = vec.substr(1, vec.size() - 2);
    size_t start = 0;
    while (start < body.size()) {
      size_t end = body.find(',', start);
      std::string tok = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
      m.push_back(parse_int(tok, "modulus coefficient"));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    modulus = std::move(m);
  }
  size_t caret = spec.find('^');
  int64_t p;
  int h;
  if (caret == std::string::npos) {
    p = parse_int(spec, "field order");
    h = 1;
  } else {
    p = parse_int(spec.substr(0, caret), "characteristic");
    h = static_cast<int>(parse_int(spec.substr(caret + 1), "extension degree"));
  }
  auto F = std::make_shared<const FqContext>(p, h, modulus);

  int64_t r;
  if (sigma.empty()) {
    r = h > 1 ? 1 : 0;
  } else {
    std::string sg = sigma;
    if (sg.rfind("r=", 0) == 0) sg = sg.substr(2);
    if (sg == "id" || sg == "identity")
      r = 0;
    else
      r = parse_int(sg, "sigma power");
  }

  std::string dl = delta.empty() ? "zero" : delta;
  FqDeltaKind dk = FqDeltaKind::Zero;
  FqIdx c = 0;
  if (dl == "zero") {
    dk = FqDeltaKind::Zero;
  } else if (dl.rfind("inner:", 0) == 0) {
    dk = FqDeltaKind::Inner;
    c = parse_fq_elem(*F, dl.substr(6));
  } else if (dl == "ddy") {
    throw std::invalid_argument("d/dy is a function-field feature");
  } else {
    throw std::invalid_argument("finite-field delta must be 'zero' or 'inner:ELEM'");
  }

  FqTwist tw(F, r, dk, c);
  if (dk == FqDeltaKind::Inner && tw.delta_kind() == FqDeltaKind::Zero)
    warnings.push_back("inner derivation is trivial here (c = 0 or sigma = id); using delta = zero");
  Session s{std::move(tw), 1, std::move(warnings)};
  return s;
}

}  // namespace skewlab
