#include "skewlab/parse.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

namespace skewlab {

namespace {

// Field-element expressions with + - * / ^ and parentheses; the variable is
// 'z' (finite field: the primitive element) or 'y' (function field).  A '*'
// directly followed by the skew variable 't' terminates the expression so
// coefficient and monomial can be split where they meet.
template <class Ops>
class ElemParser {
 public:
  ElemParser(const Ops& ops, const std::string& s, size_t pos = 0) : ops_(ops), s_(s), i_(pos) {}

  size_t pos() const { return i_; }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }

  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  void consume() {
    skip_ws();
    ++i_;
  }

  bool next_is_t() {
    size_t save = i_;
    skip_ws();
    bool yes = i_ < s_.size() && s_[i_] == 't';
    i_ = save;
    return yes;
  }

  int64_t parse_uint() {
    skip_ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      throw ParseError(i_, "expected a number");
    int64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > (int64_t(1) << 56)) throw ParseError(i_, "number too large");
      ++i_;
    }
    return v;
  }

  typename Ops::Value parse_expr() {
    auto v = parse_term();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++i_;
        auto w = parse_term();
        v = c == '+' ? ops_.add(v, w) : ops_.sub(v, w);
      } else {
        return v;
      }
    }
  }

  typename Ops::Value parse_term() {
    auto v = parse_factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        size_t save = i_;
        ++i_;
        if (next_is_t()) {  // the '*' belongs to "coef * t^k"
          i_ = save;
          return v;
        }
        v = ops_.mul(v, parse_factor());
      } else if (c == '/') {
        ++i_;
        size_t at = i_;
        auto w = parse_factor();
        if (ops_.is_zero(w)) throw ParseError(at, "division by zero");
        v = ops_.div(v, w);
      } else {
        return v;
      }
    }
  }

  typename Ops::Value parse_factor() {
    char c = peek();
    if (c == '-') {
      ++i_;
      return ops_.neg(parse_factor());
    }
    if (c == '+') {
      ++i_;
      return parse_factor();
    }
    auto v = parse_atom();
    if (peek() == '^') {
      ++i_;
      int64_t e = parse_uint();
      v = ops_.pow(v, e);
    }
    return v;
  }

  typename Ops::Value parse_atom() {
    char c = peek();
    if (c == '(') {
      ++i_;
      auto v = parse_expr();
      if (peek() != ')') throw ParseError(i_, "expected ')'");
      ++i_;
      return v;
    }
    if (c == '[') {
      size_t open = i_;
      ++i_;
      std::vector<int64_t> coeffs;
      if (peek() == ']') {
        ++i_;
        return ops_.from_coeffs(coeffs, open);
      }
      for (;;) {
        bool negc = false;
        if (peek() == '-') {
          ++i_;
          negc = true;
        }
        int64_t v = parse_uint();
        coeffs.push_back(negc ? -v : v);
        char d = peek();
        if (d == ',') {
          ++i_;
          continue;
        }
        if (d == ']') {
          ++i_;
          break;
        }
        throw ParseError(i_, "expected ',' or ']'");
      }
      return ops_.from_coeffs(coeffs, open);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ops_.from_int(parse_uint());
    if (c == ops_.variable()) {
      ++i_;
      return ops_.variable_value();
    }
    throw ParseError(i_, std::string("unexpected character '") + c + "'");
  }

 private:
  const Ops& ops_;
  const std::string& s_;
  size_t i_;
};

struct FqOps {
  using Value = FqIdx;
  const FqContext& F;
  char variable() const { return 'z'; }
  Value variable_value() const { return F.z(); }
  Value from_int(int64_t k) const { return F.from_int(k); }
  Value from_coeffs(const std::vector<int64_t>& c, size_t at) const {
    if (static_cast<int>(c.size()) > F.h())
      throw ParseError(at, "coefficient vector longer than the extension degree");
    FqElem e(c.begin(), c.end());
    return F.pack(e);
  }
  Value add(Value a, Value b) const { return F.add(a, b); }
  Value sub(Value a, Value b) const { return F.sub(a, b); }
  Value neg(Value a) const { return F.neg(a); }
  Value mul(Value a, Value b) const { return F.mul(a, b); }
  Value div(Value a, Value b) const { return F.mul(a, F.inv(b)); }
  Value pow(Value a, int64_t e) const { return F.pow(a, e); }
  bool is_zero(Value a) const { return a == 0; }
};

struct FuncOps {
  using Value = RatFunc;
  const FuncField& K;
  char variable() const { return 'y'; }
  Value variable_value() const { return K.y(); }
  Value from_int(int64_t k) const { return K.from_int(k); }
  Value from_coeffs(const std::vector<int64_t>& c, size_t) const {
    FpPoly f(c.begin(), c.end());
    for (auto& v : f) v = ((v % K.p()) + K.p()) % K.p();
    return K.from_poly(std::move(f));
  }
  Value add(const Value& a, const Value& b) const { return K.add(a, b); }
  Value sub(const Value& a, const Value& b) const { return K.sub(a, b); }
  Value neg(const Value& a) const { return K.neg(a); }
  Value mul(const Value& a, const Value& b) const { return K.mul(a, b); }
  Value div(const Value& a, const Value& b) const { return K.mul(a, K.inv(b)); }
  Value pow(const Value& a, int64_t e) const { return K.pow(a, e); }
  bool is_zero(const Value& a) const { return K.is_zero(a); }
};

}  // namespace

FqIdx parse_fq_elem(const FqContext& F, const std::string& s) {
  FqOps ops{F};
  ElemParser<FqOps> ep(ops, s);
  FqIdx v = ep.parse_expr();
  if (!ep.at_end()) throw ParseError(ep.pos(), "trailing input");
  return v;
}

RatFunc parse_ratfunc(const FuncField& K, const std::string& s) {
  FuncOps ops{K};
  ElemParser<FuncOps> ep(ops, s);
  RatFunc v = ep.parse_expr();
  if (!ep.at_end()) throw ParseError(ep.pos(), "trailing input");
  return v;
}

namespace {

template <class TW, class Ops>
SkewPoly<typename TW::Elem> parse_poly_terms(const TW& tw, const Ops& ops, const std::string& s) {
  {
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '[') {
      auto j = nlohmann::json::parse(s, nullptr, false);
      if (j.is_array()) {
        SkewPoly<typename TW::Elem> f;
        for (const auto& entry : j) {
          std::string lit = entry.is_string() ? entry.get<std::string>() : entry.dump();
          ElemParser<Ops> ep(ops, lit);
          auto v = ep.parse_expr();
          if (!ep.at_end()) throw ParseError(ep.pos(), "trailing input in coefficient");
          f.c.push_back(v);
        }
        sp_trim(tw, f);
        return f;
      }
      throw ParseError(i, "malformed JSON polynomial");
    }
  }
  SkewPoly<typename TW::Elem> f;
  ElemParser<Ops> ep(ops, s);
  bool first = true;
  while (!ep.at_end()) {
    bool negate = false;
    char c = ep.peek();
    if (c == '+' || c == '-') {
      ep.consume();
      negate = c == '-';
    } else if (!first) {
      throw ParseError(ep.pos(), "expected '+' or '-' between terms");
    }
    first = false;
    // term: coef, t^k, or coef * t^k; composite coefficients with top-level
    // '+' or '-' must be parenthesized
    typename Ops::Value coef;
    bool have_coef = false;
    if (ep.peek() != 't') {
      coef = ep.parse_term();
      have_coef = true;
    }
    int k = 0;
    bool have_t = false;
    if (ep.peek() == '*') {
      ep.consume();
      if (ep.peek() != 't') throw ParseError(ep.pos(), "expected 't' after '*'");
    }
    if (ep.peek() == 't') {
      ep.consume();
      have_t = true;
      k = 1;
      if (ep.peek() == '^') {
        ep.consume();
        k = static_cast<int>(ep.parse_uint());
        if (k > 1 << 16) throw ParseError(ep.pos(), "exponent too large");
      }
    }
    if (!have_coef && !have_t) throw ParseError(ep.pos(), "expected a term");
    typename Ops::Value value = have_coef ? coef : ops.from_int(1);
    if (negate) value = ops.neg(value);
    if (static_cast<int>(f.c.size()) <= k) f.c.resize(k + 1, tw.zero());
    f.c[k] = tw.add(f.c[k], value);
  }
  sp_trim(tw, f);
  return f;
}

}  // namespace

SkewPolyFq parse_skew_fq(const FqTwist& tw, const std::string& s) {
  FqOps ops{tw.field()};
  return parse_poly_terms(tw, ops, s);
}

SkewPolyFunc parse_skew_func(const FuncTwist& tw, const std::string& s) {
  FuncOps ops{tw.field()};
  return parse_poly_terms(tw, ops, s);
}

std::string format_fq_elem(const FqContext& F, FqIdx a) {
  if (a == 0) return "0";
  FqElem e = F.unpack(a);
  bool constant = true;
  for (int i = 1; i < F.h(); ++i)
    if (e[i] != 0) constant = false;
  if (constant) return std::to_string(e[0]);
  return "z^" + std::to_string(F.dlog(a));
}

namespace {

std::string format_fppoly(const FpPoly& f) {
  if (fp_is_zero(f)) return "0";
  std::string s;
  for (int i = fp_deg(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(f[i]);
    } else {
      if (f[i] != 1) s += std::to_string(f[i]) + "*";
      s += i == 1 ? "y" : "y^" + std::to_string(i);
    }
  }
  return s;
}

bool is_single_term(const FpPoly& f) {
  int nonzero = 0;
  for (auto c : f) nonzero += c != 0;
  return nonzero <= 1;
}

}  // namespace

std::string format_ratfunc(const FuncField& K, const RatFunc& a) {
  if (K.is_zero(a)) return "0";
  std::string num = format_fppoly(a.num);
  if (fp_deg(a.den) == 0) return num;  // den == 1
  if (!is_single_term(a.num)) num = "(" + num + ")";
  std::string den = format_fppoly(a.den);
  if (!is_single_term(a.den)) den = "(" + den + ")";
  return num + "/" + den;
}

namespace {

template <class TW, class Fmt>
std::string format_poly(const TW& tw, const SkewPoly<typename TW::Elem>& f, Fmt fmt_elem) {
  if (sp_is_zero(f)) return "0";
  std::string s;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (tw.is_zero(f.c[i])) continue;
    if (!s.empty()) s += " + ";
    std::string c = fmt_elem(f.c[i]);
    bool needs_parens = c.find_first_of("+/") != std::string::npos;
    if (needs_parens) c = "(" + c + ")";
    if (i == 0) {
      s += c;
    } else {
      std::string mono = i == 1 ? "t" : "t^" + std::to_string(i);
      if (c == "1")
        s += mono;
      else
        s += c + "*" + mono;
    }
  }
  return s;
}

}  // namespace

std::string format_skew_fq(const FqTwist& tw, const SkewPolyFq& f) {
  return format_poly(tw, f, [&](FqIdx a) { return format_fq_elem(tw.field(), a); });
}

std::string format_skew_func(const FuncTwist& tw, const SkewPolyFunc& f) {
  return format_poly(tw, f, [&](const RatFunc& a) { return format_ratfunc(tw.field(), a); });
}

std::string FqTwist::describe() const {
  std::string s = std::to_string(F_->p()) + "^" + std::to_string(F_->h()) + " r=" + std::to_string(r_);
  s += dk_ == FqDeltaKind::Zero ? " delta=zero" : " delta=inner:" + format_fq_elem(*F_, c_);
  return s;
}

std::string FuncTwist::describe() const {
  std::string s = "funcfield:" + std::to_string(K_.p());
  s += sk_ == FuncSigmaKind::Frobenius ? " sigma=frob" : " sigma=id";
  s += dk_ == FuncDeltaKind::Zero ? " delta=zero" : " delta=ddy";
  return s;
}

}  // namespace skewlab
