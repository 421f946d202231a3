#include "skewlab/report.hpp"

#include "skewlab/oracle.hpp"
#include "skewlab/parse.hpp"
#include "skewlab/petit.hpp"

namespace skewlab {

namespace {

json base(const Session& s, const char* verb) {
  json j;
  j["schema"] = 1;
  j["verb"] = verb;
  j["twist"] = s.describe();
  return j;
}

const FqTwist& need_fq(const Session& s, const char* what) {
  if (!s.is_fq()) throw refused_error(std::string(what) + " needs a finite-field twist");
  return s.fq();
}

json verdict_json(const Session& s, const Verdict& v) {
  json j;
  j["verdict"] = v.kind == VerdictKind::Irreducible ? "irreducible"
                 : v.kind == VerdictKind::Reducible ? "reducible"
                                                    : "unknown";
  j["irreducible"] =
      v.kind == VerdictKind::Unknown ? json(nullptr) : json(v.kind == VerdictKind::Irreducible);
  j["criterion"] = v.criterion;
  if (v.right_divisor) j["witness"]["right_divisor"] = format_skew_fq(s.fq(), *v.right_divisor);
  if (v.left_divisor) j["witness"]["left_divisor"] = format_skew_fq(s.fq(), *v.left_divisor);
  return j;
}

json func_verdict_json(const Session& s, const FuncVerdict& v) {
  json j;
  j["verdict"] = v.kind == VerdictKind::Irreducible ? "irreducible"
                 : v.kind == VerdictKind::Reducible ? "reducible"
                                                    : "unknown";
  j["irreducible"] =
      v.kind == VerdictKind::Unknown ? json(nullptr) : json(v.kind == VerdictKind::Irreducible);
  j["criterion"] = v.criterion;
  j["s"] = v.s;
  if (v.certificate) {
    j["certificate"]["place"] = v.certificate->place == Place::Y ? "y" : "infinity";
    j["certificate"]["valuation"] = v.certificate->valuation;
    j["certificate"]["s"] = v.certificate->s;
  }
  if (v.right_divisor) j["witness"]["right_divisor"] = format_skew_func(s.func(), *v.right_divisor);
  return j;
}

// B from "fix:J" (fixed field of sigma^J) or a ';'-separated element list.
Subspace parse_subring(const FqTwist& tw, const std::string& spec) {
  const FqContext& F = tw.field();
  if (spec.rfind("fix:", 0) == 0) {
    int64_t j = std::stoll(spec.substr(4));
    Subfield sf = F.fixed_subfield(tw.r() * j);
    PfMat gen(0, F.h(), F.p());
    for (const auto& v : sf.basis) gen.append_row(std::vector<int32_t>(v.begin(), v.end()));
    return Subspace(std::move(gen));
  }
  PfMat gen(0, F.h(), F.p());
  size_t start = 0;
  while (start <= spec.size()) {
    size_t end = spec.find(';', start);
    std::string tok = spec.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!tok.empty()) {
      FqElem e = F.unpack(parse_fq_elem(F, tok));
      gen.append_row(std::vector<int32_t>(e.begin(), e.end()));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (gen.rows() == 0) throw std::invalid_argument("subring spec is empty");
  return Subspace(std::move(gen));
}

}  // namespace

json report_mul(const Session& s, const std::string& g, const std::string& h) {
  json j = base(s, "mul");
  if (s.is_fq()) {
    const auto& tw = s.fq();
    j["result"] = format_skew_fq(tw, sp_mul(tw, parse_skew_fq(tw, g), parse_skew_fq(tw, h)));
  } else {
    const auto& tw = s.func();
    j["result"] = format_skew_func(tw, sp_mul(tw, parse_skew_func(tw, g), parse_skew_func(tw, h)));
  }
  return j;
}

json report_divmod(const Session& s, const std::string& g, const std::string& f,
                   const std::string& side) {
  if (side != "left" && side != "right") throw std::invalid_argument("side must be left or right");
  json j = base(s, "divmod");
  j["side"] = side;
  if (s.is_fq()) {
    const auto& tw = s.fq();
    auto dm = side == "right" ? sp_right_divmod(tw, parse_skew_fq(tw, g), parse_skew_fq(tw, f))
                              : sp_left_divmod(tw, parse_skew_fq(tw, g), parse_skew_fq(tw, f));
    j["quotient"] = format_skew_fq(tw, dm.q);
    j["remainder"] = format_skew_fq(tw, dm.r);
  } else {
    const auto& tw = s.func();
    auto dm = side == "right" ? sp_right_divmod(tw, parse_skew_func(tw, g), parse_skew_func(tw, f))
                              : sp_left_divmod(tw, parse_skew_func(tw, g), parse_skew_func(tw, f));
    j["quotient"] = format_skew_func(tw, dm.q);
    j["remainder"] = format_skew_func(tw, dm.r);
  }
  return j;
}

json report_gcrd(const Session& s, const std::string& g, const std::string& h) {
  json j = base(s, "gcrd");
  if (s.is_fq()) {
    const auto& tw = s.fq();
    j["result"] = format_skew_fq(tw, sp_gcrd(tw, parse_skew_fq(tw, g), parse_skew_fq(tw, h)));
  } else {
    const auto& tw = s.func();
    j["result"] = format_skew_func(tw, sp_gcrd(tw, parse_skew_func(tw, g), parse_skew_func(tw, h)));
  }
  return j;
}

json report_lclm(const Session& s, const std::string& g, const std::string& h) {
  json j = base(s, "lclm");
  if (s.is_fq()) {
    const auto& tw = s.fq();
    j["result"] = format_skew_fq(tw, sp_lclm(tw, parse_skew_fq(tw, g), parse_skew_fq(tw, h)));
  } else {
    const auto& tw = s.func();
    j["result"] = format_skew_func(tw, sp_lclm(tw, parse_skew_func(tw, g), parse_skew_func(tw, h)));
  }
  return j;
}

json report_irreducible(const Session& s, const std::string& f) {
  json j = base(s, "irreducible");
  if (s.is_fq()) {
    const auto& tw = s.fq();
    auto poly = parse_skew_fq(tw, f);
    j["f"] = format_skew_fq(tw, poly);
    j.update(verdict_json(s, irreducible_auto(tw, poly)));
  } else {
    const auto& tw = s.func();
    auto poly = parse_skew_func(tw, f);
    j["f"] = format_skew_func(tw, poly);
    j.update(func_verdict_json(s, func_irreducible_auto(tw, poly)));
  }
  return j;
}

json report_census(const Session& s, int m) {
  const auto& tw = need_fq(s, "census");
  CensusReport rep = census(tw, m, s.jobs);
  json j = base(s, "census");
  j["p"] = rep.p;
  j["h"] = rep.h;
  j["r"] = rep.r;
  j["m"] = rep.m;
  j["s"] = rep.s;
  j["gcd"] = rep.gcd_s;
  j["exact"] = rep.exact;
  j["no_right_root_u"] = rep.no_right_root_u;
  if (rep.exact) {
    j["count"] = rep.count_irreducible;
    j["irreducible_set"] = rep.irreducible_u;
  }
  return j;
}

json report_algebra_info(const Session& s, const std::string& f) {
  const auto& tw = need_fq(s, "algebra-info");
  PetitAlgebra alg(tw, parse_skew_fq(tw, f));
  json j = base(s, "algebra-info");
  j["f"] = format_skew_fq(tw, alg.f());
  j["m"] = alg.m();
  j["dim"] = alg.dim();
  j["dims"]["nuc_l"] = alg.nucleus(NucleusKind::Left).dim();
  j["dims"]["nuc_m"] = alg.nucleus(NucleusKind::Middle).dim();
  j["dims"]["nuc_r"] = alg.eigenring().dim();
  j["dims"]["comm"] = alg.commuter().dim();
  j["dims"]["center"] = alg.center().dim();
  j["dims"]["s0"] = alg.s0().dim();
  auto dv = alg.division_verdicts();
  j["flags"]["associative"] = alg.is_associative();
  j["flags"]["right_semi_invariant"] = alg.is_right_semi_invariant();
  j["flags"]["right_invariant"] = alg.is_right_invariant();
  j["flags"]["t_in_nuc_r"] = alg.t_in_right_nucleus();
  j["flags"]["right_division"] = dv.right_division;
  j["flags"]["division"] = dv.division;
  auto zd = alg.zero_divisor_to_factor();
  if (zd) {
    j["witnesses"]["zero_divisor"]["u"] = format_skew_fq(tw, zd->u);
    j["witnesses"]["zero_divisor"]["v"] = format_skew_fq(tw, zd->v);
    j["witnesses"]["factor"] = format_skew_fq(tw, zd->factor);
  }
  return j;
}

json report_nucleus(const Session& s, const std::string& f, const std::string& which) {
  const auto& tw = need_fq(s, "nucleus");
  NucleusKind kind;
  if (which == "l" || which == "left")
    kind = NucleusKind::Left;
  else if (which == "m" || which == "middle")
    kind = NucleusKind::Middle;
  else if (which == "r" || which == "right")
    kind = NucleusKind::Right;
  else
    throw std::invalid_argument("which must be l, m or r");
  PetitAlgebra alg(tw, parse_skew_fq(tw, f));
  Subspace n = alg.nucleus(kind);
  json j = base(s, "nucleus");
  j["f"] = format_skew_fq(tw, alg.f());
  j["which"] = which;
  j["dim"] = n.dim();
  j["cardinality"] = n.cardinality();
  json basis = json::array();
  for (int r = 0; r < n.dim(); ++r)
    basis.push_back(format_skew_fq(tw, alg.from_coords(n.basis().row(r))));
  j["basis"] = basis;
  return j;
}

json report_semi_invariant(const Session& s, const std::string& f, const std::string& subring) {
  const auto& tw = need_fq(s, "semi-invariant");
  PetitAlgebra alg(tw, parse_skew_fq(tw, f));
  json j = base(s, "semi-invariant");
  j["f"] = format_skew_fq(tw, alg.f());
  if (subring.empty()) {
    j["right_semi_invariant"] = alg.is_right_semi_invariant();
    j["t_in_nuc_r"] = alg.t_in_right_nucleus();
    j["right_invariant"] = alg.is_right_invariant();
    j["field_in_nuc_r"] = alg.eigenring().contains(alg.embedded_field());
  } else {
    Subspace b = parse_subring(tw, subring);
    j["b_dim"] = b.dim();
    j["b_weak_semi_invariant"] = alg.is_b_weak_semi_invariant(b);
    j["b_in_nuc_r"] = alg.eigenring().contains(alg.embed_subfield(b));
  }
  return j;
}

json report_find_semi_invariant(const Session& s, int degree) {
  const auto& tw = need_fq(s, "find-semi-invariant");
  auto found = find_right_semi_invariant(tw, degree);
  json j = base(s, "find-semi-invariant");
  j["degree"] = degree;
  j["count"] = found.size();
  json list = json::array();
  for (const auto& g : found) list.push_back(format_skew_fq(tw, g));
  j["polynomials"] = list;
  return j;
}

json report_factor(const Session& s, const std::string& f) {
  const auto& tw = need_fq(s, "factor");
  PetitAlgebra alg(tw, parse_skew_fq(tw, f));
  json j = base(s, "factor");
  j["f"] = format_skew_fq(tw, alg.f());
  auto zd = alg.zero_divisor_to_factor();
  j["found"] = zd.has_value();
  if (zd) {
    j["zero_divisor"]["u"] = format_skew_fq(tw, zd->u);
    j["zero_divisor"]["v"] = format_skew_fq(tw, zd->v);
    j["zero_divisor"]["from_eigenring"] = zd->from_eigenring;
    j["factor"] = format_skew_fq(tw, zd->factor);
    j["cofactor"] = format_skew_fq(tw, sp_right_divmod(tw, alg.f(), zd->factor).q);
  }
  return j;
}

json report_oracle_factor(const Session& s, const std::string& f) {
  const auto& tw = need_fq(s, "oracle-factor");
  auto poly = parse_skew_fq(tw, f);
  auto fac = oracle_full_factorization(tw, poly);
  json j = base(s, "oracle-factor");
  j["f"] = format_skew_fq(tw, sp_make_monic(tw, poly));
  json factors = json::array(), degrees = json::array();
  for (const auto& g : fac.factors) {
    factors.push_back(format_skew_fq(tw, g));
    degrees.push_back(sp_deg(g));
  }
  j["factors"] = factors;
  j["degrees"] = degrees;
  j["irreducible"] = fac.factors.size() == 1;
  return j;
}

json report_certify(const Session& s, const std::string& family, int m, const std::string& a) {
  if (family != "tm-a") throw std::invalid_argument("unknown certificate family: " + family);
  if (s.is_fq()) throw refused_error("certify targets the function field; use irreducible instead");
  const auto& tw = s.func();
  RatFunc av = parse_ratfunc(tw.field(), a);
  json j = base(s, "certify");
  j["family"] = family;
  j["m"] = m;
  j["a"] = format_ratfunc(tw.field(), av);
  j.update(func_verdict_json(s, func_tm_minus_a(tw, m, av)));
  // sigma non-surjective: attach the witness that S_f cannot be a left
  // division algebra (constant term must be nonzero)
  if (tw.sigma_kind() == FuncSigmaKind::Frobenius && !tw.field().is_zero(av)) {
    SkewPolyFunc f;
    f.c.assign(m + 1, tw.field().zero());
    f.c[0] = tw.neg(av);
    f.c[m] = tw.one();
    auto witness = left_division_counterexample(tw, f);
    if (witness) j["left_division_counterexample"] = format_ratfunc(tw.field(), *witness);
  }
  return j;
}

}  // namespace skewlab
