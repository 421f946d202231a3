#pragma once

// JSON-producing entry points behind the C API and the CLI.  Every payload
// carries "schema": 1 and enough data (witnesses, criterion tags, checked
// hypotheses) to re-verify the claim offline.

#include <nlohmann/json.hpp>

#include "skewlab/session.hpp"

namespace skewlab {

using json = nlohmann::ordered_json;

json report_mul(const Session& s, const std::string& g, const std::string& h);
json report_divmod(const Session& s, const std::string& g, const std::string& f,
                   const std::string& side);
json report_gcrd(const Session& s, const std::string& g, const std::string& h);
json report_lclm(const Session& s, const std::string& g, const std::string& h);
json report_irreducible(const Session& s, const std::string& f);
json report_census(const Session& s, int m);
json report_algebra_info(const Session& s, const std::string& f);
json report_nucleus(const Session& s, const std::string& f, const std::string& which);
json report_semi_invariant(const Session& s, const std::string& f, const std::string& subring);
json report_find_semi_invariant(const Session& s, int degree);
json report_factor(const Session& s, const std::string& f);
json report_oracle_factor(const Session& s, const std::string& f);
json report_certify(const Session& s, const std::string& family, int m, const std::string& a);

}  // namespace skewlab
