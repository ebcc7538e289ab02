#pragma once

#include <string>

#include <json.hpp>

#include "trivdiag/nabla3.hpp"
#include "trivdiag/parking.hpp"
#include "trivdiag/symfunc.hpp"
#include "trivdiag/tamari.hpp"
#include "trivdiag/verify.hpp"

namespace trivdiag::serialize {

using nlohmann::json;

json to_json(const symcore::Partition& lambda);
json to_json(const symcore::Composition& c);
/// {"degree": d, "basis": "m", "terms": [{"partition": [...], "coeff": "p/q"}]}
/// with terms in reverse-lexicographic order.
json to_json(const symcore::SymFuncQ& f);
symcore::SymFuncQ symfunc_from_json(const json& doc);
/// {"terms": [{"exponent": [d1,d2,d3], "coeff": "p/q"}]} in graded order.
json to_json(const QPoly3& p);
json to_json(const tamari::DyckPath& path);
/// {"f": [...], "shape": [...], "co": [...], "dinv": k}
json parking_row(const parking::ParkingFunction& f);
/// Map from "a,b" to integer coefficient.
json to_json(const nabla3::TwoRowElem& e);
json to_json(const nabla3::FrobVector3& v);
json to_json(const verify::VerificationReport& report, bool timing = false);

/// "S21", or "S{10,2}" when a part exceeds 9.
std::string schur_label(const symcore::Partition& lambda);
/// Schur expansion such as "S3 + 9*S21 + 13*S111".
std::string schur_string(const symcore::SymFuncQ& f);
/// Schur expansion with polynomial coefficients: "S3 + (q1 + q2)*S21".
std::string schur_string(const symcore::SymFuncQ3& f);
/// "S3 + (s1 + s2)*S21 + (s11 + s3)*S111".
std::string frob_string(const nabla3::FrobVector3& v);
/// Schur-in-q text of a symmetric QPoly3, e.g. "1 + s1".
std::string qschur_string(const QPoly3& p);

}  // namespace trivdiag::serialize
