#include "trivdiag/serialize.hpp"

#include <algorithm>

#include "trivdiag/schur_q3.hpp"

namespace trivdiag::serialize {

json to_json(const symcore::Partition& lambda) { return lambda.parts(); }

json to_json(const symcore::Composition& c) { return c.parts(); }

json to_json(const symcore::SymFuncQ& f) {
  json terms = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    terms.push_back({{"partition", to_json(it->first)}, {"coeff", to_fraction_string(it->second)}});
  }
  return {{"degree", f.degree()}, {"basis", "m"}, {"terms", terms}};
}

symcore::SymFuncQ symfunc_from_json(const json& doc) {
  const auto basis = symcore::parse_basis(doc.at("basis").get<std::string>());
  const int degree = doc.at("degree").get<int>();
  std::map<symcore::Partition, Rational> coeffs;
  for (const auto& term : doc.at("terms")) {
    coeffs[symcore::Partition(term.at("partition").get<std::vector<int>>())] +=
        parse_rational(term.at("coeff").get<std::string>());
  }
  return symcore::SymFuncQ::from_basis(basis, degree, coeffs);
}

json to_json(const QPoly3& p) {
  std::vector<std::pair<Exponent3, Rational>> ordered(p.terms().begin(), p.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    return da != db ? da < db : a.first > b.first;
  });
  json terms = json::array();
  for (const auto& [e, c] : ordered) {
    terms.push_back({{"exponent", {e[0], e[1], e[2]}}, {"coeff", to_fraction_string(c)}});
  }
  return {{"terms", terms}};
}

json to_json(const tamari::DyckPath& path) { return path.a(); }

json parking_row(const parking::ParkingFunction& f) {
  return {{"f", f.values()},
          {"shape", f.beta()},
          {"co", to_json(f.descent_composition())},
          {"dinv", f.dinv()}};
}

json to_json(const nabla3::TwoRowElem& e) {
  json out = json::object();
  for (const auto& [key, c] : e.terms()) {
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = c.get_str();
  }
  return out;
}

json to_json(const nabla3::FrobVector3& v) {
  return {{"S3", to_json(v.c3)}, {"S21", to_json(v.c21)}, {"S111", to_json(v.c111)}};
}

json to_json(const verify::VerificationReport& report, bool timing) {
  json out = {{"name", report.name},          {"kind", report.kind},     {"params", report.params},
              {"lhs", report.lhs},            {"rhs", report.rhs},       {"pass", report.pass},
              {"witness", report.witness},    {"convention", report.convention},
              {"notes", report.notes}};
  if (timing) out["runtime_seconds"] = report.runtime_seconds;
  return out;
}

std::string schur_label(const symcore::Partition& lambda) {
  const auto& parts = lambda.parts();
  const bool digits = std::all_of(parts.begin(), parts.end(), [](int p) { return p <= 9; });
  std::string out = "S";
  if (!digits) out += "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!digits && i) out += ",";
    out += std::to_string(parts[i]);
  }
  if (!digits) out += "}";
  return out;
}

namespace {

template <class C, class Format>
std::string schur_text(const symcore::SymFunc<C>& f, Format format) {
  const auto s = f.in_basis(symcore::Basis::schur);
  std::string out;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const auto [negative, coeff] = format(it->second);
    const std::string label = schur_label(it->first);
    const std::string term = coeff.empty() ? label : coeff + "*" + label;
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string schur_string(const symcore::SymFuncQ& f) {
  return schur_text(f, [](const Rational& c) {
    const Rational mag = abs(c);
    return std::pair<bool, std::string>{c < 0, mag == 1 ? "" : to_display_string(mag)};
  });
}

std::string schur_string(const symcore::SymFuncQ3& f) {
  return schur_text(f, [](const QPoly3& c) {
    if (c == QPoly3(1)) return std::pair<bool, std::string>{false, ""};
    if (c == QPoly3(-1)) return std::pair<bool, std::string>{true, ""};
    if (c.terms().size() == 1 && c.terms().begin()->first == Exponent3{0, 0, 0}) {
      const Rational v = c.terms().begin()->second;
      return std::pair<bool, std::string>{v < 0, to_display_string(abs(v))};
    }
    return std::pair<bool, std::string>{false, "(" + c.to_string() + ")"};
  });
}

std::string frob_string(const nabla3::FrobVector3& v) {
  std::string out;
  const std::pair<const nabla3::TwoRowElem*, const char*> parts[3] = {{&v.c3, "S3"}, {&v.c21, "S21"}, {&v.c111, "S111"}};
  for (const auto& [elem, label] : parts) {
    if (elem->is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (*elem == nabla3::TwoRowElem(1)) {
      out += label;
    } else {
      out += "(" + elem->to_string() + ")*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

std::string qschur_string(const QPoly3& p) { return symcore::schur_q3_string(symcore::schur_decompose_q3(p)); }

}  // namespace trivdiag::serialize
