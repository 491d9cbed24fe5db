#pragma once

#include "precur/document.hpp"
#include "precur/hypergeom.hpp"
#include "precur/order2.hpp"
#include "precur/probes.hpp"

#include <json.hpp>

#include <string>

namespace precur {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

namespace detail {

inline Json json_pair(const std::pair<Rational, Rational>& p) {
    return Json::array({to_string(p.first), to_string(p.second)});
}

inline Json json_pair(const InitialPair& p) {
    return Json::array({to_string(p.s0), to_string(p.s1)});
}

inline Json json_poly(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

inline Json json_quadratic(const QuadraticNumber& v) {
    return Json{{"rational_part", to_string(v.rational_part())},
                {"radical_part", to_string(v.radical_part())},
                {"discriminant", to_string(v.discriminant())}};
}

inline Json json_certificate(const ReductionCertificate& cert) {
    return Json{{"c", to_string(cert.c)},
                {"c_tilde", to_string(cert.c_tilde)},
                {"C", json_poly(cert.C)}};
}

inline Json json_logs(const LogCoefficients& logs) {
    Json j;
    if (logs.roots.kind == QuadRoots::Kind::ConjugatePair) {
        j["roots"] = "conjugate-pair";
        j["A1"] = json_quadratic(*logs.A1_quad);
        j["B1"] = json_quadratic(*logs.B1_quad);
    } else {
        j["roots"] = "rational-pair";
        j["alpha"] = to_string(logs.roots.alpha_rat);
        j["beta"] = to_string(logs.roots.beta_rat);
        j["A1"] = to_string(logs.A1);
        j["B1"] = to_string(logs.B1);
    }
    return j;
}

inline const char* kind_name(IntegralKind k) {
    switch (k) {
    case IntegralKind::PolynomialPower: return "polynomial-power";
    case IntegralKind::DoubleRoot: return "double-root";
    case IntegralKind::PartialFractions: return "partial-fractions";
    case IntegralKind::BaseCase: return "base-case";
    case IntegralKind::HalfIntegerSmall: return "half-integer-small";
    case IntegralKind::HalfIntegerBoundary: return "half-integer-boundary";
    case IntegralKind::HalfIntegerPatched: return "half-integer-patched";
    case IntegralKind::Generic: return "generic";
    }
    return "?";
}

inline Json json_integral(const IntegralAnalysis& a) {
    Json j{{"n", a.spec.n},
           {"a1", to_string(a.spec.a1)},
           {"a2", to_string(a.spec.a2)},
           {"q", to_string(a.spec.q)},
           {"kind", kind_name(a.kind)},
           {"verdict", a.verdict == IntegralVerdict::Algebraic ? "algebraic" : "transcendental"}};
    if (a.certificate) j["certificate"] = json_certificate(*a.certificate);
    if (a.logs) j["log_coefficients"] = json_logs(*a.logs);
    if (a.double_root_log) j["double_root_log_coefficient"] = to_string(*a.double_root_log);
    return j;
}

inline Json json_system(const CombinationSystem& sys) {
    Json j;
    switch (sys.provenance) {
    case CombinationSystem::Provenance::GenericConstants: j["provenance"] = "generic-constants"; break;
    case CombinationSystem::Provenance::PatchedConstants: j["provenance"] = "patched-constants"; break;
    case CombinationSystem::Provenance::LogResidues: j["provenance"] = "log-residues"; break;
    }
    Json rows = Json::array();
    for (const auto& r : sys.rows)
        rows.push_back(Json::array({to_string(r[0]), to_string(r[1])}));
    j["matrix"] = rows;
    j["det"] = to_string(sys.det());
    if (sys.q11) {
        j["quadratic_row"] = Json::array({json_quadratic(*sys.q11), json_quadratic(*sys.q12)});
    }
    return j;
}

inline Json json_denominator_report(const DenominatorReport& rep) {
    Json j{{"depth", rep.depth},
           {"max_prime_seen", rep.max_prime_seen.str()},
           {"heuristic_only", rep.heuristic_only}};
    if (rep.first_bad_index) j["first_bad_index"] = *rep.first_bad_index;
    else j["first_bad_index"] = nullptr;
    return j;
}

inline Json json_document(const RecurrenceDocument& doc) {
    Json j{{"schema_version", RecurrenceDocument::schema_version},
           {"label", doc.label},
           {"order", doc.order},
           {"lead", json_pair(doc.lead)},
           {"mid", json_pair(doc.mid)}};
    if (doc.trail) j["trail"] = json_pair(*doc.trail);
    if (doc.init0) {
        Json init = Json::array({to_string(*doc.init0)});
        if (doc.init1) init.push_back(to_string(*doc.init1));
        j["init"] = init;
    }
    return j;
}

} // namespace detail

inline Json verdict_report(const RecurrenceDocument& doc, const CaseVerdict& v) {
    Json j{{"schema_version", report_schema_version}, {"input", detail::json_document(doc)}};
    switch (v.kind) {
    case CaseVerdict::Kind::AllAlgebraic: j["verdict"] = "C1"; break;
    case CaseVerdict::Kind::AllTranscendental: j["verdict"] = "C2"; break;
    case CaseVerdict::Kind::Line: j["verdict"] = "C3"; break;
    case CaseVerdict::Kind::Unsupported: j["verdict"] = "unsupported"; break;
    }
    j["branch"] = v.branch;
    Json diag{{"in_restricted_class", v.diagnostic.in_restricted_class},
              {"b2_expected", to_string(v.diagnostic.b2_expected)},
              {"b0_is_natural", v.diagnostic.b0_is_natural},
              {"reasons", v.diagnostic.reasons}};
    j["class_diagnostic"] = diag;
    if (v.pair) {
        j["pair"] = detail::json_pair(*v.pair);
        j["pair_raw"] = detail::json_pair(*v.pair_raw);
    }
    if (v.I1) j["I1"] = detail::json_integral(*v.I1);
    if (v.I2) j["I2"] = detail::json_integral(*v.I2);
    if (v.system) j["combination_system"] = detail::json_system(*v.system);
    return j;
}

inline Json verdict_report(const RecurrenceDocument& doc, const Order1Rec& rec, bool bounded) {
    Json j{{"schema_version", report_schema_version},
           {"input", detail::json_document(doc)},
           {"verdict", bounded ? "globally-bounded" : "not-globally-bounded"},
           {"branch", "order-1"},
           {"b0", to_string(rec.b0)},
           {"b1_over_a1", to_string(rec.b1 / rec.a1)}};
    return j;
}

} // namespace precur
