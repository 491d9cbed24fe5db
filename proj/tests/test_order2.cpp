#include <catch2/catch_amalgamated.hpp>

#include "precur/order2.hpp"
#include "precur/probes.hpp"

#include <vector>

using namespace precur;

namespace {

const Order2Rec motzkin{2, -2, -1, -3, 3};
const Order2Rec trinomial{0, -2, 1, -3, 3};
const Order2Rec schroeder{1, -6, 3, 1, -2};
const Order2Rec all_trans{3, -1, -1, -2, 2};

bool line_integral_off_line_not(const Order2Rec& rec, const InitialPair& line) {
    auto on = almost_integrality_probe(generate_terms(rec, line, 150));
    InitialPair off = line.s0 == 0 ? InitialPair{1, 0} : InitialPair{0, 1};
    auto bad = almost_integrality_probe(generate_terms(rec, off, 150));
    return !on.first_bad_index && bad.first_bad_index.has_value();
}

} // namespace

TEST_CASE("pair canonicalization") {
    CHECK(canonical_pair({3, 3}) == InitialPair{1, 1});
    CHECK(canonical_pair({-1, Rational(-1, 3)}) == InitialPair{3, 1});
    CHECK(canonical_pair({0, -2}) == InitialPair{0, 1});
    CHECK(canonical_pair({Rational(-4, 6), 2}) == InitialPair{1, -3});
    CHECK_THROWS_AS(canonical_pair({0, 0}), std::invalid_argument);
}

TEST_CASE("Motzkin-type recurrence: a line through (1,1)") {
    CaseVerdict v = decide_case(motzkin);
    REQUIRE(v.kind == CaseVerdict::Kind::Line);
    CHECK(v.pair_raw == InitialPair{3, 3});
    CHECK(v.pair == InitialPair{1, 1});
    CHECK(v.branch == "table/alg-trans");
    CHECK(v.diagnostic.in_restricted_class);
    REQUIRE(v.I1);
    CHECK(v.I1->verdict == IntegralVerdict::Algebraic);
    CHECK(v.I2->verdict == IntegralVerdict::Transcendental);
}

TEST_CASE("central-trinomial recurrence: the b0 = 0 branch") {
    CaseVerdict v = decide_case(trinomial);
    REQUIRE(v.kind == CaseVerdict::Kind::Line);
    CHECK(v.pair == InitialPair{1, 1});
    CHECK(v.branch == "b0-zero");
}

TEST_CASE("Schroeder recurrence: everything algebraic") {
    CaseVerdict v = decide_case(schroeder);
    CHECK(v.kind == CaseVerdict::Kind::AllAlgebraic);
    CHECK(v.branch == "table/alg-alg");
}

TEST_CASE("log-residue combination with an invertible matrix") {
    CaseVerdict v = decide_case(all_trans);
    REQUIRE(v.kind == CaseVerdict::Kind::AllTranscendental);
    CHECK(v.branch == "combination/log-residues");
    REQUIRE(v.I1);
    REQUIRE(v.I1->logs);
    CHECK(v.I1->logs->A1 == Rational(2, 27));
    CHECK(v.I1->logs->B1 == Rational(-2, 27));
    CHECK(v.I2->logs->A1 == Rational(7, 108));
    CHECK(v.I2->logs->B1 == Rational(5, 27));
    REQUIRE(v.system);
    CHECK(v.system->rows ==
          std::vector<std::vector<Rational>>{{Rational(5, 54), Rational(7, 27)},
                                             {Rational(-16, 27), Rational(20, 27)}});
    CHECK(v.system->det() == Rational(2, 9));
}

TEST_CASE("log-residue combination with a singular matrix yields a line") {
    Order2Rec rec{1, -5, 5, 6, -18};
    REQUIRE(check_restricted_class(rec).in_restricted_class);
    CaseVerdict v = decide_case(rec);
    REQUIRE(v.kind == CaseVerdict::Kind::Line);
    CHECK(v.branch == "combination/log-residues");
    CHECK(v.pair_raw == InitialPair{10, -12});
    CHECK(v.pair == InitialPair{5, -6});
    REQUIRE(v.system);
    CHECK(v.system->det() == 0);
    CHECK(line_integral_off_line_not(rec, *v.pair));
}

TEST_CASE("log-residue combination over conjugate roots") {
    Order2Rec rec{1, 1, 0, 1, -1};
    CaseVerdict v = decide_case(rec);
    CHECK(v.kind == CaseVerdict::Kind::AllTranscendental);
    REQUIRE(v.system);
    CHECK(v.system->provenance == CombinationSystem::Provenance::LogResidues);
    REQUIRE(v.system->q11);
    REQUIRE(v.system->q12);
    // the rationalized rows are the rational and radical parts of row 1
    CHECK(v.system->rows[0] ==
          std::vector<Rational>{v.system->q11->rational_part(), v.system->q12->rational_part()});
    CHECK(v.system->rows[1] ==
          std::vector<Rational>{v.system->q11->radical_part(), v.system->q12->radical_part()});
    CHECK(v.system->det() != 0);
}

TEST_CASE("generic-constants combination") {
    Order2Rec rec{1, 1, Rational(1, 3), 1, Rational(-1, 3)};
    CaseVerdict v = decide_case(rec);
    REQUIRE(v.kind == CaseVerdict::Kind::Line);
    CHECK(v.branch == "combination/generic-constants");
    CHECK(v.pair_raw == InitialPair{-1, Rational(-1, 3)});
    CHECK(v.pair == InitialPair{3, 1});
    // back-substitution: the returned pair kills the transcendental part
    const Rational k1 = v.I1->certificate->c, k2 = v.I2->certificate->c;
    const InitialPair& p = *v.pair;
    CHECK(rec.b0 * p.s0 * k1 + (rec.a1 * p.s0 + rec.b0 * p.s1 + rec.b1 * p.s0 + p.s1) * k2 == 0);
    CHECK(line_integral_off_line_not(rec, p));
}

TEST_CASE("patched-constants combination") {
    Order2Rec rec{3, -2, -3, -3, 0};
    REQUIRE(check_restricted_class(rec).in_restricted_class);
    CaseVerdict v = decide_case(rec);
    REQUIRE(v.kind == CaseVerdict::Kind::Line);
    CHECK(v.branch == "combination/patched-constants");
    CHECK(v.pair == InitialPair{1, 2});
    CHECK(v.I1->kind == IntegralKind::HalfIntegerBoundary);
    CHECK(v.I2->kind == IntegralKind::HalfIntegerPatched);
    CHECK(line_integral_off_line_not(rec, *v.pair));
}

TEST_CASE("the (transcendental, algebraic) table row pins the line to (0,1)") {
    Order2Rec rec{2, 1, Rational(1, 3), Rational(1, 6), Rational(-2, 9)};
    CaseVerdict v = decide_case(rec);
    REQUIRE(v.kind == CaseVerdict::Kind::Line);
    CHECK(v.branch == "table/trans-alg");
    CHECK(v.pair == InitialPair{0, 1});
    CHECK(line_integral_off_line_not(rec, *v.pair));
}

TEST_CASE("double-root recurrences") {
    // each rec has a1^2 = 4 a2 and the class-constrained b2
    CaseVerdict v1 = decide_case({1, 2, 0, 1, -1});
    REQUIRE(v1.kind == CaseVerdict::Kind::Line);
    CHECK(v1.branch == "double-root");
    CHECK(v1.pair == InitialPair{1, -1});
    CHECK(line_integral_off_line_not({1, 2, 0, 1, -1}, *v1.pair));

    CaseVerdict v2 = decide_case({1, -2, 0, 1, -1});
    REQUIRE(v2.kind == CaseVerdict::Kind::Line);
    CHECK(v2.pair == InitialPair{1, 1});

    CaseVerdict v3 = decide_case({1, 4, 2, 4, 0});
    REQUIRE(v3.kind == CaseVerdict::Kind::Line);
    CHECK(v3.pair == InitialPair{1, -2});
    CHECK(line_integral_off_line_not({1, 4, 2, 4, 0}, *v3.pair));

    CaseVerdict c1 = decide_case({1, 2, Rational(2, 3), 1, Rational(-1, 3)});
    CHECK(c1.kind == CaseVerdict::Kind::AllAlgebraic);
    CHECK(c1.branch == "double-root");
}

TEST_CASE("b0 = 0 with an algebraic exponent is all-algebraic") {
    Order2Rec rec{0, 1, Rational(-3, 2), 1, -3};
    REQUIRE(check_restricted_class(rec).in_restricted_class);
    CaseVerdict v = decide_case(rec);
    CHECK(v.kind == CaseVerdict::Kind::AllAlgebraic);
    CHECK(v.branch == "b0-zero");

    CaseVerdict w = decide_case({0, 1, Rational(1, 2), 1, 1});
    REQUIRE(w.kind == CaseVerdict::Kind::Line);
    CHECK(w.pair == InitialPair{2, -3});
}

TEST_CASE("out-of-class recurrences come back as unsupported diagnostics") {
    CaseVerdict bad_b2 = decide_case({2, -2, -1, -3, 0});
    REQUIRE(bad_b2.kind == CaseVerdict::Kind::Unsupported);
    CHECK(bad_b2.branch == "out-of-class");
    CHECK(bad_b2.diagnostic.reasons == std::vector<std::string>{"b2 mismatch"});

    Order2Rec half{Rational(1, 2), -2, -1, -3, 0};
    half.b2 = restricted_b2(half);
    CaseVerdict bad_b0 = decide_case(half);
    REQUIRE(bad_b0.kind == CaseVerdict::Kind::Unsupported);
    CHECK(bad_b0.diagnostic.reasons == std::vector<std::string>{"b0 not natural"});
}

TEST_CASE("scaling all coefficients leaves the verdict unchanged") {
    const Rational s(7, 3);
    Order2Rec scaled = normalize({s, s * motzkin.b0}, {s * motzkin.a1, s * motzkin.b1},
                                 {s * motzkin.a2, s * motzkin.b2});
    CaseVerdict v = decide_case(scaled);
    REQUIRE(v.kind == CaseVerdict::Kind::Line);
    CHECK(v.pair == InitialPair{1, 1});
}

TEST_CASE("combine_transcendental rejects mismatched certificate kinds") {
    IntegralAnalysis logs = analyze_integral({2, -1, -2, -2});          // partial fractions
    IntegralAnalysis generic = analyze_integral({1, 3, 5, Rational(1, 3)}); // generic constant
    REQUIRE(logs.verdict == IntegralVerdict::Transcendental);
    REQUIRE(generic.verdict == IntegralVerdict::Transcendental);
    CHECK_THROWS_AS(combine_transcendental(all_trans, logs, generic), std::invalid_argument);
    CHECK_THROWS_AS(combine_transcendental(all_trans, generic, logs), std::invalid_argument);
    IntegralAnalysis alg = analyze_integral({1, -2, -3, Rational(-3, 2)});
    CHECK_THROWS_AS(combine_transcendental(all_trans, logs, alg), std::invalid_argument);
}
