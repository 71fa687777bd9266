#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "dv/cases.hpp"
#include "dv/grades.hpp"

using namespace dv;

TEST_CASE("grade scales admit exactly their grade sets") {
    GradeScale bin = GradeScale::binary();
    CHECK(bin.admits(0.0));
    CHECK(bin.admits(1.0));
    CHECK_FALSE(bin.admits(0.5));

    GradeScale disc = GradeScale::discrete(5);
    for (int k = 0; k <= 5; ++k) CHECK(disc.admits(k / 5.0));
    CHECK_FALSE(disc.admits(0.55));
    CHECK_FALSE(disc.admits(0.5));
    CHECK_FALSE(disc.admits(1.2));
    CHECK(disc.levels() == 5);
    CHECK(disc.name() == "discrete(5)");

    GradeScale cont = GradeScale::continuous();
    CHECK(cont.admits(0.123456789));
    CHECK_FALSE(cont.admits(-0.1));
    CHECK_FALSE(cont.admits(1.0000001));

    CHECK(disc == GradeScale::discrete(5));
    CHECK_FALSE(disc == GradeScale::discrete(4));
    CHECK_FALSE(bin == cont);
    CHECK_THROWS_AS(GradeScale::discrete(1), std::invalid_argument);
}

TEST_CASE("parse_ballots reads the documented layout") {
    GradingMatrix m = parse_ballots("c1,c2\n0.59,0.67\n");
    CHECK(m.candidates() == 2);
    CHECK(m.voters() == 1);
    CHECK(m(0, 0) == 0.59);
    CHECK(m(1, 0) == 0.67);
    CHECK(m.candidate_labels() == std::vector<std::string>{"c1", "c2"});
    CHECK(m.voter_labels() == std::vector<std::string>{"v1"});

    GradingMatrix labeled = parse_ballots("voter,a,b\nalice,0.25,1\nbob,0,0.5\n");
    CHECK(labeled.voters() == 2);
    CHECK(labeled.voter_labels() == std::vector<std::string>{"alice", "bob"});
    CHECK(labeled(1, 1) == 0.5);
}

TEST_CASE("parse_ballots reports each malformed input") {
    CHECK_THROWS_AS(parse_ballots(""), ParseError);
    CHECK_THROWS_AS(parse_ballots("c1,c2\n"), ParseError);

    try {
        parse_ballots("c1,c2\n0.5,1.2\n");
        FAIL("expected an out-of-range error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ParseErrorCode::GradeOutOfRange);
        CHECK(e.row() == 2);
        CHECK(e.column() == 2);
    }

    try {
        parse_ballots("c1,c2\n0.5\n");
        FAIL("expected a ragged-row error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ParseErrorCode::RaggedRows);
        CHECK(e.row() == 2);
    }

    try {
        parse_ballots("c1,c2\n0.5,oops\n");
        FAIL("expected a non-numeric error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ParseErrorCode::NonNumericCell);
        CHECK(e.row() == 2);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("bundled ballots parse to the fifteen-voter matrix") {
    GradingMatrix m = cases::demo_continuous();
    CHECK(m.candidates() == 2);
    CHECK(m.voters() == 15);
    CHECK(m(0, 0) == 0.59);
    CHECK(m(1, 0) == 0.67);
    CHECK(m(0, 10) == 0.95);
    CHECK(m(1, 14) == 0.10);
    CHECK(m.voter_labels()[14] == "v15");
    CHECK(validate(m).empty());
}

TEST_CASE("serialize then parse returns the exact same grades") {
    GradingMatrix m = cases::demo_continuous();
    m(0, 3) = 1.0 / 3.0;  // force a value with no short decimal form
    GradingMatrix back = parse_ballots(serialize_ballots(m));
    REQUIRE(back.candidates() == m.candidates());
    REQUIRE(back.voters() == m.voters());
    for (std::size_t i = 0; i < m.candidates(); ++i)
        for (std::size_t j = 0; j < m.voters(); ++j) CHECK(back(i, j) == m(i, j));
    CHECK(back.voter_labels() == m.voter_labels());
    CHECK(back.candidate_labels() == m.candidate_labels());
}

TEST_CASE("discrete quantization floors to the grade grid") {
    GradingMatrix m = parse_ballots("c1,c2\n0.59,0.95\n0.13,1\n");
    GradingMatrix q = quantize(m, GradeScale::discrete(5));
    CHECK(q(0, 0) == 0.4);
    CHECK(q(1, 0) == 0.8);
    CHECK(q(0, 1) == 0.0);
    CHECK(q(1, 1) == 1.0);
    CHECK(q.scale() == GradeScale::discrete(5));
    CHECK(validate(q).empty());
    CHECK_THROWS_AS(quantize(m, GradeScale::continuous()), std::invalid_argument);
}

TEST_CASE("binary quantization keeps each voter's top-graded candidates") {
    GradingMatrix m = parse_ballots("c1,c2,c3\n0.59,0.67,0.1\n0.4,0.4,0.2\n");
    GradingMatrix q = quantize(m, GradeScale::binary());
    CHECK(q(0, 0) == 0.0);
    CHECK(q(1, 0) == 1.0);
    CHECK(q(2, 0) == 0.0);
    // ties all map to 1
    CHECK(q(0, 1) == 1.0);
    CHECK(q(1, 1) == 1.0);
    CHECK(q(2, 1) == 0.0);
}

TEST_CASE("quantization properties hold on random matrices") {
    std::mt19937_64 eng(7);
    auto unit = [&eng]() { return (eng() >> 11) * 0x1.0p-53; };
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = 1 + eng() % 4;
        std::size_t n = 1 + eng() % 12;
        GradingMatrix m(d, n);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = unit();

        for (int levels : {2, 5, 10}) {
            GradeScale s = GradeScale::discrete(levels);
            GradingMatrix q = quantize(m, s);
            GradingMatrix qq = quantize(q, s);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(q(i, j) == qq(i, j));  // idempotent, bit for bit
                    CHECK(q(i, j) <= m(i, j));
                    CHECK(q(i, j) > m(i, j) - 1.0 / levels);
                    CHECK(s.admits(q(i, j)));
                }
        }

        GradingMatrix b = quantize(m, GradeScale::binary());
        GradingMatrix bb = quantize(b, GradeScale::binary());
        for (std::size_t j = 0; j < n; ++j) {
            double top = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                CHECK(b(i, j) == bb(i, j));
                top = std::max(top, b(i, j));
            }
            CHECK(top == 1.0);  // every voter approves someone
        }
    }
}

TEST_CASE("validate reports empty, out-of-range, and off-scale grades") {
    CHECK(validate(GradingMatrix()).size() == 1);
    CHECK(validate(GradingMatrix()).front().kind == Violation::Kind::EmptyMatrix);

    GradingMatrix bad = GradingMatrix::from_rows({{0.5, -0.1}});
    auto v = validate(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::GradeOutOfRange);
    CHECK(v[0].candidate == 0);
    CHECK(v[0].voter == 1);

    GradingMatrix off = GradingMatrix::from_rows({{0.55, 0.2}}, GradeScale::discrete(5));
    auto w = validate(off);
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == Violation::Kind::ScaleMismatch);
    CHECK(w[0].value == 0.55);
}

TEST_CASE("matrix surgery keeps labels and grades aligned") {
    GradingMatrix m = parse_ballots("voter,a,b\nv1,0.1,0.9\nv2,0.2,0.8\nv3,0.3,0.7\n");

    GradingMatrix drop = m.without_voter(1);
    CHECK(drop.voters() == 2);
    CHECK(drop.voter_labels() == std::vector<std::string>{"v1", "v3"});
    CHECK(drop(0, 1) == 0.3);

    GradingMatrix pc = m.permuted_candidates({1, 0});
    CHECK(pc.candidate_labels() == std::vector<std::string>{"b", "a"});
    CHECK(pc(0, 0) == 0.9);
    CHECK(pc(1, 2) == 0.3);

    GradingMatrix pv = m.permuted_voters({2, 0, 1});
    CHECK(pv.voter_labels() == std::vector<std::string>{"v3", "v1", "v2"});
    CHECK(pv(1, 0) == 0.7);

    GradingMatrix joined = GradingMatrix::concat_voters(drop, m.without_voter(0));
    CHECK(joined.voters() == 4);
    CHECK(joined(0, 2) == 0.2);
    CHECK(joined.voter_labels() ==
          std::vector<std::string>{"v1", "v3", "v2", "v3"});

    GradingMatrix other = parse_ballots("x,y\n0.5,0.5\n");
    CHECK_THROWS_AS(GradingMatrix::concat_voters(m, other), std::invalid_argument);
    CHECK_THROWS_AS(GradingMatrix::from_rows({{0.1, 0.2}, {0.3}}), std::invalid_argument);
    CHECK_THROWS_AS(m.without_voter(3), std::out_of_range);
}
