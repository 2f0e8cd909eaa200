#include <doctest.h>

#include "oracles.hh"

#include <ochrom/errors.hh>
#include <ochrom/qdnf.hh>

#include <random>

using namespace ochrom;

namespace
{
    auto random_formula(std::size_t vars, std::size_t clauses, std::mt19937_64 & rng) -> QdnfFormula
    {
        QdnfFormula f;
        for (std::size_t i = 1 ; i <= vars ; ++i)
            f.prefix.push_back({int(i), rng() % 2 ? Quantifier::forall : Quantifier::exists});
        for (std::size_t c = 0 ; c < clauses ; ++c) {
            Clause clause;
            for (auto & l : clause)
                l = Literal{int(1 + rng() % vars), rng() % 2 == 0};
            f.clauses.push_back(clause);
        }
        return f;
    }
}

TEST_SUITE("qdnf")
{
    TEST_CASE("parsing")
    {
        auto f = parse_qdnf("A x1 E x2 : (x1 & x2 & x2)");
        REQUIRE(f.prefix.size() == 2);
        CHECK(f.prefix[0] == QuantifiedVariable{1, Quantifier::forall});
        CHECK(f.prefix[1] == QuantifiedVariable{2, Quantifier::exists});
        CHECK(f.clauses.size() == 1);
        CHECK(f.clauses[0][0] == Literal{1, true});

        auto g = parse_qdnf("E x1 : (x1 & x1 & x1) | (~x1 & ~x1 & ~x1)");
        CHECK(g.clauses.size() == 2);
        CHECK(g.clauses[1][2] == Literal{1, false});

        auto h = parse_qdnf("# comment\nA x1 E x2 :\n  (x1&x2&x2)\n| (~x1 & ~x2 & ~x2)  # tail\n");
        CHECK(h.clauses.size() == 2);
    }

    TEST_CASE("parse errors carry a location")
    {
        CHECK_THROWS_AS(parse_qdnf("A x1 : (x1 & x2 & x1)"), ParseError);
        CHECK_THROWS_AS(parse_qdnf("A x1 : (x1 & x1)"), ParseError);
        CHECK_THROWS_AS(parse_qdnf("A x1 : (x1 & x1 & x1 & x1)"), ParseError);
        CHECK_THROWS_AS(parse_qdnf("A x1 E x1 : (x1 & x1 & x1)"), ParseError);
        CHECK_THROWS_AS(parse_qdnf("A x1 (x1 & x1 & x1)"), ParseError);
        try {
            parse_qdnf("A x1 :\n(x1 & x2 & x1)");
            FAIL("expected a parse error");
        }
        catch (const ParseError & e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 7);
        }
    }

    TEST_CASE("format round trip")
    {
        auto text = "A x1 E x2 : (x1 & x2 & x2) | (~x1 & ~x2 & ~x2)";
        CHECK(format_qdnf(parse_qdnf(text)) == text);
        std::mt19937_64 rng(2);
        for (int i = 0 ; i < 50 ; ++i) {
            auto f = random_formula(1 + rng() % 5, 1 + rng() % 4, rng);
            CHECK(parse_qdnf(format_qdnf(f)) == f);
        }
    }

    TEST_CASE("evaluation")
    {
        CHECK(evaluate_qdnf(parse_qdnf("E x1 : (x1 & x1 & x1)")));
        CHECK(! evaluate_qdnf(parse_qdnf("A x1 : (x1 & x1 & x1)")));
        CHECK(evaluate_qdnf(parse_qdnf("A x1 E x2 : (x1 & x2 & x2) | (~x1 & ~x2 & ~x2)")));
        CHECK(! evaluate_qdnf(parse_qdnf("E x2 A x3 : (x2 & x3 & x3) | (~x2 & ~x3 & ~x3)")));
    }

    TEST_CASE("evaluation matches the truth-table fold")
    {
        std::mt19937_64 rng(4);
        for (int i = 0 ; i < 400 ; ++i) {
            auto f = random_formula(1 + rng() % 6, 1 + rng() % 5, rng);
            CHECK(evaluate_qdnf(f) == oracle::evaluate(f));
        }
    }

    TEST_CASE("variable bound")
    {
        QdnfFormula f;
        for (int i = 1 ; i <= 25 ; ++i)
            f.prefix.push_back({i, Quantifier::exists});
        f.clauses.push_back({Literal{1, true}, Literal{1, true}, Literal{1, true}});
        CHECK_THROWS_AS(evaluate_qdnf(f), RefusalError);
    }

    TEST_CASE("oracle moves agree with the value")
    {
        std::mt19937_64 rng(6);
        for (int i = 0 ; i < 100 ; ++i) {
            auto f = random_formula(1 + rng() % 5, 1 + rng() % 4, rng);
            QdnfOracle o(f);
            CHECK(o.value({}) == evaluate_qdnf(f));
            auto first = f.prefix[0].quantifier;
            if (first == Quantifier::exists) {
                auto m = o.winning_move({});
                CHECK(m.has_value() == o.value({}));
                if (m)
                    CHECK(o.value({*m}));
            }
            else {
                auto m = o.refuting_move({});
                CHECK(m.has_value() == ! o.value({}));
                if (m)
                    CHECK(! o.value({*m}));
            }
        }
    }
}
