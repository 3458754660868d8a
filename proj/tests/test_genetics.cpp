#include <doctest.h>

#include <map>
#include <set>

#include "polytc/genetics.hpp"

using namespace polytc;

TEST_CASE("dominance order") {
    CHECK(dominance_leq(IndexSet{1, 3}, IndexSet{2, 3}));
    CHECK_FALSE(dominance_leq(IndexSet{2, 5}, IndexSet{1, 6}));
    CHECK(dominance_leq(IndexSet{}, IndexSet{4, 7}));
    CHECK(dominance_leq(IndexSet{3}, IndexSet{1, 4}));
    CHECK_FALSE(dominance_leq(IndexSet{1, 2, 3}, IndexSet{5, 6}));
}

TEST_CASE("dominance is a partial order on small sets") {
    for (std::uint32_t a = 0; a < 64; ++a)
        for (std::uint32_t b = 0; b < 64; ++b) {
            const IndexSet x(a), y(b);
            if (dominance_leq(x, y) && dominance_leq(y, x))
                CHECK(x == y);
            for (std::uint32_t c = 0; c < 64; c += 5)
                if (dominance_leq(x, y) && dominance_leq(y, IndexSet(c)))
                    CHECK(dominance_leq(x, IndexSet(c)));
        }
}

TEST_CASE("parsing and canonical order") {
    const auto c = GeneticCode::parse("<{3,4,7},{1,2,3,7},{2,5,7}>");
    CHECK(c.n() == 7);
    CHECK(c.to_string() == "<{1,2,3,7},{3,4,7},{2,5,7}>");
    CHECK(GeneticCode::parse("1,2,3,7;3,4,7;2,5,7") == c);
    CHECK_THROWS_AS(GeneticCode::parse("<{1,7},{2,7}>"), std::invalid_argument);  // comparable
    CHECK_THROWS_AS(GeneticCode(7, {IndexSet{1, 2}}), std::invalid_argument);      // missing n
    CHECK_THROWS(GeneticCode::parse("<{1,2,7>"));
}

TEST_CASE("subgees of the template families") {
    for (int a = 1; a <= 5; ++a) {
        const SubgeeFamily f(GeneticCode(7, {IndexSet{a, 7}}));
        std::vector<IndexSet> expect{IndexSet{}};
        for (int i = 1; i <= a; ++i)
            expect.push_back(IndexSet{i});
        CHECK(f.all() == expect);
    }
    CHECK(SubgeeFamily(GeneticCode(6, {IndexSet{6}})).all() == std::vector<IndexSet>{IndexSet{}});

    const int a = 2, b = 3, n = 8;
    const SubgeeFamily f(GeneticCode(n, {IndexSet{a, a + b, n}}));
    std::set<IndexSet> expect{IndexSet{}};
    for (int i = 1; i <= a + b; ++i)
        expect.insert(IndexSet{i});
    for (int i = 1; i <= a + b; ++i)
        for (int j = i + 1; j <= a + b; ++j)
            if (j <= a || (i <= a && j > a))
                expect.insert(IndexSet{i, j});
    CHECK(std::set<IndexSet>(f.all().begin(), f.all().end()) == expect);
}

TEST_CASE("realizability") {
    const auto r = realizable(GeneticCode(5, {IndexSet{4, 5}}));
    REQUIRE(r.realizable);
    CHECK(genetic_code(*r.witness) == GeneticCode(5, {IndexSet{4, 5}}));
    for (int n = 4; n <= 9; ++n) {
        const auto p = realizable(GeneticCode(n, {IndexSet{n}}));
        REQUIRE(p.realizable);
        CHECK(genetic_code(*p.witness) == GeneticCode(n, {IndexSet{n}}));
    }
    // An antichain that is not the code of any vector.
    CHECK_FALSE(realizable(GeneticCode(7, {IndexSet{1, 2, 3, 4, 7}, IndexSet{5, 7}})).realizable);
    const auto r2 = realizable(GeneticCode(7, {IndexSet{3, 7}, IndexSet{1, 2, 7}}));
    REQUIRE(r2.realizable);
    CHECK(genetic_code(*r2.witness) == GeneticCode(7, {IndexSet{3, 7}, IndexSet{1, 2, 7}}));
}

TEST_CASE("enumeration: counts, witnesses and small-n oracle") {
    const std::vector<std::size_t> counts{2, 6, 20, 134};
    for (int n = 4; n <= 7; ++n) {
        const auto& codes = enumerate_genetic_codes(n);
        CHECK(codes.size() == counts[static_cast<std::size_t>(n - 4)]);
        for (const auto& e : codes)
            CHECK(genetic_code(e.witness) == e.code);
    }
    CHECK_THROWS_AS(enumerate_genetic_codes(3), std::out_of_range);
    CHECK_THROWS_AS(enumerate_genetic_codes(10), std::out_of_range);

    // Every generic integer vector with small entries lands in the list.
    for (int n = 5; n <= 6; ++n) {
        std::set<GeneticCode> listed;
        for (const auto& e : enumerate_genetic_codes(n))
            listed.insert(e.code);
        std::vector<std::int64_t> v(static_cast<std::size_t>(n), 1);
        const int top = 7;
        while (true) {
            const LengthVector a(v);
            // Vectors with {n} long give an empty space and no code.
            if (is_generic(a) && is_short(IndexSet{n}, a))
                CHECK(listed.count(genetic_code(a)) == 1);
            std::size_t i = 0;
            while (i < v.size() && v[i] == top)
                v[i++] = 1;
            if (i == v.size())
                break;
            ++v[i];
        }
    }
}

TEST_CASE("classification") {
    const int n = 9;
    const auto t2 = classify(GeneticCode(n, {IndexSet{1, 2, 4, n}, IndexSet{3, 4, n}, IndexSet{2, 5, n}, IndexSet{1, 6, n}}));
    CHECK(t2.type2);
    CHECK(t2.sizes_string() == "4,3,3,3");

    const int b = 2, c = 1, d = 3;
    const auto t1 = classify(GeneticCode(n, {IndexSet{1, 1 + b, 1 + b + c, n}, IndexSet{1, 1 + b + c + d, n}}));
    CHECK(t1.type1);
    CHECK_FALSE(t1.type2);
    const auto tm = t1.find(Template::Type1);
    REQUIRE(tm);
    CHECK(tm->params == std::vector<int>{b, c, d});

    const auto mono = classify(GeneticCode(n, {IndexSet{4, n}}));
    const auto m2 = mono.find(Template::Monogenic2);
    REQUIRE(m2);
    CHECK(m2->params == std::vector<int>{4});
}

TEST_CASE("27 Type 2 codes at n = 7") {
    std::map<std::string, int> rows;
    int last = 0;
    for (const auto& e : enumerate_genetic_codes(7))
        if (e.signature.type2) {
            ++rows[e.signature.sizes_string()];
            last += e.signature.find(Template::Type2)->params[0];
        }
    CHECK(rows["4,3"] == 10);
    CHECK(rows["3,3,3"] == 1);
    CHECK(rows["4,3,3"] == 14);
    CHECK(rows["4,3,3,3"] == 2);
    CHECK(last == 1);
}
