#include <doctest.h>

#include <map>

#include "polytc/bounds.hpp"
#include "polytc/cohomology.hpp"

using namespace polytc;

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("point code gives the truncated polynomial algebra") {
    for (int n = 4; n <= 10; ++n) {
        const CohomologyRing ring(GeneticCode(n, {IndexSet{n}}));
        const int m = ring.m();
        for (int d = 0; d <= m; ++d) {
            CHECK(ring.dim(d) == 1);
            CHECK(ring.basis(d)[0] == Monomial{d, IndexSet{}});
        }
        CHECK(ring.dim(m + 1) == 0);
        CHECK_FALSE(ring.power(ring.R(), m).is_zero());
        CHECK(ring.multiply(ring.power(ring.R(), m), ring.R()).is_zero());
        for (int i = 1; i < n; ++i)
            CHECK(ring.V(i).is_zero());
    }
    const CohomologyRing p5(GeneticCode(5, {IndexSet{5}}));
    const CupLength cl = cup_length(p5);
    CHECK(cl.length == 2);
    CHECK(cl.witness == Monomial{2, IndexSet{}});
}

TEST_CASE("size-2 gene: dimensions a+1 in the middle degrees") {
    for (int n = 5; n <= 9; ++n)
        for (int a = 1; a < n; ++a) {
            const GeneticCode code(n, {IndexSet{a, n}});
            if (!realizable(code).realizable)
                continue;
            const CohomologyRing ring(code);
            for (int d = 1; d <= n - 4; ++d)
                CHECK(ring.dim(d) == a + 1);
        }
    const CohomologyRing r45(GeneticCode(5, {IndexSet{4, 5}}));
    CHECK(r45.dims() == std::vector<int>{1, 5, 1});
    CHECK(cup_length(r45).length == 2);
    CHECK(r45.phi(r45.monomial(cup_length(r45).witness)));
}

TEST_CASE("multiplication rules") {
    const CohomologyRing ring(GeneticCode::parse("<{2,4,8}>"));
    CHECK(ring.multiply(ring.V(1), ring.V(1)) == ring.multiply(ring.R(), ring.V(1)));
    // {3,4} is not a subgee: 3 and 4 both exceed a = 2.
    CHECK(ring.multiply(ring.V(3), ring.V(4)).is_zero());
    CHECK_FALSE(ring.multiply(ring.V(1), ring.V(3)).is_zero());
    const CohoClass x = ring.V(2) + ring.R();
    const CohoClass y = ring.V(1) + ring.V(3);
    CHECK(ring.multiply(x, y) == ring.multiply(y, x));
    const CohoClass z = ring.multiply(ring.R(), ring.V(4));
    CHECK(ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z)));
    CHECK_FALSE(ring.phi(ring.zero(ring.m())));
    CHECK_THROWS_AS(ring.phi(ring.R()), std::invalid_argument);
    CHECK_THROWS(ring.phi_S(IndexSet{3, 4}));
}

TEST_CASE("multiplication is associative and commutative on random classes") {
    for (const auto& e : enumerate_genetic_codes(7)) {
        const CohomologyRing ring(e.code);
        const CohoClass a = ring.V(1) + ring.R();
        const CohoClass b = ring.V(2) + ring.V(ring.n() - 1);
        const CohoClass c = ring.multiply(ring.V(3), ring.R()) + ring.multiply(ring.V(1), ring.V(2));
        CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
        CHECK(ring.multiply(b, c) == ring.multiply(c, b));
    }
}

TEST_CASE("ring sanity for every code with n <= 7") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& e : enumerate_genetic_codes(n)) {
            const CohomologyRing ring(e.code);
            const int m = ring.m();
            CHECK(ring.dim(0) == 1);
            CHECK(ring.dim(m) == 1);
            CHECK(ring.dim(m + 1) == 0);
            for (int d = 0; d <= m; ++d) {
                CHECK(ring.dim(d) == ring.dim(m - d));
                CHECK(ring.pairing_nondegenerate(d));
                CHECK(ring.relation_rank(d, true) == ring.relation_rank(d, false));
            }
            CHECK(cup_length(ring).length == m);
            CHECK(ls_category(ring) == m + 1);
        }
}

TEST_CASE("phi values of the size-3 family match the closed forms") {
    for (int n = 6; n <= 9; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = 1; a + b < n; ++b) {
                const GeneticCode code(n, {IndexSet{a, a + b, n}});
                if (!realizable(code).realizable)
                    continue;
                const CohomologyRing ring(code);
                CAPTURE(code.to_string());
                if (a >= 2)
                    CHECK(ring.phi_S(IndexSet{1, 2}));
                CHECK(ring.phi_S(IndexSet{1, a + 1}));
                CHECK(ring.phi_S(IndexSet{a + 1}) == ((a - 1) % 2 == 1));
                CHECK(ring.phi_S(IndexSet{1}) == ((a + b) % 2 == 1));
                CHECK(ring.phi_S(IndexSet{}) == phi0_size3(a, b));
            }
}

// Relation (3) for S' in degree d is the sum of R^{d-|T|} V_T over subgees T
// disjoint from S'.  Grouped by block profile, the number of T of profile U
// is prod_i binom(|I_i| - u'_i, u_i).
TEST_CASE("relation images: counts of disjoint subgees by profile") {
    struct Case {
        GeneticCode code;
        std::vector<int> blocks;
    };
    const std::vector<Case> cases{
        {GeneticCode(9, {IndexSet{3, 7, 9}}), {3, 4}},
        {GeneticCode(9, {IndexSet{4, 6, 9}}), {4, 2}},
        {GeneticCode(10, {IndexSet{2, 5, 7, 10}}), {2, 3, 2}},
        {GeneticCode(10, {IndexSet{3, 4, 6, 10}}), {3, 1, 2}},
    };
    for (const auto& c : cases) {
        if (!realizable(c.code).realizable)
            continue;
        const CohomologyRing ring(c.code);
        const int d = ring.m() - 1;
        for (IndexSet sp : ring.subgees().all()) {
            if (sp.size() < 2)
                continue;
            const auto up = monomial_type(sp, c.blocks).counts;
            std::map<std::vector<int>, long long> seen;
            std::vector<Monomial> relation;
            for (IndexSet t : ring.subgees().all()) {
                if (!(t & sp).empty() || t.size() > d)
                    continue;
                ++seen[monomial_type(t, c.blocks).counts];
                relation.push_back({d - t.size(), t});
            }
            CAPTURE(c.code.to_string());
            CAPTURE(sp.to_string());
            // The relation holds in the ring when |S'| >= n - d - 2.
            if (sp.size() >= ring.n() - d - 2)
                CHECK(ring.from_support(d, relation).is_zero());
            for (const auto& [u, count] : seen) {
                long long expect = 1;
                for (std::size_t i = 0; i < c.blocks.size(); ++i) {
                    const int ui = i < u.size() ? u[i] : 0;
                    const int upi = i < up.size() ? up[i] : 0;
                    expect *= binom(c.blocks[i] - upi, ui);
                }
                CHECK(count == expect);
            }
        }
    }
}

TEST_CASE("size-3 relation images reproduce the two psi equations") {
    // For S' of profile (1,1): psi_0 + (a-2) psi_1 + b psi_2 + C(a-2,2) psi_11 + (a-2) b psi_12.
    // For S' of profile (1,2): psi_0 + (a-1) psi_1 + (b-1) psi_2 + C(a-1,2) psi_11 + (a-1)(b-1) psi_12.
    const int a = 4, b = 3, n = 9;
    const GeneticCode code(n, {IndexSet{a, a + b, n}});
    REQUIRE(realizable(code).realizable);
    const CohomologyRing ring(code);
    auto profile_counts = [&](IndexSet sp) {
        std::map<std::vector<int>, long long> seen;
        for (IndexSet t : ring.subgees().all())
            if ((t & sp).empty())
                ++seen[monomial_type(t, {a, b}).counts];
        return seen;
    };
    auto c11 = profile_counts(IndexSet{1, 2});
    CHECK(c11[{0, 0}] == 1);
    CHECK(c11[{1, 0}] == a - 2);
    CHECK(c11[{0, 1}] == b);
    CHECK(c11[{2, 0}] == binom(a - 2, 2));
    CHECK(c11[{1, 1}] == (a - 2) * b);
    auto c12 = profile_counts(IndexSet{1, a + 1});
    CHECK(c12[{0, 0}] == 1);
    CHECK(c12[{1, 0}] == a - 1);
    CHECK(c12[{0, 1}] == b - 1);
    CHECK(c12[{2, 0}] == binom(a - 1, 2));
    CHECK(c12[{1, 1}] == (a - 1) * (b - 1));
}

TEST_CASE("class round trips through support") {
    const CohomologyRing ring(GeneticCode::parse("<{1,2,3,8},{1,5,8}>"));
    for (int d = 0; d <= ring.m(); ++d)
        for (std::size_t b = 0; b < static_cast<std::size_t>(ring.dim(d)); ++b) {
            const CohoClass x = ring.basis_class(d, b);
            CHECK(ring.from_support(d, ring.support(x)) == x);
        }
}
