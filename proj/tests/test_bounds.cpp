#include <doctest.h>

#include "polytc/bounds.hpp"

using namespace polytc;

namespace {

long long binom(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("Lucas parity") {
    CHECK(lucas_binom_mod2(7, 3));
    CHECK_FALSE(lucas_binom_mod2(5, 2));
    for (int n = 0; n <= 40; ++n) {
        CHECK(lucas_binom_mod2(n, 0));
        for (int k = 0; k <= n; ++k)
            CHECK(lucas_binom_mod2(n, k) == (binom(n, k) % 2 == 1));
    }
    CHECK_THROWS_AS(lucas_binom_mod2(3, 4), std::out_of_range);
    CHECK_THROWS_AS(lucas_binom_mod2(3, -1), std::out_of_range);
    // 2m-1 choose m-1 is odd exactly when m is a power of two.
    for (int m = 1; m <= 64; ++m)
        CHECK(lucas_binom_mod2(2 * m - 1, m - 1) == is_power_of_two(m));
}

TEST_CASE("parity lemma examples") {
    for (int b = 1; b <= 6; ++b)
        CHECK(lemma_size3(3, b));
    CHECK(lemma_size3(4, 2));
    CHECK_FALSE(lemma_size3(1, 1));
    CHECK(lemma_size3(2, 1));
    CHECK_THROWS(lemma_size3(0, 1));

    CHECK(lemma_size4(3, 1, 2));   // b+c odd, a = 3 mod 4
    CHECK(lemma_size4(2, 2, 5));   // a = 2, b = 2 mod 4
    CHECK_FALSE(lemma_size4(1, 1, 1));
    CHECK_FALSE(phi0_size4(1, 1, 1));

    CHECK(lemma_two3genes(1, 4, 1, 2));  // a+b = 1 mod 4, (a+1)d = 0 mod 4
    CHECK_FALSE(lemma_two3genes(1, 4, 1, 1));
    CHECK(lemma_two3genes(1, 1, 1, 1) == phi0_two3genes(1, 1, 1, 1));
}

TEST_CASE("size-3 lemma is the closed form") {
    for (int a = 1; a <= 40; ++a)
        for (int b = 1; b <= 40; ++b)
            CHECK(lemma_size3(a, b) == phi0_size3(a, b));
}

TEST_CASE("parity lemmas against the ring on small instances") {
    int size3 = 0, two3 = 0;
    for (int n = 6; n <= 8; ++n)
        for (const auto& e : enumerate_genetic_codes(n)) {
            const CodeSignature sig = e.signature;
            if (const auto t = sig.find(Template::Monogenic3)) {
                const CohomologyRing ring(e.code);
                CHECK(lemma_size3(t->params[0], t->params[1]) == ring.phi_S(IndexSet{}));
                ++size3;
            }
            if (const auto t = sig.find(Template::TwoSize3)) {
                const CohomologyRing ring(e.code);
                const auto& p = t->params;
                CHECK(phi0_two3genes(p[0], p[1], p[2], p[3]) == ring.phi_S(IndexSet{}));
                ++two3;
            }
        }
    CHECK(size3 > 0);
    CHECK(two3 > 0);
}

TEST_CASE("bound reports: examples") {
    const CohomologyRing r27(GeneticCode::parse("<{2,7}>"));
    const auto rep = tc_bounds(r27, 3);
    CHECK(rep.lower == 12);
    CHECK(rep.upper == 13);
    CHECK(rep.status == CertStatus::Verified);

    const CohomologyRing t2(GeneticCode::parse("<{1,2,4,7},{3,4,7},{2,5,7},{1,6,7}>"));
    const auto rt = tc_bounds(t2, 4);
    CHECK(rt.lower == 15);
    CHECK(rt.upper == 17);
    CHECK(rt.status == CertStatus::Verified);

    for (const char* s : {"<{1,3,8}>", "<{2,5,8}>", "<{3,4,9}>"}) {
        const CohomologyRing ring(GeneticCode::parse(s));
        const auto r = tc_bounds(ring, 2);
        CHECK(r.lower == 2 * ring.m());
        CHECK(r.upper == 2 * ring.m() + 1);
    }

    const CohomologyRing five(GeneticCode::parse("<{4,5}>"));
    const auto r5 = tc_bounds(five, 2);
    CHECK(r5.lower == 4);  // m = 2 is a power of two, so the size-2 bound gives km
    CHECK(r5.upper == 5);

    const auto trivial = tc_bounds(five, 1);
    CHECK(trivial.lower == 1);
    CHECK(trivial.upper == 1);
    CHECK_THROWS_AS(tc_bounds(five, 0), std::invalid_argument);
}

TEST_CASE("bound reports: invariants over all codes with n <= 7") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& e : enumerate_genetic_codes(n)) {
            const CohomologyRing ring(e.code);
            const int m = ring.m();
            int prev = 0;
            for (int k = 2; k <= 5; ++k) {
                const auto r = tc_bounds(ring, k);
                CAPTURE(e.code.to_string());
                CAPTURE(k);
                CHECK(r.lower >= (k - 1) * m + 1);
                CHECK(r.lower <= r.upper);
                CHECK(r.upper == k * m + 1);
                CHECK(r.lower >= prev);
                prev = r.lower;
                REQUIRE(r.certificate);
                CHECK(r.status == CertStatus::Verified);
                CHECK(r.lower == r.certificate->length + 1);
                for (const auto& c : r.claims)
                    CHECK(c.status != CertStatus::Failed);
            }
        }
}

TEST_CASE("type 1 exception cases fall back with a caveat") {
    // m - 1 = 4 is a power of two at n = 8.
    for (const auto& e : enumerate_genetic_codes(8)) {
        if (!e.signature.find(Template::Type1))
            continue;
        const CohomologyRing ring(e.code);
        const auto r = tc_bounds(ring, 2);
        CHECK(r.method != "type 1");
        bool tagged = false;
        for (const auto& c : r.caveats)
            tagged = tagged || c.find("type 1 exception") != std::string::npos;
        CHECK(tagged);
    }
}

TEST_CASE("psi: size-3 codes with a even") {
    for (const auto& e : enumerate_genetic_codes(8)) {
        const auto t = e.signature.find(Template::Monogenic3);
        if (!t || t->params[0] % 2 != 0)
            continue;
        const CohomologyRing ring(e.code);
        PsiConstraints want;
        want.blocks = {t->params[0], t->params[1]};
        want.pairing_targets.push_back(*certificates::size3(e.code, 2, ring.m(), t->params[0], t->params[1]));
        const auto sol = solve_psi(ring, want);
        REQUIRE(sol);
        const TensorPower tp(ring, 2);
        CHECK(phi_psi(tp, certificate_product(tp, want.pairing_targets[0]), *sol));
    }
}

TEST_CASE("psi: inconsistent systems return nothing") {
    const CohomologyRing ring(GeneticCode::parse("<{3,7}>"));
    PsiConstraints want;
    want.support = std::vector<IndexSet>{};
    want.pairing_targets.push_back(*certificates::size2_gene(ring.code(), 2, ring.m(), false));
    CHECK_FALSE(solve_psi(ring, want));
}
