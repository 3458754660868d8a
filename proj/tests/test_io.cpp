#include <doctest.h>

#include <filesystem>

#include "polytc/io.hpp"
#include "polytc/table1.hpp"

using namespace polytc;

TEST_CASE("certificate JSON round trip") {
    for (const char* s : {"<{2,7}>", "<{1,2,4,7},{3,4,7},{2,5,7},{1,6,7}>", "<{1,2,3,8},{1,5,8}>"}) {
        const CohomologyRing ring(GeneticCode::parse(s));
        for (int k = 2; k <= 3; ++k) {
            const auto rep = tc_bounds(ring, k);
            REQUIRE(rep.certificate);
            const auto j = io::to_json(*rep.certificate);
            const Certificate back = io::certificate_from_json(io::json::parse(j.dump()));
            CHECK(back.code == rep.certificate->code);
            CHECK(back.factors == rep.certificate->factors);
            CHECK(back.length == rep.certificate->length);
            CHECK(evaluate_certificate(ring, back).nonzero);
        }
    }
}

TEST_CASE("sum factors and witnesses survive serialization") {
    const CohomologyRing ring(GeneticCode(4, {IndexSet{4}}));
    const ZclSearch z = zcl_lower_bound(ring, 3);
    Certificate c = z.certificate;
    c.witness = LengthVector({1, 1, 1, 2});
    const Certificate back = io::certificate_from_json(io::to_json(c));
    CHECK(back.factors == c.factors);
    CHECK(back.witness == c.witness);
}

TEST_CASE("malformed certificates") {
    CHECK_THROWS_AS(io::certificate_from_json(io::json{{"k", 2}}), io::FormatError);
    CHECK_THROWS_AS(io::certificate_from_json(io::json::parse(
                        R"({"code":{"n":7,"genes":[[2,7]]},"k":2,"factors":[{"kind":"twist","pos":2,"gen":"R"}]})")),
                    io::FormatError);
}

TEST_CASE("class JSON round trip") {
    const CohomologyRing ring(GeneticCode::parse("<{1,2,4,8},{3,4,8}>"));
    const CohoClass x = ring.multiply(ring.V(1) + ring.V(4), ring.R() + ring.V(2));
    const auto j = io::to_json(ring, x);
    CHECK(j["degree"] == 2);
    CHECK(io::coho_class_from_json(ring, j) == x);
}

TEST_CASE("report JSON carries bounds, claims and caveats") {
    const CohomologyRing ring(GeneticCode::parse("<{2,7}>"));
    const auto j = io::to_json(tc_bounds(ring, 2));
    CHECK(j["lower"] == 8);
    CHECK(j["upper"] == 9);
    CHECK(j["claims"].size() >= 2);
    CHECK_FALSE(j["caveats"].empty());
}

TEST_CASE("enumeration cache") {
    const auto dir = std::filesystem::temp_directory_path() / "polytc_cache_test";
    std::filesystem::remove_all(dir);
    const auto first = io::cached_codes(6, dir);
    CHECK(std::filesystem::exists(dir / "codes_n6.json"));
    const auto second = io::cached_codes(6, dir);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].code == second[i].code);
        CHECK(first[i].signature == second[i].signature);
    }
    // A damaged cache is rebuilt.
    io::write_file(dir / "codes_n6.json", io::json{{"n", 6}, {"count", 1}, {"codes", io::json::array()}});
    CHECK(io::cached_codes(6, dir).size() == first.size());
    std::filesystem::remove_all(dir);
}

TEST_CASE("shape rows") {
    const auto rows = shape_counts(6, enumerate_genetic_codes(6));
    for (const auto& r : rows) {
        if (r.label == "2")
            CHECK(r.count == 5);
        if (r.label == "3")
            CHECK(r.count == 5);
        if (r.label == "anything, 2")
            CHECK(r.count == 8);
    }
    CHECK(published_count("2", 5) == 4);
    CHECK_FALSE(published_count("3", 5));
    CHECK_THROWS(published_count("2", 9));
}
