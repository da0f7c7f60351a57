#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "etaforge/kernel10.hpp"
#include "etaforge/search.hpp"
#include "etaforge/verify.hpp"

using namespace etaforge;

#ifndef ETAFORGE_SOURCE_DIR
#define ETAFORGE_SOURCE_DIR "."
#endif

namespace {

nlohmann::json load_golden() {
    std::string path = std::string(ETAFORGE_SOURCE_DIR) + "/data/golden_tables.json";
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    return nlohmann::json::parse(in);
}

std::array<long, 4> quad(const nlohmann::json& j) {
    return {j.at(0).get<long>(), j.at(1).get<long>(), j.at(2).get<long>(), j.at(3).get<long>()};
}

} // namespace

TEST_CASE("golden data file matches the library tables") {
    nlohmann::json doc = load_golden();
    CHECK(doc.at("version").get<int>() == 1);

    const auto& t8 = doc.at("table8");
    REQUIRE(t8.size() == 12);
    for (const auto& row : t8) {
        std::string label = row.at("label").get<std::string>();
        ParamExponents a = row_parameters(label);
        CHECK(quad(row.at("a")) == a);
        CHECK(quad(row.at("e")) == a_to_e(a));
    }

    const auto& t9 = doc.at("table9");
    REQUIRE(t9.size() == 4);
    for (const auto& fam : t9) {
        int family = fam.at("family").get<int>();
        std::array<long, 4> eb = quad(fam.at("e_base")), es = quad(fam.at("e_step"));
        std::array<long, 4> ab = quad(fam.at("a_base")), as = quad(fam.at("a_step"));
        for (long m = 0; m <= 8; ++m) {
            FamilyRow expect = family_exponents(family, m);
            for (int i = 0; i < 4; ++i) {
                CHECK(eb[static_cast<size_t>(i)] + m * es[static_cast<size_t>(i)] ==
                      expect.e[static_cast<size_t>(i)]);
                CHECK(ab[static_cast<size_t>(i)] + m * as[static_cast<size_t>(i)] ==
                      expect.a[static_cast<size_t>(i)]);
            }
        }
    }
}

TEST_CASE("golden data file matches a fresh certified search") {
    nlohmann::json doc = load_golden();
    const auto& cert = doc.at("certified_search");
    long e_max = cert.at("e_max").get<long>();
    long b_bound = cert.at("multiplier_bound").get<long>();
    long terms = cert.at("truncation").get<long>();
    std::vector<SearchHit> hits = search_level10(e_max, Int(b_bound), terms, 4);
    const auto& rows = cert.at("hits");
    REQUIRE(rows.size() == hits.size());
    for (size_t i = 0; i < hits.size(); ++i) {
        CHECK(quad(rows.at(i).at("e")) == hits[i].e);
        CHECK(Int(rows.at(i).at("minimal_b").get<long>()) == hits[i].minimal_b);
        CHECK(hits[i].status == "certified");
    }
}
