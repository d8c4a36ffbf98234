#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "aac/errors.hpp"
#include "aac/space.hpp"
#include "aac/strings.hpp"

namespace {

std::vector<std::string> codes(const std::vector<aac::Obj>& objs) {
    std::vector<std::string> out;
    for (const auto& o : objs) out.push_back(o.code);
    std::sort(out.begin(), out.end());
    return out;
}

// Independent reference count: enumerate all j^k strings, canonicalize by
// direct string comparison with the reversal, count distinct.
std::size_t brute_undirected_count(int j, int k) {
    std::set<std::string> seen;
    std::vector<int> sym(k, 0);
    for (;;) {
        std::string s, r;
        for (int v : sym) s.push_back(static_cast<char>('0' + v));
        r.assign(s.rbegin(), s.rend());
        seen.insert(std::min(s, r));
        int i = k;
        bool done = false;
        while (i-- > 0) {
            if (++sym[i] < j) break;
            sym[i] = 0;
            if (i == 0) done = true;
        }
        if (done) return seen.size();
    }
}

}  // namespace

TEST_CASE("directed gluing is both concatenations") {
    aac::StringSpace sd(2, true);
    auto a = sd.parse("0010010");
    auto b = sd.parse("011101101");
    CHECK(codes(sd.glue(a, b)) ==
          std::vector<std::string>{"0010010011101101", "0111011010010010"});
    auto zero = sd.parse("0");
    CHECK(codes(sd.glue(zero, zero)) == std::vector<std::string>{"00"});
    auto oi = sd.parse("01");
    CHECK(codes(sd.glue(oi, oi)) == std::vector<std::string>{"0101"});
}

TEST_CASE("undirected gluing canonicalizes the four concatenations") {
    aac::StringSpace su(2, false);
    auto a = su.parse("01");
    auto b = su.parse("110");
    CHECK(codes(su.glue(a, b)) ==
          std::vector<std::string>{"01011", "01101", "01110", "10011"});
    auto z = su.parse("0");
    CHECK(codes(su.glue(z, z)) == std::vector<std::string>{"00"});
    auto c = su.parse("00");
    auto d = su.parse("01");
    CHECK(codes(su.glue(c, d)) == std::vector<std::string>{"0001", "0010"});
}

TEST_CASE("gluing is symmetric and size-additive") {
    for (bool directed : {true, false}) {
        aac::StringSpace sp(3, directed);
        auto a = sp.parse("012");
        auto b = sp.parse("20");
        auto ab = sp.glue(a, b);
        auto ba = sp.glue(b, a);
        CHECK(ab == ba);
        for (const auto& r : ab) CHECK(r.size == a.size + b.size);
    }
}

TEST_CASE("level cardinalities") {
    aac::StringSpace sd(2, true), su(2, false);
    CHECK(sd.level_cardinality(2).value() == 4);
    CHECK(su.level_cardinality(2).value() == 3);
    CHECK(su.level_cardinality(4).value() == 10);
    CHECK(su.level_cardinality(8).value() == 136);
    CHECK(su.level_cardinality(16).value() == 32896);
    CHECK(aac::directed_string_count(26, 64).is_saturated());
}

TEST_CASE("cardinality formulas match brute enumeration for j<=3, k<=6") {
    for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 6; ++k) {
            CAPTURE(j);
            CAPTURE(k);
            std::uint64_t directed = 1;
            for (int t = 0; t < k; ++t) directed *= j;
            CHECK(aac::directed_string_count(j, k).value() == directed);
            CHECK(aac::undirected_string_count(j, k).value() ==
                  brute_undirected_count(j, k));
            aac::StringSpace sd(j, true), su(j, false);
            CHECK(sd.enumerate(k, 1 << 20).size() == directed);
            CHECK(su.enumerate(k, 1 << 20).size() ==
                  brute_undirected_count(j, k));
        }
    }
}

TEST_CASE("canonicalization is idempotent and picks the smaller reading") {
    aac::StringSpace su(2, false);
    auto o = su.parse("110");
    CHECK(o.code == "011");
    CHECK(su.parse(o.code).code == o.code);
    auto pal = su.parse("010");
    CHECK(pal.code == "010");
}

TEST_CASE("decompositions are the cuts") {
    aac::StringSpace sd(2, true);
    auto x = sd.parse("0010");
    auto dec = sd.decompositions(x);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].first.code == "0");
    CHECK(dec[0].second.code == "001");
    CHECK(dec[1].first.code == "0");
    CHECK(dec[1].second.code == "010");
    CHECK(dec[2].first.code == "00");
    CHECK(dec[2].second.code == "10");

    aac::StringSpace su(2, false);
    auto u = su.parse("0110");
    for (const auto& [p, q] : su.decompositions(u)) {
        bool found = false;
        for (const auto& g : su.glue(p, q)) found = found || g == u;
        CHECK(found);
    }
}

TEST_CASE("embeds is substring containment up to reading direction") {
    aac::StringSpace sd(2, true);
    CHECK(sd.embeds(sd.parse("01"), sd.parse("001")));
    CHECK(!sd.embeds(sd.parse("10"), sd.parse("001")));
    CHECK(!sd.embeds(sd.parse("11"), sd.parse("001")));
    aac::StringSpace su(2, false);
    CHECK(su.embeds(su.parse("10"), su.parse("001")));
    CHECK(!su.embeds(su.parse("11"), su.parse("001")));
}

TEST_CASE("building blocks and identifiers") {
    aac::StringSpace sd(2, true);
    CHECK(sd.id() == "sd:2");
    CHECK(codes(sd.building_blocks()) == std::vector<std::string>{"0", "1"});
    aac::StringSpace su(3, false);
    CHECK(su.id() == "su:3");
    CHECK(su.building_blocks().size() == 3);
    CHECK(sd.size_of("0101") == 4);
}

TEST_CASE("wide alphabets use comma-separated symbols") {
    aac::StringSpace sd(12, true);
    auto o = sd.parse("0,11,3");
    CHECK(o.size == 3);
    CHECK(o.code == "0,11,3");
    CHECK_THROWS_AS(sd.parse("0,12"), aac::ParseError);
    aac::StringSpace su(12, false);
    CHECK(su.parse("11,0,3").code == "3,0,11");
}

TEST_CASE("parse rejects malformed strings") {
    aac::StringSpace sd(2, true);
    CHECK_THROWS_AS(sd.parse(""), aac::ParseError);
    CHECK_THROWS_AS(sd.parse("012"), aac::ParseError);
    CHECK_THROWS_AS(sd.parse("ab"), aac::ParseError);
}

TEST_CASE("make_space round-trips ids") {
    for (const char* id : {"sd:2", "su:3", "sd:1", "su:10"}) {
        auto sp = aac::make_space(id);
        CHECK(sp->id() == id);
    }
    CHECK_THROWS_AS(aac::make_space("sd"), aac::ParseError);
    CHECK_THROWS_AS(aac::make_space("sd:"), aac::ParseError);
    CHECK_THROWS_AS(aac::make_space("sd:0"), aac::ParseError);
    CHECK_THROWS_AS(aac::make_space("zz:2"), aac::ParseError);
    CHECK_THROWS_AS(aac::make_space("sd:2x"), aac::ParseError);
}

TEST_CASE("saturating cardinality arithmetic") {
    using aac::Card;
    CHECK(Card::exact(3).value() == 3);
    CHECK((Card::exact(1) + Card::exact(2)).value() == 3);
    CHECK((Card::exact(1u << 20) * Card::exact(1u << 20)).value() ==
          (std::uint64_t{1} << 40));
    CHECK(Card::pow(2, 62).is_saturated());
    CHECK(Card::pow(2, 200).is_saturated());
    CHECK((Card::saturated() + Card::exact(1)).is_saturated());
    CHECK((Card::exact(0) * Card::saturated()).value() == 0);
    CHECK(Card::unknown().is_unknown());
    CHECK((Card::unknown() + Card::exact(1)).is_unknown());
    CHECK(min_with(5, Card::exact(3)) == 3);
    CHECK(min_with(5, Card::saturated()) == 5);
    CHECK_THROWS_AS(min_with(5, Card::unknown()), std::invalid_argument);
    CHECK(covers(4, Card::exact(4)));
    CHECK(!covers(3, Card::exact(4)));
    CHECK(!covers(1000, Card::saturated()));
    CHECK(Card::exact(10).half().value() == 5);
}

TEST_CASE("enumerate respects its budget") {
    aac::StringSpace sd(2, true);
    CHECK_THROWS_AS(sd.enumerate(12, 100), aac::BudgetExceeded);
}
