#include <cmath>
#include <map>

#include "doctest.h"
#include "dtc/channel.hpp"
#include "dtc/oracle.hpp"
#include "dtc/single_code.hpp"

using namespace dtc;

TEST_CASE("syndrome") {
    CHECK(SingleCode::syndrome(bits_from_text("11111"), 23) == 0);
    CHECK(SingleCode::syndrome(bits_from_text("010100"), 29) == 23);
    BitString x = bits_from_text("0110100");
    CHECK(SingleCode::syndrome(phi_inverse(phi(x)), 29) == SingleCode::syndrome(x, 29));
}

TEST_CASE("membership and partition") {
    SingleCode c(6, 23, 29);
    CHECK(c.member(bits_from_text("010100")));
    CHECK(!SingleCode(6, 24, 29).member(bits_from_text("010100")));
    CHECK(!c.member(bits_from_text("0101000")));  // wrong length

    for (int n : {6, 9, 12}) {
        int64_t p = smallest_prime_at_least(4L * n + 1);
        size_t total = 0;
        for (int64_t a = 0; a < p; ++a) total += SingleCode(n, a, p).codebook().size();
        CHECK(total == (1ULL << n));
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS(SingleCode(6, 23, 23));  // 23 <= 4n
    CHECK_THROWS(SingleCode(6, 99, 29));  // residue out of range
}

TEST_CASE("best residue") {
    SingleCode best = SingleCode::best(8);
    CHECK(best.codebook().size() * best.p() >= (1ULL << 8));  // pigeonhole floor
    SingleCode again = SingleCode::best(8);
    CHECK(best.a() == again.a());
    for (int n = 8; n <= 12; ++n) {
        SingleCode b = SingleCode::best(n);
        double red = n - std::log2(static_cast<double>(b.codebook().size()));
        REQUIRE(red <= std::log2(static_cast<double>(n)) + 3);
    }
}

TEST_CASE("decode worked examples") {
    SingleCode c(6, 23, 29);
    BitString x = bits_from_text("010100");
    CHECK(c.decode(x).word == x);
    auto del = c.decode(bits_from_text("01010"));  // 0 deleted from gap 3
    REQUIRE(del.ok());
    CHECK(del.word == x);
    auto swp = c.decode(bits_from_text("001100"));  // 10 -> 01 at positions 2,3
    REQUIRE(swp.ok());
    CHECK(swp.word == x);
    CHECK(c.decode(bits_from_text("0101")).status == DecodeStatus::invalid_input);
    // beyond-model input: syndrome delta 23 is no square of a gap index
    CHECK(c.decode(bits_from_text("11111")).status == DecodeStatus::no_solution);
}

TEST_CASE("exhaustive unique decoding") {
    for (int n = 6; n <= 9; ++n) {
        auto rep = verify_single_exhaustive(n);
        CHECK(rep.verified());
        if (!rep.verified()) MESSAGE(rep.failures[0]);
    }
}

TEST_CASE("ball disjointness witness") {
    // constructed collision: the single-deletion balls of 00 and 000 share 00
    std::vector<BitString> code = {bits_from_text("00"), bits_from_text("000")};
    auto rep = balls_disjoint(code, [](const BitString& x) { return error_ball(x, 1, 0); },
                              "constructed");
    CHECK(!rep.verified());
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures[0].find("00") != std::string::npos);

    std::vector<BitString> solo = {bits_from_text("0101")};
    CHECK(balls_disjoint(solo, [](const BitString& x) { return error_ball(x, 1, 1); }, "solo")
              .verified());
}
