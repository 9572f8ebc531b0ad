#include <cmath>
#include <map>

#include "doctest.h"
#include "dtc/lee_code.hpp"
#include "dtc/oracle.hpp"

using namespace dtc;

TEST_CASE("membership") {
    BitString x = bits_from_text("0110100101");
    int r = 3;
    int64_t p = LeeCode::default_prime(10, r);
    LeeCode c(10, r, p, LeeCode::syndromes(x, r, p));
    CHECK(c.member(x));

    // perturbing one gap breaks at least one syndrome
    PhiVector u = phi(x);
    u[2] += 1;
    BitString x2 = phi_inverse(u);
    LeeCode c11(11, r, LeeCode::syndromes(x, r, p));  // same residues, length 11
    CHECK(c11.member(x2) == false);
}

TEST_CASE("distance hypothesis at small n") {
    for (int n = 6; n <= 10; ++n)
        for (int r = 1; r <= 3; ++r) {
            auto rep = verify_lee_distance_property(n, r);
            CHECK(rep.verified());
            if (!rep.verified()) MESSAGE(rep.failures[0]);
        }
}

TEST_CASE("decode identity and contract") {
    BitString x = bits_from_text("0110100101");
    int64_t p = LeeCode::default_prime(10, 3);
    LeeCode c(10, 3, p, LeeCode::syndromes(x, 3, p));
    auto out = c.decode(x, 1, 1);
    REQUIRE(out.ok());
    CHECK(out.word == x);
    CHECK(c.decode(x, 1, 0).status == DecodeStatus::invalid_input);  // r mismatch
    CHECK(c.decode(bits_from_text("0110100"), 1, 1).status ==
          DecodeStatus::invalid_input);  // too short for t=1
}

TEST_CASE("exhaustive unique decoding n=10") {
    auto rep = verify_lee_exhaustive(10, 1, 1);
    CHECK(rep.verified());
    if (!rep.verified()) MESSAGE(rep.failures[0]);
    auto rep2 = verify_lee_exhaustive(10, 2, 0);
    CHECK(rep2.verified());
    auto rep3 = verify_lee_exhaustive(10, 0, 1);
    CHECK(rep3.verified());
}

TEST_CASE("best residue class meets the pigeonhole floor") {
    int n = 10, r = 3;
    int64_t p = LeeCode::default_prime(n, r);
    std::map<std::vector<int64_t>, size_t> classes;
    for (uint64_t v = 0; v < (1ULL << n); ++v)
        ++classes[LeeCode::syndromes(bits_from_index(v, n), r, p)];
    size_t best = 0;
    for (const auto& [a, cnt] : classes) best = std::max(best, cnt);
    CHECK(static_cast<double>(best) >= std::pow(2.0, n) / std::pow(static_cast<double>(p), r));
    double red = n - std::log2(static_cast<double>(best));
    MESSAGE("lee best-class redundancy at n=10 r=3: ", red, " bits (r*log2(p) = ",
            r * std::log2(static_cast<double>(p)), ")");
}

TEST_CASE("spec validation") {
    CHECK_THROWS(LeeCode(10, 3, 7, {0, 0, 0}));   // prime too small
    CHECK_THROWS(LeeCode(10, 3, 13, {0, 0}));     // wrong residue count
}
