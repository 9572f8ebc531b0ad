#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "dtc/bch.hpp"

using namespace dtc;

namespace {

std::vector<int> random_word(std::mt19937_64& rng, int len, int p) {
    std::vector<int> w(len);
    for (auto& v : w) v = static_cast<int>(rng() % p);
    return w;
}

std::vector<int> inject(std::mt19937_64& rng, std::vector<int> w, int e, int p) {
    std::set<int> pos;
    while (static_cast<int>(pos.size()) < e) pos.insert(static_cast<int>(rng() % w.size()));
    for (int i : pos) w[i] = (w[i] + 1 + static_cast<int>(rng() % (p - 1))) % p;
    return w;
}

}  // namespace

TEST_CASE("systematic encoding") {
    BchCode c(11, 1, 7);
    std::vector<int> zero(c.dimension_for(10), 0);
    auto zw = c.encode_systematic(zero);
    CHECK(std::all_of(zw.begin(), zw.end(), [](int v) { return v == 0; }));

    std::mt19937_64 rng(1);
    auto m1 = random_word(rng, 4, 11);
    auto m2 = random_word(rng, 4, 11);
    auto w1 = c.encode_systematic(m1);
    auto w2 = c.encode_systematic(m2);
    CHECK(static_cast<int>(w1.size()) == 4 + c.parity());
    CHECK(c.is_codeword(w1));
    // message part is carried verbatim
    CHECK(std::equal(m1.begin(), m1.end(), w1.begin()));
    // linearity spot check
    std::vector<int> msum(4);
    for (int i = 0; i < 4; ++i) msum[i] = (m1[i] + m2[i]) % 11;
    auto ws = c.encode_systematic(msum);
    for (size_t i = 0; i < ws.size(); ++i) REQUIRE(ws[i] == (w1[i] + w2[i]) % 11);
}

TEST_CASE("generator has the designed consecutive roots") {
    for (auto [p, m, d] : {std::tuple{2, 4, 3}, {2, 4, 5}, {3, 2, 5}, {11, 1, 7}, {11, 2, 9}, {13, 2, 5}}) {
        BchCode c(p, m, d);
        const auto& K = c.field();
        const auto& g = c.generator();
        for (int j = 1; j <= d - 1; ++j) {
            int acc = 0, xp = 1, root = K.alpha_pow(j);
            for (int coef : g) {
                acc = K.add(acc, K.mul(coef, xp));
                xp = K.mul(xp, root);
            }
            REQUIRE(acc == 0);
        }
    }
}

TEST_CASE("bounded distance decoding over GF(11)") {
    BchCode c(11, 1, 7);
    std::mt19937_64 rng(2);
    auto m = random_word(rng, 4, 11);
    auto w = c.encode_systematic(m);
    CHECK(*c.decode(w) == w);
    for (int e = 1; e <= 3; ++e) {
        for (int trial = 0; trial < 500; ++trial) {
            auto cor = inject(rng, w, e, 11);
            auto dec = c.decode(cor);
            REQUIRE(dec.has_value());
            REQUIRE(*dec == w);
        }
        // fresh codeword per error weight
        m = random_word(rng, 4, 11);
        w = c.encode_systematic(m);
    }
}

TEST_CASE("beyond half distance never crashes") {
    BchCode c(11, 1, 7);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto m = random_word(rng, 4, 11);
        auto w = c.encode_systematic(m);
        auto cor = inject(rng, w, 4 + static_cast<int>(rng() % 3), 11);
        auto dec = c.decode(cor);
        if (dec) CHECK(c.is_codeword(*dec));
    }
}

TEST_CASE("shortened decoding") {
    // shorten [15,11,3] to n=12 and [120,104,9] to n=20
    std::mt19937_64 rng(4);
    {
        BchCode c(2, 4, 3);
        int k = c.dimension_for(12);
        for (int trial = 0; trial < 300; ++trial) {
            auto m = random_word(rng, k, 2);
            auto w = c.encode_systematic(m);
            REQUIRE(static_cast<int>(w.size()) == 12);
            auto cor = inject(rng, w, 1, 2);
            auto dec = c.decode(cor);
            REQUIRE(dec.has_value());
            REQUIRE(*dec == w);
        }
    }
    {
        BchCode c(11, 2, 9);
        int k = c.dimension_for(20);
        for (int trial = 0; trial < 100; ++trial) {
            auto m = random_word(rng, k, 11);
            auto w = c.encode_systematic(m);
            auto cor = inject(rng, w, 1 + static_cast<int>(rng() % 4), 11);
            auto dec = c.decode(cor);
            REQUIRE(dec.has_value());
            REQUIRE(*dec == w);
        }
    }
}

TEST_CASE("minimum distance at desk scale") {
    // exhaustive codeword scans where the dimension permits
    {
        BchCode c(2, 4, 3);  // [15, 11, 3]
        int k = c.dimension_for(15);
        int minw = 15;
        for (uint64_t v = 1; v < (1ULL << k); ++v) {
            std::vector<int> m(k);
            for (int i = 0; i < k; ++i) m[i] = (v >> i) & 1;
            auto w = c.encode_systematic(m);
            int wt = 0;
            for (int b : w) wt += b != 0;
            minw = std::min(minw, wt);
        }
        CHECK(minw >= 3);
    }
    {
        BchCode c(11, 1, 7);  // [10, 4, >=7]
        int minw = 10;
        for (int64_t v = 1; v < 11 * 11 * 11 * 11; ++v) {
            std::vector<int> m(4);
            int64_t t = v;
            for (int i = 0; i < 4; ++i) {
                m[i] = t % 11;
                t /= 11;
            }
            auto w = c.encode_systematic(m);
            int wt = 0;
            for (int b : w) wt += b != 0;
            minw = std::min(minw, wt);
        }
        CHECK(minw >= 7);
    }
    {
        BchCode c(3, 2, 5);  // [8, k, >=5] over GF(3)
        int k = c.dimension_for(8);
        int total = 1;
        for (int i = 0; i < k; ++i) total *= 3;
        int minw = 8;
        for (int v = 1; v < total; ++v) {
            std::vector<int> m(k);
            int t = v;
            for (int i = 0; i < k; ++i) {
                m[i] = t % 3;
                t /= 3;
            }
            auto w = c.encode_systematic(m);
            int wt = 0;
            for (int b : w) wt += b != 0;
            minw = std::min(minw, wt);
        }
        CHECK(minw >= 5);
    }
}

TEST_CASE("parity length formula") {
    CHECK(bch_parity_length_formula(2, 2, 1, 2) == 16);
    CHECK(bch_parity_length_formula(1, 1, 0, 1) == 2);
    // the formula matches the constructed generator degree on the instances
    // the block codes actually use
    for (auto [tb, ell, s] : {std::tuple{1, 1, 0}, {1, 2, 0}, {1, 1, 1}, {2, 2, 1}, {2, 1, 0}}) {
        int64_t p = smallest_prime_at_least(static_cast<int64_t>(tb) * ell + 5);
        for (int m = 1; m <= 2; ++m) {
            int d = 2 * (tb + 2 * s) + 1;
            if (d > static_cast<int>(std::pow(static_cast<double>(p), m)) - 1) continue;
            BchCode c(static_cast<int>(p), m, d);
            REQUIRE(c.parity() == bch_parity_length_formula(tb, ell, s, m));
        }
    }
}
