#include <cmath>
#include <map>
#include <queue>

#include "doctest.h"
#include "dtc/oracle.hpp"
#include "dtc/shift_code.hpp"

using namespace dtc;

namespace {

// swap-only distance via breadth-first search, capped
int swap_distance(const BitString& from, const BitString& to, int cap) {
    if (from == to) return 0;
    std::set<BitString> seen = {from};
    std::queue<std::pair<BitString, int>> q;
    q.push({from, 0});
    while (!q.empty()) {
        auto [cur, d] = q.front();
        q.pop();
        if (d == cap) continue;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] == cur[i + 1]) continue;
            BitString next = cur;
            std::swap(next[i], next[i + 1]);
            if (next == to) return d + 1;
            if (seen.insert(next).second) q.push({next, d + 1});
        }
    }
    return cap + 1;
}

}  // namespace

TEST_CASE("vt reinsertion") {
    BitString x = bits_from_text("0100101001");
    CHECK(vt_decode_deletion(x, vt_syndrome(x) % 11, 11).word == x);
    for (int n = 4; n <= 10; ++n) {
        for (uint64_t v = 0; v < (1ULL << n); ++v) {
            BitString z = bits_from_index(v, n);
            int64_t a = vt_syndrome(z) % (n + 1);
            for (int i = 0; i < n; ++i) {
                BitString y = z;
                y.erase(y.begin() + i);
                auto out = vt_decode_deletion(y, a, n + 1);
                REQUIRE(out.ok());
                REQUIRE(out.word == z);
            }
        }
    }
}

TEST_CASE("right shifts lower the VT syndrome one by one") {
    for (uint64_t v = 0; v < (1ULL << 10); ++v) {
        BitString x = bits_from_index(v, 10);
        BitString cur = x;
        for (int k = 1; k <= 2; ++k) {
            // apply one more right-shift of 0 if possible
            bool done = false;
            for (size_t i = 0; i + 1 < cur.size() && !done; ++i) {
                if (cur[i] == 0 && cur[i + 1] == 1) {
                    std::swap(cur[i], cur[i + 1]);
                    done = true;
                }
            }
            if (!done) break;
            REQUIRE(static_cast<int64_t>(vt_syndrome(x)) -
                        static_cast<int64_t>(vt_syndrome(cur)) ==
                    k);
        }
    }
}

TEST_CASE("misplaced reinsertion costs at most v transpositions") {
    // deleting a 0 before the p-th 1 and reinserting before the (p+v)-th is
    // at most v adjacent transpositions away
    for (uint64_t val = 0; val < (1ULL << 8); ++val) {
        BitString x = bits_from_index(val, 8);
        PhiVector u = phi(x);
        int w = weight(x);
        for (int gp = 1; gp <= w + 1; ++gp) {
            if (u[gp - 1] == 0) continue;
            for (int v = 1; v <= 3 && gp + v <= w + 1; ++v) {
                PhiVector mis = u;
                --mis[gp - 1];
                ++mis[gp + v - 1];
                BitString xhat = phi_inverse(mis);
                REQUIRE(swap_distance(xhat, x, v) <= v);
            }
        }
    }
}

TEST_CASE("membership and codebook size") {
    ShiftCode c(10, 1, 0, 3, 1);
    BitString member_found;
    for (const auto& x : c.codebook()) {
        REQUIRE(static_cast<int64_t>(vt_syndrome(x)) % 12 == 3);
        REQUIRE(weight(x) % 2 == 1);
        member_found = x;
    }
    REQUIRE(!member_found.empty());
    // parity flip leaves the code
    CHECK(!ShiftCode(10, 1, 0, 3, 0).member(member_found));

    for (int n : {12, 14}) {
        int s = 1;
        ShiftCode probe(n, 1, 0, 0, 0);
        double floor_size =
            std::pow(2.0, n) / (2.0 * (n + s + 1) * std::pow(2.0, probe.bch_parity_bits()));
        size_t best = 0;
        for (int64_t a = 0; a <= n + s; ++a)
            for (int b = 0; b <= 1; ++b)
                best = std::max(best, ShiftCode(n, 1, 0, a, b).codebook().size());
        REQUIRE(static_cast<double>(best) >= floor_size);
    }
}

TEST_CASE("decode identity and exhaustive n=10") {
    ShiftCode c(10, 1, 0, 3, 1);
    for (const auto& x : c.codebook()) {
        auto out = c.decode(x);
        REQUIRE(out.ok());
        REQUIRE(out.word == x);
    }
    auto rep = verify_shift_exhaustive(10, 1, 0);
    CHECK(rep.verified());
    if (!rep.verified()) MESSAGE(rep.failures[0]);
}

TEST_CASE("mixed shift budgets decode exhaustively") {
    // left-shifts pull the VT difference below zero; the lift window covers it
    CHECK(verify_shift_exhaustive(10, 0, 1).verified());
    CHECK(verify_shift_exhaustive(10, 1, 1).verified());
}

TEST_CASE("redundancy at desk scale") {
    // best (a, b) class against (1+s) log2(n+s+1) + 1 plus the shortening
    // slack of the BCH component
    for (int n : {10, 12, 14}) {
        int s = 1;
        ShiftCode probe(n, 1, 0, 0, 0);
        size_t best = 0;
        for (int64_t a = 0; a <= n + s; ++a)
            for (int b = 0; b <= 1; ++b)
                best = std::max(best, ShiftCode(n, 1, 0, a, b).codebook().size());
        double red = n - std::log2(static_cast<double>(best));
        double slack = probe.bch_parity_bits() - s * std::log2(n + s + 1.0);
        double bound = (1 + s) * std::log2(n + s + 1.0) + 1 + std::max(slack, 0.0);
        REQUIRE(red <= bound + 1e-9);
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS(ShiftCode(10, 0, 0, 0, 0));
    CHECK_THROWS(ShiftCode(10, 1, 0, 12, 0));  // a > n+s
    CHECK_THROWS(ShiftCode(10, 1, 0, 0, 2));
}
