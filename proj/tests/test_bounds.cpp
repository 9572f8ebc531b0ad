#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "dtc/bounds.hpp"
#include "dtc/channel.hpp"
#include "dtc/oracle.hpp"
#include "dtc/single_code.hpp"

using namespace dtc;

TEST_CASE("upper bound formula") {
    CHECK(upper_bound_size(16, 1, 1) == doctest::Approx(2048.0));
    CHECK(upper_bound_size(10, 0, 0) == doctest::Approx(1024.0));
}

TEST_CASE("maximum code versus the asymptotic cap") {
    // exact search where it is fast, rigorous clique-cover bound above that
    int exact9 = max_code_size(9, 1, 0);
    CHECK(exact9 <= upper_bound_size(9, 1, 0));
    CHECK(exact9 >= 2048.0 / 9 / 4);  // far above the trivial floor
    int cover9 = max_code_cover_bound(9, 1, 0);
    CHECK(exact9 <= cover9);
    CHECK(max_code_cover_bound(10, 1, 0) <= upper_bound_size(10, 1, 0));
}

TEST_CASE("exact small maxima against subset brute force") {
    // independent route: test every subset of length-n strings directly
    auto brute = [](int n, int t, int s) {
        int total = 1 << n;
        std::vector<std::set<BitString>> balls(total);
        for (int v = 0; v < total; ++v) balls[v] = error_ball(bits_from_index(v, n), t, s);
        std::vector<uint32_t> conflict(total, 0);
        for (int a = 0; a < total; ++a)
            for (int b = a + 1; b < total; ++b)
                for (const auto& y : balls[a])
                    if (balls[b].count(y)) {
                        conflict[a] |= 1u << b;
                        conflict[b] |= 1u << a;
                        break;
                    }
        int best = 0;
        for (uint32_t mask = 0; mask < (1u << total); ++mask) {
            bool ok = true;
            for (int a = 0; a < total && ok; ++a)
                if ((mask >> a) & 1)
                    if (mask & conflict[a]) ok = false;
            if (ok) best = std::max(best, __builtin_popcount(mask));
        }
        return best;
    };
    CHECK(max_code_size(4, 1, 0) == brute(4, 1, 0));
    CHECK(max_code_size(4, 0, 1) == brute(4, 0, 1));
    CHECK(max_code_size(4, 1, 1) == brute(4, 1, 1));
}

TEST_CASE("lower bound redundancy") {
    CHECK(lower_bound_redundancy(1024, 1, 1) == doctest::Approx(20.0));
    CHECK(lower_bound_redundancy(777, 0, 0) == doctest::Approx(0.0));
    // measured redundancy of a constructed code sits above the bound
    SingleCode best = SingleCode::best(10);
    double red = 10 - std::log2(static_cast<double>(best.codebook().size()));
    CHECK(red >= lower_bound_redundancy(10, 1, 0) - 1.0);
}

TEST_CASE("gap-vector cardinality") {
    CHECK(u128_to_string(phi_cardinality(10)) == "1024");
    CHECK(u128_to_string(phi_cardinality(0)) == "1");
    for (int n = 0; n <= 64; ++n) {
        unsigned __int128 expect =
            n == 64 ? static_cast<unsigned __int128>(1) << 64
                    : static_cast<unsigned __int128>(1) << n;
        REQUIRE(phi_cardinality(n) == expect);
    }
}

TEST_CASE("typical block fractions") {
    CHECK(typical_block_fraction(1) == doctest::Approx(0.125));
    CHECK(typical_block_fraction(0) == doctest::Approx(0.25));
    for (int i = 0; i <= 3; ++i) {
        double emp = empirical_block_fraction(20, i);
        double lam = typical_block_fraction(i);
        REQUIRE(std::abs(emp - lam) / lam <= 0.10);
    }
}

TEST_CASE("block code size lower bound") {
    CHECK(block_code_size_lower_bound(10, 1, 1, 0, 11) ==
          doctest::Approx(1024.0 / (11.0 * 121.0)));
    CHECK(block_code_size_lower_bound(10, 2, 1, 0, 11) <
          block_code_size_lower_bound(10, 1, 1, 0, 11));
}

TEST_CASE("report serialization") {
    BoundReport r = bound_report_block(10, 1, 1, 0, 7);
    std::string j = r.to_json();
    CHECK(j.find("asymptotic") != std::string::npos);
    CHECK(j.find("block_size_lower") != std::string::npos);
    CHECK(bound_report(16, 1, 1).to_json().find("2048") != std::string::npos);
}
