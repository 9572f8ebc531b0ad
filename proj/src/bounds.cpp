#include "dtc/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace dtc {

namespace {

double factorial(int n) {
    double r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

double upper_bound_size(int n, int t, int s) {
    if (n < 1) throw std::invalid_argument("upper_bound_size: n >= 1");
    return std::pow(2.0, n) / std::pow(static_cast<double>(n), s + t) * factorial(s) *
           factorial(t) * std::pow(2.0, s + 2 * t);
}

double lower_bound_redundancy(int n, int t, int s) {
    if (n < 1) throw std::invalid_argument("lower_bound_redundancy: n >= 1");
    return (t + s) * std::log2(static_cast<double>(n));
}

unsigned __int128 phi_cardinality(int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("phi_cardinality: 0 <= n <= 64");
    unsigned __int128 sum = 0, c = 1;  // c = C(n, w-1), starting at w = 1
    for (int w = 1; w <= n + 1; ++w) {
        sum += c;
        c = c * static_cast<unsigned>(n - (w - 1)) / static_cast<unsigned>(w);
    }
    return sum;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

double typical_block_fraction(int i) {
    if (i < 0) throw std::invalid_argument("typical_block_fraction: i >= 0");
    return std::pow(2.0, -(i + 2));
}

double empirical_block_fraction(int n, int i) {
    if (n < i + 2 || n > 26) throw std::invalid_argument("empirical_block_fraction: range");
    // cyclic count of windows 1 0^i 1
    auto rot = [n](uint32_t v, int r) {
        return ((v >> r) | (v << (n - r))) & ((1u << n) - 1);
    };
    long long total = 0;
    for (uint32_t v = 0; v < (1u << n); ++v) {
        uint32_t match = v & rot(v, i + 1);
        for (int z = 1; z <= i; ++z) match &= ~rot(v, z);
        total += __builtin_popcount(match);
    }
    return static_cast<double>(total) / std::pow(2.0, n) / n;
}

double block_code_size_lower_bound(int n, int t_b, int ell, int s, int64_t p) {
    (void)ell;
    int64_t dm1 = 2 * (static_cast<int64_t>(t_b) + 2 * s);
    int64_t expo = (dm1 * (p - 1) + p - 1) / p;  // ceil(2(t_b+2s)(1-1/p))
    return std::pow(2.0, n) /
           (static_cast<double>(p) * std::pow(static_cast<double>(n + 1), static_cast<double>(expo)));
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["t"] = t;
    j["s"] = s;
    j["upper_size"] = upper_size;
    j["upper_size_note"] = "asymptotic - informational";
    j["lower_redundancy_bits"] = lower_redundancy_bits;
    if (t_b >= 0) {
        j["t_b"] = t_b;
        j["ell"] = ell;
        j["p"] = p;
        j["block_size_lower"] = block_size_lower;
    }
    nlohmann::json typ;
    for (const auto& [i, v] : typicality) typ[std::to_string(i)] = v;
    j["typicality"] = typ;
    return j.dump();
}

BoundReport bound_report(int n, int t, int s) {
    BoundReport r;
    r.n = n;
    r.t = t;
    r.s = s;
    r.upper_size = upper_bound_size(n, t, s);
    r.lower_redundancy_bits = lower_bound_redundancy(n, t, s);
    for (int i = 0; i <= 3; ++i) r.typicality[i] = typical_block_fraction(i);
    return r;
}

BoundReport bound_report_block(int n, int t_b, int ell, int s, int64_t p) {
    BoundReport r = bound_report(n, t_b, s);
    r.t_b = t_b;
    r.ell = ell;
    r.p = p;
    r.block_size_lower = block_code_size_lower_bound(n, t_b, ell, s, p);
    return r;
}

}  // namespace dtc
