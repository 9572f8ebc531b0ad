#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace dtc {

// (2^n / n^{s+t}) * s! * t! * 2^{s+2t}.  Asymptotic: informational, not a
// hard cap at small n.
double upper_bound_size(int n, int t, int s);

// (t+s) * log2(n)
double lower_bound_redundancy(int n, int t, int s);

// sum over w = 1..n+1 of C(n, w-1); equals 2^n exactly.  n <= 64.
unsigned __int128 phi_cardinality(int n);
std::string u128_to_string(unsigned __int128 v);

// lambda_i = 2^{-(i+2)}
double typical_block_fraction(int i);

// Average number of maximal 0^i 1 blocks per position over all length-n
// strings, counted cyclically (the window 1 0^i 1; cyclic reading removes
// edge bias).  Exhaustive; n <= 26.
double empirical_block_fraction(int n, int i);

// 2^n / (p * (n+1)^{ceil(2(t_b+2s)(1-1/p))})
double block_code_size_lower_bound(int n, int t_b, int ell, int s, int64_t p);

struct BoundReport {
    int n = 0, t = 0, s = 0;
    int t_b = -1, ell = -1;   // -1 when not applicable
    int64_t p = -1;
    double upper_size = 0;                 // asymptotic, informational
    double lower_redundancy_bits = 0;
    double block_size_lower = -1;          // -1 when not applicable
    std::map<int, double> typicality;      // i -> lambda_i

    std::string to_json() const;
};

BoundReport bound_report(int n, int t, int s);
BoundReport bound_report_block(int n, int t_b, int ell, int s, int64_t p);

}  // namespace dtc
