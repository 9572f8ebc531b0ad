#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dtc {

using Bit = uint8_t;
using BitString = std::vector<Bit>;  // symbols in {0,1}
using PhiVector = std::vector<int>;  // 0-run lengths, see phi()
using IntVector = std::vector<int>;

// q-ary string, used by the Lee-metric utilities.
struct QaryString {
    int q = 2;
    std::vector<int> symbols;
};

int weight(const BitString& x);
int run_count(const BitString& x);

// Writing x = 0^{u_1} 1 0^{u_2} 1 ... 1 0^{u_{w+1}} with w = wt(x),
// phi(x) = (u_1, ..., u_{w+1}).  phi(empty) = (0).
//
// Appending a trailing 1 to x does not change the vector: the variant map
// defined on strings that end in 1 (length wt(x1), no gap after the final 1)
// produces exactly phi(x).  One function covers both.
PhiVector phi(const BitString& x);
BitString phi_inverse(const PhiVector& u);

// Prefix parity: psi(x)_i = (x_1 + ... + x_i) mod 2.  psi(empty) = empty.
BitString psi(const BitString& x);
BitString psi_inverse(const BitString& y);

// VT(x) = sum of i * x_i over 1-based positions.
uint64_t vt_syndrome(const BitString& x);

int lee_weight(const QaryString& x);
// lee_weight((x - y) mod q); throws std::invalid_argument on length or
// alphabet mismatch.
int lee_distance(const QaryString& x, const QaryString& y);

// L1 distance between equal-length integer vectors.  This is the Lee distance
// on gap vectors (entries are small against any modulus in use).
long l1_distance(const PhiVector& a, const PhiVector& b);

std::string to_text(const BitString& x);
BitString bits_from_text(const std::string& s);  // throws on non-'0'/'1'
// Bit at 1-based position i is (v >> (i-1)) & 1.
BitString bits_from_index(uint64_t v, int n);

std::string phi_to_text(const PhiVector& u);  // comma-separated decimals
PhiVector phi_from_text(const std::string& s);

}  // namespace dtc
