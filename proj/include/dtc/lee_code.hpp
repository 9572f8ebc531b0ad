#pragma once

#include <cstdint>
#include <vector>

#include "dtc/outcome.hpp"
#include "dtc/sequence.hpp"

namespace dtc {

// Power-sum syndrome family realizing the uniquely-decodable code for t
// 0-deletions plus s adjacent transpositions with r = t + 2s:
//   sum of i^m * phi(x)_i = a_m (mod p),  m = 1..r,  p prime > max(n, 2(r+1)).
// The minimum-Lee-distance property 2(r+1) of the gap vectors is a verified
// hypothesis per instance, not an assumption; see the exhaustive checks.
class LeeCode {
public:
    LeeCode(int n, int r, std::vector<int64_t> a);              // default prime
    LeeCode(int n, int r, int64_t p, std::vector<int64_t> a);

    int n() const { return n_; }
    int r() const { return r_; }
    int64_t p() const { return p_; }
    const std::vector<int64_t>& a() const { return a_; }

    static int64_t default_prime(int n, int r);
    static std::vector<int64_t> syndromes(const BitString& x, int r, int64_t p);

    bool member(const BitString& x) const;

    // Bounded-distance search: the unique codeword z with wt(z) = wt(y),
    // length n, and L1 distance of gap vectors at most t + 2s.  Requires
    // r == t + 2s.  Two distinct candidates: ambiguous (model violation).
    DecodeOutcome decode(const BitString& y, int t, int s) const;

    std::vector<BitString> codebook() const;  // n <= 24

private:
    int n_, r_;
    int64_t p_;
    std::vector<int64_t> a_;
};

}  // namespace dtc
