#pragma once

#include <cstdint>
#include <vector>

#include "dtc/outcome.hpp"
#include "dtc/sequence.hpp"

namespace dtc {

// Length-n code correcting a single 0-deletion or a single adjacent
// transposition: all x with sum of i^2 * phi(x)_i congruent to a mod p,
// p prime > 4n.
class SingleCode {
public:
    SingleCode(int n, int64_t a);              // p = smallest prime > 4n
    SingleCode(int n, int64_t a, int64_t p);   // explicit prime, validated

    int n() const { return n_; }
    int64_t p() const { return p_; }
    int64_t a() const { return a_; }

    static int64_t syndrome(const BitString& x, int64_t p);

    bool member(const BitString& x) const;

    // Residue maximizing the codebook size (smallest residue on ties).
    static SingleCode best(int n);

    // y is a codeword with one 0 deleted, or one adjacent pair swapped, or
    // untouched.  Outside that model: no_solution.
    DecodeOutcome decode(const BitString& y) const;

    std::vector<BitString> codebook() const;  // n <= 24

private:
    int n_;
    int64_t p_, a_;
};

}  // namespace dtc
