#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dtc/bch.hpp"
#include "dtc/outcome.hpp"
#include "dtc/sequence.hpp"

namespace dtc {

// Classic VT reinsertion.  modulus = n + 1 for the original length n.  When
// len(y) == modulus - 1 the word is checked and returned unchanged; when
// len(y) == modulus - 2 the deleted bit (either value) is restored.
DecodeOutcome vt_decode_deletion(const BitString& y, int64_t a, int64_t modulus);

// Length-n code correcting one deletion (of either bit) plus up to s_plus
// right-shifts and s_minus left-shifts of 0:
//   VT(x) = a (mod n+s+1),  wt(x) = b (mod 2),  psi(x) in a binary
//   narrow-sense BCH code with designed distance 2s+1 shortened to n.
class ShiftCode {
public:
    ShiftCode(int n, int s_plus, int s_minus, int64_t a, int b);

    int n() const { return n_; }
    int s_plus() const { return s_plus_; }
    int s_minus() const { return s_minus_; }
    int s() const { return s_plus_ + s_minus_; }
    int64_t a() const { return a_; }
    int b() const { return b_; }
    const BchCode& bch() const { return bch_; }
    int bch_parity_bits() const { return bch_.parity(); }

    bool member(const BitString& x) const;
    DecodeOutcome decode(const BitString& y) const;

    std::vector<BitString> codebook() const;  // n <= 24

private:
    BitString psi_word_decode(const BitString& xhat) const;  // empty on failure

    int n_, s_plus_, s_minus_;
    int64_t a_;
    int b_;
    BchCode bch_;
};

}  // namespace dtc
