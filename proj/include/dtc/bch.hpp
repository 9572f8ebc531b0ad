#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dtc/galois.hpp"

namespace dtc {

// Narrow-sense BCH code over GF(p) with locator field GF(p^m) and designed
// distance d.  The mother code has length p^m - 1; all encode/decode entry
// points work on words shortened to any length n <= p^m - 1 (the word's first
// symbol is the highest-degree coefficient, so shortening fixes leading
// positions to zero).
class BchCode {
public:
    BchCode(int p, int m, int design_distance);

    int p() const { return p_; }
    int m() const { return field_.m(); }
    int design_distance() const { return d_; }
    int mother_length() const { return field_.q() - 1; }
    int parity() const { return static_cast<int>(generator_.size()) - 1; }  // deg g
    int dimension_for(int n) const { return n - parity(); }
    const std::vector<int>& generator() const { return generator_; }  // low-order first

    // Systematic: codeword = (msg, parity), length msg.size() + parity().
    std::vector<int> encode_systematic(const std::vector<int>& msg) const;

    // All d-1 syndromes vanish.
    bool is_codeword(const std::vector<int>& word) const;

    // Bounded-distance decoding: syndromes, Berlekamp-Massey, root scan over
    // the word's positions, Forney error values.  nullopt when the locator
    // degree and root count disagree, a correction leaves GF(p), or the
    // corrected word still has a nonzero syndrome.
    std::optional<std::vector<int>> decode(const std::vector<int>& word) const;

    const ExtensionField& field() const { return field_; }

private:
    std::vector<int> syndromes(const std::vector<int>& word) const;

    int p_, d_;
    ExtensionField field_;
    std::vector<int> generator_;
};

// ceil(2(t_b+2s)(1-1/p)) * m with p the smallest prime >= t_b*ell + 5.  This
// is the cited parity ledger for the block-code instances; the constructed
// generator degree is the operative value and can differ at small m.
int bch_parity_length_formula(int t_b, int ell, int s, int m);

// Smallest m with p^m - 1 >= min_len.
int min_extension_degree(int p, int min_len);

}  // namespace dtc
