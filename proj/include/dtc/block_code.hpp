#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtc/bch.hpp"
#include "dtc/outcome.hpp"
#include "dtc/sequence.hpp"

namespace dtc {

// Channel parameters: t_b blocks of 0-deletions, each of length at most ell,
// plus s adjacent transpositions.
//
// Gap entries of phi move within [-(t_b*ell + 2), +2] under this channel, so
// unwrapping the mod-p error vector needs p >= t_b*ell + 5 and a positive
// threshold of 2.  That is the default.  strict_paper reproduces the
// published pair (p >= t_b*ell + 4, threshold 1) for comparison; both agree
// on the worked example's p = 11.
struct BlockParams {
    int t_b;
    int ell;
    int s;
    bool strict_paper = false;

    int design_distance() const { return 2 * (t_b + 2 * s) + 1; }
    int64_t prime() const;
    int rep() const { return 2 * t_b * ell + 3; }
    int eps_threshold() const { return strict_paper ? 1 : 2; }
};

// Non-systematic code of length n: phi(x mod p) lies in the p-ary narrow-sense
// BCH code shortened to length wt(x)+1.
class BlockCode {
public:
    BlockCode(int n, BlockParams params);

    int n() const { return n_; }
    const BlockParams& params() const { return params_; }
    int64_t p() const { return params_.prime(); }
    const BchCode& bch() const { return bch_; }

    bool member(const BitString& x) const;
    DecodeOutcome decode(const BitString& y) const;

    // The decode arithmetic with the inner decoder's output supplied by the
    // caller: eps' = (z' - z_star) mod p, unwrap, subtract from phi(y).
    struct Trace {
        std::vector<int> z_prime;
        std::vector<int> z_star;
        IntVector eps_prime;
        IntVector eps;
        DecodeOutcome outcome;
    };
    Trace decode_with_reference(const BitString& y, const std::vector<int>& z_star) const;

    std::vector<BitString> codebook() const;  // n <= 24

private:
    int n_;
    BlockParams params_;
    BchCode bch_;
};

// Maps k bits to k + ceil(log2 k) + 1 bits: a leading 1, then the rank-indexed
// string with exactly ceil((n-1)/2) zeros and floor((n-1)/2) ones, by
// combinatorial-number-system unranking.  nullopt when 2^k exceeds the number
// of such strings.
std::optional<BitString> balance_encode(const BitString& x);
std::optional<BitString> balance_decode(const BitString& y);  // exact inverse

// Fixed-width ceil(log2 p) bits per symbol, big-endian within the symbol.
BitString binary_map(const std::vector<int>& u, int64_t p);
std::optional<std::vector<int>> binary_unmap(const BitString& bits, int64_t p);

// Digest-based protection of the first redundancy region.  The default
// digest is an exact copy, which satisfies the recover contract trivially;
// the interface admits a syndrome-compressed implementation later.
class Protector {
public:
    virtual ~Protector() = default;
    virtual BitString protect(const BitString& h) const = 0;
    virtual std::optional<BitString> recover(const BitString& corrupted,
                                             const BitString& digest) const = 0;
    virtual const char* name() const = 0;
};

class IdentityProtector final : public Protector {
public:
    BitString protect(const BitString& h) const override { return h; }
    std::optional<BitString> recover(const BitString&, const BitString& digest) const override {
        return digest;
    }
    const char* name() const override { return "identity"; }
};

// Length ledger of one systematic instance.
struct SystematicLayout {
    int k;
    BlockParams params;
    int64_t p;
    int m;
    int parity_syms;    // generator degree of the BCH instance
    int formula_syms;   // the cited parity formula; can differ at small m
    int n1_sym;         // symbols of the stored parity word (parity + 1 pad)
    int n1_bits;        // its binary form
    int n1;             // h1: two protecting 1s + balanced parity bits
    int n2_digest;      // protector digest bits
    int n2_bal;         // balanced digest bits
    int n2;             // h2: repeated balanced digest
    int weight_h1;      // 1-count of h1, layout constant
    int weight_h2;      // 1-count of h2, layout constant

    long long total_length() const { return static_cast<long long>(k) + n1 + n2; }
    std::string to_json() const;
};

SystematicLayout layout_for(int k, BlockParams params);

// Systematic encoder/decoder (message first, then h1, then h2).  Region
// boundaries are recovered by counting 1s from the end; in-model corruption
// never changes any region's 1-count.
class SystematicBlockCode {
public:
    SystematicBlockCode(int k, BlockParams params, const Protector& prot);

    const SystematicLayout& layout() const { return layout_; }

    BitString encode(const BitString& msg) const;  // msg.size() == k
    DecodeOutcome decode(const BitString& received) const;

private:
    SystematicLayout layout_;
    BchCode bch_;
    const Protector* prot_;
};

}  // namespace dtc
