#include "dtc/shift_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtc {

DecodeOutcome vt_decode_deletion(const BitString& y, int64_t a, int64_t modulus) {
    int64_t n = modulus - 1;  // original length
    int len = static_cast<int>(y.size());
    int64_t vt = static_cast<int64_t>(vt_syndrome(y)) % modulus;

    if (len == n) {
        if (vt == ((a % modulus) + modulus) % modulus) return DecodeOutcome::success(y);
        return DecodeOutcome::fail(DecodeStatus::no_solution);
    }
    if (len != n - 1) return DecodeOutcome::fail(DecodeStatus::invalid_input);

    int64_t delta = (((a - vt) % modulus) + modulus) % modulus;
    int w = weight(y);
    if (delta <= w) {
        // deleted 0 with delta ones to its right
        BitString x = y;
        int seen = 0;
        int pos = len;  // insertion index, bits to the right of it
        for (int i = len - 1; i >= 0; --i) {
            if (seen == delta) break;
            if (y[i]) ++seen;
            pos = i;
        }
        if (seen != delta) return DecodeOutcome::fail(DecodeStatus::no_solution);
        x.insert(x.begin() + pos, 0);
        return DecodeOutcome::success(x);
    }
    // deleted 1 with L0 = delta - w - 1 zeros to its left
    int64_t l0 = delta - w - 1;
    if (l0 < 0 || l0 > len - w) return DecodeOutcome::fail(DecodeStatus::no_solution);
    BitString x = y;
    int zeros = 0, pos = 0;
    while (pos < len && zeros < l0) {
        if (!y[pos]) ++zeros;
        ++pos;
    }
    if (zeros != l0) return DecodeOutcome::fail(DecodeStatus::no_solution);
    x.insert(x.begin() + pos, 1);
    return DecodeOutcome::success(x);
}

ShiftCode::ShiftCode(int n, int s_plus, int s_minus, int64_t a, int b)
    : n_(n),
      s_plus_(s_plus),
      s_minus_(s_minus),
      a_(a),
      b_(b),
      bch_(2, min_extension_degree(2, n), 2 * (s_plus + s_minus) + 1) {
    if (n < 2) throw std::invalid_argument("ShiftCode: n >= 2 required");
    if (s_plus < 0 || s_minus < 0 || s_plus + s_minus < 1)
        throw std::invalid_argument("ShiftCode: shift budgets invalid");
    if (a < 0 || a > n + s()) throw std::invalid_argument("ShiftCode: residue out of range");
    if (b != 0 && b != 1) throw std::invalid_argument("ShiftCode: parity bit out of range");
    if (bch_.dimension_for(n) < 1) throw std::invalid_argument("ShiftCode: n too small for BCH");
}

namespace {

std::vector<int> to_symbols(const BitString& x) {
    return std::vector<int>(x.begin(), x.end());
}

BitString to_bits(const std::vector<int>& v) {
    BitString x(v.size());
    for (size_t i = 0; i < v.size(); ++i) x[i] = static_cast<Bit>(v[i]);
    return x;
}

// insert one 0 so that exactly q ones lie to its right
BitString insert_zero_by_right_ones(const BitString& y, int q) {
    int len = static_cast<int>(y.size());
    int seen = 0, pos = len;
    for (int i = len - 1; i >= 0 && seen < q; --i) {
        if (y[i]) ++seen;
        pos = i;
    }
    BitString x = y;
    x.insert(x.begin() + pos, 0);
    return x;
}

// insert one 1 so that exactly q zeros lie to its left
BitString insert_one_by_left_zeros(const BitString& y, int q) {
    int len = static_cast<int>(y.size());
    int zeros = 0, pos = 0;
    while (pos < len && zeros < q) {
        if (!y[pos]) ++zeros;
        ++pos;
    }
    BitString x = y;
    x.insert(x.begin() + pos, 1);
    return x;
}

}  // namespace

bool ShiftCode::member(const BitString& x) const {
    if (static_cast<int>(x.size()) != n_) return false;
    int64_t mod = n_ + s() + 1;
    if (static_cast<int64_t>(vt_syndrome(x)) % mod != a_) return false;
    if (weight(x) % 2 != b_) return false;
    return bch_.is_codeword(to_symbols(psi(x)));
}

BitString ShiftCode::psi_word_decode(const BitString& xhat) const {
    auto fixed = bch_.decode(to_symbols(psi(xhat)));
    if (!fixed) return {};
    return psi_inverse(to_bits(*fixed));
}

DecodeOutcome ShiftCode::decode(const BitString& y) const {
    int len = static_cast<int>(y.size());
    int64_t mod = n_ + s() + 1;

    if (len == n_) {
        BitString x = psi_word_decode(y);
        if (x.empty()) return DecodeOutcome::fail(DecodeStatus::bch_failure);
        if (!member(x)) return DecodeOutcome::fail(DecodeStatus::no_solution);
        return DecodeOutcome::success(x);
    }
    if (len != n_ - 1) return DecodeOutcome::fail(DecodeStatus::invalid_input);

    int w = weight(y);
    // lift the VT difference into the window that contains every reachable
    // value; left-shifts can push the true difference below zero, so the
    // window starts at -s_minus rather than 0
    int64_t res = (((a_ - static_cast<int64_t>(vt_syndrome(y))) % mod) + mod) % mod;
    int64_t delta = res;
    if (delta > n_ + s() - s_minus_) delta -= mod;

    int c = ((b_ - w) % 2 + 2) % 2;
    BitString xhat;
    if (c == 0) {
        // a 0 was deleted; aim q = delta - s+ + s- ones to the right of it
        int64_t q = std::clamp<int64_t>(delta - s_plus_ + s_minus_, 0, w);
        xhat = insert_zero_by_right_ones(y, static_cast<int>(q));
    } else {
        // a 1 was deleted; aim q = delta - w - 1 - s+ + s- zeros to its left
        int64_t q = std::clamp<int64_t>(delta - w - 1 - s_plus_ + s_minus_, 0,
                                        static_cast<int64_t>(len - w));
        xhat = insert_one_by_left_zeros(y, static_cast<int>(q));
    }

    BitString x = psi_word_decode(xhat);
    if (x.empty()) return DecodeOutcome::fail(DecodeStatus::bch_failure);
    if (!member(x)) return DecodeOutcome::fail(DecodeStatus::no_solution);
    return DecodeOutcome::success(x);
}

std::vector<BitString> ShiftCode::codebook() const {
    if (n_ > 24) throw std::invalid_argument("ShiftCode: codebook too large to enumerate");
    std::vector<BitString> out;
    for (uint64_t v = 0; v < (1ULL << n_); ++v) {
        BitString x = bits_from_index(v, n_);
        if (member(x)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace dtc
