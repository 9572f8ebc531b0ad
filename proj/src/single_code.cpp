#include "dtc/single_code.hpp"

#include <map>
#include <stdexcept>

#include "dtc/galois.hpp"

namespace dtc {

SingleCode::SingleCode(int n, int64_t a) : SingleCode(n, a, smallest_prime_at_least(4L * n + 1)) {}

SingleCode::SingleCode(int n, int64_t a, int64_t p) : n_(n), p_(p), a_(a) {
    if (n < 1) throw std::invalid_argument("SingleCode: n >= 1 required");
    if (!is_prime(p) || p <= 4L * n) throw std::invalid_argument("SingleCode: prime > 4n required");
    if (a < 0 || a >= p) throw std::invalid_argument("SingleCode: residue out of range");
    // the two shift windows [1, 2n-1] and [p-2n+1, p-1] must not meet
    if (2L * n - 1 >= p - 2L * n + 1) throw std::logic_error("SingleCode: windows overlap");
}

int64_t SingleCode::syndrome(const BitString& x, int64_t p) {
    PhiVector u = phi(x);
    int64_t s = 0;
    for (size_t i = 0; i < u.size(); ++i)
        s = (s + static_cast<int64_t>(i + 1) * (i + 1) % p * u[i]) % p;
    return s;
}

bool SingleCode::member(const BitString& x) const {
    if (static_cast<int>(x.size()) != n_) return false;
    return syndrome(x, p_) == a_;
}

SingleCode SingleCode::best(int n) {
    if (n > 26) throw std::invalid_argument("SingleCode::best: exhaustive count limited to n <= 26");
    int64_t p = smallest_prime_at_least(4L * n + 1);
    std::vector<int64_t> count(p, 0);
    for (uint64_t v = 0; v < (1ULL << n); ++v) ++count[syndrome(bits_from_index(v, n), p)];
    int64_t best_a = 0;
    for (int64_t a = 1; a < p; ++a)
        if (count[a] > count[best_a]) best_a = a;
    return SingleCode(n, best_a, p);
}

DecodeOutcome SingleCode::decode(const BitString& y) const {
    int len = static_cast<int>(y.size());
    int64_t a1 = syndrome(y, p_);
    PhiVector u = phi(y);
    int w = weight(y);

    if (len == n_ - 1) {
        // one 0 deleted from gap i:  a - a' = i^2 (mod p)
        int64_t delta = ((a_ - a1) % p_ + p_) % p_;
        for (int i = 1; i <= w + 1; ++i) {
            if (static_cast<int64_t>(i) * i % p_ == delta) {
                PhiVector v = u;
                ++v[i - 1];
                return DecodeOutcome::success(phi_inverse(v));
            }
        }
        return DecodeOutcome::fail(DecodeStatus::no_solution);
    }

    if (len == n_) {
        if (a1 == a_) return DecodeOutcome::success(y);
        int64_t delta = ((a_ - a1) % p_ + p_) % p_;
        // left-shift of 0 at the g-th 1 (10 -> 01) adds (2g+1); a right-shift
        // subtracts it.  p > 4n keeps the two windows apart.
        if (delta >= 1 && delta <= 2L * n_ - 1) {
            if (delta % 2 == 0) return DecodeOutcome::fail(DecodeStatus::no_solution);
            int g = static_cast<int>((delta - 1) / 2);
            // undo 10 -> 01: move the 0 from gap g back into gap g+1
            if (g >= 1 && g + 1 <= w + 1 && u[g - 1] >= 1) {
                PhiVector v = u;
                --v[g - 1];
                ++v[g];
                return DecodeOutcome::success(phi_inverse(v));
            }
            return DecodeOutcome::fail(DecodeStatus::no_solution);
        }
        if (delta >= p_ - 2L * n_ + 1 && delta <= p_ - 1) {
            int64_t d2 = p_ - delta;
            if (d2 % 2 == 0) return DecodeOutcome::fail(DecodeStatus::no_solution);
            int g = static_cast<int>((d2 - 1) / 2);
            // undo 01 -> 10: move the 0 from gap g+1 back into gap g
            if (g >= 1 && g + 1 <= w + 1 && u[g] >= 1) {
                PhiVector v = u;
                ++v[g - 1];
                --v[g];
                return DecodeOutcome::success(phi_inverse(v));
            }
            return DecodeOutcome::fail(DecodeStatus::no_solution);
        }
        return DecodeOutcome::fail(DecodeStatus::no_solution);
    }

    return DecodeOutcome::fail(DecodeStatus::invalid_input);
}

std::vector<BitString> SingleCode::codebook() const {
    if (n_ > 24) throw std::invalid_argument("SingleCode: codebook too large to enumerate");
    std::vector<BitString> out;
    for (uint64_t v = 0; v < (1ULL << n_); ++v) {
        BitString x = bits_from_index(v, n_);
        if (member(x)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace dtc
