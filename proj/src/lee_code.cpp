#include "dtc/lee_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "dtc/galois.hpp"

namespace dtc {

int64_t LeeCode::default_prime(int n, int r) {
    return smallest_prime_at_least(std::max<int64_t>(n, 2L * (r + 1)) + 1);
}

LeeCode::LeeCode(int n, int r, std::vector<int64_t> a)
    : LeeCode(n, r, default_prime(n, r), std::move(a)) {}

LeeCode::LeeCode(int n, int r, int64_t p, std::vector<int64_t> a)
    : n_(n), r_(r), p_(p), a_(std::move(a)) {
    if (r < 1) throw std::invalid_argument("LeeCode: r >= 1 required");
    if (r > 8) throw std::invalid_argument("LeeCode: search radius beyond desk scale");
    if (!is_prime(p) || p <= n || p <= 2L * (r + 1))
        throw std::invalid_argument("LeeCode: prime > max(n, 2(r+1)) required");
    if (static_cast<int>(a_.size()) != r) throw std::invalid_argument("LeeCode: need r residues");
    for (int64_t v : a_)
        if (v < 0 || v >= p) throw std::invalid_argument("LeeCode: residue out of range");
}

std::vector<int64_t> LeeCode::syndromes(const BitString& x, int r, int64_t p) {
    PhiVector u = phi(x);
    std::vector<int64_t> s(r, 0);
    for (size_t i = 0; i < u.size(); ++i) {
        if (!u[i]) continue;
        int64_t ipow = 1;
        for (int m = 0; m < r; ++m) {
            ipow = ipow * static_cast<int64_t>(i + 1) % p;
            s[m] = (s[m] + ipow * u[i]) % p;
        }
    }
    return s;
}

bool LeeCode::member(const BitString& x) const {
    if (static_cast<int>(x.size()) != n_) return false;
    return syndromes(x, r_, p_) == a_;
}

namespace {

struct SearchCtx {
    const PhiVector& base;              // phi(y)
    const std::vector<int64_t>& target;  // required syndrome deltas
    int64_t p;
    int r;
    std::set<PhiVector> hits;
};

// Depth-first over correction vectors e: remaining L1 budget, remaining
// coordinate sum, partial syndrome delta.
void search(SearchCtx& ctx, size_t idx, int budget, int sum_left, std::vector<int64_t>& delta,
            PhiVector& cur) {
    int coords_left = static_cast<int>(ctx.base.size()) - static_cast<int>(idx);
    if (std::abs(sum_left) > budget) return;
    if (coords_left == 0) {
        if (sum_left != 0) return;
        for (int m = 0; m < ctx.r; ++m)
            if ((delta[m] % ctx.p + ctx.p) % ctx.p != ctx.target[m]) return;
        ctx.hits.insert(cur);
        return;
    }
    int i1 = static_cast<int>(idx) + 1;  // 1-based coordinate
    int lo = -std::min(budget, ctx.base[idx]);
    for (int e = lo; e <= budget; ++e) {
        cur[idx] = ctx.base[idx] + e;
        if (e != 0) {
            int64_t ipow = 1;
            for (int m = 0; m < ctx.r; ++m) {
                ipow = ipow * i1 % ctx.p;
                delta[m] += ipow * e;
            }
        }
        search(ctx, idx + 1, budget - std::abs(e), sum_left - e, delta, cur);
        if (e != 0) {
            int64_t ipow = 1;
            for (int m = 0; m < ctx.r; ++m) {
                ipow = ipow * i1 % ctx.p;
                delta[m] -= ipow * e;
            }
        }
    }
    cur[idx] = ctx.base[idx];
}

}  // namespace

DecodeOutcome LeeCode::decode(const BitString& y, int t, int s) const {
    if (t + 2 * s != r_) return DecodeOutcome::fail(DecodeStatus::invalid_input);
    int deficit = n_ - static_cast<int>(y.size());
    if (deficit < 0 || deficit > t) return DecodeOutcome::fail(DecodeStatus::invalid_input);

    PhiVector base = phi(y);
    std::vector<int64_t> sy = syndromes(y, r_, p_);
    std::vector<int64_t> target(r_);
    for (int m = 0; m < r_; ++m) target[m] = ((a_[m] - sy[m]) % p_ + p_) % p_;

    SearchCtx ctx{base, target, p_, r_, {}};
    std::vector<int64_t> delta(r_, 0);
    PhiVector cur = base;
    search(ctx, 0, r_, deficit, delta, cur);

    if (ctx.hits.empty()) return DecodeOutcome::fail(DecodeStatus::no_solution);
    if (ctx.hits.size() > 1) return DecodeOutcome::fail(DecodeStatus::ambiguous);
    return DecodeOutcome::success(phi_inverse(*ctx.hits.begin()));
}

std::vector<BitString> LeeCode::codebook() const {
    if (n_ > 24) throw std::invalid_argument("LeeCode: codebook too large to enumerate");
    std::vector<BitString> out;
    for (uint64_t v = 0; v < (1ULL << n_); ++v) {
        BitString x = bits_from_index(v, n_);
        if (member(x)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace dtc
