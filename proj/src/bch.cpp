#include "dtc/bch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dtc {

int min_extension_degree(int p, int min_len) {
    int m = 1;
    int64_t q = p;
    while (q - 1 < min_len) {
        q *= p;
        ++m;
        if (q > 1'000'000) throw std::invalid_argument("bch: length out of desk-scale range");
    }
    return m;
}

BchCode::BchCode(int p, int m, int design_distance) : p_(p), d_(design_distance), field_(p, m) {
    if (d_ < 2) throw std::invalid_argument("bch: design distance >= 2 required");
    if (d_ > mother_length()) throw std::invalid_argument("bch: design distance exceeds length");

    // generator = product of (x - alpha^e) over the cyclotomic cosets of 1..d-1
    int64_t ord = mother_length();
    std::set<int64_t> exponents;
    for (int i = 1; i <= d_ - 1; ++i) {
        int64_t e = i;
        while (!exponents.count(e)) {
            exponents.insert(e);
            e = e * p_ % ord;
        }
    }
    std::vector<int> g = {1};  // over GF(p^m), low-order first
    for (int64_t e : exponents) {
        int root = field_.alpha_pow(e);
        std::vector<int> next(g.size() + 1, 0);
        for (size_t i = 0; i < g.size(); ++i) {
            next[i + 1] = field_.add(next[i + 1], g[i]);
            next[i] = field_.sub(next[i], field_.mul(g[i], root));
        }
        g = std::move(next);
    }
    for (int c : g)
        if (!field_.in_prime_subfield(c))
            throw std::logic_error("bch: generator left the prime subfield");
    if (static_cast<int>(g.size()) - 1 > (d_ - 1) * m)
        throw std::logic_error("bch: parity exceeds (d-1)m");
    generator_ = std::move(g);
}

std::vector<int> BchCode::encode_systematic(const std::vector<int>& msg) const {
    int r = parity();
    int n = static_cast<int>(msg.size()) + r;
    if (n > mother_length()) throw std::invalid_argument("bch: message too long for field");
    for (int v : msg)
        if (v < 0 || v >= p_) throw std::invalid_argument("bch: symbol out of range");

    // word = (msg, parity); f(x) = sum word[i] x^{n-1-i} must be divisible by
    // g.  LFSR division: rem <- (rem * x + v * x^r) mod g per message symbol.
    PrimeField F(p_);
    std::vector<int64_t> rem(r, 0);
    for (int v : msg) {
        int64_t t = F.add(rem[r - 1], v);
        for (int j = r - 1; j >= 1; --j) rem[j] = rem[j - 1];
        rem[0] = 0;
        if (t)
            for (int j = 0; j < r; ++j) rem[j] = F.sub(rem[j], F.mul(t, generator_[j]));
    }
    std::vector<int> word(msg);
    word.reserve(n);
    for (int j = r - 1; j >= 0; --j) word.push_back(static_cast<int>(F.neg(rem[j])));
    return word;
}

std::vector<int> BchCode::syndromes(const std::vector<int>& word) const {
    int n = static_cast<int>(word.size());
    std::vector<int> syn(d_ - 1, 0);
    for (int j = 1; j <= d_ - 1; ++j) {
        int acc = 0;
        for (int i = 0; i < n; ++i) {
            if (!word[i]) continue;
            acc = field_.add(
                acc, field_.mul(word[i], field_.alpha_pow(static_cast<int64_t>(j) * (n - 1 - i))));
        }
        syn[j - 1] = acc;
    }
    return syn;
}

bool BchCode::is_codeword(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) > mother_length()) return false;
    for (int v : word)
        if (v < 0 || v >= p_) return false;
    auto syn = syndromes(word);
    return std::all_of(syn.begin(), syn.end(), [](int s) { return s == 0; });
}

std::optional<std::vector<int>> BchCode::decode(const std::vector<int>& word) const {
    int n = static_cast<int>(word.size());
    if (n > mother_length()) return std::nullopt;
    auto syn = syndromes(word);
    if (std::all_of(syn.begin(), syn.end(), [](int s) { return s == 0; })) return word;

    const ExtensionField& K = field_;

    // Berlekamp-Massey over GF(p^m)
    std::vector<int> Lambda = {1}, B = {1};
    int L = 0, shift = 1, b = 1;
    for (int i = 0; i < d_ - 1; ++i) {
        int delta = syn[i];
        for (int j = 1; j <= L && j < static_cast<int>(Lambda.size()); ++j)
            if (i - j >= 0) delta = K.add(delta, K.mul(Lambda[j], syn[i - j]));
        if (delta == 0) {
            ++shift;
        } else if (2 * L <= i) {
            std::vector<int> T = Lambda;
            int coef = K.mul(delta, K.inv(b));
            if (Lambda.size() < B.size() + shift) Lambda.resize(B.size() + shift, 0);
            for (size_t j = 0; j < B.size(); ++j)
                Lambda[j + shift] = K.sub(Lambda[j + shift], K.mul(coef, B[j]));
            L = i + 1 - L;
            B = std::move(T);
            b = delta;
            shift = 1;
        } else {
            int coef = K.mul(delta, K.inv(b));
            if (Lambda.size() < B.size() + shift) Lambda.resize(B.size() + shift, 0);
            for (size_t j = 0; j < B.size(); ++j)
                Lambda[j + shift] = K.sub(Lambda[j + shift], K.mul(coef, B[j]));
            ++shift;
        }
    }
    while (!Lambda.empty() && Lambda.back() == 0) Lambda.pop_back();
    int deg = static_cast<int>(Lambda.size()) - 1;
    if (deg < 1 || deg != L || 2 * L > d_ - 1) return std::nullopt;

    // root scan over the word's own positions: an error at word index i has
    // locator alpha^{n-1-i}
    std::vector<int> positions, locators;
    for (int i = 0; i < n; ++i) {
        int xinv = K.alpha_pow(-static_cast<int64_t>(n - 1 - i));
        int acc = 0, xp = 1;
        for (int c : Lambda) {
            acc = K.add(acc, K.mul(c, xp));
            xp = K.mul(xp, xinv);
        }
        if (acc == 0) {
            positions.push_back(i);
            locators.push_back(K.alpha_pow(n - 1 - i));
        }
    }
    if (static_cast<int>(positions.size()) != deg) return std::nullopt;

    // Forney: Omega = S(x) Lambda(x) mod x^{d-1}; e = -Omega(X^-1)/Lambda'(X^-1)
    std::vector<int> Omega(d_ - 1, 0);
    for (int i = 0; i < d_ - 1; ++i)
        for (int j = 0; j < static_cast<int>(Lambda.size()) && j <= i; ++j)
            Omega[i] = K.add(Omega[i], K.mul(syn[i - j], Lambda[j]));

    PrimeField F(p_);
    std::vector<int> corrected = word;
    for (size_t l = 0; l < positions.size(); ++l) {
        int xinv = K.inv(locators[l]);
        int om = 0, xp = 1;
        for (int c : Omega) {
            om = K.add(om, K.mul(c, xp));
            xp = K.mul(xp, xinv);
        }
        int dp = 0;
        xp = 1;
        for (size_t j = 1; j < Lambda.size(); ++j) {
            int coef = K.mul(Lambda[j], static_cast<int>(j % p_));
            dp = K.add(dp, K.mul(coef, xp));
            xp = K.mul(xp, xinv);
        }
        if (dp == 0) return std::nullopt;
        int ev = K.neg(K.mul(om, K.inv(dp)));
        if (!K.in_prime_subfield(ev)) return std::nullopt;
        int i = positions[l];
        corrected[i] = static_cast<int>(F.sub(corrected[i], ev));
    }
    auto check = syndromes(corrected);
    if (!std::all_of(check.begin(), check.end(), [](int s) { return s == 0; })) return std::nullopt;
    return corrected;
}

int bch_parity_length_formula(int t_b, int ell, int s, int m) {
    int64_t p = smallest_prime_at_least(static_cast<int64_t>(t_b) * ell + 5);
    int64_t dm1 = 2 * (static_cast<int64_t>(t_b) + 2 * s);
    int64_t ceil_part = (dm1 * (p - 1) + p - 1) / p;  // ceil(dm1 * (1 - 1/p))
    return static_cast<int>(ceil_part * m);
}

}  // namespace dtc
