#include "dtc/galois.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtc {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t smallest_prime_at_least(int64_t b) {
    if (b < 2) throw std::invalid_argument("smallest_prime_at_least: b >= 2 required");
    int64_t n = b;
    while (!is_prime(n)) ++n;
    return n;
}

PrimeField::PrimeField(int64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

int64_t PrimeField::norm(int64_t a) const {
    int64_t r = a % p_;
    return r < 0 ? r + p_ : r;
}

int64_t PrimeField::pow(int64_t a, uint64_t e) const {
    int64_t r = 1, b = norm(a);
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return r;
}

int64_t PrimeField::inv(int64_t a) const {
    if (norm(a) == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, static_cast<uint64_t>(p_ - 2));
}

namespace {

// digitwise base-p add/sub on the integer encoding
int digit_add(int a, int b, int p, int q) {
    int r = 0, scale = 1;
    while (scale < q) {
        r += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return r;
}

int digit_neg(int a, int p, int q) {
    int r = 0, scale = 1;
    while (scale < q) {
        r += ((p - a % p) % p) * scale;
        a /= p;
        scale *= p;
    }
    return r;
}

// polynomial coefficient vectors over GF(p), low-order first
std::vector<int> pmod_mul(const std::vector<int>& a, const std::vector<int>& b,
                          const std::vector<int>& modulus, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    int m = static_cast<int>(modulus.size()) - 1;
    for (int d = static_cast<int>(prod.size()) - 1; d >= m; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int j = 0; j < m; ++j)
            prod[d - m + j] = ((prod[d - m + j] - c * modulus[j]) % p + p) % p;
    }
    prod.resize(m, 0);
    return prod;
}

bool divides(const std::vector<int>& div, std::vector<int> f, const PrimeField& F) {
    int dd = static_cast<int>(div.size()) - 1;
    int64_t lead_inv = F.inv(div[dd]);
    for (int d = static_cast<int>(f.size()) - 1; d >= dd; --d) {
        int c = f[d];
        if (!c) continue;
        int64_t factor = F.mul(c, lead_inv);
        for (int j = 0; j <= dd; ++j)
            f[d - dd + j] = static_cast<int>(F.sub(f[d - dd + j], F.mul(factor, div[j])));
    }
    for (int j = 0; j < dd; ++j)
        if (f[j]) return false;
    return true;
}

bool poly_irreducible(const std::vector<int>& f, int p, const PrimeField& F) {
    int m = static_cast<int>(f.size()) - 1;
    // trial division by every monic polynomial of degree 1..m/2
    for (int dd = 1; 2 * dd <= m; ++dd) {
        int count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            std::vector<int> div(dd + 1, 0);
            int t = v;
            for (int i = 0; i < dd; ++i) {
                div[i] = t % p;
                t /= p;
            }
            div[dd] = 1;
            if (divides(div, f, F)) return false;
        }
    }
    return true;
}

}  // namespace

ExtensionField::ExtensionField(int p, int m) : p_(p), m_(m) {
    if (!is_prime(p)) throw std::invalid_argument("ExtensionField: p is not prime");
    if (m < 1) throw std::invalid_argument("ExtensionField: m >= 1 required");
    int64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 1'000'000) throw std::invalid_argument("ExtensionField: field too large");
    }
    q_ = static_cast<int>(q);

    PrimeField F(p);
    // smallest monic irreducible of degree m, candidates ordered by the
    // integer encoding of their non-leading coefficients
    for (int v = 0;; ++v) {
        std::vector<int> f(m + 1, 0);
        int t = v;
        for (int i = 0; i < m; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[m] = 1;
        if (poly_irreducible(f, p, F)) {
            modulus_ = f;
            break;
        }
        if (v >= q_) throw std::logic_error("ExtensionField: no irreducible found");
    }

    // smallest primitive element, found with table-free multiplication
    gen_ = -1;
    for (int g = 1; g < q_; ++g) {
        int x = g, order = 1;
        while (x != 1) {
            x = mul_slow(x, g);
            ++order;
            if (order > q_) throw std::logic_error("ExtensionField: order overflow");
        }
        if (order == q_ - 1) {
            gen_ = g;
            break;
        }
    }
    if (gen_ < 0) throw std::logic_error("ExtensionField: no primitive element");

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    int x = 1;
    for (int e = 0; e < q_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = mul_slow(x, gen_);
    }
    for (int e = 0; e < q_ - 1; ++e) exp_[e + q_ - 1] = exp_[e];
}

int ExtensionField::mul_slow(int a, int b) const {
    std::vector<int> va(m_), vb(m_);
    for (int i = 0; i < m_; ++i) {
        va[i] = a % p_;
        a /= p_;
        vb[i] = b % p_;
        b /= p_;
    }
    std::vector<int> r = pmod_mul(va, vb, modulus_, p_);
    int val = 0, scale = 1;
    for (int i = 0; i < m_; ++i) {
        val += r[i] * scale;
        scale *= p_;
    }
    return val;
}

int ExtensionField::add(int a, int b) const { return digit_add(a, b, p_, q_); }
int ExtensionField::neg(int a) const { return digit_neg(a, p_, q_); }
int ExtensionField::sub(int a, int b) const { return digit_add(a, digit_neg(b, p_, q_), p_, q_); }

int ExtensionField::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

int ExtensionField::inv(int a) const {
    if (a == 0) throw std::domain_error("ExtensionField: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int ExtensionField::pow(int a, int64_t e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("ExtensionField: 0^e, e <= 0");
        return 0;
    }
    int64_t ord = q_ - 1;
    int64_t le = (static_cast<int64_t>(log_[a]) * (e % ord)) % ord;
    if (le < 0) le += ord;
    return exp_[le];
}

int ExtensionField::alpha_pow(int64_t e) const {
    int64_t ord = q_ - 1;
    int64_t le = e % ord;
    if (le < 0) le += ord;
    return exp_[le];
}

int ExtensionField::log_alpha(int a) const {
    if (a == 0) throw std::domain_error("ExtensionField: log of zero");
    return log_[a];
}

// ---- polynomials over GF(p) ----

PolyP poly_trim(PolyP f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int poly_deg(const PolyP& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

bool poly_is_zero(const PolyP& f) { return poly_deg(f) < 0; }

int64_t poly_eval(const PrimeField& F, const PolyP& f, int64_t x) {
    int64_t r = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) r = F.add(F.mul(r, F.norm(x)), F.norm(f[i]));
    return r;
}

PolyP poly_add(const PrimeField& F, const PolyP& a, const PolyP& b) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t va = i < a.size() ? a[i] : 0;
        int64_t vb = i < b.size() ? b[i] : 0;
        r[i] = F.add(F.norm(va), F.norm(vb));
    }
    return poly_trim(std::move(r));
}

PolyP poly_sub(const PrimeField& F, const PolyP& a, const PolyP& b) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t va = i < a.size() ? a[i] : 0;
        int64_t vb = i < b.size() ? b[i] : 0;
        r[i] = F.sub(F.norm(va), F.norm(vb));
    }
    return poly_trim(std::move(r));
}

PolyP poly_mul(const PrimeField& F, const PolyP& a, const PolyP& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(F.norm(a[i]), F.norm(b[j])));
    }
    return poly_trim(std::move(r));
}

PolyP poly_scale(const PrimeField& F, const PolyP& a, int64_t c) {
    PolyP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(F.norm(a[i]), F.norm(c));
    return poly_trim(std::move(r));
}

std::pair<PolyP, PolyP> poly_divmod(const PrimeField& F, const PolyP& a, const PolyP& b) {
    int db = poly_deg(b);
    if (db < 0) throw std::domain_error("poly_divmod: division by zero");
    PolyP rem = poly_trim(a);
    int da = poly_deg(rem);
    if (da < db) return {{}, rem};
    PolyP quot(da - db + 1, 0);
    int64_t lead_inv = F.inv(b[db]);
    for (int d = da; d >= db; --d) {
        if (d >= static_cast<int>(rem.size()) || rem[d] == 0) continue;
        int64_t c = F.mul(rem[d], lead_inv);
        quot[d - db] = c;
        for (int j = 0; j <= db; ++j)
            rem[d - db + j] = F.sub(rem[d - db + j], F.mul(c, F.norm(b[j])));
    }
    return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

PolyP poly_derivative(const PrimeField& F, const PolyP& f) {
    if (f.size() <= 1) return {};
    PolyP r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(F.norm(f[i]), i % F.p());
    return poly_trim(std::move(r));
}

PolyP series_inverse(const PrimeField& F, const PolyP& f, int len) {
    if (f.empty() || F.norm(f[0]) == 0)
        throw std::domain_error("series_inverse: constant term is zero");
    PolyP g(len, 0);
    int64_t c0 = F.inv(F.norm(f[0]));
    g[0] = c0;
    for (int k = 1; k < len; ++k) {
        int64_t acc = 0;
        for (int i = 1; i <= k; ++i) {
            int64_t fi = i < static_cast<int>(f.size()) ? F.norm(f[i]) : 0;
            acc = F.add(acc, F.mul(fi, g[k - i]));
        }
        g[k] = F.neg(F.mul(acc, c0));
    }
    return g;
}

PolyP poly_mod_xk(PolyP f, int k) {
    if (static_cast<int>(f.size()) > k) f.resize(k);
    return f;
}

std::vector<int64_t> find_roots_with_multiplicity(const PrimeField& F, const PolyP& f,
                                                  const std::vector<int64_t>& domain) {
    if (poly_is_zero(f)) throw std::invalid_argument("find_roots: zero polynomial");
    std::vector<int64_t> roots;
    for (int64_t r : domain) {
        PolyP cur = poly_trim(f);
        PolyP lin = {F.neg(F.norm(r)), 1};  // x - r
        while (poly_deg(cur) >= 1 && poly_eval(F, cur, r) == 0) {
            roots.push_back(r);
            cur = poly_divmod(F, cur, lin).first;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::pair<PolyP, PolyP>> pade_split(const PrimeField& F, const PolyP& series,
                                                  int deg_num, int deg_den) {
    if (deg_num < 0 || deg_den < 0) return std::nullopt;
    int s = deg_num + deg_den;
    PolyP full = poly_trim(series);
    PolyP b = poly_mod_xk(full, s + 1);
    if (b.empty() || F.norm(b[0]) != 1) return std::nullopt;

    PolyP xk(s + 2, 0);
    xk[s + 1] = 1;  // x^{s+1}

    // extended Euclid on (x^{s+1}, series), tracking only the series cofactor:
    // r = u * x^{s+1} + v * series; stop at the first remainder of degree <= deg_num
    PolyP r0 = xk, r1 = b;
    PolyP v0 = {}, v1 = {1};
    while (poly_deg(r1) > deg_num) {
        auto [q, r2] = poly_divmod(F, r0, r1);
        PolyP v2 = poly_sub(F, v0, poly_mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (poly_deg(v1) > deg_den) return std::nullopt;
    if (poly_is_zero(v1) || F.norm(v1[0]) == 0) return std::nullopt;

    int64_t c = F.inv(F.norm(v1[0]));
    PolyP num = poly_scale(F, r1, c);
    PolyP den = poly_scale(F, v1, c);
    if (!num.empty() && F.norm(num[0]) != 1) return std::nullopt;
    if (num.empty()) {
        // numerator identically zero contradicts constant term 1 of the series
        return std::nullopt;
    }
    // verify against every supplied series coefficient, not just the s+1 the
    // reconstruction used; extra terms the bounds cannot explain are an error
    int check_len = std::max<int>(s + 1, static_cast<int>(full.size()));
    PolyP check = poly_mod_xk(poly_mul(F, full, den), check_len);
    if (poly_trim(check) != poly_trim(num)) return std::nullopt;
    return std::make_pair(num, den);
}

}  // namespace dtc
