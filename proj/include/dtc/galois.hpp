#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dtc {

bool is_prime(int64_t n);
int64_t smallest_prime_at_least(int64_t b);  // b >= 2

// Arithmetic over GF(p), elements stored as int64_t in [0, p).
class PrimeField {
public:
    explicit PrimeField(int64_t p);  // throws unless p is prime

    int64_t p() const { return p_; }
    int64_t norm(int64_t a) const;  // reduce any integer into [0, p)
    int64_t add(int64_t a, int64_t b) const { return (a + b) % p_; }
    int64_t sub(int64_t a, int64_t b) const { return (a - b % p_ + p_) % p_; }
    int64_t neg(int64_t a) const { return (p_ - a % p_) % p_; }
    int64_t mul(int64_t a, int64_t b) const { return a * b % p_; }
    int64_t pow(int64_t a, uint64_t e) const;
    int64_t inv(int64_t a) const;  // throws on zero

private:
    int64_t p_;
};

// GF(p^m).  An element is the integer sum c_i * p^i over the coefficients
// (c_0..c_{m-1}) of its residue polynomial, so the prime subfield is exactly
// the values below p.  The modulus is the lexicographically smallest monic
// irreducible of degree m over GF(p) (non-leading coefficients compared via
// that same integer encoding), and exp/log tables are built on the smallest
// primitive element.  Everything is deterministic for given (p, m).
class ExtensionField {
public:
    ExtensionField(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws on zero
    int pow(int a, int64_t e) const;

    int generator() const { return gen_; }
    int alpha_pow(int64_t e) const;  // generator^e
    int log_alpha(int a) const;      // discrete log base generator, a != 0

    bool in_prime_subfield(int a) const { return a < p_; }
    const std::vector<int>& modulus() const { return modulus_; }

private:
    int mul_slow(int a, int b) const;

    int p_, m_, q_;
    std::vector<int> modulus_;  // monic, degree m, low-order first
    std::vector<int> exp_, log_;
    int gen_;
};

// Polynomials over GF(p), lowest-degree coefficient first.
using PolyP = std::vector<int64_t>;

PolyP poly_trim(PolyP f);
int poly_deg(const PolyP& f);  // -1 for the zero polynomial
bool poly_is_zero(const PolyP& f);
int64_t poly_eval(const PrimeField& F, const PolyP& f, int64_t x);
PolyP poly_add(const PrimeField& F, const PolyP& a, const PolyP& b);
PolyP poly_sub(const PrimeField& F, const PolyP& a, const PolyP& b);
PolyP poly_mul(const PrimeField& F, const PolyP& a, const PolyP& b);
PolyP poly_scale(const PrimeField& F, const PolyP& a, int64_t c);
// quotient, remainder; b must be nonzero
std::pair<PolyP, PolyP> poly_divmod(const PrimeField& F, const PolyP& a, const PolyP& b);
PolyP poly_derivative(const PrimeField& F, const PolyP& f);
// inverse of f as a power series mod x^len; f(0) must be nonzero
PolyP series_inverse(const PrimeField& F, const PolyP& f, int len);
PolyP poly_mod_xk(PolyP f, int k);

// For each element of domain, its multiplicity as a root of f (omitted when
// zero).  Result is sorted; f must be nonzero.
std::vector<int64_t> find_roots_with_multiplicity(const PrimeField& F, const PolyP& f,
                                                  const std::vector<int64_t>& domain);

// Rational reconstruction by the extended Euclidean algorithm: given a series
// with constant term 1, find (num, den), both with constant term 1,
// deg num <= deg_num, deg den <= deg_den, and
// num == series * den (mod x^{deg_num+deg_den+1}).  nullopt when no such pair
// exists within the bounds.
std::optional<std::pair<PolyP, PolyP>> pade_split(const PrimeField& F, const PolyP& series,
                                                  int deg_num, int deg_den);

}  // namespace dtc
