#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dtc/galois.hpp"
#include "dtc/sequence.hpp"

namespace dtc {

// Recovers the multiset {d_1 <= ... <= d_t} in [1, max_index] from its first
// t_actual power sums mod p: Newton's identities to elementary symmetric
// coefficients, then a root scan with multiplicities.  nullopt when the
// locator does not split over the range.
std::optional<std::vector<int64_t>> solve_deletion_power_sums(const PrimeField& F,
                                                              const std::vector<int64_t>& a_star,
                                                              int t_actual, int64_t max_index);

// Recovers two disjoint index sets (plus, minus) of sizes (k_plus, k_minus)
// in [1, max_index] from b_m = sum(plus^m) - sum(minus^m) mod p, m = 1..k_plus+k_minus:
// the generalized Newton recursion gives the series of
// prod(1-jx)/prod(1-kx), pade_split separates numerator and denominator, and
// the reciprocal roots are scanned.  Roots must be simple, in range, and the
// two sets disjoint; otherwise nullopt.
std::optional<std::pair<std::vector<int64_t>, std::vector<int64_t>>> solve_mixed_power_sums(
    const PrimeField& F, const std::vector<int64_t>& b, int k_plus, int k_minus,
    int64_t max_index);

// e'_1 = e_1, e'_m = m^{-1} (e_m - sum_{i=1}^{m-1} C(m, i-1) e'_i) mod p.
// Unpacks binomially mixed transposition syndromes into plain power-sum
// differences: e'_{i+1} is the i-th power-sum difference.
std::vector<int64_t> transform_e(const PrimeField& F, const std::vector<int64_t>& e);

// List-decodable code for at most t 0-deletions, s_plus right-shifts and
// s_minus left-shifts of 0: power-sum syndromes of order kappa = max(t, s+1)
// mod a prime p > n.
//
// Sign convention (fixed by how a transposition moves phi): a transposition
// at the boundary of the g-th 1 contributes +((g+1)^m - g^m) to
// a''_m = a_m(x) - a_m(y) when it is a left-shift of 0 and the negative of
// that when it is a right-shift.  The "plus" solution set therefore holds
// left-shift boundaries (budget s_minus) and the "minus" set right-shift
// boundaries (budget s_plus).
class ListCode {
public:
    ListCode(int n, int t, int s_plus, int s_minus, std::vector<int64_t> a);
    ListCode(int n, int t, int s_plus, int s_minus, int64_t p, std::vector<int64_t> a);

    int n() const { return n_; }
    int t() const { return t_; }
    int s_plus() const { return s_plus_; }
    int s_minus() const { return s_minus_; }
    int s() const { return s_plus_ + s_minus_; }
    int kappa() const { return kappa_; }
    int64_t p() const { return p_; }
    const std::vector<int64_t>& a() const { return a_; }

    static std::vector<int64_t> syndromes(const BitString& x, int kappa, int64_t p);

    bool member(const BitString& x) const;

    // Deduplicated, lexicographically sorted candidate list.  Every candidate
    // is a codeword whose asymmetric error ball contains y; for in-model y
    // the transmitted word is present.
    std::vector<BitString> decode_list(const BitString& y) const;

    // t = 1 fast path: the deletion index is confined to a window of width
    // s+1 around a''_1, so no syndrome guessing is needed.
    std::vector<BitString> decode_list_t1(const BitString& y) const;

    std::vector<BitString> codebook() const;  // n <= 24

private:
    struct ShiftSolution {
        std::vector<int64_t> plus;   // left-shift boundaries
        std::vector<int64_t> minus;  // right-shift boundaries
    };

    void candidates_for_shifts(const BitString& y, const PhiVector& phi_y,
                               const std::vector<int64_t>& app, int t_actual,
                               const ShiftSolution& sol,
                               std::set<BitString>& out) const;
    void try_reconstruct(const BitString& y, const PhiVector& phi_y,
                         const std::vector<int64_t>& dels, const ShiftSolution& sol,
                         std::set<BitString>& out) const;
    int64_t shift_contribution(const ShiftSolution& sol, int m) const;

    int n_, t_, s_plus_, s_minus_, kappa_;
    int64_t p_;
    std::vector<int64_t> a_;
};

}  // namespace dtc
