#include "dtc/list_code.hpp"

#include <algorithm>
#include <stdexcept>

#include "dtc/channel.hpp"

namespace dtc {

std::optional<std::vector<int64_t>> solve_deletion_power_sums(const PrimeField& F,
                                                              const std::vector<int64_t>& a_star,
                                                              int t_actual, int64_t max_index) {
    if (t_actual == 0) return std::vector<int64_t>{};
    if (static_cast<int>(a_star.size()) < t_actual)
        throw std::invalid_argument("solve_deletion_power_sums: too few power sums");
    if (t_actual >= F.p()) return std::nullopt;

    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<int64_t> elem(t_actual + 1, 0);
    elem[0] = 1;
    for (int k = 1; k <= t_actual; ++k) {
        int64_t acc = 0;
        for (int i = 1; i <= k; ++i) {
            int64_t term = F.mul(elem[k - i], F.norm(a_star[i - 1]));
            acc = (i % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
        }
        elem[k] = F.mul(acc, F.inv(k % F.p()));
    }
    // locator prod (x - d_u) = sum (-1)^i e_i x^{t-i}
    PolyP loc(t_actual + 1, 0);
    for (int i = 0; i <= t_actual; ++i)
        loc[t_actual - i] = (i % 2 == 0) ? elem[i] : F.neg(elem[i]);

    std::vector<int64_t> domain;
    for (int64_t v = 1; v <= std::min<int64_t>(max_index, F.p() - 1); ++v) domain.push_back(v);
    std::vector<int64_t> roots = find_roots_with_multiplicity(F, loc, domain);
    if (static_cast<int>(roots.size()) != t_actual) return std::nullopt;
    return roots;
}

std::optional<std::pair<std::vector<int64_t>, std::vector<int64_t>>> solve_mixed_power_sums(
    const PrimeField& F, const std::vector<int64_t>& b, int k_plus, int k_minus,
    int64_t max_index) {
    int deg = k_plus + k_minus;
    if (static_cast<int>(b.size()) < deg)
        throw std::invalid_argument("solve_mixed_power_sums: too few power sums");
    if (deg == 0) {
        for (int64_t v : b)
            if (F.norm(v) != 0) return std::nullopt;
        return std::make_pair(std::vector<int64_t>{}, std::vector<int64_t>{});
    }
    if (deg >= F.p()) return std::nullopt;

    // sigma series of prod(1-jx)/prod(1-kx) from the generalized Newton
    // recursion u*sigma_u = -sum_{m=0}^{u-1} sigma_m b_{u-m}
    PolyP sigma(deg + 1, 0);
    sigma[0] = 1;
    for (int u = 1; u <= deg; ++u) {
        int64_t acc = 0;
        for (int m = 0; m < u; ++m) acc = F.add(acc, F.mul(sigma[m], F.norm(b[u - m - 1])));
        sigma[u] = F.neg(F.mul(acc, F.inv(u % F.p())));
    }

    auto split = pade_split(F, sigma, k_plus, k_minus);
    if (!split) return std::nullopt;
    const auto& [num, den] = *split;
    if (poly_deg(num) != k_plus || poly_deg(den) != k_minus) return std::nullopt;

    // num = prod (1 - j x): j's are the reciprocals of the roots
    auto reciprocal_roots = [&](const PolyP& f, int want) -> std::optional<std::vector<int64_t>> {
        std::vector<int64_t> rs;
        for (int64_t v = 1; v <= std::min<int64_t>(max_index, F.p() - 1); ++v)
            if (poly_eval(F, f, F.inv(v)) == 0) rs.push_back(v);
        if (static_cast<int>(rs.size()) != want) return std::nullopt;
        return rs;
    };
    auto plus = reciprocal_roots(num, k_plus);
    auto minus = reciprocal_roots(den, k_minus);
    if (!plus || !minus) return std::nullopt;
    for (int64_t j : *plus)
        for (int64_t k : *minus)
            if (j == k) return std::nullopt;
    return std::make_pair(*plus, *minus);
}

std::vector<int64_t> transform_e(const PrimeField& F, const std::vector<int64_t>& e) {
    int n = static_cast<int>(e.size());
    if (n >= F.p()) throw std::invalid_argument("transform_e: length must stay below p");
    // Pascal triangle mod p
    std::vector<std::vector<int64_t>> C(n + 1, std::vector<int64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        C[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            C[i][j] = F.add(C[i - 1][j - 1], j <= i - 1 ? C[i - 1][j] : 0);
    }
    std::vector<int64_t> ep(n);
    for (int m = 1; m <= n; ++m) {
        int64_t acc = F.norm(e[m - 1]);
        for (int i = 1; i <= m - 1; ++i) acc = F.sub(acc, F.mul(C[m][i - 1], ep[i - 1]));
        ep[m - 1] = F.mul(acc, F.inv(m % F.p()));
    }
    return ep;
}

ListCode::ListCode(int n, int t, int s_plus, int s_minus, std::vector<int64_t> a)
    : ListCode(n, t, s_plus, s_minus, smallest_prime_at_least(n + 1), std::move(a)) {}

ListCode::ListCode(int n, int t, int s_plus, int s_minus, int64_t p, std::vector<int64_t> a)
    : n_(n),
      t_(t),
      s_plus_(s_plus),
      s_minus_(s_minus),
      kappa_(std::max(t, s_plus + s_minus + 1)),
      p_(p),
      a_(std::move(a)) {
    if (t < 0 || s_plus < 0 || s_minus < 0 || t + s_plus + s_minus < 1)
        throw std::invalid_argument("ListCode: invalid budgets");
    if (!is_prime(p) || p <= n) throw std::invalid_argument("ListCode: prime > n required");
    if (static_cast<int>(a_.size()) != kappa_)
        throw std::invalid_argument("ListCode: need kappa residues");
    for (int64_t v : a_)
        if (v < 0 || v >= p) throw std::invalid_argument("ListCode: residue out of range");
    double guesses = 1;
    for (int i = 0; i < std::min(t_, s_plus_ + s_minus_ + 1); ++i) guesses *= static_cast<double>(p);
    if (guesses > 1e7) throw std::invalid_argument("ListCode: guess space exceeds desk scale");
}

std::vector<int64_t> ListCode::syndromes(const BitString& x, int kappa, int64_t p) {
    PhiVector u = phi(x);
    std::vector<int64_t> s(kappa, 0);
    for (size_t i = 0; i < u.size(); ++i) {
        if (!u[i]) continue;
        int64_t ipow = 1;
        for (int m = 0; m < kappa; ++m) {
            ipow = ipow * static_cast<int64_t>(i + 1) % p;
            s[m] = (s[m] + ipow * u[i]) % p;
        }
    }
    return s;
}

bool ListCode::member(const BitString& x) const {
    if (static_cast<int>(x.size()) != n_) return false;
    return syndromes(x, kappa_, p_) == a_;
}

int64_t ListCode::shift_contribution(const ShiftSolution& sol, int m) const {
    // sum_{i=0}^{m-1} C(m,i) * (sum plus^i - sum minus^i) mod p
    PrimeField F(p_);
    std::vector<int64_t> C(m + 1, 0);
    C[0] = 1;
    for (int row = 1; row <= m; ++row)
        for (int j = row; j >= 1; --j) C[j] = F.add(C[j], C[j - 1]);
    int64_t acc = 0;
    for (int i = 0; i <= m - 1; ++i) {
        int64_t pi = 0;
        for (int64_t g : sol.plus) pi = F.add(pi, F.pow(g, i));
        for (int64_t g : sol.minus) pi = F.sub(pi, F.pow(g, i));
        acc = F.add(acc, F.mul(C[i], pi));
    }
    return acc;
}

void ListCode::try_reconstruct(const BitString& y, const PhiVector& phi_y,
                               const std::vector<int64_t>& dels, const ShiftSolution& sol,
                               std::set<BitString>& out) const {
    int w = weight(y);
    PhiVector v = phi_y;
    for (int64_t d : dels) {
        if (d < 1 || d > w + 1) return;
        ++v[d - 1];
    }
    for (int64_t g : sol.plus) {  // undo a left-shift of 0 at the g-th 1
        if (g < 1 || g > w) return;
        --v[g - 1];
        ++v[g];
    }
    for (int64_t g : sol.minus) {  // undo a right-shift of 0 at the g-th 1
        if (g < 1 || g > w) return;
        ++v[g - 1];
        --v[g];
    }
    for (int e : v)
        if (e < 0) return;
    BitString x = phi_inverse(v);
    if (static_cast<int>(x.size()) != n_) return;
    if (!member(x)) return;
    if (out.count(x)) return;
    if (!error_ball_asym(x, t_, s_plus_, s_minus_).count(y)) return;
    out.insert(std::move(x));
}

namespace {

// strictly increasing index vectors are canonical; power sums are checked
// against the claimed values for every order up to s
bool consistent_with(const PrimeField& F, const std::vector<int64_t>& plus,
                     const std::vector<int64_t>& minus, const std::vector<int64_t>& psums) {
    for (size_t i = 1; i < psums.size(); ++i) {
        int64_t acc = 0;
        for (int64_t g : plus) acc = F.add(acc, F.pow(g, i));
        for (int64_t g : minus) acc = F.sub(acc, F.pow(g, i));
        if (acc != F.norm(psums[i])) return false;
    }
    return true;
}

}  // namespace

void ListCode::candidates_for_shifts(const BitString& y, const PhiVector& phi_y,
                                     const std::vector<int64_t>& app, int t_actual,
                                     const ShiftSolution& sol, std::set<BitString>& out) const {
    PrimeField F(p_);
    if (t_actual == 0) {
        try_reconstruct(y, phi_y, {}, sol, out);
        return;
    }
    std::vector<int64_t> a_star(t_actual);
    for (int m = 1; m <= t_actual; ++m)
        a_star[m - 1] = F.sub(F.norm(app[m - 1]), shift_contribution(sol, m));
    auto dels = solve_deletion_power_sums(F, a_star, t_actual, weight(y) + 1);
    if (!dels) return;
    try_reconstruct(y, phi_y, *dels, sol, out);
}

std::vector<BitString> ListCode::decode_list(const BitString& y) const {
    int t_actual = n_ - static_cast<int>(y.size());
    if (t_actual < 0 || t_actual > t_) return {};
    int w = weight(y);
    PhiVector phi_y = phi(y);
    PrimeField F(p_);
    int s = s_plus_ + s_minus_;
    int plus_budget = s_minus_, minus_budget = s_plus_;

    std::vector<int64_t> ay = syndromes(y, kappa_, p_);
    std::vector<int64_t> app(kappa_);
    for (int m = 0; m < kappa_; ++m) app[m] = F.sub(F.norm(a_[m]), F.norm(ay[m]));

    std::set<BitString> out;
    std::set<std::pair<std::vector<int64_t>, std::vector<int64_t>>> shift_solutions;

    auto collect_shift_solutions = [&](const std::vector<int64_t>& trans_syndromes) {
        // trans_syndromes: claimed transposition contributions for m = 1..s+1.
        // P_0 equals the first entry; discard guesses no split can satisfy.
        bool feasible = false;
        for (int kp = 0; kp <= plus_budget && !feasible; ++kp)
            for (int km = 0; km <= minus_budget && !feasible; ++km)
                if (F.norm(kp - km) == F.norm(trans_syndromes[0])) feasible = true;
        if (!feasible) return;
        std::vector<int64_t> psums = transform_e(F, trans_syndromes);
        for (int kp = 0; kp <= plus_budget; ++kp) {
            for (int km = 0; km <= minus_budget; ++km) {
                if (F.norm(kp - km) != F.norm(psums[0])) continue;
                auto sol = solve_mixed_power_sums(
                    F, std::vector<int64_t>(psums.begin() + 1, psums.end()), kp, km, w);
                if (!sol) continue;
                if (!consistent_with(F, sol->first, sol->second, psums)) continue;
                shift_solutions.insert(*sol);
            }
        }
    };

    if (t_actual == 0) {
        // no deletions: the transposition contributions are known exactly
        collect_shift_solutions(std::vector<int64_t>(app.begin(), app.begin() + s + 1));
        for (const auto& [pl, mi] : shift_solutions)
            candidates_for_shifts(y, phi_y, app, 0, ShiftSolution{pl, mi}, out);
    } else if (t_ >= s + 1) {
        // guess the transposition contributions e in Sigma_p^{s+1}
        std::vector<int64_t> guess(s + 1, 0);
        while (true) {
            collect_shift_solutions(guess);
            int i = 0;
            while (i <= s && ++guess[i] == p_) guess[i++] = 0;
            if (i > s) break;
        }
        for (const auto& [pl, mi] : shift_solutions)
            candidates_for_shifts(y, phi_y, app, t_actual, ShiftSolution{pl, mi}, out);
    } else {
        // t < s+1: guess the deletion power sums in Sigma_p^{t_actual}
        std::set<std::vector<int64_t>> deletion_sets;
        std::vector<int64_t> guess(t_actual, 0);
        while (true) {
            auto dels = solve_deletion_power_sums(F, guess, t_actual, w + 1);
            if (dels) deletion_sets.insert(*dels);
            int i = 0;
            while (i < t_actual && ++guess[i] == p_) guess[i++] = 0;
            if (i >= t_actual) break;
        }
        for (const auto& dels : deletion_sets) {
            shift_solutions.clear();
            std::vector<int64_t> trans(s + 1);
            for (int m = 1; m <= s + 1; ++m) {
                int64_t dsum = 0;
                for (int64_t d : dels) dsum = F.add(dsum, F.pow(d, m));
                trans[m - 1] = F.sub(F.norm(app[m - 1]), dsum);
            }
            collect_shift_solutions(trans);
            for (const auto& [pl, mi] : shift_solutions)
                try_reconstruct(y, phi_y, dels, ShiftSolution{pl, mi}, out);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<BitString> ListCode::decode_list_t1(const BitString& y) const {
    if (t_ != 1) throw std::invalid_argument("decode_list_t1: requires t == 1");
    int t_actual = n_ - static_cast<int>(y.size());
    if (t_actual < 0 || t_actual > 1) return {};
    int w = weight(y);
    PhiVector phi_y = phi(y);
    PrimeField F(p_);
    int s = s_plus_ + s_minus_;
    int plus_budget = s_minus_, minus_budget = s_plus_;

    std::vector<int64_t> ay = syndromes(y, kappa_, p_);
    std::vector<int64_t> app(kappa_);
    for (int m = 0; m < kappa_; ++m) app[m] = F.sub(F.norm(a_[m]), F.norm(ay[m]));

    std::set<BitString> out;
    if (t_actual == 0) {
        std::vector<int64_t> trans(app.begin(), app.begin() + s + 1);
        std::vector<int64_t> psums = transform_e(F, trans);
        for (int kp = 0; kp <= plus_budget; ++kp)
            for (int km = 0; km <= minus_budget; ++km) {
                if (F.norm(kp - km) != F.norm(psums[0])) continue;
                auto sol = solve_mixed_power_sums(
                    F, std::vector<int64_t>(psums.begin() + 1, psums.end()), kp, km, w);
                if (!sol || !consistent_with(F, sol->first, sol->second, psums)) continue;
                try_reconstruct(y, phi_y, {}, ShiftSolution{sol->first, sol->second}, out);
            }
        return {out.begin(), out.end()};
    }

    // the deletion index sits in a window of width s+1 around a''_1
    for (int kp = 0; kp <= plus_budget; ++kp) {
        for (int km = 0; km <= minus_budget; ++km) {
            int64_t d = F.sub(F.norm(app[0]), F.norm(kp - km));
            if (d < 1 || d > w + 1) continue;
            std::vector<int64_t> trans(s + 1);
            for (int m = 1; m <= s + 1; ++m) trans[m - 1] = F.sub(F.norm(app[m - 1]), F.pow(d, m));
            std::vector<int64_t> psums = transform_e(F, trans);
            if (F.norm(kp - km) != F.norm(psums[0])) continue;
            auto sol = solve_mixed_power_sums(
                F, std::vector<int64_t>(psums.begin() + 1, psums.end()), kp, km, w);
            if (!sol || !consistent_with(F, sol->first, sol->second, psums)) continue;
            try_reconstruct(y, phi_y, {d}, ShiftSolution{sol->first, sol->second}, out);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<BitString> ListCode::codebook() const {
    if (n_ > 24) throw std::invalid_argument("ListCode: codebook too large to enumerate");
    std::vector<BitString> out;
    for (uint64_t v = 0; v < (1ULL << n_); ++v) {
        BitString x = bits_from_index(v, n_);
        if (member(x)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace dtc
