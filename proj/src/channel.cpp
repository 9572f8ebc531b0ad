#include "dtc/channel.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace dtc {

const char* to_string(ShiftKind k) {
    return k == ShiftKind::right_shift_of_0 ? "right_shift_of_0" : "left_shift_of_0";
}

std::string ErrorPattern::to_json() const {
    nlohmann::json j;
    j["deletions"] = zero_deletions;
    j["shifts"] = nlohmann::json::array();
    for (const auto& s : shifts)
        j["shifts"].push_back({{"kind", dtc::to_string(s.kind)}, {"pos", s.pos}});
    return j.dump();
}

std::optional<ErrorPattern> ErrorPattern::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("deletions") || !j.contains("shifts")) return std::nullopt;
    ErrorPattern e;
    for (const auto& d : j["deletions"]) e.zero_deletions.push_back(d.get<int>());
    for (const auto& s : j["shifts"]) {
        std::string kind = s.at("kind").get<std::string>();
        ShiftEvent ev;
        if (kind == "right_shift_of_0")
            ev.kind = ShiftKind::right_shift_of_0;
        else if (kind == "left_shift_of_0")
            ev.kind = ShiftKind::left_shift_of_0;
        else
            return std::nullopt;
        ev.pos = s.at("pos").get<int>();
        e.shifts.push_back(ev);
    }
    return e;
}

std::optional<BitString> apply_pattern(const BitString& x, const ErrorPattern& e) {
    BitString cur = x;
    for (const auto& ev : e.shifts) {
        if (ev.pos < 1 || ev.pos + 1 > static_cast<int>(cur.size())) return std::nullopt;
        Bit a = cur[ev.pos - 1], b = cur[ev.pos];
        if (a == b) return std::nullopt;
        ShiftKind actual = (a == 0) ? ShiftKind::right_shift_of_0 : ShiftKind::left_shift_of_0;
        if (actual != ev.kind) return std::nullopt;
        std::swap(cur[ev.pos - 1], cur[ev.pos]);
    }
    PhiVector u = phi(cur);
    for (int g : e.zero_deletions) {
        if (g < 1 || g > static_cast<int>(u.size())) return std::nullopt;
        if (--u[g - 1] < 0) return std::nullopt;
    }
    return phi_inverse(u);
}

namespace {

void expand_deletions(const BitString& cur, std::vector<BitString>& out) {
    // one result per nonempty gap
    out.clear();
    PhiVector u = phi(cur);
    for (size_t g = 0; g < u.size(); ++g) {
        if (u[g] == 0) continue;
        PhiVector v = u;
        --v[g];
        out.push_back(phi_inverse(v));
    }
}

void expand_swaps(const BitString& cur, std::vector<std::pair<BitString, bool>>& out) {
    // bool = true for a right-shift of 0 (01 -> 10)
    out.clear();
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i] == cur[i + 1]) continue;
        BitString y = cur;
        std::swap(y[i], y[i + 1]);
        out.push_back({std::move(y), cur[i] == 0});
    }
}

}  // namespace

std::set<BitString> error_ball_asym(const BitString& x, int t, int s_plus, int s_minus) {
    std::set<BitString> ball;
    std::set<std::tuple<BitString, int, int, int>> seen;
    std::vector<std::tuple<BitString, int, int, int>> stack;
    stack.push_back({x, t, s_plus, s_minus});
    seen.insert(stack.back());
    std::vector<BitString> dels;
    std::vector<std::pair<BitString, bool>> swaps;
    while (!stack.empty()) {
        auto [cur, tl, spl, sml] = stack.back();
        stack.pop_back();
        ball.insert(cur);
        if (tl > 0) {
            expand_deletions(cur, dels);
            for (auto& y : dels) {
                auto st = std::make_tuple(std::move(y), tl - 1, spl, sml);
                if (seen.insert(st).second) stack.push_back(st);
            }
        }
        if (spl > 0 || sml > 0) {
            expand_swaps(cur, swaps);
            for (auto& [y, right] : swaps) {
                int nspl = spl - (right ? 1 : 0);
                int nsml = sml - (right ? 0 : 1);
                if (nspl < 0 || nsml < 0) continue;
                auto st = std::make_tuple(std::move(y), tl, nspl, nsml);
                if (seen.insert(st).second) stack.push_back(st);
            }
        }
    }
    return ball;
}

std::set<BitString> error_ball(const BitString& x, int t, int s) {
    std::set<BitString> ball;
    std::set<std::tuple<BitString, int, int>> seen;
    std::vector<std::tuple<BitString, int, int>> stack;
    stack.push_back({x, t, s});
    seen.insert(stack.back());
    std::vector<BitString> dels;
    std::vector<std::pair<BitString, bool>> swaps;
    while (!stack.empty()) {
        auto [cur, tl, sl] = stack.back();
        stack.pop_back();
        ball.insert(cur);
        if (tl > 0) {
            expand_deletions(cur, dels);
            for (auto& y : dels) {
                auto st = std::make_tuple(std::move(y), tl - 1, sl);
                if (seen.insert(st).second) stack.push_back(st);
            }
        }
        if (sl > 0) {
            expand_swaps(cur, swaps);
            for (auto& [y, right] : swaps) {
                (void)right;
                auto st = std::make_tuple(std::move(y), tl, sl - 1);
                if (seen.insert(st).second) stack.push_back(st);
            }
        }
    }
    return ball;
}

std::set<BitString> block_deletion_ball(const BitString& x, int t_b, int ell, int s) {
    std::set<BitString> ball;
    std::set<std::tuple<BitString, int, int>> seen;
    std::vector<std::tuple<BitString, int, int>> stack;
    stack.push_back({x, t_b, s});
    seen.insert(stack.back());
    std::vector<std::pair<BitString, bool>> swaps;
    while (!stack.empty()) {
        auto [cur, bl, sl] = stack.back();
        stack.pop_back();
        ball.insert(cur);
        if (bl > 0) {
            PhiVector u = phi(cur);
            for (size_t g = 0; g < u.size(); ++g) {
                for (int j = 1; j <= std::min(ell, u[g]); ++j) {
                    PhiVector v = u;
                    v[g] -= j;
                    auto st = std::make_tuple(phi_inverse(v), bl - 1, sl);
                    if (seen.insert(st).second) stack.push_back(st);
                }
            }
        }
        if (sl > 0) {
            expand_swaps(cur, swaps);
            for (auto& [y, right] : swaps) {
                (void)right;
                auto st = std::make_tuple(std::move(y), bl, sl - 1);
                if (seen.insert(st).second) stack.push_back(st);
            }
        }
    }
    return ball;
}

IntVector phi_displacement(const BitString& x, const BitString& y) {
    if (weight(x) != weight(y)) throw std::invalid_argument("phi_displacement: weight mismatch");
    PhiVector ux = phi(x), uy = phi(y);
    IntVector v(ux.size());
    for (size_t i = 0; i < ux.size(); ++i) v[i] = uy[i] - ux[i];
    return v;
}

bool in_magnitude_ball(const IntVector& v, const MagnitudeBallSpec& spec) {
    if (static_cast<int>(v.size()) != spec.n)
        throw std::invalid_argument("in_magnitude_ball: length mismatch");
    int support = 0;
    long sum = 0;
    for (int e : v) {
        if (e != 0) ++support;
        if (e > spec.k_plus || e < -spec.k_minus) return false;
        sum += e;
    }
    return support <= spec.t && sum <= 0;
}

namespace {

// shifts first (positions valid against the evolving string), then deletions
// against the settled string's gaps
ErrorPattern sample_shifts_then_deletions(const BitString& x, int n_right, int n_left,
                                          int n_del_events, int max_per_event,
                                          std::mt19937_64& rng) {
    ErrorPattern pat;
    BitString cur = x;
    int want_right = n_right, want_left = n_left;
    while (want_right > 0 || want_left > 0) {
        std::vector<std::pair<int, bool>> options;  // (pos, is_right)
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] == cur[i + 1]) continue;
            bool right = cur[i] == 0;
            if (right && want_right > 0) options.push_back({static_cast<int>(i) + 1, true});
            if (!right && want_left > 0) options.push_back({static_cast<int>(i) + 1, false});
        }
        if (options.empty()) break;
        auto [pos, right] = options[rng() % options.size()];
        pat.shifts.push_back(
            {right ? ShiftKind::right_shift_of_0 : ShiftKind::left_shift_of_0, pos});
        std::swap(cur[pos - 1], cur[pos]);
        (right ? want_right : want_left)--;
    }
    PhiVector u = phi(cur);
    for (int ev = 0; ev < n_del_events; ++ev) {
        std::vector<int> gaps;
        for (size_t g = 0; g < u.size(); ++g)
            if (u[g] > 0) gaps.push_back(static_cast<int>(g));
        if (gaps.empty()) break;
        int g = gaps[rng() % gaps.size()];
        int len = 1 + static_cast<int>(rng() % std::min(max_per_event, u[g]));
        for (int j = 0; j < len; ++j) pat.zero_deletions.push_back(g + 1);
        u[g] -= len;
    }
    std::sort(pat.zero_deletions.begin(), pat.zero_deletions.end());
    return pat;
}

}  // namespace

ErrorPattern sample_pattern(const BitString& x, const ShiftBudget& b, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int t = b.t > 0 ? static_cast<int>(rng() % (b.t + 1)) : 0;
    int sp = b.s_plus > 0 ? static_cast<int>(rng() % (b.s_plus + 1)) : 0;
    int sm = b.s_minus > 0 ? static_cast<int>(rng() % (b.s_minus + 1)) : 0;
    return sample_shifts_then_deletions(x, sp, sm, t, 1, rng);
}

ErrorPattern sample_pattern(const BitString& x, const BlockBudget& b, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int tb = b.t_b > 0 && b.ell > 0 ? static_cast<int>(rng() % (b.t_b + 1)) : 0;
    int s = b.s > 0 ? static_cast<int>(rng() % (b.s + 1)) : 0;
    int sp = s > 0 ? static_cast<int>(rng() % (s + 1)) : 0;
    return sample_shifts_then_deletions(x, sp, s - sp, tb, std::max(b.ell, 1), rng);
}

}  // namespace dtc
