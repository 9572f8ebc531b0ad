#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtc/sequence.hpp"

namespace dtc {

// right_shift_of_0: 01 -> 10, left_shift_of_0: 10 -> 01.
enum class ShiftKind { right_shift_of_0, left_shift_of_0 };

const char* to_string(ShiftKind k);

struct ShiftEvent {
    ShiftKind kind;
    int pos;  // 1-based left index of the swapped pair in the current string
};

// A replayable channel event.  Shifts apply first, in order, each against the
// current string; the 0-deletions then apply simultaneously as gap-index
// decrements on the shifted string.
struct ErrorPattern {
    std::vector<int> zero_deletions;  // 1-based gap indices, multiset
    std::vector<ShiftEvent> shifts;

    bool empty() const { return zero_deletions.empty() && shifts.empty(); }
    std::string to_json() const;
    static std::optional<ErrorPattern> from_json(const std::string& text);
};

// B(n, t, k+, k-): integer vectors with support at most t, entries in
// [-k-, k+], coordinate sum at most 0.
struct MagnitudeBallSpec {
    int n;
    int t;
    int k_plus;
    int k_minus;
};

// nullopt when the pattern is inapplicable (position out of range, stored
// kind contradicts the pair, gap exhausted).
std::optional<BitString> apply_pattern(const BitString& x, const ErrorPattern& e);

// B_{t,s}(x): everything reachable by at most t 0-deletions and at most s
// adjacent transpositions, interleaved in any order.
std::set<BitString> error_ball(const BitString& x, int t, int s);

// Same with the transposition budget split by direction.
std::set<BitString> error_ball_asym(const BitString& x, int t, int s_plus, int s_minus);

// At most t_b blocks of 0-deletions, each block removing 1..ell zeros from a
// single run (several blocks may hit the same run), plus at most s adjacent
// transpositions, interleaved in any order.
std::set<BitString> block_deletion_ball(const BitString& x, int t_b, int ell, int s);

// phi(y) - phi(x); throws std::invalid_argument when weights differ.
IntVector phi_displacement(const BitString& x, const BitString& y);

bool in_magnitude_ball(const IntVector& v, const MagnitudeBallSpec& spec);

struct ShiftBudget {
    int t;
    int s_plus;
    int s_minus;
};

struct BlockBudget {
    int t_b;
    int ell;
    int s;
};

// Deterministic for a fixed seed; the result is applicable to x and stays
// within the budget.
ErrorPattern sample_pattern(const BitString& x, const ShiftBudget& b, uint64_t seed);
ErrorPattern sample_pattern(const BitString& x, const BlockBudget& b, uint64_t seed);

}  // namespace dtc
