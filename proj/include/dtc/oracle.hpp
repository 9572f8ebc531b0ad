#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtc/block_code.hpp"
#include "dtc/sequence.hpp"

namespace dtc {

// Brute-force ground truth.  Nothing here shares decoder logic with the code
// families: everything reduces to channel enumeration plus set algebra.

struct VerificationReport {
    std::string name;
    long long total_cases = 0;
    std::vector<std::string> failures;  // counterexamples, capped at 32
    double elapsed_seconds = 0;

    bool verified() const { return failures.empty(); }
    void add_failure(const std::string& f);
    std::string to_json() const;
};

using BallFn = std::function<std::set<BitString>(const BitString&)>;
using DecodeFn = std::function<std::optional<BitString>(const BitString&)>;
using ListDecodeFn = std::function<std::vector<BitString>(const BitString&)>;

// Pairwise ball disjointness over a finite code, reporting a witness string
// for any collision.
VerificationReport balls_disjoint(const std::vector<BitString>& code, const BallFn& ball,
                                  const std::string& name);

// Every ball member of every codeword must decode back to it.  case_guard
// bounds the total number of decode calls (error entry in the report when
// exceeded, never a silent truncation).
VerificationReport exhaustive_decode_check(const std::vector<BitString>& code, const BallFn& ball,
                                           const DecodeFn& dec, const std::string& name,
                                           long long case_guard = 10'000'000);

// List variant: the transmitted word must appear in the list.  max_list_out,
// when given, receives the largest list size seen.
VerificationReport exhaustive_list_decode_check(const std::vector<BitString>& code,
                                                const BallFn& ball, const ListDecodeFn& dec,
                                                const std::string& name, int* max_list_out,
                                                long long case_guard = 10'000'000);

// All codewords whose B_{t,s} ball contains y.
std::set<BitString> find_containing_codewords(const BitString& y,
                                              const std::vector<BitString>& code, int t, int s);

// Independent ball enumerators: plain depth-first recursion on raw strings,
// no phi machinery, no shared code with channel.cpp.
std::set<BitString> recursive_ball_enum(const BitString& x, int t, int s);
std::set<BitString> recursive_block_ball_enum(const BitString& x, int t_b, int ell, int s);

// Exact maximum code size for the B_{t,s} conflict graph at small n:
// branch-and-bound maximum independent set per weight class, greedy seed.
// Throws std::runtime_error when the node guard is exceeded.
int max_code_size(int n, int t, int s, long long node_guard = 50'000'000);

// Rigorous upper bound on the same quantity via a greedy clique cover of
// each weight class (no codeword pair inside one clique can coexist).  Fast
// where the exact search is not.
int max_code_cover_bound(int n, int t, int s);

// Family-level exhaustive harnesses (shared by unit tests, the acceptance
// suite and the CLI).  Each enumerates every residue class of the family at
// the given parameters.
VerificationReport verify_single_exhaustive(int n);
VerificationReport verify_shift_exhaustive(int n, int s_plus, int s_minus);
VerificationReport verify_lee_exhaustive(int n, int t, int s);
VerificationReport verify_list_exhaustive(int n, int t, int s_plus, int s_minus,
                                          int* max_list_out = nullptr);
VerificationReport verify_block_nonsys_exhaustive(int n, BlockParams params);
VerificationReport verify_block_systematic_random(int k, BlockParams params, int trials,
                                                  uint64_t seed);

// Lee-distance hypothesis scan: groups all length-n strings by (weight,
// syndrome vector) and reports any same-group pair of gap vectors closer than
// 2(r+1).  Zero failures = hypothesis holds for every residue class.
VerificationReport verify_lee_distance_property(int n, int r);

}  // namespace dtc
