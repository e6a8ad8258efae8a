#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knesertw/combinatorics.hpp"

namespace knesertw {

// Pass/fail record for one checked inequality, with exact witness values.
struct ConditionReport {
    std::string id;  // eqns1 | eqns2 | eqns3 | lemma5 | f-monotone | case1 | case2 |
                     // tail24 | tail-gap | liu-bound | kprime
    bool holds = false;
    BigRat lhs;
    BigRat rhs;
    std::vector<std::pair<std::string, std::string>> params;
};

// C(n-t,k-t) + (k-t) t C(n-k,k-t) + sum_{i=0}^{t-1} C(k,i) C(n-k,k-i) <= C(n,k).
// When C(n,k) <= enum_cap the three set cardinalities are re-derived by
// explicit subset classification and must match the closed forms.
ConditionReport check_lemma5(long n, long k, long t, long enum_cap = 100000);

struct FProfile {
    std::vector<BigInt> values;  // f(r) = C(k-r,t-r) C(n-2t+r,k-2t+r), r = 0..t-1
    bool monotone = false;
    bool hypothesis = false;  // n >= t + (k+1-t)(k-t)/2
};

FProfile f_profile(long n, long k, long t);

struct Theorem9Report {
    std::vector<ConditionReport> conditions;  // eqns1, eqns2, eqns3
    bool guaranteed = false;  // all three hold => tw = C(n,k)-C(n-t,k-t)-1
};

Theorem9Report check_theorem9(long n, long k, long t);

struct Lemma8Report {
    std::vector<ConditionReport> conditions;  // eqns1, eqns2, separator inequality
    bool hypotheses_hold = false;
    // Set when the hypotheses hold and the graph is small enough to search:
    // min p-separator size >= C(n,k) - C(n-t,k-t).
    std::optional<bool> separator_cross_check;
};

Lemma8Report check_lemma8_separator_bound(long n, long k, long t, const BigRat& p,
                                          std::size_t separator_vertex_cap = 20);

// K(c) = c - 1 + 3 sum_{s=1}^{c} C(c-1,s-1) C(c+1,s) C(c+s,s) / c^(s-1).
BigRat compute_K(long c);

struct ThresholdVerdict {
    long k = 0, t = 0, n = 0;
    BigInt lhs;  // n - t
    BigRat rhs;
    bool fails = false;               // lhs > rhs, i.e. the key inequality is violated
    bool monotone_certified = false;  // failure persists for all larger n (failing k only)
};

struct ThresholdResult {
    long c = 0;
    BigRat K_of_c;
    long K_prime = 0;  // minimal k in the window from which the test fails onward
    std::vector<ThresholdVerdict> search_log;
};

// Sweeps k in [2c+1, k_window_top] with t = k-c and the minimal
// n = (t+1)(c+1), evaluating the key inequality via exact falling-factorial
// products. k_window_top = 0 picks 4*ceil(K(c)). Throws if no threshold
// exists inside the window.
ThresholdResult compute_Kprime(long c, long k_window_top = 0);

// Case analysis for a single t:
//   2..16: the case sum at c = (t-1)/6 stays below (t-1)/3 (exact rational);
//   17..23: same with c = upper end of an ln(t) enclosure;
//   >= 24: t - 1 > 4 ln t + (ln t)^2 via outward enclosure.
ConditionReport check_corollary14_cases(long t);

// Certifies that the tail gap (t-1) - (4 ln t + (ln t)^2) grows from t to t+1.
ConditionReport check_tail_gap_growth(long t);

// Older threshold 2(k-t)(t+1)C(k,t)+k+t+1 vs the new one
// (t + 6k(k+1-t)(k-t) for t <= 16, t + (t-1)k(k+1-t)(k-t)/ln t for t >= 17).
// holds = the new threshold is smaller; the report carries both values.
ConditionReport compare_bounds(long k, long t);

}  // namespace knesertw
