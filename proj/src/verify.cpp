#include "knesertw/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "knesertw/exactsolver.hpp"
#include "knesertw/kneser.hpp"

namespace knesertw {

namespace {

void echo(ConditionReport& r, const std::string& key, const std::string& value) {
    r.params.emplace_back(key, value);
}

void echo(ConditionReport& r, const std::string& key, long value) {
    r.params.emplace_back(key, std::to_string(value));
}

void echo(ConditionReport& r, const std::string& key, const BigInt& value) {
    r.params.emplace_back(key, value.get_str());
}

void echo(ConditionReport& r, const std::string& key, const BigRat& value) {
    r.params.emplace_back(key, rat_str(value));
}

BigInt factorial(long m) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(std::max(m, 0L)));
    return f;
}

// sum_{s=1}^{limit} C(t-1,s-1) C(k+1-t,s) C(k-t+s,s) C(n-t-s,k-t-s)
BigInt separator_sum(long n, long k, long t, long limit) {
    BigInt sum = 0;
    for (long s = 1; s <= limit; ++s)
        sum += binom(t - 1, s - 1) * binom(k + 1 - t, s) * binom(k - t + s, s) *
               binom(n - t - s, k - t - s);
    return sum;
}

// sum_{s=1}^{t} c^s / ((s-1)! s! s!)
BigRat corollary14_sum(const BigRat& c, long t) {
    BigRat sum = 0;
    BigRat power = 1;
    for (long s = 1; s <= t; ++s) {
        power *= c;
        sum += power / BigRat(factorial(s - 1) * factorial(s) * factorial(s));
    }
    return sum;
}

}  // namespace

ConditionReport check_lemma5(long n, long k, long t, long enum_cap) {
    if (!(n > k && k >= t && t >= 1))
        throw std::invalid_argument("check_lemma5: need n > k >= t >= 1");
    ConditionReport report;
    report.id = "lemma5";
    echo(report, "n", n);
    echo(report, "k", k);
    echo(report, "t", t);

    BigInt t2 = binom(n - t, k - t);
    BigInt t3 = BigInt(k - t) * t * binom(n - k, k - t);
    BigInt t1 = 0;
    for (long i = 0; i < t; ++i) t1 += binom(k, i) * binom(n - k, k - i);
    BigInt total = binom(n, k);

    report.lhs = BigRat(t1 + t2 + t3);
    report.rhs = BigRat(total);
    report.holds = report.lhs <= report.rhs;
    echo(report, "T1", t1);
    echo(report, "T2", t2);
    echo(report, "T3", t3);

    if (total <= enum_cap && n <= 62) {
        // classify every k-subset of [n]; the three classes are disjoint by
        // their defining element counts in [t] and [k]
        std::uint64_t head_k = (std::uint64_t{1} << k) - 1;
        std::uint64_t head_t = (std::uint64_t{1} << t) - 1;
        std::uint64_t top = std::uint64_t{1} << n;
        long c1 = 0, c2 = 0, c3 = 0;
        for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < top;) {
            int in_k = std::popcount(m & head_k);
            int in_t = std::popcount(m & head_t);
            if (in_k <= t - 1) ++c1;
            if (in_t == t) ++c2;
            if (in_t == t - 1 && in_k == t) ++c3;
            std::uint64_t c = m & (~m + 1);
            std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
        bool match = (t1 == c1) && (t2 == c2) && (t3 == c3);
        echo(report, "enumerated_T1", static_cast<long>(c1));
        echo(report, "enumerated_T2", static_cast<long>(c2));
        echo(report, "enumerated_T3", static_cast<long>(c3));
        echo(report, "enumeration_match", match ? "true" : "false");
        report.holds = report.holds && match;
    }
    return report;
}

FProfile f_profile(long n, long k, long t) {
    if (!(k > t && t >= 1)) throw std::invalid_argument("f_profile: need k > t >= 1");
    FProfile fp;
    fp.hypothesis = 2 * (n - t) >= (k + 1 - t) * (k - t);
    for (long r = 0; r < t; ++r)
        fp.values.push_back(binom(k - r, t - r) * binom(n - 2 * t + r, k - 2 * t + r));
    fp.monotone = true;
    for (std::size_t i = 1; i < fp.values.size(); ++i)
        if (fp.values[i - 1] > fp.values[i]) fp.monotone = false;
    return fp;
}

Theorem9Report check_theorem9(long n, long k, long t) {
    if (!(k > t && t > 0)) throw std::invalid_argument("check_theorem9: need k > t > 0");
    Theorem9Report out;

    ConditionReport c1;
    c1.id = "eqns1";
    c1.lhs = BigRat(n);
    c1.rhs = BigRat((t + 1) * (k + 1 - t));
    c1.holds = c1.lhs >= c1.rhs;

    ConditionReport c2;
    c2.id = "eqns2";
    c2.lhs = BigRat(n);
    c2.rhs = BigRat(t) + make_rat((k + 1 - t) * (k - t), 2);
    c2.holds = c2.lhs >= c2.rhs;

    ConditionReport c3;
    c3.id = "eqns3";
    c3.lhs = make_rat(binom(n - t, k - t), BigInt(3));
    c3.rhs = BigRat(separator_sum(n, k, t, std::min(t, k - t)));
    c3.holds = c3.lhs >= c3.rhs;

    for (ConditionReport* r : {&c1, &c2, &c3}) {
        echo(*r, "n", n);
        echo(*r, "k", k);
        echo(*r, "t", t);
    }
    out.guaranteed = c1.holds && c2.holds && c3.holds;
    out.conditions = {std::move(c1), std::move(c2), std::move(c3)};
    return out;
}

Lemma8Report check_lemma8_separator_bound(long n, long k, long t, const BigRat& p,
                                          std::size_t separator_vertex_cap) {
    if (p < make_rat(2, 3) || p >= 1)
        throw std::invalid_argument("check_lemma8: p must lie in [2/3, 1)");
    Lemma8Report out;
    Theorem9Report t9 = check_theorem9(n, k, t);
    ConditionReport sep;
    sep.id = "lemma8";
    sep.lhs = (1 - p) * BigRat(binom(n - t, k - t));
    sep.rhs = BigRat(separator_sum(n, k, t, t));
    sep.holds = sep.lhs >= sep.rhs;
    echo(sep, "n", n);
    echo(sep, "k", k);
    echo(sep, "t", t);
    echo(sep, "p", p);

    out.conditions = {t9.conditions[0], t9.conditions[1], sep};
    out.hypotheses_hold = t9.conditions[0].holds && t9.conditions[1].holds && sep.holds;

    if (out.hypotheses_hold &&
        binom(n, k) <= static_cast<long>(separator_vertex_cap)) {
        KneserGraph kg = build_graph(KneserParams{n, k, t}, separator_vertex_cap);
        SeparatorResult min_sep = min_balanced_separator(kg.graph, p, separator_vertex_cap);
        BigInt floor_size = binom(n, k) - binom(n - t, k - t);
        out.separator_cross_check =
            BigInt(static_cast<long>(min_sep.separator.size())) >= floor_size;
    }
    return out;
}

BigRat compute_K(long c) {
    if (c < 1) throw std::invalid_argument("compute_K: c must be >= 1");
    BigRat sum = 0;
    BigRat c_power = 1;  // c^(s-1)
    for (long s = 1; s <= c; ++s) {
        sum += BigRat(binom(c - 1, s - 1) * binom(c + 1, s) * binom(c + s, s)) / c_power;
        c_power *= c;
    }
    return BigRat(c - 1) + 3 * sum;
}

namespace {

// Right side of the key threshold inequality at (c, t, n):
// sum_{s=1}^{c} 3 c!/((c-s)!(s-1)!) C(c+1,s) C(c+s,s) prod_{i=1}^{s-1} (t-i)/(n-t-i).
BigRat kprime_rhs(long c, long t, long n) {
    BigRat sum = 0;
    for (long s = 1; s <= c; ++s) {
        BigRat term = make_rat(3 * falling_factorial(c, s), factorial(s - 1)) *
                      binom(c + 1, s) * binom(c + s, s);
        for (long i = 1; i <= s - 1; ++i) term *= make_rat(t - i, n - t - i);
        sum += term;
    }
    return sum;
}

// Failure at the minimal n persists for all larger n: the left side n-t is
// increasing and every right-side product term is non-increasing in n.
// Checked term by term at n and n+1.
bool kprime_monotone_in_n(long c, long t, long n) {
    for (long s = 1; s <= c; ++s) {
        BigRat at_n = 1, at_n1 = 1;
        for (long i = 1; i <= s - 1; ++i) {
            at_n *= make_rat(t - i, n - t - i);
            at_n1 *= make_rat(t - i, n + 1 - t - i);
        }
        if (at_n1 > at_n) return false;
    }
    return true;
}

}  // namespace

ThresholdResult compute_Kprime(long c, long k_window_top) {
    if (c < 1) throw std::invalid_argument("compute_Kprime: c must be >= 1");
    ThresholdResult result;
    result.c = c;
    result.K_of_c = compute_K(c);
    if (k_window_top == 0) {
        BigInt ceil_K = (result.K_of_c.get_num() + result.K_of_c.get_den() - 1) /
                        result.K_of_c.get_den();
        k_window_top = 4 * static_cast<long>(ceil_K.get_si());
    }

    long first_fail = -1;
    for (long k = 2 * c + 1; k <= k_window_top; ++k) {
        long t = k - c;
        long n = (t + 1) * (c + 1);
        ThresholdVerdict v;
        v.k = k;
        v.t = t;
        v.n = n;
        v.lhs = n - t;
        v.rhs = kprime_rhs(c, t, n);
        v.fails = BigRat(v.lhs) > v.rhs;
        if (v.fails) {
            v.monotone_certified = kprime_monotone_in_n(c, t, n);
            if (first_fail < 0) first_fail = k;
        } else {
            first_fail = -1;  // threshold must be followed by failures only
        }
        result.search_log.push_back(std::move(v));
    }
    if (first_fail < 0)
        throw std::runtime_error("compute_Kprime: no stable failure point in window");
    result.K_prime = first_fail;
    return result;
}

ConditionReport check_corollary14_cases(long t) {
    if (t < 2) throw std::invalid_argument("check_corollary14_cases: t must be >= 2");
    ConditionReport report;
    echo(report, "t", t);
    BigRat eps = make_rat(1, 1000000);

    if (t <= 16) {
        report.id = "case1";
        BigRat c0 = make_rat(t - 1, 6);
        report.lhs = corollary14_sum(c0, t);
        report.rhs = make_rat(t - 1, 3);
        report.holds = report.lhs < report.rhs;
        echo(report, "c", c0);
    } else if (t <= 23) {
        report.id = "case2";
        RationalInterval ln_t = ln_enclosure(t, eps);
        // the sum is increasing in c, so evaluating at the certified upper end
        // of ln(t) covers every c <= ln(t)
        report.lhs = corollary14_sum(ln_t.hi, t);
        report.rhs = make_rat(t - 1, 3);
        report.holds = report.lhs < report.rhs;
        echo(report, "ln_t_lo", ln_t.lo);
        echo(report, "ln_t_hi", ln_t.hi);
    } else {
        report.id = "tail24";
        RationalInterval ln_t = ln_enclosure(t, eps);
        report.lhs = 4 * ln_t.hi + ln_t.hi * ln_t.hi;  // certified upper bound
        report.rhs = BigRat(t - 1);
        report.holds = report.lhs < report.rhs;
        echo(report, "ln_t_lo", ln_t.lo);
        echo(report, "ln_t_hi", ln_t.hi);
    }
    return report;
}

ConditionReport check_tail_gap_growth(long t) {
    if (t < 24) throw std::invalid_argument("check_tail_gap_growth: t must be >= 24");
    ConditionReport report;
    report.id = "tail-gap";
    echo(report, "t", t);
    BigRat eps = make_rat(1, 1000000);
    RationalInterval a = ln_enclosure(t, eps);
    RationalInterval b = ln_enclosure(t + 1, eps);
    // gap(t) = (t-1) - (4 ln t + ln^2 t); compare the pessimistic end of
    // gap(t+1) against the optimistic end of gap(t)
    BigRat gap_next_lo = BigRat(t) - (4 * b.hi + b.hi * b.hi);
    BigRat gap_cur_hi = BigRat(t - 1) - (4 * a.lo + a.lo * a.lo);
    report.lhs = gap_cur_hi;
    report.rhs = gap_next_lo;
    report.holds = gap_next_lo > gap_cur_hi;
    return report;
}

ConditionReport compare_bounds(long k, long t) {
    if (!(k > t && t > 1)) throw std::invalid_argument("compare_bounds: need k > t > 1");
    ConditionReport report;
    report.id = "liu-bound";
    echo(report, "k", k);
    echo(report, "t", t);

    BigRat old_threshold =
        BigRat(2 * (k - t) * (t + 1)) * BigRat(binom(k, t)) + (k + t + 1);
    report.lhs = old_threshold;

    BigInt core = BigInt(k) * (k + 1 - t) * (k - t);
    if (t <= 16) {
        report.rhs = BigRat(t) + 6 * BigRat(core);
        echo(report, "new_without_additive_t", BigRat(6 * core));
    } else {
        RationalInterval ln_t = ln_enclosure(t, make_rat(1, 1000000));
        BigRat mass = BigRat(t - 1) * BigRat(core);
        report.rhs = BigRat(t) + mass / ln_t.lo;  // safe upper end of the threshold
        echo(report, "new_threshold_lo", BigRat(t) + mass / ln_t.hi);
        echo(report, "new_without_additive_t", mass / ln_t.lo);
    }
    report.holds = report.rhs < report.lhs;
    echo(report, "ratio_new_over_old", report.rhs / report.lhs);
    return report;
}

}  // namespace knesertw
