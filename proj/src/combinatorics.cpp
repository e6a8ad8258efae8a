#include "knesertw/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace knesertw {

BigInt binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return result;
}

BigInt falling_factorial(long a, long len) {
    BigInt result = 1;
    for (long i = 0; i < len; ++i) result *= (a - i);
    return result;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigRat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

std::string rat_str(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

KSubset::KSubset(int ambient_n, std::vector<int> members)
    : n(ambient_n), elems(std::move(members)) {
    std::sort(elems.begin(), elems.end());
    if (elems.empty()) throw std::invalid_argument("KSubset: empty");
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n)
            throw std::invalid_argument("KSubset: element out of [1,n]");
        if (i > 0 && elems[i] == elems[i - 1])
            throw std::invalid_argument("KSubset: repeated element");
    }
}

bool KSubset::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

int intersection_size(const KSubset& a, const KSubset& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.elems.size() && j < b.elems.size()) {
        if (a.elems[i] < b.elems[j])
            ++i;
        else if (a.elems[i] > b.elems[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::int64_t colex_rank(const KSubset& s) {
    BigInt r = 0;
    for (int i = 1; i <= s.k(); ++i) r += binom(s.elems[i - 1] - 1, i);
    if (!r.fits_slong_p()) throw std::overflow_error("colex_rank: rank exceeds int64");
    return static_cast<std::int64_t>(r.get_si());
}

KSubset colex_unrank(std::int64_t r, int k, int n) {
    if (k < 1 || n < k) throw std::invalid_argument("colex_unrank: need 1 <= k <= n");
    BigInt total = binom(n, k);
    if (r < 0 || total <= r) throw std::out_of_range("colex_unrank: rank out of range");
    BigInt rest(static_cast<long>(r));
    std::vector<int> elems(k);
    int hi = n;
    for (int i = k; i >= 1; --i) {
        // largest m with C(m-1, i) <= rest
        int m = hi;
        while (binom(m - 1, i) > rest) --m;
        elems[i - 1] = m;
        rest -= binom(m - 1, i);
        hi = m - 1;
    }
    return KSubset(n, std::move(elems));
}

RationalInterval interval_add(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval interval_scale(const RationalInterval& a, long m) {
    if (m >= 0) return {a.lo * m, a.hi * m};
    return {a.hi * m, a.lo * m};
}

RationalInterval interval_square(const RationalInterval& a) {
    if (a.lo < 0) throw std::invalid_argument("interval_square: negative lower end");
    return {a.lo * a.lo, a.hi * a.hi};
}

namespace {

// 2*atanh(x) = ln((1+x)/(1-x)) for 0 <= x < 1. Remainder after N terms of the
// odd-power series is bounded by 2 x^(2N+1) / ((2N+1)(1-x^2)).
RationalInterval two_atanh(const BigRat& x, const BigRat& eps) {
    BigRat x2 = x * x;
    BigRat geom = 1 / (1 - x2);
    BigRat power = x;  // x^(2j+1)
    BigRat sum = 0;
    long j = 0;
    for (;;) {
        sum += power / (2 * j + 1);
        power *= x2;
        ++j;
        BigRat tail = 2 * power * geom / (2 * j + 1);
        if (tail <= eps) return {2 * sum, 2 * sum + tail};
    }
}

}  // namespace

RationalInterval ln_enclosure(long t, const BigRat& eps) {
    if (t < 2) throw std::invalid_argument("ln_enclosure: t must be >= 2");
    if (eps <= 0) throw std::invalid_argument("ln_enclosure: eps must be positive");
    // t = 2^m * r with r in [1,2); ln t = m ln 2 + ln r keeps both series
    // arguments at most 1/3.
    long m = 0;
    long pow2 = 1;
    while (pow2 * 2 <= t) {
        pow2 *= 2;
        ++m;
    }
    BigRat r = make_rat(t, pow2);
    BigRat slice = eps / (2 * (m + 1));
    RationalInterval ln2 = two_atanh(make_rat(1, 3), slice);
    RationalInterval lnr{BigRat(0), BigRat(0)};
    if (r > 1) lnr = two_atanh((r - 1) / (r + 1), slice);
    return interval_add(interval_scale(ln2, m), lnr);
}

RationalInterval exp_enclosure(const BigRat& x, const BigRat& eps) {
    if (x < 0) throw std::invalid_argument("exp_enclosure: x must be >= 0");
    if (eps <= 0) throw std::invalid_argument("exp_enclosure: eps must be positive");
    BigRat term = 1;  // x^i / i!
    BigRat sum = 0;
    long i = 0;
    for (;;) {
        sum += term;
        ++i;
        term *= x / i;
        // once x/(i+1) < 1 the tail is geometric with that ratio
        if (x < i + 1) {
            BigRat ratio = x / (i + 1);
            BigRat tail = term / (1 - ratio);
            if (tail <= eps) return {sum, sum + tail};
        }
    }
}

}  // namespace knesertw
