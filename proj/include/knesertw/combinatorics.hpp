#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace knesertw {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(a,b) with the zero convention: 0 whenever b < 0, b > a, or a < 0.
BigInt binom(long a, long b);

// a * (a-1) * ... * (a-len+1); empty product (len <= 0) is 1.
BigInt falling_factorial(long a, long len);

BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long num, long den);

// "p/q" for proper fractions, plain integer string otherwise.
std::string rat_str(const BigRat& q);

// A k-subset of [1,n], stored sorted.
struct KSubset {
    int n = 0;
    std::vector<int> elems;

    KSubset() = default;
    KSubset(int ambient_n, std::vector<int> members);

    int k() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;
};

int intersection_size(const KSubset& a, const KSubset& b);

// Colexicographic rank: sum over positions i=1..k of C(s_i - 1, i).
// Bijective onto [0, C(n,k)). Independent of n for a fixed element set.
std::int64_t colex_rank(const KSubset& s);
KSubset colex_unrank(std::int64_t r, int k, int n);

// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
    BigRat lo;
    BigRat hi;

    BigRat width() const { return hi - lo; }
    bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
};

RationalInterval interval_add(const RationalInterval& a, const RationalInterval& b);
RationalInterval interval_scale(const RationalInterval& a, long m);
// Requires a.lo >= 0.
RationalInterval interval_square(const RationalInterval& a);

// Certified enclosure of ln(t), width <= eps. Endpoints are exact rationals;
// the series remainder is bounded geometrically, so lo <= ln t <= hi is proven.
RationalInterval ln_enclosure(long t, const BigRat& eps);

// Certified enclosure of exp(x) for rational x >= 0 (Taylor tail bound).
RationalInterval exp_enclosure(const BigRat& x, const BigRat& eps);

}  // namespace knesertw
