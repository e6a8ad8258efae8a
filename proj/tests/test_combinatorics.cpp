#include <doctest.h>

#include <cstdint>

#include "knesertw/combinatorics.hpp"

using namespace knesertw;

TEST_CASE("binom basics") {
    CHECK(binom(5, 2) == 10);
    for (long n = 0; n <= 20; ++n) CHECK(binom(n, 0) == 1);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(3, -1) == 0);
    CHECK(binom(-2, 1) == 0);
}

TEST_CASE("binom recurrence and symmetry, exhaustive to 60") {
    for (long a = 1; a <= 60; ++a)
        for (long b = 1; b < a; ++b)
            CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
    for (long a = 0; a <= 60; ++a)
        for (long b = 0; b <= a; ++b) CHECK(binom(a, b) == binom(a, a - b));
}

TEST_CASE("binom feeds eqns3 at (36,3,2)") {
    // left = (1/3) C(34,1), right = C(1,0) C(2,1) C(2,1) C(33,0)
    BigRat left = make_rat(binom(34, 1), BigInt(3));
    BigRat right = BigRat(binom(1, 0) * binom(2, 1) * binom(2, 1) * binom(33, 0));
    CHECK(rat_str(left) == "34/3");
    CHECK(right == 4);
    CHECK(left >= right);
}

TEST_CASE("colex rank endpoints") {
    CHECK(colex_rank(KSubset(6, {1, 2, 3})) == 0);
    CHECK(colex_rank(KSubset(6, {4, 5, 6})) == 19);
    CHECK(colex_unrank(0, 3, 6).elems == std::vector<int>{1, 2, 3});
    CHECK(colex_unrank(19, 3, 6).elems == std::vector<int>{4, 5, 6});
    CHECK_THROWS(colex_unrank(20, 3, 6));
    CHECK_THROWS(colex_unrank(-1, 3, 6));
}

TEST_CASE("colex rank is independent of ambient n") {
    CHECK(colex_rank(KSubset(7, {2, 4, 5})) == colex_rank(KSubset(12, {2, 4, 5})));
}

TEST_CASE("colex rank/unrank inverse, exhaustive k <= n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k <= n; ++k) {
            long total = binom(n, k).get_si();
            for (long r = 0; r < total; ++r) {
                KSubset s = colex_unrank(r, k, n);
                CHECK(s.k() == k);
                CHECK(colex_rank(s) == r);
            }
        }
    }
}

TEST_CASE("rational arithmetic is exact on randomized inputs") {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<long>(state % 1000) + 1;
    };
    for (int i = 0; i < 200; ++i) {
        long p = next() - 500, q = next(), r = next() - 500, s = next();
        BigRat sum = make_rat(p, q) + make_rat(r, s);
        // (p/q + r/s) * q * s == p*s + r*q
        CHECK(sum * q * s == BigRat(BigInt(p) * s + BigInt(r) * q));
    }
}

TEST_CASE("KSubset rejects malformed input") {
    CHECK_THROWS(KSubset(5, {0, 1}));
    CHECK_THROWS(KSubset(5, {1, 6}));
    CHECK_THROWS(KSubset(5, {2, 2}));
    CHECK_THROWS(KSubset(5, {}));
}

static void check_ln_cross(long t, const BigRat& eps) {
    RationalInterval iv = ln_enclosure(t, eps);
    CHECK(iv.lo <= iv.hi);
    CHECK(iv.width() <= eps);
    // independent certification: e^lo <= t <= e^hi
    BigRat tight = make_rat(1, 1000000000);
    CHECK(exp_enclosure(iv.lo, tight).hi <= t);
    CHECK(exp_enclosure(iv.hi, tight).lo >= t);
}

TEST_CASE("ln enclosure certified by exponential cross-check") {
    check_ln_cross(24, make_rat(1, 1000000));
    check_ln_cross(2, make_rat(1, 1000));
    check_ln_cross(17, make_rat(1, 1000000));
    check_ln_cross(200, make_rat(1, 1000000));

    // ln 24 = 3.1780538...; the enclosure must bracket it
    RationalInterval ln24 = ln_enclosure(24, make_rat(1, 1000000));
    CHECK(ln24.lo < make_rat(3178054, 1000000));
    CHECK(ln24.hi > make_rat(3178053, 1000000));

    RationalInterval ln2 = ln_enclosure(2, make_rat(1, 1000));
    CHECK(ln2.contains(make_rat(6931, 10000)));
}

TEST_CASE("ln enclosures of distinct arguments stay ordered") {
    BigRat eps = make_rat(1, 1000000);
    CHECK(ln_enclosure(17, eps).hi < ln_enclosure(23, eps).lo + make_rat(31, 100));
    CHECK(ln_enclosure(17, eps).hi < ln_enclosure(18, eps).lo);
}

TEST_CASE("enclosure argument checks") {
    CHECK_THROWS(ln_enclosure(1, make_rat(1, 10)));
    CHECK_THROWS(ln_enclosure(10, BigRat(0)));
    CHECK_THROWS(exp_enclosure(BigRat(-1), make_rat(1, 10)));
}
