#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "floorsum/floor_sums.hpp"

using namespace floorsum;

TEST_CASE("faulhaber") {
    CHECK(faulhaber(2, 4) == 30);
    CHECK(faulhaber(0, 5) == 6);
    CHECK(faulhaber(3, 3) == 36);
    CHECK(faulhaber(0, 0) == 1);  // 0^0 = 1
    CHECK_THROWS_AS(faulhaber(-1, 3), input_error);
}

TEST_CASE("faulhaber direct and Bernoulli routes agree") {
    for (long r = 0; r <= 10; ++r)
        for (long n = 0; n <= 120; ++n)
            CHECK(faulhaber_direct(r, n) == faulhaber_bernoulli(r, n));
    // above the cutoff the dispatcher takes the Bernoulli path
    Int big = kFaulhaberDirectCutoff + 17;
    CHECK(faulhaber(4, big) == faulhaber_direct(4, big));
}

TEST_CASE("s_bruteforce") {
    CHECK(s_bruteforce(1, 6, 4) == 8);
    CHECK(s_bruteforce(2, 5, 2) == 2);
    CHECK(s_bruteforce(7, 1, 9) == 0);  // empty sum
    CHECK(s_bruteforce(0, 9, 4) == 8);  // r = 0 counts n-1 terms
}

TEST_CASE("decompose") {
    auto d = decompose(6, 4);
    CHECK(d.d == 2);
    CHECK(d.b == 3);
    CHECK(d.a == 2);
    d = decompose(5, 2);
    CHECK(d.d == 1);
    CHECK(d.b == 5);
    CHECK(d.a == 2);
    d = decompose(7, 7);
    CHECK(d.d == 7);
    CHECK(d.b == 1);
    CHECK(d.a == 1);
    for (long n = 1; n <= 30; ++n)
        for (long m = 1; m <= 30; ++m) {
            auto x = decompose(n, m);
            CHECK(x.d * x.b == n);
            CHECK(x.d * x.a == m);
            CHECK(gcd(x.a, x.b) == 1);
        }
}

TEST_CASE("closed forms at spot values") {
    CHECK(s0_closed(5, 2) == 4);
    CHECK(s0_closed(1, 1) == 0);
    CHECK(s0_closed(3, 2) == 2);
    CHECK_THROWS_AS(s0_closed(6, 4), input_error);

    CHECK(s1_closed(6, 4) == 8);
    CHECK(s1_closed(5, 2) == 2);
    CHECK(s1_closed(1, 5) == 0);

    CHECK(s2_closed(6, 4) == 18);
    CHECK(s2_closed(5, 2) == 2);
    CHECK(s2_closed(2, 5) == 4);

    CHECK(s3_closed(6, 4) == 44);
    CHECK(s3_closed(5, 2) == 2);
    CHECK(s3_closed(2, 5) == 8);
}

TEST_CASE("closed forms equal the oracle") {
    for (long n = 1; n <= 60; ++n)
        for (long m = 1; m <= 60; ++m) {
            CHECK(s1_closed(n, m) == s_bruteforce(1, n, m));
            CHECK(s2_closed(n, m) == s_bruteforce(2, n, m));
            CHECK(s3_closed(n, m) == s_bruteforce(3, n, m));
        }
}

TEST_CASE("recurrence residual vanishes on consistent inputs") {
    std::vector<Int> s52{4, 2, 2, 2};
    CHECK(recurrence_residual(3, 5, 2, s52) == 0);
    std::vector<Int> s32{2, 1};
    CHECK(recurrence_residual(1, 3, 2, s32) == 0);
    std::vector<Int> s52e{4, 2, 2};
    CHECK(recurrence_residual(2, 5, 2, s52e) == 0);
    CHECK_THROWS_AS(recurrence_residual(3, 5, 2, s52e), input_error);  // arity
    CHECK_THROWS_AS(recurrence_residual(2, 6, 4, s52e), input_error);  // coprime
}

TEST_CASE("for odd r the recurrence determines S_r") {
    // even r: the S_r coefficient cancels; odd r: solve and compare to oracle
    for (long b = 1; b <= 30; ++b)
        for (long a = 1; a <= 30; ++a) {
            if (gcd(a, b) != 1) continue;
            for (long r = 1; r <= 5; r += 2) {
                Rat sum(0);
                for (long i = 0; i < r; ++i) {
                    Int t = binomial(r, i) * power(a - 1, r - i) * s_bruteforce(i, b, a);
                    if (i % 2 == 0)
                        sum += t;
                    else
                        sum -= t;
                }
                sum /= 2;
                CHECK(to_int_exact(sum) == s_bruteforce(r, b, a));
            }
        }
}

TEST_CASE("lift_decomposition") {
    std::vector<Int> core2{2, 1, 1};
    CHECK(lift_decomposition(2, 6, 4, core2) == 18);
    std::vector<Int> core1{2, 1};
    CHECK(lift_decomposition(1, 6, 4, core1) == 8);
    std::vector<Int> core52{4, 2};
    CHECK(lift_decomposition(1, 5, 2, core52) == 2);  // d = 1, identity lift
    CHECK_THROWS_AS(lift_decomposition(2, 6, 4, core1), input_error);
}

TEST_CASE("s_general dispatch") {
    CHECK(s_general(2, 6, 4, Method::closed_form).value == 18);
    CHECK(s_general(5, 5, 2, Method::bruteforce).value == 2);
    CHECK(s_general(4, 1, 3, Method::bruteforce).value == 0);
    CHECK_THROWS_AS(s_general(4, 6, 4, Method::closed_form), input_error);
    CHECK_THROWS_AS(s_general(4, 6, 4, Method::recurrence), input_error);  // even r

    for (long n = 1; n <= 25; ++n)
        for (long m = 1; m <= 25; ++m)
            for (long r = 0; r <= 5; ++r) {
                Int oracle = s_bruteforce(r, n, m);
                if (r <= 3) CHECK(s_general(r, n, m, Method::closed_form).value == oracle);
                CHECK(s_general(r, n, m, Method::delta_expansion).value == oracle);
                if (r % 2 == 1) CHECK(s_general(r, n, m, Method::recurrence).value == oracle);
            }
}
