#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "floorsum/exact.hpp"

using namespace floorsum;

TEST_CASE("emod follows the mathematical convention") {
    CHECK(emod(7, 5) == 2);
    CHECK(emod(-3, 5) == 2);
    CHECK(emod(10, 5) == 0);
    CHECK(emod(0, 1) == 0);
    CHECK_THROWS_AS(emod(3, 0), input_error);
    CHECK_THROWS_AS(emod(3, -2), input_error);
}

TEST_CASE("emod range and divisibility") {
    for (long a = -50; a <= 50; ++a)
        for (long n = 1; n <= 12; ++n) {
            Int r = emod(a, n);
            CHECK(r >= 0);
            CHECK(r < n);
            CHECK(emod(Int(a) - r, n) == 0);
        }
}

TEST_CASE("gcd") {
    CHECK(gcd(6, 4) == 2);
    CHECK(gcd(5, 2) == 1);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(7, 0) == 7);
    CHECK_THROWS_AS(gcd(0, 0), input_error);
    CHECK_THROWS_AS(gcd(-2, 4), input_error);
}

TEST_CASE("sawtooth values") {
    CHECK(sawtooth(3, 3) == 0);
    CHECK(sawtooth(1, 3) == make_rat(-1, 6));
    CHECK(sawtooth(2, 5) == make_rat(-1, 10));
    CHECK_THROWS_AS(sawtooth(1, 0), input_error);
}

TEST_CASE("sawtooth is odd and periodic") {
    for (long q = 1; q <= 9; ++q)
        for (long p = -3 * q; p <= 3 * q; ++p) {
            CHECK(sawtooth(p, q) + sawtooth(-p, q) == 0);
            CHECK(sawtooth(p + q, q) == sawtooth(p, q));
        }
}

TEST_CASE("power with the 0^0 = 1 convention") {
    CHECK(power(0, 0) == 1);
    CHECK(power(2, 10) == 1024);
    CHECK(power(-3, 3) == -27);
    CHECK_THROWS_AS(power(2, -1), input_error);
}

TEST_CASE("multinomial") {
    CHECK(multinomial(2, 1, 1, 0) == 2);
    CHECK(multinomial(3, 1, 1, 1) == 6);
    CHECK(multinomial(5, 5, 0, 0) == 1);
    CHECK_THROWS_AS(multinomial(3, 1, 1, 0), input_error);
    CHECK_THROWS_AS(multinomial(2, -1, 2, 1), input_error);
}

TEST_CASE("Rat stays normalized through arithmetic") {
    // random expression trees; audit canonical form after each op
    std::mt19937 rng(7);
    auto rnd = [&](long lo, long hi) { return lo + (long)(rng() % (hi - lo + 1)); };
    Rat acc = make_rat(rnd(-20, 20), rnd(1, 20));
    for (int i = 0; i < 500; ++i) {
        Rat x = make_rat(rnd(-20, 20), rnd(1, 20));
        switch (rng() % 3) {
            case 0: acc += x; break;
            case 1: acc -= x; break;
            case 2: acc *= x; break;
        }
        if (mpz_cmpabs_ui(acc.get_num().get_mpz_t(), 1'000'000'000) > 0)
            acc = make_rat(rnd(-20, 20), rnd(1, 20));
        CHECK(acc.get_den() > 0);
        CHECK(::floorsum::gcd(abs(acc.get_num()), acc.get_den()) == 1);
    }
}

TEST_CASE("rat_to_string normalization") {
    CHECK(rat_to_string(make_rat(0, 5)) == "0");
    CHECK(rat_to_string(make_rat(2, 4)) == "1/2");
    CHECK(rat_to_string(make_rat(3, -6)) == "-1/2");
    CHECK(rat_to_string(make_rat(8, 4)) == "2");
}
