#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace floorsum {

// Arbitrary-precision signed integer. All arithmetic is exact at any
// magnitude.
using Int = mpz_class;

// Exact rational. Kept canonical: denominator > 0, gcd(|num|, den) = 1.
// mpq_class enforces this as long as values are built through make_rat or
// mpq arithmetic.
using Rat = mpq_class;

// Input violated a documented precondition (invalid modulus, non-coprime
// arguments, bad exponent, ...).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A value that must be an integer (or an exact division) was not. Always a
// bug in a formula transcription, never a user error.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw input_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact conversion Rat -> Int; throws internal_error if not an integer.
inline Int to_int_exact(const Rat& q, const char* what = "to_int_exact") {
    if (!is_integer(q))
        throw internal_error(std::string(what) + ": non-integral value " + q.get_str());
    return q.get_num();
}

// "p/q" with positive denominator, plain decimal when integral.
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_str();
}

// Mathematical mod: result in [0, n) for any sign of a.
inline Int emod(const Int& a, const Int& n) {
    if (n <= 0) throw input_error("emod: modulus must be positive");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw input_error("gcd: arguments must be nonnegative");
    if (a == 0 && b == 0) throw input_error("gcd(0,0) is undefined");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// ((p/q)): 0 at integers, fractional part minus 1/2 otherwise.
inline Rat sawtooth(const Int& p, const Int& q) {
    if (q <= 0) throw input_error("sawtooth: modulus must be positive");
    Int r = emod(p, q);
    if (r == 0) return Rat(0);
    return make_rat(2 * r - q, 2 * q);
}

// x^e with the 0^0 = 1 convention.
inline Int power(const Int& x, const Int& e) {
    if (e < 0) throw input_error("power: exponent must be nonnegative");
    if (!e.fits_ulong_p()) throw input_error("power: exponent too large");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e.get_ui());
    return r;
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

// r! / (u! v! w!) for u+v+w = r.
inline Int multinomial(const Int& r, const Int& u, const Int& v, const Int& w) {
    if (u < 0 || v < 0 || w < 0 || u + v + w != r)
        throw input_error("multinomial: need u,v,w >= 0 with u+v+w = r");
    return binomial(r, u) * binomial(r - u, v);
}

}  // namespace floorsum
