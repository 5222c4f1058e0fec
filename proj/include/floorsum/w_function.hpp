#pragma once

#include <vector>

#include "floorsum/exact.hpp"

namespace floorsum {

// Remainder sequence of Euclid's algorithm: u_{i+2} = u_i mod u_{i+1},
// stored down to the first zero. n marks the index of the gcd.
struct EuclidChain {
    std::vector<Int> u;
    std::size_t n = 0;

    std::size_t length() const { return n; }  // number of f-terms in the closed form
};

inline EuclidChain euclid_chain(const Int& u0, const Int& u1) {
    if (u0 < 1 || u1 < 1) throw input_error("euclid_chain: arguments must be positive");
    EuclidChain c;
    c.u.push_back(u0);
    c.u.push_back(u1);
    while (c.u.back() != 0) c.u.push_back(emod(c.u[c.u.size() - 2], c.u.back()));
    c.n = c.u.size() - 2;
    return c;
}

// W_n(a,b) = sum_{k=1}^{n-1} (ak mod n)(bk mod n), by definition.
inline Int w_direct(const Int& n, const Int& a, const Int& b) {
    if (n < 1) throw input_error("w_direct: modulus must be positive");
    Int ra = emod(a, n), rb = emod(b, n);
    Int total = 0, xa = 0, xb = 0;
    for (Int k = 1; k < n; ++k) {
        xa += ra;
        if (xa >= n) xa -= n;
        xb += rb;
        if (xb >= n) xb -= n;
        total += xa * xb;
    }
    return total;
}

inline Int w_direct(const Int& n, const Int& a) { return w_direct(n, a, 1); }

// f(x,y) = (x/12y)[(1+x^2)(1+y^2) - xy(x-3)(y-3)]
inline Rat f_term(const Int& x, const Int& y) {
    if (x < 1 || y < 1) throw input_error("f_term: arguments must be positive");
    Int bracket = (1 + x * x) * (1 + y * y) - x * y * (x - 3) * (y - 3);
    return make_rat(x * bracket, 12 * y);
}

// One chain term of the W closed form:
//   (1+x^2)(1+y^2)/(xy) - (x-3)(y-3)
inline Rat w_chain_term(const Int& x, const Int& y) {
    return make_rat((1 + x * x) * (1 + y * y), x * y) - Rat((x - 3) * (y - 3));
}

namespace detail {

template <class TermFn>
Int w_euclid_with(const Int& n, const Int& m, TermFn&& term) {
    if (n < 1 || m < 1) throw input_error("w_euclid: arguments must be positive");
    if (gcd(n, m) != 1) throw input_error("w_euclid: arguments must be coprime");
    if (n == 1) return 0;
    EuclidChain chain = euclid_chain(n, emod(m, n));
    Rat acc(0);
    for (std::size_t k = 0; k + 1 <= chain.n; ++k) {
        Rat t = term(chain.u[k], chain.u[k + 1]);
        if (k % 2 == 0)
            acc += t;
        else
            acc -= t;
    }
    acc *= make_rat(n * n, 12);
    return to_int_exact(acc, "w_euclid");
}

}  // namespace detail

// W_n(m) for coprime n, m via the remainder chain:
//   (n^2/12) * sum_k (-1)^k w_chain_term(u_k, u_{k+1})
// m is normalized into [1, n) first; the chain then strictly decreases.
// O(log min(n,m)) exact-rational steps.
inline Int w_euclid(const Int& n, const Int& m) {
    return detail::w_euclid_with(n, m, w_chain_term);
}

// W_n(m) for arbitrary n, m: reduce to the coprime core (d, b, a) and use
// W_n(m) = d^2 W_b(a) + n^2 (d-1)(b-1)/4, with the core by w_euclid.
inline Int w_reduce(const Int& n, const Int& m) {
    if (n < 1 || m < 1) throw input_error("w_reduce: arguments must be positive");
    if (n == 1) return 0;
    Int d = gcd(n, m);
    Int b = n / d, a = m / d;
    Int core = (b == 1) ? Int(0) : w_euclid(b, a);
    Rat tail = make_rat(n * n * (d - 1) * (b - 1), 4);
    return d * d * core + to_int_exact(tail, "w_reduce");
}

namespace detail {

// Definitional sum of squared floors, kept local so w_from_s2 stays an
// independent cross-check route for w_euclid.
inline Int s2_floor_sum(const Int& n, const Int& m) {
    Int total = 0;
    for (Int k = 1; k < n; ++k) {
        Int f = (k * m) / n;
        total += f * f;
    }
    return total;
}

}  // namespace detail

// W_b(a) from a brute-force S_2(a,b):
//   W_b(a) = (b/2) S_2(a,b) + (b/12)(b-1)(2b-1)(3-a),  for coprime 0 < a < b.
inline Int w_from_s2(const Int& b, const Int& a) {
    if (a < 1 || b <= a) throw input_error("w_from_s2: need 1 <= a < b");
    if (gcd(a, b) != 1) throw input_error("w_from_s2: arguments must be coprime");
    Rat val = make_rat(b * detail::s2_floor_sum(a, b), 2);
    val += make_rat(b * (b - 1) * (2 * b - 1) * (3 - a), 12);
    return to_int_exact(val, "w_from_s2");
}

}  // namespace floorsum
