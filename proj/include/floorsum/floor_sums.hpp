#pragma once

#include <span>
#include <vector>

#include "floorsum/dedekind.hpp"
#include "floorsum/exact.hpp"
#include "floorsum/w_function.hpp"

namespace floorsum {

enum class Method { bruteforce, closed_form, recurrence, delta_expansion };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::bruteforce: return "bruteforce";
        case Method::closed_form: return "closed_form";
        case Method::recurrence: return "recurrence";
        case Method::delta_expansion: return "delta_expansion";
    }
    return "?";
}

// (n, m) = (d*b, d*a) with d = gcd(n, m) and gcd(a, b) = 1.
struct CoprimeDecomposition {
    Int n, m, d, b, a;
};

struct SumResult {
    Int value;
    Method method;
    Int r, n, m;
};

inline CoprimeDecomposition decompose(const Int& n, const Int& m) {
    if (n < 1 || m < 1) throw input_error("decompose: arguments must be positive");
    Int d = gcd(n, m);
    return {n, m, d, n / d, m / d};
}

// B_0 .. B_rmax with the B_1 = +1/2 convention.
inline std::vector<Rat> bernoulli_numbers(unsigned long rmax) {
    std::vector<Rat> bern;
    bern.reserve(rmax + 1);
    bern.emplace_back(1);
    for (unsigned long m = 1; m <= rmax; ++m) {
        Rat s(1);
        for (unsigned long k = 0; k < m; ++k)
            s -= binomial(m, k) * bern[k] / Rat(Int(m - k + 1));
        bern.push_back(s);
    }
    return bern;
}

// F_r(n) = sum_{i=0}^{n} i^r by direct summation, 0^0 = 1.
inline Int faulhaber_direct(const Int& r, const Int& n) {
    if (r < 0 || n < 0) throw input_error("faulhaber: arguments must be nonnegative");
    Int total = 0;
    for (Int i = 0; i <= n; ++i) total += power(i, r);
    return total;
}

// F_r(n) by the exact Bernoulli closed form
//   sum_{i=1}^{n} i^r = (1/(r+1)) sum_j C(r+1,j) B_j n^{r+1-j}
// plus the i = 0 term (1 when r = 0).
inline Int faulhaber_bernoulli(const Int& r, const Int& n) {
    if (r < 0 || n < 0) throw input_error("faulhaber: arguments must be nonnegative");
    unsigned long ru = r.get_ui();
    std::vector<Rat> bern = bernoulli_numbers(ru);
    Rat total(0);
    for (unsigned long j = 0; j <= ru; ++j)
        total += binomial(r + 1, j) * bern[j] * power(n, r + 1 - j);
    total /= Rat(r + 1);
    if (r == 0) total += 1;
    return to_int_exact(total, "faulhaber_bernoulli");
}

inline constexpr long kFaulhaberDirectCutoff = 2048;

inline Int faulhaber(const Int& r, const Int& n) {
    if (r < 0 || n < 0) throw input_error("faulhaber: arguments must be nonnegative");
    return n < kFaulhaberDirectCutoff ? faulhaber_direct(r, n) : faulhaber_bernoulli(r, n);
}

// S_r(n,m) = sum_{k=1}^{n-1} floor(km/n)^r, term by term. The oracle for
// every other evaluation route.
inline Int s_bruteforce(const Int& r, const Int& n, const Int& m) {
    if (r < 0) throw input_error("s_bruteforce: r must be nonnegative");
    if (n < 1 || m < 1) throw input_error("s_bruteforce: n, m must be positive");
    Int total = 0;
    for (Int k = 1; k < n; ++k) total += power((k * m) / n, r);
    return total;
}

// S_0(b,a) = b - 1 for coprime a, b.
inline Int s0_closed(const Int& b, const Int& a) {
    if (a < 1 || b < 1) throw input_error("s0_closed: arguments must be positive");
    if (gcd(a, b) != 1) throw input_error("s0_closed: arguments must be coprime");
    return b - 1;
}

// S_1(n,m) = (m-1)(n-1)/2 + (d-1)/2.
inline Int s1_closed(const Int& n, const Int& m) {
    if (n < 1 || m < 1) throw input_error("s1_closed: arguments must be positive");
    Int d = gcd(n, m);
    return to_int_exact(make_rat((m - 1) * (n - 1) + (d - 1), 2), "s1_closed");
}

// S_2(n,m) = (d/6b)[(b-1)(2b-1) + a^2(n-1)(2n-1)] - (m/2)(d-1)(b-1)
//            - (2m/b^2) W_b(a),  with W by the remainder chain.
inline Int s2_closed(const Int& n, const Int& m) {
    auto [n_, m_, d, b, a] = decompose(n, m);
    Int w = (b == 1) ? Int(0) : w_euclid(b, a);
    Rat val = make_rat(d * ((b - 1) * (2 * b - 1) + a * a * (n - 1) * (2 * n - 1)), 6 * b);
    val -= make_rat(m * (d - 1) * (b - 1), 2);
    val -= make_rat(2 * m * w, b * b);
    return to_int_exact(val, "s2_closed");
}

// S_3(n,m), four terms ending in -(3/b^2) m(m-1) W_b(a).
inline Int s3_closed(const Int& n, const Int& m) {
    auto [n_, m_, d, b, a] = decompose(n, m);
    Int w = (b == 1) ? Int(0) : w_euclid(b, a);
    Rat val = make_rat((d - 1) * a * m * ((d - 1) * b * m + (2 * d - 1) * (a - 1) * (b - 1)), 4);
    val += make_rat(d * (1 + a * a) * (b - 1) * ((d - 1) * a * (2 * b - 1) + (b - 1) * (a - 1)),
                    4 * b);
    val += make_rat(m * (b - 1) * (a - 1), 2);
    val -= make_rat(3 * m * (m - 1) * w, b * b);
    return to_int_exact(val, "s3_closed");
}

// Residual of the binomial recurrence between S_r(b,a) and S_0..S_{r-1}(b,a):
//   S_r + sum_{i=0}^{r} (-1)^{i+1} C(r,i) (a-1)^{r-i} S_i = 0
// s[i] must hold S_i(b,a). Returns the left-hand side (0 when the inputs are
// consistent).
inline Int recurrence_residual(const Int& r, const Int& b, const Int& a,
                               std::span<const Int> s) {
    if (r < 1) throw input_error("recurrence_residual: r must be positive");
    if (a < 1 || b < 1) throw input_error("recurrence_residual: a, b must be positive");
    if (gcd(a, b) != 1) throw input_error("recurrence_residual: a, b must be coprime");
    if (s.size() != static_cast<std::size_t>(r.get_ui()) + 1)
        throw input_error("recurrence_residual: need S_0..S_r, wrong sequence length");
    Int residual = s[s.size() - 1];
    for (Int i = 0; i <= r; ++i) {
        Int term = binomial(r, i) * power(a - 1, r - i) * s[i.get_ui()];
        if ((i.get_ui() + 1) % 2 == 0)
            residual += term;
        else
            residual -= term;
    }
    return residual;
}

// Lift S_r from the coprime core to (n, m):
//   S_r(n,m) = a^r F_r(d-1) + sum_{k=0}^{r} C(r,k) a^k F_k(d-1) S_{r-k}(b,a)
inline Int lift_decomposition(const Int& r, const Int& n, const Int& m,
                              std::span<const Int> s_core) {
    if (r < 1) throw input_error("lift_decomposition: r must be positive");
    auto [n_, m_, d, b, a] = decompose(n, m);
    if (s_core.size() != static_cast<std::size_t>(r.get_ui()) + 1)
        throw input_error("lift_decomposition: need core S_0..S_r, wrong sequence length");
    Int total = power(a, r) * faulhaber(r, d - 1);
    for (Int k = 0; k <= r; ++k)
        total += binomial(r, k) * power(a, k) * faulhaber(k, d - 1) *
                 s_core[Int(r - k).get_ui()];
    return total;
}

namespace detail {

// S_i(b,a) for a coprime pair, for use by the recurrence route: closed forms
// for i <= 3, the delta expansion above, odd i recursively by the recurrence
// itself.
inline Int s_core_value(const Int& i, const Int& b, const Int& a);

inline Int s_core_by_recurrence(const Int& r, const Int& b, const Int& a) {
    // odd r: the S_r coefficient in the recurrence is 2, so
    // S_r = (1/2) sum_{i=0}^{r-1} (-1)^i C(r,i) (a-1)^{r-i} S_i
    Rat total(0);
    for (Int i = 0; i < r; ++i) {
        Int term = binomial(r, i) * power(a - 1, r - i) * s_core_value(i, b, a);
        if (i.get_ui() % 2 == 0)
            total += term;
        else
            total -= term;
    }
    total /= 2;
    return to_int_exact(total, "recurrence");
}

inline Int s_core_value(const Int& i, const Int& b, const Int& a) {
    if (i == 0) return b - 1;
    if (i == 1) return s1_closed(b, a);
    if (i == 2) return s2_closed(b, a);
    if (i == 3) return s3_closed(b, a);
    if (i % 2 == 1) return s_core_by_recurrence(i, b, a);
    return s_r_via_delta(i, b, a);
}

}  // namespace detail

// Evaluate S_r(n,m) by the selected route.
inline SumResult s_general(const Int& r, const Int& n, const Int& m, Method method) {
    if (r < 0) throw input_error("s_general: r must be nonnegative");
    if (n < 1 || m < 1) throw input_error("s_general: n, m must be positive");
    SumResult res{Int(0), method, r, n, m};
    switch (method) {
        case Method::bruteforce:
            res.value = s_bruteforce(r, n, m);
            return res;
        case Method::closed_form:
            if (r == 0)
                res.value = n - 1;
            else if (r == 1)
                res.value = s1_closed(n, m);
            else if (r == 2)
                res.value = s2_closed(n, m);
            else if (r == 3)
                res.value = s3_closed(n, m);
            else
                throw input_error("s_general: no closed form for r > 3");
            return res;
        case Method::delta_expansion: {
            if (r == 0) {
                res.value = n - 1;
                return res;
            }
            auto [n_, m_, d, b, a] = decompose(n, m);
            if (d == 1) {
                res.value = s_r_via_delta(r, b, a);
                return res;
            }
            std::vector<Int> core;
            for (Int i = 0; i <= r; ++i)
                core.push_back(i == 0 ? Int(b - 1) : s_r_via_delta(i, b, a));
            res.value = lift_decomposition(r, n, m, core);
            return res;
        }
        case Method::recurrence: {
            if (r % 2 == 0)
                throw input_error(
                    "s_general: the recurrence determines S_r only for odd r");
            auto [n_, m_, d, b, a] = decompose(n, m);
            Int core_r = detail::s_core_by_recurrence(r, b, a);
            if (d == 1) {
                res.value = core_r;
                return res;
            }
            std::vector<Int> core;
            for (Int i = 0; i < r; ++i) core.push_back(detail::s_core_value(i, b, a));
            core.push_back(core_r);
            res.value = lift_decomposition(r, n, m, core);
            return res;
        }
    }
    throw input_error("s_general: unknown method");
}

}  // namespace floorsum
