#pragma once

#include <map>
#include <utility>
#include <vector>

#include "floorsum/exact.hpp"
#include "floorsum/w_function.hpp"

namespace floorsum {

// Classical Dedekind sum s(b,a) = sum_{k=1}^{a} ((kb/a))((k/a)), modulus a.
// For 0 < k < a with gcd(a,b) = 1 neither factor hits an integer, so each
// summand is (2(kb mod a) - a)(2k - a)/(4a^2); the k = a summand is 0.
inline Rat dedekind_direct(const Int& b, const Int& a) {
    if (a < 1 || b < 1) throw input_error("dedekind_direct: arguments must be positive");
    if (gcd(a, b) != 1) throw input_error("dedekind_direct: arguments must be coprime");
    Int rb = emod(b, a);
    Int total = 0, x = 0;
    for (Int k = 1; k < a; ++k) {
        x += rb;
        if (x >= a) x -= a;
        total += (2 * x - a) * (2 * k - a);
    }
    return make_rat(total, 4 * a * a);
}

// s(b,a) = W_a(b)/a^2 - (a-1)/4, with W by the remainder chain.
inline Rat dedekind_fast(const Int& b, const Int& a) {
    if (a < 1 || b < 1) throw input_error("dedekind_fast: arguments must be positive");
    if (gcd(a, b) != 1) throw input_error("dedekind_fast: arguments must be coprime");
    Rat s = make_rat(w_euclid(a, b), a * a);
    s -= make_rat(a - 1, 4);
    return s;
}

// Right-hand side of the reciprocity law:
// s(b,a) + s(a,b) = -1/4 + (1/12)(a/b + 1/ab + b/a)
inline Rat dedekind_reciprocity_rhs(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw input_error("dedekind_reciprocity_rhs: arguments must be positive");
    Rat rhs = make_rat(-1, 4);
    rhs += make_rat(a, 12 * b);
    rhs += make_rat(1, 12 * a * b);
    rhs += make_rat(b, 12 * a);
    return rhs;
}

// Zagier's generalized Dedekind sum
//   delta(b; a_1..a_n) = 2^n b^{n-1} sum_{k=1}^{b-1} prod_i ((k a_i / b)).
// Every a_i must be coprime with b, so ((k a_i / b)) = (2(k a_i mod b) - b)/2b
// for 0 < k < b and the whole sum collapses to an integer sum over b.
inline Rat delta_direct(const Int& b, const std::vector<Int>& args) {
    if (b < 1) throw input_error("delta_direct: modulus must be positive");
    for (const Int& ai : args) {
        if (ai < 1) throw input_error("delta_direct: arguments must be positive");
        if (gcd(ai, b) != 1)
            throw input_error("delta_direct: arguments must be coprime with modulus");
    }
    Int total = 0;
    for (Int k = 1; k < b; ++k) {
        Int prod = 1;
        for (const Int& ai : args) prod *= 2 * emod(k * ai, b) - b;
        total += prod;
    }
    return make_rat(total, b);
}

// S_r(b,a) for coprime a, b via the trinomial expansion over generalized
// Dedekind sums:
//   S_r(b,a) = (b/2^r) sum_{u+v+w=r} C(r;u,v,w) (a/b)^u (-1/b)^v (a-1)^w
//                                    delta(b; 1 x u, a x v)
// Terms with odd u+v are skipped (delta vanishes for an odd argument count).
// delta values are memoized per (u,v) within one call.
inline Int s_r_via_delta(const Int& r, const Int& b, const Int& a) {
    if (r < 1) throw input_error("s_r_via_delta: r must be positive");
    if (a < 1 || b < 1) throw input_error("s_r_via_delta: arguments must be positive");
    if (gcd(a, b) != 1) throw input_error("s_r_via_delta: arguments must be coprime");
    std::map<std::pair<unsigned long, unsigned long>, Rat> memo;
    auto delta_uv = [&](unsigned long u, unsigned long v) -> const Rat& {
        auto it = memo.find({u, v});
        if (it == memo.end()) {
            std::vector<Int> args(u, Int(1));
            args.insert(args.end(), v, a);
            it = memo.emplace(std::make_pair(u, v), delta_direct(b, args)).first;
        }
        return it->second;
    };
    unsigned long ru = r.get_ui();
    Rat total(0);
    for (unsigned long u = 0; u <= ru; ++u) {
        for (unsigned long v = 0; u + v <= ru; ++v) {
            if ((u + v) % 2 != 0) continue;
            unsigned long w = ru - u - v;
            Rat term(multinomial(r, u, v, w));
            term *= make_rat(power(a, u), power(b, u));
            term *= make_rat((v % 2 == 0) ? Int(1) : Int(-1), power(b, v));
            term *= power(a - 1, w);
            term *= delta_uv(u, v);
            total += term;
        }
    }
    total *= make_rat(b, power(2, r));
    return to_int_exact(total, "s_r_via_delta");
}

}  // namespace floorsum
