#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "floorsum/dedekind.hpp"
#include "floorsum/exact.hpp"
#include "floorsum/floor_sums.hpp"
#include "floorsum/w_function.hpp"

namespace floorsum {

// One identity of the underlying theory, checkable by exhaustive sweep.
enum class LawId {
    S1_FORMULA,
    S2_FORMULA,
    S3_FORMULA,
    PROP1_RECURRENCE,
    PROP2_DECOMPOSITION,
    W_PROP_I,
    W_PROP_II,
    W_PROP_III,
    W_PROP_IV,
    W_REDUCTION,
    W_EUCLID,
    W_FROM_S2,
    RECIP_S2,
    RECIP_W,
    RECIP_S3,
    DEDEKIND_BRIDGE,
    DEDEKIND_FAST,
    DEDEKIND_RECIPROCITY,
    DELTA_PARITY,
    PROP5_EXPANSION,
    FAULHABER_XCHECK,
};

struct LawInfo {
    LawId id;
    const char* key;   // CLI identifier
    const char* what;  // which identity this sweeps
};

inline constexpr std::array<LawInfo, 21> kLaws{{
    {LawId::S1_FORMULA, "s1-formula", "S_1(n,m) = (m-1)(n-1)/2 + (d-1)/2"},
    {LawId::S2_FORMULA, "s2-formula", "closed form for S_2(n,m) via W_b(a)"},
    {LawId::S3_FORMULA, "s3-formula", "closed form for S_3(n,m) via W_b(a)"},
    {LawId::PROP1_RECURRENCE, "prop1-recurrence",
     "binomial recurrence among S_0..S_r(b,a) has zero residual"},
    {LawId::PROP2_DECOMPOSITION, "prop2-decomposition",
     "S_r(n,m) from the coprime core via Faulhaber lift"},
    {LawId::W_PROP_I, "w-prop-i", "W_n(a,b) = W_n(a mod n, b mod n)"},
    {LawId::W_PROP_II, "w-prop-ii", "gcd(c,n)=1 implies W_n(ac,bc) = W_n(a,b)"},
    {LawId::W_PROP_III, "w-prop-iii", "ab = 1 (mod n) implies W_n(a) = W_n(b)"},
    {LawId::W_PROP_IV, "w-prop-iv", "W_n(a) + W_n(n-a) = n^2(n-1)/2 for gcd(a,n)=1"},
    {LawId::W_REDUCTION, "w-reduction", "W_n(m) = d^2 W_b(a) + n^2(d-1)(b-1)/4"},
    {LawId::W_EUCLID, "w-euclid", "remainder-chain W equals the definitional sum"},
    {LawId::W_FROM_S2, "w-from-s2", "W_b(a) = (b/2)S_2(a,b) + (b/12)(b-1)(2b-1)(3-a)"},
    {LawId::RECIP_S2, "recip-s2",
     "a S_2(a,b) + b S_2(b,a) = (1/6)(a-1)(2a-1)(b-1)(2b-1)"},
    {LawId::RECIP_W, "recip-w",
     "a^2 W_b(a) + b^2 W_a(b) = (ab/12)[(1+a^2)(1+b^2) - ab(a-3)(b-3)]"},
    {LawId::RECIP_S3, "recip-s3",
     "a(a-1)S_3(a,b) + b(b-1)S_3(b,a) = (1/4)(a-1)^2(b-1)^2[(a-1)(b-1)+ab]"},
    {LawId::DEDEKIND_BRIDGE, "dedekind-bridge", "W_a(b) = a^2(s(b,a) + (a-1)/4)"},
    {LawId::DEDEKIND_FAST, "dedekind-fast", "chain evaluation of s(b,a) equals the definition"},
    {LawId::DEDEKIND_RECIPROCITY, "dedekind-reciprocity",
     "s(b,a) + s(a,b) = -1/4 + (1/12)(a/b + 1/ab + b/a)"},
    {LawId::DELTA_PARITY, "delta-parity", "delta(b; a_1..a_n) = 0 for odd n"},
    {LawId::PROP5_EXPANSION, "prop5-expansion",
     "S_r(b,a) from generalized Dedekind sums via the trinomial expansion"},
    {LawId::FAULHABER_XCHECK, "faulhaber-xcheck",
     "direct Faulhaber summation equals the Bernoulli closed form"},
}};

inline const LawInfo& law_info(LawId id) {
    for (const auto& l : kLaws)
        if (l.id == id) return l;
    throw input_error("unknown law id");
}

inline std::optional<LawId> law_from_key(std::string_view key) {
    for (const auto& l : kLaws)
        if (key == l.key) return l.id;
    return std::nullopt;
}

struct Counterexample {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct LawReport {
    LawId law;
    std::string key;
    std::string what;
    std::string range;
    std::int64_t cases_checked = 0;
    std::int64_t counterexample_total = 0;
    std::vector<Counterexample> counterexamples;  // capped at kCounterexampleCap
    bool pass() const { return counterexample_total == 0; }
};

inline constexpr std::size_t kCounterexampleCap = 16;

namespace detail {

struct Collector {
    LawReport rep;

    explicit Collector(LawId id) {
        const LawInfo& info = law_info(id);
        rep.law = id;
        rep.key = info.key;
        rep.what = info.what;
    }

    // InputFn/ValueFn produce strings, called only on failure.
    template <class InputFn, class LhsFn, class RhsFn>
    void tally(bool ok, InputFn&& input, LhsFn&& lhs, RhsFn&& rhs) {
        ++rep.cases_checked;
        if (ok) return;
        ++rep.counterexample_total;
        if (rep.counterexamples.size() < kCounterexampleCap)
            rep.counterexamples.push_back({input(), lhs(), rhs()});
    }
};

inline std::string tup(std::initializer_list<long> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (long x : xs) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

inline std::string str(const Int& v) { return v.get_str(); }
inline std::string str(const Rat& v) { return rat_to_string(v); }
inline std::string str(long v) { return std::to_string(v); }

// W_n(m) = sum k*(mk mod n) in machine integers; valid for n^3 within int64.
inline long w_direct_i64(long n, long m) {
    long r = ((m % n) + n) % n;
    long total = 0, x = 0;
    for (long k = 1; k < n; ++k) {
        x += r;
        if (x >= n) x -= n;
        total += k * x;
    }
    return total;
}

// W table for one modulus: T[a][b] = W_n(a,b) for residues a, b in [0, n).
inline std::vector<std::vector<long>> w_table_i64(long n) {
    std::vector<std::vector<long>> row(n);  // row[a][k] = ak mod n, k in [0,n)
    for (long a = 0; a < n; ++a) {
        row[a].resize(n);
        long x = 0;
        for (long k = 0; k < n; ++k) {
            row[a][k] = x;
            x += a;
            if (x >= n) x -= n;
        }
    }
    std::vector<std::vector<long>> t(n, std::vector<long>(n, 0));
    for (long a = 0; a < n; ++a)
        for (long b = a; b < n; ++b) {
            long s = 0;
            for (long k = 1; k < n; ++k) s += row[a][k] * row[b][k];
            t[a][b] = t[b][a] = s;
        }
    return t;
}

inline long gcd_i64(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// S_r(n,m) in machine integers; caller guarantees the result fits.
inline long s_brute_i64(long r, long n, long m) {
    long total = 0;
    for (long k = 1; k < n; ++k) {
        long f = k * m / n, p = 1;
        for (long i = 0; i < r; ++i) p *= f;
        total += p;
    }
    return total;
}

}  // namespace detail

// Exhaustive sweep of one law over its natural grid up to max_param.
// r_max (0 = per-law default) bounds the exponent sweep where one applies.
inline LawReport run_law(LawId law, long max_param, long r_max = 0) {
    using namespace detail;
    if (max_param < 2) throw input_error("run_law: max_param must be at least 2");
    const long M = max_param;
    Collector c(law);
    std::ostringstream range;

    switch (law) {
        case LawId::S1_FORMULA:
        case LawId::S2_FORMULA:
        case LawId::S3_FORMULA: {
            Int r = (law == LawId::S1_FORMULA) ? 1 : (law == LawId::S2_FORMULA ? 2 : 3);
            range << "n,m in [1," << M << "]";
            for (long n = 1; n <= M; ++n)
                for (long m = 1; m <= M; ++m) {
                    Int lhs = (r == 1)   ? s1_closed(n, m)
                              : (r == 2) ? s2_closed(n, m)
                                         : s3_closed(n, m);
                    Int rhs = s_bruteforce(r, n, m);
                    c.tally(lhs == rhs, [&] { return tup({n, m}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }

        case LawId::PROP1_RECURRENCE: {
            long rmax = r_max > 0 ? r_max : 8;
            range << "coprime a,b in [1," << M << "], r in [1," << rmax << "]";
            for (long b = 1; b <= M; ++b)
                for (long a = 1; a <= M; ++a) {
                    if (gcd_i64(a, b) != 1) continue;
                    std::vector<Int> s;
                    for (long i = 0; i <= rmax; ++i) s.push_back(s_bruteforce(i, b, a));
                    for (long r = 1; r <= rmax; ++r) {
                        Int res = recurrence_residual(
                            r, b, a, std::span<const Int>(s.data(), r + 1));
                        c.tally(res == 0, [&] { return tup({r, b, a}); },
                                [&] { return str(res); }, [&] { return std::string("0"); });
                    }
                }
            break;
        }

        case LawId::PROP2_DECOMPOSITION: {
            long rmax = r_max > 0 ? r_max : 5;
            range << "n,m in [1," << M << "], r in [1," << rmax << "]";
            for (long n = 1; n <= M; ++n)
                for (long m = 1; m <= M; ++m) {
                    auto dec = decompose(n, m);
                    std::vector<Int> core;
                    for (long i = 0; i <= rmax; ++i)
                        core.push_back(s_bruteforce(i, dec.b, dec.a));
                    for (long r = 1; r <= rmax; ++r) {
                        Int lhs = lift_decomposition(
                            r, n, m, std::span<const Int>(core.data(), r + 1));
                        Int rhs = s_bruteforce(r, n, m);
                        c.tally(lhs == rhs, [&] { return tup({r, n, m}); },
                                [&] { return str(lhs); }, [&] { return str(rhs); });
                    }
                }
            break;
        }

        case LawId::W_PROP_I: {
            range << "n in [1," << M << "], a,b in [1,2n]";
            for (long n = 1; n <= M; ++n) {
                auto t = w_table_i64(n);
                for (long a = 1; a <= 2 * n; ++a)
                    for (long b = 1; b <= 2 * n; ++b) {
                        long lhs = 0;
                        for (long k = 1; k < n; ++k)
                            lhs += ((a * k) % n) * ((b * k) % n);
                        long rhs = t[a % n][b % n];
                        c.tally(lhs == rhs,
                                [&] { return tup({n, a, b}); },
                                [&] { return str(lhs); }, [&] { return str(rhs); });
                    }
            }
            break;
        }

        case LawId::W_PROP_II: {
            range << "n in [2," << M << "], a,b in [1,n), c in [1,n) coprime with n";
            for (long n = 2; n <= M; ++n) {
                auto t = w_table_i64(n);
                for (long cc = 1; cc < n; ++cc) {
                    if (gcd_i64(cc, n) != 1) continue;
                    for (long a = 1; a < n; ++a)
                        for (long b = 1; b < n; ++b) {
                            long lhs = t[a * cc % n][b * cc % n];
                            long rhs = t[a][b];
                            c.tally(lhs == rhs,
                                    [&] { return tup({n, a, b, cc}); },
                                    [&] { return str(lhs); }, [&] { return str(rhs); });
                        }
                }
            }
            break;
        }

        case LawId::W_PROP_III: {
            range << "n in [2," << M << "], a in [1,n) with gcd(a,n)=1, b = a^-1 mod n";
            for (long n = 2; n <= M; ++n) {
                auto t = w_table_i64(n);
                for (long a = 1; a < n; ++a) {
                    if (gcd_i64(a, n) != 1) continue;
                    long inv = 0;
                    for (long b = 1; b < n; ++b)
                        if (a * b % n == 1) {
                            inv = b;
                            break;
                        }
                    long lhs = t[a][1], rhs = t[inv][1];
                    c.tally(lhs == rhs, [&] { return tup({n, a, inv}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            }
            break;
        }

        case LawId::W_PROP_IV: {
            range << "n in [2," << M << "], a in [1,n) with gcd(a,n)=1";
            for (long n = 2; n <= M; ++n) {
                auto t = w_table_i64(n);
                for (long a = 1; a < n; ++a) {
                    if (gcd_i64(a, n) != 1) continue;
                    long lhs = t[a][1 % n] + t[n - a][1 % n];
                    long rhs = n * n * (n - 1) / 2;
                    c.tally(lhs == rhs, [&] { return tup({n, a}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            }
            break;
        }

        case LawId::W_REDUCTION: {
            range << "n,m in [1," << M << "]";
            for (long n = 1; n <= M; ++n)
                for (long m = 1; m <= M; ++m) {
                    Int lhs = w_reduce(n, m);
                    long rhs = n == 1 ? 0 : w_direct_i64(n, m);
                    c.tally(lhs == rhs, [&] { return tup({n, m}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }

        case LawId::W_EUCLID: {
            range << "coprime n in [2," << M << "], m in [1,n)";
            for (long n = 2; n <= M; ++n)
                for (long m = 1; m < n; ++m) {
                    if (gcd_i64(n, m) != 1) continue;
                    Int lhs = w_euclid(n, m);
                    long rhs = w_direct_i64(n, m);
                    c.tally(lhs == rhs, [&] { return tup({n, m}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }

        case LawId::W_FROM_S2: {
            range << "coprime a < b <= " << M;
            for (long b = 2; b <= M; ++b)
                for (long a = 1; a < b; ++a) {
                    if (gcd_i64(a, b) != 1) continue;
                    Int lhs = w_from_s2(b, a);
                    long rhs = w_direct_i64(b, a);
                    c.tally(lhs == rhs, [&] { return tup({b, a}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }

        case LawId::RECIP_S2: {
            range << "coprime a,b in [1," << M << "]";
            for (long a = 1; a <= M; ++a)
                for (long b = 1; b <= M; ++b) {
                    if (gcd_i64(a, b) != 1) continue;
                    long lhs = a * s_brute_i64(2, a, b) + b * s_brute_i64(2, b, a);
                    long num = (a - 1) * (2 * a - 1) * (b - 1) * (2 * b - 1);
                    bool ok = num % 6 == 0 && lhs == num / 6;
                    c.tally(ok, [&] { return tup({a, b}); },
                            [&] { return str(lhs); },
                            [&] { return str(num) + "/6"; });
                }
            break;
        }

        case LawId::RECIP_W: {
            range << "coprime a,b in [1," << M << "]";
            for (long a = 1; a <= M; ++a)
                for (long b = 1; b <= M; ++b) {
                    if (gcd_i64(a, b) != 1) continue;
                    long wba = b == 1 ? 0 : w_direct_i64(b, a);
                    long wab = a == 1 ? 0 : w_direct_i64(a, b);
                    long lhs = a * a * wba + b * b * wab;
                    long num =
                        a * b * ((1 + a * a) * (1 + b * b) - a * b * (a - 3) * (b - 3));
                    bool ok = num % 12 == 0 && lhs == num / 12;
                    c.tally(ok, [&] { return tup({a, b}); },
                            [&] { return str(lhs); },
                            [&] { return str(num) + "/12"; });
                }
            break;
        }

        case LawId::RECIP_S3: {
            range << "coprime a,b in [1," << M << "]";
            for (long a = 1; a <= M; ++a)
                for (long b = 1; b <= M; ++b) {
                    if (gcd_i64(a, b) != 1) continue;
                    long lhs = a * (a - 1) * s_brute_i64(3, a, b) +
                                    b * (b - 1) * s_brute_i64(3, b, a);
                    long num = (a - 1) * (a - 1) * (b - 1) * (b - 1) *
                                    ((a - 1) * (b - 1) + a * b);
                    bool ok = num % 4 == 0 && lhs == num / 4;
                    c.tally(ok, [&] { return tup({a, b}); },
                            [&] { return str(lhs); },
                            [&] { return str(num) + "/4"; });
                }
            break;
        }

        case LawId::DEDEKIND_BRIDGE: {
            range << "coprime a,b in [1," << M << "]";
            for (long a = 1; a <= M; ++a)
                for (long b = 1; b <= M; ++b) {
                    if (gcd_i64(a, b) != 1) continue;
                    Rat lhs(a == 1 ? 0 : w_direct_i64(a, b));
                    Rat rhs = Rat(Int(a) * a) * (dedekind_direct(b, a) + make_rat(a - 1, 4));
                    c.tally(lhs == rhs, [&] { return tup({a, b}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }

        case LawId::DEDEKIND_FAST: {
            range << "coprime a,b in [1," << M << "]";
            for (long a = 1; a <= M; ++a)
                for (long b = 1; b <= M; ++b) {
                    if (gcd_i64(a, b) != 1) continue;
                    Rat lhs = dedekind_fast(b, a);
                    Rat rhs = dedekind_direct(b, a);
                    c.tally(lhs == rhs, [&] { return tup({b, a}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }

        case LawId::DEDEKIND_RECIPROCITY: {
            range << "coprime a,b in [1," << M << "]";
            for (long a = 1; a <= M; ++a)
                for (long b = 1; b <= M; ++b) {
                    if (gcd_i64(a, b) != 1) continue;
                    Rat lhs = dedekind_direct(b, a) + dedekind_direct(a, b);
                    Rat rhs = dedekind_reciprocity_rhs(a, b);
                    c.tally(lhs == rhs, [&] { return tup({a, b}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }

        case LawId::DELTA_PARITY: {
            range << "b in [1," << M << "], odd argument counts 1, 3, 5";
            for (long b = 1; b <= M; ++b) {
                std::vector<Int> units;
                for (long a = 1; a <= b; ++a)
                    if (gcd_i64(a, b) == 1) units.push_back(a);
                auto check = [&](const std::vector<Int>& args) {
                    Rat v = delta_direct(b, args);
                    c.tally(v == 0,
                            [&] {
                                std::string s = "(b=" + std::to_string(b) + ";";
                                for (const Int& x : args) s += x.get_str() + ",";
                                s.back() = ')';
                                return s;
                            },
                            [&] { return str(v); }, [&] { return std::string("0"); });
                };
                for (const Int& a1 : units) check({a1});
                std::size_t lim3 = std::min<std::size_t>(units.size(), 6);
                for (std::size_t i = 0; i < lim3; ++i)
                    for (std::size_t j = i; j < lim3; ++j)
                        for (std::size_t k = j; k < lim3; ++k)
                            check({units[i], units[j], units[k]});
                std::size_t lim5 = std::min<std::size_t>(units.size(), 4);
                for (std::size_t i = 0; i < lim5; ++i)
                    for (std::size_t j = i; j < lim5; ++j)
                        for (std::size_t k = j; k < lim5; ++k)
                            for (std::size_t l = k; l < lim5; ++l)
                                for (std::size_t p = l; p < lim5; ++p)
                                    check({units[i], units[j], units[k], units[l],
                                           units[p]});
            }
            break;
        }

        case LawId::PROP5_EXPANSION: {
            long rmax = r_max > 0 ? r_max : 6;
            range << "coprime a,b in [1," << M << "], r in [1," << rmax << "]";
            for (long b = 1; b <= M; ++b)
                for (long a = 1; a <= M; ++a) {
                    if (gcd_i64(a, b) != 1) continue;
                    for (long r = 1; r <= rmax; ++r) {
                        Int lhs = s_r_via_delta(r, b, a);
                        Int rhs = s_bruteforce(r, b, a);
                        c.tally(lhs == rhs, [&] { return tup({r, b, a}); },
                                [&] { return str(lhs); }, [&] { return str(rhs); });
                    }
                }
            break;
        }

        case LawId::FAULHABER_XCHECK: {
            long rmax = r_max > 0 ? r_max : 10;
            range << "r in [0," << rmax << "], n in [0," << M << "]";
            for (long r = 0; r <= rmax; ++r)
                for (long n = 0; n <= M; ++n) {
                    Int lhs = faulhaber_direct(r, n);
                    Int rhs = faulhaber_bernoulli(r, n);
                    c.tally(lhs == rhs, [&] { return tup({r, n}); },
                            [&] { return str(lhs); }, [&] { return str(rhs); });
                }
            break;
        }
    }

    c.rep.range = range.str();
    return c.rep;
}

// Every law at its default grid, bounded by max_param.
inline std::vector<LawReport> run_all(long max_param, long r_max = 0) {
    std::vector<LawReport> out;
    out.reserve(kLaws.size());
    for (const auto& l : kLaws) out.push_back(run_law(l.id, max_param, r_max));
    return out;
}

}  // namespace floorsum
