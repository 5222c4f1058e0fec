// floorsum-lab: compute floor-power sums, W, and Dedekind sums by any
// method, sweep-verify the identities they satisfy, and benchmark the
// remainder-chain evaluation against the definitional sums.
//
// Output is JSON lines on stdout. Exit codes: 0 success, 1 identity
// violation found, 2 usage or precondition error (nothing on stdout).

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "floorsum/floorsum.hpp"

namespace fs = floorsum;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

long long ns_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
}

// Flag values are unbounded decimal strings.
fs::Int parse_int(const std::string& s, const char* flag) {
    if (s.empty()) throw fs::input_error(std::string("missing value for ") + flag);
    try {
        return fs::Int(s);
    } catch (const std::invalid_argument&) {
        throw fs::input_error(std::string("invalid integer for ") + flag + ": " + s);
    }
}

std::vector<fs::Int> parse_int_list(const std::string& s) {
    std::vector<fs::Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_int(item, "--args"));
    return out;
}

json law_report_json(const fs::LawReport& rep) {
    json cex = json::array();
    for (const auto& c : rep.counterexamples)
        cex.push_back({{"input", c.input}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    return json{{"law", rep.key},
                {"what", rep.what},
                {"range", rep.range},
                {"cases_checked", rep.cases_checked},
                {"counterexample_total", rep.counterexample_total},
                {"counterexamples", cex},
                {"status", rep.pass() ? "pass" : "fail"}};
}

void emit(const json& query, const std::string& value, const std::string& method,
          long long elapsed_ns) {
    json rec{{"query", query}, {"value", value}, {"method", method},
             {"elapsed_ns", elapsed_ns}};
    std::cout << rec.dump() << "\n";
}

constexpr long kDirectFeasibleModulus = 10'000'000;  // direct sums beyond this are skipped

struct BenchPair {
    fs::Int lo, hi;  // consecutive Fibonacci numbers, lo < hi
};

// Consecutive Fibonacci pairs are the worst case for the remainder chain.
// Returns the first pair whose larger element has at least `digits` decimal
// digits, advanced by `skip` further steps.
BenchPair fib_pair(long digits, long skip) {
    fs::Int lo = 1, hi = 2;
    fs::Int bound = fs::power(10, digits - 1);
    while (hi < bound) {
        fs::Int next = lo + hi;
        lo = hi;
        hi = next;
    }
    for (long i = 0; i < skip; ++i) {
        fs::Int next = lo + hi;
        lo = hi;
        hi = next;
    }
    return {lo, hi};
}

int run_verify(const std::string& law_key, long max_param, long r_max) {
    std::vector<fs::LawReport> reports;
    if (law_key == "all") {
        reports = fs::run_all(max_param, r_max);
    } else {
        auto id = fs::law_from_key(law_key);
        if (!id) throw fs::input_error("unknown law id: " + law_key);
        reports.push_back(fs::run_law(*id, max_param, r_max));
    }
    bool all_pass = true;
    for (const auto& rep : reports) {
        std::cout << law_report_json(rep).dump() << "\n";
        all_pass = all_pass && rep.pass();
    }
    return all_pass ? 0 : 1;
}

int run_bench(const std::string& target, long scale, long trials) {
    bool mismatch = false;
    for (long trial = 0; trial < trials; ++trial) {
        BenchPair p = fib_pair(scale, trial);
        // modulus is the larger element: s(b,a) with a = hi, W_n(m) with n = hi
        const fs::Int& modulus = p.hi;
        const fs::Int& other = p.lo;
        json query{{"command", "bench"},  {"target", target},
                   {"scale", scale},      {"trial", trial},
                   {"modulus", modulus.get_str()}, {"other", other.get_str()}};
        std::size_t chain_len = fs::euclid_chain(modulus, other).length();

        auto t0 = Clock::now();
        std::string fast_value = target == "dedekind"
                                     ? fs::rat_to_string(fs::dedekind_fast(other, modulus))
                                     : fs::w_reduce(modulus, other).get_str();
        long long fast_ns = ns_since(t0);
        json fast_rec{{"query", query},           {"value", fast_value},
                      {"method", "fast"},         {"elapsed_ns", fast_ns},
                      {"chain_length", chain_len}};
        std::cout << fast_rec.dump() << "\n";

        if (modulus <= kDirectFeasibleModulus) {
            t0 = Clock::now();
            std::string direct_value =
                target == "dedekind"
                    ? fs::rat_to_string(fs::dedekind_direct(other, modulus))
                    : fs::w_direct(modulus, other).get_str();
            long long direct_ns = ns_since(t0);
            bool equal = direct_value == fast_value;
            mismatch = mismatch || !equal;
            json direct_rec{{"query", query},     {"value", direct_value},
                            {"method", "direct"}, {"elapsed_ns", direct_ns},
                            {"agrees_with_fast", equal}};
            std::cout << direct_rec.dump() << "\n";
        } else {
            json skip_rec{{"query", query},
                          {"method", "direct"},
                          {"status", "skipped: infeasible"}};
            std::cout << skip_rec.dump() << "\n";
        }
    }
    return mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floor-power sums, W, and Dedekind sums in exact arithmetic"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate one quantity");
    compute->require_subcommand(1);
    std::string f_r, f_n, f_m, f_a, f_b = "1", f_args, f_method;

    auto* cs = compute->add_subcommand("s", "S_r(n,m), sum of r-th powers of floor(km/n)");
    cs->add_option("--r", f_r)->required();
    cs->add_option("--n", f_n)->required();
    cs->add_option("--m", f_m)->required();
    cs->add_option("--method", f_method, "bruteforce|closed|recurrence|delta")
        ->default_val("closed");

    auto* cw = compute->add_subcommand("w", "W_n(a,b) = sum (ak mod n)(bk mod n)");
    cw->add_option("--n", f_n)->required();
    cw->add_option("--a", f_a)->required();
    cw->add_option("--b", f_b, "second argument, default 1");
    cw->add_option("--method", f_method, "direct|fast (fast requires b = 1)")
        ->default_val("fast");

    auto* cd = compute->add_subcommand("dedekind", "classical Dedekind sum s(b,a)");
    cd->add_option("--b", f_b)->required();
    cd->add_option("--a", f_a)->required();
    cd->add_option("--method", f_method, "direct|fast")->default_val("fast");

    auto* cdelta = compute->add_subcommand("delta", "generalized Dedekind sum delta(b;a_1..a_n)");
    cdelta->add_option("--b", f_b)->required();
    cdelta->add_option("--args", f_args, "comma-separated a_i, may be empty");

    auto* cf = compute->add_subcommand("faulhaber", "F_r(n) = sum_{i=0}^n i^r");
    cf->add_option("--r", f_r)->required();
    cf->add_option("--n", f_n)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "sweep-check identities");
    std::string v_law;
    long v_max = 0, v_rmax = 0;
    verify->add_option("--law", v_law, "law id or 'all'")->required();
    verify->add_option("--max", v_max, "sweep bound, >= 2")->required();
    verify->add_option("--rmax", v_rmax, "exponent bound where applicable");

    // bench
    auto* bench = app.add_subcommand("bench", "fast vs direct on worst-case pairs");
    std::string b_target;
    long b_scale = 0, b_trials = 1;
    bench->add_option("--target", b_target, "dedekind|w")->required();
    bench->add_option("--scale", b_scale, "decimal digits of the modulus")->required();
    bench->add_option("--trials", b_trials, "number of consecutive pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // route CLI11's own output: errors to stderr, nothing on stdout
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            std::cout << app.help();
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            json query;
            std::string value, method = f_method;
            auto t0 = Clock::now();
            if (cs->parsed()) {
                fs::Int r = parse_int(f_r, "--r"), n = parse_int(f_n, "--n"),
                        m = parse_int(f_m, "--m");
                fs::Method mm;
                if (f_method == "bruteforce")
                    mm = fs::Method::bruteforce;
                else if (f_method == "closed")
                    mm = fs::Method::closed_form;
                else if (f_method == "recurrence")
                    mm = fs::Method::recurrence;
                else if (f_method == "delta")
                    mm = fs::Method::delta_expansion;
                else
                    throw fs::input_error("unknown method: " + f_method);
                t0 = Clock::now();
                value = fs::s_general(r, n, m, mm).value.get_str();
                query = {{"command", "s"}, {"r", f_r}, {"n", f_n}, {"m", f_m}};
            } else if (cw->parsed()) {
                fs::Int n = parse_int(f_n, "--n"), a = parse_int(f_a, "--a"),
                        b = parse_int(f_b, "--b");
                t0 = Clock::now();
                if (f_method == "direct") {
                    value = fs::w_direct(n, a, b).get_str();
                } else if (f_method == "fast") {
                    if (b != 1)
                        throw fs::input_error("fast W evaluation requires b = 1");
                    value = fs::w_reduce(n, a).get_str();
                } else {
                    throw fs::input_error("unknown method: " + f_method);
                }
                query = {{"command", "w"}, {"n", f_n}, {"a", f_a}, {"b", f_b}};
            } else if (cd->parsed()) {
                fs::Int b = parse_int(f_b, "--b"), a = parse_int(f_a, "--a");
                t0 = Clock::now();
                if (f_method == "direct")
                    value = fs::rat_to_string(fs::dedekind_direct(b, a));
                else if (f_method == "fast")
                    value = fs::rat_to_string(fs::dedekind_fast(b, a));
                else
                    throw fs::input_error("unknown method: " + f_method);
                query = {{"command", "dedekind"}, {"b", f_b}, {"a", f_a}};
            } else if (cdelta->parsed()) {
                fs::Int b = parse_int(f_b, "--b");
                std::vector<fs::Int> args = parse_int_list(f_args);
                method = "direct";
                t0 = Clock::now();
                value = fs::rat_to_string(fs::delta_direct(b, args));
                query = {{"command", "delta"}, {"b", f_b}, {"args", f_args}};
            } else {  // faulhaber
                fs::Int r = parse_int(f_r, "--r"), n = parse_int(f_n, "--n");
                method = "direct";
                t0 = Clock::now();
                value = fs::faulhaber(r, n).get_str();
                query = {{"command", "faulhaber"}, {"r", f_r}, {"n", f_n}};
            }
            emit(query, value, method, ns_since(t0));
            return 0;
        }
        if (verify->parsed()) return run_verify(v_law, v_max, v_rmax);
        if (bench->parsed()) {
            if (b_target != "dedekind" && b_target != "w")
                throw fs::input_error("bench target must be dedekind or w");
            if (b_scale < 1 || b_trials < 1)
                throw fs::input_error("bench needs --scale >= 1 and --trials >= 1");
            return run_bench(b_target, b_scale, b_trials);
        }
    } catch (const fs::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fs::internal_error& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
