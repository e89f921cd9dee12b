// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hodgepsh/diamond.hpp"
#include "hodgepsh/parallel.hpp"
#include "hodgepsh/psh_verify.hpp"
#include "hodgepsh/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace hodgepsh;

namespace {

constexpr int kH = 6;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass{true};
    std::ostringstream detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SuiteOptions options(int trials) {
    SuiteOptions o;
    o.trials = trials;
    o.seed = kSeed;
    o.threads = default_threads();
    return o;
}

// Runs one suite for each kind; fails on any violation or on a per-kind time limit.
void suite_for(Outcome& out, const std::string& suite, const std::vector<Kind>& kinds, const SuiteOptions& o,
               double perKindLimit, const std::string& margin) {
    for (Kind k : kinds) {
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteReport r = run_suite(suite, k, kH, o);
        const double dt = seconds_since(t0);
        const bool ok = r.applicable && r.passed() && dt < perKindLimit;
        out.pass = out.pass && ok;
        out.detail << " " << kind_name(k) << ":" << (ok ? "ok" : "FAIL") << "(" << r.violations.size() << " viol";
        if (auto it = r.worstMargins.find(margin); it != r.worstMargins.end()) out.detail << ", " << margin << "=" << it->second;
        out.detail << ", " << dt << "s)";
        if (!r.violations.empty()) out.detail << " first: " << r.violations.front().message;
    }
}

const std::vector<Kind>& kinds() { return degenerate_kinds(); }
const std::vector<Kind> kStepKinds{Kind::Minimal, Kind::Second, Kind::Third};

Outcome criterion_1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    int tables = 0;
    for (Kind k : all_kinds())
        for (int h : {minimum_h(k), 6, 9}) {
            const auto m = build_model(k, h);
            for (SpaceTag sp : {SpaceTag::V, SpaceTag::H}) {
                const auto problems = check_diamond(diamond(m, sp), marked_table(k, h, sp), h);
                ++tables;
                if (!problems.empty()) {
                    o.pass = false;
                    o.detail << " " << kind_name(k) << " h=" << h << " " << space_name(sp) << ": " << problems.front();
                }
            }
        }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) o.pass = false;
    o.detail << " " << tables << " tables in " << dt << "s (limit 5s)";
    return o;
}

Outcome criterion_8() {
    Outcome o;
    for (Kind k : kinds()) {
        const FibreReport f = fibre_minimum_check(k, kH, kSeed, 200, false);
        const bool ok = f.minRho >= -1e-10 && f.fibreDecreasing && f.limitValue < 1e-2 && f.degenerateDirections == 0;
        o.pass = o.pass && ok;
        o.detail << " " << kind_name(k) << ":" << (ok ? "ok" : "FAIL") << "(min=" << f.minRho
                 << ", fibre@1e-150=" << f.limitValue << ", degenerate=" << f.degenerateDirections << "/200)";
    }
    return o;
}

Outcome criterion_9() {
    Outcome o;
    SuiteOptions opt = options(500);
    opt.samplesPerDisc = 20;  // 500 discs x 20 points = 10^4 evaluations
    suite_for(o, "special", {Kind::HodgeTate}, opt, 1e9, "max_abs_h_minus_1");
    suite_for(o, "special", {Kind::Fourth}, opt, 1e9, "max_h_error");
    return o;
}

Outcome criterion_10() {
    Outcome o;
    suite_for(o, "jets", kinds(), options(100), 1e9, "max_relative_error");
    suite_for(o, "monodromy", kinds(), options(100), 1e9, "h0_change");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "diamond tables for h in {min, 6, 9}", criterion_1},
        {2, "closed forms vs frame evaluation, 1000 points/type",
         [] {
             Outcome o;
             suite_for(o, "formula", kinds(), options(1000), 30.0, "h0_error");
             return o;
         }},
        {3, "horizontality residuals, 1000 discs/type",
         [] {
             Outcome o;
             suite_for(o, "residuals", kinds(), options(1000), 1e9, "ipr");
             return o;
         }},
        {4, "levi(rho0) >= -1e-8, 200 discs x 20 samples/type",
         [] {
             Outcome o;
             suite_for(o, "rho0-psh", kinds(), options(200), 1e9, "min_levi_rho0");
             return o;
         }},
        {5, "transverse divergence, 200 anchored discs/type",
         [] {
             Outcome o;
             suite_for(o, "divergence", kStepKinds, options(200), 1e9, "min_final_levi");
             return o;
         }},
        {6, "tangent nonnegativity, 200 configurations/type",
         [] {
             Outcome o;
             suite_for(o, "tangent", kinds(), options(200), 1e9, "min_levi_sum");
             return o;
         }},
        {7, "step witnesses: dominant sign, q0 limit, omega",
         [] {
             Outcome o;
             suite_for(o, "steps", kStepKinds, options(1), 1e9, "min_leading_sign");
             return o;
         }},
        {8, "fibre minimum and non-degenerate directions", criterion_8},
        {9, "special types: h = 1 and h = 1 - |xi3_1|^2", criterion_9},
        {10, "jet vs finite differences and monodromy invariance", criterion_10},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " error: " << e.what();
        }
        all = all && o.pass;
        std::printf("CRITERION %2d %s: %s [%.2fs]%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, seconds_since(t0),
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
