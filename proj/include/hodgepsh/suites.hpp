#pragma once

#include "hodgepsh/json_io.hpp"
#include "hodgepsh/period_chart.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodgepsh {

struct Violation {
    int trial{-1};
    std::uint64_t seed{0};
    std::string message;
    std::optional<HorizontalDisc> disc;  // embedded for replay
    std::optional<cd> s;
    std::optional<std::string> rho;
    std::optional<double> value;
};

struct SuiteReport {
    std::string suite;
    Kind kind{Kind::Minimal};
    int h{0};
    int trials{0};
    std::uint64_t seed{0};
    bool applicable{true};
    std::vector<Violation> violations;
    std::map<std::string, double> worstMargins;
    std::vector<std::string> notes;

    bool passed() const { return violations.empty(); }
};

struct SuiteOptions {
    int trials{50};
    std::uint64_t seed{0};
    int threads{1};
    int degree{2};
    double bound{0.05};
    std::vector<double> radii{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    int samplesPerDisc{20};
};

// Suite names in the order `verify` runs them.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, Kind kind, int h, const SuiteOptions& options);

Json violation_to_json(const Violation& v);
Json suite_to_json(const SuiteReport& r);

}  // namespace hodgepsh
