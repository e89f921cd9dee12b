#pragma once

#include "hodgepsh/period_chart.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodgepsh {

enum class RhoSelector { Rho0, Rho1, Sum };
std::string rho_name(RhoSelector r);
RhoSelector parse_rho(const std::string& name);  // throws InvalidInput

// Levi form of the selected function along the disc direction at s (jet evaluation).
double levi(const HorizontalDisc& disc, cd s, RhoSelector which);
double rho_value(const HorizontalDisc& disc, cd s, RhoSelector which);
// The same Levi value from a fourth-order finite-difference Laplacian with step `delta`.
double levi_finite_difference(const HorizontalDisc& disc, cd s, RhoSelector which, double delta);

// Disc parameter at which t1 = r e^{i theta} on a disc with t1 = s^k.
cd parameter_for_t1(const HorizontalDisc& disc, double radius, double theta);

struct DivergenceReport {
    bool passed{true};
    std::vector<double> radii;
    std::vector<double> thetas;
    std::vector<std::vector<double>> values;  // [ray][radius]
    std::string failure;
};
// levi(sum) along four rays toward the divisor; must grow strictly and end above `floor`.
DivergenceReport transverse_divergence(const HorizontalDisc& disc, const std::vector<double>& radii,
                                       double floor = 1e3, bool raise = true);

struct TangentSample {
    double radius{0}, theta{0}, levi{0};
};
struct TangentReport {
    bool passed{true};
    double minLevi{0};
    std::vector<TangentSample> samples;
    std::optional<HorizontalDisc> worstDisc;
};
// Frozen-t1 tangent configuration drawn from `seed`, evaluated at t1 = r e^{i theta}.
TangentReport tangent_nonnegativity(Kind kind, int h, std::uint64_t seed, const std::vector<double>& radii,
                                    int rays = 4, double bound = 0.05, bool raise = true);

// Step classification of a frozen-t1 direction by the vanishing of its limits at t1 = 0.
struct PredictedTerm {
    int order{0};                 // a + b of the dominant monomial
    std::optional<int> logPower;  // power of L, when fixed by the step
    bool zero{false};             // last step: the expansion vanishes
};
struct StepClassification {
    Kind kind{Kind::Minimal};
    int step{0};
    std::map<std::string, double> witnessedLimits;  // |slope| at t1 = 0 per named entry
    std::vector<double> groupMagnitudes;
    PredictedTerm predicted;
};
int step_count(Kind kind);  // throws NotApplicable for kinds without a case analysis
StepClassification classify_step(const HorizontalDisc& disc);

// Polynomial in t, conj(t), L proportional (by h0^3 h^2) to levi(sum) at s = 0 of a frozen disc.
CLogPoly levi_expansion(const HorizontalDisc& disc);

struct DominanceResult {
    bool passed{false};
    bool zeroExpansion{false};
    Monomial monomial{0, 0, 0};
    cd coeff{0.0};
    int sign{0};  // sign of the leading term as t -> 0 (0 when it changes with arg t)
    std::string detail;
};
// Sign of a dominant term as t -> 0, sampling 64 phases when the tie is phase dependent.
int leading_sign(const LeadingTerm<cd>& lt);
DominanceResult dominant_sign_check(const StepClassification& classification, const HorizontalDisc& disc,
                                    bool raise = true);

// Limits at t1 = 0 of the Levi form of q0 and of the combination -q2 ddbar q0 + 4 dq1 ^ dbar q1.
double limit_levi_q0(const HorizontalDisc& disc);
double limit_omega(const HorizontalDisc& disc);

struct FibreReport {
    std::vector<double> fibreRadii;
    std::vector<double> fibreValues;  // rho0 + rho1 along a fibre-point disc
    bool fibreDecreasing{true};
    // rho0 decays like 1/|log|t1|^2|, so the limit is probed far below the sweep radii.
    double limitRadius{1e-150};
    double limitValue{0};
    double minRho{0};                 // over every sampled point of every disc
    std::vector<double> margins;      // per random disc: inf over samples of rho0 + rho1
    int trials{0};
    int degenerateDirections{0};      // random tangent directions with levi(sum) < 1e-10
    double minDirectionLevi{0};
    bool passed{true};
};
FibreReport fibre_minimum_check(Kind kind, int h, std::uint64_t seed, int trials = 200, bool raise = true);

struct MeanValueResult {
    double centre{0}, average{0}, margin{0};
    bool passed{true};
};
MeanValueResult mean_value_check(const HorizontalDisc& disc, cd centre, double radius, int samples,
                                 RhoSelector which = RhoSelector::Sum);

}  // namespace hodgepsh
