#include "hodgepsh/psh_verify.hpp"

#include "hodgepsh/errors.hpp"
#include "hodgepsh/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hodgepsh {

namespace {

constexpr double kPi = std::numbers::pi;

struct RhoJets {
    CJet rho0, rho1;
};

RhoJets rho_jets(const HorizontalDisc& disc, cd s) {
    const NormJets j = norm_jets(disc, s);
    const double h = j.h.f.real();
    if (!(h > 0.0) || !std::isfinite(h)) throw OutsideChart("h = " + std::to_string(h) + " is not positive");
    RhoJets r;
    r.rho1 = -log(j.h);
    if (j.h0Finite) {
        const double h0 = j.h0.f.real();
        if (!(h0 > 0.0) || !std::isfinite(h0)) throw OutsideChart("h0 = " + std::to_string(h0) + " is not positive");
        r.rho0 = recip(j.h0);
    }
    return r;
}

CJet select(const RhoJets& r, RhoSelector which) {
    switch (which) {
        case RhoSelector::Rho0: return r.rho0;
        case RhoSelector::Rho1: return r.rho1;
        case RhoSelector::Sum: break;
    }
    return r.rho0 + r.rho1;
}

std::string describe(const Monomial& m) {
    return "t^" + std::to_string(m[0]) + " tbar^" + std::to_string(m[1]) + " L^" + std::to_string(m[2]);
}

// Names of the entries whose limits decide each step, in step order.
std::vector<std::vector<std::string>> step_groups(Kind kind, int h) {
    const auto m = chart_model(kind, h);
    auto names = [&](std::initializer_list<std::pair<int, int>> fixed, std::initializer_list<int> rSections) {
        std::vector<std::string> out;
        for (auto [a, j] : fixed) out.push_back(entry_name(a, j));
        for (int a : rSections)
            for (int r : m->rIndices) out.push_back(entry_name(a, r));
        return out;
    };
    switch (kind) {
        case Kind::Minimal:
            return {names({{0, 5}, {1, 2}}, {0}), names({{0, 3}}, {1}), {"nu"}};
        case Kind::Second:
            return {names({{0, 4}}, {0}), names({{0, 3}}, {1})};
        case Kind::Third:
            return {names({{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {}), names({}, {0, 1}),
                    names({{0, 4}, {0, 5}, {1, 4}, {1, 5}}, {})};
        default:
            throw NotApplicable("no step analysis for the " + kind_name(kind) + " kind");
    }
}

PredictedTerm prediction(Kind kind, int step) {
    PredictedTerm p;
    if (step == step_count(kind)) {
        p.zero = true;
        return p;
    }
    switch (kind) {
        case Kind::Minimal:
            if (step == 1) p.logPower = 3;
            if (step == 2) p.logPower = 1;
            if (step == 3) p.order = 2;
            break;
        case Kind::Second:
            p.logPower = step == 1 ? 6 : 2;
            break;
        case Kind::Third:
            p.logPower = step == 1 ? 6 : step == 2 ? 3 : 2;
            break;
        default:
            break;
    }
    return p;
}

void require_frozen(const HorizontalDisc& disc, const char* what) {
    if (!disc.frozen) throw InvalidInput(std::string(what) + " needs a frozen-t1 disc");
}

}  // namespace

std::string rho_name(RhoSelector r) {
    switch (r) {
        case RhoSelector::Rho0: return "rho0";
        case RhoSelector::Rho1: return "rho1";
        case RhoSelector::Sum: break;
    }
    return "sum";
}

RhoSelector parse_rho(const std::string& name) {
    if (name == "rho0") return RhoSelector::Rho0;
    if (name == "rho1") return RhoSelector::Rho1;
    if (name == "sum") return RhoSelector::Sum;
    throw InvalidInput("unknown rho selector '" + name + "' (expected rho0, rho1 or sum)");
}

double levi(const HorizontalDisc& disc, cd s, RhoSelector which) {
    return select(rho_jets(disc, s), which).fssb.real();
}

double rho_value(const HorizontalDisc& disc, cd s, RhoSelector which) {
    return select(rho_jets(disc, s), which).f.real();
}

double levi_finite_difference(const HorizontalDisc& disc, cd s, RhoSelector which, double delta) {
    auto f = [&](cd z) { return rho_value(disc, z, which); };
    const double c = f(s);
    double lap = 0.0;
    for (cd dir : {cd(delta, 0.0), cd(0.0, delta)}) {
        lap += (-f(s + 2.0 * dir) + 16.0 * f(s + dir) - 30.0 * c + 16.0 * f(s - dir) - f(s - 2.0 * dir)) /
               (12.0 * delta * delta);
    }
    return lap / 4.0;
}

cd parameter_for_t1(const HorizontalDisc& disc, double radius, double theta) {
    if (disc.frozen || disc.tangency < 1) throw InvalidInput("disc does not cross the divisor");
    const double k = disc.tangency;
    return std::polar(std::pow(radius, 1.0 / k), theta / k);
}

DivergenceReport transverse_divergence(const HorizontalDisc& disc, const std::vector<double>& radii, double floor,
                                       bool raise) {
    if (radii.empty()) throw InvalidInput("no radii given");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] >= 1e-8)) throw InvalidInput("radii must be at least 1e-8");
        if (i > 0 && !(radii[i] < radii[i - 1])) throw InvalidInput("radii must be strictly descending");
    }
    DivergenceReport rep;
    rep.radii = radii;
    rep.thetas = {0.0, kPi / 2, kPi, 3 * kPi / 2};
    std::ostringstream why;
    for (double theta : rep.thetas) {
        std::vector<double> ray;
        for (double r : radii) ray.push_back(levi(disc, parameter_for_t1(disc, r, theta), RhoSelector::Sum));
        for (size_t i = 1; i < ray.size(); ++i)
            if (!(ray[i] > ray[i - 1]) && rep.passed) {
                rep.passed = false;
                why << "not increasing on ray theta=" << theta << " at r=" << radii[i] << " (" << ray[i - 1]
                    << " -> " << ray[i] << ")";
            }
        if (!(ray.back() > floor) && rep.passed) {
            rep.passed = false;
            why << "value " << ray.back() << " at r=" << radii.back() << " on ray theta=" << theta
                << " does not exceed " << floor;
        }
        rep.values.push_back(std::move(ray));
    }
    rep.failure = why.str();
    if (!rep.passed && raise) throw DivergenceViolation(rep.failure);
    return rep;
}

TangentReport tangent_nonnegativity(Kind kind, int h, std::uint64_t seed, const std::vector<double>& radii, int rays,
                                    double bound, bool raise) {
    if (rays < 1) throw InvalidInput("need at least one ray");
    TangentReport rep;
    rep.minLevi = std::numeric_limits<double>::infinity();
    for (double r : radii) {
        if (!(r > 0.0)) throw InvalidInput("tangent radii must be positive");
        for (int j = 0; j < rays; ++j) {
            const double theta = 2.0 * kPi * j / rays;
            HorizontalDisc d = make_tangent_disc(kind, h, seed, std::polar(r, theta), 2, bound);
            const double v = levi(d, 0.0, RhoSelector::Sum);
            rep.samples.push_back({r, theta, v});
            if (v < rep.minLevi) {
                rep.minLevi = v;
                if (v < -1e-8) rep.worstDisc = d;
            }
        }
    }
    rep.passed = rep.minLevi >= -1e-8;
    if (!rep.passed && raise)
        throw PshViolation("levi(sum) = " + std::to_string(rep.minLevi) + " on tangent configuration seed " +
                           std::to_string(seed));
    return rep;
}

int step_count(Kind kind) {
    switch (kind) {
        case Kind::Minimal: return 4;
        case Kind::Second: return 3;
        case Kind::Third: return 4;
        default: break;
    }
    throw NotApplicable("no step analysis for the " + kind_name(kind) + " kind");
}

StepClassification classify_step(const HorizontalDisc& disc) {
    require_frozen(disc, "step classification");
    const auto groups = step_groups(disc.kind, disc.h);
    const HorizontalDisc limit = limit_disc(disc);
    StepClassification c;
    c.kind = disc.kind;
    c.step = step_count(disc.kind);
    bool decided = false;
    for (size_t g = 0; g < groups.size(); ++g) {
        double mag = 0.0;
        for (const auto& name : groups[g]) {
            const double v = std::abs(entry_slope(limit, name));
            c.witnessedLimits[name] = v;
            mag = std::max(mag, v);
        }
        c.groupMagnitudes.push_back(mag);
        if (decided) continue;
        if (mag > 1e-8) {
            c.step = static_cast<int>(g) + 1;
            decided = true;
        } else if (mag >= 1e-10) {
            throw AmbiguousClassification("step " + std::to_string(g + 1) + " limit " + std::to_string(mag) +
                                          " lies between 1e-10 and 1e-8");
        }
    }
    c.predicted = prediction(disc.kind, c.step);
    return c;
}

CLogPoly levi_expansion(const HorizontalDisc& disc) {
    require_frozen(disc, "the Levi expansion");
    const SymbolicNorms s = symbolic_norm_jets(disc);
    const auto& h = s.h;
    const auto& h0 = s.h0;
    const CLogPoly rho0Part = (h0.fs * h0.fsb * cd(2.0) - h0.f * h0.fssb) * h.f * h.f;
    const CLogPoly rho1Part = (h.fs * h.fsb - h.f * h.fssb) * h0.f * h0.f * h0.f;
    return rho0Part + rho1Part;
}

int leading_sign(const LeadingTerm<cd>& lt) {
    const double parity = (lt.monomial[2] % 2 == 0) ? 1.0 : -1.0;  // L < 0 as t -> 0
    if (!lt.phaseDependent) {
        const double v = lt.coeff.real() * parity;
        return v > 0 ? 1 : v < 0 ? -1 : 0;
    }
    int sign = 0;
    for (int k = 0; k < 64; ++k) {
        const double phi = 2.0 * kPi * k / 64;
        cd v = 0.0;
        for (const auto& [m, c] : lt.tied) v += c * std::polar(1.0, (m[0] - m[1]) * phi);
        const int sk = v.real() * parity > 0 ? 1 : v.real() * parity < 0 ? -1 : 0;
        if (k == 0) sign = sk;
        if (sk != sign) return 0;
    }
    return sign;
}

DominanceResult dominant_sign_check(const StepClassification& classification, const HorizontalDisc& disc,
                                    bool raise) {
    DominanceResult r;
    const CLogPoly p = levi_expansion(disc).pruned(1e-12);
    if (p.isZero()) {
        r.zeroExpansion = true;
        r.passed = classification.predicted.zero;
        r.detail = "expansion vanishes";
    } else {
        const auto lt = leading_term(p);
        r.monomial = lt.monomial;
        r.coeff = lt.coeff;
        r.sign = leading_sign(lt);
        const auto& pr = classification.predicted;
        const bool shape = pr.zero || (lt.monomial[0] + lt.monomial[1] == pr.order &&
                                       (!pr.logPower || *pr.logPower == lt.monomial[2]));
        r.passed = r.sign > 0 && shape;
        std::ostringstream os;
        os << "leading " << describe(lt.monomial) << " coefficient " << lt.coeff.real() << " sign " << r.sign;
        if (!shape) os << " (step " << classification.step << " predicts a different order)";
        r.detail = os.str();
    }
    if (!r.passed && raise) throw DominanceViolation(r.detail);
    return r;
}

double limit_levi_q0(const HorizontalDisc& disc) {
    const QJets q = q_jets(limit_disc(disc), 0.0);
    return q.q0->fssb.real();
}

double limit_omega(const HorizontalDisc& disc) {
    const QJets q = q_jets(limit_disc(disc), 0.0);
    if (!q.q2) throw NotApplicable("omega needs q2");
    return (-(q.q2->f * q.q0->fssb) + 4.0 * q.q1->fs * q.q1->fsb).real();
}

FibreReport fibre_minimum_check(Kind kind, int h, std::uint64_t seed, int trials, bool raise) {
    FibreReport rep;
    rep.trials = trials;
    rep.minRho = std::numeric_limits<double>::infinity();
    rep.minDirectionLevi = std::numeric_limits<double>::infinity();
    const HorizontalDisc fibre = make_horizontal_disc(kind, h, mix_seed(seed, 0), 2, 1, 0.05, {true, true});
    for (double r = 1e-2; r >= 0.99e-6; r /= 10) {
        const double v = rho_value(fibre, std::polar(r, 0.3), RhoSelector::Sum);
        if (!rep.fibreValues.empty() && !(v < rep.fibreValues.back())) rep.fibreDecreasing = false;
        rep.fibreRadii.push_back(r);
        rep.fibreValues.push_back(v);
        rep.minRho = std::min(rep.minRho, v);
    }
    rep.limitValue = rho_value(fibre, std::polar(rep.limitRadius, 0.3), RhoSelector::Sum);
    if (!(rep.limitValue < rep.fibreValues.back())) rep.fibreDecreasing = false;
    rep.minRho = std::min(rep.minRho, rep.limitValue);
    for (int i = 0; i < trials; ++i) {
        const HorizontalDisc d =
            make_horizontal_disc(kind, h, mix_seed(seed, static_cast<std::uint64_t>(i) + 1), 2, 1, 0.05, {false, false});
        double margin = std::numeric_limits<double>::infinity();
        for (double r : {0.05, 1e-2, 1e-3, 1e-4})
            for (int k = 0; k < 8; ++k) margin = std::min(margin, rho_value(d, std::polar(r, 2 * kPi * k / 8 + 0.1), RhoSelector::Sum));
        rep.margins.push_back(margin);
        rep.minRho = std::min(rep.minRho, margin);
        const std::uint64_t dseed = mix_seed(seed ^ 0x5DEECE66DULL, static_cast<std::uint64_t>(i));
        SplitMix64 g(dseed);
        const HorizontalDisc t = make_tangent_disc(kind, h, dseed, std::polar(1e-4, g.uniform(0, 2 * kPi)));
        const double lv = levi(t, 0.0, RhoSelector::Sum);
        rep.minDirectionLevi = std::min(rep.minDirectionLevi, lv);
        if (lv < 1e-10) ++rep.degenerateDirections;
    }
    rep.passed = rep.minRho >= -1e-10;
    if (!rep.passed && raise)
        throw NonnegativityViolation("rho0 + rho1 = " + std::to_string(rep.minRho) + " for kind " + kind_name(kind));
    return rep;
}

MeanValueResult mean_value_check(const HorizontalDisc& disc, cd centre, double radius, int samples,
                                 RhoSelector which) {
    if (samples < 1 || !(radius > 0.0)) throw InvalidInput("mean value check needs samples >= 1 and radius > 0");
    MeanValueResult r;
    r.centre = rho_value(disc, centre, which);
    double acc = 0.0;
    for (int k = 0; k < samples; ++k) acc += rho_value(disc, centre + std::polar(radius, 2 * kPi * k / samples), which);
    r.average = acc / samples;
    r.margin = r.average - r.centre;
    r.passed = r.margin >= -1e-8 * (1.0 + std::abs(r.centre));
    return r;
}

}  // namespace hodgepsh
