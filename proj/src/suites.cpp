#include "hodgepsh/suites.hpp"

#include "hodgepsh/errors.hpp"
#include "hodgepsh/parallel.hpp"
#include "hodgepsh/psh_verify.hpp"
#include "hodgepsh/rng.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace hodgepsh {

namespace {

constexpr double kPi = std::numbers::pi;

struct Metric {
    std::string name;
    bool largestIsWorst;
};

struct TrialOutcome {
    std::vector<Violation> violations;
    std::vector<std::optional<double>> metrics;
};

using TrialFn = std::function<void(int, std::uint64_t, TrialOutcome&)>;

// Runs `trial` for every index (in parallel), then folds outcomes in index order.
SuiteReport run_trials(const std::string& name, Kind kind, int h, const SuiteOptions& o,
                       const std::vector<Metric>& metrics, const TrialFn& trial) {
    SuiteReport rep;
    rep.suite = name;
    rep.kind = kind;
    rep.h = h;
    rep.trials = o.trials;
    rep.seed = o.seed;
    std::vector<TrialOutcome> out(static_cast<size_t>(std::max(0, o.trials)));
    parallel_for(o.trials, o.threads, [&](int i) {
        TrialOutcome& t = out[static_cast<size_t>(i)];
        t.metrics.assign(metrics.size(), std::nullopt);
        const std::uint64_t seed = mix_seed(o.seed, static_cast<std::uint64_t>(i));
        try {
            trial(i, seed, t);
        } catch (const Error& e) {
            t.violations.push_back({i, seed, e.what(), std::nullopt, std::nullopt, std::nullopt, std::nullopt});
        }
    });
    for (const auto& t : out) {
        rep.violations.insert(rep.violations.end(), t.violations.begin(), t.violations.end());
        for (size_t k = 0; k < metrics.size(); ++k) {
            if (!t.metrics[k]) continue;
            const double v = *t.metrics[k];
            auto [it, fresh] = rep.worstMargins.try_emplace(metrics[k].name, v);
            if (!fresh) it->second = metrics[k].largestIsWorst ? std::max(it->second, v) : std::min(it->second, v);
        }
    }
    return rep;
}

void fold(std::optional<double>& slot, double v, bool largestIsWorst) {
    if (!slot)
        slot = v;
    else
        slot = largestIsWorst ? std::max(*slot, v) : std::min(*slot, v);
}

cd random_point(SplitMix64& g, double lo, double hi) {
    return std::polar(std::pow(10.0, g.uniform(std::log10(lo), std::log10(hi))), g.uniform(0.0, 2.0 * kPi));
}

Violation levi_violation(int i, std::uint64_t seed, const std::string& msg, const HorizontalDisc& d, cd s,
                         RhoSelector rho, double value) {
    return {i, seed, msg, d, s, rho_name(rho), value};
}

HorizontalDisc random_disc(Kind kind, int h, std::uint64_t seed, const SuiteOptions& o, int i) {
    return make_horizontal_disc(kind, h, seed, o.degree, 1 + i % 2, o.bound, {false, false});
}

bool has_step_analysis(Kind kind) { return kind == Kind::Minimal || kind == Kind::Second || kind == Kind::Third; }

SuiteReport not_applicable(const std::string& name, Kind kind, int h, const SuiteOptions& o, std::string why) {
    SuiteReport r;
    r.suite = name;
    r.kind = kind;
    r.h = h;
    r.trials = 0;
    r.seed = o.seed;
    r.applicable = false;
    r.notes.push_back(std::move(why));
    return r;
}

SuiteReport suite_formula(Kind kind, int h, const SuiteOptions& o) {
    return run_trials("formula", kind, h, o, {{"h_error", true}, {"h0_error", true}},
                      [&](int i, std::uint64_t seed, TrialOutcome& t) {
                          const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                          SplitMix64 g(mix_seed(seed, 1));
                          const cd s = random_point(g, 1e-4, 0.1);
                          const NormValue a = hodge_norms(d, s), b = hodge_norms_formula(d, s);
                          const double eh = std::abs(a.h - b.h) / (1.0 + std::abs(a.h));
                          const double e0 = std::abs(a.h0 - b.h0) / (1.0 + std::abs(a.h0));
                          t.metrics = {eh, e0};
                          if (eh > 1e-9 || e0 > 1e-9) {
                              std::ostringstream os;
                              os.precision(17);
                              os << "closed form disagrees with the frame evaluation: h " << a.h << " vs " << b.h
                                 << ", h0 " << a.h0 << " vs " << b.h0;
                              t.violations.push_back({i, seed, os.str(), d, s, std::nullopt, std::max(eh, e0)});
                          }
                      });
}

SuiteReport suite_monodromy(Kind kind, int h, const SuiteOptions& o) {
    return run_trials("monodromy", kind, h, o, {{"h_change", true}, {"h0_change", true}},
                      [&](int i, std::uint64_t seed, TrialOutcome& t) {
                          const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                          SplitMix64 g(mix_seed(seed, 1));
                          const cd s = random_point(g, 1e-4, 0.1);
                          const NormValue a = hodge_norms(d, s, 0.0), b = hodge_norms(d, s, 1.0);
                          const double eh = std::abs(a.h - b.h) / (1.0 + std::abs(a.h));
                          const double e0 = std::abs(a.h0 - b.h0) / (1.0 + std::abs(a.h0));
                          t.metrics = {eh, e0};
                          if (eh > 1e-12 || e0 > 1e-12)
                              t.violations.push_back({i, seed, "norms change under ell -> ell + 1", d, s, std::nullopt,
                                                      std::max(eh, e0)});
                      });
}

SuiteReport suite_residuals(Kind kind, int h, const SuiteOptions& o) {
    return run_trials("residuals", kind, h, o, {{"hr", true}, {"ipr", true}},
                      [&](int i, std::uint64_t seed, TrialOutcome& t) {
                          // construction itself rejects residuals above 1e-12 (ConstructionFailure)
                          const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                          const Residuals r = residuals(d);
                          t.metrics = {r.hr, r.ipr};
                          if (r.hr > 1e-12 || r.ipr > 1e-12)
                              t.violations.push_back({i, seed, "horizontality residual above 1e-12", d, std::nullopt,
                                                      std::nullopt, std::max(r.hr, r.ipr)});
                      });
}

SuiteReport suite_rho0(Kind kind, int h, const SuiteOptions& o) {
    return run_trials("rho0-psh", kind, h, o, {{"min_levi_rho0", false}},
                      [&](int i, std::uint64_t seed, TrialOutcome& t) {
                          const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                          SplitMix64 g(mix_seed(seed, 1));
                          for (int k = 0; k < o.samplesPerDisc; ++k) {
                              const cd s = random_point(g, 1e-4, 0.1);
                              const double v = levi(d, s, RhoSelector::Rho0);
                              fold(t.metrics[0], v, false);
                              if (v < -1e-8)
                                  t.violations.push_back(
                                      levi_violation(i, seed, "levi(rho0) below -1e-8", d, s, RhoSelector::Rho0, v));
                          }
                      });
}

SuiteReport suite_psh_sum(Kind kind, int h, const SuiteOptions& o) {
    return run_trials("psh-sum", kind, h, o, {{"min_levi_sum", false}},
                      [&](int i, std::uint64_t seed, TrialOutcome& t) {
                          const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                          for (int ray = 0; ray < 4; ++ray)
                              for (double r : o.radii) {
                                  const cd s = parameter_for_t1(d, r, 0.5 * kPi * ray);
                                  const double v = levi(d, s, RhoSelector::Sum);
                                  fold(t.metrics[0], v, false);
                                  if (v < -1e-8)
                                      t.violations.push_back(
                                          levi_violation(i, seed, "levi(sum) below -1e-8", d, s, RhoSelector::Sum, v));
                              }
                      });
}

SuiteReport suite_divergence(Kind kind, int h, const SuiteOptions& o) {
    if (!has_step_analysis(kind))
        return not_applicable("divergence", kind, h, o,
                              kind == Kind::HodgeTate ? "rho1 = 0 identically; divergence is not asserted"
                                                      : "no transverse divergence claim for this kind");
    auto rep = run_trials("divergence", kind, h, o, {{"min_final_levi", false}},
                          [&](int i, std::uint64_t seed, TrialOutcome& t) {
                              const HorizontalDisc d =
                                  make_horizontal_disc(kind, h, seed, o.degree, 1, o.bound, {true, false});
                              const DivergenceReport r = transverse_divergence(d, o.radii, 1e3, false);
                              double lowest = std::numeric_limits<double>::infinity();
                              for (const auto& ray : r.values) lowest = std::min(lowest, ray.back());
                              t.metrics[0] = lowest;
                              if (!r.passed)
                                  t.violations.push_back(levi_violation(
                                      i, seed, r.failure, d, parameter_for_t1(d, o.radii.back(), 0.0),
                                      RhoSelector::Sum, r.values.front().back()));
                          });
    rep.notes.push_back("fibre-anchored discs with t1 = s");
    return rep;
}

SuiteReport suite_tangent(Kind kind, int h, const SuiteOptions& o) {
    auto rep = run_trials("tangent", kind, h, o, {{"min_levi_sum", false}},
                          [&](int i, std::uint64_t seed, TrialOutcome& t) {
                              const TangentReport r =
                                  tangent_nonnegativity(kind, h, seed, {1e-3, 1e-4, 1e-6}, 4, o.bound, false);
                              t.metrics[0] = r.minLevi;
                              if (!r.passed)
                                  t.violations.push_back(levi_violation(i, seed, "levi(sum) below -1e-8 along the divisor",
                                                                        *r.worstDisc, 0.0, RhoSelector::Sum, r.minLevi));
                          });
    rep.notes.push_back("frozen-t1 tangent model: t1 is held fixed on the disc");
    return rep;
}

struct Witness {
    std::string label;
    std::map<std::string, cd> slopes;
    cd nuSlope{0.0};
    int expectedStep{0};
};

std::vector<Witness> step_witnesses(Kind kind, int h) {
    const auto m = chart_model(kind, h);
    const bool hasR = !m->rIndices.empty();
    const std::string r1 = hasR ? entry_name(0, m->rIndices.front()) : "";
    const std::string r2 = hasR ? entry_name(1, m->rIndices.front()) : "";
    const cd a = 0.03;
    std::vector<Witness> w;
    switch (kind) {
        case Kind::Minimal:
            if (hasR) w.push_back({r1, {{r1, a}}, 0.0, 1});
            w.push_back({"alpha3_2", {{"alpha3_2", a}}, 0.0, 1});
            w.push_back({"alpha4_1", {{"alpha4_1", a}}, 0.0, 2});
            if (hasR) w.push_back({r2, {{r2, a}}, 0.0, 2});
            w.push_back({"nu", {}, a, 3});
            w.push_back({"zero", {}, 0.0, 4});
            break;
        case Kind::Second:
            if (hasR) {
                w.push_back({r1, {{r1, a}}, 0.0, 1});
                w.push_back({r2, {{r2, a}}, 0.0, 2});
            }
            w.push_back({"zero", {}, 0.0, 3});
            break;
        case Kind::Third:
            for (const char* n : {"alpha3_1", "alpha4_1", "alpha4_2"}) w.push_back({n, {{n, a}}, 0.0, 1});
            if (hasR) {
                w.push_back({r1, {{r1, a}}, 0.0, 2});
                w.push_back({r2, {{r2, a}}, 0.0, 2});
            }
            for (const char* n : {"alpha5_1", "alpha6_1", "alpha5_2", "alpha6_2"}) w.push_back({n, {{n, a}}, 0.0, 3});
            w.push_back({"zero", {}, 0.0, 4});
            break;
        default:
            break;
    }
    return w;
}

SuiteReport suite_steps(Kind kind, int h, const SuiteOptions& o) {
    if (!has_step_analysis(kind)) return not_applicable("steps", kind, h, o, "no step analysis for this kind");
    const auto witnesses = step_witnesses(kind, h);
    SuiteOptions one = o;
    one.trials = static_cast<int>(witnesses.size());
    auto rep = run_trials(
        "steps", kind, h, one, {{"min_leading_sign", false}, {"max_limit_levi_q0", true}, {"min_omega", false}},
        [&](int i, std::uint64_t seed, TrialOutcome& t) {
            const Witness& w = witnesses[static_cast<size_t>(i)];
            const HorizontalDisc d = make_witness_disc(kind, h, cd(1e-4, 0.0), w.slopes, w.nuSlope);
            auto fail = [&](const std::string& msg) {
                t.violations.push_back({i, seed, "witness " + w.label + ": " + msg, d, 0.0, std::nullopt, std::nullopt});
            };
            const StepClassification c = classify_step(d);
            if (c.step != w.expectedStep)
                fail("classified as step " + std::to_string(c.step) + ", expected " + std::to_string(w.expectedStep));
            const DominanceResult r = dominant_sign_check(c, d, false);
            if (!r.zeroExpansion) t.metrics[0] = r.sign;
            if (!r.passed) fail(r.detail);
            // Step-2 limit of ddbar q0: non-positive, zero exactly when the step-2 slopes vanish.
            if (c.step >= 2) {
                const double q0 = limit_levi_q0(d);
                t.metrics[1] = q0;
                if (q0 > 1e-12) fail("limit of ddbar q0 is positive: " + std::to_string(q0));
                const bool stepTwoDirection = c.step == 2 && kind != Kind::Third;
                if (kind == Kind::Minimal && !stepTwoDirection && std::abs(q0) > 1e-12)
                    fail("ddbar q0 nonzero although the step-2 slopes vanish");
                if (kind == Kind::Minimal && stepTwoDirection && !(q0 < -1e-12))
                    fail("ddbar q0 vanishes along a step-2 direction");
            }
            if (kind == Kind::Third && c.step == 3) {
                const double om = limit_omega(d);
                t.metrics[2] = om;
                if (!(om > 0.0)) fail("omega is not positive: " + std::to_string(om));
            }
        });
    rep.trials = one.trials;
    return rep;
}

SuiteReport suite_fibre(Kind kind, int h, const SuiteOptions& o) {
    SuiteReport rep;
    rep.suite = "fibre";
    rep.kind = kind;
    rep.h = h;
    rep.trials = o.trials;
    rep.seed = o.seed;
    const FibreReport f = fibre_minimum_check(kind, h, o.seed, o.trials, false);
    rep.worstMargins["min_rho"] = f.minRho;
    rep.worstMargins["fibre_limit_value"] = f.limitValue;
    rep.worstMargins["min_direction_levi"] = f.minDirectionLevi;
    rep.worstMargins["degenerate_directions"] = f.degenerateDirections;
    if (!f.margins.empty()) rep.worstMargins["min_disc_margin"] = *std::min_element(f.margins.begin(), f.margins.end());
    if (f.minRho < -1e-10)
        rep.violations.push_back({-1, o.seed, "rho0 + rho1 below -1e-10: " + std::to_string(f.minRho), std::nullopt,
                                  std::nullopt, std::nullopt, f.minRho});
    if (!f.fibreDecreasing || !(f.limitValue < 1e-2))
        rep.violations.push_back({0, mix_seed(o.seed, 0), "rho0 + rho1 does not decrease to 0 along the fibre disc",
                                  std::nullopt, std::nullopt, std::nullopt, f.limitValue});
    rep.notes.push_back("degenerate random directions are reported, not asserted");
    return rep;
}

SuiteReport suite_mean_value(Kind kind, int h, const SuiteOptions& o) {
    return run_trials("mean-value", kind, h, o, {{"min_margin", false}},
                      [&](int i, std::uint64_t seed, TrialOutcome& t) {
                          const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                          SplitMix64 g(mix_seed(seed, 2));
                          const cd centre = std::polar(g.uniform(0.03, 0.08), g.uniform(0.0, 2.0 * kPi));
                          const MeanValueResult r = mean_value_check(d, centre, 0.01, 64);
                          t.metrics[0] = r.margin;
                          if (!r.passed)
                              t.violations.push_back({i, seed, "sub-mean-value property fails", d, centre, "sum", r.margin});
                      });
}

SuiteReport suite_special(Kind kind, int h, const SuiteOptions& o) {
    if (kind == Kind::HodgeTate) {
        auto rep = run_trials("special", kind, h, o, {{"max_abs_h_minus_1", true}},
                              [&](int i, std::uint64_t seed, TrialOutcome& t) {
                                  const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                                  SplitMix64 g(mix_seed(seed, 1));
                                  for (int k = 0; k < o.samplesPerDisc; ++k) {
                                      const cd s = random_point(g, 1e-4, 0.1);
                                      const NormValue v = hodge_norms(d, s);
                                      fold(t.metrics[0], std::abs(v.h - 1.0), true);
                                      if (v.h != 1.0 || v.leviRho1 != 0.0)
                                          t.violations.push_back({i, seed, "h differs from 1", d, s, std::nullopt, v.h});
                                  }
                              });
        rep.notes.push_back("h = 1 identically, so rho1 = 0 and levi(sum) = levi(rho0)");
        return rep;
    }
    if (kind == Kind::Fourth) {
        auto rep = run_trials("special", kind, h, o, {{"max_h_error", true}},
                              [&](int i, std::uint64_t seed, TrialOutcome& t) {
                                  const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                                  SplitMix64 g(mix_seed(seed, 1));
                                  for (int k = 0; k < o.samplesPerDisc; ++k) {
                                      const cd s = random_point(g, 1e-4, 0.1);
                                      const double expect = 1.0 - std::norm(xi_frame(d, s).xi1(2));
                                      const double e = std::abs(hodge_norms(d, s).h - expect);
                                      fold(t.metrics[0], e, true);
                                      if (e > 1e-12)
                                          t.violations.push_back({i, seed, "h differs from 1 - |xi3_1|^2", d, s,
                                                                  std::nullopt, e});
                                  }
                              });
        rep.notes.push_back("rho smooth: h = 1 - |xi3_1|^2 extends smoothly across the divisor");
        return rep;
    }
    return not_applicable("special", kind, h, o, "closed-form identities exist for the fourth and hodge-tate kinds only");
}

SuiteReport suite_jets(Kind kind, int h, const SuiteOptions& o) {
    return run_trials("jets", kind, h, o, {{"max_relative_error", true}},
                      [&](int i, std::uint64_t seed, TrialOutcome& t) {
                          const HorizontalDisc d = random_disc(kind, h, seed, o, i);
                          SplitMix64 g(mix_seed(seed, 3));
                          const cd s = random_point(g, 1e-3, 0.1);
                          const double a = levi(d, s, RhoSelector::Sum);
                          const double b = levi_finite_difference(d, s, RhoSelector::Sum, 0.01 * std::abs(s));
                          const double e = std::abs(a - b) / std::max(std::abs(a), 1e-12);
                          t.metrics[0] = e;
                          if (e > 1e-6)
                              t.violations.push_back(levi_violation(i, seed, "jet and finite-difference Levi values differ",
                                                                    d, s, RhoSelector::Sum, a));
                      });
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "formula", "monodromy", "residuals", "rho0-psh",   "psh-sum", "divergence",
        "tangent", "steps",     "fibre",     "mean-value", "special", "jets",
    };
    return names;
}

SuiteReport run_suite(const std::string& name, Kind kind, int h, const SuiteOptions& o) {
    if (kind == Kind::Interior) throw InvalidInput("verification suites need a boundary kind");
    if (o.trials < 0) throw InvalidInput("trials must be non-negative");
    if (name == "formula") return suite_formula(kind, h, o);
    if (name == "monodromy") return suite_monodromy(kind, h, o);
    if (name == "residuals") return suite_residuals(kind, h, o);
    if (name == "rho0-psh") return suite_rho0(kind, h, o);
    if (name == "psh-sum") return suite_psh_sum(kind, h, o);
    if (name == "divergence") return suite_divergence(kind, h, o);
    if (name == "tangent") return suite_tangent(kind, h, o);
    if (name == "steps") return suite_steps(kind, h, o);
    if (name == "fibre") return suite_fibre(kind, h, o);
    if (name == "mean-value") return suite_mean_value(kind, h, o);
    if (name == "special") return suite_special(kind, h, o);
    if (name == "jets") return suite_jets(kind, h, o);
    throw InvalidInput("unknown suite '" + name + "'");
}

Json violation_to_json(const Violation& v) {
    Json j;
    j["trial"] = v.trial;
    j["seed"] = v.seed;
    j["message"] = v.message;
    if (v.s) j["s"] = complex_to_json(*v.s);
    if (v.rho) j["rho"] = *v.rho;
    if (v.value) j["value"] = *v.value;
    if (v.disc) j["disc"] = disc_to_json(*v.disc);
    return j;
}

Json suite_to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["type"] = kind_name(r.kind);
    j["h"] = r.h;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["applicable"] = r.applicable;
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(violation_to_json(x));
    j["violations"] = std::move(v);
    Json m = Json::object();
    for (const auto& [k, x] : r.worstMargins) m[k] = x;
    j["worstMargins"] = std::move(m);
    j["notes"] = r.notes;
    return j;
}

}  // namespace hodgepsh
