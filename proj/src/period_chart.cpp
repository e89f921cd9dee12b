#include "hodgepsh/period_chart.hpp"

#include "chart_ops.hpp"
#include "hodgepsh/errors.hpp"
#include "hodgepsh/rng.hpp"
#include "hodgepsh/wedge.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

namespace hodgepsh {

using detail::VecT;

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI(0.0, 1.0);

void require_boundary_kind(Kind kind) {
    if (kind == Kind::Interior) throw NotApplicable("the interior model has no boundary chart");
}

// (section, component) of every entry computed from the free data.
std::vector<std::pair<int, int>> dependent_positions(Kind kind, int h) {
    switch (kind) {
        case Kind::Minimal: return {{0, 5}, {1, 4}, {1, 5}, {0, 4}};
        case Kind::Second: return {{0, 4}, {1, 3}, {1, 4}, {0, 3}};
        case Kind::Third: return {{1, 2}, {0, 7}, {1, 6}, {1, 7}, {0, 6}};
        case Kind::Fourth: return {{1, 2}, {0, 6}, {1, 5}, {1, 6}, {0, 5}};
        case Kind::HodgeTate: return {{1, 2}, {0, h + 2}, {1, h + 3}, {1, h + 2}, {0, h + 3}};
        case Kind::Interior: break;
    }
    throw NotApplicable("the interior model has no boundary chart");
}

std::pair<cd, cd> eval_with_slope(const Poly<cd>& p, cd s) {
    const auto& c = p.coeffs();
    cd v = c.back(), d = 0.0;
    for (size_t k = c.size() - 1; k-- > 0;) {
        d = d * s + v;
        v = v * s + c[k];
    }
    return {v, d};
}

struct SectionValues {
    CVector a1, a2, da1, da2;
    cd t1, dt1, nu, dnu;
};

SectionValues section_values(const HorizontalDisc& disc, cd s) {
    const auto& tab = disc.table;
    const int d = static_cast<int>(tab.A[0].size());
    if (d == 0) throw InvalidInput("disc has not been solved");
    SectionValues v;
    CVector* vals[2] = {&v.a1, &v.a2};
    CVector* ders[2] = {&v.da1, &v.da2};
    for (int a = 0; a < 2; ++a) {
        vals[a]->resize(d);
        ders[a]->resize(d);
        for (int j = 0; j < d; ++j) std::tie((*vals[a])(j), (*ders[a])(j)) = eval_with_slope(tab.A[a][j], s);
    }
    std::tie(v.t1, v.dt1) = eval_with_slope(tab.t1, s);
    std::tie(v.nu, v.dnu) = eval_with_slope(tab.nu, s);
    return v;
}

Poly<cd> t1_polynomial(const HorizontalDisc& disc) {
    if (disc.frozen) return Poly<cd>::constant(disc.frozenT1);
    if (disc.tangency == 0) return Poly<cd>::constant(0.0);
    return Poly<cd>::monomial(disc.tangency, 1.0);
}

// q-functions of the section pair as jets or plain values.
template <class T>
std::array<std::optional<T>, 3> q_generic(const ChartModel& m, const VecT<T>& a1, const VecT<T>& a2) {
    const VecT<T> c1 = detail::conj_vec(m, a1), c2 = detail::conj_vec(m, a2);
    std::array<std::optional<T>, 3> q;
    q[0] = detail::qh(m, a1, a2, c1, c2);
    const T n1 = detail::qh_N(m, a1, a2, c1, c2);
    switch (m.kind) {
        case Kind::Minimal:
            q[1] = n1 * cd(0, -1);
            break;
        case Kind::Second:
            q[1] = n1 * kI;
            q[2] = -detail::qh_N2(m, a1, a2, c1, c2);
            break;
        case Kind::Third:
            q[1] = n1 * kI;
            q[2] = detail::qh_N2(m, a1, a2, c1, c2) * cd(-0.5);
            break;
        default:
            throw NotApplicable("q-functions are defined for the minimal, second and third kinds only");
    }
    return q;
}

}  // namespace

// ---------------------------------------------------------------------------------------
// Model data

std::shared_ptr<const ChartModel> chart_model(Kind kind, int h) {
    static std::mutex mutex;
    static std::map<std::pair<Kind, int>, std::shared_ptr<const ChartModel>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({kind, h});
        if (it != cache.end()) return it->second;
    }
    const DegenerationModel dm = build_model(kind, h);
    auto m = std::make_shared<ChartModel>();
    m->kind = kind;
    m->h = h;
    m->dimV = dm.dimV;
    m->hSign = dm.hSign;
    m->rIndices = dm.rIndices;
    m->Qc = dm.Qc;
    m->conjc = dm.conjc;
    m->Nc = dm.Nc;
    for (int i = 0; i < dm.dimV; ++i)
        for (int j = 0; j < dm.dimV; ++j) {
            if (dm.Qc(i, j) != 0.0) m->Q.emplace_back(i, j, dm.Qc(i, j).real());
            if (dm.Nc(i, j) != 0.0) m->N.emplace_back(i, j, dm.Nc(i, j));
        }
    m->conjMap.resize(static_cast<size_t>(dm.dimV));
    for (int j = 0; j < dm.dimV; ++j)
        for (int i = 0; i < dm.dimV; ++i)
            if (dm.conjc(i, j) != 0.0) m->conjMap[static_cast<size_t>(j)] = {i, dm.conjc(i, j).real()};
    const WedgeSpace ws = wedge_space(dm);
    m->QH = to_complex(ws.Q);
    m->NH = to_complex(ws.N);
    m->conjH = to_complex(ws.conj);

    std::lock_guard lock(mutex);
    return cache.try_emplace({kind, h}, std::move(m)).first->second;
}

// ---------------------------------------------------------------------------------------
// Entry bookkeeping

std::string entry_name(int section, int component) {
    return "alpha" + std::to_string(component + 1) + "_" + std::to_string(section + 1);
}

std::vector<FreeEntry> free_entries(Kind kind, int h) {
    require_boundary_kind(kind);
    const auto m = chart_model(kind, h);
    std::vector<FreeEntry> out;
    auto add = [&](int a, int j, bool fibre) { out.push_back({entry_name(a, j), a, j, fibre}); };
    switch (kind) {
        case Kind::Minimal:
            add(0, 3, false);
            add(1, 2, true);
            for (int r : m->rIndices) {
                add(0, r, true);
                add(1, r, false);
            }
            break;
        case Kind::Second:
            for (int r : m->rIndices) {
                add(0, r, true);
                add(1, r, false);
            }
            break;
        case Kind::Third:
            add(0, 2, true);
            add(0, 3, true);
            add(0, 4, false);
            add(0, 5, false);
            add(1, 3, true);
            add(1, 4, false);
            add(1, 5, false);
            for (int r : m->rIndices) {
                add(0, r, false);
                add(1, r, false);
            }
            break;
        case Kind::Fourth:
            add(0, 2, true);
            add(0, 3, false);
            add(0, 4, false);
            add(1, 3, false);
            add(1, 4, false);
            for (int r : m->rIndices) {
                add(0, r, false);
                add(1, r, false);
            }
            break;
        case Kind::HodgeTate:
            add(0, 2, false);
            add(0, 3, false);
            add(1, 3, false);
            for (int r : m->rIndices) {
                add(0, r, false);
                add(1, r, false);
            }
            break;
        case Kind::Interior:
            break;
    }
    out.push_back({"nu", -1, -1, false});
    return out;
}

std::string integration_constant_name(Kind kind, int h) {
    switch (kind) {
        case Kind::Minimal: return entry_name(1, 5);
        case Kind::Second: return entry_name(1, 4);
        case Kind::Third: return entry_name(1, 7);
        case Kind::Fourth: return entry_name(1, 6);
        case Kind::HodgeTate: return entry_name(1, h + 2);
        case Kind::Interior: break;
    }
    throw NotApplicable("the interior model has no boundary chart");
}

// ---------------------------------------------------------------------------------------
// Solving the dependent entries

template <class T>
EntryTable<T> solve_entries(const HorizontalDisc& disc, const Poly<T>& t1, int cap) {
    using P = Poly<T>;
    const auto m = chart_model(disc.kind, disc.h);
    const int d = m->dimV;
    auto lift = [&](const std::vector<cd>& c) {
        std::vector<T> v;
        v.reserve(c.size());
        for (const auto& x : c) v.push_back(T(x));
        return P(std::move(v), cap);
    };
    const P zero(std::vector<T>{T(0)}, cap);
    EntryTable<T> E;
    for (auto& sec : E.A) sec.assign(static_cast<size_t>(d), zero);
    E.A[0][0] = P::constant(T(1), cap);
    E.A[1][1] = P::constant(T(1), cap);
    E.nu = zero;
    for (const auto& fe : free_entries(disc.kind, disc.h)) {
        auto it = disc.freeEntries.find(fe.name);
        if (it == disc.freeEntries.end()) throw InvalidInput("missing free entry " + fe.name);
        if (fe.name == "nu")
            E.nu = lift(it->second);
        else
            E.A[fe.section][fe.component] = lift(it->second);
    }
    const std::string cname = integration_constant_name(disc.kind, disc.h);
    auto cit = disc.constants.find(cname);
    if (cit == disc.constants.end()) throw InvalidInput("missing integration constant " + cname);
    const T c(cit->second);
    E.t1 = t1;
    const P dt1 = t1.derivative();

    auto& A0 = E.A[0];
    auto& A1 = E.A[1];
    auto sum_over_r = [&](auto term) {
        P acc = zero;
        for (int r : m->rIndices) acc += term(r);
        return acc;
    };
    const P sq0 = sum_over_r([&](int r) { return A0[r] * A0[r]; });
    const P sq1 = sum_over_r([&](int r) { return A1[r] * A1[r]; });
    const P cross = sum_over_r([&](int r) { return A0[r] * A1[r]; });
    const P crossD = sum_over_r([&](int r) { return A0[r] * A1[r].derivative(); });
    const cd half(0.5), inv2pi(1.0 / (2.0 * kPi));
    const P nuDt1 = E.nu * dt1;

    switch (disc.kind) {
        case Kind::Minimal: {
            A0[5] = scale(-half, sq0);
            A1[4] = scale(-half, sq1);
            const P integrand = -(A0[3] * A1[2].derivative()) - crossD - scale(inv2pi, nuDt1);
            A1[5] = integrand.integral(c);
            A0[4] = -(A1[5] + A0[3] * A1[2] + cross);
            break;
        }
        case Kind::Second: {
            A0[4] = scale(-half, sq0);
            A1[3] = scale(-half, sq1);
            A1[4] = (scale(inv2pi, nuDt1) - crossD).integral(c);
            A0[3] = -(A1[4] + cross);
            break;
        }
        case Kind::Third: {
            A1[2] = A0[3];
            A0[7] = -(A0[2] * A0[5] + A0[3] * A0[4] + scale(half, sq0));
            A1[6] = -(A1[2] * A1[5] + A1[3] * A1[4] + scale(half, sq1));
            const P w = t1 * E.nu;
            const P integrand = -(A0[2] * A1[5].derivative()) - A0[3] * A1[4].derivative() -
                                A0[4] * A1[3].derivative() - A0[5] * A1[2].derivative() - crossD -
                                (A0[5] + A1[4]) * w.derivative() + scale(cd(1.0 / kPi), nuDt1);
            A1[7] = integrand.integral(c);
            A0[6] = -(A1[7] + A0[2] * A1[5] + A0[3] * A1[4] + A0[4] * A1[3] + A0[5] * A1[2] + cross);
            break;
        }
        case Kind::Fourth: {
            A1[2] = -A0[3] + t1 * E.nu;
            A0[6] = -(A0[2] * A0[4] + scale(half, A0[3] * A0[3]) + scale(half, sq0));
            A1[5] = -(A1[2] * A1[4] + scale(half, A1[3] * A1[3]) + scale(half, sq1));
            const P integrand = -(A0[2] * A1[4].derivative()) - A0[3] * A1[3].derivative() -
                                A0[4] * A1[2].derivative() - crossD + scale(inv2pi, nuDt1);
            A1[6] = integrand.integral(c);
            A0[5] = -(A1[6] + A0[2] * A1[4] + A0[4] * A1[2] + A0[3] * A1[3] + cross);
            break;
        }
        case Kind::HodgeTate: {
            const int u1 = 2, u2 = 3, w1 = disc.h + 2, w2 = disc.h + 3;
            A1[u1] = A0[u2] + t1 * E.nu;
            A0[w1] = scale(half, A0[u1] * A0[u1] + A0[u2] * A0[u2] - sq0);
            A1[w2] = scale(half, A1[u1] * A1[u1] + A1[u2] * A1[u2] - sq1);
            const P integrand = A0[u1] * A1[u1].derivative() + A0[u2] * A1[u2].derivative() - crossD +
                                scale(kI * inv2pi, nuDt1);
            A1[w1] = integrand.integral(c);
            A0[w2] = -A1[w1] + A0[u1] * A1[u1] + A0[u2] * A1[u2] - cross;
            break;
        }
        case Kind::Interior:
            throw NotApplicable("the interior model has no boundary chart");
    }
    return E;
}

template EntryTable<cd> solve_entries<cd>(const HorizontalDisc&, const Poly<cd>&, int);
template EntryTable<CLogPoly> solve_entries<CLogPoly>(const HorizontalDisc&, const Poly<CLogPoly>&, int);

void solve(HorizontalDisc& disc) {
    require_boundary_kind(disc.kind);
    disc.table = solve_entries<cd>(disc, t1_polynomial(disc));
    disc.dependentEntries.clear();
    for (const auto& [a, j] : dependent_positions(disc.kind, disc.h))
        disc.dependentEntries[entry_name(a, j)] = disc.table.A[a][j].coeffs();
}

namespace {

void validate_parameters(Kind kind, int h, int degree, int tangency, double bound) {
    require_boundary_kind(kind);
    if (h < minimum_h(kind)) throw InvalidHodgeNumber("h below the minimum for " + kind_name(kind));
    if (degree < 0 || degree > 8) throw InvalidInput("degree must lie in 0..8");
    if (tangency < 0 || tangency > 8) throw InvalidInput("tangency must lie in 0..8");
    if (!(bound >= 0.0 && bound <= 0.1)) throw InvalidInput("coefficient bound must lie in [0, 0.1]");
}

void check_construction(const HorizontalDisc& disc) {
    const Residuals r = residuals(disc);
    const double worst = std::max(r.hr, r.ipr);
    if (!(worst <= 1e-12))
        throw ConstructionFailure("horizontality residual " + std::to_string(worst) + " exceeds 1e-12");
}

}  // namespace

HorizontalDisc make_horizontal_disc(Kind kind, int h, std::uint64_t seed, int degree, int tangency, double bound,
                                    DiscOptions options) {
    validate_parameters(kind, h, degree, tangency, bound);
    HorizontalDisc disc;
    disc.kind = kind;
    disc.h = h;
    disc.tangency = tangency;
    disc.seed = seed;
    disc.degree = degree;
    disc.bound = bound;
    disc.anchored = options.anchored;
    disc.fibre = options.fibre;
    SplitMix64 rng(seed);
    for (const auto& fe : free_entries(kind, h)) {
        std::vector<cd> c(static_cast<size_t>(degree) + 1);
        for (auto& x : c) x = rng.in_disc(bound);
        if (fe.fibreCutting && options.anchored) c[0] = 0.0;
        if (fe.fibreCutting && options.fibre) std::fill(c.begin(), c.end(), cd(0.0));
        disc.freeEntries[fe.name] = std::move(c);
    }
    disc.constants[integration_constant_name(kind, h)] = rng.in_disc(bound);
    solve(disc);
    check_construction(disc);
    return disc;
}

HorizontalDisc make_tangent_disc(Kind kind, int h, std::uint64_t seed, cd t1, int degree, double bound) {
    validate_parameters(kind, h, degree, 1, bound);
    if (degree < 1) throw InvalidInput("a tangent configuration needs degree >= 1");
    HorizontalDisc disc;
    disc.kind = kind;
    disc.h = h;
    disc.tangency = 1;
    disc.frozen = true;
    disc.frozenT1 = t1;
    disc.seed = seed;
    disc.degree = degree;
    disc.bound = bound;
    disc.anchored = false;
    SplitMix64 rng(seed);
    double slopeNorm2 = 0.0;
    for (const auto& fe : free_entries(kind, h)) {
        std::vector<cd> c(static_cast<size_t>(degree) + 1);
        for (auto& x : c) x = rng.in_disc(bound);
        if (fe.name != "nu") slopeNorm2 += std::norm(c[1]);
        disc.freeEntries[fe.name] = std::move(c);
    }
    disc.constants[integration_constant_name(kind, h)] = rng.in_disc(bound);
    if (kind == Kind::Second || kind == Kind::Third) {
        const cd kappa = rng.in_disc(2.0 * kPi * bound);
        disc.freeEntries["nu"][1] = kappa * std::sqrt(slopeNorm2);
    }
    solve(disc);
    check_construction(disc);
    return disc;
}

HorizontalDisc make_witness_disc(Kind kind, int h, cd t1, const std::map<std::string, cd>& slopes, cd nuSlope,
                                 cd nuValue) {
    validate_parameters(kind, h, 1, 1, 0.0);
    HorizontalDisc disc;
    disc.kind = kind;
    disc.h = h;
    disc.tangency = 1;
    disc.frozen = true;
    disc.frozenT1 = t1;
    disc.degree = 1;
    disc.bound = 0.0;
    disc.anchored = false;
    for (const auto& fe : free_entries(kind, h)) disc.freeEntries[fe.name] = {0.0, 0.0};
    for (const auto& [name, slope] : slopes) {
        auto it = disc.freeEntries.find(name);
        if (it == disc.freeEntries.end() || name == "nu") throw InvalidInput("not a free section entry: " + name);
        it->second[1] = slope;
    }
    disc.freeEntries["nu"] = {nuValue, nuSlope};
    disc.constants[integration_constant_name(kind, h)] = 0.0;
    solve(disc);
    return disc;
}

HorizontalDisc limit_disc(const HorizontalDisc& disc) {
    HorizontalDisc out = disc;
    if (out.frozen)
        out.frozenT1 = 0.0;
    else
        out.tangency = 0;
    solve(out);
    return out;
}

// ---------------------------------------------------------------------------------------
// Frames and norms

Frame xi_frame(const HorizontalDisc& disc, cd s, double ellShift) {
    const auto m = disc.chart();
    if (!disc.frozen && disc.tangency >= 1 && s == 0.0)
        throw SingularEvaluation(0.0, "period frame at the divisor point s = 0");
    const SectionValues v = section_values(disc, s);
    Frame f;
    f.t1 = v.t1;
    f.dt1 = v.dt1;
    f.w = v.t1 * v.nu;
    f.dw = v.dt1 * v.nu + v.t1 * v.dnu;
    const auto z = detail::untwisted_sections<cd>(*m, v.a1, v.a2, v.da1, v.da2, f.w, f.dw);
    f.z1 = z.z1;
    f.z2 = z.z2;
    f.dz1 = z.dz1;
    f.dz2 = z.dz2;
    if (f.t1 == 0.0) {
        f.ell = 0.0;
        f.dell = 0.0;
    } else {
        f.ell = std::log(f.t1) / (2.0 * kPi * kI) + ellShift;
        f.dell = f.dt1 / (2.0 * kPi * kI * f.t1);
    }
    const CVector n1 = detail::apply_N<cd>(*m, f.z1), n2 = detail::apply_N<cd>(*m, f.z2);
    f.xi1 = detail::apply_expN<cd>(*m, f.ell, f.z1);
    f.xi2 = detail::apply_expN<cd>(*m, f.ell, f.z2);
    f.dxi1 = detail::apply_expN<cd>(*m, f.ell, CVector(f.dz1 + f.dell * n1));
    f.dxi2 = detail::apply_expN<cd>(*m, f.ell, CVector(f.dz2 + f.dell * n2));
    return f;
}

EtaInf eta_inf_vectors(const HorizontalDisc& disc, const Frame& frame) {
    const auto m = disc.chart();
    const auto e = detail::eta_inf_pair<cd>(*m, frame.xi1, frame.xi2, frame.dxi1, frame.dxi2);
    return {e[0], e[1], e[2], e[3]};
}

NormJets norm_jets(const HorizontalDisc& disc, cd s, double ellShift) {
    const auto m = disc.chart();
    const Frame f = xi_frame(disc, s, ellShift);
    const auto x1 = detail::holomorphic_jets(f.xi1, f.dxi1);
    const auto x2 = detail::holomorphic_jets(f.xi2, f.dxi2);
    const auto e = detail::eta_inf_pair<CJet>(*m, x1, x2, x1, x2);
    NormJets out;
    out.h = real_part(detail::qh(*m, x1, x2, detail::conj_vec(*m, e[0]), detail::conj_vec(*m, e[1]))) *
            cd(static_cast<double>(m->hSign));
    out.h0Finite = f.t1 != 0.0;
    if (out.h0Finite)
        out.h0 = real_part(detail::qh(*m, x1, x2, detail::conj_vec(*m, x1), detail::conj_vec(*m, x2)));
    return out;
}

NormValue hodge_norms(const HorizontalDisc& disc, cd s, double ellShift) {
    const NormJets j = norm_jets(disc, s, ellShift);
    NormValue v;
    v.h = j.h.f.real();
    if (!(v.h > 0.0) || !std::isfinite(v.h)) throw OutsideChart("h = " + std::to_string(v.h) + " is not positive");
    v.rho1 = -std::log(v.h);
    v.leviRho1 = -log(j.h).fssb.real();
    if (j.h0Finite) {
        v.h0 = j.h0.f.real();
        if (!(v.h0 > 0.0) || !std::isfinite(v.h0))
            throw OutsideChart("h0 = " + std::to_string(v.h0) + " is not positive");
        v.rho0 = 1.0 / v.h0;
        v.leviRho0 = recip(j.h0).fssb.real();
    } else {
        v.h0 = std::numeric_limits<double>::infinity();
        v.rho0 = 0.0;
        v.leviRho0 = 0.0;
    }
    v.leviSum = v.leviRho0 + v.leviRho1;
    if (disc.kind == Kind::Minimal || disc.kind == Kind::Second || disc.kind == Kind::Third) {
        const QValues q = q_functions(disc, s);
        if (q.q0) v.pieces["q0"] = *q.q0;
        if (q.q1) v.pieces["q1"] = *q.q1;
        if (q.q2) v.pieces["q2"] = *q.q2;
    }
    return v;
}

// Closed forms in the section data. Vectors on H are dense in the v_i ^ v_j basis.
NormValue hodge_norms_formula(const HorizontalDisc& disc, cd s) {
    const auto mp = disc.chart();
    const ChartModel& m = *mp;
    if (!disc.frozen && disc.tangency >= 1 && s == 0.0)
        throw SingularEvaluation(0.0, "closed forms at the divisor point s = 0");
    const SectionValues sv = section_values(disc, s);
    const CVector& a1 = sv.a1;
    const CVector& a2 = sv.a2;
    const cd w = sv.t1 * sv.nu;
    const bool onDivisor = sv.t1 == 0.0;
    const double L = onDivisor ? 0.0 : std::log(std::norm(sv.t1));
    const double ww = std::norm(w);
    const cd wb = std::conj(w);
    const int d = m.dimV;

    auto E = [&](int k) {
        CVector e = CVector::Zero(d);
        e(k) = 1.0;
        return e;
    };
    auto wd = [](const CVector& x, const CVector& y) -> CVector { return wedge(x, y); };
    auto q = [&](const CVector& x, const CVector& y) -> cd { return (x.transpose() * m.QH * y)(0, 0); };
    auto cH = [&](const CVector& x) -> CVector { return m.conjH * x.conjugate(); };
    auto cV = [&](const CVector& x) -> CVector { return m.conjc * x.conjugate(); };
    auto NH = [&](const CVector& x) -> CVector { return m.NH * x; };
    auto NV = [&](const CVector& x) -> CVector { return m.Nc * x; };
    // q(a, exp(X N_H) conj a) with X = iL/2pi, the norm of a decomposable lifted through the twist
    auto twisted_norm = [&](const CVector& a) -> cd {
        const cd X = kI * L / (2.0 * kPi);
        CVector term = cH(a), acc = term;
        for (int k = 1; k <= 4; ++k) {
            term = NH(term) * (X / static_cast<double>(k));
            acc += term;
        }
        return q(a, acc);
    };

    cd hv = 0.0, h0v = 0.0;
    switch (m.kind) {
        case Kind::Minimal: {
            const CVector b13 = E(2) - a1(3) * E(5);
            const CVector a05 = wd(a1, a2), b06 = wd(b13, a2);
            const CVector binf4 = -kI * wd(b13, NV(a2)) - wd(a1, E(5));
            const CVector binf5 = wd(E(5), b13);
            const CVector aa = cH(a05), bb = cH(b06);
            const double lp = L / (2.0 * kPi);
            hv = -kI * q(a05, NH(aa)) + lp * ww + kI * w * q(aa, NH(b06)) +
                 0.5 * w * q(aa, CVector(wd(a1, E(5)) - wd(E(4), a2))) - kI * wb * q(a05, NH(bb)) +
                 0.5 * wb * q(a05, CVector(wd(cV(a1), cV(E(5))) - wd(cV(E(4)), cV(a2)))) -
                 0.5 * ww * (q(b06, cH(binf4)) + q(bb, binf4)) -
                 0.5 * w * w * q(CVector(aa + wb * bb), CVector(binf5 - kI * lp * NH(binf5))) -
                 0.5 * wb * wb * q(CVector(a05 + w * b06), CVector(cH(binf5) + kI * lp * NH(cH(binf5))));
            const CVector eta = a05 + w * b06;
            h0v = kI * lp * q(a05, NH(aa)) - lp * lp * ww + kI * lp * (wb * q(a05, NH(bb)) - w * q(aa, NH(b06))) +
                  q(eta, cH(eta)) + kI * lp * ww * q(b06, NH(bb));
            break;
        }
        case Kind::Second: {
            double rsum = 0.0;
            for (int r : m.rIndices) rsum += std::norm(a1(r));
            hv = 1.0 + ww + std::norm(a1(4) - 0.5 * w * w) - rsum;
            const CVector a = wd(a1, a2) + w * wd(CVector(E(2) - 0.5 * w * E(4)), a2);
            const cd ca = cd(0, 1) * L / (2.0 * kPi);
            h0v = -L * L / (8.0 * kPi * kPi) * q(a, NH(NH(cH(a)))) + ca * q(a, NH(cH(a))) + q(a, cH(a));
            break;
        }
        case Kind::Third: {
            auto Bmap = [&](const CVector& x) {
                CVector y = CVector::Zero(d);
                y(2) = x(1);
                y(6) = -x(5);
                y(3) = -x(0);
                y(7) = x(4);
                return y;
            };
            const CVector b1 = Bmap(a1), b2 = Bmap(a2);
            const CVector a5 = -kI * NV(a2), a6 = -kI * NV(a1);
            const CVector b5 = Bmap(a5), b6 = Bmap(a6);
            const CVector a0 = wd(a1, a2);
            const CVector b0 = wd(a1, b2) + wd(b1, a2) + w * wd(b1, b2);
            const CVector binf = -kI * wd(NV(a2), b6) - wd(b5, CVector(kI * NV(a1))) + w * wd(b5, b6);
            const CVector ca0 = cH(a0);
            const CVector n2ca0 = NH(NH(ca0));
            hv = -0.5 * q(a0, n2ca0) -
                 (w * (q(ca0, binf) + 0.5 * q(b0, n2ca0)) + ww * q(b0, cH(binf))).real();
            const CVector a = a0 + w * b0;
            const cd ca = cd(0, 1) * L / (2.0 * kPi);
            h0v = -L * L / (8.0 * kPi * kPi) * q(a, NH(NH(cH(a)))) + ca * q(a, NH(cH(a))) + q(a, cH(a));
            break;
        }
        case Kind::Fourth: {
            const Frame f = xi_frame(disc, s);
            hv = 1.0 - std::norm(f.xi1(2));
            h0v = twisted_norm(wd(a1, a2));
            break;
        }
        case Kind::HodgeTate:
            hv = 1.0;
            h0v = twisted_norm(wd(a1, a2));
            break;
        case Kind::Interior:
            throw NotApplicable("the interior model has no boundary chart");
    }
    NormValue v;
    v.h = hv.real();
    if (!(v.h > 0.0)) throw OutsideChart("h = " + std::to_string(v.h) + " is not positive");
    v.rho1 = -std::log(v.h);
    if (onDivisor) {
        v.h0 = std::numeric_limits<double>::infinity();
    } else {
        v.h0 = h0v.real();
        if (!(v.h0 > 0.0)) throw OutsideChart("h0 = " + std::to_string(v.h0) + " is not positive");
        v.rho0 = 1.0 / v.h0;
    }
    return v;
}

SymbolicNorms symbolic_norm_jets(const HorizontalDisc& disc) {
    if (!disc.frozen) throw InvalidInput("symbolic expansion needs a frozen-t1 disc");
    using J = Jet2<CLogPoly>;
    const auto mp = disc.chart();
    const ChartModel& m = *mp;
    const auto E = solve_entries<CLogPoly>(disc, Poly<CLogPoly>::constant(CLogPoly::t(), 1), 1);
    const int d = m.dimV;
    VecT<CLogPoly> a1(d), a2(d), da1(d), da2(d);
    for (int j = 0; j < d; ++j) {
        a1(j) = E.A[0][j].coeff(0);
        da1(j) = E.A[0][j].coeff(1);
        a2(j) = E.A[1][j].coeff(0);
        da2(j) = E.A[1][j].coeff(1);
    }
    const CLogPoly w = CLogPoly::t() * E.nu.coeff(0);
    const CLogPoly dw = CLogPoly::t() * E.nu.coeff(1);
    const auto z = detail::untwisted_sections<CLogPoly>(m, a1, a2, da1, da2, w, dw);
    VecT<J> z1(d), z2(d);
    for (int j = 0; j < d; ++j) {
        z1(j) = J::holomorphic(z.z1(j), z.dz1(j));
        z2(j) = J::holomorphic(z.z2(j), z.dz2(j));
    }
    const J X(CLogPoly::L() * cd(0.0, 1.0 / (2.0 * kPi)));
    auto lifted_conj = [&](const VecT<J>& v) { return detail::apply_expN<J>(m, X, detail::conj_vec(m, v)); };
    const auto e = detail::eta_inf_pair<J>(m, z1, z2, z1, z2);
    SymbolicNorms out;
    out.h = real_part(detail::qh(m, z1, z2, lifted_conj(e[0]), lifted_conj(e[1]))) *
            cd(static_cast<double>(m.hSign));
    out.h0 = real_part(detail::qh(m, z1, z2, lifted_conj(z1), lifted_conj(z2)));
    return out;
}

QValues q_functions_raw(Kind kind, int h, const CVector& a1, const CVector& a2) {
    const auto m = chart_model(kind, h);
    if (a1.size() != m->dimV || a2.size() != m->dimV) throw DimensionError("section length does not match dimV");
    const auto q = q_generic<cd>(*m, a1, a2);
    QValues out;
    if (q[0]) out.q0 = q[0]->real();
    if (q[1]) out.q1 = q[1]->real();
    if (q[2]) out.q2 = q[2]->real();
    return out;
}

QValues q_functions(const HorizontalDisc& disc, cd s) {
    const SectionValues v = section_values(disc, s);
    return q_functions_raw(disc.kind, disc.h, v.a1, v.a2);
}

QJets q_jets(const HorizontalDisc& disc, cd s) {
    const auto m = disc.chart();
    const SectionValues v = section_values(disc, s);
    const auto q = q_generic<CJet>(*m, detail::holomorphic_jets(v.a1, v.da1), detail::holomorphic_jets(v.a2, v.da2));
    QJets out;
    if (q[0]) out.q0 = real_part(*q[0]);
    if (q[1]) out.q1 = real_part(*q[1]);
    if (q[2]) out.q2 = real_part(*q[2]);
    return out;
}

Residuals residuals(const HorizontalDisc& disc, int samples, double radius) {
    const auto m = disc.chart();
    Residuals r;
    for (int k = 0; k < samples; ++k) {
        const cd s = std::polar(radius, 2.0 * kPi * k / samples);
        const Frame f = xi_frame(disc, s);
        const CVector* x[2] = {&f.xi1, &f.xi2};
        const CVector* dx[2] = {&f.dxi1, &f.dxi2};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                r.hr = std::max(r.hr, std::abs(detail::qform<cd>(*m, *x[a], *x[b])));
                r.ipr = std::max(r.ipr, std::abs(detail::qform<cd>(*m, *x[a], *dx[b])));
            }
    }
    return r;
}

namespace {

const Poly<cd>& entry_polynomial(const HorizontalDisc& disc, const std::string& name) {
    if (name == "nu") return disc.table.nu;
    const auto m = disc.chart();
    for (int a = 0; a < 2; ++a)
        for (int j = 0; j < m->dimV; ++j)
            if (entry_name(a, j) == name) return disc.table.A[a][j];
    throw InvalidInput("unknown entry " + name);
}

}  // namespace

cd entry_slope(const HorizontalDisc& disc, const std::string& name) {
    return entry_polynomial(disc, name).coeff(1);
}

cd entry_value(const HorizontalDisc& disc, const std::string& name, cd s) {
    return entry_polynomial(disc, name).eval(s);
}

}  // namespace hodgepsh
