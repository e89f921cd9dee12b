#pragma once

#include "hodgepsh/jet.hpp"
#include "hodgepsh/log_poly.hpp"
#include "hodgepsh/model.hpp"
#include "hodgepsh/poly.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hodgepsh {

using cd = std::complex<double>;

// Double-precision view of a model, with the sparse structure kept for fast evaluation.
struct ChartModel {
    Kind kind{Kind::Minimal};
    int h{0};
    int dimV{0};
    int hSign{-1};
    std::vector<int> rIndices;
    std::vector<std::tuple<int, int, double>> Q;  // nonzero Q(i, j)
    std::vector<std::pair<int, double>> conjMap;  // conj(v_j) = sign * v_target, indexed by j
    std::vector<std::tuple<int, int, cd>> N;      // N v_j has component i with the given coefficient
    CMatrix Qc, conjc, Nc;
    // Induced data on H, used by the transcribed closed forms only.
    CMatrix QH, NH, conjH;
};

std::shared_ptr<const ChartModel> chart_model(Kind kind, int h);  // cached, thread-safe

// Entry tables: A[a][j] is the polynomial j-th coordinate of the a-th frame section before
// the unipotent twist (0-based), nu the divisor cofactor, t1 the normal coordinate.
template <class T>
struct EntryTable {
    std::array<std::vector<Poly<T>>, 2> A;
    Poly<T> nu;
    Poly<T> t1;
};

struct FreeEntry {
    std::string name;   // "alpha<j>_<a>" with 1-based j, a; or "nu"
    int section{0};     // a - 1
    int component{0};   // j - 1
    bool fibreCutting{false};
};

// Free coordinates of the chart in draw order; the dependent ones follow from the
// quadratic bilinear relations and the integrated horizontality one-form.
std::vector<FreeEntry> free_entries(Kind kind, int h);
std::string integration_constant_name(Kind kind, int h);
std::string entry_name(int section, int component);

struct HorizontalDisc {
    Kind kind{Kind::Minimal};
    int h{6};
    int tangency{1};          // t1 = s^k; k = 0 is a disc inside the boundary divisor
    bool frozen{false};       // tangent model: t1 held at frozenT1, only the sections move
    cd frozenT1{0.0};
    std::uint64_t seed{0};
    int degree{2};
    double bound{0.05};
    bool anchored{true};      // fibre-cutting entries vanish at s = 0
    bool fibre{false};        // fibre-cutting entries vanish identically
    std::map<std::string, std::vector<cd>> freeEntries;  // includes "nu"
    std::map<std::string, cd> constants;
    std::map<std::string, std::vector<cd>> dependentEntries;  // filled by solve()
    EntryTable<cd> table;                                     // filled by solve()

    std::shared_ptr<const ChartModel> chart() const { return chart_model(kind, h); }
    bool onDivisor() const { return frozen ? frozenT1 == 0.0 : tangency == 0; }
};

struct DiscOptions {
    bool anchored{true};
    bool fibre{false};
};

// Recomputes dependent entries and the double entry table from the free data.
void solve(HorizontalDisc& disc);

// Entry table over another coefficient ring, with t1 supplied as a polynomial over it.
template <class T>
EntryTable<T> solve_entries(const HorizontalDisc& disc, const Poly<T>& t1, int cap = Poly<T>::kUncapped);

HorizontalDisc make_horizontal_disc(Kind kind, int h, std::uint64_t seed, int degree = 2, int tangency = 1,
                                    double bound = 0.05, DiscOptions options = {});

// Frozen-t1 disc: t1 fixed at `t1`, free data drawn as above (not anchored). For the
// Second and Third kinds the slope of nu is tied to the slope of the sections so that
// the direction satisfies the differentiated horizontality relation at the boundary.
HorizontalDisc make_tangent_disc(Kind kind, int h, std::uint64_t seed, cd t1, int degree = 2, double bound = 0.05);

// Frozen-t1 disc whose sections are the base point plus the given linear slopes.
HorizontalDisc make_witness_disc(Kind kind, int h, cd t1, const std::map<std::string, cd>& slopes,
                                 cd nuSlope = 0.0, cd nuValue = cd(0.2, 0.1));

// Same free data with t1 replaced by 0: the data of the limit point on the divisor.
HorizontalDisc limit_disc(const HorizontalDisc& disc);

// Period frame at s: untwisted sections z, twisted xi = exp(ell N) z, and s-derivatives.
struct Frame {
    CVector z1, z2, dz1, dz2;
    CVector xi1, xi2, dxi1, dxi2;
    cd t1, dt1, ell, dell, w, dw;
};
Frame xi_frame(const HorizontalDisc& disc, cd s, double ellShift = 0.0);

// Vectors spanning eta_inf = a ^ b built from the twisted frame (value, derivative).
struct EtaInf {
    CVector a, b, da, db;
};
EtaInf eta_inf_vectors(const HorizontalDisc& disc, const Frame& frame);

struct NormValue {
    double h{0};
    double h0{0};    // +inf on the divisor
    double rho0{0};  // 1/h0
    double rho1{0};  // -log h
    double leviRho0{0};
    double leviRho1{0};
    double leviSum{0};
    std::map<std::string, double> pieces;
};

// Oracle path: exact frame evaluation with Wirtinger jets. Throws OutsideChart.
NormValue hodge_norms(const HorizontalDisc& disc, cd s, double ellShift = 0.0);

// Jets of h and h0 along the disc (h0 undefined on the divisor).
struct NormJets {
    CJet h, h0;
    bool h0Finite{true};
};
NormJets norm_jets(const HorizontalDisc& disc, cd s, double ellShift = 0.0);

// Transcription path: the per-kind closed forms. Levi fields are left at zero.
NormValue hodge_norms_formula(const HorizontalDisc& disc, cd s);

// Monodromy-free symbolic jets at s = 0 of a frozen disc, with t1 kept as the symbol t.
struct SymbolicNorms {
    Jet2<CLogPoly> h, h0;
};
SymbolicNorms symbolic_norm_jets(const HorizontalDisc& disc);

struct QValues {
    std::optional<double> q0, q1, q2;
};
// q-functions of the section data at s (the untwisted sections). Throws NotApplicable.
QValues q_functions(const HorizontalDisc& disc, cd s);
// Same, for arbitrary section vectors (no relations imposed).
QValues q_functions_raw(Kind kind, int h, const CVector& a1, const CVector& a2);
struct QJets {
    std::optional<CJet> q0, q1, q2;
};
QJets q_jets(const HorizontalDisc& disc, cd s);

struct Residuals {
    double hr{0};
    double ipr{0};
};
Residuals residuals(const HorizontalDisc& disc, int samples = 32, double radius = 0.05);

// Derivative at s = 0 of a named entry (free or dependent) or "nu".
cd entry_slope(const HorizontalDisc& disc, const std::string& name);
cd entry_value(const HorizontalDisc& disc, const std::string& name, cd s);

}  // namespace hodgepsh

namespace Eigen {
template <class C>
struct NumTraits<hodgepsh::LogPoly<C>> : GenericNumTraits<hodgepsh::LogPoly<C>> {
    using Real = hodgepsh::LogPoly<C>;
    using NonInteger = hodgepsh::LogPoly<C>;
    using Literal = hodgepsh::LogPoly<C>;
    using Nested = hodgepsh::LogPoly<C>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 256
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen
