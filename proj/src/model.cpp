#include "hodgepsh/model.hpp"

#include "hodgepsh/errors.hpp"
#include "hodgepsh/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace hodgepsh {

namespace {

struct KindEntry {
    Kind kind;
    const char* name;
    int minH;
    int mLabel;
};

// HodgeTate needs two weight-2 vectors u_1, u_2 in the N-strings, hence h >= 2.
constexpr KindEntry kKinds[] = {
    {Kind::Interior, "interior", 0, 4}, {Kind::Minimal, "minimal", 2, 5},
    {Kind::Second, "second", 1, 6},     {Kind::Third, "third", 4, 6},
    {Kind::Fourth, "fourth", 3, 7},     {Kind::HodgeTate, "hodge-tate", 2, 8},
};

const KindEntry& entry(Kind kind) {
    for (const auto& e : kKinds)
        if (e.kind == kind) return e;
    throw InvalidKind("unknown kind");
}

std::vector<int> range(int lo, int hiExclusive) {
    std::vector<int> v;
    for (int k = lo; k < hiExclusive; ++k) v.push_back(k);
    return v;
}

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

class Builder {
public:
    explicit Builder(int dim)
        : Q(ExactMatrix::Zero(dim, dim)), C(ExactMatrix::Identity(dim, dim)), N(ExactMatrix::Zero(dim, dim)) {}
    void pair(int a, int b, const GaussRational& v = 1) {
        Q(a, b) = v;
        Q(b, a) = v;
    }
    // conj(v_from) = sign * v_to
    void conjugate(int from, int to, int sign) {
        C.col(from).setZero();
        C(to, from) = GaussRational(sign);
    }
    void swapConj(int a, int b, int sign) {
        conjugate(a, b, sign);
        conjugate(b, a, sign);
    }
    // N v_from = coeff * v_to
    void nil(int from, int to, const GaussRational& coeff) { N(to, from) = coeff; }

    ExactMatrix Q, C, N;
};

const GaussRational kI = GaussRational::i();

}  // namespace

std::string kind_name(Kind kind) { return entry(kind).name; }

Kind parse_kind(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::replace(n.begin(), n.end(), '_', '-');
    if (n == "hodgetate") n = "hodge-tate";
    for (const auto& e : kKinds)
        if (n == e.name) return e.kind;
    throw InvalidKind("unknown degeneration kind '" + name + "'");
}

int minimum_h(Kind kind) { return entry(kind).minH; }

const std::vector<Kind>& degenerate_kinds() {
    static const std::vector<Kind> k{Kind::Minimal, Kind::Second, Kind::Third, Kind::Fourth, Kind::HodgeTate};
    return k;
}

const std::vector<Kind>& all_kinds() {
    static const std::vector<Kind> k{Kind::Interior, Kind::Minimal, Kind::Second,
                                     Kind::Third,    Kind::Fourth,  Kind::HodgeTate};
    return k;
}

int DegenerationModel::nilpotency_index() const {
    ExactMatrix p = ExactMatrix::Identity(dimV, dimV);
    for (int k = 1; k <= dimV + 1; ++k) {
        p = sparse_product<GaussRational>(p, N);
        bool zero = true;
        for (Eigen::Index i = 0; i < p.size() && zero; ++i) zero = is_zero(p.data()[i]);
        if (zero) return k;
    }
    throw NotNilpotent("operator is not nilpotent");
}

DegenerationModel build_model(Kind kind, int h) {
    const KindEntry& e = entry(kind);
    if (h < e.minH)
        throw InvalidHodgeNumber("h = " + std::to_string(h) + " is below the minimum " + std::to_string(e.minH) +
                                 " for kind " + e.name);
    DegenerationModel m;
    m.kind = kind;
    m.h = h;
    m.dimV = h + 4;
    m.mLabel = e.mLabel;
    const int d = m.dimV;
    Builder b(d);
    const auto all = range(0, d);

    switch (kind) {
        case Kind::Interior: {
            // v1, v2 span V^{2,0}; v3, v4 span V^{0,2}; v_r span V^{1,1}.
            b.pair(0, 2);
            b.pair(1, 3);
            m.rIndices = range(4, d);
            for (int r : m.rIndices) b.pair(r, r);
            b.swapConj(0, 2, -1);
            b.swapConj(1, 3, -1);
            m.F = {all, join({0, 1}, m.rIndices), {0, 1}};
            m.W = {std::vector<int>{}, {}, all, all, all};
            m.e0 = {0, 1};
            m.einf = {0, 1};
            m.ed = {2, 3};
            m.hSign = 1;
            break;
        }
        case Kind::Minimal: {
            for (int a = 0; a < 6; ++a) b.pair(a, 5 - a);
            m.rIndices = range(6, d);
            for (int r : m.rIndices) b.pair(r, r);
            b.swapConj(0, 5, -1);
            b.swapConj(1, 2, 1);
            b.swapConj(3, 4, 1);
            b.nil(1, 3, kI);
            b.nil(2, 4, -kI);
            m.F = {all, join({0, 1, 2, 3}, m.rIndices), {0, 1}};
            const std::vector<int> w1{3, 4};
            const auto w2 = join(join(w1, {0, 5}), m.rIndices);
            m.W = {std::vector<int>{}, w1, w2, all, all};
            m.e0 = {0, 1};
            m.einf = {0, 3};
            m.ed = {5, 4};
            m.hSign = -1;
            break;
        }
        case Kind::Second: {
            for (int a = 0; a < 5; ++a) b.pair(a, 4 - a);
            m.rIndices = range(5, d);
            for (int r : m.rIndices) b.pair(r, r);
            b.swapConj(0, 4, -1);
            b.conjugate(2, 2, -1);
            b.nil(2, 3, kI);
            b.nil(1, 2, -kI);
            m.F = {all, join({0, 1, 2}, m.rIndices), {0, 1}};
            const std::vector<int> w0{3};
            const auto w2 = join(join(w0, {0, 2, 4}), m.rIndices);
            m.W = {w0, w0, w2, w2, all};
            m.e0 = {0, 1};
            m.einf = {0, 3};
            m.ed = {4, 3};
            m.hSign = -1;
            break;
        }
        case Kind::Third: {
            for (int a = 0; a < 8; ++a) b.pair(a, 7 - a);
            m.rIndices = range(8, d);
            for (int r : m.rIndices) b.pair(r, r);
            b.swapConj(0, 2, 1);
            b.swapConj(1, 3, 1);
            b.swapConj(4, 6, 1);
            b.swapConj(5, 7, 1);
            b.nil(0, 5, kI);
            b.nil(2, 7, -kI);
            b.nil(1, 4, kI);
            b.nil(3, 6, -kI);
            m.F = {all, join(range(0, 6), m.rIndices), {0, 1}};
            const std::vector<int> w1{4, 5, 6, 7};
            m.W = {std::vector<int>{}, w1, join(w1, m.rIndices), all, all};
            m.e0 = {0, 1};
            m.einf = {4, 5};
            m.ed = {7, 6};
            m.hSign = -1;
            break;
        }
        case Kind::Fourth: {
            for (int a = 0; a < 7; ++a) b.pair(a, 6 - a);
            m.rIndices = range(7, d);
            for (int r : m.rIndices) b.pair(r, r);
            b.swapConj(0, 2, 1);
            b.conjugate(3, 3, -1);
            b.swapConj(4, 6, 1);
            b.nil(0, 4, kI);
            b.nil(2, 6, -kI);
            b.nil(3, 5, kI);
            b.nil(1, 3, -kI);
            m.F = {all, join(range(0, 5), m.rIndices), {0, 1}};
            const std::vector<int> w0{5};
            const std::vector<int> w1{4, 5, 6};
            const auto w2 = join(join(w1, {3}), m.rIndices);
            m.W = {w0, w1, w2, join(w2, {0, 2}), all};
            m.e0 = {0, 1};
            m.einf = {4, 5};
            m.ed = {6, 5};
            m.hSign = 1;
            break;
        }
        case Kind::HodgeTate: {
            // v1 v2 | u1 u2 | v_r (h-2 of them) | w1 w2, all real.
            const int w1 = h + 2, w2 = h + 3;
            b.pair(0, w1);
            b.pair(1, w2);
            b.pair(2, 2, GaussRational(-1));
            b.pair(3, 3, GaussRational(-1));
            m.rIndices = range(4, h + 2);
            for (int r : m.rIndices) b.pair(r, r);
            b.nil(0, 2, 1);
            b.nil(1, 3, 1);
            b.nil(2, w1, 1);
            b.nil(3, w2, 1);
            m.F = {all, join({0, 1, 2, 3}, m.rIndices), {0, 1}};
            const std::vector<int> w0{w1, w2};
            const auto wmid = join(join(w0, {2, 3}), m.rIndices);
            m.W = {w0, w0, wmid, wmid, all};
            m.e0 = {0, 1};
            m.einf = {w1, w2};
            m.ed = {w1, w2};
            m.hSign = 1;
            break;
        }
    }
    m.Q = b.Q;
    m.conj = b.C;
    m.N = b.N;
    m.Qc = to_complex(m.Q);
    m.conjc = to_complex(m.conj);
    m.Nc = to_complex(m.N);
    return m;
}

ExactVector basis_vector(int dim, int index) {
    if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
    ExactVector v = ExactVector::Zero(dim);
    v(index) = GaussRational(1);
    return v;
}

ExactVector apply_conj(const ExactMatrix& conjMatrix, const ExactVector& x) {
    if (conjMatrix.cols() != x.size()) throw DimensionError("conjugation size mismatch");
    const ExactVector bar = x.unaryExpr([](const GaussRational& z) { return conj(z); });
    return sparse_product<GaussRational>(conjMatrix, bar);
}

GaussRational q_pair(const DegenerationModel& model, const ExactVector& x, const ExactVector& y) {
    if (x.size() != model.dimV || y.size() != model.dimV)
        throw DimensionError("q_pair expects vectors of dimension " + std::to_string(model.dimV));
    GaussRational acc(0);
    for (int i = 0; i < model.dimV; ++i) {
        if (is_zero(x(i))) continue;
        for (int j = 0; j < model.dimV; ++j)
            if (!is_zero(model.Q(i, j)) && !is_zero(y(j))) acc += x(i) * model.Q(i, j) * y(j);
    }
    return acc;
}

std::complex<double> q_pair(const DegenerationModel& model, const CVector& x, const CVector& y) {
    if (x.size() != model.dimV || y.size() != model.dimV)
        throw DimensionError("q_pair expects vectors of dimension " + std::to_string(model.dimV));
    return x.transpose() * model.Qc * y;
}

}  // namespace hodgepsh
