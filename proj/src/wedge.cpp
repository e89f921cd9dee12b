#include "hodgepsh/wedge.hpp"

#include "hodgepsh/errors.hpp"

#include <algorithm>

namespace hodgepsh {

namespace {

// Hodge level of each basis vector: largest p with v in F^p.
int f_level(const DegenerationModel& m, int i) {
    for (int p = 2; p >= 0; --p)
        if (std::find(m.F[p].begin(), m.F[p].end(), i) != m.F[p].end()) return p;
    return 0;
}

// Weight of each basis vector: least l with v in W_l.
int w_level(const DegenerationModel& m, int i) {
    for (int l = 0; l <= 4; ++l)
        if (std::find(m.W[l].begin(), m.W[l].end(), i) != m.W[l].end()) return l;
    return 4;
}

}  // namespace

int WedgeSpace::index(int i, int j) const {
    if (i < 0 || j >= dimV || i >= j) throw DimensionError("wedge index requires 0 <= i < j < dimV");
    // Row-major position of (i, j) among pairs with i < j.
    return i * dimV - i * (i + 1) / 2 + (j - i - 1);
}

ExactVector WedgeSpace::decomposable(const BasisPair& p) const {
    ExactVector v = ExactVector::Zero(dimH);
    if (p.first == p.second) return v;
    if (p.first < p.second)
        v(index(p.first, p.second)) = GaussRational(1);
    else
        v(index(p.second, p.first)) = GaussRational(-1);
    return v;
}

WedgeSpace wedge_space(const DegenerationModel& model) {
    WedgeSpace s;
    s.dimV = model.dimV;
    s.dimH = model.dimV * (model.dimV - 1) / 2;
    for (int i = 0; i < s.dimV; ++i)
        for (int j = i + 1; j < s.dimV; ++j) s.pairs.emplace_back(i, j);
    const auto& Q = model.Q;
    s.Q = ExactMatrix::Zero(s.dimH, s.dimH);
    for (int a = 0; a < s.dimH; ++a) {
        const auto [i, j] = s.pairs[a];
        for (int b = 0; b < s.dimH; ++b) {
            const auto [k, l] = s.pairs[b];
            const bool t1 = !is_zero(Q(i, k)) && !is_zero(Q(j, l));
            const bool t2 = !is_zero(Q(i, l)) && !is_zero(Q(j, k));
            if (!t1 && !t2) continue;
            GaussRational v(0);
            if (t1) v += Q(i, k) * Q(j, l);
            if (t2) v -= Q(i, l) * Q(j, k);
            s.Q(a, b) = v;
        }
    }
    s.conj = ExactMatrix::Zero(s.dimH, s.dimH);
    s.N = ExactMatrix::Zero(s.dimH, s.dimH);
    for (int b = 0; b < s.dimH; ++b) {
        const auto [k, l] = s.pairs[b];
        const ExactVector ck = model.conj.col(k), cl = model.conj.col(l);
        s.conj.col(b) = wedge(ck, cl);
        const ExactVector ek = basis_vector(s.dimV, k), el = basis_vector(s.dimV, l);
        const ExactVector nk = model.N.col(k), nl = model.N.col(l);
        s.N.col(b) = wedge(nk, el) + wedge(ek, nl);
    }
    return s;
}

GaussRational q_pair(const WedgeSpace& space, const ExactVector& x, const ExactVector& y) {
    if (x.size() != space.dimH || y.size() != space.dimH)
        throw DimensionError("q_pair on H expects vectors of dimension " + std::to_string(space.dimH));
    GaussRational acc(0);
    for (int i = 0; i < space.dimH; ++i) {
        if (is_zero(x(i))) continue;
        for (int j = 0; j < space.dimH; ++j)
            if (!is_zero(space.Q(i, j)) && !is_zero(y(j))) acc += x(i) * space.Q(i, j) * y(j);
    }
    return acc;
}

std::vector<int> wedge_F_indices(const DegenerationModel& model, const WedgeSpace& space, int p) {
    std::vector<int> out;
    for (int a = 0; a < space.dimH; ++a) {
        const auto [i, j] = space.pairs[a];
        if (f_level(model, i) + f_level(model, j) >= p) out.push_back(a);
    }
    return out;
}

std::vector<int> wedge_W_indices(const DegenerationModel& model, const WedgeSpace& space, int l) {
    std::vector<int> out;
    for (int a = 0; a < space.dimH; ++a) {
        const auto [i, j] = space.pairs[a];
        if (w_level(model, i) + w_level(model, j) <= l) out.push_back(a);
    }
    return out;
}

}  // namespace hodgepsh
