#pragma once

#include "hodgepsh/gauss_rational.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace hodgepsh {

enum class Kind { Interior, Minimal, Second, Third, Fourth, HodgeTate };

std::string kind_name(Kind kind);
Kind parse_kind(const std::string& name);  // throws InvalidKind
int minimum_h(Kind kind);
const std::vector<Kind>& degenerate_kinds();  // the five boundary types
const std::vector<Kind>& all_kinds();

// Ordered pair of 0-based basis indices naming the decomposable v_a ^ v_b.
using BasisPair = std::pair<int, int>;

// Polarized vector space with real structure and nilpotent operator for one boundary type.
// Basis index k (0-based) is the vector written v_{k+1} in the type tables.
struct DegenerationModel {
    Kind kind{Kind::Interior};
    int h{0};
    int dimV{0};
    ExactMatrix Q;     // symmetric bilinear form, Q(x,y) = x^T Q y
    ExactMatrix conj;  // column j holds conj(v_j); conj(x) = conj * x̄
    ExactMatrix N;     // column j holds N v_j
    std::array<std::vector<int>, 3> F;  // F[p]: indices spanning F^p, p = 0,1,2
    std::array<std::vector<int>, 5> W;  // W[l]: indices spanning W_l, l = 0..4
    BasisPair e0{0, 1};
    BasisPair einf{0, 1};
    BasisPair ed{0, 1};  // Q-dual of e0: Q_H(e0, ed) = 1
    std::vector<int> rIndices;
    int hSign{-1};  // h = hSign * Re Q_H(eta0, conj eta_inf)
    int mLabel{0};  // opaque table label carried for reporting only

    CMatrix Qc, conjc, Nc;  // double-precision copies for analytic evaluation

    int nilpotency_index() const;  // least k with N^k = 0
};

DegenerationModel build_model(Kind kind, int h);

ExactVector basis_vector(int dim, int index);
ExactVector apply_conj(const ExactMatrix& conjMatrix, const ExactVector& x);

// Q(x, y) on V. Throws DimensionError on size mismatch.
GaussRational q_pair(const DegenerationModel& model, const ExactVector& x, const ExactVector& y);
std::complex<double> q_pair(const DegenerationModel& model, const CVector& x, const CVector& y);

}  // namespace hodgepsh
