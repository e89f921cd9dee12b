#pragma once

#include "hodgepsh/model.hpp"

#include <Eigen/Core>
#include <vector>

namespace hodgepsh {

// H = Λ²V in the basis v_i ^ v_j (i < j, lexicographic), with the induced structure.
struct WedgeSpace {
    int dimV{0};
    int dimH{0};
    std::vector<BasisPair> pairs;
    ExactMatrix Q;     // Q_H[(ij),(kl)] = Q_ik Q_jl - Q_il Q_jk
    ExactMatrix conj;  // column (kl) = conj(v_k) ^ conj(v_l)
    ExactMatrix N;     // derivation: N(a^b) = Na^b + a^Nb

    int index(int i, int j) const;  // requires i < j
    ExactVector decomposable(const BasisPair& p) const;  // v_a ^ v_b with sign for a > b
};

WedgeSpace wedge_space(const DegenerationModel& model);

// Coordinates of x ^ y in the (i<j) basis; works for any scalar with +, -, *.
template <class Derived1, class Derived2>
Eigen::Matrix<typename Derived1::Scalar, Eigen::Dynamic, 1> wedge(const Eigen::MatrixBase<Derived1>& x,
                                                                  const Eigen::MatrixBase<Derived2>& y) {
    using S = typename Derived1::Scalar;
    const Eigen::Index n = x.size();
    Eigen::Matrix<S, Eigen::Dynamic, 1> out(n * (n - 1) / 2);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) out(k++) = x(i) * y(j) - x(j) * y(i);
    return out;
}

GaussRational q_pair(const WedgeSpace& space, const ExactVector& x, const ExactVector& y);

// Induced filtrations on H, as (i<j) index sets. F^p(H) = sum F^a ^ F^b (a+b = p),
// W_l(H) = sum W_i ^ W_j (i+j = l); exact because the V filtrations are coordinate.
std::vector<int> wedge_F_indices(const DegenerationModel& model, const WedgeSpace& space, int p);
std::vector<int> wedge_W_indices(const DegenerationModel& model, const WedgeSpace& space, int l);

}  // namespace hodgepsh
