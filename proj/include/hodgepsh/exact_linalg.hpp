#pragma once

// Subspace arithmetic over an exact field scalar. A subspace of K^n is stored as an
// n x k matrix whose columns are a canonical basis (reduced row echelon form of the
// transpose), so equal subspaces have identical representations.

#include "hodgepsh/gauss_rational.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <iterator>
#include <optional>
#include <vector>

namespace hodgepsh {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Product that skips structural zeros; the exact model matrices are very sparse.
template <class Scalar>
Mat<Scalar> sparse_product(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> out = Mat<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index k = 0; k < a.cols(); ++k)
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (is_zero(a(i, k))) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

// In-place reduced row echelon form; returns pivot columns. Skips zero entries so the
// sparse signed-permutation matrices of the models reduce in near-linear time.
template <class Scalar>
std::vector<int> rref_inplace(Mat<Scalar>& m) {
    std::vector<int> pivots;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Scalar inv = Scalar(1) / m(r, c);
        std::vector<Eigen::Index> support;
        for (Eigen::Index j = c; j < cols; ++j) {
            if (!is_zero(m(r, j))) {
                m(r, j) = m(r, j) * inv;
                support.push_back(j);
            }
        }
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const Scalar f = m(i, c);
            for (Eigen::Index j : support) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

template <class Scalar>
Mat<Scalar> span_of(const Mat<Scalar>& columns) {
    Mat<Scalar> t = columns.transpose();
    const auto piv = rref_inplace(t);
    return t.topRows(static_cast<Eigen::Index>(piv.size())).transpose();
}

template <class Scalar>
int dim_of(const Mat<Scalar>& columns) {
    Mat<Scalar> t = columns.transpose();
    return static_cast<int>(rref_inplace(t).size());
}

template <class Scalar>
Mat<Scalar> kernel_of(const Mat<Scalar>& m) {
    Mat<Scalar> r = m;
    const auto piv = rref_inplace(r);
    const Eigen::Index n = m.cols();
    std::vector<bool> isPivot(static_cast<size_t>(n), false);
    for (int p : piv) isPivot[static_cast<size_t>(p)] = true;
    std::vector<Eigen::Index> freeCols;
    for (Eigen::Index j = 0; j < n; ++j)
        if (!isPivot[static_cast<size_t>(j)]) freeCols.push_back(j);
    Mat<Scalar> k = Mat<Scalar>::Zero(n, static_cast<Eigen::Index>(freeCols.size()));
    for (size_t f = 0; f < freeCols.size(); ++f) {
        const Eigen::Index fc = freeCols[f];
        k(fc, static_cast<Eigen::Index>(f)) = Scalar(1);
        for (size_t i = 0; i < piv.size(); ++i)
            if (!is_zero(r(static_cast<Eigen::Index>(i), fc)))
                k(piv[i], static_cast<Eigen::Index>(f)) = -r(static_cast<Eigen::Index>(i), fc);
    }
    return span_of<Scalar>(k);
}

// Support of a canonical basis whose columns are all standard basis vectors.
template <class Scalar>
std::optional<std::vector<int>> coordinate_support(const Mat<Scalar>& m) {
    static const Scalar one(1);
    std::vector<int> idx;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        int hit = -1;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (is_zero(m(i, j))) continue;
            if (hit >= 0 || m(i, j) != one) return std::nullopt;
            hit = static_cast<int>(i);
        }
        if (hit < 0) return std::nullopt;
        idx.push_back(hit);
    }
    std::sort(idx.begin(), idx.end());
    return idx;
}

template <class Scalar>
Mat<Scalar> coordinate_matrix(Eigen::Index n, const std::vector<int>& idx) {
    Mat<Scalar> m = Mat<Scalar>::Zero(n, static_cast<Eigen::Index>(idx.size()));
    for (size_t k = 0; k < idx.size(); ++k) m(idx[k], static_cast<Eigen::Index>(k)) = Scalar(1);
    return m;
}

template <class Scalar>
Mat<Scalar> sum_of(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    // Fast path: the model filtrations and their conjugates are coordinate subspaces.
    if (auto ia = coordinate_support(a)) {
        if (auto ib = coordinate_support(b)) {
            std::vector<int> u;
            std::set_union(ia->begin(), ia->end(), ib->begin(), ib->end(), std::back_inserter(u));
            return coordinate_matrix<Scalar>(a.rows(), u);
        }
    }
    Mat<Scalar> ab(a.rows(), a.cols() + b.cols());
    ab << a, b;
    return span_of<Scalar>(ab);
}

template <class Scalar>
Mat<Scalar> intersect(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    if (a.cols() == 0 || b.cols() == 0) return Mat<Scalar>::Zero(a.rows(), 0);
    if (auto ia = coordinate_support(a)) {
        if (auto ib = coordinate_support(b)) {
            std::vector<int> u;
            std::set_intersection(ia->begin(), ia->end(), ib->begin(), ib->end(), std::back_inserter(u));
            return coordinate_matrix<Scalar>(a.rows(), u);
        }
    }
    Mat<Scalar> ab(a.rows(), a.cols() + b.cols());
    ab << a, -b;
    const Mat<Scalar> k = kernel_of<Scalar>(ab);
    return span_of<Scalar>(sparse_product<Scalar>(a, k.topRows(a.cols())));
}

template <class Scalar>
Mat<Scalar> image_of(const Mat<Scalar>& op, const Mat<Scalar>& sub) {
    return span_of<Scalar>(sparse_product<Scalar>(op, sub));
}

template <class Scalar>
bool same_subspace(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    const Mat<Scalar> sa = span_of<Scalar>(a), sb = span_of<Scalar>(b);
    return sa.rows() == sb.rows() && sa.cols() == sb.cols() && sa == sb;
}

template <class Scalar>
bool contained_in(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    return dim_of<Scalar>(b) == dim_of<Scalar>(Mat<Scalar>(sum_of<Scalar>(a, b)));
}

// Coordinate subspace spanned by the listed standard basis vectors.
inline ExactMatrix coordinate_subspace(int n, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return coordinate_matrix<GaussRational>(n, idx);
}

// conj(x) = C * conj(coefficients); applied column-wise to a subspace basis.
inline ExactMatrix conj_subspace(const ExactMatrix& conjMatrix, const ExactMatrix& sub) {
    // A monomial conjugation matrix maps coordinate subspaces to coordinate subspaces.
    if (auto idx = coordinate_support(sub)) {
        std::vector<int> image;
        bool monomial = true;
        for (int j : *idx) {
            int hit = -1;
            for (Eigen::Index i = 0; i < conjMatrix.rows() && monomial; ++i)
                if (!is_zero(conjMatrix(i, j))) {
                    if (hit >= 0) monomial = false;
                    hit = static_cast<int>(i);
                }
            if (!monomial || hit < 0) break;
            image.push_back(hit);
        }
        if (monomial && image.size() == idx->size()) return coordinate_subspace(static_cast<int>(sub.rows()), image);
    }
    const ExactMatrix bar = sub.unaryExpr([](const GaussRational& x) { return conj(x); });
    return span_of<GaussRational>(sparse_product<GaussRational>(conjMatrix, bar));
}

}  // namespace hodgepsh
