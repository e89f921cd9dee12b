#include "hodgepsh/diamond.hpp"

#include "hodgepsh/errors.hpp"
#include "hodgepsh/exact_linalg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hodgepsh {

namespace {

ExactMatrix zero_space(int dim) { return ExactMatrix::Zero(dim, 0); }
ExactMatrix full_space(int dim) { return ExactMatrix::Identity(dim, dim); }

bool is_zero_matrix(const ExactMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (!is_zero(m.data()[i])) return false;
    return true;
}

}  // namespace

ExactMatrix WeightFiltration::at(int l) const {
    if (l < lo) return zero_space(dim);
    if (l > hi()) return full_space(dim);
    return spaces[static_cast<size_t>(l - lo)];
}

ExactMatrix HodgeFiltration::at(int p) const {
    if (p < lo) return full_space(dim);
    if (p > hi()) return zero_space(dim);
    return spaces[static_cast<size_t>(p - lo)];
}

WeightFiltration weight_filtration(const ExactMatrix& N, int center) {
    const int dim = static_cast<int>(N.rows());
    if (N.cols() != dim) throw DimensionError("weight_filtration needs a square operator");
    // powers[j] = N^j until it vanishes
    std::vector<ExactMatrix> powers{ExactMatrix::Identity(dim, dim)};
    while (!is_zero_matrix(powers.back())) {
        if (static_cast<int>(powers.size()) > dim) throw NotNilpotent("N^" + std::to_string(dim) + " != 0");
        powers.push_back(sparse_product<GaussRational>(powers.back(), N));
    }
    const int n = static_cast<int>(powers.size()) - 1;  // N^n = 0, N^(n-1) != 0
    auto power = [&](int j) { return j <= n ? powers[static_cast<size_t>(j)] : ExactMatrix(ExactMatrix::Zero(dim, dim)); };

    WeightFiltration W;
    W.dim = dim;
    W.lo = center - n;
    for (int k = -n; k <= n; ++k) {
        ExactMatrix acc = zero_space(dim);
        for (int j = std::max(0, -k); j < n; ++j) {
            const ExactMatrix ker = kernel_of<GaussRational>(power(k + 2 * j + 1));
            if (ker.cols() == 0) continue;
            acc = sum_of<GaussRational>(acc, image_of<GaussRational>(power(j), ker));
        }
        W.spaces.push_back(span_of<GaussRational>(acc));
    }
    return W;
}

WeightFiltration coordinate_weight_filtration(int dim, const std::vector<std::vector<int>>& levels, int lo) {
    WeightFiltration W;
    W.dim = dim;
    W.lo = lo;
    for (const auto& idx : levels) W.spaces.push_back(coordinate_subspace(dim, idx));
    return W;
}

HodgeFiltration coordinate_hodge_filtration(int dim, const std::vector<std::vector<int>>& levels, int lo) {
    HodgeFiltration F;
    F.dim = dim;
    F.lo = lo;
    for (const auto& idx : levels) F.spaces.push_back(coordinate_subspace(dim, idx));
    return F;
}

Bigrading deligne_splitting(const WeightFiltration& W, const HodgeFiltration& F, const ExactMatrix& conj) {
    const int dim = W.dim;
    if (F.dim != dim || conj.rows() != dim) throw DimensionError("deligne_splitting: inconsistent dimensions");
    std::vector<ExactMatrix> Fbar;
    for (const auto& s : F.spaces) Fbar.push_back(conj_subspace(conj, s));
    auto fbar = [&](int q) {
        if (q < F.lo) return full_space(dim);
        if (q > F.hi()) return zero_space(dim);
        return Fbar[static_cast<size_t>(q - F.lo)];
    };

    Bigrading out;
    int total = 0;
    ExactMatrix all = zero_space(dim);
    for (int p = F.lo; p <= F.hi(); ++p)
        for (int q = F.lo; q <= F.hi(); ++q) {
            const int l = p + q;
            const ExactMatrix Wl = W.at(l);
            if (Wl.cols() == 0) continue;
            const ExactMatrix left = intersect<GaussRational>(F.at(p), Wl);
            if (left.cols() == 0) continue;
            ExactMatrix right = intersect<GaussRational>(fbar(q), Wl);
            for (int j = 1; l - j - 1 >= W.lo; ++j) {
                const ExactMatrix Wj = W.at(l - j - 1);
                if (Wj.cols() == 0) break;
                right = sum_of<GaussRational>(right, intersect<GaussRational>(fbar(q - j), Wj));
            }
            const ExactMatrix piece = intersect<GaussRational>(left, right);
            if (piece.cols() == 0) continue;
            total += static_cast<int>(piece.cols());
            all = sum_of<GaussRational>(all, piece);
            out.emplace(std::make_pair(p, q), piece);
        }
    if (total != dim || all.cols() != dim) {
        std::ostringstream os;
        os << "pieces have total dimension " << total << ", span " << all.cols() << ", ambient " << dim;
        throw SplittingFailure(os.str());
    }
    return out;
}

std::string space_name(SpaceTag s) { return s == SpaceTag::V ? "V" : "H"; }

SpaceTag parse_space(const std::string& s) {
    if (s == "V" || s == "v") return SpaceTag::V;
    if (s == "H" || s == "h") return SpaceTag::H;
    throw InvalidInput("unknown space '" + s + "' (expected V or H)");
}

int DiamondTable::total() const {
    int t = 0;
    for (const auto& [pq, d] : entries) t += d;
    return t;
}

int DiamondTable::at(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

WeightFiltration model_weight_filtration(const DegenerationModel& model) {
    return coordinate_weight_filtration(model.dimV, {model.W.begin(), model.W.end()});
}

HodgeFiltration model_hodge_filtration(const DegenerationModel& model) {
    return coordinate_hodge_filtration(model.dimV, {model.F.begin(), model.F.end()});
}

WeightFiltration wedge_weight_filtration(const DegenerationModel& model, const WedgeSpace& space) {
    std::vector<std::vector<int>> levels;
    for (int l = 0; l <= 8; ++l) levels.push_back(wedge_W_indices(model, space, l));
    return coordinate_weight_filtration(space.dimH, levels);
}

HodgeFiltration wedge_hodge_filtration(const DegenerationModel& model, const WedgeSpace& space) {
    std::vector<std::vector<int>> levels;
    for (int p = 0; p <= 4; ++p) levels.push_back(wedge_F_indices(model, space, p));
    return coordinate_hodge_filtration(space.dimH, levels);
}

DiamondTable diamond(const DegenerationModel& model, SpaceTag space) {
    DiamondTable t;
    t.space = space;
    t.mLabel = model.mLabel;
    if (space == SpaceTag::V) {
        const auto split = deligne_splitting(model_weight_filtration(model), model_hodge_filtration(model), model.conj);
        for (const auto& [pq, sub] : split) t.entries[pq] = static_cast<int>(sub.cols());
        return t;
    }
    t.shift = -2;
    const WedgeSpace ws = wedge_space(model);
    const auto split =
        deligne_splitting(wedge_weight_filtration(model, ws), wedge_hodge_filtration(model, ws), ws.conj);
    for (const auto& [pq, sub] : split) t.entries[{pq.first - 2, pq.second - 2}] = static_cast<int>(sub.cols());
    const std::pair<const char*, BasisPair> named[] = {{"e0", model.e0}, {"einf", model.einf}, {"ed", model.ed}};
    for (const auto& [name, pair] : named) {
        const ExactMatrix v = ws.decomposable(pair);
        for (const auto& [pq, sub] : split)
            if (contained_in<GaussRational>(v, sub)) {
                t.markers[name] = {pq.first - 2, pq.second - 2};
                break;
            }
    }
    return t;
}

MarkedTable marked_table(Kind kind, int h, SpaceTag space) {
    using E = std::map<std::pair<int, int>, int>;
    MarkedTable m;
    const bool V = space == SpaceTag::V;
    switch (kind) {
        case Kind::Interior:
            if (V) m.entries = E{{{0, 2}, 2}, {{1, 1}, h}, {{2, 0}, 2}};
            else {
                m.entries = E{{{-2, 2}, 1}, {{-1, 1}, 2 * h}, {{1, -1}, 2 * h}, {{2, -2}, 1}};
                m.markers = {{"ed", {-2, 2}}, {"e0", {2, -2}}, {"einf", {2, -2}}};
            }
            break;
        case Kind::Minimal:
            if (V)
                m.entries = E{{{0, 2}, 1}, {{0, 1}, 1}, {{1, 2}, 1}, {{1, 1}, h - 2},
                              {{1, 0}, 1}, {{2, 1}, 1}, {{2, 0}, 1}};
            else {
                m.entries = E{{{-2, 1}, 1}, {{-1, 2}, 1}, {{-1, 0}, h - 1}, {{-1, -1}, 1},
                              {{1, 1}, 1},  {{1, -2}, 1}, {{2, -1}, 1}};
                m.markers = {{"ed", {-2, 1}}, {"einf", {1, -2}}, {"e0", {2, -1}}};
            }
            break;
        case Kind::Second:
        case Kind::Third:
            if (V) {
                if (kind == Kind::Second)
                    m.entries = E{{{0, 2}, 1}, {{0, 0}, 1}, {{1, 1}, h}, {{2, 2}, 1}, {{2, 0}, 1}};
                else
                    m.entries = E{{{0, 1}, 2}, {{1, 2}, 2}, {{1, 1}, h - 4}, {{1, 0}, 2}, {{2, 1}, 2}};
            } else {
                const int mid = kind == Kind::Second ? h : 4;
                m.entries = E{{{2, 0}, 1},  {{0, 2}, 1},    {{1, 1}, mid}, {{1, -1}, mid}, {{-1, 1}, mid},
                              {{-1, -1}, mid}, {{0, -2}, 1}, {{-2, 0}, 1}};
                m.markers = {{"e0", {2, 0}}, {"einf", {0, -2}}, {"ed", {-2, 0}}};
            }
            break;
        case Kind::Fourth:
            if (V)
                m.entries = E{{{0, 1}, 1}, {{0, 0}, 1}, {{1, 2}, 1}, {{1, 1}, h - 2},
                              {{1, 0}, 1}, {{2, 2}, 1}, {{2, 1}, 1}};
            else {
                m.entries = E{{{2, 1}, 1},  {{1, 2}, 1},   {{-1, 1}, 1},
                              {{-1, 0}, h - 1}, {{-1, -2}, 1}, {{-2, -1}, 1}};
                m.markers = {{"e0", {2, 1}}, {"einf", {-1, -2}}, {"ed", {-2, -1}}};
            }
            break;
        case Kind::HodgeTate:
            if (V) m.entries = E{{{0, 0}, 2}, {{1, 1}, h}, {{2, 2}, 2}};
            else {
                m.entries = E{{{-2, -2}, 1}, {{-1, -1}, 2 * h}, {{1, 1}, 2 * h}, {{2, 2}, 1}};
                m.markers = {{"ed", {-2, -2}}, {"einf", {-2, -2}}, {"e0", {2, 2}}};
            }
            break;
    }
    return m;
}

std::vector<std::string> check_diamond(const DiamondTable& t, const MarkedTable& marked, int h) {
    std::vector<std::string> bad;
    auto pos = [](std::pair<int, int> pq) {
        return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
    };
    for (const auto& [pq, d] : marked.entries)
        if (t.at(pq.first, pq.second) != d)
            bad.push_back("entry " + pos(pq) + ": computed " + std::to_string(t.at(pq.first, pq.second)) +
                          ", expected " + std::to_string(d));
    for (const auto& [name, pq] : marked.markers) {
        auto it = t.markers.find(name);
        if (it == t.markers.end()) bad.push_back("marker " + name + " not in a single piece");
        else if (it->second != pq)
            bad.push_back("marker " + name + " at " + pos(it->second) + ", expected " + pos(pq));
    }
    for (const auto& [pq, d] : t.entries)
        if (t.at(pq.second, pq.first) != d) bad.push_back("asymmetric entry " + pos(pq));
    const int dimV = h + 4;
    const int expected = t.space == SpaceTag::V ? dimV : dimV * (dimV - 1) / 2;
    if (t.total() != expected)
        bad.push_back("total " + std::to_string(t.total()) + ", expected " + std::to_string(expected));
    if (t.space == SpaceTag::H) {
        const int hodge[5] = {1, 2 * h, h * (h - 1) / 2 + 4, 2 * h, 1};
        for (int p = 0; p <= 4; ++p) {
            int sum = 0;
            for (const auto& [pq, d] : t.entries)
                if (pq.first == p - 2) sum += d;
            if (sum != hodge[p])
                bad.push_back("Hodge number " + std::to_string(p) + ": " + std::to_string(sum) + ", expected " +
                              std::to_string(hodge[p]));
        }
    }
    return bad;
}

std::string diamond_text(const DiamondTable& t) {
    int lo = 0, hi = 0;
    for (const auto& [pq, d] : t.entries) {
        lo = std::min({lo, pq.first, pq.second});
        hi = std::max({hi, pq.first, pq.second});
    }
    std::ostringstream os;
    os << "space " << space_name(t.space) << " (shift " << t.shift << ")\n";
    os << "q\\p";
    for (int p = lo; p <= hi; ++p) os << std::setw(5) << p;
    os << "\n";
    for (int q = hi; q >= lo; --q) {
        os << std::setw(3) << q;
        for (int p = lo; p <= hi; ++p) {
            const int d = t.at(p, q);
            if (d == 0) os << std::setw(5) << ".";
            else os << std::setw(5) << d;
        }
        os << "\n";
    }
    for (const auto& [name, pq] : t.markers) os << name << " at (" << pq.first << "," << pq.second << ")\n";
    return os.str();
}

std::string diamond_csv(const DiamondTable& t) {
    std::ostringstream os;
    os << "space,p,q,dim\n";
    for (const auto& [pq, d] : t.entries) os << space_name(t.space) << "," << pq.first << "," << pq.second << "," << d << "\n";
    return os.str();
}

}  // namespace hodgepsh
