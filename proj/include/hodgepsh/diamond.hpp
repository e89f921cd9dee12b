#pragma once

#include "hodgepsh/model.hpp"
#include "hodgepsh/wedge.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hodgepsh {

// Increasing filtration W_l, l = lo .. lo + size - 1; below lo it is 0, above it is everything.
struct WeightFiltration {
    int dim{0};
    int lo{0};
    std::vector<ExactMatrix> spaces;
    ExactMatrix at(int l) const;
    int hi() const { return lo + static_cast<int>(spaces.size()) - 1; }
};

// Decreasing filtration F^p, p = lo .. hi; below lo it is everything, above hi it is 0.
struct HodgeFiltration {
    int dim{0};
    int lo{0};
    std::vector<ExactMatrix> spaces;
    ExactMatrix at(int p) const;
    int hi() const { return lo + static_cast<int>(spaces.size()) - 1; }
};

// Monodromy weight filtration of a nilpotent N centred at `center`:
// W_{center+k} = sum_{j >= max(0,-k)} N^j ker N^{k+2j+1}. Throws NotNilpotent.
WeightFiltration weight_filtration(const ExactMatrix& N, int center);

WeightFiltration coordinate_weight_filtration(int dim, const std::vector<std::vector<int>>& levels, int lo = 0);
HodgeFiltration coordinate_hodge_filtration(int dim, const std::vector<std::vector<int>>& levels, int lo = 0);

using Bigrading = std::map<std::pair<int, int>, ExactMatrix>;

// I^{p,q} = F^p ∩ W_{p+q} ∩ (conj F^q ∩ W_{p+q} + sum_{j>=1} conj F^{q-j} ∩ W_{p+q-j-1}).
// Nonzero pieces only. Throws SplittingFailure when the pieces do not form a direct sum.
Bigrading deligne_splitting(const WeightFiltration& W, const HodgeFiltration& F, const ExactMatrix& conj);

enum class SpaceTag { V, H };
std::string space_name(SpaceTag s);
SpaceTag parse_space(const std::string& s);  // throws InvalidInput

struct DiamondTable {
    SpaceTag space{SpaceTag::V};
    int shift{0};                             // added to (p, q) for display
    std::map<std::pair<int, int>, int> entries;  // displayed coordinates, zero dims omitted
    std::map<std::string, std::pair<int, int>> markers;  // displayed coordinates
    int mLabel{0};

    int total() const;
    int at(int p, int q) const;
};

DiamondTable diamond(const DegenerationModel& model, SpaceTag space);

// Filtrations of the model on V and on H = Λ²V (H has weight 4).
WeightFiltration model_weight_filtration(const DegenerationModel& model);
HodgeFiltration model_hodge_filtration(const DegenerationModel& model);
WeightFiltration wedge_weight_filtration(const DegenerationModel& model, const WedgeSpace& space);
HodgeFiltration wedge_hodge_filtration(const DegenerationModel& model, const WedgeSpace& space);

// Reference entries transcribed from the published diagrams (displayed coordinates).
struct MarkedTable {
    std::map<std::pair<int, int>, int> entries;
    std::map<std::string, std::pair<int, int>> markers;
};
MarkedTable marked_table(Kind kind, int h, SpaceTag space);

// Mismatch descriptions; empty when every marked entry, marker, the total dimension,
// the (p,q) <-> (q,p) symmetry and (for H) the Hodge numbers of Λ²V agree.
std::vector<std::string> check_diamond(const DiamondTable& table, const MarkedTable& marked, int h);

std::string diamond_text(const DiamondTable& table);
std::string diamond_csv(const DiamondTable& table);

}  // namespace hodgepsh
