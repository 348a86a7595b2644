#pragma once

#include "uniorb/fan.hpp"

#include <optional>
#include <vector>

namespace uniorb {

/// Positive rays forming a lattice basis with every other ray in the closed
/// negative orthant of that basis.
struct BilateralStructure {
    RaySet positive;     // ε_1..ε_n, in ε order
    RaySet negative;     // τ_1..τ_k, ascending ray index
    IntMat dual_basis;   // row i is e^i
    IntMat basis;        // column i is e_i

    /// Coordinates of a lattice vector in the positive basis.
    IntVec coordinates(const IntVec& v) const { return dual_basis * v; }

    /// Lattice vector with the given positive-basis coordinates.
    IntVec from_coordinates(const IntVec& c) const { return basis * c; }

    bool is_positive(std::size_t ray) const {
        return std::find(positive.begin(), positive.end(), ray) != positive.end();
    }
    /// Position of a positive ray in the ε order.
    std::optional<std::size_t> position(std::size_t ray) const {
        auto it = std::find(positive.begin(), positive.end(), ray);
        if (it == positive.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - positive.begin());
    }
    std::optional<std::size_t> negative_index(std::size_t ray) const {
        auto it = std::lower_bound(negative.begin(), negative.end(), ray);
        if (it == negative.end() || *it != ray)
            return std::nullopt;
        return static_cast<std::size_t>(it - negative.begin());
    }
};

/// Checks one candidate ordering of positive rays.
inline std::optional<BilateralStructure> bilateral_from(const Fan& fan, const RaySet& positive_in_order) {
    const std::size_t n = fan.dim();
    if (positive_in_order.size() != n)
        return std::nullopt;
    std::vector<IntVec> cols;
    for (std::size_t r : positive_in_order) {
        if (r >= fan.ray_count())
            return std::nullopt;
        cols.push_back(fan.ray(r));
    }
    IntMat basis = IntMat::from_columns(cols, n);
    BigInt det = determinant(basis);
    if (det != 1 && det != -1)
        return std::nullopt;
    IntMat dual = invert_unimodular(basis);

    RaySet sorted = positive_in_order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    RaySet negative;
    for (std::size_t r = 0; r < fan.ray_count(); ++r) {
        if (std::binary_search(sorted.begin(), sorted.end(), r))
            continue;
        IntVec c = dual * fan.ray(r);
        for (const auto& x : c)
            if (x > 0)
                return std::nullopt;
        negative.push_back(r);
    }
    return BilateralStructure{positive_in_order, std::move(negative), std::move(dual), std::move(basis)};
}

namespace detail {

template <class Visit>
bool for_each_combination(std::size_t total, std::size_t choose, RaySet& current, std::size_t start, Visit& visit) {
    if (current.size() == choose)
        return visit(current);
    for (std::size_t i = start; i + (choose - current.size()) <= total; ++i) {
        current.push_back(i);
        bool go_on = for_each_combination(total, choose, current, i + 1, visit);
        current.pop_back();
        if (!go_on)
            return false;
    }
    return true;
}

} // namespace detail

/// First bilateral witness in lexicographic order of ray-index subsets;
/// positive rays are ordered by ascending ray index.
inline std::optional<BilateralStructure> find_bilateral(const Fan& fan) {
    std::optional<BilateralStructure> found;
    RaySet current;
    auto visit = [&](const RaySet& subset) {
        found = bilateral_from(fan, subset);
        return !found.has_value();
    };
    detail::for_each_combination(fan.ray_count(), fan.dim(), current, 0, visit);
    return found;
}

/// Every bilateral witness, including every ordering of each positive set.
inline std::vector<BilateralStructure> all_bilateral(const Fan& fan) {
    std::vector<BilateralStructure> out;
    RaySet current;
    auto visit = [&](const RaySet& subset) {
        if (auto first = bilateral_from(fan, subset)) {
            RaySet perm = subset;
            do {
                out.push_back(*bilateral_from(fan, perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return true;
    };
    detail::for_each_combination(fan.ray_count(), fan.dim(), current, 0, visit);
    return out;
}

} // namespace uniorb
