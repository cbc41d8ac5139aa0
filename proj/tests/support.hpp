#pragma once

#include <random>
#include <vector>

#include "chaincover/fixtures.hpp"
#include "chaincover/space.hpp"

namespace testsupport {

using namespace chaincover;

using Rng = std::mt19937_64;

// Random exact-decimal 1-D space: n points on a quarter-integer grid.
inline FiniteSpace random_line_space(Rng& rng, int max_points = 7) {
    std::uniform_int_distribution<int> npts(1, max_points);
    int n = npts(rng);
    std::uniform_int_distribution<int> quarter(-20, 20);
    std::vector<std::vector<Rational>> coords;
    for (int i = 0; i < n; ++i)
        coords.push_back({Rational(quarter(rng), 4)});
    std::uniform_int_distribution<int> base(0, n - 1);
    return FiniteSpace::from_points(std::move(coords), base(rng));
}

// Random symmetric relation over a bare n-point space.
inline Entourage random_relation(Rng& rng, const FiniteSpace& space,
                                 double density = 0.4) {
    std::bernoulli_distribution keep(density);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < space.size(); ++i)
        for (int j = i + 1; j < space.size(); ++j)
            if (keep(rng)) pairs.emplace_back(i, j);
    return entourage_from_pairs(space, pairs);
}

// Grid point id for an exact coordinate; -1 if absent.
inline int grid_id(const FiniteSpace& space, const Rational& x) {
    for (int i = 0; i < space.size(); ++i)
        if (space.coords(i)[0] == x) return i;
    return -1;
}

}  // namespace testsupport
