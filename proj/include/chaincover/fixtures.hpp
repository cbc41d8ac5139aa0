#pragma once

#include "chaincover/space.hpp"

namespace chaincover::fixtures {

// Five points on a line at unit spacing, basepoint 0.
FiniteSpace p5();

// Vertices of the regular unit-side hexagon. The pairwise distances are
// 1, sqrt(3), 2, so the space is built from the exact squared table.
FiniteSpace hex();

// Uniform 1-D grid from lo to hi; the basepoint is the point at
// coordinate 0, which must lie on the grid.
FiniteSpace grid(const Rational& step, const Rational& lo, const Rational& hi);

// The interval set (-1,1) u (2,4) u (-4,-2) driving the built-in grid demo.
std::vector<OpenInterval> demo_intervals();

}  // namespace chaincover::fixtures
