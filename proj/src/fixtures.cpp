#include "chaincover/fixtures.hpp"

#include <stdexcept>

namespace chaincover::fixtures {

FiniteSpace p5() {
    std::vector<std::vector<Rational>> coords;
    for (int i = 0; i < 5; ++i) coords.push_back({Rational(i)});
    return FiniteSpace::from_points(std::move(coords), 0);
}

FiniteSpace hex() {
    std::vector<std::vector<Rational>> sq(6, std::vector<Rational>(6, 0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int d = std::abs(i - j);
            d = std::min(d, 6 - d);
            if (d == 1) sq[i][j] = 1;
            if (d == 2) sq[i][j] = 3;
            if (d == 3) sq[i][j] = 4;
        }
    return FiniteSpace::from_distance_table(sq, 0, /*squared=*/true);
}

FiniteSpace grid(const Rational& step, const Rational& lo, const Rational& hi) {
    if (step <= 0 || lo > hi) throw std::invalid_argument("bad grid parameters");
    std::vector<std::vector<Rational>> coords;
    int basepoint = -1;
    for (Rational x = lo; x <= hi; x += step) {
        if (x == 0) basepoint = static_cast<int>(coords.size());
        coords.push_back({x});
    }
    if (basepoint < 0)
        throw std::invalid_argument("grid does not contain coordinate 0");
    return FiniteSpace::from_points(std::move(coords), basepoint);
}

std::vector<OpenInterval> demo_intervals() {
    return {{Rational(-1), Rational(1)},
            {Rational(2), Rational(4)},
            {Rational(-4), Rational(-2)}};
}

}  // namespace chaincover::fixtures
