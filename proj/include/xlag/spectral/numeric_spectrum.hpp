#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

#include "xlag/error.hpp"
#include "xlag/spectral/potential.hpp"

namespace xlag {

/// Interior abscissae of a uniform Dirichlet box [x_min, x_max]; the wave
/// function vanishes at both walls.
struct NumericGrid {
    double x_min = 0;
    double x_max = 0;
    int n_points = 0;
    std::vector<double> values;

    static NumericGrid uniform(double x_min, double x_max, int n_points) {
        if (!(x_min > 0) || !(x_max > x_min) || n_points < 3)
            throw SpecInvalid("grid needs 0 < x_min < x_max and at least 3 points");
        NumericGrid g{x_min, x_max, n_points, {}};
        const double h = g.step();
        g.values.reserve(static_cast<std::size_t>(n_points));
        for (int i = 1; i <= n_points; ++i) g.values.push_back(x_min + h * i);
        return g;
    }

    double step() const { return (x_max - x_min) / (n_points + 1); }

    /// Same box with the step halved.
    NumericGrid halved() const { return uniform(x_min, x_max, 2 * n_points + 1); }
};

/// A box that holds the lowest n_levels states of the potential: the wall
/// sits well past the classical turning point of the highest level.
inline NumericGrid default_grid(const ExtendedPotential& v, int n_levels, int n_points = 3000) {
    const double omega = v.base().omega().to_double();
    const double top = omega * (2.0 * (n_levels - 1) + v.base().alpha().to_double() + 1) + std::fabs(v.shift().to_double());
    const double turning = 2 * std::sqrt(top) / omega;
    return NumericGrid::uniform(1e-6 / std::sqrt(omega), turning + 10 / std::sqrt(omega), n_points);
}

/// Lowest eigenvalues of the three-point discretization of -d^2/dx^2 + V.
inline std::vector<double> finite_difference_levels(const ExtendedPotential& v, int n_levels, const NumericGrid& grid) {
    const Eigen::Index n = grid.n_points;
    if (n_levels > n) throw SpecInvalid("more levels requested than grid points");
    const double h = grid.step();
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off = Eigen::VectorXd::Constant(n - 1, -1.0 / (h * h));
    for (Eigen::Index i = 0; i < n; ++i)
        diag(i) = 2.0 / (h * h) + static_cast<double>(v(grid.values[static_cast<std::size_t>(i)]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw SpecInvalid("tridiagonal eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + n_levels);
}

struct SpectrumResult {
    std::vector<double> levels;         ///< on the halved-step grid
    std::vector<double> coarse_levels;  ///< on the given grid
    double halving_change = 0;          ///< relative change of the ground level
};

/// Eigenvalues on the grid and on its step-halved refinement. Throws
/// GridTooCoarse when halving moves the ground level by more than 1e-3
/// relative.
inline SpectrumResult numeric_spectrum_detailed(const ExtendedPotential& v, int n_levels, const NumericGrid& grid) {
    SpectrumResult r;
    r.coarse_levels = finite_difference_levels(v, n_levels, grid);
    r.levels = finite_difference_levels(v, n_levels, grid.halved());
    r.halving_change = std::fabs(r.levels[0] - r.coarse_levels[0]) / std::fabs(r.levels[0]);
    if (!(r.halving_change <= 1e-3))
        throw GridTooCoarse("halving the step moved the ground level by " + std::to_string(r.halving_change));
    return r;
}

inline std::vector<double> numeric_spectrum(const ExtendedPotential& v, int n_levels, const NumericGrid& grid) {
    return numeric_spectrum_detailed(v, n_levels, grid).levels;
}

/// omega (2 nu + alpha + 1) + C, the isospectral expectation.
inline std::vector<double> expected_levels(const ExtendedPotential& v, int n_levels) {
    std::vector<double> out;
    for (int nu = 0; nu < n_levels; ++nu)
        out.push_back((isotonic_spectrum(v.base(), static_cast<unsigned>(nu)) + v.shift()).to_double());
    return out;
}

} // namespace xlag
