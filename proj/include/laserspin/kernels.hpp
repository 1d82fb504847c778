#pragma once

// Data-parallel grid kernels. Each kernel has a serial reference path and an
// OpenMP path; both produce bit-identical results because every grid point
// is evaluated independently and written to its own slot.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "laserspin/evolution.hpp"
#include "laserspin/spinfield.hpp"
#include "laserspin/trajectory.hpp"

namespace laserspin {

enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, n) on up to `jobs` OpenMP threads with dynamic
/// scheduling. jobs <= 1 runs serially. The first exception thrown by any
/// index is rethrown after the loop.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

std::vector<double> residual_profile(std::span<const double> times, const LaserParams& laser,
                                     const KinematicParams& kin, Dynamics dynamics,
                                     Execution exec);

std::vector<double> concurrence_profile(std::span<const DensityMatrix> states, Execution exec);

std::vector<Mat4> hamiltonian_table(std::span<const double> times,
                                    const SpinHamiltonianSource& source, Execution exec);

/// Uniform grid of n points on [0, t_end], endpoints included.
std::vector<double> uniform_grid(double t_end, std::size_t n);

}  // namespace laserspin
