#include "laserspin/kernels.hpp"

#include <exception>
#include <mutex>

#include "laserspin/entanglement.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace laserspin {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::mutex guard;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      const std::lock_guard<std::mutex> lock(guard);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

namespace {

int threads_for(Execution exec) {
  if (exec == Execution::serial) return 1;
#ifdef _OPENMP
  return omp_get_max_threads() > 1 ? omp_get_max_threads() : 2;
#else
  return 1;
#endif
}

}  // namespace

std::vector<double> residual_profile(std::span<const double> times, const LaserParams& laser,
                                     const KinematicParams& kin, Dynamics dynamics,
                                     Execution exec) {
  std::vector<double> out(times.size());
  parallel_for(times.size(), threads_for(exec), [&](std::size_t i) {
    out[i] = equation_residual(times[i], laser, kin, dynamics);
  });
  return out;
}

std::vector<double> concurrence_profile(std::span<const DensityMatrix> states, Execution exec) {
  std::vector<double> out(states.size());
  parallel_for(states.size(), threads_for(exec),
               [&](std::size_t i) { out[i] = wootters_concurrence(states[i]); });
  return out;
}

std::vector<Mat4> hamiltonian_table(std::span<const double> times,
                                    const SpinHamiltonianSource& source, Execution exec) {
  std::vector<Mat4> out(times.size());
  parallel_for(times.size(), threads_for(exec), [&](std::size_t i) { out[i] = source(times[i]); });
  return out;
}

std::vector<double> uniform_grid(double t_end, std::size_t n) {
  if (n < 2) throw DomainError("uniform grid needs at least two points");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = t_end * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  grid.back() = t_end;
  return grid;
}

}  // namespace laserspin
