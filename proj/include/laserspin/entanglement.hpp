#pragma once

#include "laserspin/evolution.hpp"

namespace laserspin {

/// rho_W = (I - p sigma.sigma) / 4, the singlet-weighted Werner family,
/// PSD for -1/3 <= p <= 1 and entangled for p > 1/3.
DensityMatrix werner_state(double p);

/// rho_0 = (I + alpha (s03 + s30)/2 + beta (s03 - s30)/2) / 4.
/// Diagonal with entries (1+alpha, 1-beta, 1+beta, 1-alpha)/4, so PSD iff
/// |alpha| <= 1 and |beta| <= 1.
DensityMatrix product_state(double alpha, double beta);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4) from the square roots of
/// the spectrum of rho (sy sy) rho* (sy sy).
double wootters_concurrence(const DensityMatrix& rho);

/// l1 - l2 - l3 - l4 before clamping at zero; negative values measure the
/// distance from the entangled set along this witness.
double wootters_margin(const DensityMatrix& rho);

/// Q(t) = sin^2((w/2 + 2g) t) / (w + 4g) + sin^2((w/2 - 2g) t) / (w - 4g);
/// a vanishing denominator is replaced by its Taylor limit.
double q_factor(double t, double omega_L, double g);

/// max(0, 4 eta |beta g Delta Q(t)| - sqrt(1 - alpha^2)), g being the
/// coefficient of sigma.sigma in H_I.
double concurrence_product_analytic(double t, double alpha, double beta, double eta, double g,
                                    double delta, double omega_L);

/// max(0, (3p - 1) / 2)
double concurrence_werner_analytic(double p);

}  // namespace laserspin
