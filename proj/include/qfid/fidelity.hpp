#pragma once

#include <utility>

#include "qfid/states.hpp"

namespace qfid {

// Tr |sqrt(sigma) sqrt(rho)|, clamped to [0, 1]. Numerically preferable to the
// nested-root form, which fidelity_sandwich keeps as a cross-check route.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Tr sqrt(sqrt(rho) sigma sqrt(rho)); independent route used by tests.
double fidelity_sandwich(const DensityMatrix& rho, const DensityMatrix& sigma);

// arccos of the clamped fidelity; a metric on states.
double bures_angle(const DensityMatrix& rho, const DensityMatrix& sigma);

// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

struct FidelityReport {
  double fidelity = 0;
  double bures_angle = 0;
  double trace_distance = 0;
  bool lower_bound_ok = false;  // 1 - F <= D + 1e-9
  bool upper_bound_ok = false;  // D <= sqrt(1 - F^2) + 1e-9
};

FidelityReport check_bounds(const DensityMatrix& rho, const DensityMatrix& sigma);

// Purifications psi of rho and phi of sigma with |<psi|phi>| equal to the
// fidelity: psi is the canonical purification; phi carries the polar unitary
// of sqrt(sigma) sqrt(rho) on its ancilla. Requires ancilla_dim >= dim.
std::pair<Purification, Purification> uhlmann_optimal_purifications(
    const DensityMatrix& rho, const DensityMatrix& sigma, Index ancilla_dim);

Complex purification_overlap(const Purification& a, const Purification& b);

}  // namespace qfid
