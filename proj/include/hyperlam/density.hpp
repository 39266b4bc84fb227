#pragma once

#include "hyperlam/domain.hpp"
#include "hyperlam/mobius.hpp"

namespace hyperlam {

enum class DensityMethod { closed_form, capacity_reduction, modular, lower_bound };

const char* to_string(DensityMethod method);

// A hyperbolic density value, normalized so that lambda_D(0) = 1 on the unit
// disk (curvature -4 convention).
struct DensityValue {
    double value = 0.0;
    DensityMethod method = DensityMethod::closed_form;
    bool exact = true;  // false for lower bounds and Fekete-backed estimates
    DomainSpec domain = DomainSpec::disk(1.0);
    Complex point = 0.0;
};

// lambda of the disk of radius R: R/(R^2 - |z|^2).
DensityValue density_disk(Complex z, double R);

// lambda of the punctured unit disk: 1/(2|w| log(1/|w|)) for 0 < |w| < 1.
DensityValue density_punctured_disk(Complex w);

// lambda_{D\{a}}(0) = (1-a^2)/(2a log(1/a)) for a in (0,1); the same value
// holds for the puncture at -a.
DensityValue density_one_puncture_at_origin(double a);

// lambda of the twice-punctured plane C\{0,1} at real z in (0,1), through
// the elliptic-modular covering: tau = i K(sqrt(1-z))/K(sqrt(z)), then
// lambda'(tau) = i pi lambda(1-lambda) theta3^4 and density =
// (1/(2 Im tau)) / |lambda'(tau)|.
DensityValue density_thrice_punctured(double z);

struct ModularConstant {
    double m = 0.0;
    double precision = 0.0;  // absolute error bound of the evaluation
};

// m = lambda_{C\{+-1}}(0), computed once as half the C\{0,1} density at 1/2.
const ModularConstant& modular_constant_m();

// Certified lower bound m/a for lambda_{D\{+-a}}(0), a in (0,1/2).
DensityValue punctured_pair_lower_bound(double a);

struct ModularDiagnostics {
    double tau_imag = 0.0;
    double lambda = 0.0;
    double residual = 0.0;  // |lambda(tau) - z| after the AGM inversion
};

ModularDiagnostics modular_inversion_diagnostics(double z);

}  // namespace hyperlam
