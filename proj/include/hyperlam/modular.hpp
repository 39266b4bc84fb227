#pragma once

namespace hyperlam {

// Arithmetic-geometric mean of two positive reals.
double agm(double a, double b);

// Complete elliptic integral of the first kind, modulus k in [0,1):
// K(k) = pi / (2 AGM(1, sqrt(1-k^2))).
double elliptic_K(double k);

struct ThetaConstants {
    double theta2;
    double theta3;
    double theta4;
};

// Theta constants at nome q in [0,1):
//   theta2 = 2 sum q^{(n+1/2)^2},  theta3 = 1 + 2 sum q^{n^2},
//   theta4 = 1 + 2 sum (-1)^n q^{n^2}.
// Series are truncated once the next term drops below 1e-16 relative.
ThetaConstants theta_constants(double q);

// Modular lambda at tau = i*y: lambda = (theta2/theta3)^4 with q = exp(-pi y).
double modular_lambda(double tau_imag);

// Im tau for the inversion lambda(tau) = z on the imaginary axis:
// K(sqrt(1-z))/K(sqrt(z)) for z in (0,1).
double tau_imag_for(double z);

}  // namespace hyperlam
