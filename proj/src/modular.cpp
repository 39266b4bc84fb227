#include "hyperlam/modular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperlam {

double agm(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("agm: arguments must be positive");
    while (std::abs(a - b) > a * 1e-17) {
        const double mid = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = mid;
    }
    return 0.5 * (a + b);
}

double elliptic_K(double k)
{
    if (!(k >= 0.0) || k >= 1.0)
        throw std::domain_error("elliptic_K: modulus must lie in [0,1)");
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    return std::numbers::pi / (2.0 * agm(1.0, kp));
}

ThetaConstants theta_constants(double q)
{
    if (!(q >= 0.0) || q >= 1.0)
        throw std::runtime_error("theta_constants: nome must lie in [0,1)");

    // theta2 = 2 q^{1/4} sum_{n>=0} q^{n(n+1)}
    double sum2 = 0.0;
    double term = 1.0;  // q^{n(n+1)} at n = 0
    for (int n = 0; n < 64; ++n) {
        sum2 += term;
        term *= std::pow(q, 2 * (n + 1));  // q^{(n+1)(n+2)} / q^{n(n+1)} = q^{2(n+1)}
        if (term < 1e-16 * sum2)
            break;
    }
    const double theta2 = 2.0 * std::pow(q, 0.25) * sum2;

    double sum3 = 0.0;
    double sum4 = 0.0;
    double qn2 = 1.0;
    for (int n = 1; n < 64; ++n) {
        qn2 *= std::pow(q, 2 * n - 1);  // q^{n^2} = q^{(n-1)^2} * q^{2n-1}
        sum3 += qn2;
        sum4 += (n % 2 == 0 ? qn2 : -qn2);
        if (qn2 < 1e-16 * (1.0 + 2.0 * sum3))
            break;
    }
    return {theta2, 1.0 + 2.0 * sum3, 1.0 + 2.0 * sum4};
}

double modular_lambda(double tau_imag)
{
    if (!(tau_imag > 0.0))
        throw std::runtime_error("modular_lambda: Im tau must be positive");
    const double q = std::exp(-std::numbers::pi * tau_imag);
    const ThetaConstants t = theta_constants(q);
    const double r = t.theta2 / t.theta3;
    return r * r * r * r;
}

double tau_imag_for(double z)
{
    if (!(z > 0.0) || !(z < 1.0))
        throw std::domain_error("tau_imag_for: z must lie in (0,1)");
    return elliptic_K(std::sqrt(1.0 - z)) / elliptic_K(std::sqrt(z));
}

}  // namespace hyperlam
