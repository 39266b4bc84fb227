#include "hyperlam/density.hpp"

#include <cmath>
#include <numbers>

#include "hyperlam/modular.hpp"

namespace hyperlam {

const char* to_string(DensityMethod method)
{
    switch (method) {
        case DensityMethod::closed_form: return "closed-form";
        case DensityMethod::capacity_reduction: return "capacity-reduction";
        case DensityMethod::modular: return "modular";
        case DensityMethod::lower_bound: return "lower-bound";
    }
    return "unknown";
}

DensityValue density_disk(Complex z, double R)
{
    if (!(R > 0.0))
        throw std::domain_error("density_disk: R must be positive");
    if (!(std::abs(z) < R))
        throw std::domain_error("density_disk: point lies outside the disk");
    return {R / (R * R - std::norm(z)), DensityMethod::closed_form, true,
            DomainSpec::disk(R), z};
}

DensityValue density_punctured_disk(Complex w)
{
    const double r = std::abs(w);
    if (!(r > 0.0) || !(r < 1.0))
        throw std::domain_error("density_punctured_disk: need 0 < |w| < 1");
    return {1.0 / (2.0 * r * std::log(1.0 / r)), DensityMethod::closed_form, true,
            DomainSpec::disk_minus_punctures(1.0, {Complex{0.0, 0.0}}), w};
}

DensityValue density_one_puncture_at_origin(double a)
{
    if (!(a > 0.0) || !(a < 1.0))
        throw std::domain_error("density_one_puncture_at_origin: need a in (0,1)");
    return {(1.0 - a * a) / (2.0 * a * std::log(1.0 / a)), DensityMethod::closed_form, true,
            DomainSpec::disk_minus_punctures(1.0, {Complex{a, 0.0}}), 0.0};
}

namespace {

// Density of C\{0,1} at z in (0,1/2]; Im tau >= 1 holds on this half.
double thrice_punctured_value(double z)
{
    const double y = tau_imag_for(z);
    const double q = std::exp(-std::numbers::pi * y);
    const ThetaConstants t = theta_constants(q);
    const double t3_4 = std::pow(t.theta3, 4);
    const double lambda = std::pow(t.theta2 / t.theta3, 4);
    const double dlambda = std::numbers::pi * lambda * (1.0 - lambda) * t3_4;
    return (1.0 / (2.0 * y)) / dlambda;
}

}  // namespace

DensityValue density_thrice_punctured(double z)
{
    if (!(z > 0.0) || !(z < 1.0))
        throw std::domain_error("density_thrice_punctured: need real z in (0,1)");
    // the domain is symmetric under z -> 1-z; evaluate on (0,1/2]
    const double value = thrice_punctured_value(z <= 0.5 ? z : 1.0 - z);
    return {value, DensityMethod::modular, true,
            DomainSpec::plane_minus_punctures({Complex{0.0, 0.0}, Complex{1.0, 0.0}}),
            Complex{z, 0.0}};
}

ModularDiagnostics modular_inversion_diagnostics(double z)
{
    if (!(z > 0.0) || !(z < 1.0))
        throw std::domain_error("modular_inversion_diagnostics: need z in (0,1)");
    ModularDiagnostics d;
    d.tau_imag = tau_imag_for(z);
    d.lambda = modular_lambda(d.tau_imag);
    d.residual = std::abs(d.lambda - z);
    return d;
}

const ModularConstant& modular_constant_m()
{
    // w -> (w+1)/2 maps C\{+-1} onto C\{0,1} with derivative 1/2 and 0 -> 1/2.
    static const ModularConstant constant{0.5 * density_thrice_punctured(0.5).value, 1e-12};
    return constant;
}

DensityValue punctured_pair_lower_bound(double a)
{
    if (!(a > 0.0) || !(a < 0.5))
        throw std::domain_error("punctured_pair_lower_bound: need a in (0,1/2)");
    return {modular_constant_m().m / a, DensityMethod::lower_bound, false,
            DomainSpec::disk_minus_punctures(1.0, {Complex{a, 0.0}, Complex{-a, 0.0}}), 0.0};
}

}  // namespace hyperlam
