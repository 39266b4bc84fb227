#include "hyperlam/mobius.hpp"

#include <cmath>

namespace hyperlam {

MobiusMap::MobiusMap(Complex a_, Complex b_, Complex c_, Complex d_)
    : a(a_), b(b_), c(c_), d(d_)
{
    if (determinant() == Complex{0.0, 0.0})
        throw std::invalid_argument("MobiusMap: ad - bc must be nonzero");
}

ExtendedComplex MobiusMap::operator()(Complex z) const
{
    const Complex den = c * z + d;
    if (den == Complex{0.0, 0.0})
        return ExtendedComplex::infinity();
    return (a * z + b) / den;
}

Complex MobiusMap::derivative(Complex z) const
{
    const Complex den = c * z + d;
    if (den == Complex{0.0, 0.0})
        throw std::domain_error("MobiusMap::derivative: z is the pole of the map");
    return determinant() / (den * den);
}

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2)
{
    return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
            m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

MobiusMap disk_automorphism(Complex zeta)
{
    if (std::abs(zeta) >= 1.0)
        throw std::domain_error("disk_automorphism: |zeta| must be < 1");
    return {1.0, -zeta, -std::conj(zeta), 1.0};
}

Complex joukowski(Complex w)
{
    if (w == Complex{0.0, 0.0})
        throw std::domain_error("joukowski: w = 0 is not in the domain");
    return w + 1.0 / w;
}

Complex joukowski_inverse(Complex z)
{
    if (z.imag() == 0.0 && std::abs(z.real()) <= 2.0)
        throw std::domain_error("joukowski_inverse: z lies on the branch cut [-2,2]");

    // sqrt(z^2-4) as sqrt(z-2)*sqrt(z+2): the principal roots halve both
    // arguments, so the product is continuous off [-2,2] and ~ z at infinity.
    Complex s = std::sqrt(z - 2.0) * std::sqrt(z + 2.0);
    Complex psi = 0.5 * (z + s);
    // The two roots of u^2 - zu + 1 are psi and 1/psi; keep the outer one.
    if (std::abs(psi) < 1.0)
        psi = 0.5 * (z - s);
    return psi;
}

}  // namespace hyperlam
