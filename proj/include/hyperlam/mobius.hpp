#pragma once

#include <complex>
#include <stdexcept>

namespace hyperlam {

using Complex = std::complex<double>;

// A point of the Riemann sphere: either a finite complex number or infinity.
// Mobius maps are total on the sphere, so pole images get a real value
// instead of NaN.
class ExtendedComplex {
  public:
    ExtendedComplex(Complex value) : value_(value) {}
    ExtendedComplex(double value) : value_(value) {}

    static ExtendedComplex infinity()
    {
        ExtendedComplex e{Complex{}};
        e.infinite_ = true;
        return e;
    }

    bool is_infinity() const { return infinite_; }

    // The finite value; throws if this is the point at infinity.
    Complex finite() const
    {
        if (infinite_)
            throw std::domain_error("ExtendedComplex: value is the point at infinity");
        return value_;
    }

  private:
    Complex value_;
    bool infinite_ = false;
};

// z -> (az + b)/(cz + d) with ad - bc != 0.
struct MobiusMap {
    Complex a, b, c, d;

    MobiusMap(Complex a_, Complex b_, Complex c_, Complex d_);

    static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex determinant() const { return a * d - b * c; }

    // Image of a finite point; the pole (cz + d = 0) maps to infinity.
    ExtendedComplex operator()(Complex z) const;

    // (ad - bc)/(cz + d)^2; throws at the pole.
    Complex derivative(Complex z) const;

    MobiusMap inverse() const { return {d, -b, -c, a}; }
};

// Composition: (m1 ∘ m2)(z) = m1(m2(z)).
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);

// The disk automorphism w -> (w - zeta)/(1 - conj(zeta) w), zeta -> 0.
// Requires |zeta| < 1.
MobiusMap disk_automorphism(Complex zeta);

// J(w) = w + 1/w. Maps {|w|>1} conformally onto the complement of [-2,2].
Complex joukowski(Complex w);

inline constexpr double joukowski_derivative_at_infinity = 1.0;

// Inverse branch Psi(z) = (z + sqrt(z^2-4))/2 with |Psi(z)| > 1 and
// Psi(z) ~ z at infinity. Throws for z on the cut [-2,2].
Complex joukowski_inverse(Complex z);

}  // namespace hyperlam
