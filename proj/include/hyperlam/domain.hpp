#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperlam/capacity.hpp"
#include "hyperlam/mobius.hpp"

namespace hyperlam {

struct parse_error : std::runtime_error {
    parse_error(const std::string& message, std::size_t position_)
        : std::runtime_error(message), position(position_)
    {
    }
    std::size_t position;
};

enum class DomainKind {
    disk,
    disk_minus_punctures,
    disk_minus_radial_slits,
    disk_mixed,  // punctures and slits together: parseable, not computable
    plane_minus_punctures,
};

const char* to_string(DomainKind kind);

// Radial slit [inner * direction, R * direction): reaches the boundary.
struct RadialSlit {
    Complex direction;  // unit modulus
    double inner;
};

// Symbolic description of the supported hyperbolic domains: a disk of radius
// R minus punctures and/or radial slits, or the plane minus >= 2 punctures.
class DomainSpec {
  public:
    static DomainSpec disk(double radius);
    static DomainSpec disk_minus_punctures(double radius, std::vector<Complex> punctures);
    static DomainSpec disk_minus_slits(double radius, std::vector<RadialSlit> slits);
    static DomainSpec disk_domain(double radius, std::vector<Complex> punctures,
                                  std::vector<RadialSlit> slits);
    static DomainSpec plane_minus_punctures(std::vector<Complex> punctures);

    DomainKind kind() const;
    bool is_plane() const { return plane_; }
    double radius() const { return radius_; }
    const std::vector<Complex>& punctures() const { return punctures_; }
    const std::vector<RadialSlit>& slits() const { return slits_; }

    bool contains(Complex z) const;

    friend bool operator==(const DomainSpec& a, const DomainSpec& b);

  private:
    DomainSpec() = default;
    bool plane_ = false;
    double radius_ = 1.0;
    std::vector<Complex> punctures_;
    std::vector<RadialSlit> slits_;
};

// Grammar: `disk(R)` | `plane`, then zero or more of
//   `- punct(x[+yi])` | `- slit(inner, R)` | `- slit(-R, -inner)`
//   | `- slit(inner, R, angle=theta)`.
DomainSpec parse_domain(std::string_view text);

// Complex literal `x[+yi]` as used by punct(...) and the CLI --z flag.
Complex parse_complex(std::string_view text);

// Scale every defining length by t > 0.
DomainSpec dilate(const DomainSpec& d, double t);

// K_G = {1/zeta : zeta outside G} for a simply connected spec in the unit
// disk containing 0: the closed unit disk plus one inverted segment
// [1, 1/inner] along the conjugated direction per slit.
CompactSet invert_complement(const DomainSpec& d);

// Connected component of the set intersection containing z; stays inside the
// family (merged puncture/slit lists).
DomainSpec intersect(const DomainSpec& d1, const DomainSpec& d2, Complex z);

// The set union when it is again expressible in the family.
std::optional<DomainSpec> union_in_family(const DomainSpec& d1, const DomainSpec& d2);

// Numeric boundary description used when Mobius images of slits leave the
// symbolic family.
struct SampledDomain {
    std::vector<std::vector<Complex>> components;  // closed circle + slit arcs
    bool contains_origin = true;
};

struct NormalizedPair {
    std::variant<DomainSpec, SampledDomain> g1;
    std::variant<DomainSpec, SampledDomain> g2;
    double jacobian = 1.0;  // |phi'(zeta)| / R; converts densities at 0 back
};

// Scale both domains into the unit disk by 1/R and move z to the origin with
// a disk automorphism. For z = 0 the result stays symbolic.
NormalizedPair normalize_pair(const DomainSpec& d1, const DomainSpec& d2, Complex z,
                              double R);

// Normalization of a single domain, same conventions.
std::variant<DomainSpec, SampledDomain> normalize_domain(const DomainSpec& d, Complex z,
                                                         double R);

}  // namespace hyperlam
