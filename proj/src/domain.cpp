#include "hyperlam/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace hyperlam {

namespace {

constexpr double kEps = 1e-12;

double point_segment_distance(Complex z, Complex p, Complex q)
{
    const Complex d = q - p;
    const double t = std::clamp(((z - p) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
    return std::abs(z - (p + t * d));
}

bool same_point(Complex a, Complex b)
{
    return std::abs(a - b) <= kEps * std::max(1.0, std::abs(a));
}

}  // namespace

const char* to_string(DomainKind kind)
{
    switch (kind) {
        case DomainKind::disk: return "disk";
        case DomainKind::disk_minus_punctures: return "disk-minus-punctures";
        case DomainKind::disk_minus_radial_slits: return "disk-minus-radial-slits";
        case DomainKind::disk_mixed: return "disk-mixed";
        case DomainKind::plane_minus_punctures: return "plane-minus-punctures";
    }
    return "unknown";
}

DomainSpec DomainSpec::disk(double radius)
{
    return disk_domain(radius, {}, {});
}

DomainSpec DomainSpec::disk_minus_punctures(double radius, std::vector<Complex> punctures)
{
    return disk_domain(radius, std::move(punctures), {});
}

DomainSpec DomainSpec::disk_minus_slits(double radius, std::vector<RadialSlit> slits)
{
    return disk_domain(radius, {}, std::move(slits));
}

DomainSpec DomainSpec::disk_domain(double radius, std::vector<Complex> punctures,
                                   std::vector<RadialSlit> slits)
{
    if (!(radius > 0.0))
        throw std::domain_error("DomainSpec: disk radius must be positive");
    for (Complex p : punctures)
        if (!(std::abs(p) < radius))
            throw std::domain_error("DomainSpec: puncture must lie strictly inside the disk");
    for (RadialSlit& s : slits) {
        const double len = std::abs(s.direction);
        if (!(len > 0.0))
            throw std::domain_error("DomainSpec: slit direction must be nonzero");
        s.direction /= len;
        if (!(s.inner > 0.0) || !(s.inner < radius))
            throw std::domain_error("DomainSpec: slit inner endpoint must lie in (0, R)");
    }
    DomainSpec d;
    d.radius_ = radius;
    d.punctures_ = std::move(punctures);
    d.slits_ = std::move(slits);
    return d;
}

DomainSpec DomainSpec::plane_minus_punctures(std::vector<Complex> punctures)
{
    for (std::size_t i = 0; i < punctures.size(); ++i)
        for (std::size_t j = i + 1; j < punctures.size(); ++j)
            if (same_point(punctures[i], punctures[j]))
                throw std::domain_error("DomainSpec: plane punctures must be distinct");
    if (punctures.size() < 2)
        throw std::domain_error(
            "DomainSpec: a punctured plane needs at least two punctures to be hyperbolic");
    DomainSpec d;
    d.plane_ = true;
    d.punctures_ = std::move(punctures);
    return d;
}

DomainKind DomainSpec::kind() const
{
    if (plane_)
        return DomainKind::plane_minus_punctures;
    if (!punctures_.empty() && !slits_.empty())
        return DomainKind::disk_mixed;
    if (!punctures_.empty())
        return DomainKind::disk_minus_punctures;
    if (!slits_.empty())
        return DomainKind::disk_minus_radial_slits;
    return DomainKind::disk;
}

bool DomainSpec::contains(Complex z) const
{
    if (!plane_) {
        if (!(std::abs(z) < radius_))
            return false;
        for (const RadialSlit& s : slits_)
            if (point_segment_distance(z, s.inner * s.direction, radius_ * s.direction) <=
                kEps * radius_)
                return false;
    }
    for (Complex p : punctures_)
        if (std::abs(z - p) <= kEps * std::max(1.0, radius_))
            return false;
    return true;
}

bool operator==(const DomainSpec& a, const DomainSpec& b)
{
    if (a.plane_ != b.plane_ || a.punctures_.size() != b.punctures_.size() ||
        a.slits_.size() != b.slits_.size())
        return false;
    if (!a.plane_ && std::abs(a.radius_ - b.radius_) > kEps * a.radius_)
        return false;
    for (std::size_t i = 0; i < a.punctures_.size(); ++i)
        if (!same_point(a.punctures_[i], b.punctures_[i]))
            return false;
    for (std::size_t i = 0; i < a.slits_.size(); ++i)
        if (!same_point(a.slits_[i].direction, b.slits_[i].direction) ||
            std::abs(a.slits_[i].inner - b.slits_[i].inner) > kEps)
            return false;
    return true;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& message) const
    {
        throw parse_error(message + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eof()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string ident()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected an identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    double number()
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '+')
            ++pos_;
        double value = 0.0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        const auto result = std::from_chars(begin, end, value);
        if (result.ec != std::errc{})
            fail("expected a number");
        pos_ = static_cast<std::size_t>(result.ptr - text_.data());
        return value;
    }

    // x | x+yi | x-yi | yi
    Complex complex_literal()
    {
        const double first = number();
        if (consume('i'))
            return {0.0, first};
        const char next = peek();
        if (next == '+' || next == '-') {
            const double second = number();
            if (!consume('i'))
                fail("expected 'i' after the imaginary part");
            return {first, second};
        }
        return {first, 0.0};
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Complex parse_complex(std::string_view text)
{
    Parser p(text);
    const Complex z = p.complex_literal();
    if (!p.eof())
        p.fail("unexpected trailing input in complex literal");
    return z;
}

DomainSpec parse_domain(std::string_view text)
{
    Parser p(text);
    const std::string head = p.ident();

    bool plane = false;
    double radius = 1.0;
    if (head == "disk") {
        p.expect('(');
        radius = p.number();
        p.expect(')');
        if (!(radius > 0.0))
            p.fail("disk radius must be positive");
    } else if (head == "plane") {
        plane = true;
    } else {
        p.fail("expected 'disk' or 'plane', got '" + head + "'");
    }

    std::vector<Complex> punctures;
    std::vector<RadialSlit> slits;
    while (!p.eof()) {
        p.expect('-');
        const std::string term = p.ident();
        if (term == "punct") {
            p.expect('(');
            punctures.push_back(p.complex_literal());
            p.expect(')');
        } else if (term == "slit") {
            if (plane)
                p.fail("a plane spec cannot carry slits");
            p.expect('(');
            const double first = p.number();
            p.expect(',');
            const double second = p.number();
            double angle = 0.0;
            bool has_angle = false;
            if (p.consume(',')) {
                if (p.ident() != "angle")
                    p.fail("expected 'angle'");
                p.expect('=');
                angle = p.number();
                has_angle = true;
            }
            p.expect(')');

            double inner = 0.0;
            Complex direction{1.0, 0.0};
            if (first > 0.0) {
                if (std::abs(second - radius) > kEps * radius)
                    p.fail("slit must reach the boundary: slit(inner, R)");
                inner = first;
                if (has_angle)
                    direction = std::polar(1.0, angle);
            } else {
                if (has_angle)
                    p.fail("angle is only valid with slit(inner, R)");
                if (std::abs(first + radius) > kEps * radius)
                    p.fail("negative slit form must be slit(-R, -inner)");
                inner = -second;
                direction = {-1.0, 0.0};
            }
            if (!(inner > 0.0) || !(inner < radius))
                p.fail("slit inner endpoint must lie in (0, R)");
            slits.push_back({direction, inner});
        } else {
            p.fail("expected 'punct' or 'slit', got '" + term + "'");
        }
    }

    try {
        if (plane)
            return DomainSpec::plane_minus_punctures(std::move(punctures));
        return DomainSpec::disk_domain(radius, std::move(punctures), std::move(slits));
    } catch (const std::domain_error& e) {
        throw parse_error(e.what(), text.size());
    }
}

DomainSpec dilate(const DomainSpec& d, double t)
{
    if (!(t > 0.0))
        throw std::domain_error("dilate: scale factor must be positive");
    std::vector<Complex> punctures = d.punctures();
    for (Complex& p : punctures)
        p *= t;
    if (d.is_plane())
        return DomainSpec::plane_minus_punctures(std::move(punctures));
    std::vector<RadialSlit> slits = d.slits();
    for (RadialSlit& s : slits)
        s.inner *= t;
    return DomainSpec::disk_domain(d.radius() * t, std::move(punctures), std::move(slits));
}

CompactSet invert_complement(const DomainSpec& d)
{
    const DomainKind kind = d.kind();
    if (kind != DomainKind::disk && kind != DomainKind::disk_minus_radial_slits)
        throw std::domain_error(
            "invert_complement: only simply connected disk specs are supported "
            "(a puncture inverts to a point, not a continuum)");
    if (std::abs(d.radius() - 1.0) > kEps)
        throw std::domain_error("invert_complement: spec must live in the unit disk; "
                                "normalize first");
    if (!d.contains(0.0))
        throw std::domain_error("invert_complement: domain must contain the origin");

    std::vector<Segment> segments;
    for (const RadialSlit& s : d.slits()) {
        const Complex u = std::conj(s.direction);
        segments.push_back({u, u / s.inner});
    }
    return CompactSet({Disk{0.0, 1.0}}, std::move(segments));
}

namespace {

void merge_puncture(std::vector<Complex>& punctures, Complex p)
{
    for (Complex existing : punctures)
        if (same_point(existing, p))
            return;
    punctures.push_back(p);
}

// Union of slits along one direction: keep the smaller inner endpoint.
void merge_slit(std::vector<RadialSlit>& slits, const RadialSlit& s)
{
    for (RadialSlit& existing : slits)
        if (same_point(existing.direction, s.direction)) {
            existing.inner = std::min(existing.inner, s.inner);
            return;
        }
    slits.push_back(s);
}

}  // namespace

DomainSpec intersect(const DomainSpec& d1, const DomainSpec& d2, Complex z)
{
    if (!d1.contains(z) || !d2.contains(z))
        throw std::domain_error("intersect: z must belong to both domains");
    if (d1.is_plane() != d2.is_plane())
        throw std::domain_error("intersect: cannot mix plane and disk specs");

    std::vector<Complex> punctures = d1.punctures();
    for (Complex p : d2.punctures())
        merge_puncture(punctures, p);

    if (d1.is_plane())
        return DomainSpec::plane_minus_punctures(std::move(punctures));

    if (std::abs(d1.radius() - d2.radius()) > kEps * d1.radius())
        throw std::domain_error("intersect: disk specs must share the same radius");

    // Disk minus punctures and radial slits stays connected, so the
    // component containing z is the whole set intersection.
    std::vector<RadialSlit> slits = d1.slits();
    for (const RadialSlit& s : d2.slits())
        merge_slit(slits, s);
    return DomainSpec::disk_domain(d1.radius(), std::move(punctures), std::move(slits));
}

std::optional<DomainSpec> union_in_family(const DomainSpec& d1, const DomainSpec& d2)
{
    if (d1.is_plane() != d2.is_plane())
        return std::nullopt;

    if (d1.is_plane()) {
        std::vector<Complex> common;
        for (Complex p : d1.punctures())
            for (Complex q : d2.punctures())
                if (same_point(p, q))
                    merge_puncture(common, p);
        if (common.size() < 2)
            return std::nullopt;  // union is no longer hyperbolic
        return DomainSpec::plane_minus_punctures(std::move(common));
    }

    if (std::abs(d1.radius() - d2.radius()) > kEps * d1.radius())
        return std::nullopt;

    const bool punctures_involved = !d1.punctures().empty() || !d2.punctures().empty();
    const bool slits_involved = !d1.slits().empty() || !d2.slits().empty();
    if (punctures_involved && slits_involved)
        return std::nullopt;  // removed sets of different type: leave unexpressed

    if (punctures_involved) {
        std::vector<Complex> common;
        for (Complex p : d1.punctures())
            for (Complex q : d2.punctures())
                if (same_point(p, q))
                    merge_puncture(common, p);
        return DomainSpec::disk_minus_punctures(d1.radius(), std::move(common));
    }

    std::vector<RadialSlit> common;
    for (const RadialSlit& s : d1.slits())
        for (const RadialSlit& t : d2.slits())
            if (same_point(s.direction, t.direction))
                merge_slit(common, {s.direction, std::max(s.inner, t.inner)});
    return DomainSpec::disk_minus_slits(d1.radius(), std::move(common));
}

namespace {

constexpr int kCircleSamples = 2048;
constexpr int kArcSamples = 512;

std::vector<Complex> mapped_circle(const MobiusMap& phi, double radius)
{
    std::vector<Complex> points;
    points.reserve(kCircleSamples);
    for (int k = 0; k < kCircleSamples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / kCircleSamples;
        points.push_back(phi(radius * Complex{std::cos(theta), std::sin(theta)}).finite());
    }
    return points;
}

std::vector<Complex> mapped_slit(const MobiusMap& phi, const RadialSlit& slit)
{
    std::vector<Complex> points;
    points.reserve(kArcSamples);
    for (int k = 0; k < kArcSamples; ++k) {
        const double s =
            slit.inner + (1.0 - slit.inner) * (static_cast<double>(k) / (kArcSamples - 1));
        points.push_back(phi(s * slit.direction).finite());
    }
    return points;
}

}  // namespace

std::variant<DomainSpec, SampledDomain> normalize_domain(const DomainSpec& d, Complex z,
                                                         double R)
{
    if (d.is_plane())
        throw std::domain_error("normalize_domain: plane specs are not normalized");
    if (!(R > 0.0))
        throw std::domain_error("normalize_domain: R must be positive");
    if (d.radius() > R * (1.0 + kEps))
        throw std::domain_error("normalize_domain: domain is not contained in the R-disk");
    if (!d.contains(z))
        throw std::domain_error("normalize_domain: z must belong to the domain");

    const DomainSpec scaled = dilate(d, 1.0 / R);
    const Complex zeta = z / R;
    if (std::abs(zeta) < 1e-15)
        return scaled;

    const MobiusMap phi = disk_automorphism(zeta);
    const DomainKind kind = scaled.kind();

    if (kind == DomainKind::disk && std::abs(scaled.radius() - 1.0) <= kEps)
        return DomainSpec::disk(1.0);
    if (kind == DomainKind::disk) {
        // image of a smaller circle is a circle: keep it as a sampled boundary
        SampledDomain sampled;
        sampled.components.push_back(mapped_circle(phi, scaled.radius()));
        return sampled;
    }

    if (std::abs(scaled.radius() - 1.0) > kEps)
        throw std::domain_error(
            "normalize_domain: punctured or slit domains must fill the R-disk");

    if (kind == DomainKind::disk_minus_punctures) {
        std::vector<Complex> punctures;
        for (Complex p : scaled.punctures())
            punctures.push_back(phi(p).finite());
        return DomainSpec::disk_minus_punctures(1.0, std::move(punctures));
    }
    if (kind == DomainKind::disk_minus_radial_slits) {
        SampledDomain sampled;
        std::vector<Complex> circle;
        circle.reserve(kCircleSamples);
        for (int k = 0; k < kCircleSamples; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / kCircleSamples;
            circle.push_back(Complex{std::cos(theta), std::sin(theta)});
        }
        sampled.components.push_back(std::move(circle));
        for (const RadialSlit& s : scaled.slits())
            sampled.components.push_back(mapped_slit(phi, s));
        return sampled;
    }
    throw std::domain_error("normalize_domain: mixed puncture+slit specs are unsupported");
}

NormalizedPair normalize_pair(const DomainSpec& d1, const DomainSpec& d2, Complex z,
                              double R)
{
    if (!d1.contains(z) || !d2.contains(z))
        throw std::domain_error("normalize_pair: z must belong to both domains");
    NormalizedPair pair{normalize_domain(d1, z, R), normalize_domain(d2, z, R), 1.0};
    const Complex zeta = z / R;
    pair.jacobian = (1.0 / (1.0 - std::norm(zeta))) / R;
    return pair;
}

}  // namespace hyperlam
