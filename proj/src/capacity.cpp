#include "hyperlam/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "hyperlam/tolerance.hpp"
#include "json.hpp"

namespace hyperlam {

namespace {

constexpr double kGeomEps = 1e-12;

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }
double dot(Complex u, Complex v) { return u.real() * v.real() + u.imag() * v.imag(); }

double point_segment_distance(Complex z, const Segment& s)
{
    const Complex d = s.q - s.p;
    const double len2 = std::norm(d);
    const double t = std::clamp(dot(z - s.p, d) / len2, 0.0, 1.0);
    return std::abs(z - (s.p + t * d));
}

bool segments_touch(const Segment& a, const Segment& b)
{
    const Complex da = a.q - a.p;
    const Complex db = b.q - b.p;
    const double d1 = cross(da, b.p - a.p);
    const double d2 = cross(da, b.q - a.p);
    const double d3 = cross(db, a.p - b.p);
    const double d4 = cross(db, a.q - b.p);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)))
        return true;  // proper crossing
    const double dist = std::min(
        std::min(point_segment_distance(b.p, a), point_segment_distance(b.q, a)),
        std::min(point_segment_distance(a.p, b), point_segment_distance(a.q, b)));
    return dist <= kGeomEps;
}

bool disk_touches_disk(const Disk& a, const Disk& b)
{
    return std::abs(a.center - b.center) <= a.radius + b.radius + kGeomEps;
}

bool disk_touches_segment(const Disk& d, const Segment& s)
{
    return point_segment_distance(d.center, s) <= d.radius + kGeomEps;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool primitives_touch(const CompactSet& k, int i, int j)
{
    const int nd = static_cast<int>(k.disks().size());
    const bool i_disk = i < nd;
    const bool j_disk = j < nd;
    if (i_disk && j_disk)
        return disk_touches_disk(k.disks()[i], k.disks()[j]);
    if (i_disk)
        return disk_touches_segment(k.disks()[i], k.segments()[j - nd]);
    if (j_disk)
        return disk_touches_segment(k.disks()[j], k.segments()[i - nd]);
    return segments_touch(k.segments()[i - nd], k.segments()[j - nd]);
}

}  // namespace

CompactSet::CompactSet(std::vector<Disk> disks, std::vector<Segment> segments)
    : disks_(std::move(disks)), segments_(std::move(segments))
{
    if (disks_.empty() && segments_.empty())
        throw std::invalid_argument("CompactSet: set must be nonempty");
    for (const Disk& d : disks_)
        if (!(d.radius > 0.0))
            throw std::invalid_argument("CompactSet: disk radius must be positive");
    for (const Segment& s : segments_)
        if (std::abs(s.q - s.p) <= 0.0)
            throw std::invalid_argument("CompactSet: segment endpoints must be distinct");

    const int n = static_cast<int>(disks_.size() + segments_.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (primitives_touch(*this, i, j))
                uf.unite(i, j);
    connected_ = true;
    for (int i = 1; i < n; ++i)
        if (uf.find(i) != uf.find(0))
            connected_ = false;
}

double CompactSet::diameter() const
{
    double best = 0.0;
    for (std::size_t i = 0; i < disks_.size(); ++i) {
        best = std::max(best, 2.0 * disks_[i].radius);
        for (std::size_t j = i + 1; j < disks_.size(); ++j)
            best = std::max(best, std::abs(disks_[i].center - disks_[j].center) +
                                      disks_[i].radius + disks_[j].radius);
        for (const Segment& s : segments_)
            best = std::max(best, disks_[i].radius +
                                      std::max(std::abs(disks_[i].center - s.p),
                                               std::abs(disks_[i].center - s.q)));
    }
    for (std::size_t i = 0; i < segments_.size(); ++i)
        for (std::size_t j = i; j < segments_.size(); ++j)
            for (Complex e1 : {segments_[i].p, segments_[i].q})
                for (Complex e2 : {segments_[j].p, segments_[j].q})
                    best = std::max(best, std::abs(e1 - e2));
    return best;
}

CompactSet CompactSet::set_union(const CompactSet& k1, const CompactSet& k2)
{
    std::vector<Disk> disks = k1.disks_;
    disks.insert(disks.end(), k2.disks_.begin(), k2.disks_.end());
    std::vector<Segment> segments = k1.segments_;
    segments.insert(segments.end(), k2.segments_.begin(), k2.segments_.end());
    return CompactSet(std::move(disks), std::move(segments));
}

bool CompactSet::intersects(const CompactSet& other) const
{
    for (const Disk& a : disks_) {
        for (const Disk& b : other.disks_)
            if (disk_touches_disk(a, b))
                return true;
        for (const Segment& s : other.segments_)
            if (disk_touches_segment(a, s))
                return true;
    }
    for (const Segment& s : segments_) {
        for (const Disk& b : other.disks_)
            if (disk_touches_segment(b, s))
                return true;
        for (const Segment& t : other.segments_)
            if (segments_touch(s, t))
                return true;
    }
    return false;
}

std::string CompactSet::to_json_string() const
{
    nlohmann::ordered_json j;
    j["disks"] = nlohmann::ordered_json::array();
    for (const Disk& d : disks_)
        j["disks"].push_back({{"cx", d.center.real()}, {"cy", d.center.imag()}, {"r", d.radius}});
    j["segments"] = nlohmann::ordered_json::array();
    for (const Segment& s : segments_)
        j["segments"].push_back({{"x1", s.p.real()},
                                 {"y1", s.p.imag()},
                                 {"x2", s.q.real()},
                                 {"y2", s.q.imag()}});
    return j.dump();
}

CompactSet CompactSet::from_json_string(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    std::vector<Disk> disks;
    std::vector<Segment> segments;
    for (const auto& d : j.value("disks", nlohmann::json::array()))
        disks.push_back({Complex{d.at("cx").get<double>(), d.at("cy").get<double>()},
                         d.at("r").get<double>()});
    for (const auto& s : j.value("segments", nlohmann::json::array()))
        segments.push_back({Complex{s.at("x1").get<double>(), s.at("y1").get<double>()},
                            Complex{s.at("x2").get<double>(), s.at("y2").get<double>()}});
    return CompactSet(std::move(disks), std::move(segments));
}

const char* to_string(CapacityMethod method)
{
    switch (method) {
        case CapacityMethod::interval_exact: return "interval-exact";
        case CapacityMethod::joukowski: return "joukowski";
        case CapacityMethod::fekete: return "fekete";
    }
    return "unknown";
}

CapacityEstimate interval_capacity(double alpha, double beta)
{
    if (!(alpha < beta))
        throw std::domain_error("interval_capacity: requires alpha < beta");
    return {(beta - alpha) / 4.0, CapacityMethod::interval_exact, 0, std::nullopt};
}

double transform_capacity(double cap_K, double h_prime_inf)
{
    if (!(cap_K > 0.0) || !(h_prime_inf > 0.0))
        throw std::domain_error("transform_capacity: inputs must be positive");
    return h_prime_inf * cap_K;
}

CapacityEstimate capacity_disk_one_slit(double t)
{
    if (!(t > 1.0))
        throw std::domain_error("capacity_disk_one_slit: requires t > 1");
    // J maps the slit disk exterior onto the complement of [-2, t + 1/t]
    // with J'(inf) = 1.
    const double value = transform_capacity(interval_capacity(-2.0, t + 1.0 / t).value,
                                            joukowski_derivative_at_infinity);
    return {value, CapacityMethod::joukowski, 0, std::nullopt};
}

CapacityEstimate capacity_disk_two_slits(double t)
{
    if (!(t > 1.0))
        throw std::domain_error("capacity_disk_two_slits: requires t > 1");
    const double s = t + 1.0 / t;
    const double value = transform_capacity(interval_capacity(-s, s).value,
                                            joukowski_derivative_at_infinity);
    return {value, CapacityMethod::joukowski, 0, std::nullopt};
}

namespace {

// Deterministic uniform index in [0, bound) via rejection.
std::size_t uniform_index(std::uint64_t& state, std::size_t bound)
{
    auto next = [&state]() {
        // splitmix64
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r = next();
    while (r >= limit)
        r = next();
    return static_cast<std::size_t>(r % bound);
}

std::vector<Complex> boundary_cloud(const CompactSet& K, const FeketeOptions& options)
{
    std::vector<Complex> cloud;
    for (const Disk& d : K.disks()) {
        const int m = options.disk_samples;
        for (int k = 0; k < m; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / m;
            cloud.push_back(d.center + d.radius * Complex{std::cos(theta), std::sin(theta)});
        }
    }
    for (const Segment& s : K.segments()) {
        const int m = options.segment_samples;
        for (int k = 0; k < m; ++k)
            cloud.push_back(s.p + (s.q - s.p) * (static_cast<double>(k) / (m - 1)));
    }
    std::sort(cloud.begin(), cloud.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    cloud.erase(std::unique(cloud.begin(), cloud.end()), cloud.end());
    return cloud;
}

// One greedy exchange descent from a random initial configuration.
// Returns sum_{i<j} log |p_i - p_j| of the local optimum.
double exchange_descent(std::span<const Complex> pts, int n, std::uint64_t rng_state,
                        int max_passes, std::vector<std::size_t>& config)
{
    const std::size_t m = pts.size();
    config.clear();
    std::vector<char> occupied(m, 0);
    while (config.size() < static_cast<std::size_t>(n)) {
        const std::size_t k = uniform_index(rng_state, m);
        if (!occupied[k]) {
            occupied[k] = 1;
            config.push_back(k);
        }
    }

    // S[b] = sum over configuration points (other than b itself) of
    // log |pts[b] - point|.
    std::vector<double> S(m, 0.0);
    for (std::size_t b = 0; b < m; ++b)
        for (const std::size_t j : config)
            if (j != b)
                S[b] += std::log(std::abs(pts[b] - pts[j]));

    std::vector<double> log_dist_r(m);
    for (int pass = 0; pass < max_passes; ++pass) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            const std::size_t r = config[i];
            for (std::size_t b = 0; b < m; ++b)
                log_dist_r[b] = (b == r) ? 0.0 : std::log(std::abs(pts[b] - pts[r]));

            std::size_t best_b = r;
            double best = S[r];
            for (std::size_t b = 0; b < m; ++b) {
                if (occupied[b])
                    continue;
                const double score = S[b] - log_dist_r[b];
                if (score > best + 1e-13) {
                    best = score;
                    best_b = b;
                }
            }
            if (best_b == r)
                continue;
            for (std::size_t b = 0; b < m; ++b) {
                if (b != r)
                    S[b] -= log_dist_r[b];
                if (b != best_b)
                    S[b] += std::log(std::abs(pts[b] - pts[best_b]));
            }
            occupied[r] = 0;
            occupied[best_b] = 1;
            config[i] = best_b;
            changed = true;
        }
        if (!changed)
            break;
    }

    double log_product = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            log_product += std::log(std::abs(pts[config[i]] - pts[config[j]]));
    return log_product;
}

}  // namespace

CapacityEstimate fekete_points_estimate(std::span<const Complex> boundary, int n,
                                        std::uint64_t seed, bool connected,
                                        const FeketeOptions& options)
{
    if (n < 2)
        throw std::domain_error("fekete_points_estimate: n must be at least 2");
    if (boundary.size() < static_cast<std::size_t>(n))
        throw std::domain_error("fekete_points_estimate: need at least n distinct boundary points");

    double best_log = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> config;
    for (int restart = 0; restart < options.restarts; ++restart) {
        const std::uint64_t state = seed * 0x2545F4914F6CDD1Dull + static_cast<std::uint64_t>(restart);
        const double log_product = exchange_descent(boundary, n, state, options.max_passes, config);
        if (log_product > best_log)
            best_log = log_product;
    }

    const double value = std::exp(2.0 * best_log / (static_cast<double>(n) * (n - 1)));
    double diam = 0.0;
    if (connected) {
        // cheap lower bracket: among continua of a given diameter the segment
        // has the least capacity, diam/4
        for (std::size_t i = 0; i < boundary.size(); ++i)
            for (std::size_t j = i + 1; j < boundary.size(); ++j)
                diam = std::max(diam, std::abs(boundary[i] - boundary[j]));
    }
    CapacityEstimate est{value, CapacityMethod::fekete, n, std::nullopt};
    est.bracket = std::make_pair(connected ? diam / 4.0 : 0.0, value);
    return est;
}

CapacityEstimate fekete_estimate(const CompactSet& K, int n, std::uint64_t seed,
                                 const FeketeOptions& options)
{
    const std::vector<Complex> cloud = boundary_cloud(K, options);
    CapacityEstimate est = fekete_points_estimate(cloud, n, seed, K.connected(), options);
    if (K.connected())
        est.bracket = std::make_pair(K.diameter() / 4.0, est.value);
    return est;
}

namespace {

bool nearly_equal(double a, double b, double eps = 1e-9) { return std::abs(a - b) <= eps; }

struct CanonicalSet {
    std::vector<Disk> disks;
    std::vector<Segment> segments;
};

bool collinear_overlapping(const Segment& a, const Segment& b, Segment& merged)
{
    const Complex da = a.q - a.p;
    const double len = std::abs(da);
    const Complex u = da / len;
    if (std::abs(cross(u, b.p - a.p)) > kGeomEps * (1.0 + std::abs(b.p - a.p)) ||
        std::abs(cross(u, b.q - a.p)) > kGeomEps * (1.0 + std::abs(b.q - a.p)))
        return false;
    // project all endpoints on the common line
    const double t1 = 0.0, t2 = len;
    const double s1 = dot(b.p - a.p, u), s2 = dot(b.q - a.p, u);
    const double lo_b = std::min(s1, s2), hi_b = std::max(s1, s2);
    if (hi_b < std::min(t1, t2) - kGeomEps || lo_b > std::max(t1, t2) + kGeomEps)
        return false;
    const double lo = std::min({t1, t2, lo_b, hi_b});
    const double hi = std::max({t1, t2, lo_b, hi_b});
    merged = {a.p + lo * u, a.p + hi * u};
    return true;
}

CanonicalSet canonicalize(const CompactSet& K)
{
    CanonicalSet c;
    for (const Disk& d : K.disks()) {
        bool redundant = false;
        for (const Disk& kept : c.disks)
            if (std::abs(d.center - kept.center) + d.radius <= kept.radius + kGeomEps)
                redundant = true;
        if (!redundant) {
            std::erase_if(c.disks, [&](const Disk& kept) {
                return std::abs(d.center - kept.center) + kept.radius <= d.radius + kGeomEps;
            });
            c.disks.push_back(d);
        }
    }
    for (const Segment& s : K.segments()) {
        bool inside = false;
        for (const Disk& d : c.disks)
            if (std::abs(s.p - d.center) <= d.radius + kGeomEps &&
                std::abs(s.q - d.center) <= d.radius + kGeomEps)
                inside = true;
        if (!inside)
            c.segments.push_back(s);
    }
    // merge collinear touching segments to a hull segment
    bool merged_any = true;
    while (merged_any) {
        merged_any = false;
        for (std::size_t i = 0; i < c.segments.size() && !merged_any; ++i) {
            for (std::size_t j = i + 1; j < c.segments.size() && !merged_any; ++j) {
                Segment merged;
                if (collinear_overlapping(c.segments[i], c.segments[j], merged)) {
                    c.segments[i] = merged;
                    c.segments.erase(c.segments.begin() + static_cast<std::ptrdiff_t>(j));
                    merged_any = true;
                }
            }
        }
    }
    return c;
}

struct RadialSlitInfo {
    Complex direction;
    double inner;
    double outer;
};

bool radial_from_origin(const Segment& s, RadialSlitInfo& info)
{
    const double ap = std::abs(s.p), aq = std::abs(s.q);
    if (std::abs(cross(s.p, s.q)) > kGeomEps * std::max(1.0, ap * aq))
        return false;
    if (dot(s.p, s.q) <= 0.0)
        return false;  // straddles or touches the origin
    info.inner = std::min(ap, aq);
    info.outer = std::max(ap, aq);
    info.direction = (ap > aq ? s.p / ap : s.q / aq);
    return true;
}

}  // namespace

CapacityEstimate capacity_of(const CompactSet& K, int fekete_n, std::uint64_t seed,
                             const FeketeOptions& options)
{
    const CanonicalSet c = canonicalize(K);

    if (c.disks.empty() && c.segments.size() == 1) {
        const Segment& s = c.segments[0];
        CapacityEstimate est = interval_capacity(0.0, std::abs(s.q - s.p));
        return est;  // capacity is invariant under plane isometries
    }
    if (c.disks.size() == 1 && std::abs(c.disks[0].center) <= kGeomEps) {
        const double r = c.disks[0].radius;
        if (c.segments.empty())
            return {r, CapacityMethod::interval_exact, 0, std::nullopt};

        std::vector<RadialSlitInfo> slits;
        bool all_radial = true;
        for (const Segment& s : c.segments) {
            RadialSlitInfo info;
            if (radial_from_origin(s, info) && info.inner <= r + kGeomEps &&
                info.outer > r + kGeomEps)
                slits.push_back(info);
            else
                all_radial = false;
        }
        if (all_radial && slits.size() == 1) {
            const double t = slits[0].outer / r;
            return {r * capacity_disk_one_slit(t).value, CapacityMethod::joukowski, 0,
                    std::nullopt};
        }
        if (all_radial && slits.size() == 2 &&
            std::abs(slits[0].direction + slits[1].direction) <= 1e-9 &&
            nearly_equal(slits[0].outer, slits[1].outer,
                         1e-9 * std::max(1.0, slits[0].outer))) {
            const double t = slits[0].outer / r;
            return {r * capacity_disk_two_slits(t).value, CapacityMethod::joukowski, 0,
                    std::nullopt};
        }
    }
    return fekete_estimate(K, fekete_n, seed, options);
}

MuraiReport murai_check(const CompactSet& k1, const CompactSet& k2, int fekete_n,
                        std::uint64_t seed, const FeketeOptions& options)
{
    if (!k1.connected() || !k2.connected())
        throw std::domain_error("murai_check: both operands must be connected");
    if (!k1.intersects(k2))
        throw std::domain_error("murai_check: operands must have nonempty intersection");

    MuraiReport report;
    report.cap1 = capacity_of(k1, fekete_n, seed, options);
    report.cap2 = capacity_of(k2, fekete_n, seed, options);
    report.cap_union = capacity_of(CompactSet::set_union(k1, k2), fekete_n, seed, options);
    report.lhs = report.cap_union.value;
    report.rhs = report.cap1.value + report.cap2.value;
    report.slack = report.rhs - report.lhs;

    double tolerance = default_tolerances().capacity_exact;
    for (const CapacityEstimate* e : {&report.cap1, &report.cap2, &report.cap_union})
        if (e->method == CapacityMethod::fekete && e->bracket)
            tolerance += e->bracket->second - e->bracket->first;
    report.holds = report.slack >= -tolerance;
    return report;
}

}  // namespace hyperlam
