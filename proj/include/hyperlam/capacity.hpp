#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperlam/mobius.hpp"

namespace hyperlam {

struct Disk {
    Complex center;
    double radius;
};

struct Segment {
    Complex p;
    Complex q;
};

// Finite union of closed disks and straight segments. Nonempty and never a
// single point; connectedness is decided at construction time.
class CompactSet {
  public:
    CompactSet(std::vector<Disk> disks, std::vector<Segment> segments);

    const std::vector<Disk>& disks() const { return disks_; }
    const std::vector<Segment>& segments() const { return segments_; }
    bool connected() const { return connected_; }

    // Largest pairwise distance between boundary sample points.
    double diameter() const;

    // Set union (concatenation of primitives).
    static CompactSet set_union(const CompactSet& k1, const CompactSet& k2);

    // True when some primitive of *this touches some primitive of `other`.
    bool intersects(const CompactSet& other) const;

    std::string to_json_string() const;
    static CompactSet from_json_string(const std::string& text);

  private:
    std::vector<Disk> disks_;
    std::vector<Segment> segments_;
    bool connected_ = false;
};

enum class CapacityMethod { interval_exact, joukowski, fekete };

const char* to_string(CapacityMethod method);

struct CapacityEstimate {
    double value = 0.0;
    CapacityMethod method = CapacityMethod::interval_exact;
    int n_points = 0;  // fekete only
    std::optional<std::pair<double, double>> bracket;
};

// cap([alpha, beta]) = (beta - alpha)/4.
CapacityEstimate interval_capacity(double alpha, double beta);

// cap(L) = h'(inf) * cap(K) for a conformal exterior map h with h(inf)=inf.
double transform_capacity(double cap_K, double h_prime_inf);

// Capacity of closed unit disk together with the radial slit [1, t]:
// equals cap([-2, t + 1/t]) by the Joukowski reduction.
CapacityEstimate capacity_disk_one_slit(double t);

// Capacity of closed unit disk with both slits [-t,-1] and [1, t]:
// equals cap([-(t+1/t), t+1/t]).
CapacityEstimate capacity_disk_two_slits(double t);

struct FeketeOptions {
    int restarts = 8;
    int max_passes = 200;
    int disk_samples = 2048;     // boundary points per disk
    int segment_samples = 1024;  // points per segment
};

// n-point transfinite diameter d_n(K): the maximum over n-point
// configurations on the sampled boundary of the geometric mean of pairwise
// distances. Upper estimate of cap(K), non-increasing in n, deterministic
// for a fixed seed.
CapacityEstimate fekete_estimate(const CompactSet& K, int n, std::uint64_t seed,
                                 const FeketeOptions& options = {});

// Same optimizer on a raw boundary point cloud. `connected` enables the
// diameter/4 lower bracket, valid for continua.
CapacityEstimate fekete_points_estimate(std::span<const Complex> boundary, int n,
                                        std::uint64_t seed, bool connected,
                                        const FeketeOptions& options = {});

// Exact closed form when the set is recognized (interval, origin-centered
// disk, disk with one or two radial slits); Fekete estimate otherwise.
CapacityEstimate capacity_of(const CompactSet& K, int fekete_n = 64,
                             std::uint64_t seed = 42,
                             const FeketeOptions& options = {});

struct MuraiReport {
    CapacityEstimate cap1;
    CapacityEstimate cap2;
    CapacityEstimate cap_union;
    double lhs = 0.0;    // cap(K1 u K2)
    double rhs = 0.0;    // cap(K1) + cap(K2)
    double slack = 0.0;  // rhs - lhs
    bool holds = false;
};

// Subadditivity check cap(K1 u K2) <= cap(K1) + cap(K2) for intersecting
// continua. Throws if an operand is disconnected or the sets are disjoint.
MuraiReport murai_check(const CompactSet& k1, const CompactSet& k2, int fekete_n = 64,
                        std::uint64_t seed = 42, const FeketeOptions& options = {});

}  // namespace hyperlam
