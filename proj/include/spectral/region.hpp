#ifndef SPECTRAL_REGION_HPP
#define SPECTRAL_REGION_HPP

#include <optional>
#include <string>
#include <vector>

#include "spectral/rational.hpp"

#include <Eigen/Core>

namespace spectral {

// Primitive vocabulary of the planar calculus. Extension point: add a variant
// here, extend the pairwise predicates in region.cpp (membership, containment,
// intersection, open-disk relations) and the canonical order; everything else
// is generic over those predicates.
enum class PrimitiveKind { Point = 0, Segment = 1, Circle = 2, Disk = 3 };

struct RegionPrimitive {
    PrimitiveKind kind = PrimitiveKind::Point;
    GaussianRational a; // Point: the point; Segment: first endpoint; Circle/Disk: center
    GaussianRational b; // Segment: second endpoint
    Rational radius;    // Circle/Disk: radius > 0

    static RegionPrimitive point(GaussianRational p);
    static RegionPrimitive segment(GaussianRational from, GaussianRational to);
    static RegionPrimitive circle(GaussianRational center, Rational r);
    static RegionPrimitive disk(GaussianRational center, Rational r);

    bool operator==(const RegionPrimitive& o) const;
    bool operator!=(const RegionPrimitive& o) const { return !(*this == o); }
};

// Deterministic total order: variant rank, then lexicographic coordinates.
bool primitive_less(const RegionPrimitive& p, const RegionPrimitive& q);

std::string describe(const RegionPrimitive& p);

// Compact subset of the plane as a finite union of primitives, always held in
// canonical form: no primitive contained in another, collinear overlapping
// segments merged, list sorted. Canonical regions are equal as sets iff they
// are structurally equal.
class SpectralRegion {
public:
    SpectralRegion() = default;
    static SpectralRegion make(std::vector<RegionPrimitive> primitives);

    const std::vector<RegionPrimitive>& primitives() const { return prims_; }
    bool empty() const { return prims_.empty(); }
    bool is_finite_point_set() const; // includes the empty region
    std::size_t size() const { return prims_.size(); }

    bool operator==(const SpectralRegion& o) const { return prims_ == o.prims_; }
    bool operator!=(const SpectralRegion& o) const { return !(*this == o); }

private:
    std::vector<RegionPrimitive> prims_;
};

std::string describe(const SpectralRegion& r);

bool member(const GaussianRational& z, const RegionPrimitive& p);
bool member(const GaussianRational& z, const SpectralRegion& r);

// Topological boundary in C. Raises UnsupportedConfiguration when a curve or
// point of the region meets the open interior of one of its disks (the result
// would need arcs).
SpectralRegion boundary(const SpectralRegion& r);

// Open region: a finite union of open disks, the only open sets the calculus
// produces. Supports membership / emptiness / equality only.
struct OpenRegion {
    std::vector<RegionPrimitive> disks; // Disk primitives, interpreted as open

    bool empty() const { return disks.empty(); }
    bool member(const GaussianRational& z) const;
    bool operator==(const OpenRegion& o) const { return disks == o.disks; }
    bool operator!=(const OpenRegion& o) const { return !(*this == o); }
};

OpenRegion interior(const SpectralRegion& r);

SpectralRegion accumulation(const SpectralRegion& r);
SpectralRegion isolated_points(const SpectralRegion& r);
SpectralRegion region_union(const SpectralRegion& a, const SpectralRegion& b);

// Exact subset decision. False verdicts carry an exact witness internally;
// configurations with joint coverage that single-primitive analysis cannot
// certify raise UnsupportedConfiguration.
bool subset(const SpectralRegion& a, const SpectralRegion& b);

// a \ b. `exact` is set when the difference is itself a closed region of the
// algebra; otherwise the value is symbolic: membership and emptiness stay
// exact through the stored pair, `closure` is filled when computable, and
// open_flagged records that the exact difference is not closed.
struct DifferenceResult {
    SpectralRegion lhs, rhs;
    std::optional<SpectralRegion> exact;
    bool open_flagged = false;
    std::optional<SpectralRegion> closure;

    bool empty() const;
    bool member(const GaussianRational& z) const;
};

DifferenceResult difference(const SpectralRegion& a, const SpectralRegion& b);

// Bounded component of the complement: the open disk of `outer` minus the
// filled copies of the primitives nested directly inside it. Membership needs
// the region the hole belongs to.
struct Hole {
    RegionPrimitive outer;
    SpectralRegion removed;

    bool member(const GaussianRational& z, const SpectralRegion& parent_region) const;
};

struct HullReport {
    SpectralRegion hull;
    std::vector<Hole> holes;
    Eigen::Index component_count = 0;
};

// Connected hull (complement of the unbounded component of the complement)
// with hole enumeration. Circle pairs must be strictly nested, externally
// tangent or disjoint; anything through a circle's open disk must lie strictly
// inside it.
HullReport connected_hull(const SpectralRegion& r);

struct PocetnaReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> conclusions;
    bool all_pass = true;
};

// Verifies, for compact H, K with bd(K) <= H <= K (precondition), the chain
// bd(K) <= bd(H) <= H <= K <= eta(K) = eta(H) and that K is H with some holes
// of H filled in (sampled exactly over K \ H).
PocetnaReport check_pocetna(const SpectralRegion& h, const SpectralRegion& k);

// Whether every primitive is a point or segment on one common line. Circles
// and disks are never line-contained.
bool line_contained(const SpectralRegion& r);

// Decides (a intersect b) subset-of c exactly where the intersection is
// representable or a witness disproves it; raises otherwise.
bool intersection_subset(const SpectralRegion& a, const SpectralRegion& b,
                         const SpectralRegion& c);

// Exact intersection when representable in the algebra.
std::optional<SpectralRegion> try_intersection(const SpectralRegion& a,
                                               const SpectralRegion& b);

// Deterministic rational sample points on/in a primitive, for the sampling
// oracle and the hole-filling check.
std::vector<GaussianRational> sample_points(const RegionPrimitive& p, int count);

// p subset of the open disk |z - center| < radius.
bool strictly_inside_open_disk(const RegionPrimitive& p, const GaussianRational& center,
                               const Rational& radius);

} // namespace spectral

#endif
