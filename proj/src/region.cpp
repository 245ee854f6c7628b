#include "spectral/region.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace spectral {

namespace {

Rational dist2(const GaussianRational& p, const GaussianRational& q) {
    return (p - q).norm2();
}

Rational cross(const GaussianRational& u, const GaussianRational& v) {
    return u.re * v.im - u.im * v.re;
}

Rational dot(const GaussianRational& u, const GaussianRational& v) {
    return u.re * v.re + u.im * v.im;
}

Rational sq(const Rational& x) { return x * x; }

// Squared distance from point z to segment [a,b].
Rational segment_dist2(const GaussianRational& z, const GaussianRational& a,
                       const GaussianRational& b) {
    GaussianRational d = b - a;
    Rational len2 = d.norm2();
    Rational t = dot(z - a, d) / len2;
    if (sgn(t) < 0) t = 0;
    if (cmp(t, 1) > 0) t = 1;
    GaussianRational proj = a + GaussianRational(t) * d;
    return dist2(z, proj);
}

bool rational_sqrt(const Rational& x, Rational& root) {
    if (sgn(x) < 0) return false;
    if (sgn(x) == 0) {
        root = 0;
        return true;
    }
    Integer num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn) / Rational(rd);
    return true;
}

} // namespace

RegionPrimitive RegionPrimitive::point(GaussianRational p) {
    RegionPrimitive r;
    r.kind = PrimitiveKind::Point;
    r.a = std::move(p);
    return r;
}

RegionPrimitive RegionPrimitive::segment(GaussianRational from, GaussianRational to) {
    if (from == to) throw Error("invalid_primitive", "segment endpoints must be distinct");
    RegionPrimitive r;
    r.kind = PrimitiveKind::Segment;
    if (lex_less(to, from)) std::swap(from, to);
    r.a = std::move(from);
    r.b = std::move(to);
    return r;
}

RegionPrimitive RegionPrimitive::circle(GaussianRational center, Rational rad) {
    if (sgn(rad) <= 0) throw Error("invalid_primitive", "circle radius must be positive");
    RegionPrimitive r;
    r.kind = PrimitiveKind::Circle;
    r.a = std::move(center);
    r.radius = std::move(rad);
    return r;
}

RegionPrimitive RegionPrimitive::disk(GaussianRational center, Rational rad) {
    if (sgn(rad) <= 0) throw Error("invalid_primitive", "disk radius must be positive");
    RegionPrimitive r;
    r.kind = PrimitiveKind::Disk;
    r.a = std::move(center);
    r.radius = std::move(rad);
    return r;
}

bool RegionPrimitive::operator==(const RegionPrimitive& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case PrimitiveKind::Point: return a == o.a;
        case PrimitiveKind::Segment: return a == o.a && b == o.b;
        default: return a == o.a && radius == o.radius;
    }
}

bool primitive_less(const RegionPrimitive& p, const RegionPrimitive& q) {
    if (p.kind != q.kind) return static_cast<int>(p.kind) < static_cast<int>(q.kind);
    if (p.a != q.a) return lex_less(p.a, q.a);
    if (p.kind == PrimitiveKind::Segment) return lex_less(p.b, q.b);
    if (p.kind == PrimitiveKind::Point) return false;
    return cmp(p.radius, q.radius) < 0;
}

std::string describe(const RegionPrimitive& p) {
    auto pt = [](const GaussianRational& z) {
        return "(" + format_rational(z.re) + "," + format_rational(z.im) + ")";
    };
    switch (p.kind) {
        case PrimitiveKind::Point: return "Point" + pt(p.a);
        case PrimitiveKind::Segment: return "Segment" + pt(p.a) + "-" + pt(p.b);
        case PrimitiveKind::Circle:
            return "Circle" + pt(p.a) + ";r=" + format_rational(p.radius);
        case PrimitiveKind::Disk: return "Disk" + pt(p.a) + ";r=" + format_rational(p.radius);
    }
    return "?";
}

std::string describe(const SpectralRegion& r) {
    if (r.empty()) return "{}";
    std::string s = "{";
    for (size_t i = 0; i < r.primitives().size(); ++i) {
        if (i) s += ", ";
        s += describe(r.primitives()[i]);
    }
    return s + "}";
}

bool member(const GaussianRational& z, const RegionPrimitive& p) {
    switch (p.kind) {
        case PrimitiveKind::Point: return z == p.a;
        case PrimitiveKind::Segment: {
            GaussianRational d = p.b - p.a;
            if (sgn(cross(z - p.a, d)) != 0) return false;
            Rational t = dot(z - p.a, d);
            return sgn(t) >= 0 && cmp(t, d.norm2()) <= 0;
        }
        case PrimitiveKind::Circle: return dist2(z, p.a) == sq(p.radius);
        case PrimitiveKind::Disk: return cmp(dist2(z, p.a), sq(p.radius)) <= 0;
    }
    return false;
}

bool member(const GaussianRational& z, const SpectralRegion& r) {
    for (const auto& p : r.primitives())
        if (member(z, p)) return true;
    return false;
}

namespace {

// q contains p as point sets.
bool contains(const RegionPrimitive& q, const RegionPrimitive& p) {
    switch (q.kind) {
        case PrimitiveKind::Point:
            return p.kind == PrimitiveKind::Point && p.a == q.a;
        case PrimitiveKind::Segment:
            if (p.kind == PrimitiveKind::Point) return member(p.a, q);
            if (p.kind == PrimitiveKind::Segment)
                return member(p.a, q) && member(p.b, q);
            return false;
        case PrimitiveKind::Circle:
            if (p.kind == PrimitiveKind::Point) return member(p.a, q);
            if (p.kind == PrimitiveKind::Circle)
                return p.a == q.a && p.radius == q.radius;
            return false;
        case PrimitiveKind::Disk:
            switch (p.kind) {
                case PrimitiveKind::Point: return member(p.a, q);
                case PrimitiveKind::Segment: return member(p.a, q) && member(p.b, q);
                case PrimitiveKind::Circle:
                case PrimitiveKind::Disk: {
                    if (cmp(p.radius, q.radius) > 0) return false;
                    return cmp(dist2(p.a, q.a), sq(q.radius - p.radius)) <= 0;
                }
            }
    }
    return false;
}

bool segments_intersect(const RegionPrimitive& s1, const RegionPrimitive& s2) {
    auto orient = [](const GaussianRational& a, const GaussianRational& b,
                     const GaussianRational& c) { return sgn(cross(b - a, c - a)); };
    int o1 = orient(s1.a, s1.b, s2.a);
    int o2 = orient(s1.a, s1.b, s2.b);
    int o3 = orient(s2.a, s2.b, s1.a);
    int o4 = orient(s2.a, s2.b, s1.b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && member(s2.a, s1)) return true;
    if (o2 == 0 && member(s2.b, s1)) return true;
    if (o3 == 0 && member(s1.a, s2)) return true;
    if (o4 == 0 && member(s1.b, s2)) return true;
    return false;
}

// Does [a,b] meet the circle |z-c| = r?  Sign analysis of the quadratic
// |a + t(b-a) - c|^2 - r^2 on [0,1]; exact, no square roots.
bool segment_meets_circle(const RegionPrimitive& seg, const GaussianRational& c,
                          const Rational& r) {
    GaussianRational d = seg.b - seg.a;
    Rational A = d.norm2();
    Rational B = 2 * dot(seg.a - c, d);
    Rational C = dist2(seg.a, c) - sq(r);
    Rational q1 = A + B + C; // value at t = 1
    int s0 = sgn(C), s1 = sgn(q1);
    if (s0 == 0 || s1 == 0) return true;
    if (s0 < 0 && s1 < 0) return false; // whole segment strictly inside the disk
    if (s0 != s1) return true;          // sign change
    // Both endpoints strictly outside: need the vertex inside [0,1] and below 0.
    Rational tstar = -B / (2 * A);
    if (sgn(tstar) < 0 || cmp(tstar, 1) > 0) return false;
    Rational qmin = C - B * B / (4 * A);
    return sgn(qmin) <= 0;
}

// p intersect q nonempty, all pairs exact.
bool intersects(const RegionPrimitive& p, const RegionPrimitive& q) {
    if (static_cast<int>(p.kind) > static_cast<int>(q.kind)) return intersects(q, p);
    if (p.kind == PrimitiveKind::Point) return member(p.a, q);
    if (p.kind == PrimitiveKind::Segment) {
        switch (q.kind) {
            case PrimitiveKind::Segment: return segments_intersect(p, q);
            case PrimitiveKind::Circle: return segment_meets_circle(p, q.a, q.radius);
            case PrimitiveKind::Disk:
                return cmp(segment_dist2(q.a, p.a, p.b), sq(q.radius)) <= 0;
            default: return false;
        }
    }
    Rational d2 = dist2(p.a, q.a);
    if (p.kind == PrimitiveKind::Circle && q.kind == PrimitiveKind::Circle)
        return cmp(d2, sq(p.radius + q.radius)) <= 0 &&
               cmp(d2, sq(p.radius - q.radius)) >= 0;
    if (p.kind == PrimitiveKind::Circle && q.kind == PrimitiveKind::Disk) {
        if (cmp(d2, sq(p.radius + q.radius)) > 0) return false;
        if (cmp(p.radius, q.radius) <= 0) return true;
        return cmp(d2, sq(p.radius - q.radius)) >= 0;
    }
    // disk-disk
    return cmp(d2, sq(p.radius + q.radius)) <= 0;
}

// p intersect {|z-c| < r} nonempty.
bool meets_open_disk(const RegionPrimitive& p, const GaussianRational& c, const Rational& r) {
    switch (p.kind) {
        case PrimitiveKind::Point: return cmp(dist2(p.a, c), sq(r)) < 0;
        case PrimitiveKind::Segment:
            return cmp(segment_dist2(c, p.a, p.b), sq(r)) < 0;
        case PrimitiveKind::Circle: {
            Rational d2 = dist2(p.a, c);
            if (cmp(d2, sq(p.radius + r)) >= 0) return false;
            if (cmp(p.radius, r) < 0) return true;
            return cmp(d2, sq(p.radius - r)) > 0;
        }
        case PrimitiveKind::Disk: return cmp(dist2(p.a, c), sq(p.radius + r)) < 0;
    }
    return false;
}

bool collinear_overlap(const RegionPrimitive& s1, const RegionPrimitive& s2,
                       RegionPrimitive& merged) {
    GaussianRational d1 = s1.b - s1.a;
    GaussianRational d2 = s2.b - s2.a;
    if (sgn(cross(d1, d2)) != 0 || sgn(cross(s2.a - s1.a, d1)) != 0) return false;
    Rational len2 = d1.norm2();
    Rational ta = dot(s2.a - s1.a, d1) / len2;
    Rational tb = dot(s2.b - s1.a, d1) / len2;
    Rational lo = std::min(ta, tb), hi = std::max(ta, tb);
    if (cmp(lo, 1) > 0 || sgn(hi) < 0) return false; // apart along the line
    Rational mlo = std::min(lo, Rational(0)), mhi = std::max(hi, Rational(1));
    GaussianRational from = s1.a + GaussianRational(mlo) * d1;
    GaussianRational to = s1.a + GaussianRational(mhi) * d1;
    merged = RegionPrimitive::segment(from, to);
    return true;
}

} // namespace

bool strictly_inside_open_disk(const RegionPrimitive& p, const GaussianRational& center,
                               const Rational& radius) {
    switch (p.kind) {
        case PrimitiveKind::Point: return cmp(dist2(p.a, center), sq(radius)) < 0;
        case PrimitiveKind::Segment:
            return cmp(dist2(p.a, center), sq(radius)) < 0 &&
                   cmp(dist2(p.b, center), sq(radius)) < 0;
        case PrimitiveKind::Circle:
        case PrimitiveKind::Disk: {
            if (cmp(p.radius, radius) >= 0) return false;
            return cmp(dist2(p.a, center), sq(radius - p.radius)) < 0;
        }
    }
    return false;
}

SpectralRegion SpectralRegion::make(std::vector<RegionPrimitive> primitives) {
    // Merge collinear segments that overlap or touch.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < primitives.size() && !changed; ++i) {
            if (primitives[i].kind != PrimitiveKind::Segment) continue;
            for (size_t j = i + 1; j < primitives.size() && !changed; ++j) {
                if (primitives[j].kind != PrimitiveKind::Segment) continue;
                RegionPrimitive merged;
                if (collinear_overlap(primitives[i], primitives[j], merged)) {
                    primitives[j] = merged;
                    primitives.erase(primitives.begin() + static_cast<long>(i));
                    changed = true;
                }
            }
        }
    }

    // Drop primitives contained in another (equal ones keep a single copy).
    std::vector<bool> removed(primitives.size(), false);
    for (size_t i = 0; i < primitives.size(); ++i) {
        for (size_t j = 0; j < primitives.size() && !removed[i]; ++j) {
            if (i == j || removed[j]) continue;
            if (!contains(primitives[j], primitives[i])) continue;
            if (primitives[i] == primitives[j] && j > i) continue;
            removed[i] = true;
        }
    }
    std::vector<RegionPrimitive> kept;
    for (size_t i = 0; i < primitives.size(); ++i)
        if (!removed[i]) kept.push_back(primitives[i]);

    std::sort(kept.begin(), kept.end(), primitive_less);
    SpectralRegion r;
    r.prims_ = std::move(kept);
    return r;
}

bool SpectralRegion::is_finite_point_set() const {
    return std::all_of(prims_.begin(), prims_.end(), [](const RegionPrimitive& p) {
        return p.kind == PrimitiveKind::Point;
    });
}

SpectralRegion boundary(const SpectralRegion& r) {
    for (const auto& d : r.primitives()) {
        if (d.kind != PrimitiveKind::Disk) continue;
        for (const auto& p : r.primitives()) {
            if (&p == &d) continue;
            if (meets_open_disk(p, d.a, d.radius))
                throw UnsupportedConfiguration("boundary: " + describe(p) +
                                               " meets the interior of " + describe(d));
        }
    }
    std::vector<RegionPrimitive> parts;
    for (const auto& p : r.primitives()) {
        if (p.kind == PrimitiveKind::Disk)
            parts.push_back(RegionPrimitive::circle(p.a, p.radius));
        else
            parts.push_back(p);
    }
    return SpectralRegion::make(std::move(parts));
}

OpenRegion interior(const SpectralRegion& r) {
    OpenRegion open;
    for (const auto& p : r.primitives())
        if (p.kind == PrimitiveKind::Disk) open.disks.push_back(p);
    for (size_t i = 0; i < open.disks.size(); ++i)
        for (size_t j = i + 1; j < open.disks.size(); ++j) {
            Rational d2 = dist2(open.disks[i].a, open.disks[j].a);
            if (cmp(d2, sq(open.disks[i].radius + open.disks[j].radius)) < 0)
                throw UnsupportedConfiguration(
                    "interior: overlapping disks " + describe(open.disks[i]) + " and " +
                    describe(open.disks[j]) + " exceed the open-disk union");
        }
    return open;
}

bool OpenRegion::member(const GaussianRational& z) const {
    for (const auto& d : disks)
        if (cmp(dist2(z, d.a), sq(d.radius)) < 0) return true;
    return false;
}

SpectralRegion accumulation(const SpectralRegion& r) {
    std::vector<RegionPrimitive> kept;
    for (const auto& p : r.primitives())
        if (p.kind != PrimitiveKind::Point) kept.push_back(p);
    return SpectralRegion::make(std::move(kept));
}

SpectralRegion isolated_points(const SpectralRegion& r) {
    std::vector<RegionPrimitive> kept;
    for (const auto& p : r.primitives())
        if (p.kind == PrimitiveKind::Point) kept.push_back(p);
    return SpectralRegion::make(std::move(kept));
}

SpectralRegion region_union(const SpectralRegion& a, const SpectralRegion& b) {
    std::vector<RegionPrimitive> all = a.primitives();
    all.insert(all.end(), b.primitives().begin(), b.primitives().end());
    return SpectralRegion::make(std::move(all));
}

namespace {

std::vector<Rational> rational_sequence(int count) {
    std::vector<Rational> out;
    for (long den = 1; static_cast<int>(out.size()) < count && den <= 64; ++den) {
        for (long num = 0; static_cast<int>(out.size()) < count && num <= 3 * den; ++num) {
            if (std::gcd(num, den) != 1 && !(num == 0 && den == 1)) continue;
            out.emplace_back(num, den);
            if (num != 0 && static_cast<int>(out.size()) < count) out.emplace_back(-num, den);
        }
    }
    return out;
}

GaussianRational circle_point(const GaussianRational& c, const Rational& r,
                              const Rational& t) {
    // Pythagorean parametrization; every value is exactly on the circle.
    Rational den = 1 + t * t;
    return c + GaussianRational(r * (1 - t * t) / den, r * (2 * t) / den);
}

} // namespace

std::vector<GaussianRational> sample_points(const RegionPrimitive& p, int count) {
    std::vector<GaussianRational> out;
    switch (p.kind) {
        case PrimitiveKind::Point:
            out.push_back(p.a);
            break;
        case PrimitiveKind::Segment: {
            GaussianRational d = p.b - p.a;
            out.push_back(p.a);
            out.push_back(p.b);
            for (long den = 2; static_cast<int>(out.size()) < count && den <= 64; ++den)
                for (long num = 1; num < den && static_cast<int>(out.size()) < count; ++num) {
                    if (std::gcd(num, den) != 1) continue;
                    out.push_back(p.a + GaussianRational(Rational(num, den)) * d);
                }
            break;
        }
        case PrimitiveKind::Circle: {
            out.push_back(p.a + GaussianRational(-p.radius, Rational(0)));
            for (const Rational& t : rational_sequence(count))
                if (static_cast<int>(out.size()) < count)
                    out.push_back(circle_point(p.a, p.radius, t));
            break;
        }
        case PrimitiveKind::Disk: {
            out.push_back(p.a);
            const Rational scales[] = {Rational(1), Rational(1, 2), Rational(3, 4),
                                       Rational(1, 4)};
            auto ts = rational_sequence(count);
            for (const Rational& s : scales)
                for (const Rational& t : ts) {
                    if (static_cast<int>(out.size()) >= count) break;
                    out.push_back(circle_point(p.a, p.radius * s, t));
                }
            break;
        }
    }
    return out;
}

namespace {

// nullopt: subset holds; point: exact counterexample.
std::optional<GaussianRational> subset_witness(const SpectralRegion& a,
                                               const SpectralRegion& b) {
    for (const auto& p : a.primitives()) {
        if (p.kind == PrimitiveKind::Point) {
            if (!member(p.a, b)) return p.a;
            continue;
        }
        bool covered = false;
        for (const auto& q : b.primitives())
            if (contains(q, p)) {
                covered = true;
                break;
            }
        if (covered) continue;
        bool touches = false;
        for (const auto& q : b.primitives())
            if (intersects(p, q)) {
                touches = true;
                break;
            }
        if (!touches) {
            // Wholly outside: any point of p witnesses.
            return sample_points(p, 1).front();
        }
        for (const auto& z : sample_points(p, 64))
            if (!member(z, b)) return z;
        throw UnsupportedConfiguration(
            "subset: " + describe(p) +
            " is not contained in any single primitive and no witness was found");
    }
    return std::nullopt;
}

} // namespace

bool subset(const SpectralRegion& a, const SpectralRegion& b) {
    return !subset_witness(a, b).has_value();
}

namespace {

// Is q's overlap with p a closed nowhere-dense subset of p (so that removing
// it does not change p's closure)?
bool removal_is_thin(const RegionPrimitive& p, const RegionPrimitive& q) {
    switch (p.kind) {
        case PrimitiveKind::Point: return true; // handled elsewhere
        case PrimitiveKind::Segment:
            if (q.kind == PrimitiveKind::Point) return true;
            if (q.kind == PrimitiveKind::Segment) {
                RegionPrimitive merged;
                RegionPrimitive s1 = p, s2 = q;
                return !collinear_overlap(s1, s2, merged); // transversal: at most a point
            }
            if (q.kind == PrimitiveKind::Circle) return true; // at most two points
            return !meets_open_disk(p, q.a, q.radius);        // disk: boundary touch only
        case PrimitiveKind::Circle:
            if (q.kind == PrimitiveKind::Disk) return !meets_open_disk(p, q.a, q.radius);
            return true; // point, segment or a different circle: finite
        case PrimitiveKind::Disk:
            if (q.kind == PrimitiveKind::Disk) {
                Rational d2 = dist2(p.a, q.a);
                return cmp(d2, sq(p.radius + q.radius)) >= 0; // at most the tangent point
            }
            return true; // curves and points are nowhere dense in the disk
    }
    return false;
}

} // namespace

bool DifferenceResult::empty() const { return subset(lhs, rhs); }

bool DifferenceResult::member(const GaussianRational& z) const {
    return spectral::member(z, lhs) && !spectral::member(z, rhs);
}

DifferenceResult difference(const SpectralRegion& a, const SpectralRegion& b) {
    DifferenceResult res;
    res.lhs = a;
    res.rhs = b;
    std::vector<RegionPrimitive> exact_parts;
    std::vector<RegionPrimitive> closure_parts;
    bool has_partial = false;
    bool closure_ok = true;

    for (const auto& p : a.primitives()) {
        bool gone = false;
        for (const auto& q : b.primitives())
            if (contains(q, p)) {
                gone = true;
                break;
            }
        if (gone) continue;
        if (p.kind == PrimitiveKind::Point) {
            if (!member(p.a, b)) exact_parts.push_back(p);
            continue;
        }
        std::vector<const RegionPrimitive*> hits;
        for (const auto& q : b.primitives())
            if (intersects(p, q)) hits.push_back(&q);
        if (hits.empty()) {
            exact_parts.push_back(p);
            continue;
        }
        has_partial = true;
        bool thin = std::all_of(hits.begin(), hits.end(), [&](const RegionPrimitive* q) {
            return removal_is_thin(p, *q);
        });
        if (thin)
            closure_parts.push_back(p);
        else
            closure_ok = false;
    }

    if (!has_partial) {
        res.exact = SpectralRegion::make(exact_parts);
        res.closure = res.exact;
        return res;
    }
    res.open_flagged = true;
    if (closure_ok) {
        std::vector<RegionPrimitive> all = exact_parts;
        all.insert(all.end(), closure_parts.begin(), closure_parts.end());
        res.closure = SpectralRegion::make(std::move(all));
    }
    return res;
}

bool Hole::member(const GaussianRational& z, const SpectralRegion& parent_region) const {
    if (cmp(dist2(z, outer.a), sq(outer.radius)) >= 0) return false;
    if (spectral::member(z, removed)) return false;
    return !spectral::member(z, parent_region);
}

HullReport connected_hull(const SpectralRegion& r) {
    HullReport rep;
    if (r.empty()) return rep;

    const auto& prims = r.primitives();
    const size_t n = prims.size();

    // Everything reaching into a circle's open disk must sit strictly inside it.
    for (size_t ci = 0; ci < n; ++ci) {
        if (prims[ci].kind != PrimitiveKind::Circle) continue;
        for (size_t j = 0; j < n; ++j) {
            if (j == ci) continue;
            if (!meets_open_disk(prims[j], prims[ci].a, prims[ci].radius)) continue;
            if (!strictly_inside_open_disk(prims[j], prims[ci].a, prims[ci].radius))
                throw UnsupportedConfiguration("connected_hull: " + describe(prims[j]) +
                                               " crosses " + describe(prims[ci]));
        }
    }

    // Parent = smallest circle whose open disk strictly contains the primitive.
    std::vector<int> parent(n, -1);
    for (size_t j = 0; j < n; ++j) {
        for (size_t ci = 0; ci < n; ++ci) {
            if (ci == j || prims[ci].kind != PrimitiveKind::Circle) continue;
            if (!strictly_inside_open_disk(prims[j], prims[ci].a, prims[ci].radius)) continue;
            if (parent[j] < 0 ||
                cmp(prims[ci].radius, prims[static_cast<size_t>(parent[j])].radius) < 0)
                parent[j] = static_cast<int>(ci);
        }
    }

    auto fill = [](const RegionPrimitive& p) {
        return p.kind == PrimitiveKind::Circle ? RegionPrimitive::disk(p.a, p.radius) : p;
    };

    std::vector<RegionPrimitive> fills;
    fills.reserve(n);
    for (const auto& p : prims) fills.push_back(fill(p));
    rep.hull = SpectralRegion::make(fills);

    for (size_t ci = 0; ci < n; ++ci) {
        if (prims[ci].kind != PrimitiveKind::Circle) continue;
        std::vector<RegionPrimitive> removed;
        for (size_t j = 0; j < n; ++j)
            if (parent[j] == static_cast<int>(ci)) removed.push_back(fill(prims[j]));
        Hole hole;
        hole.outer = prims[ci];
        hole.removed = SpectralRegion::make(std::move(removed));
        rep.holes.push_back(std::move(hole));
    }

    // Components of the hull via pairwise adjacency of its primitives.
    const auto& hp = rep.hull.primitives();
    std::vector<size_t> root(hp.size());
    std::iota(root.begin(), root.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (size_t i = 0; i < hp.size(); ++i)
        for (size_t j = i + 1; j < hp.size(); ++j)
            if (intersects(hp[i], hp[j])) root[find(i)] = find(j);
    std::set<size_t> comps;
    for (size_t i = 0; i < hp.size(); ++i) comps.insert(find(i));
    rep.component_count = static_cast<Eigen::Index>(comps.size());
    return rep;
}

PocetnaReport check_pocetna(const SpectralRegion& h, const SpectralRegion& k) {
    SpectralRegion bd_k = boundary(k);
    if (!subset(bd_k, h) || !subset(h, k))
        throw PreconditionViolated(
            "check_pocetna requires boundary(K) subset H subset K");

    PocetnaReport rep;
    auto add = [&](const std::string& name, bool pass, std::string detail = "") {
        rep.conclusions.push_back({name, pass, std::move(detail)});
        rep.all_pass = rep.all_pass && pass;
    };

    SpectralRegion bd_h = boundary(h);
    HullReport hull_k = connected_hull(k);
    HullReport hull_h = connected_hull(h);

    add("boundary(K) subset boundary(H)", subset(bd_k, bd_h));
    add("boundary(H) subset H", subset(bd_h, h));
    add("H subset K", subset(h, k));
    add("K subset hull(K)", subset(k, hull_k.hull));
    add("hull(K) equals hull(H)", hull_k.hull == hull_h.hull,
        describe(hull_k.hull) + " vs " + describe(hull_h.hull));

    // K is H plus filled holes: every sampled point of K \ H lies in a hole of H.
    DifferenceResult diff = difference(k, h);
    if (diff.empty()) {
        add("K fills holes of H", true, "K equals H");
    } else {
        bool ok = true;
        std::string bad;
        size_t outside = 0;
        for (const auto& p : k.primitives()) {
            for (const auto& z : sample_points(p, 24)) {
                if (member(z, h)) continue;
                ++outside;
                bool in_hole = std::any_of(
                    hull_h.holes.begin(), hull_h.holes.end(),
                    [&](const Hole& hole) { return hole.member(z, h); });
                if (!in_hole) {
                    ok = false;
                    bad = format_gaussian(z);
                    break;
                }
            }
            if (!ok) break;
        }
        if (outside == 0) ok = false; // nonempty difference must be observable
        add("K fills holes of H", ok,
            ok ? std::to_string(outside) + " sample points, all in holes"
               : "point " + bad + " of K \\ H lies in no hole of H");
    }
    return rep;
}

bool line_contained(const SpectralRegion& r) {
    std::vector<GaussianRational> pts;
    for (const auto& p : r.primitives()) {
        switch (p.kind) {
            case PrimitiveKind::Point: pts.push_back(p.a); break;
            case PrimitiveKind::Segment:
                pts.push_back(p.a);
                pts.push_back(p.b);
                break;
            default: return false; // circles and disks are never line-contained
        }
    }
    if (pts.size() <= 1) return true;
    GaussianRational origin = pts[0];
    GaussianRational dir;
    bool have_dir = false;
    for (const auto& z : pts) {
        if (!have_dir) {
            if (z != origin) {
                dir = z - origin;
                have_dir = true;
            }
            continue;
        }
        if (sgn(cross(z - origin, dir)) != 0) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<RegionPrimitive>> intersect_pair(const RegionPrimitive& p,
                                                           const RegionPrimitive& q) {
    if (contains(q, p)) return std::vector<RegionPrimitive>{p};
    if (contains(p, q)) return std::vector<RegionPrimitive>{q};
    if (!intersects(p, q)) return std::vector<RegionPrimitive>{};
    if (p.kind == PrimitiveKind::Point) return std::vector<RegionPrimitive>{p};
    if (q.kind == PrimitiveKind::Point) return std::vector<RegionPrimitive>{q};

    auto circles_touch_point =
        [](const RegionPrimitive& c1, const RegionPrimitive& c2,
           bool external) -> std::optional<GaussianRational> {
        Rational denom = external ? c1.radius + c2.radius : c1.radius - c2.radius;
        if (sgn(denom) == 0) return std::nullopt;
        return c1.a + GaussianRational(c1.radius / denom) * (c2.a - c1.a);
    };

    bool p_round = p.kind == PrimitiveKind::Circle || p.kind == PrimitiveKind::Disk;
    bool q_round = q.kind == PrimitiveKind::Circle || q.kind == PrimitiveKind::Disk;
    if (p_round && q_round) {
        Rational d2 = dist2(p.a, q.a);
        if (d2 == sq(p.radius + q.radius)) {
            auto z = circles_touch_point(p, q, true);
            if (z) return std::vector<RegionPrimitive>{RegionPrimitive::point(*z)};
        }
        if (d2 == sq(p.radius - q.radius) && p.radius != q.radius) {
            auto z = circles_touch_point(p, q, false);
            if (z) return std::vector<RegionPrimitive>{RegionPrimitive::point(*z)};
        }
        if (p.kind == PrimitiveKind::Circle && q.kind == PrimitiveKind::Circle) {
            // Crossing circles: rational intersection points when the height is
            // a rational square.
            Rational alpha = (d2 + sq(p.radius) - sq(q.radius)) / (2 * d2);
            Rational h2 = sq(p.radius) / d2 - sq(alpha);
            Rational h;
            if (rational_sqrt(h2, h)) {
                GaussianRational base = p.a + GaussianRational(alpha) * (q.a - p.a);
                GaussianRational normal = GaussianRational(Rational(0), Rational(1)) * (q.a - p.a);
                GaussianRational z1 = base + GaussianRational(h) * normal;
                GaussianRational z2 = base - GaussianRational(h) * normal;
                std::vector<RegionPrimitive> out{RegionPrimitive::point(z1)};
                if (z2 != z1) out.push_back(RegionPrimitive::point(z2));
                return out;
            }
        }
        return std::nullopt; // arcs and lenses are not representable
    }

    if (p.kind == PrimitiveKind::Segment && q.kind == PrimitiveKind::Segment) {
        RegionPrimitive merged;
        RegionPrimitive s1 = p, s2 = q;
        if (collinear_overlap(s1, s2, merged)) {
            // Overlap interval of the parameters along p.
            GaussianRational d = p.b - p.a;
            Rational len2 = d.norm2();
            Rational ta = dot(q.a - p.a, d) / len2;
            Rational tb = dot(q.b - p.a, d) / len2;
            Rational lo = std::max(std::min(ta, tb), Rational(0));
            Rational hi = std::min(std::max(ta, tb), Rational(1));
            GaussianRational from = p.a + GaussianRational(lo) * d;
            GaussianRational to = p.a + GaussianRational(hi) * d;
            if (from == to)
                return std::vector<RegionPrimitive>{RegionPrimitive::point(from)};
            return std::vector<RegionPrimitive>{RegionPrimitive::segment(from, to)};
        }
        // Transversal crossing at one rational point.
        GaussianRational d1 = p.b - p.a, d2g = q.b - q.a;
        Rational den = cross(d1, d2g);
        if (sgn(den) == 0) return std::nullopt;
        Rational t = cross(q.a - p.a, d2g) / den;
        GaussianRational z = p.a + GaussianRational(t) * d1;
        return std::vector<RegionPrimitive>{RegionPrimitive::point(z)};
    }

    if (p.kind == PrimitiveKind::Segment && q_round) {
        GaussianRational d = p.b - p.a;
        Rational A = d.norm2();
        Rational B = 2 * dot(p.a - q.a, d);
        Rational C = dist2(p.a, q.a) - sq(q.radius);
        Rational disc = B * B - 4 * A * C;
        Rational root;
        if (!rational_sqrt(disc, root)) return std::nullopt;
        Rational t1 = (-B - root) / (2 * A);
        Rational t2 = (-B + root) / (2 * A);
        auto clampt = [](const Rational& t) {
            return sgn(t) >= 0 && cmp(t, 1) <= 0;
        };
        if (q.kind == PrimitiveKind::Circle) {
            std::vector<RegionPrimitive> out;
            for (const Rational& t : {t1, t2}) {
                if (!clampt(t)) continue;
                RegionPrimitive pt =
                    RegionPrimitive::point(p.a + GaussianRational(t) * d);
                if (out.empty() || !(out.back() == pt)) out.push_back(pt);
            }
            return out;
        }
        // Disk: clip the segment parameter interval to [t1, t2].
        Rational lo = std::max(t1, Rational(0));
        Rational hi = std::min(t2, Rational(1));
        if (cmp(lo, hi) > 0) return std::vector<RegionPrimitive>{};
        GaussianRational from = p.a + GaussianRational(lo) * d;
        GaussianRational to = p.a + GaussianRational(hi) * d;
        if (from == to) return std::vector<RegionPrimitive>{RegionPrimitive::point(from)};
        return std::vector<RegionPrimitive>{RegionPrimitive::segment(from, to)};
    }

    if (q.kind == PrimitiveKind::Segment) {
        auto sw = intersect_pair(q, p);
        return sw;
    }
    return std::nullopt;
}

} // namespace

std::optional<SpectralRegion> try_intersection(const SpectralRegion& a,
                                               const SpectralRegion& b) {
    std::vector<RegionPrimitive> pieces;
    for (const auto& p : a.primitives())
        for (const auto& q : b.primitives()) {
            auto part = intersect_pair(p, q);
            if (!part) return std::nullopt;
            pieces.insert(pieces.end(), part->begin(), part->end());
        }
    return SpectralRegion::make(std::move(pieces));
}

bool intersection_subset(const SpectralRegion& a, const SpectralRegion& b,
                         const SpectralRegion& c) {
    try {
        if (subset(a, c) || subset(b, c)) return true;
    } catch (const UnsupportedConfiguration&) {
        // fall through to the exact-intersection route
    }
    if (auto i = try_intersection(a, b)) return subset(*i, c);
    for (const auto& p : a.primitives())
        for (const auto& z : sample_points(p, 64))
            if (member(z, b) && !member(z, c)) return false;
    throw UnsupportedConfiguration(
        "intersection_subset: intersection not representable and no witness found");
}

} // namespace spectral
