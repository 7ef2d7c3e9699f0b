#ifndef KFOLD_GEOMETRY_HPP_
#define KFOLD_GEOMETRY_HPP_

#include <algorithm>
#include <utility>
#include <vector>

#include "kfold/error.hpp"
#include "kfold/scalar.hpp"

namespace kfold {

struct Vec2 {
    Scalar x, y;

    Vec2() = default;
    Vec2(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Scalar& s) const { return {x * s, y * s}; }
    Vec2 operator/(const Scalar& s) const { return {x / s, y / s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

using Point = Vec2;

inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Scalar norm_sq(const Vec2& a) { return dot(a, a); }

/// Lexicographic x-then-y order; the canonical order for all point lists.
inline bool lex_less(const Vec2& a, const Vec2& b) {
    int c = (a.x - b.x).sign();
    if (c != 0) return c < 0;
    return (a.y - b.y).sign() < 0;
}

struct Segment {
    Vec2 a, b;

    Segment() = default;
    Segment(Vec2 pa, Vec2 pb) : a(std::move(pa)), b(std::move(pb)) {
        if (a == b) throw Error(ErrorCode::InvalidArgument, "degenerate segment " + a.str());
    }
    Vec2 direction() const { return b - a; }
};

/// Sign of p relative to the directed line a -> a+dir: +1 left, 0 on, -1 right.
inline int line_side(const Vec2& a, const Vec2& dir, const Vec2& p) {
    return cross(dir, p - a).sign();
}

enum class LocateKind { Interior, OnEdge, OnVertex, Outside };

struct Location {
    LocateKind kind;
    int index;  // edge index for OnEdge, vertex index for OnVertex, -1 otherwise

    bool inside_closed() const { return kind != LocateKind::Outside; }
    bool strictly_inside() const { return kind == LocateKind::Interior; }
};

/// Exact point location against a strictly convex CCW vertex chain.
inline Location polygon_locate(const std::vector<Vec2>& verts, const Vec2& p) {
    const int n = static_cast<int>(verts.size());
    int on_edge = -1;
    for (int i = 0; i < n; ++i) {
        const Vec2& a = verts[i];
        const Vec2& b = verts[(i + 1) % n];
        int s = line_side(a, b - a, p);
        if (s < 0) return {LocateKind::Outside, -1};
        if (s == 0) {
            if (p == a) return {LocateKind::OnVertex, i};
            if (p == b) return {LocateKind::OnVertex, (i + 1) % n};
            // On the edge line; containment in the slab follows from the
            // remaining half-plane tests, so note it and keep scanning.
            if (dot(p - a, b - a).sign() > 0 && dot(p - b, a - b).sign() > 0) on_edge = i;
        }
    }
    if (on_edge >= 0) return {LocateKind::OnEdge, on_edge};
    return {LocateKind::Interior, -1};
}

/// Shoelace area of a CCW chain (positive for CCW).
inline Scalar polygon_area(const std::vector<Vec2>& verts) {
    Scalar twice(0);
    const int n = static_cast<int>(verts.size());
    for (int i = 0; i < n; ++i) twice += cross(verts[i], verts[(i + 1) % n]);
    return twice / Scalar(2);
}

/// Andrew monotone chain. Returns the hull CCW starting at the lexicographic
/// minimum; collinear interior points are dropped. Degenerate inputs yield
/// chains of size 1 (single point) or 2 (all points collinear).
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;
    std::vector<Vec2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {  // upper hull
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
    return hull;
}

/// A bounded convex region: a hull that may be a point, a segment, or a
/// CCW polygon. Used for enumeration windows and Minkowski sums.
struct ConvexRegion {
    std::vector<Vec2> hull;  // convex_hull output

    static ConvexRegion from_points(const std::vector<Vec2>& pts) {
        if (pts.empty()) throw Error(ErrorCode::RegionUnbounded, "empty region");
        return {convex_hull(pts)};
    }

    bool contains(const Vec2& p) const {
        switch (hull.size()) {
            case 0: return false;
            case 1: return p == hull[0];
            case 2: {
                const Vec2 d = hull[1] - hull[0];
                if (cross(d, p - hull[0]).sign() != 0) return false;
                return dot(p - hull[0], d).sign() >= 0 && dot(p - hull[1], -d).sign() >= 0;
            }
            default: return polygon_locate(hull, p).inside_closed();
        }
    }
};

/// Minkowski sum as the hull of pairwise vertex sums (exact, handles
/// degenerate summands).
inline ConvexRegion minkowski_sum(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    std::vector<Vec2> sums;
    sums.reserve(a.size() * b.size());
    for (const Vec2& p : a)
        for (const Vec2& q : b) sums.push_back(p + q);
    return ConvexRegion::from_points(sums);
}

struct SegIntersection {
    enum class Kind { Empty, Point, Overlap } kind;
    Vec2 point;       // valid for Kind::Point
    Vec2 ov_a, ov_b;  // valid for Kind::Overlap

    static SegIntersection empty() { return {Kind::Empty, {}, {}, {}}; }
};

/// Exact closed-segment intersection classification.
inline SegIntersection segment_intersection(const Segment& s, const Segment& t) {
    const Vec2 r = s.direction();
    const Vec2 q = t.direction();
    const Vec2 w = t.a - s.a;
    const Scalar denom = cross(r, q);
    if (denom.sign() != 0) {
        const Scalar u = cross(w, q) / denom;
        const Scalar v = cross(w, r) / denom;
        if (u.sign() < 0 || (u - Scalar(1)).sign() > 0 || v.sign() < 0 || (v - Scalar(1)).sign() > 0)
            return SegIntersection::empty();
        return {SegIntersection::Kind::Point, s.a + r * u, {}, {}};
    }
    if (cross(w, r).sign() != 0) return SegIntersection::empty();
    // Collinear: overlap interval in s-parameters.
    const Scalar rr = norm_sq(r);
    Scalar ta = dot(w, r) / rr;
    Scalar tb = dot(t.b - s.a, r) / rr;
    if (ta > tb) std::swap(ta, tb);
    const Scalar lo = std::max(ta, Scalar(0), [](const Scalar& x, const Scalar& y) { return x < y; });
    const Scalar hi = std::min(tb, Scalar(1), [](const Scalar& x, const Scalar& y) { return x < y; });
    if (lo > hi) return SegIntersection::empty();
    if (lo == hi) return {SegIntersection::Kind::Point, s.a + r * lo, {}, {}};
    return {SegIntersection::Kind::Overlap, {}, s.a + r * lo, s.a + r * hi};
}

inline SegIntersection segment_line_intersection(const Segment& s, const Segment& t) {
    return segment_intersection(s, t);
}

/// Centrally symmetric strictly convex polygon with 2m CCW vertices.
/// Vertices are stored in canonical rotation (lexicographically smallest
/// vertex first). The edge system follows the usual indexing for symmetric
/// 2m-gons: e_i = v_{i+1} - v_i for the 2m edges and, for the first m edges,
/// the antipodal diagonals e*_i = v_{i+m} - v_{i+1}.
class SymPolygon {
  public:
    static SymPolygon from_vertices(std::vector<Vec2> verts) {
        const int n = static_cast<int>(verts.size());
        if (n < 4 || n % 2 != 0)
            throw Error(ErrorCode::InvalidPolygon,
                        "need an even vertex count 2m with m >= 2, got " + std::to_string(n));
        const int m = n / 2;
        for (int i = 0; i < n; ++i) {
            const Vec2& a = verts[i];
            const Vec2& b = verts[(i + 1) % n];
            const Vec2& c = verts[(i + 2) % n];
            if (cross(b - a, c - b).sign() <= 0)
                throw Error(ErrorCode::InvalidPolygon,
                            "vertices must be strictly convex in counterclockwise order (violated at index " +
                                std::to_string((i + 1) % n) + ")");
        }
        const Vec2 center = (verts[0] + verts[m]) / Scalar(2);
        for (int i = 0; i < m; ++i) {
            if (verts[i + m] != center * Scalar(2) - verts[i])
                throw Error(ErrorCode::InvalidPolygon,
                            "not centrally symmetric: v[" + std::to_string(i + m) + "] != 2c - v[" +
                                std::to_string(i) + "]");
        }
        int start = 0;
        for (int i = 1; i < n; ++i)
            if (lex_less(verts[i], verts[start])) start = i;
        std::rotate(verts.begin(), verts.begin() + start, verts.end());
        return SymPolygon(std::move(verts), center, m);
    }

    const std::vector<Vec2>& vertices() const { return verts_; }
    const Vec2& center() const { return center_; }
    int m() const { return m_; }
    int edge_count() const { return 2 * m_; }

    Vec2 vertex(int i) const { return verts_[mod(i)]; }
    Vec2 edge_vector(int i) const { return verts_[mod(i + 1)] - verts_[mod(i)]; }
    /// e*_i = v_{i+m} - v_{i+1}, defined for 0 <= i < m.
    Vec2 estar_vector(int i) const { return verts_[mod(i + m_)] - verts_[mod(i + 1)]; }
    Segment edge_segment(int i) const { return Segment(verts_[mod(i)], verts_[mod(i + 1)]); }
    Vec2 edge_midpoint(int i) const { return (verts_[mod(i)] + verts_[mod(i + 1)]) / Scalar(2); }

    std::vector<Vec2> edge_vectors() const {
        std::vector<Vec2> e;
        for (int i = 0; i < 2 * m_; ++i) e.push_back(edge_vector(i));
        return e;
    }
    std::vector<Vec2> estar_vectors() const {
        std::vector<Vec2> s;
        for (int i = 0; i < m_; ++i) s.push_back(estar_vector(i));
        return s;
    }

    Scalar area() const { return polygon_area(verts_); }
    Location locate(const Vec2& p) const { return polygon_locate(verts_, p); }

    SymPolygon translated(const Vec2& t) const {
        std::vector<Vec2> verts = verts_;
        for (Vec2& v : verts) v = v + t;
        return SymPolygon(std::move(verts), center_ + t, m_);
    }
    SymPolygon centered_at_origin() const { return translated(-center_); }
    bool is_origin_centered() const { return center_.is_zero(); }

    /// Squared diameter (largest vertex-to-vertex distance).
    Scalar diameter_sq() const {
        Scalar best(0);
        for (size_t i = 0; i < verts_.size(); ++i)
            for (size_t j = i + 1; j < verts_.size(); ++j)
                best = std::max(best, norm_sq(verts_[i] - verts_[j]),
                                [](const Scalar& a, const Scalar& b) { return a < b; });
        return best;
    }

    /// Vertices of -P (reflection through the origin), in CCW order.
    std::vector<Vec2> negated_vertices() const {
        std::vector<Vec2> out;
        for (auto it = verts_.rbegin(); it != verts_.rend(); ++it) out.push_back(-*it);
        return out;
    }

  private:
    SymPolygon(std::vector<Vec2> verts, Vec2 center, int m)
        : verts_(std::move(verts)), center_(std::move(center)), m_(m) {}

    int mod(int i) const {
        const int n = 2 * m_;
        return ((i % n) + n) % n;
    }

    std::vector<Vec2> verts_;
    Vec2 center_;
    int m_;
};

}  // namespace kfold

#endif  // KFOLD_GEOMETRY_HPP_
