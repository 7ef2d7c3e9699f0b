#ifndef KFOLD_TILING_HPP_
#define KFOLD_TILING_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "kfold/geometry.hpp"
#include "kfold/lattice.hpp"

namespace kfold {

/// One underlying lattice with its coset offsets. Repeated offsets are
/// multiplicities (each copy counts).
struct TilePart {
    Lattice2 lattice;
    std::vector<Vec2> offsets;
};

/// The translate multiset X: a finite union of translated lattices, grouped
/// so that rank-2-equal lattices share one part.
class TileMultiset {
  public:
    static TileMultiset from_cosets(const std::vector<TranslatedLattice>& cosets) {
        if (cosets.empty()) throw Error(ErrorCode::InvalidArgument, "empty translate multiset");
        TileMultiset x;
        for (const TranslatedLattice& c : cosets) {
            bool placed = false;
            for (TilePart& part : x.parts_) {
                if (part.lattice.equals(c.lattice)) {
                    part.offsets.push_back(c.offset);
                    placed = true;
                    break;
                }
            }
            if (!placed) x.parts_.push_back({c.lattice, {c.offset}});
        }
        for (TilePart& part : x.parts_) std::sort(part.offsets.begin(), part.offsets.end(), lex_less);
        return x;
    }

    static TileMultiset single(const Lattice2& lattice, Vec2 offset = {Scalar(0), Scalar(0)}) {
        return from_cosets({TranslatedLattice{lattice, std::move(offset)}});
    }

    const std::vector<TilePart>& parts() const { return parts_; }

    int coset_count() const {
        int n = 0;
        for (const TilePart& p : parts_) n += static_cast<int>(p.offsets.size());
        return n;
    }

    /// Multiset multiplicity of p as a member of X.
    int count(const Vec2& p) const {
        int n = 0;
        for (const TilePart& part : parts_)
            for (const Vec2& t : part.offsets)
                if (part.lattice.contains(p - t)) ++n;
        return n;
    }
    bool contains(const Vec2& p) const { return count(p) > 0; }

  private:
    std::vector<TilePart> parts_;
};

/// First pair of distinct underlying lattices whose intersection has rank 2
/// (violating the union normal form), or nullopt when the grouping is sound.
inline std::optional<std::pair<int, int>> structure_check(const TileMultiset& x) {
    const auto& parts = x.parts();
    for (size_t j = 0; j < parts.size(); ++j)
        for (size_t j2 = j + 1; j2 < parts.size(); ++j2)
            if (intersection_rank(parts[j].lattice, parts[j2].lattice) == 2)
                return std::make_pair(static_cast<int>(j), static_cast<int>(j2));
    return std::nullopt;
}

/// All x in X (with multiplicity) whose translate x+P meets the region:
/// x ranges over (R + (-P)) intersected with each coset. Lexicographically
/// sorted; duplicates are genuine multiplicities.
inline std::vector<Vec2> translates_meeting(const TileMultiset& x, const SymPolygon& p,
                                            const ConvexRegion& region) {
    const ConvexRegion shifted = minkowski_sum(region.hull, p.negated_vertices());
    std::vector<Vec2> out;
    for (const TilePart& part : x.parts()) {
        for (const Vec2& t : part.offsets) {
            std::vector<Vec2> pts = enumerate_in_region({part.lattice, t}, shifted);
            out.insert(out.end(), pts.begin(), pts.end());
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

struct Multiplicity {
    int closed = 0;  // translates of closed P containing the point
    int open = 0;    // translates of int(P) containing the point
};

/// Exact multiplicity of q in P + X, counting multiset multiplicity.
inline Multiplicity multiplicity_at(const TileMultiset& x, const SymPolygon& p, const Vec2& q) {
    Multiplicity result;
    // lambda + t + v in P  <=>  lambda in (q - t) + (-P)
    std::vector<Vec2> neg = p.negated_vertices();
    for (const TilePart& part : x.parts()) {
        for (const Vec2& t : part.offsets) {
            std::vector<Vec2> shifted = neg;
            for (Vec2& w : shifted) w = w + (q - t);
            for (const Vec2& lambda : enumerate_in_region({part.lattice, {Scalar(0), Scalar(0)}},
                                                          ConvexRegion{shifted})) {
                Location loc = p.locate(q - t - lambda);
                if (loc.inside_closed()) ++result.closed;
                if (loc.strictly_inside()) ++result.open;
            }
        }
    }
    return result;
}

struct NormalPointReport {
    Vec2 point;
    int n1 = 0, n2 = 0;
    std::vector<Vec2> witnesses1, witnesses2;  // translate origins, flush left/right of the line
};

struct NormalScan {
    std::vector<Vec2> non_normal;            // discrete exceptional set inside the window
    std::vector<NormalPointReport> samples;  // one per open interval between them
};

/// Scans a window on the carrier line of a translate edge. Non-normal
/// points are transversal boundary crossings and translate vertices on the
/// line; each open interval in between is sampled at its exact midpoint.
/// H1 is the left half-plane of the window's direction.
inline NormalScan normal_point_scan(const TileMultiset& x, const SymPolygon& p, const Segment& edge,
                                    const Segment& window) {
    const Vec2 dir = window.direction();
    if (cross(edge.direction(), dir).sign() != 0 ||
        cross(dir, edge.a - window.a).sign() != 0)
        throw Error(ErrorCode::InvalidArgument, "window is not collinear with the edge");

    bool is_edge = false;
    const int n = p.edge_count();
    for (int i = 0; i < n && !is_edge; ++i) {
        const Vec2 va = p.vertex(i), vb = p.vertex(i + 1);
        if (x.contains(edge.a - va) && edge.b == edge.a - va + vb) is_edge = true;
        if (x.contains(edge.b - va) && edge.a == edge.b - va + vb) is_edge = true;
    }
    if (!is_edge) throw Error(ErrorCode::NotAnEdge, "segment is not an edge of any translate");

    const std::vector<Vec2> origins =
        translates_meeting(x, p, ConvexRegion::from_points({window.a, window.b}));

    // Positions along the window, as exact parameters in (0,1).
    const Scalar dd = norm_sq(dir);
    auto param = [&](const Vec2& pt) { return dot(pt - window.a, dir) / dd; };

    std::vector<Scalar> cuts;
    auto add_cut = [&](const Vec2& pt) {
        const Scalar t = param(pt);
        if (t.sign() > 0 && (Scalar(1) - t).sign() > 0) cuts.push_back(t);
    };
    {
        // Multiplicity does not matter for the cut set; scan unique origins.
        std::vector<Vec2> uniq = origins;
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (const Vec2& o : uniq) {
            for (int i = 0; i < n; ++i) {
                Segment f(p.vertex(i) + o, p.vertex(i + 1) + o);
                SegIntersection si = segment_intersection(f, window);
                if (si.kind == SegIntersection::Kind::Point) {
                    add_cut(si.point);
                } else if (si.kind == SegIntersection::Kind::Overlap) {
                    add_cut(p.vertex(i) + o);
                    add_cut(p.vertex(i + 1) + o);
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    NormalScan scan;
    for (const Scalar& t : cuts) scan.non_normal.push_back(window.a + dir * t);

    std::vector<Scalar> bounds;
    bounds.push_back(Scalar(0));
    bounds.insert(bounds.end(), cuts.begin(), cuts.end());
    bounds.push_back(Scalar(1));
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        if (!(bounds[i] < bounds[i + 1])) continue;
        const Scalar mid = (bounds[i] + bounds[i + 1]) / Scalar(2);
        NormalPointReport rep;
        rep.point = window.a + dir * mid;
        for (const Vec2& o : origins) {
            const Location loc = p.locate(rep.point - o);
            if (!loc.inside_closed() || loc.strictly_inside()) continue;
            bool left_ok = true, right_ok = true;
            for (const Vec2& v : p.vertices()) {
                int s = line_side(window.a, dir, v + o);
                if (s < 0) left_ok = false;
                if (s > 0) right_ok = false;
            }
            // Translates straddling the line are counted on neither side.
            if (left_ok) {
                rep.witnesses1.push_back(o);
            } else if (right_ok) {
                rep.witnesses2.push_back(o);
            }
        }
        rep.n1 = static_cast<int>(rep.witnesses1.size());
        rep.n2 = static_cast<int>(rep.witnesses2.size());
        scan.samples.push_back(std::move(rep));
    }
    return scan;
}

enum class NeighborVia { EdgeVector, DiagonalVector };

struct NeighborCheck {
    bool holds = false;
    std::optional<NeighborVia> via;
};

/// For x in X and edge index i (0-based, i < m): does x - e_i or x - e*_i
/// also belong to X? Checking one representative per coset settles the whole
/// coset, since membership is invariant under lattice translations.
inline NeighborCheck edge_neighbor_check(const TileMultiset& x, const SymPolygon& p, const Vec2& origin,
                                         int i) {
    if (i < 0 || i >= p.m())
        throw Error(ErrorCode::InvalidArgument, "edge index out of range");
    if (!x.contains(origin))
        throw Error(ErrorCode::MissingPoint, "origin " + origin.str() + " is not in X");
    if (x.contains(origin - p.edge_vector(i))) return {true, NeighborVia::EdgeVector};
    if (x.contains(origin - p.estar_vector(i))) return {true, NeighborVia::DiagonalVector};
    return {false, std::nullopt};
}

}  // namespace kfold

#endif  // KFOLD_TILING_HPP_
