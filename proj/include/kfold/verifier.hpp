#ifndef KFOLD_VERIFIER_HPP_
#define KFOLD_VERIFIER_HPP_

#include <array>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "kfold/geometry.hpp"
#include "kfold/tiling.hpp"

namespace kfold {

enum class VerifyMode { Exact, Sampled };
enum class VerifyStatus { Verified, NotATiling, Inconclusive };

struct TilingCertificate {
    VerifyMode mode = VerifyMode::Exact;
    VerifyStatus status = VerifyStatus::Inconclusive;
    std::optional<int> k;
    long long checked = 0;  // cells (exact) or probes (sampled)

    // NotATiling evidence: two points whose open multiplicities disagree.
    std::optional<Vec2> baseline_witness;
    Multiplicity baseline_counts;
    std::optional<Vec2> witness;
    Multiplicity witness_counts;

    std::optional<std::array<Vec2, 4>> fundamental_domain;  // CCW corners, exact mode

    bool verified() const { return status == VerifyStatus::Verified; }
};

/// A rank-2 lattice contained in every part lattice, when all pairwise
/// intersections have rank 2; nullopt for incommensurable unions.
inline std::optional<Lattice2> common_sublattice(const TileMultiset& x) {
    const auto& parts = x.parts();
    Lattice2 common = parts[0].lattice;
    for (size_t j = 1; j < parts.size(); ++j) {
        LatticeIntersection inter = intersect_lattices(common, parts[j].lattice);
        if (inter.rank < 2) return std::nullopt;
        common = *inter.lattice;
    }
    return common;
}

/// One open cell of the arrangement restricted to the fundamental domain:
/// a trapezoid between two segments over a vertical slab.
struct ArrangementCell {
    Vec2 witness;       // interior point (slab midline, vertical midpoint)
    int open_mult = 0;  // open multiplicity, constant on the cell
    Vec2 bl, br, tl, tr;  // corners at the slab walls (bottom-left/right, top-left/right)
};

struct ExactDecomposition {
    TilingCertificate cert;
    Lattice2 common;
    std::array<Vec2, 4> domain;
    std::vector<ArrangementCell> cells;
};

namespace detail {

// A translate edge clipped to the fundamental domain. `delta` is the change
// of open multiplicity when crossing the segment upward: +1 enters the
// translate (interior above), -1 leaves it; the domain's own boundary
// carries 0.
struct SlabSeg {
    Vec2 a, b;  // a.x <= b.x; for vertical segments a.y <= b.y
    int delta = 0;

    bool vertical() const { return a.x == b.x; }
    Scalar y_at(const Scalar& x) const {
        return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
    }
};

inline std::optional<SlabSeg> clip_to_domain(Vec2 a, Vec2 b, int delta,
                                             const std::array<Vec2, 4>& dom) {
    const Vec2 d = b - a;
    Scalar lo(0), hi(1);
    for (int i = 0; i < 4; ++i) {
        const Vec2 edge = dom[(i + 1) % 4] - dom[i];
        // inside: cross(edge, p - dom[i]) >= 0; linear in t: alpha + t*beta >= 0
        const Scalar alpha = cross(edge, a - dom[i]);
        const Scalar beta = cross(edge, d);
        const int bs = beta.sign();
        if (bs == 0) {
            if (alpha.sign() < 0) return std::nullopt;
        } else if (bs > 0) {
            const Scalar t = -alpha / beta;
            if (t > lo) lo = t;
        } else {
            const Scalar t = -alpha / beta;
            if (t < hi) hi = t;
        }
    }
    if (!(lo < hi)) return std::nullopt;
    Vec2 pa = a + d * lo;
    Vec2 pb = a + d * hi;
    if (pa == pb) return std::nullopt;
    if (pa.x > pb.x || (pa.x == pb.x && pa.y > pb.y)) std::swap(pa, pb);
    return SlabSeg{std::move(pa), std::move(pb), delta};
}

}  // namespace detail

/// Exact decision on a periodic fundamental domain: collects every translate
/// edge meeting the domain of the common sublattice, slices the domain into
/// vertical slabs at all endpoint and crossing abscissae, and walks each
/// slab bottom-to-top accumulating the open multiplicity across edges. The
/// tiling criterion is that all open cells agree on one value k; boundary
/// points then satisfy the closed-count requirement by closure of the
/// translates.
inline ExactDecomposition exact_decomposition(const SymPolygon& p, const TileMultiset& x) {
    auto common = common_sublattice(x);
    if (!common)
        throw Error(ErrorCode::Incommensurable,
                    "no rank-2 common sublattice; exact verification needs commensurable parts");

    Vec2 cu = common->u(), cv = common->v();
    if (cross(cu, cv).sign() < 0) std::swap(cu, cv);
    const Vec2 zero{Scalar(0), Scalar(0)};
    const std::array<Vec2, 4> dom = {zero, cu, cu + cv, cv};

    const std::vector<Vec2> origins =
        translates_meeting(x, p, ConvexRegion::from_points({dom.begin(), dom.end()}));

    std::vector<detail::SlabSeg> segs;
    for (const Vec2& o : origins) {
        for (int i = 0; i < p.edge_count(); ++i) {
            const Vec2 ev = p.edge_vector(i);
            const int dxs = ev.x.sign();
            const int delta = dxs > 0 ? 1 : (dxs < 0 ? -1 : 0);
            if (auto seg = detail::clip_to_domain(p.vertex(i) + o, p.vertex(i + 1) + o, delta, dom))
                segs.push_back(std::move(*seg));
        }
    }
    for (int i = 0; i < 4; ++i) {
        if (auto seg = detail::clip_to_domain(dom[i], dom[(i + 1) % 4], 0, dom))
            segs.push_back(std::move(*seg));
    }

    // Slab boundaries: endpoint abscissae plus pairwise crossing abscissae.
    std::vector<Scalar> events;
    for (const auto& s : segs) {
        events.push_back(s.a.x);
        events.push_back(s.b.x);
    }
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const auto& s = segs[i];
            const auto& t = segs[j];
            if (s.b.x < t.a.x || t.b.x < s.a.x) continue;
            SegIntersection si = segment_intersection(Segment(s.a, s.b), Segment(t.a, t.b));
            if (si.kind == SegIntersection::Kind::Point) events.push_back(si.point.x);
        }
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    auto open_mult_at = [&](const Vec2& q) {
        int m = 0;
        for (const Vec2& o : origins)
            if (p.locate(q - o).strictly_inside()) ++m;
        return m;
    };

    ExactDecomposition result{TilingCertificate{}, *common, dom, {}};
    TilingCertificate& cert = result.cert;
    cert.mode = VerifyMode::Exact;
    cert.fundamental_domain = dom;

    std::optional<int> k;
    for (size_t e = 0; e + 1 < events.size(); ++e) {
        const Scalar& x0 = events[e];
        const Scalar& x1 = events[e + 1];
        if (!(x0 < x1)) continue;
        const Scalar xm = (x0 + x1) / Scalar(2);

        struct Crossing {
            Scalar y;
            const detail::SlabSeg* seg;
        };
        std::vector<Crossing> cross_list;
        for (const auto& s : segs) {
            if (s.vertical()) continue;
            if (s.a.x <= x0 && s.b.x >= x1) cross_list.push_back({s.y_at(xm), &s});
        }
        std::sort(cross_list.begin(), cross_list.end(),
                  [](const Crossing& a, const Crossing& b) { return a.y < b.y; });

        // Group ties (collinear stacks) and accumulate deltas per group.
        struct Group {
            Scalar y;
            int delta = 0;
            const detail::SlabSeg* rep = nullptr;
        };
        std::vector<Group> groups;
        for (const Crossing& c : cross_list) {
            if (!groups.empty() && groups.back().y == c.y) {
                groups.back().delta += c.seg->delta;
            } else {
                groups.push_back({c.y, c.seg->delta, c.seg});
            }
        }
        if (groups.size() < 2) continue;  // grazing slab with no interior

        std::optional<int> mult;  // multiplicity of the current cell
        for (size_t g = 0; g + 1 < groups.size(); ++g) {
            const Scalar wy = (groups[g].y + groups[g + 1].y) / Scalar(2);
            ArrangementCell cell;
            cell.witness = Vec2(xm, wy);
            if (!mult) {
                mult = open_mult_at(cell.witness);
            } else {
                mult = *mult + groups[g].delta;
            }
            cell.open_mult = *mult;
            cell.bl = Vec2(x0, groups[g].rep->y_at(x0));
            cell.br = Vec2(x1, groups[g].rep->y_at(x1));
            cell.tl = Vec2(x0, groups[g + 1].rep->y_at(x0));
            cell.tr = Vec2(x1, groups[g + 1].rep->y_at(x1));
            ++cert.checked;

            if (!k) {
                k = cell.open_mult;
                cert.baseline_witness = cell.witness;
            } else if (*k != cell.open_mult && cert.status != VerifyStatus::NotATiling) {
                cert.status = VerifyStatus::NotATiling;
                cert.witness = cell.witness;
            }
            result.cells.push_back(std::move(cell));
        }
    }

    if (cert.status == VerifyStatus::NotATiling) {
        cert.baseline_counts = multiplicity_at(x, p, *cert.baseline_witness);
        cert.witness_counts = multiplicity_at(x, p, *cert.witness);
    } else if (k) {
        cert.status = VerifyStatus::Verified;
        cert.k = *k;
        cert.baseline_witness.reset();
    }
    return result;
}

inline TilingCertificate verify_exact(const SymPolygon& p, const TileMultiset& x) {
    return exact_decomposition(p, x).cert;
}

/// Ceiling of sqrt(s) for a non-negative scalar, as an integer.
inline Int sqrt_ceil(const Scalar& s) {
    if (s.sign() < 0) throw Error(ErrorCode::InvalidArgument, "sqrt of negative value");
    Int n = s.ceil();
    Int r = boost::multiprecision::sqrt(n);
    while (r * r < n) ++r;
    return r;
}

/// Probabilistic verification at pseudo-random rational probes in a window
/// at least three diameters wide. A disagreement is a conclusive
/// counterexample; agreement is only sampled evidence (mode stays Sampled).
inline TilingCertificate verify_sampled(const SymPolygon& p, const TileMultiset& x, int probes,
                                        uint64_t seed) {
    TilingCertificate cert;
    cert.mode = VerifyMode::Sampled;
    if (probes <= 0) {
        cert.status = VerifyStatus::Inconclusive;
        return cert;
    }

    const Int w = 3 * sqrt_ceil(p.diameter_sq()) + 1;
    std::mt19937_64 rng(seed);
    const Int grid = Int(1) << 20;
    std::uniform_int_distribution<uint32_t> dist(0, (1u << 20) - 1);

    std::optional<int> k;
    for (int i = 0; i < probes; ++i) {
        const Rat rx(Int(dist(rng)), grid);
        const Rat ry(Int(dist(rng)), grid);
        Vec2 probe{Scalar(Rat(w) * rx - Rat(w, 2)), Scalar(Rat(w) * ry - Rat(w, 2))};
        // Walk off translate boundaries deterministically.
        Multiplicity m = multiplicity_at(x, p, probe);
        for (Int f = Int(1) << 24; m.closed != m.open; f <<= 1) {
            probe = Vec2{probe.x + Scalar(Int(1), f), probe.y + Scalar(Int(1), f * f)};
            m = multiplicity_at(x, p, probe);
        }
        ++cert.checked;
        if (!k) {
            k = m.open;
            cert.baseline_witness = probe;
            cert.baseline_counts = m;
        } else if (*k != m.open) {
            cert.status = VerifyStatus::NotATiling;
            cert.witness = probe;
            cert.witness_counts = m;
            return cert;
        }
    }
    cert.status = VerifyStatus::Verified;
    cert.k = *k;
    cert.baseline_witness.reset();
    return cert;
}

}  // namespace kfold

#endif  // KFOLD_VERIFIER_HPP_
