#ifndef KFOLD_LATTICE_HPP_
#define KFOLD_LATTICE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "kfold/geometry.hpp"
#include "kfold/intlin.hpp"
#include "kfold/scalar.hpp"

namespace kfold {

/// Full-rank planar lattice given by an arbitrary exact basis. No reduction
/// is performed; equality is mutual containment of bases.
class Lattice2 {
  public:
    static Lattice2 from_basis(Vec2 u, Vec2 v) {
        Scalar d = cross(u, v);
        if (d.sign() == 0)
            throw Error(ErrorCode::InvalidArgument,
                        "lattice basis is singular: " + u.str() + ", " + v.str());
        return Lattice2(std::move(u), std::move(v), std::move(d));
    }

    static Lattice2 integers() { return from_basis({Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}); }

    const Vec2& u() const { return u_; }
    const Vec2& v() const { return v_; }
    const Scalar& det() const { return det_; }
    Scalar abs_det() const { return det_.abs(); }

    /// Exact coordinates (c1, c2) with w = c1*u + c2*v.
    std::pair<Scalar, Scalar> coords(const Vec2& w) const {
        return {cross(w, v_) / det_, cross(u_, w) / det_};
    }

    Vec2 point(const Scalar& c1, const Scalar& c2) const { return u_ * c1 + v_ * c2; }
    Vec2 point(const Int& a, const Int& b) const { return u_ * Scalar(a) + v_ * Scalar(b); }

    /// Membership with integer-coefficient witness.
    std::optional<std::pair<Int, Int>> member(const Vec2& w) const {
        auto [c1, c2] = coords(w);
        if (!c1.is_integer() || !c2.is_integer()) return std::nullopt;
        return std::make_pair(rat_num(c1.rational_part()), rat_num(c2.rational_part()));
    }
    bool contains(const Vec2& w) const { return member(w).has_value(); }

    /// Minimal positive q with w in (1/q)*L, when the basis coordinates of w
    /// are rational; nullopt otherwise.
    std::optional<Int> rational_commensurate(const Vec2& w) const {
        if (w.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero vector has no commensuration");
        auto [c1, c2] = coords(w);
        if (!c1.is_rational() || !c2.is_rational()) return std::nullopt;
        return int_lcm(rat_den(c1.rational_part()), rat_den(c2.rational_part()));
    }

    Lattice2 scaled(const Int& num, const Int& den) const {
        if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero scale denominator");
        const Scalar f = Scalar(num, den);
        return from_basis(u_ * f, v_ * f);
    }

    bool equals(const Lattice2& o) const {
        return contains(o.u_) && contains(o.v_) && o.contains(u_) && o.contains(v_);
    }

  private:
    Lattice2(Vec2 u, Vec2 v, Scalar det) : u_(std::move(u)), v_(std::move(v)), det_(std::move(det)) {}

    Vec2 u_, v_;
    Scalar det_;
};

/// A coset Lambda + x.
struct TranslatedLattice {
    Lattice2 lattice;
    Vec2 offset;
};

struct LatticeIntersection {
    int rank = 0;
    std::optional<Lattice2> lattice;  // rank 2: L1 and L2's common sublattice
    std::optional<Vec2> direction;    // rank 1: generator of the intersection group
};

/// Exact intersection of two lattices as a subgroup of the plane.
/// Rank 2 iff both basis vectors of l2 have rational coordinates in l1's
/// basis; the rank-2 basis is computed from the integer-congruence kernel
/// (denominators cleared, Hermite form).
inline LatticeIntersection intersect_lattices(const Lattice2& l1, const Lattice2& l2) {
    auto [cu1, cu2] = l1.coords(l2.u());
    auto [cv1, cv2] = l1.coords(l2.v());

    const bool all_rational =
        cu1.is_rational() && cu2.is_rational() && cv1.is_rational() && cv2.is_rational();
    if (all_rational) {
        const Rat r11 = cu1.rational_part(), r21 = cu2.rational_part();
        const Rat r12 = cv1.rational_part(), r22 = cv2.rational_part();
        Int m = int_lcm(int_lcm(rat_den(r11), rat_den(r21)), int_lcm(rat_den(r12), rat_den(r22)));
        auto scaled = [&m](const Rat& r) { return rat_num(r) * (m / rat_den(r)); };
        // Kernel of (a, b, y1, y2) -> A*(a,b) - m*(y1,y2): projections to
        // (a, b) span {integer combinations of l2's basis lying in l1}.
        IntMat mat = {{scaled(r11), scaled(r12), -m, Int(0)},
                      {scaled(r21), scaled(r22), Int(0), -m}};
        IntMat kernel = integer_kernel(mat);
        IntMat zcols(2, std::vector<Int>(kernel.size()));
        for (size_t j = 0; j < kernel.size(); ++j) {
            zcols[0][j] = kernel[j][0];
            zcols[1][j] = kernel[j][1];
        }
        HnfResult canon = hnf_columns(zcols);
        std::vector<Vec2> basis;
        for (int j = 0; j < canon.rank; ++j)
            basis.push_back(l2.point(canon.h[0][j], canon.h[1][j]));
        if (basis.size() != 2)
            throw Error(ErrorCode::InvalidArgument, "internal: rational lattice intersection must have rank 2");
        LatticeIntersection out;
        out.rank = 2;
        out.lattice = Lattice2::from_basis(basis[0], basis[1]);
        return out;
    }

    // Surd parts must cancel: solve m*(su1, su2) + n*(sv1, sv2) = 0 over Q.
    const Rat su1 = cu1.surd_part(), su2 = cu2.surd_part();
    const Rat sv1 = cv1.surd_part(), sv2 = cv2.surd_part();
    if (su1 * sv2 - su2 * sv1 == 0) {
        // Rows proportional: a one-dimensional rational solution line exists.
        Rat a, b;
        if (su1 != 0 || sv1 != 0) {
            a = -sv1;
            b = su1;
        } else {
            a = -sv2;
            b = su2;
        }
        if (a == 0 && b == 0) throw Error(ErrorCode::InvalidArgument, "internal: degenerate surd system");
        Int scale = int_lcm(rat_den(a), rat_den(b));
        Int ma = rat_num(a) * (scale / rat_den(a));
        Int mb = rat_num(b) * (scale / rat_den(b));
        Int g = int_gcd(ma, mb);
        ma /= g;
        mb /= g;
        // Integrality of the rational parts along the solution line.
        const Rat q1 = Rat(ma) * cu1.rational_part() + Rat(mb) * cv1.rational_part();
        const Rat q2 = Rat(ma) * cu2.rational_part() + Rat(mb) * cv2.rational_part();
        const Int t0 = int_lcm(rat_den(q1), rat_den(q2));
        LatticeIntersection out;
        out.rank = 1;
        out.direction = (l2.u() * Scalar(ma) + l2.v() * Scalar(mb)) * Scalar(t0);
        return out;
    }
    return {};
}

inline int intersection_rank(const Lattice2& l1, const Lattice2& l2) {
    return intersect_lattices(l1, l2).rank;
}

/// All points of lattice+offset inside or on the region, in lexicographic
/// order. Scans the exact integer coordinate box spanned by the region's
/// hull vertices.
inline std::vector<Vec2> enumerate_in_region(const TranslatedLattice& tl, const ConvexRegion& region) {
    if (region.hull.empty()) throw Error(ErrorCode::RegionUnbounded, "region has no vertices");
    bool first = true;
    Int alo, ahi, blo, bhi;
    for (const Vec2& w : region.hull) {
        auto [c1, c2] = tl.lattice.coords(w - tl.offset);
        Int f1 = c1.floor(), g1 = c1.ceil();
        Int f2 = c2.floor(), g2 = c2.ceil();
        if (first) {
            alo = f1; ahi = g1; blo = f2; bhi = g2;
            first = false;
        } else {
            alo = std::min(alo, f1); ahi = std::max(ahi, g1);
            blo = std::min(blo, f2); bhi = std::max(bhi, g2);
        }
    }
    std::vector<Vec2> out;
    for (Int a = alo; a <= ahi; ++a) {
        for (Int b = blo; b <= bhi; ++b) {
            Vec2 p = tl.offset + tl.lattice.point(a, b);
            if (region.contains(p)) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

inline std::vector<Vec2> enumerate_in_polygon(const TranslatedLattice& tl, const std::vector<Vec2>& poly) {
    return enumerate_in_region(tl, ConvexRegion::from_points(poly));
}

/// Decides whether the lattice meets the open segment; returns one witness
/// (the one with the smallest first lattice coordinate) if so. Endpoint and
/// direction are expressed in lattice coordinates and the one-parameter
/// integrality conditions are solved exactly; surd components must cancel
/// identically.
inline std::optional<Vec2> lattice_point_on_open_segment(const Lattice2& lat, const Segment& seg) {
    auto [ax, ay] = lat.coords(seg.a);
    auto [bx, by] = lat.coords(seg.b);
    const Scalar wx = bx - ax;
    const Scalar wy = by - ay;

    auto in_open_range = [](const Scalar& n, const Scalar& lo, const Scalar& hi) {
        return (n - lo).sign() > 0 && (hi - n).sign() > 0;
    };

    if (wx.is_zero()) {
        // First coordinate is fixed; it must be an integer.
        if (!ax.is_integer()) return std::nullopt;
        const Scalar lo = std::min(ay, by, [](const Scalar& p, const Scalar& q) { return p < q; });
        const Scalar hi = std::max(ay, by, [](const Scalar& p, const Scalar& q) { return p < q; });
        const Int n = lo.floor() + 1;
        if (!((hi - Scalar(n)).sign() > 0)) return std::nullopt;
        return lat.point(rat_num(ax.rational_part()), n);
    }

    // Parametrize by the first coordinate n: the second is s0 + n*r.
    const Scalar r = wy / wx;
    const Scalar s0 = ay - ax * r;
    const Scalar lo = std::min(ax, bx, [](const Scalar& p, const Scalar& q) { return p < q; });
    const Scalar hi = std::max(ax, bx, [](const Scalar& p, const Scalar& q) { return p < q; });

    auto witness_for = [&](const Int& n) -> std::optional<Vec2> {
        const Scalar second = s0 + r * Scalar(n);
        if (!second.is_integer()) return std::nullopt;
        if (!in_open_range(Scalar(n), lo, hi)) return std::nullopt;
        return lat.point(n, rat_num(second.rational_part()));
    };

    if (!r.is_rational()) {
        // Unique candidate n cancels the surd part.
        const Rat cand = -s0.surd_part() / r.surd_part();
        if (rat_den(cand) != 1) return std::nullopt;
        return witness_for(rat_num(cand));
    }
    if (!s0.is_rational()) return std::nullopt;

    // Rational congruence: s0 + n*r in Z.
    const Rat rr = r.rational_part();
    const Rat ss = s0.rational_part();
    const Int p = rat_num(rr), q = rat_den(rr);
    const Int e = rat_num(ss), f = rat_den(ss);
    auto sol = solve_congruence(p * f, -e * q, q * f);
    if (!sol) return std::nullopt;
    auto [n0, step] = *sol;
    const Int nmin = lo.floor() + 1;
    Int delta = (n0 - nmin) % step;
    if (delta < 0) delta += step;
    const Int n = nmin + delta;
    return witness_for(n);
}

}  // namespace kfold

#endif  // KFOLD_LATTICE_HPP_
