#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kfold/lattice.hpp"

using namespace kfold;

namespace {

Vec2 pt(long x, long y) { return {Scalar(x), Scalar(y)}; }

Lattice2 hex_lattice() { return Lattice2::from_basis(pt(2, -1), pt(1, 1)); }

std::vector<Vec2> triangle() { return {pt(0, 0), pt(2, 0), pt(0, 2)}; }

// Brute-force lattice enumeration over a wide integer window, filtered by
// region membership. Independent of the coordinate-box logic under test.
std::vector<Vec2> enumerate_oracle(const TranslatedLattice& tl, const ConvexRegion& region, int window) {
    std::vector<Vec2> out;
    for (int a = -window; a <= window; ++a)
        for (int b = -window; b <= window; ++b) {
            Vec2 p = tl.offset + tl.lattice.point(Int(a), Int(b));
            if (region.contains(p)) out.push_back(p);
        }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

TEST_CASE("coords_in_basis solves the 2x2 system exactly") {
    Lattice2 lat = hex_lattice();
    auto [c1, c2] = lat.coords(pt(0, -1));
    CHECK(c1 == Scalar(Int(1), Int(3)));
    CHECK(c2 == Scalar(Int(-2), Int(3)));

    auto [d1, d2] = lat.coords(lat.u());
    CHECK(d1 == Scalar(1));
    CHECK(d2 == Scalar(0));

    auto [e1, e2] = lat.coords(pt(-1, 2));
    CHECK(e1 == Scalar(-1));
    CHECK(e2 == Scalar(1));
}

TEST_CASE("membership with integer witness") {
    Lattice2 lat = hex_lattice();
    auto w = lat.member(pt(-2, 1));
    REQUIRE(w.has_value());
    CHECK(w->first == -1);
    CHECK(w->second == 0);

    CHECK_FALSE(Lattice2::integers().member({Scalar(Rat(1, 2)), Scalar(Rat(1, 2))}).has_value());
    auto zero = lat.member(pt(0, 0));
    REQUIRE(zero.has_value());
    CHECK(zero->first == 0);
    CHECK(zero->second == 0);
}

TEST_CASE("rational commensuration finds the minimal denominator") {
    Lattice2 lat = hex_lattice();
    auto q = lat.rational_commensurate(pt(0, -1));
    REQUIRE(q.has_value());
    CHECK(*q == 3);

    CHECK_FALSE(Lattice2::integers().rational_commensurate({Scalar::sqrt_of(2), Scalar(0)}).has_value());
    CHECK(*lat.rational_commensurate(lat.u()) == 1);

    // minimality: q*w is a member, no proper divisor works
    std::mt19937_64 rng(0x777);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 6);
    for (int iter = 0; iter < 100; ++iter) {
        Vec2 w{Scalar(Int(num(rng)), Int(den(rng))), Scalar(Int(num(rng)), Int(den(rng)))};
        if (w.is_zero()) continue;
        auto qq = lat.rational_commensurate(w);
        REQUIRE(qq.has_value());
        CHECK(lat.contains(w * Scalar(*qq)));
        for (Int d = 1; d < *qq; ++d)
            if (*qq % d == 0) CHECK_FALSE(lat.contains(w * Scalar(d)));
    }
}

TEST_CASE("scaling a lattice scales its determinant quadratically") {
    Lattice2 half = Lattice2::integers().scaled(1, 2);
    CHECK(half.abs_det() == Scalar(Int(1), Int(4)));
    CHECK(half.contains({Scalar(Rat(1, 2)), Scalar(Rat(-3, 2))}));

    Lattice2 same = hex_lattice().scaled(1, 1);
    CHECK(same.equals(hex_lattice()));

    CHECK(hex_lattice().scaled(1, 3).abs_det() == Scalar(Int(1), Int(3)));
}

TEST_CASE("lattice intersection ranks") {
    Lattice2 z2 = Lattice2::integers();
    Lattice2 fine = Lattice2::from_basis({Scalar(Rat(1, 2)), Scalar(0)}, {Scalar(0), Scalar(Rat(1, 3))});
    LatticeIntersection i1 = intersect_lattices(z2, fine);
    REQUIRE(i1.rank == 2);
    CHECK(i1.lattice->equals(z2));

    Lattice2 slanted = Lattice2::from_basis({Scalar::sqrt_of(2), Scalar(0)}, {Scalar(0), Scalar(1)});
    LatticeIntersection i2 = intersect_lattices(z2, slanted);
    REQUIRE(i2.rank == 1);
    REQUIRE(i2.direction.has_value());
    CHECK(cross(*i2.direction, pt(0, 1)).sign() == 0);  // the y-axis direction
    CHECK(z2.contains(*i2.direction));
    CHECK(slanted.contains(*i2.direction));

    LatticeIntersection i3 = intersect_lattices(hex_lattice(), hex_lattice());
    REQUIRE(i3.rank == 2);
    CHECK(i3.lattice->equals(hex_lattice()));

    // fully incommensurable directions
    Lattice2 rot = Lattice2::from_basis({Scalar::sqrt_of(2), Scalar(Rat(0), Rat(1), 2)},
                                        {Scalar(Rat(0), Rat(-1), 2), Scalar::sqrt_of(2)});
    CHECK(intersect_lattices(Lattice2::from_basis(pt(1, 3), pt(2, 1)), rot).rank == 0);
}

TEST_CASE("intersection is symmetric and contained in both") {
    std::mt19937_64 rng(0xABCD);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    auto rnd_lat = [&]() -> Lattice2 {
        while (true) {
            Vec2 u{Scalar(Int(num(rng)), Int(den(rng))), Scalar(Int(num(rng)), Int(den(rng)))};
            Vec2 v{Scalar(Int(num(rng)), Int(den(rng))), Scalar(Int(num(rng)), Int(den(rng)))};
            if (cross(u, v).sign() != 0) return Lattice2::from_basis(u, v);
        }
    };
    for (int iter = 0; iter < 60; ++iter) {
        Lattice2 a = rnd_lat(), b = rnd_lat();
        LatticeIntersection ab = intersect_lattices(a, b);
        LatticeIntersection ba = intersect_lattices(b, a);
        REQUIRE(ab.rank == 2);
        REQUIRE(ba.rank == 2);
        CHECK(ab.lattice->equals(*ba.lattice));
        CHECK(a.contains(ab.lattice->u()));
        CHECK(a.contains(ab.lattice->v()));
        CHECK(b.contains(ab.lattice->u()));
        CHECK(b.contains(ab.lattice->v()));
    }
}

TEST_CASE("lattice group axioms on random members") {
    std::mt19937_64 rng(0x60D);
    std::uniform_int_distribution<int> coeff(-10, 10);
    Lattice2 lat = hex_lattice();
    for (int iter = 0; iter < 100; ++iter) {
        Vec2 p = lat.point(Int(coeff(rng)), Int(coeff(rng)));
        Vec2 q = lat.point(Int(coeff(rng)), Int(coeff(rng)));
        CHECK(lat.contains(-p));
        CHECK(lat.contains(p + q));
    }
}

TEST_CASE("enumerate_in_polygon matches the spec'd triangle") {
    auto pts = enumerate_in_polygon({Lattice2::integers(), pt(0, 0)}, triangle());
    std::vector<Vec2> expect = {pt(0, 0), pt(0, 1), pt(0, 2), pt(1, 0), pt(1, 1), pt(2, 0)};
    CHECK(pts == expect);

    // offset grid in the unit square
    auto half = enumerate_in_polygon({Lattice2::integers(), {Scalar(Rat(1, 2)), Scalar(Rat(1, 2))}},
                                     {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    REQUIRE(half.size() == 1);
    CHECK(half[0] == Vec2{Scalar(Rat(1, 2)), Scalar(Rat(1, 2))});

    // a region smaller than one fundamental cell may be empty
    auto none = enumerate_in_polygon({Lattice2::integers(), {Scalar(Rat(1, 2)), Scalar(Rat(1, 2))}},
                                     {pt(0, 0), Vec2{Scalar(Rat(1, 4)), Scalar(0)},
                                      Vec2{Scalar(Rat(1, 4)), Scalar(Rat(1, 4))}});
    CHECK(none.empty());
}

TEST_CASE("enumerate_in_polygon equals brute force on random regions") {
    std::mt19937_64 rng(0xE17);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Vec2> cloud;
        for (int i = 0; i < 5; ++i) cloud.push_back(pt(c(rng), c(rng)));
        ConvexRegion region = ConvexRegion::from_points(cloud);
        TranslatedLattice tl{hex_lattice(), {Scalar(Rat(c(rng), 3)), Scalar(Rat(c(rng), 3))}};
        CHECK(enumerate_in_region(tl, region) == enumerate_oracle(tl, region, 12));
    }
}

TEST_CASE("lattice points on open segments") {
    // half of the hexagonal lattice meets the open diagonal at (1/2, 1/2)
    Lattice2 halfhex = hex_lattice().scaled(1, 2);
    auto w1 = lattice_point_on_open_segment(halfhex, Segment(pt(1, 0), pt(0, 1)));
    REQUIRE(w1.has_value());
    CHECK(*w1 == Vec2{Scalar(Rat(1, 2)), Scalar(Rat(1, 2))});

    // (3/2)Z x (1/2)Z misses the vertical segment at x = 1
    Lattice2 aniso = Lattice2::from_basis({Scalar(Rat(3, 2)), Scalar(0)}, {Scalar(0), Scalar(Rat(1, 2))});
    CHECK_FALSE(lattice_point_on_open_segment(aniso, Segment(pt(1, -1), pt(1, 1))).has_value());

    auto w3 = lattice_point_on_open_segment(Lattice2::integers(), Segment(pt(0, 0), pt(2, 0)));
    REQUIRE(w3.has_value());
    CHECK(*w3 == pt(1, 0));

    // endpoints do not count: open segment between adjacent lattice points
    CHECK_FALSE(lattice_point_on_open_segment(Lattice2::integers(), Segment(pt(0, 0), pt(1, 0))).has_value());

    // irrational direction that still passes through a lattice point
    const Scalar r2 = Scalar::sqrt_of(2);
    auto w4 = lattice_point_on_open_segment(Lattice2::integers(),
                                            Segment(Vec2{-r2, Scalar(-1)} , Vec2{r2, Scalar(1)}));
    REQUIRE(w4.has_value());
    CHECK(*w4 == pt(0, 0));

    // irrational direction missing every lattice point
    CHECK_FALSE(lattice_point_on_open_segment(
                    Lattice2::integers(),
                    Segment(Vec2{-r2, Scalar(Rat(1, 2))}, Vec2{r2, Scalar(Rat(1, 2))}))
                    .has_value());
}

TEST_CASE("open-segment witnesses are members strictly inside") {
    std::mt19937_64 rng(0x5E6);
    std::uniform_int_distribution<int> c(-6, 6);
    std::uniform_int_distribution<int> d(1, 4);
    Lattice2 lat = hex_lattice().scaled(1, 2);
    int found = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Vec2 a{Scalar(Int(c(rng)), Int(d(rng))), Scalar(Int(c(rng)), Int(d(rng)))};
        Vec2 b{Scalar(Int(c(rng)), Int(d(rng))), Scalar(Int(c(rng)), Int(d(rng)))};
        if (a == b) continue;
        Segment seg(a, b);
        auto w = lattice_point_on_open_segment(lat, seg);
        if (!w) continue;
        ++found;
        CHECK(lat.contains(*w));
        CHECK(cross(seg.direction(), *w - a).sign() == 0);
        CHECK(dot(*w - a, seg.direction()).sign() > 0);
        CHECK(dot(*w - b, -seg.direction()).sign() > 0);
    }
    CHECK(found > 20);  // the property must actually be exercised
}
