#include <catch_amalgamated.hpp>

#include <vector>

#include "bnlab/elliptic.hpp"

using namespace bnlab;

namespace {

const NinePointFixture& fx() {
    static const NinePointFixture f = nine_point_fixture();
    return f;
}

RationalPoint sum_of(const std::vector<RationalPoint>& pts) {
    RationalPoint s = RationalPoint::infinity();
    for (const auto& p : pts) s = fx().curve.add(s, p);
    return s;
}

}  // namespace

TEST_CASE("curve construction rejects singular coefficients") {
    CHECK_THROWS_AS(EllipticCurveQ(Rat(0), Rat(0)), SingularCurve);
    CHECK_THROWS_AS(EllipticCurveQ(Rat(-3), Rat(2)), SingularCurve);  // 4*(-27) + 27*4 = 0
    CHECK_NOTHROW(EllipticCurveQ(Rat(0), Rat(17)));
}

TEST_CASE("fixture is on-curve, affine and distinct") {
    const auto& f = fx();
    REQUIRE(f.points.size() == 9);
    for (const auto& p : f.points) {
        CHECK(f.curve.contains(p));
        CHECK_FALSE(p.is_infinity());
    }
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j) CHECK(f.points[i] != f.points[j]);
}

TEST_CASE("fixture validation rejects bad inputs") {
    const auto& f = fx();
    std::vector<RationalPoint> eight(f.points.begin(), f.points.end() - 1);
    CHECK_THROWS_AS(NinePointFixture(f.curve, eight), InvalidFixture);

    auto off = f.points;
    off[3] = RationalPoint(Rat(1), Rat(1));
    CHECK_THROWS_AS(NinePointFixture(f.curve, off), InvalidFixture);

    auto dup = f.points;
    dup[5] = dup[2];
    CHECK_THROWS_AS(NinePointFixture(f.curve, dup), InvalidFixture);
}

TEST_CASE("chord addition golden value") {
    const auto& f = fx();
    const auto s = f.curve.add(f.points[0], f.points[1]);
    CHECK(render(s.x()) == "52");
    CHECK(render(s.y()) == "375");
}

TEST_CASE("additions satisfy the defining chord property") {
    // p + q = r means (x_r, -y_r) lies on the curve and on the line through p, q
    const auto& f = fx();
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j) {
            const auto& p = f.points[i];
            const auto& q = f.points[j];
            const auto r = f.curve.add(p, q);
            if (r.is_infinity()) {
                REQUIRE(p.x() == q.x());
                continue;
            }
            REQUIRE(f.curve.contains(r));
            if (p.x() != q.x()) {
                const Rat slope = (q.y() - p.y()) / (q.x() - p.x());
                REQUIRE(-r.y() - p.y() == slope * (r.x() - p.x()));
            }
        }
}

TEST_CASE("group axioms on fixture-generated points") {
    const auto& f = fx();
    const auto& E = f.curve;
    const auto O = RationalPoint::infinity();
    std::vector<RationalPoint> pts = f.points;
    pts.push_back(O);
    pts.push_back(E.scalar_mul(2, f.points[0]));
    pts.push_back(E.scalar_mul(3, f.points[4]));

    int identities = 0;
    for (const auto& p : pts) {
        REQUIRE(E.add(p, O) == p);
        REQUIRE(E.add(O, p) == p);
        REQUIRE(E.add(p, E.negate(p)).is_infinity());
        identities += 3;
    }
    for (const auto& p : pts)
        for (const auto& q : pts) {
            REQUIRE(E.add(p, q) == E.add(q, p));
            ++identities;
        }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); k += 3) {
                REQUIRE(E.add(E.add(pts[i], pts[j]), pts[k]) ==
                        E.add(pts[i], E.add(pts[j], pts[k])));
                ++identities;
            }
    CHECK(identities >= 100);
}

TEST_CASE("scalar multiples agree with repeated addition") {
    const auto& E = fx().curve;
    const auto& p = fx().points[2];
    RationalPoint acc = RationalPoint::infinity();
    for (int n = 1; n <= 7; ++n) {
        acc = E.add(acc, p);
        REQUIRE(E.scalar_mul(n, p) == acc);
    }
    CHECK(E.scalar_mul(0, p).is_infinity());
    CHECK(E.scalar_mul(-3, p) == E.negate(E.scalar_mul(3, p)));
}

TEST_CASE("operations reject off-curve points") {
    const auto& E = fx().curve;
    const RationalPoint bogus(Rat(1), Rat(1));
    CHECK_THROWS_AS(E.add(bogus, fx().points[0]), PointNotOnCurve);
    CHECK_THROWS_AS(E.negate(bogus), PointNotOnCurve);
    CHECK_THROWS_AS(E.scalar_mul(2, bogus), PointNotOnCurve);
    CHECK_THROWS_AS(E.torsion_order(bogus), PointNotOnCurve);
}

TEST_CASE("torsion orders") {
    const EllipticCurveQ e4(Rat(0), Rat(4));
    const auto t = e4.torsion_order(RationalPoint(Rat(0), Rat(2)));
    REQUIRE(t.has_value());
    CHECK(*t == 3);
    CHECK(e4.torsion_order(RationalPoint::infinity()) == 1);
    CHECK_FALSE(fx().curve.torsion_order(fx().points[0]).has_value());
    CHECK_FALSE(fx().curve.torsion_order(sum_of(fx().points)).has_value());
}

TEST_CASE("p10 golden values") {
    const auto p1 = p10(1, fx());
    CHECK(render(p1.x()) == "-111164115406/45761338561");
    CHECK(render(p1.y()) == "-15980733286618181/9789219783630559");
    const auto p2 = p10(2, fx());
    CHECK(render(p2.x()) ==
          "-24892955783829401195197419958450769691018669260860973953628/"
          "21727693918028394035884320306915722543452306807674463184161");
    CHECK(render(p2.y()) ==
          "1260762071674175701679848213512199985173931646382733580289362185192238154169371519425"
          "6825/"
          "3202730915495031369345710148910933138036732387326470487092154721839806332061439796688"
          "591");
    CHECK_THROWS_AS(p10(0, fx()), Error);
}

TEST_CASE("consecutive tower points differ by the base-point sum") {
    const auto total = sum_of(fx().points);
    for (long long k = 2; k <= 10; ++k)
        REQUIRE(fx().curve.sub(p10(k - 1, fx()), p10(k, fx())) == total);
}

TEST_CASE("tower points avoid the base points and one another") {
    std::vector<RationalPoint> all = fx().points;
    for (long long g = 1; g <= 10; ++g) all.push_back(p10(g, fx()));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) REQUIRE(all[i] != all[j]);
}

TEST_CASE("the tower is the s-progression from the ninth point") {
    const auto& E = fx().curve;
    const auto step = E.negate(sum_of(fx().points));
    for (long long g = 1; g <= 10; ++g)
        REQUIRE(p10(g, fx()) == s_point(Int(g), fx().points[8], step, E));
}

TEST_CASE("s-progression rejects torsion steps") {
    const EllipticCurveQ e4(Rat(0), Rat(4));
    CHECK_THROWS_AS(
        s_point(Int(2), RationalPoint::infinity(), RationalPoint(Rat(0), Rat(2)), e4),
        TorsionEta);
}
