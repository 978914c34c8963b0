#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnlab/errors.hpp"
#include "bnlab/rational.hpp"

namespace bnlab {

/// Affine rational point, or the group origin at infinity.
class RationalPoint {
public:
    RationalPoint() : inf_(true) {}
    RationalPoint(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    [[nodiscard]] static RationalPoint infinity() { return RationalPoint(); }

    [[nodiscard]] bool is_infinity() const { return inf_; }
    [[nodiscard]] const Rat& x() const { return x_; }
    [[nodiscard]] const Rat& y() const { return y_; }

    friend bool operator==(const RationalPoint& p, const RationalPoint& q) {
        if (p.inf_ || q.inf_) return p.inf_ == q.inf_;
        return p.x_ == q.x_ && p.y_ == q.y_;
    }

private:
    bool inf_;
    Rat x_, y_;
};

[[nodiscard]] inline std::string render(const RationalPoint& p) {
    if (p.is_infinity()) return "O";
    return "(" + render(p.x()) + ", " + render(p.y()) + ")";
}

/// y^2 = x^3 + a x + b over Q, smooth (nonzero discriminant). Group law by
/// chord and tangent with the point at infinity as origin.
class EllipticCurveQ {
public:
    EllipticCurveQ(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
        if (4 * a_ * a_ * a_ + 27 * b_ * b_ == 0)
            throw SingularCurve("discriminant vanishes for a = " + render(a_) +
                                ", b = " + render(b_));
    }

    [[nodiscard]] const Rat& a() const { return a_; }
    [[nodiscard]] const Rat& b() const { return b_; }

    [[nodiscard]] bool contains(const RationalPoint& p) const {
        if (p.is_infinity()) return true;
        return p.y() * p.y() == p.x() * p.x() * p.x() + a_ * p.x() + b_;
    }

    [[nodiscard]] RationalPoint negate(const RationalPoint& p) const {
        check(p);
        if (p.is_infinity()) return p;
        return {p.x(), -p.y()};
    }

    [[nodiscard]] RationalPoint add(const RationalPoint& p, const RationalPoint& q) const {
        check(p);
        check(q);
        if (p.is_infinity()) return q;
        if (q.is_infinity()) return p;
        Rat s;
        if (p.x() == q.x()) {
            if (p.y() == -q.y()) return RationalPoint::infinity();
            s = (3 * p.x() * p.x() + a_) / (2 * p.y());
        } else {
            s = (q.y() - p.y()) / (q.x() - p.x());
        }
        Rat x3 = s * s - p.x() - q.x();
        Rat y3 = s * (p.x() - x3) - p.y();
        return {std::move(x3), std::move(y3)};
    }

    [[nodiscard]] RationalPoint sub(const RationalPoint& p, const RationalPoint& q) const {
        return add(p, negate(q));
    }

    /// [n] p by double-and-add; n may be zero or negative.
    [[nodiscard]] RationalPoint scalar_mul(Int n, const RationalPoint& p) const {
        check(p);
        RationalPoint base = p;
        if (n < 0) {
            base = negate(base);
            n = -n;
        }
        RationalPoint acc = RationalPoint::infinity();
        while (n > 0) {
            if ((n & 1) != 0) acc = add(acc, base);
            n >>= 1;
            if (n > 0) base = add(base, base);
        }
        return acc;
    }

    /// Exact torsion decision. A rational torsion point has order at most 12
    /// (Mazur), so testing [n] p for n = 1..12 settles it; nullopt means
    /// infinite order.
    [[nodiscard]] std::optional<int> torsion_order(const RationalPoint& p) const {
        check(p);
        RationalPoint acc = RationalPoint::infinity();
        for (int n = 1; n <= 12; ++n) {
            acc = add(acc, p);
            if (acc.is_infinity()) return n;
        }
        return std::nullopt;
    }

private:
    void check(const RationalPoint& p) const {
        if (!contains(p)) throw PointNotOnCurve("point " + render(p) + " not on the curve");
    }

    Rat a_, b_;
};

/// Nine distinct affine rational points on a smooth curve; the base
/// configuration for the tenth-point tower.
struct NinePointFixture {
    EllipticCurveQ curve;
    std::vector<RationalPoint> points;

    NinePointFixture(EllipticCurveQ c, std::vector<RationalPoint> pts)
        : curve(std::move(c)), points(std::move(pts)) {
        if (points.size() != 9)
            throw InvalidFixture("fixture needs exactly 9 points, got " +
                                 std::to_string(points.size()));
        for (const auto& p : points) {
            if (p.is_infinity()) throw InvalidFixture("fixture points must be affine");
            if (!curve.contains(p))
                throw InvalidFixture("fixture point " + render(p) + " not on the curve");
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw InvalidFixture("fixture points must be pairwise distinct, " +
                                         render(points[i]) + " repeats");
    }
};

/// Built-in configuration on y^2 = x^3 + 17.
[[nodiscard]] inline NinePointFixture nine_point_fixture() {
    EllipticCurveQ e(Rat(0), Rat(17));
    std::vector<RationalPoint> pts;
    pts.emplace_back(Rat(-2), Rat(3));
    pts.emplace_back(Rat(-1), Rat(-4));
    pts.emplace_back(Rat(2), Rat(5));
    pts.emplace_back(Rat(4), Rat(9));
    pts.emplace_back(Rat(52), Rat(375));
    pts.emplace_back(Rat(5234), Rat(378661));
    pts.emplace_back(Rat(8), Rat(-23));
    pts.emplace_back(Rat(43), Rat(282));
    pts.emplace_back(Rat(1, 4), Rat(-33, 8));
    return NinePointFixture(std::move(e), std::move(pts));
}

/// p10(g) = -[g](p1 + ... + p8) - [g - 1] p9, g >= 1.
[[nodiscard]] inline RationalPoint p10(long long g, const NinePointFixture& f) {
    if (g < 1) throw Error("p10 needs g >= 1, got g = " + std::to_string(g));
    RationalPoint sum8 = RationalPoint::infinity();
    for (std::size_t i = 0; i < 8; ++i) sum8 = f.curve.add(sum8, f.points[i]);
    const RationalPoint head = f.curve.scalar_mul(Int(-g), sum8);
    return f.curve.add(head, f.curve.scalar_mul(Int(-(g - 1)), f.points[8]));
}

/// s(g) = r + [g] t; the translation step t must be non-torsion.
[[nodiscard]] inline RationalPoint s_point(const Int& g, const RationalPoint& r,
                                           const RationalPoint& t, const EllipticCurveQ& curve) {
    if (curve.torsion_order(t))
        throw TorsionEta("translation step " + render(t) + " is torsion");
    return curve.add(r, curve.scalar_mul(g, t));
}

}  // namespace bnlab
