#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bnlab/errors.hpp"
#include "bnlab/rational.hpp"

namespace bnlab {

namespace detail {

inline long long checked_genus(long long g) {
    if (g < 2) throw GenusMismatch("moduli classes need g >= 2, got g = " + std::to_string(g));
    return g;
}

}  // namespace detail

/// Divisor class on the universal curve over the genus-g moduli space, in the
/// basis (lambda, psi, delta_irr, delta_1, ..., delta_{g-1}).
class UCClass {
public:
    explicit UCClass(long long g)
        : g_(detail::checked_genus(g)), lambda_(0), psi_(0), delta_irr_(0),
          delta_(static_cast<std::size_t>(g - 1), Rat(0)) {}

    [[nodiscard]] long long genus() const { return g_; }

    [[nodiscard]] Rat& lambda() { return lambda_; }
    [[nodiscard]] const Rat& lambda() const { return lambda_; }
    [[nodiscard]] Rat& psi() { return psi_; }
    [[nodiscard]] const Rat& psi() const { return psi_; }
    [[nodiscard]] Rat& delta_irr() { return delta_irr_; }
    [[nodiscard]] const Rat& delta_irr() const { return delta_irr_; }

    [[nodiscard]] Rat& delta(long long i) { return delta_[checked(i)]; }
    [[nodiscard]] const Rat& delta(long long i) const { return delta_[checked(i)]; }

    friend bool operator==(const UCClass&, const UCClass&) = default;

    friend UCClass operator+(const UCClass& a, const UCClass& b) {
        require_genus(a, b);
        UCClass c = a;
        c.lambda_ += b.lambda_;
        c.psi_ += b.psi_;
        c.delta_irr_ += b.delta_irr_;
        for (std::size_t i = 0; i < c.delta_.size(); ++i) c.delta_[i] += b.delta_[i];
        return c;
    }

    friend UCClass operator-(const UCClass& a, const UCClass& b) {
        require_genus(a, b);
        UCClass c = a;
        c.lambda_ -= b.lambda_;
        c.psi_ -= b.psi_;
        c.delta_irr_ -= b.delta_irr_;
        for (std::size_t i = 0; i < c.delta_.size(); ++i) c.delta_[i] -= b.delta_[i];
        return c;
    }

    friend UCClass operator*(const Rat& t, const UCClass& a) {
        UCClass c = a;
        c.lambda_ *= t;
        c.psi_ *= t;
        c.delta_irr_ *= t;
        for (auto& v : c.delta_) v *= t;
        return c;
    }

private:
    static void require_genus(const UCClass& a, const UCClass& b) {
        if (a.g_ != b.g_) throw GenusMismatch("classes of different genus");
    }

    [[nodiscard]] std::size_t checked(long long i) const {
        if (i < 1 || i > g_ - 1)
            throw GenusMismatch("delta_" + std::to_string(i) + " is not a generator for genus " +
                                std::to_string(g_));
        return static_cast<std::size_t>(i - 1);
    }

    long long g_;
    Rat lambda_, psi_, delta_irr_;
    std::vector<Rat> delta_;
};

/// Divisor class on the genus-g moduli space itself, in the basis
/// (lambda, delta_irr, delta_1, ..., delta_{floor(g/2)}).
class MgClass {
public:
    explicit MgClass(long long g)
        : g_(detail::checked_genus(g)), lambda_(0), delta_irr_(0),
          delta_(static_cast<std::size_t>(g / 2), Rat(0)) {}

    [[nodiscard]] long long genus() const { return g_; }

    [[nodiscard]] Rat& lambda() { return lambda_; }
    [[nodiscard]] const Rat& lambda() const { return lambda_; }
    [[nodiscard]] Rat& delta_irr() { return delta_irr_; }
    [[nodiscard]] const Rat& delta_irr() const { return delta_irr_; }

    [[nodiscard]] Rat& delta(long long i) { return delta_[checked(i)]; }
    [[nodiscard]] const Rat& delta(long long i) const { return delta_[checked(i)]; }

    friend bool operator==(const MgClass&, const MgClass&) = default;

private:
    [[nodiscard]] std::size_t checked(long long i) const {
        if (i < 1 || i > g_ / 2)
            throw GenusMismatch("delta_" + std::to_string(i) + " is not a generator for genus " +
                                std::to_string(g_) + " (boundary classes run to delta_" +
                                std::to_string(g_ / 2) + ")");
        return static_cast<std::size_t>(i - 1);
    }

    long long g_;
    Rat lambda_, delta_irr_;
    std::vector<Rat> delta_;
};

/// Degrees of a one-parameter family against the universal-curve generators;
/// same arity as UCClass.
using PencilNumbers = UCClass;

/// Pullback along the map forgetting the marked point: psi-free classes, the
/// boundary class delta_i splitting as delta_i + delta_{g-i} for i < g/2 and
/// staying single in the middle when g is even.
[[nodiscard]] inline UCClass pullback_pi(const MgClass& m) {
    UCClass out(m.genus());
    out.lambda() = m.lambda();
    out.delta_irr() = m.delta_irr();
    const long long g = m.genus();
    for (long long i = 1; i <= g / 2; ++i) {
        out.delta(i) += m.delta(i);
        if (i != g - i) out.delta(g - i) += m.delta(i);
    }
    return out;
}

/// Closure of the locus of Weierstrass points:
/// -lambda + binom(g+1, 2) psi - sum_i binom(g-i+1, 2) delta_i.
[[nodiscard]] inline UCClass weierstrass_class(long long g) {
    UCClass w(g);
    w.lambda() = -1;
    w.psi() = Rat(Int(g + 1) * g / 2);
    for (long long i = 1; i <= g - 1; ++i) w.delta(i) = -Rat(Int(g - i + 1) * (g - i) / 2);
    return w;
}

/// Pullback of the Brill-Noether class, normalised to lambda-coefficient
/// g + 3: (g+3) lambda - (g+1)/6 delta_irr - sum_i i (g-i) delta_i.
[[nodiscard]] inline UCClass bn_class(long long g) {
    UCClass c(g);
    c.lambda() = Rat(Int(g) + 3);
    c.delta_irr() = -Rat(Int(g) + 1, Int(6));
    for (long long i = 1; i <= g - 1; ++i) c.delta(i) = -Rat(Int(i) * (g - i));
    return c;
}

/// mu W + nu BN with nonnegative mu, nu.
[[nodiscard]] inline UCClass pointed_bn_cone(const Rat& mu, const Rat& nu, long long g) {
    if (mu < 0 || nu < 0)
        throw NegativeCoefficient("cone combination needs mu >= 0 and nu >= 0, got mu = " +
                                  render(mu) + ", nu = " + render(nu));
    return mu * weierstrass_class(g) + nu * bn_class(g);
}

/// Pullback of the genus-10 slope-7 class:
/// 7 lambda - delta_irr - 5 (delta_1 + delta_9) - 9 (delta_2 + delta_8)
/// - 12 (delta_3 + delta_7) - 14 (delta_4 + delta_6) - 15 delta_5.
/// The boundary coefficient placement is pinned by the recorded pairing value
/// -1 against the genus-10 Du Val pencil.
[[nodiscard]] inline UCClass z10_class() {
    MgClass m(10);
    m.lambda() = 7;
    m.delta_irr() = -1;
    m.delta(1) = -5;
    m.delta(2) = -9;
    m.delta(3) = -12;
    m.delta(4) = -14;
    m.delta(5) = -15;
    return pullback_pi(m);
}

/// Pointed Du Val pencil of genus-g curves:
/// lambda = g, psi = 1, delta_irr = 6(g+1), delta_1 = 1.
[[nodiscard]] inline PencilNumbers duval_pencil(long long g) {
    PencilNumbers p(g);
    p.lambda() = Rat(Int(g));
    p.psi() = 1;
    p.delta_irr() = Rat(Int(6) * (Int(g) + 1));
    p.delta(1) += 1;
    return p;
}

/// One-marked pencil swept by the genus-(g-1) tower through its moving tenth
/// point: lambda = g-1, psi = 1, delta_irr = 6(g-1), one unit each on delta_1
/// and delta_{g-1}. For g = 2 the two legs land on the same generator, which
/// then carries 2.
[[nodiscard]] inline PencilNumbers iota_pencil(long long g) {
    PencilNumbers p(g);
    p.lambda() = Rat(Int(g) - 1);
    p.psi() = 1;
    p.delta_irr() = Rat(Int(6) * (Int(g) - 1));
    p.delta(1) += 1;
    p.delta(g - 1) += 1;
    return p;
}

/// The same pencil after forgetting the marked point: psi drops, the
/// delta_{g-1} leg folds onto delta_1.
[[nodiscard]] inline PencilNumbers iota_bar_pencil(long long g) {
    PencilNumbers p(g);
    p.lambda() = Rat(Int(g) - 1);
    p.delta_irr() = Rat(Int(6) * (Int(g) - 1));
    p.delta(1) = 2;
    return p;
}

/// Lefschetz pencil of genus-g curves on a polarised K3 surface:
/// lambda = g+1, psi = 0, delta_irr = 6g + 18, no other boundary.
[[nodiscard]] inline PencilNumbers k3_pencil(long long g) {
    PencilNumbers p(g);
    p.lambda() = Rat(Int(g) + 1);
    p.delta_irr() = Rat(Int(6) * g + 18);
    return p;
}

/// Intersection pairing of a family against a universal-curve class.
[[nodiscard]] inline Rat pair(const PencilNumbers& p, const UCClass& c) {
    if (p.genus() != c.genus()) throw GenusMismatch("pairing needs equal genus");
    Rat total = p.lambda() * c.lambda() + p.psi() * c.psi() + p.delta_irr() * c.delta_irr();
    for (long long i = 1; i <= p.genus() - 1; ++i) total += p.delta(i) * c.delta(i);
    return total;
}

/// Pairing of an unmarked family against a moduli class; the family must be
/// psi-free with no boundary degrees beyond delta_{floor(g/2)}.
[[nodiscard]] inline Rat pair(const PencilNumbers& p, const MgClass& c) {
    if (p.genus() != c.genus()) throw GenusMismatch("pairing needs equal genus");
    if (p.psi() != 0) throw Error("pairing against a moduli class needs a psi-free family");
    const long long g = p.genus();
    for (long long i = g / 2 + 1; i <= g - 1; ++i)
        if (p.delta(i) != 0)
            throw Error("family meets delta_" + std::to_string(i) +
                        ", which is not a moduli-class generator");
    Rat total = p.lambda() * c.lambda() + p.delta_irr() * c.delta_irr();
    for (long long i = 1; i <= g / 2; ++i) total += p.delta(i) * c.delta(i);
    return total;
}

}  // namespace bnlab
