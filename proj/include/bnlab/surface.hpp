#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bnlab/errors.hpp"
#include "bnlab/rational.hpp"

namespace bnlab {

/// Intersection lattice with a named basis and an integral symmetric Gram
/// matrix.
class Lattice {
public:
    Lattice(std::vector<std::string> basis, std::vector<std::vector<Int>> gram)
        : basis_(std::move(basis)), gram_(std::move(gram)) {
        const std::size_t n = basis_.size();
        if (n == 0) throw Error("lattice needs a nonempty basis");
        if (gram_.size() != n) throw Error("gram matrix must be square of the basis rank");
        for (const auto& row : gram_)
            if (row.size() != n) throw Error("gram matrix must be square of the basis rank");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (gram_[i][j] != gram_[j][i]) throw Error("gram matrix must be symmetric");
                if (basis_[i] == basis_[j]) throw Error("basis names must be distinct: " + basis_[i]);
            }
    }

    [[nodiscard]] std::size_t rank() const { return basis_.size(); }
    [[nodiscard]] const std::vector<std::string>& basis() const { return basis_; }
    [[nodiscard]] const Int& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    [[nodiscard]] const std::vector<std::vector<Int>>& gram() const { return gram_; }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    std::vector<std::string> basis_;
    std::vector<std::vector<Int>> gram_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Divisor class: integral coefficients over a lattice basis.
class DivClass {
public:
    DivClass(LatticePtr lattice, std::vector<Int> coeffs)
        : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
        if (!lattice_) throw Error("class needs a lattice");
        if (coeffs_.size() != lattice_->rank())
            throw LatticeMismatch("expected " + std::to_string(lattice_->rank()) +
                                  " coefficients, got " + std::to_string(coeffs_.size()));
    }

    [[nodiscard]] const LatticePtr& lattice() const { return lattice_; }
    [[nodiscard]] const std::vector<Int>& coeffs() const { return coeffs_; }
    [[nodiscard]] const Int& coeff(std::size_t i) const { return coeffs_[i]; }

    [[nodiscard]] const Int& coeff(const std::string& name) const {
        for (std::size_t i = 0; i < lattice_->rank(); ++i)
            if (lattice_->basis()[i] == name) return coeffs_[i];
        throw Error("no basis element named " + name);
    }

    [[nodiscard]] static bool same_lattice(const DivClass& a, const DivClass& b) {
        return a.lattice_ == b.lattice_ || *a.lattice_ == *b.lattice_;
    }

    friend bool operator==(const DivClass& a, const DivClass& b) {
        return same_lattice(a, b) && a.coeffs_ == b.coeffs_;
    }

    friend DivClass operator+(const DivClass& a, const DivClass& b) {
        require_same(a, b);
        std::vector<Int> c = a.coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
        return DivClass(a.lattice_, std::move(c));
    }

    friend DivClass operator-(const DivClass& a, const DivClass& b) {
        require_same(a, b);
        std::vector<Int> c = a.coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
        return DivClass(a.lattice_, std::move(c));
    }

    friend DivClass operator*(const Int& n, const DivClass& a) {
        std::vector<Int> c = a.coeffs_;
        for (auto& v : c) v *= n;
        return DivClass(a.lattice_, std::move(c));
    }

private:
    static void require_same(const DivClass& a, const DivClass& b) {
        if (!same_lattice(a, b)) throw LatticeMismatch("classes live on different lattices");
    }

    LatticePtr lattice_;
    std::vector<Int> coeffs_;
};

[[nodiscard]] inline Int intersect(const DivClass& a, const DivClass& b) {
    if (!DivClass::same_lattice(a, b))
        throw LatticeMismatch("intersection needs classes on one lattice");
    const Lattice& lat = *a.lattice();
    Int total = 0;
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < lat.rank(); ++j) {
            if (b.coeff(j) == 0) continue;
            total += a.coeff(i) * lat.gram(i, j) * b.coeff(j);
        }
    }
    return total;
}

/// Numerical model of a smooth projective surface: lattice, canonical class,
/// chi(O), topological c2. Construction checks Noether's formula
/// 12 chi(O) = K^2 + c2.
struct SurfaceModel {
    std::string name;
    LatticePtr lattice;
    DivClass canonical;
    Int chi_O;
    Int c2;

    SurfaceModel(std::string name_, LatticePtr lat, DivClass canonical_, Int chi, Int c2_)
        : name(std::move(name_)), lattice(std::move(lat)), canonical(std::move(canonical_)),
          chi_O(std::move(chi)), c2(std::move(c2_)) {
        if (canonical.lattice() != lattice && !(*canonical.lattice() == *lattice))
            throw LatticeMismatch("canonical class must live on the model lattice");
        if (12 * chi_O != intersect(canonical, canonical) + c2)
            throw Error("Noether check failed for " + name + ": 12 chi(O) != K^2 + c2");
    }

    [[nodiscard]] DivClass cls(std::vector<Int> coeffs) const {
        return DivClass(lattice, std::move(coeffs));
    }

    /// Class of a single named generator.
    [[nodiscard]] DivClass generator(const std::string& basis_name) const {
        std::vector<Int> c(lattice->rank(), 0);
        for (std::size_t i = 0; i < lattice->rank(); ++i)
            if (lattice->basis()[i] == basis_name) {
                c[i] = 1;
                return DivClass(lattice, std::move(c));
            }
        throw Error("no basis element named " + basis_name);
    }
};

/// Plane blown up at n general points: basis (l, E1, ..., En) with l^2 = 1,
/// Ei^2 = -1, K = -3l + sum Ei, chi(O) = 1, c2 = 3 + n.
[[nodiscard]] inline SurfaceModel blown_up_plane(long long n) {
    if (n < 0) throw Error("blown_up_plane needs n >= 0");
    const std::size_t rank = static_cast<std::size_t>(n) + 1;
    std::vector<std::string> basis(rank);
    basis[0] = "l";
    for (std::size_t i = 1; i < rank; ++i) basis[i] = "E" + std::to_string(i);
    std::vector<std::vector<Int>> gram(rank, std::vector<Int>(rank, 0));
    gram[0][0] = 1;
    for (std::size_t i = 1; i < rank; ++i) gram[i][i] = -1;
    auto lat = std::make_shared<const Lattice>(std::move(basis), std::move(gram));
    std::vector<Int> k(rank, 1);
    k[0] = -3;
    return SurfaceModel("plane blown up at " + std::to_string(n) + " points", lat,
                        DivClass(lat, std::move(k)), 1, Int(3) + n);
}

struct RuledModels {
    SurfaceModel decomposable;
    SurfaceModel indecomposable;
};

/// Ruled surfaces over an elliptic base with invariant e = 0: basis (J0, f),
/// J0^2 = f^2 = 0, J0.f = 1, K = -2 J0, chi(O) = 0, c2 = 0. The two bundle
/// types are numerically identical and kept apart by name; they differ in how
/// many base points the linear systems used on them carry.
[[nodiscard]] inline RuledModels ruled_models() {
    const auto make = [](const std::string& name) {
        std::vector<std::string> basis = {"J0", "f"};
        std::vector<std::vector<Int>> gram = {{Int(0), Int(1)}, {Int(1), Int(0)}};
        auto lat = std::make_shared<const Lattice>(std::move(basis), std::move(gram));
        return SurfaceModel(name, lat, DivClass(lat, {Int(-2), Int(0)}), 0, 0);
    };
    return {make("elliptic ruled, decomposable"), make("elliptic ruled, indecomposable")};
}

/// Blow up k further general points. New exceptional classes are appended
/// (numbering continues past existing E-names); existing basis classes denote
/// total transforms, so their products are unchanged. K gains each new class,
/// c2 grows by k.
[[nodiscard]] inline SurfaceModel blow_up(const SurfaceModel& m, long long k) {
    if (k < 0) throw Error("blow_up needs k >= 0");
    const std::size_t n0 = m.lattice->rank();
    const std::size_t n1 = n0 + static_cast<std::size_t>(k);
    long long next = 1;
    for (const auto& nm : m.lattice->basis())
        if (nm.size() > 1 && nm[0] == 'E' && nm.find_first_not_of("0123456789", 1) == std::string::npos)
            next = std::max(next, std::stoll(nm.substr(1)) + 1);
    std::vector<std::string> basis = m.lattice->basis();
    for (long long i = 0; i < k; ++i) basis.push_back("E" + std::to_string(next + i));
    std::vector<std::vector<Int>> gram(n1, std::vector<Int>(n1, 0));
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j) gram[i][j] = m.lattice->gram(i, j);
    for (std::size_t i = n0; i < n1; ++i) gram[i][i] = -1;
    auto lat = std::make_shared<const Lattice>(std::move(basis), std::move(gram));
    std::vector<Int> kc = m.canonical.coeffs();
    kc.resize(n1, Int(1));
    return SurfaceModel(m.name + " + " + std::to_string(k) + " blowups", lat,
                        DivClass(lat, std::move(kc)), m.chi_O, m.c2 + k);
}

/// Arithmetic genus by adjunction: 1 + (c^2 + c.K) / 2.
[[nodiscard]] inline Int adjunction_genus(const SurfaceModel& m, const DivClass& c) {
    const Int t = intersect(c, c) + intersect(c, m.canonical);
    if (t % 2 != 0) throw OddParity("c^2 + c.K is odd");
    return 1 + t / 2;
}

/// Numerical Riemann-Roch: chi(c) = chi(O) + c.(c - K) / 2.
[[nodiscard]] inline Int chi_of_class(const SurfaceModel& m, const DivClass& c) {
    const Int t = intersect(c, c) - intersect(c, m.canonical);
    if (t % 2 != 0) throw OddParity("c.(c - K) is odd");
    return m.chi_O + t / 2;
}

namespace detail {

inline void require_plane_model(const SurfaceModel& m, std::size_t points) {
    if (m.lattice->rank() < points + 1 || m.lattice->basis()[0] != "l")
        throw Error("expected a plane model with at least " + std::to_string(points) +
                    " exceptional classes");
}

}  // namespace detail

/// Genus-g Du Val class on the ten-point plane model:
/// 3g l - g (E1 + ... + E8) - (g - 1) E9 - E10.
[[nodiscard]] inline DivClass duval_class(const SurfaceModel& m, long long g) {
    detail::require_plane_model(m, 10);
    if (g < 1) throw Error("duval_class needs g >= 1");
    std::vector<Int> c(m.lattice->rank(), 0);
    c[0] = Int(3) * g;
    for (std::size_t i = 1; i <= 8; ++i) c[i] = -Int(g);
    c[9] = -(Int(g) - 1);
    c[10] = -1;
    return DivClass(m.lattice, std::move(c));
}

/// Anticanonical cubic through all ten points: 3l - E1 - ... - E10.
[[nodiscard]] inline DivClass j_class(const SurfaceModel& m) {
    detail::require_plane_model(m, 10);
    std::vector<Int> c(m.lattice->rank(), 0);
    c[0] = 3;
    for (std::size_t i = 1; i <= 10; ++i) c[i] = -1;
    return DivClass(m.lattice, std::move(c));
}

/// Du Val class of genus g - 1 that takes no account of the last two points:
/// 3(g-1) l - (g-1)(E1 + ... + E8) - (g-2) E9.
[[nodiscard]] inline DivClass duval_lower_class(const SurfaceModel& m, long long g) {
    detail::require_plane_model(m, 10);
    if (g < 2) throw Error("duval_lower_class needs g >= 2");
    std::vector<Int> c(m.lattice->rank(), 0);
    c[0] = Int(3) * (g - 1);
    for (std::size_t i = 1; i <= 8; ++i) c[i] = -(Int(g) - 1);
    c[9] = -(Int(g) - 2);
    return DivClass(m.lattice, std::move(c));
}

/// The genus-(g-1) class plus the anticanonical cubic recovers the genus-g
/// class, and the cubic meets the lower class once.
[[nodiscard]] inline bool lambda_hyperplane_identity(const SurfaceModel& m, long long g) {
    const DivClass lower = duval_lower_class(m, g);
    const DivClass j = j_class(m);
    return lower + j == duval_class(m, g) && intersect(lower, j) == 1;
}

struct PencilInvariants {
    Int lambda, psi, delta_total;

    friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;
};

/// Degrees of a Lefschetz pencil inside |c| with a section class meeting c
/// once. The c^2 base points are blown up (general position, off the
/// section), fibering the surface in curves of genus g = adjunction_genus(c):
///   lambda = chi(O) + g - 1, psi = -section^2, delta_total = c2 + c^2 + 4g - 4.
[[nodiscard]] inline PencilInvariants pencil_numbers(const SurfaceModel& m, const DivClass& c,
                                                     const DivClass& section) {
    const Int base = intersect(c, c);
    if (base < 0) throw Error("pencil needs c^2 >= 0");
    if (intersect(section, c) != 1)
        throw InvalidSection("section class must meet the pencil class exactly once, got " +
                             render(intersect(section, c)));
    const Int g = adjunction_genus(m, c);
    const SurfaceModel total = blow_up(m, base.convert_to<long long>());
    std::vector<Int> sec = section.coeffs();
    sec.resize(total.lattice->rank(), Int(0));
    const DivClass section_total(total.lattice, std::move(sec));
    PencilInvariants out;
    out.lambda = total.chi_O + g - 1;
    out.psi = -intersect(section_total, section_total);
    out.delta_total = total.c2 + 4 * g - 4;
    return out;
}

}  // namespace bnlab
