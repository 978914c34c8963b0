#include <catch_amalgamated.hpp>

#include "bnlab/surface.hpp"

using namespace bnlab;

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(Lattice({}, {}), Error);
    CHECK_THROWS_AS(Lattice({"a"}, {{Int(1)}, {Int(0)}}), Error);
    CHECK_THROWS_AS(Lattice({"a", "b"}, {{Int(0), Int(1)}, {Int(2), Int(0)}}), Error);
    CHECK_THROWS_AS(Lattice({"a", "a"}, {{Int(0), Int(1)}, {Int(1), Int(0)}}), Error);
}

TEST_CASE("blown-up plane model") {
    const auto s = blown_up_plane(10);
    CHECK(s.lattice->rank() == 11);
    CHECK(s.chi_O == 1);
    CHECK(s.c2 == 13);
    CHECK(intersect(s.canonical, s.canonical) == -1);  // 9 - 10
    const auto l = s.generator("l");
    const auto e1 = s.generator("E1");
    CHECK(intersect(l, l) == 1);
    CHECK(intersect(e1, e1) == -1);
    CHECK(intersect(l, e1) == 0);
    CHECK_THROWS_AS(blown_up_plane(-1), Error);
}

TEST_CASE("class arithmetic and mismatch detection") {
    const auto s = blown_up_plane(2);
    const auto t = blown_up_plane(3);
    const auto a = s.cls({Int(1), Int(0), Int(0)});
    const auto b = s.cls({Int(0), Int(1), Int(0)});
    CHECK((a + b) - b == a);
    CHECK(Int(3) * a == s.cls({Int(3), Int(0), Int(0)}));
    CHECK(a.coeff("l") == 1);
    CHECK_THROWS_AS(a.coeff("E9"), Error);
    CHECK_THROWS_AS(intersect(a, t.generator("l")), LatticeMismatch);
    CHECK_THROWS_AS(s.cls({Int(1)}), LatticeMismatch);
    // structurally equal lattices interoperate even across instances
    const auto s2 = blown_up_plane(2);
    CHECK(intersect(a, s2.generator("l")) == 1);
}

TEST_CASE("adjunction genus on the plane") {
    const auto p2 = blown_up_plane(0);
    const auto line = p2.cls({Int(1)});
    const auto conic = p2.cls({Int(2)});
    const auto cubic = p2.cls({Int(3)});
    const auto quartic = p2.cls({Int(4)});
    CHECK(adjunction_genus(p2, line) == 0);
    CHECK(adjunction_genus(p2, conic) == 0);
    CHECK(adjunction_genus(p2, cubic) == 1);
    CHECK(adjunction_genus(p2, quartic) == 3);
}

TEST_CASE("odd parity is rejected") {
    // a rank-1 lattice with an odd self-intersection and K = 0
    auto lat = std::make_shared<const Lattice>(std::vector<std::string>{"h"},
                                               std::vector<std::vector<Int>>{{Int(1)}});
    const SurfaceModel fake("odd test", lat, DivClass(lat, {Int(0)}), 0, 0);
    CHECK_THROWS_AS(adjunction_genus(fake, DivClass(lat, {Int(1)})), OddParity);
    CHECK_THROWS_AS(chi_of_class(fake, DivClass(lat, {Int(1)})), OddParity);
}

TEST_CASE("Noether guard rejects inconsistent models") {
    auto lat = std::make_shared<const Lattice>(std::vector<std::string>{"h"},
                                               std::vector<std::vector<Int>>{{Int(1)}});
    CHECK_THROWS_WITH(SurfaceModel("broken", lat, DivClass(lat, {Int(0)}), 1, 0),
                      Catch::Matchers::ContainsSubstring("Noether"));
}

TEST_CASE("ruled models with invariant zero") {
    const auto pair = ruled_models();
    for (const SurfaceModel* m : {&pair.decomposable, &pair.indecomposable}) {
        CHECK(m->chi_O == 0);
        CHECK(m->c2 == 0);
        CHECK(intersect(m->canonical, m->canonical) == 0);
        const auto f = m->generator("f");
        const auto j0 = m->generator("J0");
        CHECK(intersect(f, f) == 0);
        CHECK(intersect(j0, j0) == 0);
        CHECK(intersect(f, j0) == 1);
        CHECK(adjunction_genus(*m, f) == 0);
        CHECK(adjunction_genus(*m, j0) == 1);
    }
    CHECK(pair.decomposable.name != pair.indecomposable.name);
}

TEST_CASE("bidegree (g, 1) classes on ruled models") {
    const auto pair = ruled_models();
    for (long long g = 2; g <= 12; ++g) {
        const auto c = pair.decomposable.cls({Int(g), Int(1)});
        CHECK(adjunction_genus(pair.decomposable, c) == g);
        CHECK(chi_of_class(pair.decomposable, c) == g + 1);
        CHECK(chi_of_class(pair.indecomposable, pair.indecomposable.cls({Int(g), Int(1)})) ==
              g + 1);
    }
}

TEST_CASE("blow-up extends the lattice and the invariants") {
    const auto s = blow_up(blown_up_plane(2), 3);
    CHECK(s.lattice->rank() == 6);
    CHECK(s.lattice->basis().back() == "E5");
    CHECK(s.c2 == 8);
    CHECK(s.chi_O == 1);
    CHECK(intersect(s.canonical, s.canonical) == 4);
    const auto x = blow_up(ruled_models().indecomposable, 1);
    CHECK(x.lattice->basis().back() == "E1");
    CHECK(x.c2 == 1);
    CHECK(intersect(x.canonical, x.generator("E1")) == -1);
    CHECK_THROWS_AS(blow_up(s, -1), Error);
}

TEST_CASE("Du Val classes on the ten-point model") {
    const auto s = blown_up_plane(10);
    for (long long g = 1; g <= 20; ++g) {
        const auto c = duval_class(s, g);
        CHECK(intersect(c, c) == 2 * Int(g) - 2);
        CHECK(intersect(c, s.canonical) == 0);
        CHECK(intersect(c, s.generator("E10")) == 1);
        CHECK(adjunction_genus(s, c) == g);
        CHECK(chi_of_class(s, c) == g);
    }
    CHECK_THROWS_AS(duval_class(s, 0), Error);
    CHECK_THROWS_AS(duval_class(blown_up_plane(9), 2), Error);
}

TEST_CASE("anticanonical cubic and the hyperplane identity") {
    const auto s = blown_up_plane(10);
    const auto j = j_class(s);
    CHECK(intersect(j, j) == -1);
    CHECK(adjunction_genus(s, j) == 1);
    CHECK(j == Int(-1) * s.canonical);
    for (long long g = 2; g <= 20; ++g) CHECK(lambda_hyperplane_identity(s, g));
}

TEST_CASE("nine-point system has Euler characteristic g + 1") {
    const auto s9 = blown_up_plane(9);
    for (long long g = 2; g <= 12; ++g) {
        std::vector<Int> c(10, Int(0));
        c[0] = Int(3) * g;
        for (std::size_t i = 1; i <= 8; ++i) c[i] = -Int(g);
        c[9] = -(Int(g) - 1);
        CHECK(chi_of_class(s9, DivClass(s9.lattice, std::move(c))) == g + 1);
    }
}

TEST_CASE("pencil invariants for the Du Val family") {
    const auto s = blown_up_plane(10);
    for (long long g = 2; g <= 12; ++g) {
        const auto pn = pencil_numbers(s, duval_class(s, g), s.generator("E10"));
        CHECK(pn.lambda == g);
        CHECK(pn.psi == 1);
        CHECK(pn.delta_total == 6 * Int(g) + 7);
    }
}

TEST_CASE("pencil invariants for the blown-up ruled family") {
    const auto x = blow_up(ruled_models().indecomposable, 1);
    for (long long g = 2; g <= 12; ++g) {
        const auto c = x.cls({Int(g), Int(1), Int(-1)});
        CHECK(intersect(c, c) == 2 * Int(g) - 1);
        CHECK(adjunction_genus(x, c) == g);
        const auto pn = pencil_numbers(x, c, x.generator("E1"));
        CHECK(pn.lambda == Int(g) - 1);
        CHECK(pn.psi == 1);
        CHECK(pn.delta_total == 6 * Int(g) - 4);
    }
}

TEST_CASE("pencil guards") {
    const auto s = blown_up_plane(10);
    const auto c = duval_class(s, 3);
    CHECK_THROWS_AS(pencil_numbers(s, c, s.generator("l")), InvalidSection);
    CHECK_THROWS_AS(pencil_numbers(s, s.generator("E1"), s.generator("l")), Error);
}
