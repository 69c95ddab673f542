#include "mackeylab/c2model.hpp"
#include "mackeylab/checks.hpp"

#include <catch_amalgamated.hpp>

using namespace mackeylab;

namespace {

// Generator degree multiset of a ring as a dimension table.
DimTable degrees_of(const GradedRing& r) { return gem_of_ring(r).homotopy_dims; }

}  // namespace

TEST_CASE("model_KZ_rho: fixed level present exactly for even i") {
    C2CohModel even = model_KZ_rho(2);
    CHECK(even.fixed.gens.size() == 1);
    CHECK(even.fixed.gens[0].degree == 4);
    CHECK(even.restrict_map.images[0] == poly_generator(even.fixed, 0));

    C2CohModel odd = model_KZ_rho(3);
    CHECK(odd.fixed.gens.empty());
    CHECK(odd.restrict_map.images[0].is_zero());

    CHECK_THROWS_AS(model_KZ_rho(1), InvalidDegree);
}

TEST_CASE("model degrees cross-check against complex homology") {
    for (int i = 2; i <= 8; ++i) {
        C2CohModel m = model_KZ_rho(i);
        DimTable hu, hf;
        for (const auto& [k, cls] : homology(rho_suspension_Z(i))) {
            if (cls.subquotient.functor.underlying.dim > 0)
                hu[k] = cls.subquotient.functor.underlying.dim;
            if (cls.subquotient.functor.fixed_dim > 0) hf[k] = cls.subquotient.functor.fixed_dim;
        }
        CHECK(degrees_of(m.underlying) == hu);
        CHECK(degrees_of(m.fixed) == hf);
    }
    for (int m = 2; m <= 8; m += 2) {
        C2CohModel model = model_KA_rho(m);
        DimTable hu, hf;
        for (const auto& [k, cls] : homology(rho_suspension_A(m))) {
            if (cls.subquotient.functor.underlying.dim > 0)
                hu[k] = cls.subquotient.functor.underlying.dim;
            if (cls.subquotient.functor.fixed_dim > 0) hf[k] = cls.subquotient.functor.fixed_dim;
        }
        CHECK(degrees_of(model.underlying) == hu);
        CHECK(degrees_of(model.fixed) == hf);
    }
}

TEST_CASE("model_KA_rho: restriction hits y' and misses x") {
    C2CohModel m = model_KA_rho(4);
    CHECK(m.fixed.gens[0].degree == 4);
    CHECK(m.fixed.gens[1].degree == 8);
    CHECK(m.restrict_map.images[0] == poly_generator(m.fixed, 1));
    CHECK_THROWS_AS(model_KA_rho(3), InvalidDegree);
}

TEST_CASE("model_F: restriction is the square of the fixed fundamental class") {
    C2CohModel f = model_F(2);
    Poly x = poly_generator(f.fixed, 0);
    CHECK(f.restrict_map.images[0] == x * x);
    CHECK(degrees_of(f.underlying) == DimTable{{8, 1}});
    CHECK(degrees_of(f.fixed) == DimTable{{4, 1}});
}

TEST_CASE("fiber homotopy of iota^2 - N reproduces model_F on both levels") {
    for (int n = 1; n <= 3; ++n) {
        C2HomotopyModel fib = fiber_F_homotopy(n);
        CHECK(fib.underlying == DimTable{{4 * n, 1}});
        CHECK(fib.fixed == DimTable{{2 * n, 1}});
        C2CohModel f = model_F(n);
        CHECK(degrees_of(f.underlying) == fib.underlying);
        CHECK(degrees_of(f.fixed) == fib.fixed);
    }
}

TEST_CASE("model_BSUR: characteristic-class pullbacks") {
    C2CohModel m4 = model_BSUR(4);  // n = 2: fixed ring Q[p1, e4]
    CHECK(degrees_of(m4.underlying) == DimTable{{4, 1}, {6, 1}, {8, 1}});
    CHECK(degrees_of(m4.fixed) == DimTable{{4, 2}});
    Poly p1 = poly_generator(m4.fixed, names::p(1));
    Poly e = poly_generator(m4.fixed, names::e(4));
    CHECK(m4.restrict_map.images[0] == p1);       // c2 -> p1
    CHECK(m4.restrict_map.images[1].is_zero());   // c3 -> 0
    CHECK(m4.restrict_map.images[2] == e * e);    // c4 -> e^2

    C2CohModel m3 = model_BSUR(3);  // fixed ring Q[p1]
    CHECK(degrees_of(m3.fixed) == DimTable{{4, 1}});
    CHECK(m3.restrict_map.images[0] == poly_generator(m3.fixed, names::p(1)));
    CHECK(m3.restrict_map.images[1].is_zero());

    // Underlying series for m = 3 matches the Q[c2, c3] expansion.
    PowerSeries s = hilbert_series(m3.underlying, 12);
    CHECK(s.coefficients[12] == 2);
}

TEST_CASE("squaring and norm maps: compatibility and underlying agreement") {
    for (int n = 1; n <= 4; ++n) {
        C2Map sq = map_square(n);
        C2Map nm = map_norm(n);
        CHECK(compatibility_commutes(sq));
        CHECK(compatibility_commutes(nm));
        CHECK(sq.u_pullback == nm.u_pullback);
        // Linear parts on the fixed level in degree 4n, where both sides
        // have one generator: the squaring map has no linear term, the norm
        // carries x{4n} to y{4n}' with coefficient 1.
        CHECK(linear_part(sq.f_pullback, 4 * n).is_zero());
        CHECK(linear_part(nm.f_pullback, 4 * n) == Matrix::from_rows({{1}}));
    }
}

TEST_CASE("difference map factors through K(I,4n) with fixed formula x^2 - y") {
    for (int n = 1; n <= 4; ++n) {
        C2Map diff = map_square_minus_norm(n);
        CHECK(diff.target.underlying.gens.empty());
        Poly x = poly_generator(diff.source.fixed, 0);
        Poly y = poly_generator(diff.source.fixed, 1);
        CHECK(diff.f_pullback.images[0] == x * x - y);
    }
}

TEST_CASE("euler class map: compatibility and composite zero") {
    for (int n = 1; n <= 4; ++n) {
        C2Map euler = euler_class_map(n);
        CHECK(compatibility_commutes(euler));
        RingHom composite = compose(map_square_minus_norm(n).f_pullback, euler.f_pullback);
        for (const auto& img : composite.images) CHECK(img.is_zero());
    }
}

TEST_CASE("main theorem comparison, n = 1: explicit edge case") {
    MainTheoremData data = build_main_theorem(1);
    CHECK(data.product.underlying.gens.size() == 1);  // empty Chern product, only F
    CHECK(data.product.underlying.gens[0].degree == 4);
    CHECK(data.bsur.fixed.gens.size() == 1);  // Q[e2]
    CHECK(data.bsur.fixed.gens[0].degree == 2);
    CHECK(check_main_theorem(data, 1, 16).passed());
}

TEST_CASE("main theorem passes for n = 1..3 at D = 32") {
    for (int n = 1; n <= 3; ++n) CHECK(check_main_theorem(n, 32).passed());
}

TEST_CASE("main theorem check enforces its precondition on D") {
    CHECK_THROWS_AS(check_main_theorem(2, 8), InvalidDegree);
}

TEST_CASE("corrupting a generator image makes the theorem check fail") {
    for (int n = 1; n <= 3; ++n) {
        MainTheoremData data = build_main_theorem(n);
        data.comparison.u_pullback.images.back() = poly_zero();
        CHECK_FALSE(check_main_theorem(data, n, 8 * n).passed());
    }
}

TEST_CASE("dropping the F factor produces a Hilbert mismatch at degree 2n on fixed points") {
    int n = 2;
    std::vector<std::pair<std::string, C2CohModel>> factors;
    for (int i = 2; i <= 2 * n - 1; ++i)
        factors.emplace_back("KZ" + std::to_string(i), model_KZ_rho(i));
    C2CohModel truncated = product_model("no-euler", factors);
    PowerSeries bso = hilbert_series(model_BSUR(2 * n).fixed, 16);
    PowerSeries prod = hilbert_series(truncated.fixed, 16);
    int first_mismatch = -1;
    for (int d = 0; d <= 16 && first_mismatch < 0; ++d)
        if (bso.coefficients[d] != prod.coefficients[d]) first_mismatch = d;
    CHECK(first_mismatch == 2 * n);
}

TEST_CASE("corollaries pass for n = 1..4") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(check_corollary_even(n).passed());
        CHECK(check_corollary_odd(n).passed());
    }
}

TEST_CASE("maps and euler chain reports pass") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(check_maps(n).passed());
        CHECK(check_euler_chain(n).passed());
    }
}

TEST_CASE("corrupted norm formula is detected by the maps check") {
    C2Map norm = map_norm(2);
    norm.f_pullback.images[0] = norm.f_pullback.images[1];  // x -> y'^2 instead of y'
    CHECK_FALSE(check_maps(2, map_square(2), norm).passed());
}
