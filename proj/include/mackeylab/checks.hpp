#pragma once

// The named verification checks behind the CLI subcommands and the
// acceptance suite. Every check takes either parameters (and builds the
// objects itself) or pre-built objects, so a caller can corrupt an object
// and confirm the check notices.

#include "mackeylab/c2model.hpp"
#include "mackeylab/report.hpp"

namespace mackeylab {

namespace detail {

inline void report_axioms(CheckReport& r, const std::string& label, const MackeyFunctor& m) {
    for (const auto& c : check_axioms(m)) r.expect_true(label + ": " + c.axiom, c.passed);
}

inline void report_triple(CheckReport& r, const std::string& label, const MackeyFunctor& m,
                          const DecompositionTriple& expected) {
    if (!all_passed(check_axioms(m))) {
        r.expect(label + ": triple", triple_to_string(expected), "axioms failed");
        return;
    }
    r.expect(label + ": triple", triple_to_string(expected), triple_to_string(decompose(m)));
}

}  // namespace detail

// -- Mackey functor suite ----------------------------------------------------

/// Axioms and decomposition triples of the four standard functors, the
/// tensor identity A (x) C2+ ~ Z (x) C2+, and the kernel/cokernel
/// identities A -> Z with kernel I. The corrupt flag bumps the constant
/// functor's transfer from 2 to 3, which must break the double coset axiom.
inline CheckReport check_mackey(bool corrupt = false) {
    CheckReport r{"verify-mackey", {{"corrupt", corrupt ? 1 : 0}}, {}};
    MackeyFunctor z = std_constant();
    if (corrupt) z.tr.at(0, 0) = 3;
    MackeyFunctor a = std_burnside();
    MackeyFunctor i = std_augmentation_ideal();
    MackeyFunctor p = std_permutation();

    detail::report_axioms(r, "Z", z);
    detail::report_axioms(r, "A", a);
    detail::report_axioms(r, "I", i);
    detail::report_axioms(r, "Z[C2]", p);

    detail::report_triple(r, "Z", z, {1, 0, 0});
    detail::report_triple(r, "A", a, {1, 0, 1});
    detail::report_triple(r, "I", i, {0, 0, 1});
    detail::report_triple(r, "Z[C2]", p, {1, 1, 0});

    MackeyFunctor a_free = tensor_c2set(a, C2Set::free_orbit());
    MackeyFunctor z_free = tensor_c2set(std_constant(), C2Set::free_orbit());
    detail::report_axioms(r, "A(x)C2+", a_free);
    r.expect("A(x)C2+ ~ Z(x)C2+", triple_to_string(decompose(z_free)),
             triple_to_string(decompose(a_free)));
    r.expect("Z(x)C2+ ~ Z[C2]", triple_to_string(decompose(p)), triple_to_string(decompose(z_free)));
    r.expect("A(x)pt ~ A", triple_to_string(decompose(a)),
             triple_to_string(decompose(tensor_c2set(a, C2Set::point()))));

    // A -> Z projection: kernel is I; I -> A inclusion: cokernel is Z.
    MackeyMorphism projection{a, std_constant(), Matrix::from_rows({{1}}),
                              Matrix::from_rows({{1, 2}})};
    r.expect("ker(A -> Z) ~ I", triple_to_string({0, 0, 1}),
             triple_to_string(decompose(kernel(projection).functor)));
    MackeyMorphism inclusion{i, a, Matrix::zero(1, 0), Matrix::from_rows({{-2}, {1}})};
    r.expect("coker(I -> A) ~ Z", triple_to_string({1, 0, 0}),
             triple_to_string(decompose(cokernel(inclusion).functor)));
    return r;
}

// -- Complex homology tables -------------------------------------------------

namespace detail {

inline void report_euler_characteristic(CheckReport& r, const MackeyComplex& c,
                                        const std::map<int, HomologyClass>& h) {
    long chi_term_u = 0, chi_term_f = 0, chi_h_u = 0, chi_h_f = 0;
    for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
        long sign = (k % 2 == 0) ? 1 : -1;
        MackeyFunctor t = c.term(k);
        chi_term_u += sign * t.underlying.dim;
        chi_term_f += sign * t.fixed_dim;
        const MackeyFunctor& hk = h.at(k).subquotient.functor;
        chi_h_u += sign * hk.underlying.dim;
        chi_h_f += sign * hk.fixed_dim;
    }
    r.expect_eq_int("euler characteristic (underlying)", chi_term_u, chi_h_u);
    r.expect_eq_int("euler characteristic (fixed)", chi_term_f, chi_h_f);
}

}  // namespace detail

/// Homology of the given complex against the table for the i-fold
/// rho-suspension of Z: concentrated in degree 2i with underlying dimension
/// 1 and fixed dimension 1 for even i, 0 for odd i.
inline CheckReport check_complex_Z(const MackeyComplex& c, int i) {
    CheckReport r{"verify-complex", {{"i", i}, {"functor_A", 0}}, {}};
    r.expect_true("d.d = 0 and all differentials are morphisms", is_valid_complex(c));
    if (!r.passed()) return r;
    auto h = homology(c);
    for (const auto& [k, cls] : h) {
        const MackeyFunctor& m = cls.subquotient.functor;
        int exp_u = (k == 2 * i) ? 1 : 0;
        int exp_f = (k == 2 * i && i % 2 == 0) ? 1 : 0;
        r.expect_eq_int("H_" + std::to_string(k) + " underlying dim", exp_u, m.underlying.dim);
        r.expect_eq_int("H_" + std::to_string(k) + " fixed dim", exp_f, m.fixed_dim);
    }
    DecompositionTriple expected = (i % 2 == 0) ? DecompositionTriple{1, 0, 0}
                                                : DecompositionTriple{0, 1, 0};
    r.expect("H_" + std::to_string(2 * i) + " triple", triple_to_string(expected),
             triple_to_string(h.at(2 * i).triple));
    detail::report_euler_characteristic(r, c, h);
    return r;
}

inline CheckReport check_complex_Z(int i) { return check_complex_Z(rho_suspension_Z(i), i); }

/// Homology of the given complex against the table for the m-fold
/// rho-suspension of A, m even: the rho_suspension_Z table plus one extra Q
/// in degree m on fixed points (an I there), and the underlying complex
/// unchanged.
inline CheckReport check_complex_A(const MackeyComplex& c, int m) {
    CheckReport r{"verify-complex", {{"m", m}, {"functor_A", 1}}, {}};
    r.expect_true("d.d = 0 and all differentials are morphisms", is_valid_complex(c));
    if (!r.passed()) return r;
    auto h = homology(c);
    detail::report_euler_characteristic(r, c, h);
    if (m % 2 != 0) return r;  // the table is stated for even multiples only
    for (const auto& [k, cls] : h) {
        const MackeyFunctor& fk = cls.subquotient.functor;
        int exp_u = (k == 2 * m) ? 1 : 0;
        int exp_f = (k == 2 * m || k == m) ? 1 : 0;
        r.expect_eq_int("H_" + std::to_string(k) + " underlying dim", exp_u, fk.underlying.dim);
        r.expect_eq_int("H_" + std::to_string(k) + " fixed dim", exp_f, fk.fixed_dim);
    }
    r.expect("H_" + std::to_string(m) + " triple", triple_to_string({0, 0, 1}),
             triple_to_string(h.at(m).triple));
    r.expect("H_" + std::to_string(2 * m) + " triple", triple_to_string({1, 0, 0}),
             triple_to_string(h.at(2 * m).triple));
    return r;
}

inline CheckReport check_complex_A(int m) { return check_complex_A(rho_suspension_A(m), m); }

// -- Euler chain map ---------------------------------------------------------

/// The chain-level Euler class a_{2n sigma}: commutes with differentials;
/// on degree-2n fixed homology it is the projection Q[T]/(T^2-2T) -> Q
/// killing T, and on underlying homology it is zero.
inline CheckReport check_euler_chain(const ChainMap& f, int n) {
    CheckReport r{"euler-chain", {{"n", n}}, {}};
    r.expect_true("chain map commutes with differentials", commutes_with_differentials(f));
    if (!r.passed()) return r;
    auto h_src = homology(f.source);
    auto h_tgt = homology(f.target);
    MackeyMorphism induced = induced_on_homology(f, 2 * n, h_src, h_tgt);
    r.expect_eq_int("source H fixed dim", 2, induced.source.fixed_dim);
    r.expect_eq_int("target H fixed dim", 1, induced.target.fixed_dim);
    r.expect_true("fixed induced map is the projection killing T",
                  induced.f_f == Matrix::from_rows({{1, 0}}));
    r.expect_true("fixed kernel = span{T}",
                  kernel_basis(induced.f_f) == Matrix::from_rows({{0}, {1}}));
    r.expect_eq_int("target H underlying dim in degree 2n", 0,
                    induced.target.underlying.dim);
    bool underlying_zero = true;
    for (const auto& [k, cls] : h_tgt) {
        if (h_src.find(k) == h_src.end()) continue;
        if (!induced_on_homology(f, k, h_src, h_tgt).f_u.is_zero()) underlying_zero = false;
    }
    r.expect_true("underlying induced map is zero in all degrees", underlying_zero);
    return r;
}

inline CheckReport check_euler_chain(int n) { return check_euler_chain(euler_chain_map(n), n); }

// -- Squaring / norm / Euler-class identities --------------------------------

/// Identities relating the given squaring and norm maps:
/// compatibility squares, agreement on underlying, the factorization of the
/// difference through K(I, 4n) with fixed formula z -> x^2 - y, and
/// (iota^2 - N) . epsilon = 0.
inline CheckReport check_maps(int n, const C2Map& square, const C2Map& norm) {
    CheckReport r{"verify-maps", {{"n", n}}, {}};
    std::string gen;
    r.expect_true("iota^2 compatibility square", compatibility_commutes(square, &gen));
    r.expect_true("N compatibility square", compatibility_commutes(norm, &gen));
    r.expect_true("underlying pullbacks coincide (both the cup square)",
                  square.u_pullback == norm.u_pullback);

    try {
        C2Map diff = map_square_minus_norm(square, norm);
        Poly x = poly_generator(square.source.fixed, 0);
        Poly y = poly_generator(square.source.fixed, 1);
        r.expect_true("difference on fixed points is z -> x^2 - y",
                      diff.f_pullback.images[0] == x * x - y);
        r.expect_eq_int("difference underlying target is trivial", 0,
                        static_cast<long>(diff.target.underlying.gens.size()));

        // Structural factorization: the difference of the original fixed
        // pullbacks equals inclusion-then-factored.
        C2Map incl = map_KI_inclusion(n);
        RingHom factored_through = compose(incl.f_pullback, diff.f_pullback);
        bool agrees = true;
        for (size_t k = 0; k < factored_through.images.size(); ++k)
            if (!(factored_through.images[k] ==
                  square.f_pullback.images[k] - norm.f_pullback.images[k]))
                agrees = false;
        r.expect_true("iota^2 - N factors through K(I,4n)", agrees);

        C2Map euler = euler_class_map(n);
        r.expect_true("epsilon compatibility square", compatibility_commutes(euler, &gen));
        RingHom composite = compose(diff.f_pullback, euler.f_pullback);
        bool zero = true;
        for (const auto& img : composite.images)
            if (!img.is_zero()) zero = false;
        r.expect_true("(iota^2 - N) . epsilon = 0 on fixed points", zero);
        RingHom composite_u = compose(diff.u_pullback, euler.u_pullback);
        for (const auto& img : composite_u.images)
            if (!img.is_zero()) zero = false;
        r.expect_true("(iota^2 - N) . epsilon = 0 on underlying", zero);
    } catch (const FactorizationFailure& e) {
        r.expect("iota^2 - N factors through K(I,4n)", "true", e.what());
    } catch (const DegreeMismatch& e) {
        r.expect("difference is homogeneous", "true", e.what());
    }
    return r;
}

inline CheckReport check_maps(int n) { return check_maps(n, map_square(n), map_norm(n)); }

// -- Main theorem ------------------------------------------------------------

/// The comparison of the main theorem: compatibility of the comparison map,
/// equal Hilbert series on both levels up to max_degree, and per-degree
/// bijectivity of both pullbacks (surjectivity; with equal series the
/// degree matrices are square, so this forces bijectivity).
inline CheckReport check_main_theorem(const MainTheoremData& data, int n, int max_degree) {
    if (max_degree < 8 * n)
        throw InvalidDegree("check_main_theorem: max_degree must be at least " +
                            std::to_string(8 * n));
    CheckReport r{"verify-theorem", {{"n", n}, {"max_degree", max_degree}}, {}};
    std::string gen;
    bool compatible = compatibility_commutes(data.comparison, &gen);
    r.expect("comparison compatibility square", "commutes",
             compatible ? "commutes" : "fails at " + gen);

    auto series_check = [&](const std::string& level, const GradedRing& lhs,
                            const GradedRing& rhs) {
        PowerSeries a = hilbert_series(lhs, max_degree);
        PowerSeries b = hilbert_series(rhs, max_degree);
        for (int d = 0; d <= max_degree; ++d)
            if (a.coefficients[d] != 0 || b.coefficients[d] != 0)
                r.expect(level + " series coefficient t^" + std::to_string(d),
                         std::to_string(a.coefficients[d]), std::to_string(b.coefficients[d]));
    };
    series_check("underlying", data.bsur.underlying, data.product.underlying);
    series_check("fixed", data.bsur.fixed, data.product.fixed);

    auto surjectivity_check = [&](const std::string& level, const RingHom& f) {
        int first_failure = -1;
        for (int d = 1; d <= max_degree && first_failure < 0; ++d) {
            auto cod = monomials_of_degree(f.codomain, d);
            if (cod.empty()) continue;
            if (rank(degree_matrix(f, d)) != static_cast<int>(cod.size())) first_failure = d;
        }
        r.expect(level + " pullback surjective through degree " + std::to_string(max_degree),
                 "yes", first_failure < 0 ? "yes" : "fails in degree " + std::to_string(first_failure));
    };
    surjectivity_check("underlying", data.comparison.u_pullback);
    surjectivity_check("fixed", data.comparison.f_pullback);
    return r;
}

inline CheckReport check_main_theorem(int n, int max_degree) {
    return check_main_theorem(build_main_theorem(n), n, max_degree);
}

// -- Corollaries -------------------------------------------------------------

/// S^{2n rho - 1} ~ Sigma^{-1} F_{2n}: sphere homotopy on each level against
/// the desuspended fiber homotopy, plus the explicit expected tables.
inline CheckReport check_corollary_even(int n) {
    if (n < 1) throw InvalidDegree("check_corollary_even: n must be >= 1");
    CheckReport r{"verify-corollary-even", {{"n", n}}, {}};
    DimTable sphere_u = sphere_model(4 * n - 1).homotopy_dims;
    DimTable sphere_f = (2 * n - 1 >= 2) ? sphere_model(2 * n - 1).homotopy_dims
                                         : DimTable{{1, 1}};  // S^1: single class in degree 1
    C2HomotopyModel fiber = fiber_F_homotopy(n);
    DimTable rhs_u = shift_table(fiber.underlying, -1);
    DimTable rhs_f = shift_table(fiber.fixed, -1);
    r.expect("underlying homotopy", table_to_string(sphere_u), table_to_string(rhs_u));
    r.expect("fixed homotopy", table_to_string(sphere_f), table_to_string(rhs_f));
    r.expect("underlying expected table", table_to_string({{4 * n - 1, 1}}),
             table_to_string(rhs_u));
    r.expect("fixed expected table", table_to_string({{2 * n - 1, 1}}), table_to_string(rhs_f));
    return r;
}

/// S^{(2n+1) rho - 1} ~ K(Z, (2n+1) rho - 1) x fib((-)^2 : K(I,2n) -> K(I,4n)):
/// the K(Z) factor's levels come from the homology of rho_suspension_Z(2n+1),
/// the fiber factor from the long exact sequence of the squaring map on
/// fixed points (K(I, m rho) = K(I, m), underlying trivial).
inline CheckReport check_corollary_odd(int n) {
    if (n < 1) throw InvalidDegree("check_corollary_odd: n must be >= 1");
    CheckReport r{"verify-corollary-odd", {{"n", n}}, {}};
    DimTable sphere_u = sphere_model(4 * n + 1).homotopy_dims;
    DimTable sphere_f = sphere_model(2 * n).homotopy_dims;

    // K(Z, (2n+1) rho - 1): homology of the rho-suspension complex, shifted.
    DimTable kz_u, kz_f;
    for (const auto& [k, cls] : homology(rho_suspension_Z(2 * n + 1))) {
        const MackeyFunctor& m = cls.subquotient.functor;
        if (m.underlying.dim != 0) kz_u[k - 1] = m.underlying.dim;
        if (m.fixed_dim != 0) kz_f[k - 1] = m.fixed_dim;
    }

    // fib of the squaring K(I,2n) -> K(I,4n): fixed level is the fiber of
    // the squaring of ordinary EM spaces, underlying level is trivial.
    GradedRing ki_low = make_ring({{"z", 2 * n}});
    GradedRing ki_high = make_ring({{"z", 4 * n}});
    Poly z = poly_generator(ki_low, 0);
    DimTable fib_f = fiber_homotopy(make_hom(ki_high, ki_low, {z * z})).homotopy_dims;

    DimTable rhs_u = kz_u;
    DimTable rhs_f = add_tables(kz_f, fib_f);
    r.expect("underlying homotopy", table_to_string(sphere_u), table_to_string(rhs_u));
    r.expect("fixed homotopy", table_to_string(sphere_f), table_to_string(rhs_f));
    r.expect("underlying expected table", table_to_string({{4 * n + 1, 1}}),
             table_to_string(rhs_u));
    r.expect("fixed expected table", table_to_string({{2 * n, 1}, {4 * n - 1, 1}}),
             table_to_string(rhs_f));
    return r;
}

}  // namespace mackeylab
