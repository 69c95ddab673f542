#pragma once

// C2-space models recorded contravariantly: a space is a pair of cohomology
// rings (underlying level, fixed-point level) together with the pullback
// along the inclusion of fixed points, and a map of spaces is the pair of
// pullbacks on the two levels. A map is well-formed when its compatibility
// square
//
//     source.restrict . u_pullback  =  f_pullback . target.restrict
//
// commutes as an exact polynomial identity.
//
// Generator naming: K(Z, i rho) has underlying x{2i} and fixed x{2i}';
// K(A, m rho) has underlying y{2m} and fixed x{m}, y{2m}'; F_{2n} has
// underlying w{4n} and fixed x{2n}; K(I, d) has fixed z{d}; BSU_R uses the
// classical c{i}, p{i}, e{2n}.

#include "mackeylab/complexes.hpp"
#include "mackeylab/gem.hpp"

#include <utility>

namespace mackeylab {

class CompatibilityFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FactorizationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct C2CohModel {
    std::string name;
    GradedRing underlying;
    GradedRing fixed;
    RingHom restrict_map;  // underlying ring -> fixed ring
};

struct C2Map {
    C2CohModel source;
    C2CohModel target;
    RingHom u_pullback;  // target.underlying -> source.underlying
    RingHom f_pullback;  // target.fixed -> source.fixed
};

/// Graded homotopy dimensions of the two levels of a C2-space.
struct C2HomotopyModel {
    DimTable underlying;
    DimTable fixed;

    friend bool operator==(const C2HomotopyModel&, const C2HomotopyModel&) = default;
};

inline bool compatibility_commutes(const C2Map& m, std::string* offending = nullptr) {
    RingHom via_source = compose(m.u_pullback, m.source.restrict_map);
    RingHom via_target = compose(m.target.restrict_map, m.f_pullback);
    for (size_t i = 0; i < m.target.underlying.gens.size(); ++i)
        if (!(via_source.images[i] == via_target.images[i])) {
            if (offending) *offending = m.target.underlying.gens[i].name;
            return false;
        }
    return true;
}

inline void require_compatible(const C2Map& m, const char* context) {
    std::string gen;
    if (!compatibility_commutes(m, &gen))
        throw CompatibilityFailure(std::string(context) + ": square does not commute at generator " + gen);
}

namespace names {
inline std::string x(int deg) { return "x" + std::to_string(deg); }
inline std::string xp(int deg) { return "x" + std::to_string(deg) + "'"; }
inline std::string y(int deg) { return "y" + std::to_string(deg); }
inline std::string yp(int deg) { return "y" + std::to_string(deg) + "'"; }
inline std::string w(int deg) { return "w" + std::to_string(deg); }
inline std::string z(int deg) { return "z" + std::to_string(deg); }
inline std::string c(int i) { return "c" + std::to_string(i); }
inline std::string p(int i) { return "p" + std::to_string(i); }
inline std::string e(int deg) { return "e" + std::to_string(deg); }
}  // namespace names

// -- Space models ------------------------------------------------------------

/// K(Z, i rho): underlying K(Q, 2i); fixed points K(Q, 2i) for even i and
/// trivial for odd i, with the fixed-point inclusion the identity resp. the
/// constant map.
inline C2CohModel model_KZ_rho(int i) {
    if (i < 2) throw InvalidDegree("model_KZ_rho: i must be >= 2");
    GradedRing u = make_ring({{names::x(2 * i), 2 * i}});
    if (i % 2 == 0) {
        GradedRing f = make_ring({{names::xp(2 * i), 2 * i}});
        return {"K(Z," + std::to_string(i) + "rho)", u, f, make_hom(u, f, {poly_generator(f, 0)})};
    }
    GradedRing f = make_ring({});
    return {"K(Z," + std::to_string(i) + "rho)", u, f, make_hom(u, f, {poly_zero()})};
}

/// K(A, m rho) for even m: underlying K(Q, 2m); fixed K(Q, m) x K(Q, 2m);
/// fixed-point inclusion is projection onto the second factor, so its
/// pullback sends y{2m} to y{2m}' and misses x{m}.
inline C2CohModel model_KA_rho(int m) {
    if (m < 2 || m % 2 != 0) throw InvalidDegree("model_KA_rho: m must be even and >= 2");
    GradedRing u = make_ring({{names::y(2 * m), 2 * m}});
    GradedRing f = make_ring({{names::x(m), m}, {names::yp(2 * m), 2 * m}});
    return {"K(A," + std::to_string(m) + "rho)", u, f, make_hom(u, f, {poly_generator(f, 1)})};
}

/// K(I, d): trivial underlying level, fixed K(Q, d).
inline C2CohModel model_KI(int d) {
    if (d < 2 || d % 2 != 0) throw InvalidDegree("model_KI: d must be even and >= 2");
    GradedRing u = make_ring({});
    GradedRing f = make_ring({{names::z(d), d}});
    return {"K(I," + std::to_string(d) + ")", u, f, make_hom(u, f, {})};
}

/// The fiber F_{2n} of iota^2 - N: underlying K(Q, 4n), fixed K(Q, 2n),
/// with the fixed-point inclusion pulling w{4n} back to x{2n}^2.
inline C2CohModel model_F(int n) {
    if (n < 1) throw InvalidDegree("model_F: n must be >= 1");
    GradedRing u = make_ring({{names::w(4 * n), 4 * n}});
    GradedRing f = make_ring({{names::x(2 * n), 2 * n}});
    Poly x = poly_generator(f, 0);
    return {"F" + std::to_string(2 * n), u, f, make_hom(u, f, {x * x})};
}

/// BSU_R_m: underlying ring Q[c_2..c_m], fixed ring Q[p_1..p_n] for
/// m = 2n+1 and Q[p_1..p_{n-1}, e_{2n}] for m = 2n. The complexification
/// pullback sends c_{2i} to p_i (and c_{2n} to e^2 when m = 2n), odd c to 0.
inline C2CohModel model_BSUR(int m) {
    if (m < 2) throw InvalidDegree("model_BSUR: m must be >= 2");
    std::vector<Generator> ugens;
    for (int i = 2; i <= m; ++i) ugens.push_back({names::c(i), 2 * i});
    GradedRing u = make_ring(std::move(ugens));
    int n = m / 2;
    std::vector<Generator> fgens;
    int top_p = (m % 2 == 0) ? n - 1 : n;
    for (int j = 1; j <= top_p; ++j) fgens.push_back({names::p(j), 4 * j});
    if (m % 2 == 0) fgens.push_back({names::e(2 * n), 2 * n});
    GradedRing f = make_ring(std::move(fgens));
    std::vector<Poly> images;
    for (int i = 2; i <= m; ++i) {
        if (i % 2 != 0) {
            images.push_back(poly_zero());
        } else if (m % 2 == 0 && i == m) {
            Poly e = poly_generator(f, names::e(2 * n));
            images.push_back(e * e);
        } else {
            images.push_back(poly_generator(f, names::p(i / 2)));
        }
    }
    return {"BSU_R_" + std::to_string(m), u, f, make_hom(u, f, std::move(images))};
}

// -- Products ----------------------------------------------------------------

namespace detail {

inline Poly embed_poly(const Poly& p, size_t offset, size_t target_size) {
    Poly out;
    for (const auto& [e, c] : p.terms) {
        Exponents ee(target_size, 0);
        for (size_t k = 0; k < e.size(); ++k) ee[offset + k] = e[k];
        out.terms[ee] = c;
    }
    return out;
}

}  // namespace detail

/// Product of C2-spaces: generator lists concatenated with per-factor
/// prefixes (Kunneth over Q for polynomial rings is free, so this is exact),
/// restriction componentwise.
inline C2CohModel product_model(std::string name,
                                const std::vector<std::pair<std::string, C2CohModel>>& factors) {
    std::vector<std::pair<std::string, GradedRing>> u_factors, f_factors;
    for (const auto& [prefix, model] : factors) {
        u_factors.emplace_back(prefix, model.underlying);
        f_factors.emplace_back(prefix, model.fixed);
    }
    GradedRing u = tensor_rings(u_factors);
    GradedRing f = tensor_rings(f_factors);
    std::vector<Poly> images;
    size_t f_offset = 0;
    for (const auto& [prefix, model] : factors) {
        for (const auto& img : model.restrict_map.images)
            images.push_back(detail::embed_poly(img, f_offset, f.gens.size()));
        f_offset += model.fixed.gens.size();
    }
    return {std::move(name), u, f, make_hom(u, f, std::move(images))};
}

// -- The squaring, norm, and Euler-class maps --------------------------------

/// iota^2 : K(A, 2n rho) -> K(A, 4n rho). Underlying y -> y^2; fixed
/// (x, y) -> (x^2, y^2).
inline C2Map map_square(int n) {
    if (n < 1) throw InvalidDegree("map_square: n must be >= 1");
    C2CohModel source = model_KA_rho(2 * n);
    C2CohModel target = model_KA_rho(4 * n);
    Poly y_u = poly_generator(source.underlying, 0);
    Poly x = poly_generator(source.fixed, 0);
    Poly y = poly_generator(source.fixed, 1);
    C2Map m{source, target, make_hom(target.underlying, source.underlying, {y_u * y_u}),
            make_hom(target.fixed, source.fixed, {x * x, y * y})};
    require_compatible(m, "map_square");
    return m;
}

/// N : K(A, 2n rho) -> K(A, 4n rho). Underlying the cup square y -> y^2;
/// fixed (x, y) -> (y, y^2).
inline C2Map map_norm(int n) {
    if (n < 1) throw InvalidDegree("map_norm: n must be >= 1");
    C2CohModel source = model_KA_rho(2 * n);
    C2CohModel target = model_KA_rho(4 * n);
    Poly y_u = poly_generator(source.underlying, 0);
    Poly y = poly_generator(source.fixed, 1);
    C2Map m{source, target, make_hom(target.underlying, source.underlying, {y_u * y_u}),
            make_hom(target.fixed, source.fixed, {y, y * y})};
    require_compatible(m, "map_norm");
    return m;
}

/// The pullback of the inclusion K(I, 4n) = K(I, 4n rho) -> K(A, 4n rho):
/// x{4n} -> z{4n}, y{8n}' -> 0 on fixed, nothing on underlying.
inline C2Map map_KI_inclusion(int n) {
    C2CohModel source = model_KI(4 * n);
    C2CohModel target = model_KA_rho(4 * n);
    C2Map m{source, target, zero_hom(target.underlying, source.underlying),
            make_hom(target.fixed, source.fixed, {poly_generator(source.fixed, 0), poly_zero()})};
    require_compatible(m, "map_KI_inclusion");
    return m;
}

/// iota^2 - N as a map into K(I, 4n): zero on underlying, z -> x^2 - y on
/// fixed points. Throws FactorizationFailure if the given squaring and norm
/// maps do not agree on underlying or the difference hits y{8n}'.
inline C2Map map_square_minus_norm(const C2Map& square, const C2Map& norm) {
    for (size_t i = 0; i < square.u_pullback.images.size(); ++i)
        if (!(square.u_pullback.images[i] - norm.u_pullback.images[i]).is_zero())
            throw FactorizationFailure("map_square_minus_norm: difference is nonzero on underlying");
    Poly diff_y = square.f_pullback.images[1] - norm.f_pullback.images[1];
    if (!diff_y.is_zero())
        throw FactorizationFailure("map_square_minus_norm: difference hits the y' component");
    C2CohModel source = square.source;
    int n = source.fixed.gens[0].degree / 2;  // fixed gens are x{2n}, y{4n}'
    C2CohModel target = model_KI(4 * n);
    Poly diff_x = square.f_pullback.images[0] - norm.f_pullback.images[0];
    C2Map m{source, target, zero_hom(target.underlying, source.underlying),
            make_hom(target.fixed, source.fixed, {diff_x})};
    require_compatible(m, "map_square_minus_norm");
    return m;
}

inline C2Map map_square_minus_norm(int n) {
    return map_square_minus_norm(map_square(n), map_norm(n));
}

/// The equivariant Euler class epsilon : BSU_R_{2n} -> K(A, 2n rho):
/// underlying y{4n} -> c{2n}, fixed (x, y') -> (e, e^2).
inline C2Map euler_class_map(int n) {
    if (n < 1) throw InvalidDegree("euler_class_map: n must be >= 1");
    C2CohModel source = model_BSUR(2 * n);
    C2CohModel target = model_KA_rho(2 * n);
    Poly c_top = poly_generator(source.underlying, names::c(2 * n));
    Poly e = poly_generator(source.fixed, names::e(2 * n));
    C2Map m{source, target, make_hom(target.underlying, source.underlying, {c_top}),
            make_hom(target.fixed, source.fixed, {e, e * e})};
    require_compatible(m, "euler_class_map");
    return m;
}

// -- Homotopy of the fiber ---------------------------------------------------

/// Homotopy dimensions of F_{2n}, computed from the long exact sequence of
/// iota^2 - N on each level (not read off from model_F).
inline C2HomotopyModel fiber_F_homotopy(const C2Map& square_minus_norm) {
    return {fiber_homotopy(square_minus_norm.u_pullback).homotopy_dims,
            fiber_homotopy(square_minus_norm.f_pullback).homotopy_dims};
}

inline C2HomotopyModel fiber_F_homotopy(int n) { return fiber_F_homotopy(map_square_minus_norm(n)); }

// -- The main-theorem comparison ---------------------------------------------

struct MainTheoremData {
    C2CohModel bsur;     // BSU_R_{2n}
    C2CohModel product;  // prod_{i=2}^{2n-1} K(Z, i rho) x F_{2n}
    C2Map comparison;    // pullbacks of (c_2, ..., c_{2n-1}, epsilon)
};

/// The comparison map of the main theorem: Chern classes c_i for i < n on
/// the K(Z, i rho) factors and the Euler class on the F_{2n} factor.
inline MainTheoremData build_main_theorem(int n) {
    if (n < 1) throw InvalidDegree("build_main_theorem: n must be >= 1");
    C2CohModel bsur = model_BSUR(2 * n);
    std::vector<std::pair<std::string, C2CohModel>> factors;
    for (int i = 2; i <= 2 * n - 1; ++i)
        factors.emplace_back("KZ" + std::to_string(i), model_KZ_rho(i));
    factors.emplace_back("F", model_F(n));
    C2CohModel product = product_model("product_n" + std::to_string(n), factors);

    std::vector<Poly> u_images;
    for (int i = 2; i <= 2 * n - 1; ++i)
        u_images.push_back(poly_generator(bsur.underlying, names::c(i)));
    u_images.push_back(poly_generator(bsur.underlying, names::c(2 * n)));

    std::vector<Poly> f_images;
    for (int i = 2; i <= 2 * n - 1; ++i)
        if (i % 2 == 0) f_images.push_back(poly_generator(bsur.fixed, names::p(i / 2)));
    f_images.push_back(poly_generator(bsur.fixed, names::e(2 * n)));

    C2Map comparison{bsur, product,
                     make_hom(product.underlying, bsur.underlying, std::move(u_images)),
                     make_hom(product.fixed, bsur.fixed, std::move(f_images))};
    return {std::move(bsur), std::move(product), std::move(comparison)};
}

}  // namespace mackeylab
