#pragma once

// Rational homotopy calculus for generalized Eilenberg-MacLane spaces.
//
// Cohomology rings are free graded-commutative on even-degree generators,
// hence honest polynomial rings; odd-degree homotopy lives only in GemModel
// dimension tables, never in a ring, so graded-commutativity signs never
// arise. Maps of spaces are recorded contravariantly as ring homomorphisms
// (pullbacks). The induced map on homotopy is the linear part of the
// pullback: decomposables act trivially on homotopy for simply connected
// rational spaces.
//
// Monomial order: lexicographic in generator list order, then by exponent,
// so every matrix layout is deterministic.

#include "mackeylab/qlinalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mackeylab {

class InvalidRing : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Generator {
    std::string name;
    int degree;

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct GradedRing {
    std::vector<Generator> gens;

    friend bool operator==(const GradedRing&, const GradedRing&) = default;
};

inline GradedRing make_ring(std::vector<Generator> gens) {
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree <= 0 || gens[i].degree % 2 != 0)
            throw InvalidRing("make_ring: generator degree must be even and positive: " +
                              gens[i].name);
        for (size_t j = 0; j < i; ++j)
            if (gens[i].name == gens[j].name)
                throw InvalidRing("make_ring: duplicate generator name: " + gens[i].name);
    }
    return {std::move(gens)};
}

/// Tensor product of free algebras: generator lists concatenated, component
/// names prefixed to keep them unique.
inline GradedRing tensor_rings(const std::vector<std::pair<std::string, GradedRing>>& factors) {
    std::vector<Generator> gens;
    for (const auto& [prefix, ring] : factors)
        for (const auto& g : ring.gens) gens.push_back({prefix + "." + g.name, g.degree});
    return make_ring(std::move(gens));
}

// -- Polynomials -------------------------------------------------------------

using Exponents = std::vector<int>;

/// Polynomial over an implied GradedRing (exponent vectors indexed by the
/// ring's generator list). Zero coefficients are never stored.
struct Poly {
    std::map<Exponents, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const Poly&, const Poly&) = default;
};

inline Poly poly_zero() { return {}; }

inline Poly poly_generator(const GradedRing& ring, int index) {
    Exponents e(ring.gens.size(), 0);
    e[index] = 1;
    return {{{e, Rational(1)}}};
}

inline Poly poly_generator(const GradedRing& ring, const std::string& name) {
    for (size_t i = 0; i < ring.gens.size(); ++i)
        if (ring.gens[i].name == name) return poly_generator(ring, static_cast<int>(i));
    throw InvalidRing("poly_generator: no generator named " + name);
}

inline void poly_add_term(Poly& p, const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
    }
}

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b.terms) poly_add_term(out, e, c);
    return out;
}

inline Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, c] : b.terms) poly_add_term(out, e, -c);
    return out;
}

inline Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exponents e = ea;
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            poly_add_term(out, e, ca * cb);
        }
    return out;
}

inline Poly poly_pow(const Poly& p, int n) {
    Poly out{{{Exponents(p.terms.empty() ? 0 : p.terms.begin()->first.size(), 0), Rational(1)}}};
    for (int k = 0; k < n; ++k) out = out * p;
    return out;
}

inline int monomial_degree(const GradedRing& ring, const Exponents& e) {
    int d = 0;
    for (size_t k = 0; k < e.size(); ++k) d += e[k] * ring.gens[k].degree;
    return d;
}

/// True iff every term has the stated degree (the zero polynomial is
/// homogeneous of any degree).
inline bool is_homogeneous(const GradedRing& ring, const Poly& p, int degree) {
    for (const auto& [e, c] : p.terms)
        if (monomial_degree(ring, e) != degree) return false;
    return true;
}

/// All exponent vectors of the given total (weighted) degree, in the fixed
/// deterministic order.
inline std::vector<Exponents> monomials_of_degree(const GradedRing& ring, int degree) {
    std::vector<Exponents> out;
    Exponents current(ring.gens.size(), 0);
    auto recurse = [&](auto&& self, size_t gen, int remaining) -> void {
        if (gen == ring.gens.size()) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        int d = ring.gens[gen].degree;
        for (int e = 0; e * d <= remaining; ++e) {
            current[gen] = e;
            self(self, gen + 1, remaining - e * d);
        }
        current[gen] = 0;
    };
    recurse(recurse, 0, degree);
    return out;
}

// -- Ring homomorphisms (pullbacks of space maps) ----------------------------

/// Homomorphism of free graded rings, recorded on generators. Each image
/// must be homogeneous of the generator's degree; this is checked at
/// construction.
struct RingHom {
    GradedRing domain;
    GradedRing codomain;
    std::vector<Poly> images;  // one per domain generator, over codomain

    friend bool operator==(const RingHom&, const RingHom&) = default;
};

inline RingHom make_hom(GradedRing domain, GradedRing codomain, std::vector<Poly> images) {
    if (images.size() != domain.gens.size())
        throw DegreeMismatch("make_hom: need one image per domain generator");
    for (size_t i = 0; i < images.size(); ++i)
        if (!is_homogeneous(codomain, images[i], domain.gens[i].degree))
            throw DegreeMismatch("make_hom: image of " + domain.gens[i].name +
                                 " is not homogeneous of degree " +
                                 std::to_string(domain.gens[i].degree));
    return {std::move(domain), std::move(codomain), std::move(images)};
}

inline RingHom zero_hom(GradedRing domain, GradedRing codomain) {
    std::vector<Poly> images(domain.gens.size());
    return {std::move(domain), std::move(codomain), std::move(images)};
}

inline Poly apply_hom(const RingHom& f, const Poly& p) {
    Poly out;
    for (const auto& [e, c] : p.terms) {
        Poly term{{{Exponents(f.codomain.gens.size(), 0), c}}};
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) term = term * poly_pow(f.images[k], e[k]);
        out = out + term;
    }
    return out;
}

/// Composite ring map: first f, then g (so g.domain must equal f.codomain).
inline RingHom compose(const RingHom& f, const RingHom& g) {
    if (!(f.codomain == g.domain)) throw DegreeMismatch("compose: rings do not match");
    std::vector<Poly> images;
    images.reserve(f.images.size());
    for (const auto& img : f.images) images.push_back(apply_hom(g, img));
    return {f.domain, g.codomain, std::move(images)};
}

/// Matrix of f on the degree-d graded piece: columns indexed by domain
/// monomials, rows by codomain monomials.
inline Matrix degree_matrix(const RingHom& f, int degree) {
    auto dom = monomials_of_degree(f.domain, degree);
    auto cod = monomials_of_degree(f.codomain, degree);
    std::map<Exponents, int> row_of;
    for (size_t i = 0; i < cod.size(); ++i) row_of[cod[i]] = static_cast<int>(i);
    Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (size_t j = 0; j < dom.size(); ++j) {
        Poly img = apply_hom(f, Poly{{{dom[j], Rational(1)}}});
        for (const auto& [e, c] : img.terms) m.at(row_of.at(e), static_cast<int>(j)) = c;
    }
    return m;
}

/// Full row rank of the degree-d matrix for every d <= max_degree.
inline bool is_surjective_up_to(const RingHom& f, int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
        auto cod = monomials_of_degree(f.codomain, d);
        if (cod.empty()) continue;
        if (rank(degree_matrix(f, d)) != static_cast<int>(cod.size())) return false;
    }
    return true;
}

/// Coefficients of the degree-1 monomials only: rows are codomain generators
/// of the given degree, columns domain generators of that degree. This is
/// (the matrix of) the induced map on homotopy in that degree, transposed.
inline Matrix linear_part(const RingHom& f, int degree) {
    std::vector<int> dom_gens, cod_gens;
    for (size_t i = 0; i < f.domain.gens.size(); ++i)
        if (f.domain.gens[i].degree == degree) dom_gens.push_back(static_cast<int>(i));
    for (size_t i = 0; i < f.codomain.gens.size(); ++i)
        if (f.codomain.gens[i].degree == degree) cod_gens.push_back(static_cast<int>(i));
    Matrix m(static_cast<int>(cod_gens.size()), static_cast<int>(dom_gens.size()));
    for (size_t j = 0; j < dom_gens.size(); ++j) {
        const Poly& img = f.images[dom_gens[j]];
        for (size_t i = 0; i < cod_gens.size(); ++i) {
            Exponents e(f.codomain.gens.size(), 0);
            e[cod_gens[i]] = 1;
            auto it = img.terms.find(e);
            if (it != img.terms.end()) m.at(static_cast<int>(i), static_cast<int>(j)) = it->second;
        }
    }
    return m;
}

// -- Hilbert series ----------------------------------------------------------

struct PowerSeries {
    int truncation_degree = 0;
    std::vector<std::int64_t> coefficients;  // indices 0..truncation_degree

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

/// Coefficients of prod over generators of 1/(1 - t^deg), truncated.
inline PowerSeries hilbert_series(const GradedRing& ring, int truncation_degree) {
    if (truncation_degree < 0) throw InvalidDegree("hilbert_series: negative truncation");
    PowerSeries s{truncation_degree, std::vector<std::int64_t>(truncation_degree + 1, 0)};
    s.coefficients[0] = 1;
    for (const auto& g : ring.gens)
        for (int k = g.degree; k <= truncation_degree; ++k)
            s.coefficients[k] += s.coefficients[k - g.degree];
    return s;
}

// -- GEM models and fibers ---------------------------------------------------

/// Graded dimension table; zero entries are never stored.
using DimTable = std::map<int, int>;

inline DimTable add_tables(const DimTable& a, const DimTable& b) {
    DimTable out = a;
    for (const auto& [d, n] : b)
        if ((out[d] += n) == 0) out.erase(d);
    return out;
}

inline DimTable shift_table(const DimTable& t, int s) {
    DimTable out;
    for (const auto& [d, n] : t) out[d + s] = n;
    return out;
}

/// A product of K(Q, m)'s recorded by its homotopy dimensions; all degrees
/// at least 2 (everything in scope is simply connected).
struct GemModel {
    DimTable homotopy_dims;

    friend bool operator==(const GemModel&, const GemModel&) = default;
};

inline GemModel make_gem(DimTable dims) {
    for (const auto& [d, n] : dims)
        if (d < 2 || n < 0) throw InvalidDegree("make_gem: degrees must be >= 2, dims >= 0");
    return {std::move(dims)};
}

/// The GEM whose cohomology ring is free on the given generators.
inline GemModel gem_of_ring(const GradedRing& ring) {
    DimTable dims;
    for (const auto& g : ring.gens) ++dims[g.degree];
    return make_gem(std::move(dims));
}

/// Homotopy of the fiber of a map X -> Y of GEMs presented by its pullback
/// phi : ring(Y) -> ring(X), from the long exact sequence:
/// dim pi_k(fib) = dim ker(L_k) + dim coker(L_{k+1}) where L is the induced
/// map on homotopy (rank = rank of the linear part of phi).
inline GemModel fiber_homotopy(const RingHom& pullback) {
    DimTable x = gem_of_ring(pullback.codomain).homotopy_dims;  // source space
    DimTable y = gem_of_ring(pullback.domain).homotopy_dims;    // target space
    std::map<int, int> rank_at;
    auto rank_in_degree = [&](int d) {
        auto it = rank_at.find(d);
        if (it == rank_at.end()) it = rank_at.emplace(d, rank(linear_part(pullback, d))).first;
        return it->second;
    };
    DimTable dims;
    int top = 0;
    for (const auto& [d, n] : x) top = std::max(top, d);
    for (const auto& [d, n] : y) top = std::max(top, d);
    for (int k = 2; k <= top; ++k) {
        int dim_x = x.count(k) ? x.at(k) : 0;
        int dim_y1 = y.count(k + 1) ? y.at(k + 1) : 0;
        int fib = (dim_x - rank_in_degree(k)) + (dim_y1 - rank_in_degree(k + 1));
        if (fib != 0) dims[k] = fib;
    }
    return make_gem(std::move(dims));
}

/// Rational homotopy of S^d: a single class in degree d for odd d; for even
/// d, classes in degrees d and 2d-1, computed as the fiber of the squaring
/// map K(Q,d) -> K(Q,2d).
inline GemModel sphere_model(int d) {
    if (d < 2) throw InvalidDegree("sphere_model: d must be >= 2");
    if (d % 2 == 1) return make_gem({{d, 1}});
    GradedRing source = make_ring({{"x", d}});
    GradedRing target = make_ring({{"y", 2 * d}});
    RingHom squaring =
        make_hom(target, source, {poly_generator(source, 0) * poly_generator(source, 0)});
    return fiber_homotopy(squaring);
}

}  // namespace mackeylab
