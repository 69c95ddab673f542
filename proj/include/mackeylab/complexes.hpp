#pragma once

// Chain complexes of Mackey functors in homological (descending) grading,
// their homology, and the rho-suspension complexes
//
//   Z[C2] --(1-(-1)^i tau)--> ... Z[C2] --(1+tau)--> Z[C2] --(1-tau)--> Z[C2] --tr--> Z
//
// with the bottom term in degree i and the top Z[C2] in degree 2i. The
// alternation is anchored at the bottom: the differential from degree i+2
// to i+1 is 1-tau, the next one up 1+tau, and so on, which makes the top
// differential 1-(-1)^i tau.

#include "mackeylab/mackey.hpp"

#include <map>

namespace mackeylab {

inline MackeyMorphism zero_morphism(const MackeyFunctor& source, const MackeyFunctor& target) {
    return {source, target, Matrix::zero(target.underlying.dim, source.underlying.dim),
            Matrix::zero(target.fixed_dim, source.fixed_dim)};
}

inline MackeyMorphism identity_morphism(const MackeyFunctor& m) {
    return {m, m, Matrix::identity(m.underlying.dim), Matrix::identity(m.fixed_dim)};
}

struct MackeyComplex {
    std::map<int, MackeyFunctor> terms;       // absent degree = zero functor
    std::map<int, MackeyMorphism> diffs;      // key k: term(k) -> term(k-1)

    MackeyFunctor term(int k) const {
        auto it = terms.find(k);
        return it == terms.end() ? MackeyFunctor::zero() : it->second;
    }
    MackeyMorphism diff(int k) const {
        auto it = diffs.find(k);
        return it == diffs.end() ? zero_morphism(term(k), term(k - 1)) : it->second;
    }
    int min_degree() const { return terms.empty() ? 0 : terms.begin()->first; }
    int max_degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
};

/// d must be a Mackey morphism in every degree and d.d = 0 at both levels.
inline bool is_valid_complex(const MackeyComplex& c) {
    for (const auto& [k, d] : c.diffs) {
        if (!is_morphism(d)) return false;
        MackeyMorphism below = c.diff(k - 1);
        if (!(below.f_u * d.f_u).is_zero() || !(below.f_f * d.f_f).is_zero()) return false;
    }
    return true;
}

// -- The rho-suspension complexes --------------------------------------------

namespace detail {

/// Differential Z[C2] -> Z[C2] given by 1 - sign * tau, with its fixed-level
/// restriction to Q{1 + tau}: zero when sign = +1, multiplication by 2 when
/// sign = -1.
inline MackeyMorphism permutation_diff(int sign) {
    MackeyFunctor p = std_permutation();
    Matrix f_u = Matrix::identity(2) - Rational(sign) * p.underlying.tau;
    Matrix f_f = Matrix::from_rows({{sign > 0 ? 0 : 2}});
    return {p, p, f_u, f_f};
}

/// Sign of tau in the differential from degree k to k-1, for bottom term in
/// degree i: 1 - (-1)^(k-i) tau.
inline int alternation_sign(int k, int i) { return (k - i) % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// The complex computing the i-fold rho-suspension of the constant functor:
/// Z in degree i, Z[C2] in degrees i+1..2i, bottom map induced by the
/// transfer (coefficient sum on underlying, times 2 on fixed points).
inline MackeyComplex rho_suspension_Z(int i) {
    if (i < 1) throw InvalidDegree("rho_suspension_Z: i must be >= 1");
    MackeyComplex c;
    MackeyFunctor z = std_constant();
    MackeyFunctor p = std_permutation();
    c.terms[i] = z;
    for (int k = i + 1; k <= 2 * i; ++k) c.terms[k] = p;
    c.diffs[i + 1] = {p, z, Matrix::from_rows({{1, 1}}), Matrix::from_rows({{2}})};
    for (int k = i + 2; k <= 2 * i; ++k)
        c.diffs[k] = detail::permutation_diff(detail::alternation_sign(k, i));
    return c;
}

/// Same shape with the Burnside functor A at the bottom. The bottom
/// differential is the coefficient sum on underlying and 1 -> T on fixed
/// points; the underlying complex is identical to rho_suspension_Z(m)'s.
inline MackeyComplex rho_suspension_A(int m) {
    if (m < 1) throw InvalidDegree("rho_suspension_A: m must be >= 1");
    MackeyComplex c = rho_suspension_Z(m);
    MackeyFunctor a = std_burnside();
    MackeyFunctor p = std_permutation();
    c.terms[m] = a;
    c.diffs[m + 1] = {p, a, Matrix::from_rows({{1, 1}}), Matrix::from_rows({{0}, {1}})};
    return c;
}

inline MackeyComplex shift(const MackeyComplex& c, int s) {
    MackeyComplex out;
    for (const auto& [k, t] : c.terms) out.terms[k + s] = t;
    for (const auto& [k, d] : c.diffs) out.diffs[k + s] = d;
    return out;
}

// -- Homology ----------------------------------------------------------------

/// Homology in every degree of the complex's support, as Mackey functors
/// together with the subquotient coordinate data (needed to push chain maps
/// to homology) and decomposition triples.
struct HomologyClass {
    MackeySubquotient subquotient;
    DecompositionTriple triple;
};

inline std::map<int, HomologyClass> homology(const MackeyComplex& c) {
    std::map<int, HomologyClass> h;
    for (int k = c.min_degree(); k <= c.max_degree(); ++k) {
        MackeyFunctor ambient = c.term(k);
        MackeyMorphism out = c.diff(k);
        MackeyMorphism in = c.diff(k + 1);
        auto sub = mackey_subquotient(
            ambient,
            Subquotient(ambient.underlying.dim, kernel_basis(out.f_u), image_basis(in.f_u)),
            Subquotient(ambient.fixed_dim, kernel_basis(out.f_f), image_basis(in.f_f)));
        DecompositionTriple triple = decompose(sub.functor);
        h.emplace(k, HomologyClass{std::move(sub), triple});
    }
    return h;
}

// -- Chain maps --------------------------------------------------------------

struct ChainMap {
    MackeyComplex source;
    MackeyComplex target;
    std::map<int, MackeyMorphism> components;  // absent degree = zero

    MackeyMorphism component(int k) const {
        auto it = components.find(k);
        return it == components.end() ? zero_morphism(source.term(k), target.term(k)) : it->second;
    }
};

inline bool commutes_with_differentials(const ChainMap& f) {
    int lo = std::min(f.source.min_degree(), f.target.min_degree());
    int hi = std::max(f.source.max_degree(), f.target.max_degree());
    for (int k = lo; k <= hi + 1; ++k) {
        MackeyMorphism fk = f.component(k);
        MackeyMorphism fk1 = f.component(k - 1);
        MackeyMorphism ds = f.source.diff(k);
        MackeyMorphism dt = f.target.diff(k);
        if (!(fk1.f_u * ds.f_u == dt.f_u * fk.f_u) || !(fk1.f_f * ds.f_f == dt.f_f * fk.f_f))
            return false;
    }
    return true;
}

/// The Euler class a_{2n sigma} at chain level: from A concentrated in
/// degree 2n into the rho-suspension complex of A, the identity on the
/// bottom term and zero elsewhere.
inline ChainMap euler_chain_map(int n) {
    if (n < 1) throw InvalidDegree("euler_chain_map: n must be >= 1");
    MackeyComplex source;
    source.terms[2 * n] = std_burnside();
    MackeyComplex target = rho_suspension_A(2 * n);
    ChainMap f{std::move(source), std::move(target), {}};
    f.components[2 * n] = identity_morphism(std_burnside());
    return f;
}

/// Map induced on homology in one degree by a chain map.
inline MackeyMorphism induced_on_homology(const ChainMap& f, int degree,
                                          const std::map<int, HomologyClass>& h_source,
                                          const std::map<int, HomologyClass>& h_target) {
    const MackeySubquotient& hs = h_source.at(degree).subquotient;
    const MackeySubquotient& ht = h_target.at(degree).subquotient;
    MackeyMorphism comp = f.component(degree);
    return {hs.functor, ht.functor, hs.u.induced(comp.f_u, ht.u), hs.f.induced(comp.f_f, ht.f)};
}

}  // namespace mackeylab
