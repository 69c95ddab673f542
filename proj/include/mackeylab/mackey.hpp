#pragma once

// Rational C2-Mackey functors.
//
// A Mackey functor is stored as its two levels: the underlying level
// M(C2/e), a C2-module (dimension + involution tau), and the fixed level
// M(C2/C2). Restriction goes fixed -> underlying, transfer goes
// underlying -> fixed, subject to
//
//     tau^2 = 1,   tau res = res,   tr tau = tr,   res tr = 1 + tau.
//
// Basis conventions, fixed once and used by every formula in the library:
//   - Burnside functor A: ordered fixed-level basis (1, T), T the free orbit.
//   - Permutation functor Z[C2]: ordered underlying basis (1, tau).
//
// Rationally the category is semisimple with three simple objects; the
// multiplicity triple (m_triv, m_sign, m_I) is a complete isomorphism
// invariant and is what all isomorphism tests compare.

#include "mackeylab/qlinalg.hpp"

#include <string>
#include <vector>

namespace mackeylab {

class AxiomViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct C2Module {
    int dim = 0;
    Matrix tau;  // dim x dim, tau^2 = 1

    static C2Module trivial(int dim) { return {dim, Matrix::identity(dim)}; }
};

struct MackeyFunctor {
    C2Module underlying;
    int fixed_dim = 0;
    Matrix res;  // underlying.dim x fixed_dim
    Matrix tr;   // fixed_dim x underlying.dim

    static MackeyFunctor zero() {
        return {C2Module::trivial(0), 0, Matrix::zero(0, 0), Matrix::zero(0, 0)};
    }
};

struct MackeyMorphism {
    MackeyFunctor source;
    MackeyFunctor target;
    Matrix f_u;  // target.underlying.dim x source.underlying.dim
    Matrix f_f;  // target.fixed_dim x source.fixed_dim
};

/// Finite C2-set: a number of trivial points and a number of free orbits.
struct C2Set {
    int trivial_points = 0;
    int free_orbits = 0;

    static C2Set point() { return {1, 0}; }
    static C2Set free_orbit() { return {0, 1}; }
};

struct AxiomCheck {
    std::string axiom;
    bool passed;
};

using AxiomReport = std::vector<AxiomCheck>;

inline bool all_passed(const AxiomReport& report) {
    for (const auto& c : report)
        if (!c.passed) return false;
    return true;
}

inline AxiomReport check_axioms(const MackeyFunctor& m) {
    int u = m.underlying.dim;
    if (m.underlying.tau.rows() != u || m.underlying.tau.cols() != u ||
        m.res.rows() != u || m.res.cols() != m.fixed_dim ||
        m.tr.rows() != m.fixed_dim || m.tr.cols() != u)
        throw ShapeMismatch("check_axioms: inconsistent dimensions");
    const Matrix& tau = m.underlying.tau;
    AxiomReport report;
    report.push_back({"tau^2 = 1", tau * tau == Matrix::identity(u)});
    report.push_back({"tau res = res", tau * m.res == m.res});
    report.push_back({"tr tau = tr", m.tr * tau == m.tr});
    report.push_back({"res tr = 1 + tau", m.res * m.tr == Matrix::identity(u) + tau});
    return report;
}

inline void require_axioms(const MackeyFunctor& m, const char* context) {
    for (const auto& c : check_axioms(m))
        if (!c.passed) throw AxiomViolation(std::string(context) + ": " + c.axiom + " fails");
}

inline bool is_morphism(const MackeyMorphism& f) {
    return f.f_u * f.source.underlying.tau == f.target.underlying.tau * f.f_u &&
           f.f_u * f.source.res == f.target.res * f.f_f &&
           f.f_f * f.source.tr == f.target.tr * f.f_u;
}

// -- Standard functors -------------------------------------------------------

/// Constant functor Z (rationalized): both levels Q, res = 1, tr = 2.
inline MackeyFunctor std_constant() {
    return {C2Module::trivial(1), 1, Matrix::from_rows({{1}}), Matrix::from_rows({{2}})};
}

/// Burnside functor A: fixed level Q{1, T}, res(a + bT) = a + 2b, tr(1) = T.
inline MackeyFunctor std_burnside() {
    return {C2Module::trivial(1), 2, Matrix::from_rows({{1, 2}}),
            Matrix::from_rows({{0}, {1}})};
}

/// Augmentation ideal I: underlying 0, fixed Q{T - 2}.
inline MackeyFunctor std_augmentation_ideal() {
    return {C2Module::trivial(0), 1, Matrix::zero(0, 1), Matrix::zero(1, 0)};
}

/// Permutation functor Z[C2]: underlying Q{1, tau} with tau swapping the
/// basis, fixed Q{1 + tau}; res(1) = 1 + tau, tr = sum of coefficients.
inline MackeyFunctor std_permutation() {
    return {{2, Matrix::from_rows({{0, 1}, {1, 0}})},
            1,
            Matrix::from_rows({{1}, {1}}),
            Matrix::from_rows({{1, 1}})};
}

// -- Constructions -----------------------------------------------------------

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

inline MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
    return {{a.underlying.dim + b.underlying.dim, block_diag(a.underlying.tau, b.underlying.tau)},
            a.fixed_dim + b.fixed_dim,
            block_diag(a.res, b.res),
            block_diag(a.tr, b.tr)};
}

/// M tensor C2+ for a single free orbit. Fixed level = M(C2/e); underlying
/// level = M(C2/e)^2 with tau(x, y) = (tau_M y, tau_M x); res v = (v, tau v);
/// tr(x, y) = x + tau y.
inline MackeyFunctor tensor_free_orbit(const MackeyFunctor& m) {
    int u = m.underlying.dim;
    const Matrix& t = m.underlying.tau;
    Matrix z = Matrix::zero(u, u);
    Matrix tau2(2 * u, 2 * u);
    Matrix res2(2 * u, u);
    Matrix tr2(u, 2 * u);
    Matrix id = Matrix::identity(u);
    for (int i = 0; i < u; ++i)
        for (int j = 0; j < u; ++j) {
            tau2.at(i, u + j) = t.at(i, j);
            tau2.at(u + i, j) = t.at(i, j);
            res2.at(i, j) = id.at(i, j);
            res2.at(u + i, j) = t.at(i, j);
            tr2.at(i, j) = id.at(i, j);
            tr2.at(i, u + j) = t.at(i, j);
        }
    return {{2 * u, tau2}, u, res2, tr2};
}

/// M tensor S+ for a finite C2-set; additive in orbits, with a trivial point
/// contributing M itself and a free orbit contributing tensor_free_orbit(M).
inline MackeyFunctor tensor_c2set(const MackeyFunctor& m, const C2Set& s) {
    MackeyFunctor out = MackeyFunctor::zero();
    for (int k = 0; k < s.trivial_points; ++k) out = direct_sum(out, m);
    for (int k = 0; k < s.free_orbits; ++k) out = direct_sum(out, tensor_free_orbit(m));
    return out;
}

// -- Subquotients and (co)kernels --------------------------------------------

/// A Mackey functor presented as a subquotient of an ambient one, with the
/// coordinate data needed to transport ambient maps to the subquotient.
struct MackeySubquotient {
    MackeyFunctor functor;
    Subquotient u;  // underlying level
    Subquotient f;  // fixed level
};

/// Builds the induced Mackey structure on a levelwise subquotient of m.
/// Throws AxiomViolation if the ambient data does not descend (which signals
/// that the subspaces were not tau/res/tr-stable).
inline MackeySubquotient mackey_subquotient(const MackeyFunctor& m, Subquotient u, Subquotient f) {
    MackeyFunctor out;
    out.underlying.dim = u.dim();
    out.underlying.tau = u.induced(m.underlying.tau, u);
    out.fixed_dim = f.dim();
    out.res = f.induced(m.res, u);
    out.tr = u.induced(m.tr, f);
    require_axioms(out, "mackey_subquotient");
    return {std::move(out), std::move(u), std::move(f)};
}

inline MackeySubquotient kernel(const MackeyMorphism& morphism) {
    if (!is_morphism(morphism)) throw AxiomViolation("kernel: input is not a Mackey morphism");
    return mackey_subquotient(morphism.source,
                              Subquotient::subspace(kernel_basis(morphism.f_u)),
                              Subquotient::subspace(kernel_basis(morphism.f_f)));
}

inline MackeySubquotient cokernel(const MackeyMorphism& morphism) {
    if (!is_morphism(morphism)) throw AxiomViolation("cokernel: input is not a Mackey morphism");
    return mackey_subquotient(
        morphism.target,
        Subquotient::quotient(morphism.target.underlying.dim, image_basis(morphism.f_u)),
        Subquotient::quotient(morphism.target.fixed_dim, image_basis(morphism.f_f)));
}

// -- Semisimple decomposition ------------------------------------------------

/// Multiplicities of the three simple rational Mackey functors.
struct DecompositionTriple {
    int m_triv = 0;  // copies of the constant functor
    int m_sign = 0;  // copies of the sign functor (underlying Q(-), fixed 0)
    int m_I = 0;     // copies of the augmentation ideal

    friend bool operator==(const DecompositionTriple&, const DecompositionTriple&) = default;
};

/// Canonical isomorphism invariant: m_triv = rank of beta = (tr res)/2 on
/// the fixed level, m_I = fixed_dim - m_triv, m_sign = dim of the
/// (-1)-eigenspace of tau.
inline DecompositionTriple decompose(const MackeyFunctor& m) {
    require_axioms(m, "decompose");
    Matrix beta = Rational(1, 2) * (m.tr * m.res);
    int m_triv = rank(beta);
    Matrix tau_plus_one = m.underlying.tau + Matrix::identity(m.underlying.dim);
    int m_sign = m.underlying.dim - rank(tau_plus_one);
    return {m_triv, m_sign, m.fixed_dim - m_triv};
}

inline bool isomorphic(const MackeyFunctor& a, const MackeyFunctor& b) {
    return decompose(a) == decompose(b);
}

}  // namespace mackeylab
