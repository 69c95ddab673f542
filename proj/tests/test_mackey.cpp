#include "mackeylab/mackey.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace mackeylab;

namespace {

std::vector<MackeyFunctor> standard_functors() {
    return {std_constant(), std_burnside(), std_augmentation_ideal(), std_permutation()};
}

}  // namespace

TEST_CASE("axioms hold for every standard functor") {
    for (const auto& m : standard_functors()) CHECK(all_passed(check_axioms(m)));
}

TEST_CASE("constant functor: transfer is multiplication by 2") {
    MackeyFunctor z = std_constant();
    CHECK(z.res * z.tr == Matrix::from_rows({{2}}));  // res tr = 1 + tau = 2
}

TEST_CASE("burnside functor: res(T) = 2, tr(1) = T") {
    MackeyFunctor a = std_burnside();
    // Fixed basis is (1, T); res(a + bT) = a + 2b.
    CHECK(a.res == Matrix::from_rows({{1, 2}}));
    CHECK(a.tr == Matrix::from_rows({{0}, {1}}));
}

TEST_CASE("augmentation ideal vanishes on the underlying level") {
    CHECK(std_augmentation_ideal().underlying.dim == 0);
    CHECK(std_augmentation_ideal().fixed_dim == 1);
}

TEST_CASE("permutation functor: res tr = 1 + tau concretely") {
    MackeyFunctor p = std_permutation();
    CHECK(p.res * p.tr == Matrix::identity(2) + p.underlying.tau);
}

TEST_CASE("corrupted transfer breaks the double coset axiom") {
    MackeyFunctor z = std_constant();
    z.tr = Matrix::from_rows({{3}});
    auto report = check_axioms(z);
    CHECK_FALSE(all_passed(report));
    // Only res tr = 1 + tau fails.
    for (const auto& c : report)
        CHECK(c.passed == (c.axiom != "res tr = 1 + tau"));
}

TEST_CASE("identity tau on the permutation functor still satisfies tau^2 = 1") {
    MackeyFunctor p = std_permutation();
    p.underlying.tau = Matrix::identity(2);
    CHECK(check_axioms(p)[0].passed);          // tau^2 = 1 still holds
    CHECK_FALSE(all_passed(check_axioms(p)));  // res tr = 1 + tau does not
}

TEST_CASE("decomposition triples of the standard functors") {
    // beta by hand: on Z, beta = (2)/2 = 1, rank 1; on I, beta = 0;
    // on A, beta(1) = T/2, beta(T) = T, rank 1; on Z[C2], tau has
    // eigenvalues +1 and -1 and beta has rank 1.
    CHECK(decompose(std_constant()) == DecompositionTriple{1, 0, 0});
    CHECK(decompose(std_burnside()) == DecompositionTriple{1, 0, 1});
    CHECK(decompose(std_augmentation_ideal()) == DecompositionTriple{0, 0, 1});
    CHECK(decompose(std_permutation()) == DecompositionTriple{1, 1, 0});
}

TEST_CASE("decompose is additive over direct sums") {
    std::mt19937 rng(3);
    auto fns = standard_functors();
    for (int trial = 0; trial < 30; ++trial) {
        const MackeyFunctor& a = fns[rng() % fns.size()];
        const MackeyFunctor& b = fns[rng() % fns.size()];
        DecompositionTriple ta = decompose(a), tb = decompose(b);
        DecompositionTriple tsum = decompose(direct_sum(a, b));
        CHECK(tsum.m_triv == ta.m_triv + tb.m_triv);
        CHECK(tsum.m_sign == ta.m_sign + tb.m_sign);
        CHECK(tsum.m_I == ta.m_I + tb.m_I);
    }
}

TEST_CASE("dim of the +1 eigenspace of tau equals m_triv on sums of standard functors") {
    std::mt19937 rng(11);
    auto fns = standard_functors();
    for (int trial = 0; trial < 30; ++trial) {
        MackeyFunctor m = fns[rng() % fns.size()];
        for (int k = 0; k < 2; ++k) m = direct_sum(m, fns[rng() % fns.size()]);
        DecompositionTriple t = decompose(m);
        Matrix one_minus_tau = Matrix::identity(m.underlying.dim) - m.underlying.tau;
        int plus_dim = m.underlying.dim - rank(one_minus_tau);
        CHECK(plus_dim == t.m_triv);
    }
}

TEST_CASE("tensor with a free orbit: A (x) C2+ ~ Z (x) C2+ ~ Z[C2]") {
    MackeyFunctor a_free = tensor_c2set(std_burnside(), C2Set::free_orbit());
    MackeyFunctor z_free = tensor_c2set(std_constant(), C2Set::free_orbit());
    CHECK(all_passed(check_axioms(a_free)));
    CHECK(all_passed(check_axioms(z_free)));
    CHECK(isomorphic(a_free, z_free));
    CHECK(isomorphic(z_free, std_permutation()));
    CHECK(z_free.fixed_dim == 1);
}

TEST_CASE("tensor with a single trivial point is the identity") {
    for (const auto& m : standard_functors())
        CHECK(isomorphic(tensor_c2set(m, C2Set::point()), m));
}

TEST_CASE("kernel of the augmentation projection A -> Z is I") {
    MackeyMorphism projection{std_burnside(), std_constant(), Matrix::from_rows({{1}}),
                              Matrix::from_rows({{1, 2}})};
    REQUIRE(is_morphism(projection));
    CHECK(isomorphic(kernel(projection).functor, std_augmentation_ideal()));
    CHECK(isomorphic(cokernel(projection).functor, MackeyFunctor::zero()));
}

TEST_CASE("kernel of zero and cokernel of identity") {
    for (const auto& m : standard_functors()) {
        MackeyMorphism zero{m, m, Matrix::zero(m.underlying.dim, m.underlying.dim),
                            Matrix::zero(m.fixed_dim, m.fixed_dim)};
        CHECK(isomorphic(kernel(zero).functor, m));
        MackeyMorphism id{m, m, Matrix::identity(m.underlying.dim), Matrix::identity(m.fixed_dim)};
        CHECK(isomorphic(cokernel(id).functor, MackeyFunctor::zero()));
    }
}

TEST_CASE("check_axioms rejects inconsistent shapes") {
    MackeyFunctor bad = std_constant();
    bad.res = Matrix::zero(2, 1);
    CHECK_THROWS_AS(check_axioms(bad), ShapeMismatch);
}
