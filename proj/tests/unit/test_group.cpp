#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "cubab/group.hpp"
#include "cubab/random.hpp"
#include "oracles.hpp"

using namespace cubab;

namespace {

IntVector vec(std::initializer_list<long long> values)
{
    IntVector v(static_cast<Index>(values.size()));
    Index k = 0;
    for (long long x : values)
        v(k++) = x;
    return v;
}

FGAbElement element(const FGAbGroup& g, std::initializer_list<long long> values)
{
    return {g, vec(values)};
}

// Every coordinate vector in [-bound, bound]^g.
void for_each_vector(Index g, long long bound, const std::function<void(const IntVector&)>& visit)
{
    IntVector v = IntVector::Constant(g, Integer(-bound));
    while (true)
    {
        visit(v);
        Index k = 0;
        while (k < g && v(k) == Integer(bound))
            v(k++) = -bound;
        if (k == g)
            return;
        v(k) += Integer(1);
    }
}

// Random group that is a scrambled presentation of a random cyclic decomposition.
FGAbGroup random_group(Rng& rng, Index rank_bound = 3)
{
    return scramble(random_cyclic_group(rank_bound, 6, rng), rng).group;
}

}   // namespace

TEST_CASE("canonicalize examples")
{
    const FGAbGroup z6(1, oracle::from_grid({{6}}));
    CHECK(canonicalize(element(z6, {7})).coords == vec({1}));
    CHECK(canonicalize(element(z6, {-1})).coords == vec({5}));

    const FGAbGroup z2(2, IntMatrix(2, 0));
    CHECK(canonicalize(element(z2, {3, -2})).coords == vec({3, -2}));

    const FGAbGroup z2_z(2, oracle::from_grid({{2}, {0}}));
    CHECK(canonicalize(element(z2_z, {5, 4})).coords == vec({1, 4}));
}

TEST_CASE("canonical forms decide equality")
{
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial)
    {
        const FGAbGroup g = random_group(rng);
        const Index n = g.generators();
        for (int k = 0; k < 10; ++k)
        {
            IntVector a(n), b(n);
            for (Index i = 0; i < n; ++i)
            {
                a(i) = rng.uniform(-20, 20);
                b(i) = rng.uniform(-20, 20);
            }
            // Force some equal pairs by adding a relation combination.
            if (k % 2 == 0 && g.relations().cols() > 0)
            {
                IntVector c(g.relations().cols());
                for (Index j = 0; j < c.size(); ++j)
                    c(j) = rng.uniform(-3, 3);
                b = a + multiply(g.relations(), c);
            }
            const IntVector ca = g.canonicalize(a);
            REQUIRE(g.canonicalize(ca) == ca);
            const bool same = g.canonicalize(a) == g.canonicalize(b);
            REQUIRE(same == solve_membership(g.relations(), IntVector(a - b)).has_value());
            REQUIRE(same == (FGAbElement(g, a) == FGAbElement(g, b)));
        }
    }
}

TEST_CASE("hom_equal examples")
{
    const FGAbGroup z2(1, oracle::from_grid({{2}}));
    const FGAbGroup z = FGAbGroup::free(1);
    CHECK(hom_equal(FGAbHom(z2, z2, oracle::from_grid({{1}})), FGAbHom(z2, z2, oracle::from_grid({{3}}))));
    CHECK_FALSE(hom_equal(FGAbHom(z, z2, oracle::from_grid({{2}})), FGAbHom(z, z2, oracle::from_grid({{1}}))));
    const FGAbHom f(z, z2, oracle::from_grid({{5}}));
    CHECK(hom_equal(f, f));
    CHECK_THROWS_AS(hom_equal(f, FGAbHom::identity(z)), std::invalid_argument);
}

TEST_CASE("well-definedness of homs")
{
    const FGAbGroup z4(1, oracle::from_grid({{4}}));
    const FGAbGroup z2(1, oracle::from_grid({{2}}));
    CHECK(FGAbHom(z4, z2, oracle::from_grid({{1}})).well_defined());
    CHECK_FALSE(FGAbHom(z2, z4, oracle::from_grid({{1}})).well_defined());
    CHECK(FGAbHom(z2, z4, oracle::from_grid({{2}})).well_defined());
    CHECK_FALSE(FGAbHom(z2, FGAbGroup::free(1), oracle::from_grid({{1}})).well_defined());
}

TEST_CASE("kernel of multiplication by 3 on Z is trivial")
{
    const FGAbGroup z = FGAbGroup::free(1);
    const Kernel k = kernel_of_hom(FGAbHom(z, z, oracle::from_grid({{3}})));
    CHECK(k.group.is_trivial());
}

TEST_CASE("kernel of doubling on Z/4 is Z/2 generated by 2")
{
    const FGAbGroup z4(1, oracle::from_grid({{4}}));
    const FGAbHom f(z4, z4, oracle::from_grid({{2}}));
    // Enumerate the four elements.
    std::vector<long long> killed;
    for (long long x = 0; x < 4; ++x)
    {
        if ((2 * x) % 4 == 0)
            killed.push_back(x);
    }
    REQUIRE(killed == std::vector<long long>{0, 2});

    const Kernel k = kernel_of_hom(f);
    CHECK(oracle::torsion_of(k.group) == std::vector<long long>{2});
    CHECK(k.group.free_rank() == 0);
    REQUIRE(k.group.generators() == 1);
    CHECK(z4.canonicalize(k.inclusion.apply(vec({1}))) == vec({2}));
}

TEST_CASE("kernel of the sum map Z^2 -> Z is generated by (1,-1)")
{
    const FGAbGroup z = FGAbGroup::free(1);
    const FGAbGroup z2 = FGAbGroup::free(2);
    const FGAbHom f(z2, z, oracle::from_grid({{1, 1}}));
    // Brute force: every small solution is a multiple of (1, -1).
    for (long long x = -5; x <= 5; ++x)
    {
        for (long long y = -5; y <= 5; ++y)
        {
            if (x + y == 0)
                REQUIRE(x == -y);
        }
    }
    const Kernel k = kernel_of_hom(f);
    CHECK(k.group.free_rank() == 1);
    CHECK(k.group.torsion().empty());
    REQUIRE(k.group.generators() == 1);
    const IntVector g = k.inclusion.apply(vec({1}));
    CHECK((g == vec({1, -1}) || g == vec({-1, 1})));
}

TEST_CASE("kernels satisfy their universal property")
{
    Rng rng(31);
    for (int trial = 0; trial < 80; ++trial)
    {
        const FGAbGroup a = random_group(rng, 2);
        const FGAbGroup b = random_group(rng, 2);
        const FGAbHom f = random_hom(a, b, rng);
        REQUIRE(f.well_defined());
        const Kernel k = kernel_of_hom(f);
        REQUIRE(k.inclusion.well_defined());
        REQUIRE(is_zero(f * k.inclusion));
        REQUIRE(is_injective(k.inclusion));
        for_each_vector(a.generators(), 2, [&](const IntVector& x) {
            if (b.is_relation(f.apply(x)))
                REQUIRE(preimage(k.inclusion, x).has_value());
        });
        // For finite sources, count the kernel by enumerating canonical representatives.
        const long long order = oracle::finite_order(a);
        if (order > 0 && order <= 400)
        {
            std::set<std::vector<long long>> seen, killed;
            for_each_vector(a.generators(), 6, [&](const IntVector& x) {
                const IntVector c = a.canonicalize(x);
                std::vector<long long> key(c.size());
                for (std::size_t i = 0; i < key.size(); ++i)
                    key[i] = c(i).to_int64();
                seen.insert(key);
                if (b.is_relation(f.apply(x)))
                    killed.insert(key);
            });
            if (static_cast<long long>(seen.size()) == order)
                REQUIRE(static_cast<long long>(killed.size()) == oracle::finite_order(k.group));
        }
    }
}

TEST_CASE("cokernels and factorization")
{
    const FGAbGroup z = FGAbGroup::free(1);
    const Cokernel c = cokernel_of_hom(FGAbHom(z, z, oracle::from_grid({{6}})));
    CHECK(oracle::torsion_of(c.group) == std::vector<long long>{6});

    const FGAbGroup z2 = FGAbGroup::free(2);
    const FGAbHom into(z, z2, oracle::from_grid({{1}, {2}}));
    const FGAbHom f(z, z2, oracle::from_grid({{3}, {6}}));
    auto h = factor_through(into, f);
    REQUIRE(h);
    CHECK(h->matrix() == oracle::from_grid({{3}}));
    CHECK_FALSE(factor_through(into, FGAbHom(z, z2, oracle::from_grid({{1}, {0}}))));
}

TEST_CASE("smith presentations are isomorphic to the original")
{
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial)
    {
        const FGAbGroup g = random_group(rng);
        const SmithPresentation s = smith_presentation(g);
        REQUIRE(s.to_original.well_defined());
        REQUIRE(s.from_original.well_defined());
        REQUIRE(hom_equal(s.to_original * s.from_original, FGAbHom::identity(g)));
        REQUIRE(hom_equal(s.from_original * s.to_original, FGAbHom::identity(s.group)));
        REQUIRE(isomorphic(g, s.group));
        REQUIRE(is_isomorphism(s.to_original));
        REQUIRE(hom_equal(inverse(s.to_original), s.from_original));
    }
}

TEST_CASE("isomorphism type ignores presentation")
{
    const FGAbGroup a = FGAbGroup::cyclic({2, 3});
    const FGAbGroup b = FGAbGroup::cyclic({6});
    CHECK(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, FGAbGroup::cyclic({2, 2})));
    CHECK(oracle::torsion_of(direct_sum(std::vector<FGAbGroup>{a, FGAbGroup::cyclic({4})})) ==
          std::vector<long long>{2, 12});
    CHECK_THROWS_AS(inverse(FGAbHom(FGAbGroup::free(1), FGAbGroup::free(1), oracle::from_grid({{2}}))), std::domain_error);
}

TEST_CASE("element arithmetic respects relations")
{
    const FGAbGroup z6 = FGAbGroup::cyclic({6});
    const FGAbElement x = element(z6, {4});
    CHECK(x + x == element(z6, {2}));
    CHECK(-x == element(z6, {2}));
    CHECK(Integer(3) * x == FGAbElement::zero(z6));
    CHECK_THROWS(x + element(FGAbGroup::free(1), {1}));
}
