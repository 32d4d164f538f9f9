#include "cubab/random.hpp"

#include <stdexcept>

namespace cubab {

long long Rng::uniform(long long lo, long long hi)
{
    if (hi < lo)
        throw std::invalid_argument("uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<long long>(engine_());
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do
    {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long long>(x % span);
}

IntMatrix random_unimodular(Index n, Rng& rng, IntMatrix* inverse)
{
    IntMatrix u = IntMatrix::Identity(n, n);
    IntMatrix v = IntMatrix::Identity(n, n);
    if (n < 2)
    {
        if (n == 1 && rng.coin())
        {
            u(0, 0) = -1;
            v(0, 0) = -1;
        }
        if (inverse)
            *inverse = v;
        return u;
    }
    const Index steps = 2 * n;
    for (Index s = 0; s < steps; ++s)
    {
        Index i = rng.uniform(0, n - 1);
        Index j = rng.uniform(0, n - 2);
        if (j >= i)
            ++j;
        Integer q = rng.uniform(-2, 2);
        if (q.is_zero())
        {
            u.row(i).swap(u.row(j));
            v.col(i).swap(v.col(j));
            continue;
        }
        // u <- E u with E = I + q e_i e_j^T; v <- v E^-1.
        detail::add_row_multiple(u, i, j, q);
        detail::add_col_multiple(v, j, i, Integer(-q));
    }
    if (inverse)
        *inverse = v;
    return u;
}

IntMatrix random_matrix(Index rows, Index cols, long long bound, Rng& rng)
{
    IntMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
    {
        for (Index i = 0; i < rows; ++i)
            m(i, j) = rng.uniform(-bound, bound);
    }
    return m;
}

FGAbGroup random_cyclic_group(Index rank_bound, long long torsion_bound, Rng& rng)
{
    const Index rank = rng.uniform(0, rank_bound);
    std::vector<Integer> orders;
    for (Index k = 0; k < rank; ++k)
    {
        if (torsion_bound >= 2 && rng.coin())
            orders.push_back(rng.uniform(2, torsion_bound));
        else
            orders.push_back(0);
    }
    return FGAbGroup::cyclic(orders);
}

Scrambled scramble(const FGAbGroup& g, Rng& rng)
{
    IntMatrix p_inverse;
    IntMatrix p = random_unimodular(g.generators(), rng, &p_inverse);
    FGAbGroup out(g.generators(), multiply(p, g.relations()));
    return {out, FGAbHom(out, g, p_inverse), FGAbHom(g, out, p)};
}

namespace {

// Order of each generator of a group whose relation columns are multiples
// of distinct unit vectors; zero for free generators.
std::vector<Integer> generator_orders(const FGAbGroup& g)
{
    std::vector<Integer> orders(g.generators(), Integer(0));
    const IntMatrix& rel = g.relations();
    for (Index j = 0; j < rel.cols(); ++j)
    {
        for (Index i = 0; i < rel.rows(); ++i)
        {
            if (!rel(i, j).is_zero())
                orders[i] = gcd(orders[i], rel(i, j));
        }
    }
    return orders;
}

}   // namespace

FGAbHom random_hom(const FGAbGroup& source, const FGAbGroup& target, Rng& rng)
{
    SmithPresentation s = smith_presentation(source);
    SmithPresentation t = smith_presentation(target);
    std::vector<Integer> d = generator_orders(s.group);
    std::vector<Integer> e = generator_orders(t.group);
    IntMatrix m = IntMatrix::Zero(t.group.generators(), s.group.generators());
    for (Index j = 0; j < m.cols(); ++j)
    {
        for (Index i = 0; i < m.rows(); ++i)
        {
            // Z/d -> Z/e needs a multiple of e / gcd(d, e); Z/d -> Z forces 0.
            Integer unit;
            if (e[i].is_zero())
                unit = d[j].is_zero() ? Integer(1) : Integer(0);
            else
                unit = e[i] / gcd(d[j], e[i]);
            m(i, j) = unit * Integer(rng.uniform(-3, 3));
        }
    }
    FGAbHom core(s.group, t.group, std::move(m));
    return t.to_original * core * s.from_original;
}

ChainComplex random_complex(Index top, Index rank_bound, long long torsion_bound, std::uint64_t seed)
{
    if (top < 0 || rank_bound < 0 || torsion_bound < 0)
        throw std::invalid_argument("random_complex: bounds must be nonnegative");
    Rng rng(seed);
    std::vector<FGAbGroup> xs;
    std::vector<FGAbGroup> ys;
    for (Index n = 0; n <= top; ++n)
    {
        xs.push_back(random_cyclic_group(rank_bound, torsion_bound, rng));
        ys.push_back(random_cyclic_group(rank_bound, torsion_bound, rng));
    }

    std::vector<FGAbGroup> plain;
    for (Index n = 0; n <= top; ++n)
        plain.push_back(direct_sum(std::vector<FGAbGroup>{xs[n], ys[n]}));

    std::vector<FGAbHom> plain_boundaries;
    for (Index n = 1; n <= top; ++n)
    {
        FGAbGroup middle = random_cyclic_group(rank_bound, torsion_bound, rng);
        FGAbHom q = random_hom(ys[n], middle, rng);
        FGAbHom j = random_hom(middle, xs[n - 1], rng);
        FGAbHom read_y = projection({xs[n], ys[n]}, 1);
        FGAbHom write_x = injection({xs[n - 1], ys[n - 1]}, 0);
        plain_boundaries.push_back(write_x * j * q * read_y);
    }

    std::vector<Scrambled> scrambled;
    std::vector<FGAbGroup> groups;
    for (Index n = 0; n <= top; ++n)
    {
        scrambled.push_back(scramble(plain[n], rng));
        groups.push_back(scrambled.back().group);
    }
    std::vector<FGAbHom> boundaries;
    for (Index n = 1; n <= top; ++n)
    {
        boundaries.push_back(scrambled[n - 1].from_original * plain_boundaries[n - 1] *
                             scrambled[n].to_original);
    }
    return ChainComplex(std::move(groups), std::move(boundaries));
}

ChainMap random_chain_endomorphism(const ChainComplex& complex, std::uint64_t seed)
{
    Rng rng(seed);
    const Index top = complex.top_degree();
    std::vector<FGAbHom> homotopy;
    for (Index n = 0; n <= top; ++n)
        homotopy.push_back(random_hom(complex.group(n), complex.group_or_zero(n + 1), rng));
    const Integer k = rng.uniform(-2, 2);

    ChainMap f{complex, complex, {}};
    for (Index n = 0; n <= top; ++n)
    {
        FGAbHom component = k * FGAbHom::identity(complex.group(n)) + complex.boundary_or_zero(n + 1) * homotopy[n];
        if (n > 0)
            component = component + homotopy[n - 1] * complex.boundary(n);
        f.components.push_back(component);
    }
    return f;
}

}   // namespace cubab
