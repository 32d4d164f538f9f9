// Independent reference computations and small builders shared by the tests.

#ifndef CUBAB_TEST_ORACLES_HPP
#define CUBAB_TEST_ORACLES_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cubab/chain.hpp"
#include "cubab/group.hpp"

namespace oracle {

using cubab::Index;
using cubab::IntMatrix;
using cubab::Integer;

using Grid = std::vector<std::vector<long long>>;

inline Grid to_grid(const IntMatrix& m)
{
    Grid g(m.rows(), std::vector<long long>(m.cols()));
    for (Index i = 0; i < m.rows(); ++i)
    {
        for (Index j = 0; j < m.cols(); ++j)
            g[i][j] = m(i, j).to_int64();
    }
    return g;
}

inline IntMatrix from_grid(const Grid& g, Index cols = -1)
{
    const Index rows = static_cast<Index>(g.size());
    if (cols < 0)
        cols = rows == 0 ? 0 : static_cast<Index>(g[0].size());
    IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
    {
        for (Index j = 0; j < cols; ++j)
            m(i, j) = g[i][j];
    }
    return m;
}

// Laplace expansion; only used on matrices up to 4 x 4.
inline __int128 det(const std::vector<std::vector<__int128>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    __int128 total = 0;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::vector<std::vector<__int128>> minor;
        for (std::size_t r = 1; r < n; ++r)
        {
            std::vector<__int128> row;
            for (std::size_t k = 0; k < n; ++k)
            {
                if (k != c)
                    row.push_back(a[r][k]);
            }
            minor.push_back(row);
        }
        const __int128 term = a[0][c] * det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

inline __int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0)
    {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k)
    {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i)
    {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors as ratios of successive gcds of k x k minors.
inline std::vector<long long> determinantal_factors(const Grid& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<long long> factors;
    __int128 previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k)
    {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        __int128 g = 0;
        for (const auto& r : rs)
        {
            for (const auto& c : cs)
            {
                std::vector<std::vector<__int128>> sub(k, std::vector<__int128>(k));
                for (std::size_t i = 0; i < k; ++i)
                {
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = m[r[i]][c[j]];
                }
                g = gcd128(g, det(sub));
            }
        }
        if (g == 0)
            break;
        factors.push_back(static_cast<long long>(g / previous));
        previous = g;
    }
    return factors;
}

/// Rank over the rationals by fraction-free elimination.
inline Index rational_rank(IntMatrix a)
{
    Index rank = 0;
    Integer previous(1);
    for (Index col = 0; col < a.cols() && rank < a.rows(); ++col)
    {
        Index pivot = -1;
        for (Index r = rank; r < a.rows(); ++r)
        {
            if (!a(r, col).is_zero())
            {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        a.row(pivot).swap(a.row(rank));
        for (Index r = rank + 1; r < a.rows(); ++r)
        {
            for (Index c = col + 1; c < a.cols(); ++c)
                a(r, c) = (a(rank, col) * a(r, c) - a(r, col) * a(rank, c)) / previous;
            a(r, col) = 0;
        }
        previous = a(rank, col);
        ++rank;
    }
    return rank;
}

/// Order of Z^g / L when finite, as |product of invariant factors|; zero when infinite.
inline long long finite_order(const cubab::FGAbGroup& g)
{
    if (g.free_rank() > 0)
        return 0;
    long long order = 1;
    for (const Integer& d : g.torsion())
        order *= d.to_int64();
    return order;
}

/// Free chain complex Z^{r_0} <- Z^{r_1} <- ... with the given boundary grids.
inline cubab::ChainComplex free_chain(const std::vector<Index>& ranks, const std::vector<Grid>& boundaries)
{
    std::vector<cubab::FGAbGroup> groups;
    for (Index r : ranks)
        groups.push_back(cubab::FGAbGroup::free(r));
    std::vector<cubab::FGAbHom> homs;
    for (std::size_t k = 0; k < boundaries.size(); ++k)
        homs.emplace_back(groups[k + 1], groups[k], from_grid(boundaries[k], ranks[k + 1]));
    return cubab::ChainComplex(groups, homs);
}

/// Z -(x2)-> Z -(0)-> Z in degrees 2, 1, 0.
inline cubab::ChainComplex rp2_like()
{
    return free_chain({1, 1, 1}, {{{0}}, {{2}}});
}

inline std::vector<long long> torsion_of(const cubab::FGAbGroup& g)
{
    std::vector<long long> out;
    for (const Integer& d : g.torsion())
        out.push_back(d.to_int64());
    return out;
}

}   // namespace oracle

#endif
