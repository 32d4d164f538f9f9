/**
 * Cellular chains of cubes, the nerve of a chain complex as a cubical
 * bundle, and the normalized chains of a bundle.
 *
 * A cell of the n-cube is a word of length n over {*, 0, 1}; its dimension
 * is the number of stars. Cells are listed in ASCII order ('*' < '0' < '1').
 */

#ifndef CUBAB_NERVE_HPP
#define CUBAB_NERVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubab/chain.hpp"
#include "cubab/cubical.hpp"

namespace cubab {

inline constexpr Index max_cube_dimension = 6;

Index cell_dimension(const std::string& cell);

/// Every cell of the n-cube in ASCII order.
std::vector<std::string> cube_cells(Index n);

struct CubeComplex
{
    Index n;
    ChainComplex complex;
    /// basis[k] lists the k-dimensional cells in ASCII order.
    std::vector<std::vector<std::string>> basis;
};

/**
 * Free chains on the cells of the n-cube with
 * d c = sum over stars k of (-1)^(stars before k) (c[k -> 1] - c[k -> 0]).
 * Requires 0 <= n <= max_cube_dimension.
 */
CubeComplex cube_complex(Index n);

/**
 * Image of a cell under the cellular map realizing op contravariantly;
 * nothing means the zero chain. A face inserts its symbol, a degeneracy
 * drops a slot (killing stars there) and a connection merges two slots
 * by max, where a star merged with 1 or with a star dies.
 */
std::optional<std::string> cell_image(const Op& op, const std::string& cell);

/// The chain map Q(m) -> Q(n) whose precomposition is op : K_n -> K_m.
ChainMap cellular_operator(const Op& op, Index n);

/// Cell-level composite whose precomposition is the bundle composite ops out of K_n.
ChainMap cellular_composite(const std::vector<Op>& ops, Index n);

/// Every cellular operator out of degrees 0..top is a chain map.
Report validate_cellular_operators(Index top);

/// Both sides of every instance of identity_table(top) agree as cell maps.
Report check_cellular_identities(Index top);

/// A extended by zero groups up to degree top.
ChainComplex pad(const ChainComplex& a, Index top);

/**
 * K_n = chain maps Q(n) -> A, presented as a kernel inside
 * D_n = sum over cells c of A_{dim c}.
 */
struct NerveBundle
{
    ChainComplex complex;   // A padded to degree N
    CubicalBundle bundle;
    std::vector<std::vector<std::string>> cells;   // cells[n] indexes the summands of D_n
    std::vector<FGAbGroup> ambient;                // D_n
    std::vector<FGAbHom> inclusions;               // K_n -> D_n
};

/// Requires a valid A and top_degree(A) <= N <= max_cube_dimension.
NerveBundle nerve(const ChainComplex& a, Index top);

/// Postcomposition with f, as a morphism between the two nerves.
BundleMorphism nerve(const ChainMap& f, const NerveBundle& source, const NerveBundle& target);

/// N_n = joint kernel of every face but d^1_1, with differential d^1_1.
struct NormalizedChains
{
    ChainComplex complex;
    std::vector<FGAbHom> inclusions;   // N_n -> K_n
};

/// Throws ValidationError unless the bundle satisfies its identities.
NormalizedChains normalized_chains(const CubicalBundle& k);
ChainComplex normalize(const CubicalBundle& k);
ChainMap normalize(const BundleMorphism& f);

/**
 * eta : A -> normalize(nerve(A, N)), sending a in degree n to the chain
 * map with value a on the top cell and d a on the cell 1*...*.
 */
struct RoundTrip
{
    ChainMap eta;
    ChainMap inverse;
    /// Empty when eta is an isomorphism of complexes and natural for the sampled maps.
    Report report;
};

RoundTrip roundtrip_nerve(const ChainComplex& a, Index top, int naturality_trials = 3, std::uint64_t seed = 1);

}   // namespace cubab

#endif
