/**
 * Seeded generators of test data: unimodular matrices, homomorphisms,
 * chain complexes and chain maps. Output depends only on the seed.
 */

#ifndef CUBAB_RANDOM_HPP
#define CUBAB_RANDOM_HPP

#include <cstdint>
#include <random>

#include "cubab/chain.hpp"

namespace cubab {

/// mt19937_64 with distribution code of our own, so sequences are portable.
class Rng
{
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        /// Uniform in [lo, hi].
        long long uniform(long long lo, long long hi);
        bool coin() { return (engine_() >> 17) & 1; }

    private:
        std::mt19937_64 engine_;
};

/// Random unimodular n x n matrix; its inverse is written to *inverse when given.
IntMatrix random_unimodular(Index n, Rng& rng, IntMatrix* inverse = nullptr);

IntMatrix random_matrix(Index rows, Index cols, long long bound, Rng& rng);

/// Direct sum of cyclic groups with random orders in {0} and [2, torsion_bound].
FGAbGroup random_cyclic_group(Index rank_bound, long long torsion_bound, Rng& rng);

/// Same group with generators changed by a random unimodular matrix.
struct Scrambled
{
    FGAbGroup group;
    FGAbHom to_original;
    FGAbHom from_original;
};

Scrambled scramble(const FGAbGroup& g, Rng& rng);

/// A random well-defined homomorphism.
FGAbHom random_hom(const FGAbGroup& source, const FGAbGroup& target, Rng& rng);

/**
 * A valid chain complex with top degree top.
 *
 * Each A_n is X_n + Y_n for random cyclic groups X_n, Y_n; the boundary
 * d_n factors as Y_n -> B_n -> X_{n-1} through a random group B_n, so
 * d_{n-1} d_n vanishes because d_{n-1} only reads Y_{n-1}. Generators of
 * every A_n are then scrambled by a random unimodular change of basis.
 */
ChainComplex random_complex(Index top, Index rank_bound, long long torsion_bound, std::uint64_t seed);

/// k id + d h + h d for random k and random h_n : A_n -> A_{n+1}.
ChainMap random_chain_endomorphism(const ChainComplex& complex, std::uint64_t seed);

}   // namespace cubab

#endif
