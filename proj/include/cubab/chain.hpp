/**
 * Bounded chain complexes of finitely generated abelian groups.
 */

#ifndef CUBAB_CHAIN_HPP
#define CUBAB_CHAIN_HPP

#include <vector>

#include "cubab/group.hpp"
#include "cubab/report.hpp"

namespace cubab {

/**
 * Groups A_0..A_top with boundaries d_n : A_n -> A_{n-1} for 1 <= n <= top.
 *
 * Construction checks only shapes; use validate_chain for d d = 0 and
 * well-definedness. Groups above the top degree are treated as zero.
 */
class ChainComplex
{
    public:
        ChainComplex();
        explicit ChainComplex(FGAbGroup a0);

        /// boundaries[k] is d_{k+1} : groups[k+1] -> groups[k].
        ChainComplex(std::vector<FGAbGroup> groups, std::vector<FGAbHom> boundaries);

        Index top_degree() const { return static_cast<Index>(groups_.size()) - 1; }

        const FGAbGroup& group(Index n) const;
        FGAbGroup group_or_zero(Index n) const;

        /// d_n for 1 <= n <= top_degree().
        const FGAbHom& boundary(Index n) const;

        /// d_n for every n >= 0, zero outside 1..top_degree().
        FGAbHom boundary_or_zero(Index n) const;

        const std::vector<FGAbGroup>& groups() const { return groups_; }
        const std::vector<FGAbHom>& boundaries() const { return boundaries_; }

    private:
        std::vector<FGAbGroup> groups_;
        std::vector<FGAbHom> boundaries_;
};

Report validate_chain(const ChainComplex& complex);

/// Componentwise direct sum, padding the shorter complex with zeros.
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Components f_n : A_n -> B_n for 0 <= n <= source.top_degree().
struct ChainMap
{
    ChainComplex source;
    ChainComplex target;
    std::vector<FGAbHom> components;

    static ChainMap identity(const ChainComplex& complex);
};

Report validate_chain_map(const ChainMap& f);

/// (g * f)_n = g_n f_n.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Equal componentwise; records the first differing degree and generator.
Report compare_chain_maps(const ChainMap& f, const ChainMap& g, const std::string& law = "chain-map-equal");

/**
 * Ker d_n / Im d_{n+1} in Smith presentation.
 *
 * Throws ValidationError for an invalid complex and std::out_of_range for a
 * degree outside 0..top_degree().
 */
FGAbGroup homology(const ChainComplex& complex, Index n);

}   // namespace cubab

#endif
