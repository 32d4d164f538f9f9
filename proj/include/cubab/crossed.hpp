/**
 * Crossed complexes internal to abelian groups and their equivalence with
 * chain complexes.
 *
 * A crossed complex here has a base group C_0; a groupoid object C_1 with
 * source d0, target d1 and identities eps; and for n >= 2 bundles C_n over
 * C_0 with base p_n, section eps_n and boundary delta_n. It is valid when
 *
 *   X1  d0 eps = d1 eps = id
 *   X2  p_n eps_n = id                                   (n >= 2)
 *   X3  d0 delta_2 = d1 delta_2 = p_2
 *   X4  p_{n-1} delta_n = p_n (n >= 3),  delta_n eps_n = eps_{n-1} (n >= 2)
 *   X5  delta_{n-1} delta_n = eps_{n-2} p_n              (n >= 3)
 *
 * with eps_1 = eps. The action of C_1 on C_n is determined by these maps
 * and is not stored.
 */

#ifndef CUBAB_CROSSED_HPP
#define CUBAB_CROSSED_HPP

#include <vector>

#include "cubab/chain.hpp"
#include "cubab/group.hpp"
#include "cubab/report.hpp"

namespace cubab {

class InternalCrossedComplex
{
    public:
        struct GroupoidLevel
        {
            FGAbGroup group;
            FGAbHom source;   // d0 : C_1 -> C_0
            FGAbHom target;   // d1 : C_1 -> C_0
            FGAbHom unit;     // eps : C_0 -> C_1
        };

        struct BundleLevel
        {
            FGAbGroup group;
            FGAbHom base;       // p_n : C_n -> C_0
            FGAbHom section;    // eps_n : C_0 -> C_n
            FGAbHom boundary;   // delta_n : C_n -> C_{n-1}
        };

        /// Top degree 0: just C_0.
        explicit InternalCrossedComplex(FGAbGroup c0);

        /// upper[k] is degree k + 2. Checks shapes only.
        InternalCrossedComplex(FGAbGroup c0, GroupoidLevel level1, std::vector<BundleLevel> upper);

        Index top_degree() const;

        const FGAbGroup& group(Index n) const;

        const FGAbHom& d0() const;
        const FGAbHom& d1() const;
        const FGAbHom& eps() const;

        /// d0 in degree 1, p_n above.
        const FGAbHom& base(Index n) const;
        /// eps in degree 1, eps_n above.
        const FGAbHom& section(Index n) const;
        /// delta_n for n >= 2.
        const FGAbHom& boundary(Index n) const;

    private:
        FGAbGroup c0_;
        std::vector<GroupoidLevel> level1_;   // empty or one entry
        std::vector<BundleLevel> upper_;
};

/// Empty iff X1-X5 hold and every structure map is well defined.
Report validate_crossed(const InternalCrossedComplex& c);

/// Components F_n : C_n -> C'_n for 0 <= n <= top.
struct CrossedMorphism
{
    InternalCrossedComplex source;
    InternalCrossedComplex target;
    std::vector<FGAbHom> components;
};

/// Commutation with every structure map.
Report validate_crossed_morphism(const CrossedMorphism& f);

/**
 * (beta A)_0 = A_0 and (beta A)_n = A_0 + A_n, with d0 = pr1,
 * d1 = pr1 + d pr2, p_n = pr1, eps_n = (id, 0) and delta_n = id + d.
 */
InternalCrossedComplex beta(const ChainComplex& a);
CrossedMorphism beta(const ChainMap& f);

/// alpha C together with the kernel inclusions (alpha C)_n -> C_n.
struct AssociatedChains
{
    ChainComplex complex;
    std::vector<FGAbHom> inclusions;
};

/**
 * (alpha C)_0 = C_0, (alpha C)_1 = Ker d0, (alpha C)_n = Ker p_n, with
 * boundaries the restrictions of d1 and delta_n.
 */
AssociatedChains associated_chains(const InternalCrossedComplex& c);
ChainComplex alpha(const InternalCrossedComplex& c);
ChainMap alpha(const CrossedMorphism& f);

/// c o c' = c + c' - eps(d1 c); requires d1 c = d0 c'.
FGAbElement compose1(const InternalCrossedComplex& c, const FGAbElement& first, const FGAbElement& second);

/// eps(d0 c) - c + eps(d1 c).
FGAbElement inverse1(const InternalCrossedComplex& c, const FGAbElement& x);

/// m^c = m - eps_n(d0 c) + eps_n(d1 c) for m in C_n, n >= 2; requires p_n m = d0 c.
FGAbElement act(const InternalCrossedComplex& c, Index n, const FGAbElement& m, const FGAbElement& x);

struct ChainIso
{
    ChainMap forward;
    ChainMap backward;
};

struct CrossedIso
{
    CrossedMorphism forward;
    CrossedMorphism backward;
};

/// A -> alpha beta A, a -> (0, a); the backward map is pr2 restricted.
ChainIso unit_iso(const ChainComplex& a);

/// beta alpha C -> C, (x, b) -> eps_n x + b; backward c -> (base c, c - eps_n base c).
CrossedIso counit_iso(const InternalCrossedComplex& c);

CrossedMorphism compose(const CrossedMorphism& g, const CrossedMorphism& f);
CrossedMorphism identity_morphism(const InternalCrossedComplex& c);
Report compare_crossed_morphisms(const CrossedMorphism& f, const CrossedMorphism& g, const std::string& law);

}   // namespace cubab

#endif
