/**
 * Finitely generated abelian groups presented as Z^g modulo the column
 * lattice of an integer relation matrix, their elements, and the
 * homomorphisms between them.
 */

#ifndef CUBAB_GROUP_HPP
#define CUBAB_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubab/integer.hpp"
#include "cubab/normal_form.hpp"

namespace cubab {

class FGAbGroup
{
    public:
        /// The trivial group.
        FGAbGroup();

        /// Z^generators modulo the columns of relations (generators x m).
        FGAbGroup(Index generators, IntMatrix relations);

        static FGAbGroup free(Index rank);

        /// Direct sum of cyclic groups Z/d; an order of 0 gives a copy of Z.
        static FGAbGroup cyclic(const std::vector<Integer>& orders);

        Index generators() const;
        const IntMatrix& relations() const;

        /// Decomposition of the relation matrix; computed once on first use.
        const SmithForm<Integer>& smith() const;
        const HermiteForm<Integer>& hermite() const;

        bool is_relation(const IntVector& coords) const;
        bool equal(const IntVector& a, const IntVector& b) const;

        /**
         * Unique representative of the class of coords.
         *
         * Coordinates are moved to the Smith basis, reduced componentwise
         * into [0, d) for each invariant factor d, and moved back.
         */
        IntVector canonicalize(const IntVector& coords) const;

        /// Invariant factors greater than one, in divisibility order.
        std::vector<Integer> torsion() const;
        Index free_rank() const;
        bool is_trivial() const;

        /// Same generator count and the same relation lattice.
        friend bool operator==(const FGAbGroup& a, const FGAbGroup& b);
        friend bool operator!=(const FGAbGroup& a, const FGAbGroup& b) { return !(a == b); }

        std::string describe() const;

    private:
        struct Data;
        std::shared_ptr<const Data> data_;
};

/// Isomorphism type comparison via invariant factors and free rank.
bool isomorphic(const FGAbGroup& a, const FGAbGroup& b);

FGAbGroup direct_sum(const std::vector<FGAbGroup>& summands);

struct FGAbElement
{
    FGAbGroup group;
    IntVector coords;

    FGAbElement(FGAbGroup g, IntVector c);

    static FGAbElement zero(const FGAbGroup& g);

    FGAbElement canonical() const { return {group, group.canonicalize(coords)}; }

    friend FGAbElement operator+(const FGAbElement& a, const FGAbElement& b);
    friend FGAbElement operator-(const FGAbElement& a, const FGAbElement& b);
    friend FGAbElement operator-(const FGAbElement& a);
    friend FGAbElement operator*(const Integer& k, const FGAbElement& a);

    /// Equality in the group, i.e. modulo relations.
    friend bool operator==(const FGAbElement& a, const FGAbElement& b);
    friend bool operator!=(const FGAbElement& a, const FGAbElement& b) { return !(a == b); }
};

FGAbElement canonicalize(const FGAbElement& e);

class FGAbHom
{
    public:
        /// matrix is target.generators() x source.generators().
        FGAbHom(FGAbGroup source, FGAbGroup target, IntMatrix matrix);

        static FGAbHom identity(const FGAbGroup& g);
        static FGAbHom zero(const FGAbGroup& source, const FGAbGroup& target);

        const FGAbGroup& source() const { return source_; }
        const FGAbGroup& target() const { return target_; }
        const IntMatrix& matrix() const { return matrix_; }

        /// Relations of the source are sent into the relation lattice of the target.
        bool well_defined() const;

        FGAbElement operator()(const FGAbElement& x) const;
        IntVector apply(const IntVector& coords) const;

        /// Composition: (f * g)(x) = f(g(x)).
        friend FGAbHom operator*(const FGAbHom& f, const FGAbHom& g);
        friend FGAbHom operator+(const FGAbHom& f, const FGAbHom& g);
        friend FGAbHom operator-(const FGAbHom& f, const FGAbHom& g);
        friend FGAbHom operator-(const FGAbHom& f);
        friend FGAbHom operator*(const Integer& k, const FGAbHom& f);

    private:
        FGAbGroup source_;
        FGAbGroup target_;
        IntMatrix matrix_;
};

/// Index of the first source generator on which f and g differ, if any.
std::optional<Index> first_difference(const FGAbHom& f, const FGAbHom& g);

/// Equality modulo the target relations; throws on source/target mismatch.
bool hom_equal(const FGAbHom& f, const FGAbHom& g);
bool is_zero(const FGAbHom& f);

/// The hom x -> (f_1 x, ..., f_k x) into the direct sum of the targets.
FGAbHom pairing(const std::vector<FGAbHom>& maps);
/// The hom (x_1, ..., x_k) -> sum f_i x_i out of the direct sum of the sources.
FGAbHom copairing(const std::vector<FGAbHom>& maps);
/// Block-diagonal f_1 + ... + f_k between direct sums.
FGAbHom direct_sum(const std::vector<FGAbHom>& maps);

FGAbHom injection(const std::vector<FGAbGroup>& summands, std::size_t k);
FGAbHom projection(const std::vector<FGAbGroup>& summands, std::size_t k);

struct Kernel
{
    FGAbGroup group;
    FGAbHom inclusion;
};

/**
 * Kernel of a well-defined hom as a presented group with an injective
 * inclusion into the source. The presentation is in Smith form (diagonal
 * relations, no unit invariant factors) except for the zero hom, whose
 * kernel is the source itself with the identity inclusion.
 */
Kernel kernel_of_hom(const FGAbHom& f);

/// Quotient of the target by the image of f, with the projection.
struct Cokernel
{
    FGAbGroup group;
    FGAbHom projection;
};

Cokernel cokernel_of_hom(const FGAbHom& f);

/// Some x with f(x) = b in the target group.
std::optional<IntVector> preimage(const FGAbHom& f, const IntVector& b);

/**
 * The unique h with injection * h == f, when f lands in the image of the
 * (injective) map. Returns nothing when some column of f does not lift.
 */
std::optional<FGAbHom> factor_through(const FGAbHom& injection, const FGAbHom& f);

bool is_injective(const FGAbHom& f);
bool is_surjective(const FGAbHom& f);
bool is_isomorphism(const FGAbHom& f);

/// Inverse of an isomorphism; throws std::domain_error otherwise.
FGAbHom inverse(const FGAbHom& f);

/**
 * An isomorphic presentation in Smith form, with mutually inverse maps
 * to and from the original presentation.
 */
struct SmithPresentation
{
    FGAbGroup group;
    FGAbHom to_original;
    FGAbHom from_original;
};

SmithPresentation smith_presentation(const FGAbGroup& g);

}   // namespace cubab

#endif
