/**
 * Truncated cubical abelian groups with connections, the identity table
 * they satisfy, and the compositions g o_i h = g - t_i g + h derived from
 * the structure maps.
 *
 * Operator keys:
 *   face:n:i:a   d^a_i   : K_n     -> K_{n-1}   1 <= i <= n
 *   deg:n:i      eps_i   : K_{n-1} -> K_n       1 <= i <= n
 *   conn:n:i     Gamma_i : K_n     -> K_{n+1}   1 <= i <= n, n < N
 */

#ifndef CUBAB_CUBICAL_HPP
#define CUBAB_CUBICAL_HPP

#include <map>
#include <string>
#include <vector>

#include "cubab/group.hpp"
#include "cubab/report.hpp"

namespace cubab {

std::string face_key(Index n, Index i, int alpha);
std::string degeneracy_key(Index n, Index i);
std::string connection_key(Index n, Index i);

/// Every operator key a bundle of top degree N must carry, in sorted order.
std::vector<std::string> required_keys(Index top);

class CubicalBundle
{
    public:
        /// Throws std::invalid_argument on a missing or unknown key or a shape mismatch.
        CubicalBundle(std::vector<FGAbGroup> groups, std::map<std::string, FGAbHom> ops);

        Index top_degree() const { return static_cast<Index>(groups_.size()) - 1; }
        const FGAbGroup& group(Index n) const;
        const std::vector<FGAbGroup>& groups() const { return groups_; }
        const std::map<std::string, FGAbHom>& ops() const { return ops_; }

        const FGAbHom& face(Index n, Index i, int alpha) const;
        const FGAbHom& degeneracy(Index n, Index i) const;
        const FGAbHom& connection(Index n, Index i) const;

    private:
        const FGAbHom& op(const std::string& key) const;

        std::vector<FGAbGroup> groups_;
        std::map<std::string, FGAbHom> ops_;
};

/// K_n = G for every n and every operator the identity.
CubicalBundle constant_bundle(const FGAbGroup& g, Index top);

/// One structure map in a composite; alpha is used by faces only.
struct Op
{
    enum class Kind { face, degeneracy, connection };

    Kind kind;
    Index i;
    int alpha = 0;

    /// Degree of the output when applied in degree n.
    Index target_degree(Index n) const { return kind == Kind::face ? n - 1 : n + 1; }
};

Op face_op(Index i, int alpha);
Op degeneracy_op(Index i);
Op connection_op(Index i);

/**
 * One instance of the identity table: lhs and rhs are composites written
 * left to right in the usual order, so the last entry is applied first.
 */
struct IdentityInstance
{
    std::string law;
    std::vector<long long> indices;
    Index source_degree;
    std::vector<Op> lhs;
    std::vector<Op> rhs;
};

/**
 * C1-C6 with the max connection, for every index choice whose composites
 * stay within degrees 0..top:
 *
 *   C1  d^a_i d^b_j = d^b_{j-1} d^a_i                      i < j
 *   C2  d^a_i eps_j = eps_{j-1} d^a_i (i < j),  d^a_i eps_i = id,
 *       d^a_i eps_j = eps_j d^a_{i-1} (i > j)
 *   C3  eps_i eps_j = eps_{j+1} eps_i                      i <= j
 *   C4  Gamma_i Gamma_j = Gamma_{j+1} Gamma_i              i <= j
 *   C5  Gamma_i eps_j = eps_{j+1} Gamma_i (i < j),  Gamma_i eps_i = eps_{i+1} eps_i,
 *       Gamma_i eps_j = eps_j Gamma_{i-1} (i > j)
 *   C6  d^a_i Gamma_j = Gamma_{j-1} d^a_i (i < j),
 *       d^0_j Gamma_j = d^0_{j+1} Gamma_j = id,
 *       d^1_j Gamma_j = d^1_{j+1} Gamma_j = eps_j d^1_j,
 *       d^a_i Gamma_j = Gamma_j d^a_{i-1} (i > j + 1)
 *
 * Indices are {n, i, j, a, b} restricted to the symbols that occur.
 */
std::vector<IdentityInstance> identity_table(Index top);

/// The composite as a hom out of K_n; throws std::out_of_range if it leaves 0..N.
FGAbHom evaluate(const CubicalBundle& k, const std::vector<Op>& ops, Index n);

/// Well-definedness of every operator, then every instance of identity_table.
Report validate_identities(const CubicalBundle& k);

struct SourceTarget
{
    FGAbHom s;   // eps_i d^0_i
    FGAbHom t;   // eps_i d^1_i
};

/// Requires 1 <= i <= n <= N; throws std::out_of_range otherwise.
SourceTarget source_target(const CubicalBundle& k, Index n, Index i);

/// g - t_i g + h; requires d^1_i g = d^0_i h.
FGAbElement compose_i(const CubicalBundle& k, Index n, Index i, const FGAbElement& g, const FGAbElement& h);

/// s_i g - g + t_i g.
FGAbElement inverse_i(const CubicalBundle& k, Index n, Index i, const FGAbElement& g);

/**
 * The subgroup of K_n^arity cut out by equations lhs(x) = rhs(x), each
 * side a hom out of the direct sum. coordinate(k) is the hom P -> K_n
 * reading the k-th entry of the tuple.
 */
class TupleSpace
{
    public:
        struct Constraint
        {
            FGAbHom lhs;
            FGAbHom rhs;
        };

        TupleSpace(const FGAbGroup& factor, std::size_t arity);

        /// Projection from the full direct sum onto the k-th factor.
        FGAbHom projection(std::size_t k) const;

        /// Restricts the space to the kernel of lhs - rhs. Call before reading coordinates.
        void impose(const std::vector<Constraint>& constraints);

        const FGAbGroup& group() const { return group_; }
        const FGAbHom& inclusion() const { return inclusion_; }
        FGAbHom coordinate(std::size_t k) const;

    private:
        std::vector<FGAbGroup> factors_;
        FGAbGroup group_;
        FGAbHom inclusion_;
};

/**
 * Associativity, left and right units, inverses, closure of sources and
 * targets under composition, and s s = s, t t = t, s t = t, t s = s, all
 * as exact hom equalities on the relevant tuple spaces.
 */
Report check_groupoid(const CubicalBundle& k, Index n, Index i);

/// (g o_i h) o_j (k o_i l) = (g o_j k) o_i (h o_j l) on composable quadruples; i != j.
Report check_interchange(const CubicalBundle& k, Index n, Index i, Index j);

/// Gamma_i(g o_i h) = (Gamma_i g o_{i+1} eps_i h) o_i Gamma_i h on composable pairs; n < N.
Report check_transport(const CubicalBundle& k, Index n, Index i);

/// validate_identities, then every groupoid, interchange and transport check.
Report check_all_laws(const CubicalBundle& k);

struct BundleMorphism
{
    CubicalBundle source;
    CubicalBundle target;
    std::vector<FGAbHom> components;
};

/// Commutation with every face, degeneracy and connection.
Report validate_bundle_morphism(const BundleMorphism& f);

/**
 * F(g o_i h) = F g o_i F h on composable pairs for every n and i. Throws
 * ValidationError if F does not commute with the structure maps.
 */
Report check_morphism_preserves(const BundleMorphism& f);

}   // namespace cubab

#endif
