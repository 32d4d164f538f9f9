#include "cubab/chain.hpp"

#include <stdexcept>
#include <string>

namespace cubab {

ChainComplex::ChainComplex() : ChainComplex(FGAbGroup()) {}

ChainComplex::ChainComplex(FGAbGroup a0) : groups_{std::move(a0)} {}

ChainComplex::ChainComplex(std::vector<FGAbGroup> groups, std::vector<FGAbHom> boundaries)
    : groups_(std::move(groups)), boundaries_(std::move(boundaries))
{
    if (groups_.empty())
        throw std::invalid_argument("chain complex: needs at least a degree-0 group");
    if (boundaries_.size() + 1 != groups_.size())
        throw std::invalid_argument("chain complex: expected one boundary per positive degree");
    for (std::size_t k = 0; k < boundaries_.size(); ++k)
    {
        if (boundaries_[k].source() != groups_[k + 1] || boundaries_[k].target() != groups_[k])
            throw std::invalid_argument("chain complex: boundary " + std::to_string(k + 1) +
                                        " has the wrong source or target");
    }
}

const FGAbGroup& ChainComplex::group(Index n) const
{
    if (n < 0 || n > top_degree())
        throw std::out_of_range("chain complex: degree " + std::to_string(n) + " out of range");
    return groups_[n];
}

FGAbGroup ChainComplex::group_or_zero(Index n) const
{
    if (n < 0 || n > top_degree())
        return FGAbGroup();
    return groups_[n];
}

const FGAbHom& ChainComplex::boundary(Index n) const
{
    if (n < 1 || n > top_degree())
        throw std::out_of_range("chain complex: no boundary in degree " + std::to_string(n));
    return boundaries_[n - 1];
}

FGAbHom ChainComplex::boundary_or_zero(Index n) const
{
    if (n >= 1 && n <= top_degree())
        return boundaries_[n - 1];
    return FGAbHom::zero(group_or_zero(n), group_or_zero(n - 1));
}

Report validate_chain(const ChainComplex& complex)
{
    Report report;
    for (Index n = 1; n <= complex.top_degree(); ++n)
    {
        const FGAbHom& d = complex.boundary(n);
        if (!d.well_defined())
            report.add("boundary-well-defined", {n}, "relations of degree " + std::to_string(n));
    }
    for (Index n = 2; n <= complex.top_degree(); ++n)
    {
        FGAbHom dd = complex.boundary(n - 1) * complex.boundary(n);
        report.expect_equal("boundary-squared", {n}, dd, FGAbHom::zero(dd.source(), dd.target()));
    }
    return report;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b)
{
    const Index top = std::max(a.top_degree(), b.top_degree());
    std::vector<FGAbGroup> groups;
    std::vector<FGAbHom> boundaries;
    for (Index n = 0; n <= top; ++n)
        groups.push_back(direct_sum(std::vector<FGAbGroup>{a.group_or_zero(n), b.group_or_zero(n)}));
    for (Index n = 1; n <= top; ++n)
        boundaries.push_back(direct_sum(std::vector<FGAbHom>{a.boundary_or_zero(n), b.boundary_or_zero(n)}));
    return ChainComplex(std::move(groups), std::move(boundaries));
}

ChainMap ChainMap::identity(const ChainComplex& complex)
{
    ChainMap f{complex, complex, {}};
    for (const FGAbGroup& g : complex.groups())
        f.components.push_back(FGAbHom::identity(g));
    return f;
}

Report validate_chain_map(const ChainMap& f)
{
    Report report;
    const ChainComplex& a = f.source;
    const ChainComplex& b = f.target;
    if (static_cast<Index>(f.components.size()) != a.top_degree() + 1)
    {
        report.add("chain-map-shape", {}, "expected one component per source degree");
        return report;
    }
    for (Index n = 0; n <= a.top_degree(); ++n)
    {
        const FGAbHom& fn = f.components[n];
        if (fn.source() != a.group(n) || fn.target() != b.group_or_zero(n))
        {
            report.add("chain-map-shape", {n}, "component has the wrong source or target");
            return report;
        }
        if (!fn.well_defined())
            report.add("chain-map-well-defined", {n}, "relations of degree " + std::to_string(n));
    }
    for (Index n = 1; n <= a.top_degree(); ++n)
    {
        report.expect_equal("chain-map", {n}, b.boundary_or_zero(n) * f.components[n],
                            f.components[n - 1] * a.boundary(n));
    }
    return report;
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    ChainMap out{f.source, g.target, {}};
    for (std::size_t n = 0; n < f.components.size(); ++n)
    {
        // Above the top degree of g's source, f already lands in zero.
        if (n < g.components.size())
            out.components.push_back(g.components[n] * f.components[n]);
        else
            out.components.push_back(FGAbHom::zero(f.source.group(n), g.target.group_or_zero(n)));
    }
    return out;
}

Report compare_chain_maps(const ChainMap& f, const ChainMap& g, const std::string& law)
{
    Report report;
    if (f.components.size() != g.components.size())
    {
        report.add(law, {}, "different number of components");
        return report;
    }
    for (std::size_t n = 0; n < f.components.size(); ++n)
        report.expect_equal(law, {static_cast<long long>(n)}, f.components[n], g.components[n]);
    return report;
}

FGAbGroup homology(const ChainComplex& complex, Index n)
{
    if (n < 0 || n > complex.top_degree())
        throw std::out_of_range("homology: degree " + std::to_string(n) + " out of range");
    Report report = validate_chain(complex);
    if (!report.ok())
        throw ValidationError("homology: invalid chain complex", report);

    Kernel cycles = kernel_of_hom(complex.boundary_or_zero(n));
    FGAbHom incoming = complex.boundary_or_zero(n + 1);
    auto boundaries = factor_through(cycles.inclusion, incoming);
    if (!boundaries)
        throw std::logic_error("homology: boundaries are not cycles");
    return cokernel_of_hom(*boundaries).group;
}

}   // namespace cubab
