#include "cubab/crossed.hpp"

#include <stdexcept>
#include <string>

namespace cubab {

namespace {

void require_shape(const FGAbHom& f, const FGAbGroup& source, const FGAbGroup& target, const std::string& what)
{
    if (f.source() != source || f.target() != target)
        throw std::invalid_argument("crossed complex: " + what + " has the wrong source or target");
}

}   // namespace

InternalCrossedComplex::InternalCrossedComplex(FGAbGroup c0) : c0_(std::move(c0)) {}

InternalCrossedComplex::InternalCrossedComplex(FGAbGroup c0, GroupoidLevel level1, std::vector<BundleLevel> upper)
    : c0_(std::move(c0)), level1_{std::move(level1)}, upper_(std::move(upper))
{
    const GroupoidLevel& l1 = level1_.front();
    require_shape(l1.source, l1.group, c0_, "d0");
    require_shape(l1.target, l1.group, c0_, "d1");
    require_shape(l1.unit, c0_, l1.group, "eps");
    for (std::size_t k = 0; k < upper_.size(); ++k)
    {
        const Index n = static_cast<Index>(k) + 2;
        const BundleLevel& level = upper_[k];
        const std::string tag = " in degree " + std::to_string(n);
        require_shape(level.base, level.group, c0_, "base" + tag);
        require_shape(level.section, c0_, level.group, "section" + tag);
        require_shape(level.boundary, level.group, group(n - 1), "boundary" + tag);
    }
}

Index InternalCrossedComplex::top_degree() const
{
    return level1_.empty() ? 0 : static_cast<Index>(upper_.size()) + 1;
}

const FGAbGroup& InternalCrossedComplex::group(Index n) const
{
    if (n < 0 || n > top_degree())
        throw std::out_of_range("crossed complex: degree " + std::to_string(n) + " out of range");
    if (n == 0)
        return c0_;
    if (n == 1)
        return level1_.front().group;
    return upper_[n - 2].group;
}

const FGAbHom& InternalCrossedComplex::d0() const
{
    if (level1_.empty())
        throw std::out_of_range("crossed complex: no degree-1 level");
    return level1_.front().source;
}

const FGAbHom& InternalCrossedComplex::d1() const
{
    if (level1_.empty())
        throw std::out_of_range("crossed complex: no degree-1 level");
    return level1_.front().target;
}

const FGAbHom& InternalCrossedComplex::eps() const
{
    if (level1_.empty())
        throw std::out_of_range("crossed complex: no degree-1 level");
    return level1_.front().unit;
}

const FGAbHom& InternalCrossedComplex::base(Index n) const
{
    if (n == 1)
        return d0();
    if (n < 1 || n > top_degree())
        throw std::out_of_range("crossed complex: no base map in degree " + std::to_string(n));
    return upper_[n - 2].base;
}

const FGAbHom& InternalCrossedComplex::section(Index n) const
{
    if (n == 1)
        return eps();
    if (n < 1 || n > top_degree())
        throw std::out_of_range("crossed complex: no section in degree " + std::to_string(n));
    return upper_[n - 2].section;
}

const FGAbHom& InternalCrossedComplex::boundary(Index n) const
{
    if (n < 2 || n > top_degree())
        throw std::out_of_range("crossed complex: no boundary in degree " + std::to_string(n));
    return upper_[n - 2].boundary;
}

Report validate_crossed(const InternalCrossedComplex& c)
{
    Report report;
    const Index top = c.top_degree();
    if (top == 0)
        return report;

    auto defined = [&](const FGAbHom& f, const std::string& name, Index n) {
        if (!f.well_defined())
        {
            report.add("well-defined", {n}, name);
            return false;
        }
        return true;
    };
    bool maps_ok = defined(c.d0(), "d0", 1) & defined(c.d1(), "d1", 1) & defined(c.eps(), "eps", 1);
    for (Index n = 2; n <= top; ++n)
    {
        maps_ok &= defined(c.base(n), "base", n);
        maps_ok &= defined(c.section(n), "section", n);
        maps_ok &= defined(c.boundary(n), "boundary", n);
    }
    if (!maps_ok)
        return report;

    const FGAbHom id0 = FGAbHom::identity(c.group(0));
    report.expect_equal("X1", {0}, c.d0() * c.eps(), id0);
    report.expect_equal("X1", {1}, c.d1() * c.eps(), id0);
    for (Index n = 2; n <= top; ++n)
        report.expect_equal("X2", {n}, c.base(n) * c.section(n), id0);
    if (top >= 2)
    {
        report.expect_equal("X3", {0}, c.d0() * c.boundary(2), c.base(2));
        report.expect_equal("X3", {1}, c.d1() * c.boundary(2), c.base(2));
    }
    for (Index n = 2; n <= top; ++n)
    {
        if (n >= 3)
            report.expect_equal("X4", {n, 0}, c.base(n - 1) * c.boundary(n), c.base(n));
        report.expect_equal("X4", {n, 1}, c.boundary(n) * c.section(n), c.section(n - 1));
    }
    for (Index n = 3; n <= top; ++n)
        report.expect_equal("X5", {n}, c.boundary(n - 1) * c.boundary(n), c.section(n - 2) * c.base(n));
    return report;
}

Report validate_crossed_morphism(const CrossedMorphism& f)
{
    Report report;
    const InternalCrossedComplex& a = f.source;
    const InternalCrossedComplex& b = f.target;
    const Index top = a.top_degree();
    if (b.top_degree() != top || static_cast<Index>(f.components.size()) != top + 1)
    {
        report.add("crossed-morphism-shape", {}, "degree mismatch");
        return report;
    }
    for (Index n = 0; n <= top; ++n)
    {
        const FGAbHom& fn = f.components[n];
        if (fn.source() != a.group(n) || fn.target() != b.group(n))
        {
            report.add("crossed-morphism-shape", {n}, "component has the wrong source or target");
            return report;
        }
        if (!fn.well_defined())
            report.add("well-defined", {n}, "component");
    }
    const FGAbHom& f0 = f.components[0];
    if (top >= 1)
    {
        report.expect_equal("morphism-d0", {1}, b.d0() * f.components[1], f0 * a.d0());
        report.expect_equal("morphism-d1", {1}, b.d1() * f.components[1], f0 * a.d1());
        report.expect_equal("morphism-eps", {1}, b.eps() * f0, f.components[1] * a.eps());
    }
    for (Index n = 2; n <= top; ++n)
    {
        const FGAbHom& fn = f.components[n];
        report.expect_equal("morphism-base", {n}, b.base(n) * fn, f0 * a.base(n));
        report.expect_equal("morphism-section", {n}, b.section(n) * f0, fn * a.section(n));
        report.expect_equal("morphism-boundary", {n}, b.boundary(n) * fn, f.components[n - 1] * a.boundary(n));
    }
    return report;
}

InternalCrossedComplex beta(const ChainComplex& a)
{
    Report report = validate_chain(a);
    if (!report.ok())
        throw ValidationError("beta: invalid chain complex", report);

    const FGAbGroup& a0 = a.group(0);
    if (a.top_degree() == 0)
        return InternalCrossedComplex(a0);

    auto level_group = [&](Index n) { return std::vector<FGAbGroup>{a0, a.group(n)}; };

    const std::vector<FGAbGroup> s1 = level_group(1);
    const FGAbHom pr1 = projection(s1, 0);
    InternalCrossedComplex::GroupoidLevel level1{direct_sum(s1), pr1, pr1 + a.boundary(1) * projection(s1, 1),
                                                 injection(s1, 0)};
    std::vector<InternalCrossedComplex::BundleLevel> upper;
    for (Index n = 2; n <= a.top_degree(); ++n)
    {
        const std::vector<FGAbGroup> sn = level_group(n);
        upper.push_back({direct_sum(sn), projection(sn, 0), injection(sn, 0),
                         direct_sum(std::vector<FGAbHom>{FGAbHom::identity(a0), a.boundary(n)})});
    }
    return InternalCrossedComplex(a0, std::move(level1), std::move(upper));
}

CrossedMorphism beta(const ChainMap& f)
{
    CrossedMorphism out{beta(f.source), beta(f.target), {}};
    const FGAbHom& f0 = f.components.at(0);
    out.components.push_back(f0);
    for (std::size_t n = 1; n < f.components.size(); ++n)
        out.components.push_back(direct_sum(std::vector<FGAbHom>{f0, f.components[n]}));
    return out;
}

AssociatedChains associated_chains(const InternalCrossedComplex& c)
{
    Report report = validate_crossed(c);
    if (!report.ok())
        throw ValidationError("alpha: invalid crossed complex", report);

    std::vector<FGAbGroup> groups{c.group(0)};
    std::vector<FGAbHom> inclusions{FGAbHom::identity(c.group(0))};
    for (Index n = 1; n <= c.top_degree(); ++n)
    {
        Kernel k = kernel_of_hom(c.base(n));
        groups.push_back(k.group);
        inclusions.push_back(k.inclusion);
    }

    std::vector<FGAbHom> boundaries;
    if (c.top_degree() >= 1)
        boundaries.push_back(c.d1() * inclusions[1]);
    for (Index n = 2; n <= c.top_degree(); ++n)
    {
        auto restricted = factor_through(inclusions[n - 1], c.boundary(n) * inclusions[n]);
        if (!restricted)
            throw std::logic_error("alpha: boundary does not preserve the kernel of the base map");
        boundaries.push_back(*restricted);
    }
    return {ChainComplex(std::move(groups), std::move(boundaries)), std::move(inclusions)};
}

ChainComplex alpha(const InternalCrossedComplex& c)
{
    return associated_chains(c).complex;
}

ChainMap alpha(const CrossedMorphism& f)
{
    AssociatedChains source = associated_chains(f.source);
    AssociatedChains target = associated_chains(f.target);
    ChainMap out{source.complex, target.complex, {}};
    for (std::size_t n = 0; n < f.components.size(); ++n)
    {
        auto restricted = factor_through(target.inclusions[n], f.components[n] * source.inclusions[n]);
        if (!restricted)
            throw std::invalid_argument("alpha: morphism does not preserve base-point kernels");
        out.components.push_back(*restricted);
    }
    return out;
}

FGAbElement compose1(const InternalCrossedComplex& c, const FGAbElement& first, const FGAbElement& second)
{
    if (c.top_degree() < 1 || first.group != c.group(1) || second.group != c.group(1))
        throw std::invalid_argument("compose1: arguments must lie in C_1");
    const FGAbElement joint = c.d1()(first);
    if (joint != c.d0()(second))
        throw std::invalid_argument("compose1: target of the first does not match source of the second");
    return first + second - c.eps()(joint);
}

FGAbElement inverse1(const InternalCrossedComplex& c, const FGAbElement& x)
{
    if (c.top_degree() < 1 || x.group != c.group(1))
        throw std::invalid_argument("inverse1: argument must lie in C_1");
    return c.eps()(c.d0()(x)) - x + c.eps()(c.d1()(x));
}

FGAbElement act(const InternalCrossedComplex& c, Index n, const FGAbElement& m, const FGAbElement& x)
{
    if (n < 2 || n > c.top_degree())
        throw std::invalid_argument("act: degree must be between 2 and the top degree");
    if (m.group != c.group(n) || x.group != c.group(1))
        throw std::invalid_argument("act: arguments must lie in C_n and C_1");
    if (c.base(n)(m) != c.d0()(x))
        throw std::invalid_argument("act: base point of m differs from the source of c");
    return m - c.section(n)(c.d0()(x)) + c.section(n)(c.d1()(x));
}

ChainIso unit_iso(const ChainComplex& a)
{
    InternalCrossedComplex b = beta(a);
    AssociatedChains ab = associated_chains(b);
    ChainIso iso{{a, ab.complex, {}}, {ab.complex, a, {}}};
    iso.forward.components.push_back(FGAbHom::identity(a.group(0)));
    iso.backward.components.push_back(FGAbHom::identity(a.group(0)));
    for (Index n = 1; n <= a.top_degree(); ++n)
    {
        const std::vector<FGAbGroup> summands{a.group(0), a.group(n)};
        auto forward = factor_through(ab.inclusions[n], injection(summands, 1));
        if (!forward)
            throw std::logic_error("unit_iso: (0, a) is not in the kernel of pr1");
        iso.forward.components.push_back(*forward);
        iso.backward.components.push_back(projection(summands, 1) * ab.inclusions[n]);
    }
    return iso;
}

CrossedIso counit_iso(const InternalCrossedComplex& c)
{
    AssociatedChains ac = associated_chains(c);
    InternalCrossedComplex b = beta(ac.complex);
    CrossedIso iso{{b, c, {}}, {c, b, {}}};
    iso.forward.components.push_back(FGAbHom::identity(c.group(0)));
    iso.backward.components.push_back(FGAbHom::identity(c.group(0)));
    for (Index n = 1; n <= c.top_degree(); ++n)
    {
        const FGAbHom& base = c.base(n);
        const FGAbHom& section = c.section(n);
        iso.forward.components.push_back(copairing({section, ac.inclusions[n]}));
        auto fibre = factor_through(ac.inclusions[n], FGAbHom::identity(c.group(n)) - section * base);
        if (!fibre)
            throw std::logic_error("counit_iso: c - eps(base c) is not in the kernel of the base map");
        iso.backward.components.push_back(pairing({base, *fibre}));
    }
    return iso;
}

CrossedMorphism compose(const CrossedMorphism& g, const CrossedMorphism& f)
{
    if (g.components.size() != f.components.size())
        throw std::invalid_argument("compose: crossed morphisms have different lengths");
    CrossedMorphism out{f.source, g.target, {}};
    for (std::size_t n = 0; n < f.components.size(); ++n)
        out.components.push_back(g.components[n] * f.components[n]);
    return out;
}

CrossedMorphism identity_morphism(const InternalCrossedComplex& c)
{
    CrossedMorphism out{c, c, {}};
    for (Index n = 0; n <= c.top_degree(); ++n)
        out.components.push_back(FGAbHom::identity(c.group(n)));
    return out;
}

Report compare_crossed_morphisms(const CrossedMorphism& f, const CrossedMorphism& g, const std::string& law)
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

}   // namespace cubab
