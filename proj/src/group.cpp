#include "cubab/group.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cubab {

struct FGAbGroup::Data
{
    Index generators = 0;
    IntMatrix relations;

    mutable std::once_flag smith_once;
    mutable std::once_flag hermite_once;
    mutable std::unique_ptr<SmithForm<Integer>> smith;
    mutable std::unique_ptr<HermiteForm<Integer>> hermite;
};

FGAbGroup::FGAbGroup() : FGAbGroup(0, IntMatrix(0, 0)) {}

Index FGAbGroup::generators() const
{
    return data_->generators;
}

const IntMatrix& FGAbGroup::relations() const
{
    return data_->relations;
}

FGAbGroup::FGAbGroup(Index generators, IntMatrix relations)
{
    if (generators < 0)
        throw std::invalid_argument("group: negative generator count");
    if (relations.rows() != generators)
    {
        if (generators == 0 && relations.size() == 0)
            relations.resize(0, 0);
        else
            throw std::invalid_argument("group: relation matrix must have one row per generator");
    }
    auto data = std::make_shared<Data>();
    data->generators = generators;
    data->relations = std::move(relations);
    data_ = std::move(data);
}

FGAbGroup FGAbGroup::free(Index rank)
{
    return FGAbGroup(rank, IntMatrix(rank, 0));
}

FGAbGroup FGAbGroup::cyclic(const std::vector<Integer>& orders)
{
    const Index g = static_cast<Index>(orders.size());
    Index torsion = 0;
    for (const Integer& d : orders)
    {
        if (d.sign() < 0)
            throw std::invalid_argument("group: cyclic order must be nonnegative");
        if (!d.is_zero())
            ++torsion;
    }
    IntMatrix rel = IntMatrix::Zero(g, torsion);
    Index col = 0;
    for (Index i = 0; i < g; ++i)
    {
        if (!orders[i].is_zero())
            rel(i, col++) = orders[i];
    }
    return FGAbGroup(g, std::move(rel));
}

const SmithForm<Integer>& FGAbGroup::smith() const
{
    std::call_once(data_->smith_once, [this] {
        data_->smith = std::make_unique<SmithForm<Integer>>(smith_normal_form(data_->relations));
    });
    return *data_->smith;
}

const HermiteForm<Integer>& FGAbGroup::hermite() const
{
    std::call_once(data_->hermite_once, [this] {
        data_->hermite = std::make_unique<HermiteForm<Integer>>(hermite_normal_form(data_->relations));
    });
    return *data_->hermite;
}

bool FGAbGroup::is_relation(const IntVector& coords) const
{
    if (coords.size() != generators())
        throw std::invalid_argument("group: coordinate vector has wrong length");
    if (coords.isZero())
        return true;
    if (relations().cols() == 0)
        return false;
    return solve_echelon(hermite(), coords).has_value();
}

bool FGAbGroup::equal(const IntVector& a, const IntVector& b) const
{
    return is_relation(a - b);
}

IntVector FGAbGroup::canonicalize(const IntVector& coords) const
{
    if (coords.size() != generators())
        throw std::invalid_argument("group: coordinate vector has wrong length");
    if (relations().cols() == 0)
        return coords;
    const SmithForm<Integer>& s = smith();
    IntVector y = multiply(s.U, coords);
    for (Index k = 0; k < s.rank(); ++k)
        y(k) = floor_mod(y(k), s.invariant_factors[k]);
    return multiply(s.U_inverse, y);
}

std::vector<Integer> FGAbGroup::torsion() const
{
    std::vector<Integer> out;
    if (relations().cols() == 0)
        return out;
    for (const Integer& d : smith().invariant_factors)
    {
        if (d > Integer(1))
            out.push_back(d);
    }
    return out;
}

Index FGAbGroup::free_rank() const
{
    if (relations().cols() == 0)
        return generators();
    return generators() - smith().rank();
}

bool FGAbGroup::is_trivial() const
{
    return free_rank() == 0 && torsion().empty();
}

bool operator==(const FGAbGroup& a, const FGAbGroup& b)
{
    if (a.data_ == b.data_)
        return true;
    if (a.generators() != b.generators())
        return false;
    const bool a_free = a.relations().cols() == 0 || a.relations().isZero();
    const bool b_free = b.relations().cols() == 0 || b.relations().isZero();
    if (a_free || b_free)
        return a_free == b_free;
    const HermiteForm<Integer>& ha = a.hermite();
    const HermiteForm<Integer>& hb = b.hermite();
    if (ha.rank() != hb.rank())
        return false;
    return ha.H.leftCols(ha.rank()) == hb.H.leftCols(hb.rank());
}

std::string FGAbGroup::describe() const
{
    std::ostringstream os;
    bool first = true;
    for (const Integer& d : torsion())
    {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (free_rank() > 0)
    {
        os << (first ? "" : " + ") << "Z";
        if (free_rank() > 1)
            os << "^" << free_rank();
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

bool isomorphic(const FGAbGroup& a, const FGAbGroup& b)
{
    return a.free_rank() == b.free_rank() && a.torsion() == b.torsion();
}

namespace {

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks)
{
    Index rows = 0;
    Index cols = 0;
    for (const IntMatrix& b : blocks)
    {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix out = IntMatrix::Zero(rows, cols);
    Index r = 0;
    Index c = 0;
    for (const IntMatrix& b : blocks)
    {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

void require_same(const FGAbGroup& a, const FGAbGroup& b, const char* what)
{
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": groups do not match");
}

}   // namespace

FGAbGroup direct_sum(const std::vector<FGAbGroup>& summands)
{
    if (summands.size() == 1)
        return summands.front();
    std::vector<IntMatrix> blocks;
    Index g = 0;
    for (const FGAbGroup& s : summands)
    {
        blocks.push_back(s.relations());
        g += s.generators();
    }
    return FGAbGroup(g, block_diagonal(blocks));
}

FGAbElement::FGAbElement(FGAbGroup g, IntVector c) : group(std::move(g)), coords(std::move(c))
{
    if (coords.size() != group.generators())
        throw std::invalid_argument("element: coordinate vector has wrong length");
}

FGAbElement FGAbElement::zero(const FGAbGroup& g)
{
    return {g, IntVector::Zero(g.generators())};
}

FGAbElement canonicalize(const FGAbElement& e)
{
    return e.canonical();
}

FGAbElement operator+(const FGAbElement& a, const FGAbElement& b)
{
    require_same(a.group, b.group, "element sum");
    return {a.group, a.coords + b.coords};
}

FGAbElement operator-(const FGAbElement& a, const FGAbElement& b)
{
    require_same(a.group, b.group, "element difference");
    return {a.group, a.coords - b.coords};
}

FGAbElement operator-(const FGAbElement& a)
{
    return {a.group, -a.coords};
}

FGAbElement operator*(const Integer& k, const FGAbElement& a)
{
    IntVector c = a.coords;
    for (Index i = 0; i < c.size(); ++i)
        c(i) *= k;
    return {a.group, std::move(c)};
}

bool operator==(const FGAbElement& a, const FGAbElement& b)
{
    require_same(a.group, b.group, "element comparison");
    return a.group.equal(a.coords, b.coords);
}

FGAbHom::FGAbHom(FGAbGroup source, FGAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
    {
        if (matrix_.size() == 0 && (target_.generators() == 0 || source_.generators() == 0))
            matrix_.resize(target_.generators(), source_.generators());
        else
            throw std::invalid_argument("hom: matrix shape does not match source and target");
    }
}

FGAbHom FGAbHom::identity(const FGAbGroup& g)
{
    return FGAbHom(g, g, IntMatrix::Identity(g.generators(), g.generators()));
}

FGAbHom FGAbHom::zero(const FGAbGroup& source, const FGAbGroup& target)
{
    return FGAbHom(source, target, IntMatrix::Zero(target.generators(), source.generators()));
}

bool FGAbHom::well_defined() const
{
    const IntMatrix& rel = source_.relations();
    if (rel.cols() == 0)
        return true;
    IntMatrix images = multiply(matrix_, rel);
    for (Index j = 0; j < images.cols(); ++j)
    {
        if (!target_.is_relation(images.col(j)))
            return false;
    }
    return true;
}

IntVector FGAbHom::apply(const IntVector& coords) const
{
    if (coords.size() != source_.generators())
        throw std::invalid_argument("hom: argument has wrong length");
    return multiply(matrix_, coords);
}

FGAbElement FGAbHom::operator()(const FGAbElement& x) const
{
    require_same(x.group, source_, "hom application");
    return {target_, apply(x.coords)};
}

FGAbHom operator*(const FGAbHom& f, const FGAbHom& g)
{
    require_same(g.target_, f.source_, "hom composition");
    return FGAbHom(g.source_, f.target_, multiply(f.matrix_, g.matrix_));
}

FGAbHom operator+(const FGAbHom& f, const FGAbHom& g)
{
    require_same(f.source_, g.source_, "hom sum");
    require_same(f.target_, g.target_, "hom sum");
    return FGAbHom(f.source_, f.target_, f.matrix_ + g.matrix_);
}

FGAbHom operator-(const FGAbHom& f, const FGAbHom& g)
{
    require_same(f.source_, g.source_, "hom difference");
    require_same(f.target_, g.target_, "hom difference");
    return FGAbHom(f.source_, f.target_, f.matrix_ - g.matrix_);
}

FGAbHom operator-(const FGAbHom& f)
{
    return FGAbHom(f.source_, f.target_, -f.matrix_);
}

FGAbHom operator*(const Integer& k, const FGAbHom& f)
{
    IntMatrix m = f.matrix_;
    for (Index j = 0; j < m.cols(); ++j)
    {
        for (Index i = 0; i < m.rows(); ++i)
        {
            if (!m(i, j).is_zero())
                m(i, j) *= k;
        }
    }
    return FGAbHom(f.source_, f.target_, std::move(m));
}

std::optional<Index> first_difference(const FGAbHom& f, const FGAbHom& g)
{
    require_same(f.source(), g.source(), "hom comparison");
    require_same(f.target(), g.target(), "hom comparison");
    for (Index j = 0; j < f.matrix().cols(); ++j)
    {
        IntVector diff = f.matrix().col(j) - g.matrix().col(j);
        if (!f.target().is_relation(diff))
            return j;
    }
    return std::nullopt;
}

bool hom_equal(const FGAbHom& f, const FGAbHom& g)
{
    return !first_difference(f, g).has_value();
}

bool is_zero(const FGAbHom& f)
{
    return hom_equal(f, FGAbHom::zero(f.source(), f.target()));
}

FGAbHom pairing(const std::vector<FGAbHom>& maps)
{
    if (maps.empty())
        throw std::invalid_argument("pairing: no maps");
    std::vector<FGAbGroup> targets;
    Index rows = 0;
    for (const FGAbHom& f : maps)
    {
        require_same(f.source(), maps.front().source(), "pairing");
        targets.push_back(f.target());
        rows += f.target().generators();
    }
    IntMatrix m(rows, maps.front().source().generators());
    Index r = 0;
    for (const FGAbHom& f : maps)
    {
        m.middleRows(r, f.matrix().rows()) = f.matrix();
        r += f.matrix().rows();
    }
    return FGAbHom(maps.front().source(), direct_sum(targets), std::move(m));
}

FGAbHom copairing(const std::vector<FGAbHom>& maps)
{
    if (maps.empty())
        throw std::invalid_argument("copairing: no maps");
    std::vector<FGAbGroup> sources;
    Index cols = 0;
    for (const FGAbHom& f : maps)
    {
        require_same(f.target(), maps.front().target(), "copairing");
        sources.push_back(f.source());
        cols += f.source().generators();
    }
    IntMatrix m(maps.front().target().generators(), cols);
    Index c = 0;
    for (const FGAbHom& f : maps)
    {
        m.middleCols(c, f.matrix().cols()) = f.matrix();
        c += f.matrix().cols();
    }
    return FGAbHom(direct_sum(sources), maps.front().target(), std::move(m));
}

FGAbHom direct_sum(const std::vector<FGAbHom>& maps)
{
    std::vector<FGAbGroup> sources;
    std::vector<FGAbGroup> targets;
    std::vector<IntMatrix> blocks;
    for (const FGAbHom& f : maps)
    {
        sources.push_back(f.source());
        targets.push_back(f.target());
        blocks.push_back(f.matrix());
    }
    return FGAbHom(direct_sum(sources), direct_sum(targets), block_diagonal(blocks));
}

FGAbHom injection(const std::vector<FGAbGroup>& summands, std::size_t k)
{
    FGAbGroup sum = direct_sum(summands);
    IntMatrix m = IntMatrix::Zero(sum.generators(), summands.at(k).generators());
    Index offset = 0;
    for (std::size_t i = 0; i < k; ++i)
        offset += summands[i].generators();
    for (Index i = 0; i < m.cols(); ++i)
        m(offset + i, i) = 1;
    return FGAbHom(summands[k], sum, std::move(m));
}

FGAbHom projection(const std::vector<FGAbGroup>& summands, std::size_t k)
{
    FGAbGroup sum = direct_sum(summands);
    IntMatrix m = IntMatrix::Zero(summands.at(k).generators(), sum.generators());
    Index offset = 0;
    for (std::size_t i = 0; i < k; ++i)
        offset += summands[i].generators();
    for (Index i = 0; i < m.rows(); ++i)
        m(i, offset + i) = 1;
    return FGAbHom(sum, summands[k], std::move(m));
}

SmithPresentation smith_presentation(const FGAbGroup& g)
{
    const Index n = g.generators();
    if (g.relations().cols() == 0)
        return {g, FGAbHom::identity(g), FGAbHom::identity(g)};

    const SmithForm<Integer>& s = g.smith();
    std::vector<Index> kept;
    std::vector<Integer> orders;
    for (Index k = 0; k < n; ++k)
    {
        if (k < s.rank())
        {
            if (s.invariant_factors[k] == Integer(1))
                continue;
            orders.push_back(s.invariant_factors[k]);
        }
        else
        {
            orders.push_back(0);
        }
        kept.push_back(k);
    }
    FGAbGroup reduced = FGAbGroup::cyclic(orders);
    const Index r = static_cast<Index>(kept.size());
    IntMatrix to(n, r);
    IntMatrix from(r, n);
    for (Index c = 0; c < r; ++c)
    {
        to.col(c) = s.U_inverse.col(kept[c]);
        from.row(c) = s.U.row(kept[c]);
    }
    return {reduced, FGAbHom(reduced, g, std::move(to)), FGAbHom(g, reduced, std::move(from))};
}

namespace {

IntMatrix with_relations(const IntMatrix& m, const FGAbGroup& target)
{
    IntMatrix out(m.rows(), m.cols() + target.relations().cols());
    out << m, target.relations();
    return out;
}

}   // namespace

Kernel kernel_of_hom(const FGAbHom& f)
{
    if (!f.well_defined())
        throw std::invalid_argument("kernel: hom is not well defined");
    const FGAbGroup& source = f.source();
    const Index g = source.generators();
    if (is_zero(f))
        return {source, FGAbHom::identity(source)};

    IntMatrix stacked(f.matrix().rows(), g + f.target().relations().cols());
    stacked << f.matrix(), -f.target().relations();
    IntMatrix lifted = integer_kernel(stacked).topRows(g);
    IntMatrix basis = lattice_basis(lifted);

    IntMatrix rel(basis.cols(), source.relations().cols());
    if (source.relations().cols() > 0)
    {
        HermiteForm<Integer> hb = hermite_normal_form(basis);
        for (Index j = 0; j < source.relations().cols(); ++j)
        {
            auto c = solve_membership(hb, IntVector(source.relations().col(j)));
            if (!c)
                throw std::logic_error("kernel: source relation outside the preimage lattice");
            rel.col(j) = *c;
        }
    }
    FGAbGroup presented(basis.cols(), std::move(rel));
    SmithPresentation sp = smith_presentation(presented);
    return {sp.group, FGAbHom(sp.group, source, multiply(basis, sp.to_original.matrix()))};
}

Cokernel cokernel_of_hom(const FGAbHom& f)
{
    const FGAbGroup& target = f.target();
    IntMatrix rel(target.generators(), target.relations().cols() + f.matrix().cols());
    rel << target.relations(), f.matrix();
    FGAbGroup quotient(target.generators(), std::move(rel));
    SmithPresentation sp = smith_presentation(quotient);
    FGAbHom onto(target, quotient, IntMatrix::Identity(target.generators(), target.generators()));
    return {sp.group, sp.from_original * onto};
}

std::optional<IntVector> preimage(const FGAbHom& f, const IntVector& b)
{
    if (b.size() != f.target().generators())
        throw std::invalid_argument("preimage: vector has wrong length");
    auto x = solve_membership(with_relations(f.matrix(), f.target()), b);
    if (!x)
        return std::nullopt;
    return IntVector(x->head(f.source().generators()));
}

std::optional<FGAbHom> factor_through(const FGAbHom& injection, const FGAbHom& f)
{
    require_same(injection.target(), f.target(), "factor_through");
    HermiteForm<Integer> form = hermite_normal_form(with_relations(injection.matrix(), injection.target()));
    const Index k = injection.source().generators();
    IntMatrix h(k, f.source().generators());
    for (Index j = 0; j < f.matrix().cols(); ++j)
    {
        auto x = solve_membership(form, IntVector(f.matrix().col(j)));
        if (!x)
            return std::nullopt;
        h.col(j) = x->head(k);
    }
    return FGAbHom(f.source(), injection.source(), std::move(h));
}

bool is_injective(const FGAbHom& f)
{
    return kernel_of_hom(f).group.is_trivial();
}

bool is_surjective(const FGAbHom& f)
{
    HermiteForm<Integer> form = hermite_normal_form(with_relations(f.matrix(), f.target()));
    const Index n = f.target().generators();
    for (Index j = 0; j < n; ++j)
    {
        IntVector e = IntVector::Zero(n);
        e(j) = 1;
        if (!solve_echelon(form, e))
            return false;
    }
    return true;
}

bool is_isomorphism(const FGAbHom& f)
{
    return is_surjective(f) && is_injective(f);
}

FGAbHom inverse(const FGAbHom& f)
{
    if (!is_isomorphism(f))
        throw std::domain_error("inverse: hom is not an isomorphism");
    auto g = factor_through(f, FGAbHom::identity(f.target()));
    return *g;
}

}   // namespace cubab
