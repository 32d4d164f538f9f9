#include "cubab/nerve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubab/random.hpp"

namespace cubab {

Index cell_dimension(const std::string& cell)
{
    return std::count(cell.begin(), cell.end(), '*');
}

std::vector<std::string> cube_cells(Index n)
{
    std::vector<std::string> cells{""};
    for (Index k = 0; k < n; ++k)
    {
        std::vector<std::string> longer;
        longer.reserve(cells.size() * 3);
        for (const std::string& c : cells)
        {
            for (char symbol : {'*', '0', '1'})
                longer.push_back(c + symbol);
        }
        cells = std::move(longer);
    }
    return cells;
}

namespace {

void require_cube_dimension(Index n)
{
    if (n < 0 || n > max_cube_dimension)
        throw std::out_of_range("cube dimension " + std::to_string(n) + " out of range 0.." +
                                std::to_string(max_cube_dimension));
}

std::map<std::string, Index> positions(const std::vector<std::string>& cells)
{
    std::map<std::string, Index> out;
    for (std::size_t k = 0; k < cells.size(); ++k)
        out.emplace(cells[k], static_cast<Index>(k));
    return out;
}

}   // namespace

CubeComplex cube_complex(Index n)
{
    require_cube_dimension(n);
    std::vector<std::vector<std::string>> basis(n + 1);
    for (const std::string& c : cube_cells(n))
        basis[cell_dimension(c)].push_back(c);

    std::vector<FGAbGroup> groups;
    for (Index k = 0; k <= n; ++k)
        groups.push_back(FGAbGroup::free(static_cast<Index>(basis[k].size())));

    std::vector<FGAbHom> boundaries;
    for (Index k = 1; k <= n; ++k)
    {
        const auto row = positions(basis[k - 1]);
        IntMatrix m = IntMatrix::Zero(groups[k - 1].generators(), groups[k].generators());
        for (std::size_t col = 0; col < basis[k].size(); ++col)
        {
            const std::string& c = basis[k][col];
            int sign = 1;
            for (std::size_t slot = 0; slot < c.size(); ++slot)
            {
                if (c[slot] != '*')
                    continue;
                std::string upper = c, lower = c;
                upper[slot] = '1';
                lower[slot] = '0';
                m(row.at(upper), col) += Integer(sign);
                m(row.at(lower), col) -= Integer(sign);
                sign = -sign;
            }
        }
        boundaries.emplace_back(groups[k], groups[k - 1], std::move(m));
    }
    return {n, ChainComplex(std::move(groups), std::move(boundaries)), std::move(basis)};
}

std::optional<std::string> cell_image(const Op& op, const std::string& cell)
{
    const std::size_t slot = static_cast<std::size_t>(op.i - 1);
    switch (op.kind)
    {
        case Op::Kind::face:
        {
            if (slot > cell.size())
                throw std::out_of_range("cell_image: face index out of range");
            std::string out = cell;
            out.insert(out.begin() + slot, op.alpha ? '1' : '0');
            return out;
        }
        case Op::Kind::degeneracy:
        {
            if (slot >= cell.size())
                throw std::out_of_range("cell_image: degeneracy index out of range");
            if (cell[slot] == '*')
                return std::nullopt;
            std::string out = cell;
            out.erase(slot, 1);
            return out;
        }
        case Op::Kind::connection:
        {
            if (slot + 1 >= cell.size())
                throw std::out_of_range("cell_image: connection index out of range");
            const char a = cell[slot];
            const char b = cell[slot + 1];
            char merged;
            if (a == '0' && b == '0')
                merged = '0';
            else if (a != '*' && b != '*')
                merged = '1';
            else if (a == '0' || b == '0')
                merged = '*';
            else
                return std::nullopt;
            std::string out = cell;
            out.replace(slot, 2, 1, merged);
            return out;
        }
    }
    return std::nullopt;
}

ChainMap cellular_operator(const Op& op, Index n)
{
    const Index m = op.target_degree(n);
    const CubeComplex source = cube_complex(m);
    const CubeComplex target = cube_complex(n);
    ChainMap out{source.complex, target.complex, {}};
    for (Index k = 0; k <= m; ++k)
    {
        const FGAbGroup to = target.complex.group_or_zero(k);
        IntMatrix matrix = IntMatrix::Zero(to.generators(), source.complex.group(k).generators());
        if (k <= n)
        {
            const auto row = positions(target.basis[k]);
            for (std::size_t col = 0; col < source.basis[k].size(); ++col)
            {
                if (auto image = cell_image(op, source.basis[k][col]))
                    matrix(row.at(*image), col) = 1;
            }
        }
        out.components.emplace_back(source.complex.group(k), to, std::move(matrix));
    }
    return out;
}

ChainMap cellular_composite(const std::vector<Op>& ops, Index n)
{
    ChainMap out = ChainMap::identity(cube_complex(n).complex);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    {
        out = compose(out, cellular_operator(*it, n));
        n = it->target_degree(n);
    }
    return out;
}

Report validate_cellular_operators(Index top)
{
    Report report;
    for (Index n = 0; n <= top; ++n)
    {
        std::vector<Op> ops;
        for (Index i = 1; i <= n; ++i)
        {
            ops.push_back(face_op(i, 0));
            ops.push_back(face_op(i, 1));
            if (n < top)
                ops.push_back(connection_op(i));
        }
        if (n < top)
        {
            for (Index i = 1; i <= n + 1; ++i)
                ops.push_back(degeneracy_op(i));
        }
        for (const Op& op : ops)
        {
            Report one = validate_chain_map(cellular_operator(op, n));
            for (Violation v : one.violations)
            {
                v.indices.insert(v.indices.begin(), {n, static_cast<long long>(op.kind), op.i, op.alpha});
                report.violations.push_back(std::move(v));
            }
        }
    }
    report.sort();
    return report;
}

Report check_cellular_identities(Index top)
{
    Report report;
    for (const IdentityInstance& id : identity_table(top))
    {
        Report one = compare_chain_maps(cellular_composite(id.lhs, id.source_degree),
                                        cellular_composite(id.rhs, id.source_degree), id.law);
        for (Violation v : one.violations)
        {
            v.indices.insert(v.indices.begin(), id.indices.begin(), id.indices.end());
            report.violations.push_back(std::move(v));
        }
    }
    report.sort();
    return report;
}

ChainComplex pad(const ChainComplex& a, Index top)
{
    if (a.top_degree() >= top)
        return a;
    std::vector<FGAbGroup> groups = a.groups();
    std::vector<FGAbHom> boundaries = a.boundaries();
    for (Index n = a.top_degree() + 1; n <= top; ++n)
    {
        groups.emplace_back();
        boundaries.push_back(FGAbHom::zero(groups[n], groups[n - 1]));
    }
    return ChainComplex(std::move(groups), std::move(boundaries));
}

namespace {

// Offsets of the per-cell summands inside D_n.
std::vector<Index> block_offsets(const std::vector<std::string>& cells, const ChainComplex& a)
{
    std::vector<Index> offsets{0};
    for (const std::string& c : cells)
        offsets.push_back(offsets.back() + a.group(cell_dimension(c)).generators());
    return offsets;
}

void put_block(IntMatrix& m, Index row, Index col, const IntMatrix& block, int sign = 1)
{
    for (Index j = 0; j < block.cols(); ++j)
    {
        for (Index i = 0; i < block.rows(); ++i)
        {
            if (sign > 0)
                m(row + i, col + j) += block(i, j);
            else
                m(row + i, col + j) -= block(i, j);
        }
    }
}

// Precomposition with the cell map of op, as a hom D_n -> D_m.
FGAbHom precompose(const NerveBundle& nb, const Op& op, Index n)
{
    const Index m = op.target_degree(n);
    const auto& source_cells = nb.cells[n];
    const auto& target_cells = nb.cells[m];
    const auto source_pos = positions(source_cells);
    const std::vector<Index> source_off = block_offsets(source_cells, nb.complex);
    const std::vector<Index> target_off = block_offsets(target_cells, nb.complex);
    IntMatrix matrix = IntMatrix::Zero(nb.ambient[m].generators(), nb.ambient[n].generators());
    for (std::size_t t = 0; t < target_cells.size(); ++t)
    {
        auto image = cell_image(op, target_cells[t]);
        if (!image)
            continue;
        const Index s = source_pos.at(*image);
        const Index width = source_off[s + 1] - source_off[s];
        put_block(matrix, target_off[t], source_off[s], IntMatrix::Identity(width, width));
    }
    return FGAbHom(nb.ambient[n], nb.ambient[m], std::move(matrix));
}

FGAbHom lift(const FGAbHom& inclusion, const FGAbHom& f, const std::string& what)
{
    auto h = factor_through(inclusion, f);
    if (!h)
        throw std::logic_error(what + " does not factor through the kernel");
    return *h;
}

}   // namespace

NerveBundle nerve(const ChainComplex& a, Index top)
{
    if (top < 0 || top > max_cube_dimension)
        throw std::out_of_range("nerve: top degree out of range");
    if (a.top_degree() > top)
        throw std::invalid_argument("nerve: top degree below that of the complex");
    Report report = validate_chain(a);
    if (!report.ok())
        throw ValidationError("nerve: invalid chain complex", report);

    const ChainComplex padded = pad(a, top);
    std::vector<std::vector<std::string>> cells;
    std::vector<FGAbGroup> ambient;
    std::vector<FGAbGroup> groups;
    std::vector<FGAbHom> inclusions;
    for (Index n = 0; n <= top; ++n)
    {
        cells.push_back(cube_cells(n));
        std::vector<FGAbGroup> summands;
        for (const std::string& c : cells[n])
            summands.push_back(padded.group(cell_dimension(c)));
        ambient.push_back(direct_sum(summands));

        // Chain condition d_A f(c) = f(d c) for every cell of positive dimension.
        const auto pos = positions(cells[n]);
        const std::vector<Index> off = block_offsets(cells[n], padded);
        std::vector<FGAbGroup> targets;
        std::vector<Index> row_off{0};
        for (const std::string& c : cells[n])
        {
            const Index k = cell_dimension(c);
            if (k == 0)
                continue;
            targets.push_back(padded.group(k - 1));
            row_off.push_back(row_off.back() + targets.back().generators());
        }
        if (targets.empty())
        {
            groups.push_back(ambient[n]);
            inclusions.push_back(FGAbHom::identity(ambient[n]));
            continue;
        }
        IntMatrix constraint = IntMatrix::Zero(row_off.back(), ambient[n].generators());
        std::size_t r = 0;
        for (std::size_t col = 0; col < cells[n].size(); ++col)
        {
            const std::string& c = cells[n][col];
            const Index k = cell_dimension(c);
            if (k == 0)
                continue;
            put_block(constraint, row_off[r], off[col], padded.boundary(k).matrix());
            int sign = 1;
            for (std::size_t slot = 0; slot < c.size(); ++slot)
            {
                if (c[slot] != '*')
                    continue;
                std::string upper = c, lower = c;
                upper[slot] = '1';
                lower[slot] = '0';
                const Index width = targets[r].generators();
                const IntMatrix id = IntMatrix::Identity(width, width);
                put_block(constraint, row_off[r], off[pos.at(upper)], id, -sign);
                put_block(constraint, row_off[r], off[pos.at(lower)], id, sign);
                sign = -sign;
            }
            ++r;
        }
        Kernel k = kernel_of_hom(FGAbHom(ambient[n], direct_sum(targets), std::move(constraint)));
        groups.push_back(k.group);
        inclusions.push_back(k.inclusion);
    }

    NerveBundle nb{padded, constant_bundle(FGAbGroup(), 0), std::move(cells), std::move(ambient), std::move(inclusions)};
    std::map<std::string, FGAbHom> ops;
    for (Index n = 0; n <= top; ++n)
    {
        for (Index i = 1; i <= n; ++i)
        {
            for (int alpha = 0; alpha <= 1; ++alpha)
            {
                const std::string key = face_key(n, i, alpha);
                ops.emplace(key, lift(nb.inclusions[n - 1], precompose(nb, face_op(i, alpha), n) * nb.inclusions[n], key));
            }
            if (n < top)
            {
                const std::string key = connection_key(n, i);
                ops.emplace(key, lift(nb.inclusions[n + 1], precompose(nb, connection_op(i), n) * nb.inclusions[n], key));
            }
        }
        for (Index i = 1; i <= n; ++i)
        {
            const std::string key = degeneracy_key(n, i);
            ops.emplace(key, lift(nb.inclusions[n], precompose(nb, degeneracy_op(i), n - 1) * nb.inclusions[n - 1], key));
        }
    }
    nb.bundle = CubicalBundle(std::move(groups), std::move(ops));
    return nb;
}

BundleMorphism nerve(const ChainMap& f, const NerveBundle& source, const NerveBundle& target)
{
    const Index top = source.bundle.top_degree();
    if (target.bundle.top_degree() != top)
        throw std::invalid_argument("nerve: the two nerves have different top degrees");
    Report report = validate_chain_map(f);
    if (!report.ok())
        throw ValidationError("nerve: invalid chain map", report);

    BundleMorphism out{source.bundle, target.bundle, {}};
    for (Index n = 0; n <= top; ++n)
    {
        std::vector<FGAbHom> blocks;
        for (const std::string& c : source.cells[n])
        {
            const Index k = cell_dimension(c);
            if (k < static_cast<Index>(f.components.size()))
                blocks.push_back(f.components[k]);
            else
                blocks.push_back(FGAbHom::zero(source.complex.group(k), target.complex.group(k)));
        }
        const FGAbHom raw = direct_sum(blocks) * source.inclusions[n];
        out.components.push_back(lift(target.inclusions[n], raw, "nerve of a chain map"));
    }
    return out;
}

NormalizedChains normalized_chains(const CubicalBundle& k)
{
    Report report = validate_identities(k);
    if (!report.ok())
        throw ValidationError("normalize: bundle fails its identities", report);

    const Index top = k.top_degree();
    std::vector<FGAbGroup> groups{k.group(0)};
    std::vector<FGAbHom> inclusions{FGAbHom::identity(k.group(0))};
    for (Index n = 1; n <= top; ++n)
    {
        std::vector<FGAbHom> faces;
        for (Index i = 1; i <= n; ++i)
        {
            for (int alpha = 0; alpha <= 1; ++alpha)
            {
                if (i != 1 || alpha != 1)
                    faces.push_back(k.face(n, i, alpha));
            }
        }
        Kernel kernel = kernel_of_hom(pairing(faces));
        groups.push_back(kernel.group);
        inclusions.push_back(kernel.inclusion);
    }
    std::vector<FGAbHom> boundaries;
    for (Index n = 1; n <= top; ++n)
        boundaries.push_back(lift(inclusions[n - 1], k.face(n, 1, 1) * inclusions[n], "d^1_1"));
    return {ChainComplex(std::move(groups), std::move(boundaries)), std::move(inclusions)};
}

ChainComplex normalize(const CubicalBundle& k)
{
    return normalized_chains(k).complex;
}

namespace {

ChainMap restrict_morphism(const BundleMorphism& f, const NormalizedChains& source, const NormalizedChains& target)
{
    ChainMap out{source.complex, target.complex, {}};
    for (std::size_t n = 0; n < f.components.size(); ++n)
        out.components.push_back(lift(target.inclusions[n], f.components[n] * source.inclusions[n], "restriction"));
    return out;
}

}   // namespace

ChainMap normalize(const BundleMorphism& f)
{
    Report report = validate_bundle_morphism(f);
    if (!report.ok())
        throw ValidationError("normalize: not a morphism of cubical bundles", report);
    return restrict_morphism(f, normalized_chains(f.source), normalized_chains(f.target));
}

namespace {

// eta_n followed by the inclusions N_n -> K_n -> D_n.
FGAbHom raw_eta(const NerveBundle& nb, Index n)
{
    const ChainComplex& a = nb.complex;
    const auto pos = positions(nb.cells[n]);
    const std::vector<Index> off = block_offsets(nb.cells[n], a);
    IntMatrix m = IntMatrix::Zero(nb.ambient[n].generators(), a.group(n).generators());
    const Index width = a.group(n).generators();
    put_block(m, off[pos.at(std::string(n, '*'))], 0, IntMatrix::Identity(width, width));
    if (n >= 1)
        put_block(m, off[pos.at("1" + std::string(n - 1, '*'))], 0, a.boundary(n).matrix());
    return FGAbHom(a.group(n), nb.ambient[n], std::move(m));
}

ChainMap eta_map(const NerveBundle& nb, const NormalizedChains& normal)
{
    ChainMap eta{nb.complex, normal.complex, {}};
    for (Index n = 0; n <= nb.complex.top_degree(); ++n)
    {
        const FGAbHom into_ambient = nb.inclusions[n] * normal.inclusions[n];
        eta.components.push_back(lift(into_ambient, raw_eta(nb, n), "eta"));
    }
    return eta;
}

}   // namespace

RoundTrip roundtrip_nerve(const ChainComplex& a, Index top, int naturality_trials, std::uint64_t seed)
{
    const NerveBundle nb = nerve(a, top);
    const NormalizedChains normal = normalized_chains(nb.bundle);
    RoundTrip out{eta_map(nb, normal), {}, {}};
    Report& report = out.report;

    out.inverse = ChainMap{normal.complex, nb.complex, {}};
    for (Index n = 0; n <= top; ++n)
    {
        const FGAbHom& eta_n = out.eta.components[n];
        if (!is_isomorphism(eta_n))
        {
            report.add("eta-isomorphism", {n}, "degree " + std::to_string(n));
            out.inverse.components.push_back(FGAbHom::zero(eta_n.target(), eta_n.source()));
            continue;
        }
        out.inverse.components.push_back(inverse(eta_n));
    }
    for (Violation v : validate_chain_map(out.eta).violations)
    {
        v.law = "eta-" + v.law;
        report.violations.push_back(std::move(v));
    }
    if (!report.ok())
    {
        report.sort();
        return out;
    }
    for (Violation v : validate_chain_map(out.inverse).violations)
    {
        v.law = "eta-inverse-" + v.law;
        report.violations.push_back(std::move(v));
    }

    for (int trial = 0; trial < naturality_trials; ++trial)
    {
        const ChainMap f = random_chain_endomorphism(nb.complex, seed + static_cast<std::uint64_t>(trial));
        const ChainMap nf = restrict_morphism(nerve(f, nb, nb), normal, normal);
        for (Violation v : compare_chain_maps(compose(nf, out.eta), compose(out.eta, f), "naturality").violations)
        {
            v.indices.insert(v.indices.begin(), trial);
            report.violations.push_back(std::move(v));
        }
    }
    report.sort();
    return out;
}

}   // namespace cubab
