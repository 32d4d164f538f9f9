#include "cubab/cubical.hpp"

#include <set>
#include <stdexcept>

namespace cubab {

std::string face_key(Index n, Index i, int alpha)
{
    return "face:" + std::to_string(n) + ":" + std::to_string(i) + ":" + std::to_string(alpha);
}

std::string degeneracy_key(Index n, Index i)
{
    return "deg:" + std::to_string(n) + ":" + std::to_string(i);
}

std::string connection_key(Index n, Index i)
{
    return "conn:" + std::to_string(n) + ":" + std::to_string(i);
}

std::vector<std::string> required_keys(Index top)
{
    std::set<std::string> keys;
    for (Index n = 1; n <= top; ++n)
    {
        for (Index i = 1; i <= n; ++i)
        {
            keys.insert(face_key(n, i, 0));
            keys.insert(face_key(n, i, 1));
            keys.insert(degeneracy_key(n, i));
            if (n < top)
                keys.insert(connection_key(n, i));
        }
    }
    return {keys.begin(), keys.end()};
}

namespace {

// Source and target degree of the operator named by key.
std::pair<Index, Index> key_degrees(const std::string& key)
{
    const Index n = std::stoll(key.substr(key.find(':') + 1));
    if (key.rfind("face:", 0) == 0)
        return {n, n - 1};
    if (key.rfind("deg:", 0) == 0)
        return {n - 1, n};
    return {n, n + 1};
}

}   // namespace

CubicalBundle::CubicalBundle(std::vector<FGAbGroup> groups, std::map<std::string, FGAbHom> ops)
    : groups_(std::move(groups)), ops_(std::move(ops))
{
    if (groups_.empty())
        throw std::invalid_argument("bundle: at least K_0 is required");
    const std::vector<std::string> keys = required_keys(top_degree());
    const std::set<std::string> wanted(keys.begin(), keys.end());
    for (const auto& [key, hom] : ops_)
    {
        if (!wanted.count(key))
            throw std::invalid_argument("bundle: unexpected operator " + key);
        auto [from, to] = key_degrees(key);
        if (hom.source() != groups_[from] || hom.target() != groups_[to])
            throw std::invalid_argument("bundle: operator " + key + " has the wrong source or target");
    }
    for (const std::string& key : keys)
    {
        if (!ops_.count(key))
            throw std::invalid_argument("bundle: missing operator " + key);
    }
}

const FGAbGroup& CubicalBundle::group(Index n) const
{
    if (n < 0 || n > top_degree())
        throw std::out_of_range("bundle: degree " + std::to_string(n) + " out of range");
    return groups_[n];
}

const FGAbHom& CubicalBundle::op(const std::string& key) const
{
    auto it = ops_.find(key);
    if (it == ops_.end())
        throw std::out_of_range("bundle: no operator " + key);
    return it->second;
}

const FGAbHom& CubicalBundle::face(Index n, Index i, int alpha) const
{
    return op(face_key(n, i, alpha));
}

const FGAbHom& CubicalBundle::degeneracy(Index n, Index i) const
{
    return op(degeneracy_key(n, i));
}

const FGAbHom& CubicalBundle::connection(Index n, Index i) const
{
    return op(connection_key(n, i));
}

CubicalBundle constant_bundle(const FGAbGroup& g, Index top)
{
    std::map<std::string, FGAbHom> ops;
    const FGAbHom id = FGAbHom::identity(g);
    for (const std::string& key : required_keys(top))
        ops.emplace(key, id);
    return CubicalBundle(std::vector<FGAbGroup>(top + 1, g), std::move(ops));
}

Op face_op(Index i, int alpha)
{
    return {Op::Kind::face, i, alpha};
}

Op degeneracy_op(Index i)
{
    return {Op::Kind::degeneracy, i, 0};
}

Op connection_op(Index i)
{
    return {Op::Kind::connection, i, 0};
}

namespace {

bool applicable(const Op& op, Index n, Index top)
{
    switch (op.kind)
    {
        case Op::Kind::face:
            return n >= 1 && op.i >= 1 && op.i <= n;
        case Op::Kind::degeneracy:
            return n + 1 <= top && op.i >= 1 && op.i <= n + 1;
        case Op::Kind::connection:
            return n + 1 <= top && op.i >= 1 && op.i <= n;
    }
    return false;
}

bool applicable(const std::vector<Op>& ops, Index n, Index top)
{
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    {
        if (!applicable(*it, n, top))
            return false;
        n = it->target_degree(n);
    }
    return true;
}

}   // namespace

std::vector<IdentityInstance> identity_table(Index top)
{
    std::vector<IdentityInstance> out;
    auto add = [&](const char* law, std::vector<long long> indices, std::vector<Op> lhs, std::vector<Op> rhs) {
        const Index n = indices.front();
        if (applicable(lhs, n, top) && applicable(rhs, n, top))
            out.push_back({law, std::move(indices), n, std::move(lhs), std::move(rhs)});
    };
    const Index bound = top + 2;
    for (Index n = 0; n <= top; ++n)
    {
        for (Index i = 1; i <= bound; ++i)
        {
            for (Index j = 1; j <= bound; ++j)
            {
                for (int a = 0; a <= 1; ++a)
                {
                    for (int b = 0; b <= 1; ++b)
                    {
                        if (i < j)
                            add("C1", {n, i, j, a, b}, {face_op(i, a), face_op(j, b)}, {face_op(j - 1, b), face_op(i, a)});
                    }

                    if (i < j)
                        add("C2", {n, i, j, a}, {face_op(i, a), degeneracy_op(j)}, {degeneracy_op(j - 1), face_op(i, a)});
                    else if (i == j)
                        add("C2", {n, i, j, a}, {face_op(i, a), degeneracy_op(i)}, {});
                    else
                        add("C2", {n, i, j, a}, {face_op(i, a), degeneracy_op(j)}, {degeneracy_op(j), face_op(i - 1, a)});

                    if (i < j)
                        add("C6", {n, i, j, a}, {face_op(i, a), connection_op(j)}, {connection_op(j - 1), face_op(i, a)});
                    else if ((i == j || i == j + 1) && a == 0)
                        add("C6", {n, i, j, a}, {face_op(i, 0), connection_op(j)}, {});
                    else if (i == j || i == j + 1)
                        add("C6", {n, i, j, a}, {face_op(i, 1), connection_op(j)}, {degeneracy_op(j), face_op(j, 1)});
                    else
                        add("C6", {n, i, j, a}, {face_op(i, a), connection_op(j)}, {connection_op(j), face_op(i - 1, a)});
                }

                if (i <= j)
                {
                    add("C3", {n, i, j}, {degeneracy_op(i), degeneracy_op(j)}, {degeneracy_op(j + 1), degeneracy_op(i)});
                    add("C4", {n, i, j}, {connection_op(i), connection_op(j)}, {connection_op(j + 1), connection_op(i)});
                }

                if (i < j)
                    add("C5", {n, i, j}, {connection_op(i), degeneracy_op(j)}, {degeneracy_op(j + 1), connection_op(i)});
                else if (i == j)
                    add("C5", {n, i, j}, {connection_op(i), degeneracy_op(i)}, {degeneracy_op(i + 1), degeneracy_op(i)});
                else
                    add("C5", {n, i, j}, {connection_op(i), degeneracy_op(j)}, {degeneracy_op(j), connection_op(i - 1)});
            }
        }
    }
    return out;
}

FGAbHom evaluate(const CubicalBundle& k, const std::vector<Op>& ops, Index n)
{
    if (!applicable(ops, n, k.top_degree()))
        throw std::out_of_range("evaluate: composite leaves the bundle's degrees");
    FGAbHom out = FGAbHom::identity(k.group(n));
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    {
        switch (it->kind)
        {
            case Op::Kind::face:
                out = k.face(n, it->i, it->alpha) * out;
                break;
            case Op::Kind::degeneracy:
                out = k.degeneracy(n + 1, it->i) * out;
                break;
            case Op::Kind::connection:
                out = k.connection(n, it->i) * out;
                break;
        }
        n = it->target_degree(n);
    }
    return out;
}

Report validate_identities(const CubicalBundle& k)
{
    Report report;
    for (const auto& [key, hom] : k.ops())
    {
        if (!hom.well_defined())
            report.add("well-defined", {}, key);
    }
    if (!report.ok())
        return report;
    for (const IdentityInstance& id : identity_table(k.top_degree()))
        report.expect_equal(id.law, id.indices, evaluate(k, id.lhs, id.source_degree), evaluate(k, id.rhs, id.source_degree));
    report.sort();
    return report;
}

SourceTarget source_target(const CubicalBundle& k, Index n, Index i)
{
    if (n < 1 || n > k.top_degree() || i < 1 || i > n)
        throw std::out_of_range("source_target: need 1 <= i <= n <= N");
    const FGAbHom& eps = k.degeneracy(n, i);
    return {eps * k.face(n, i, 0), eps * k.face(n, i, 1)};
}

FGAbElement compose_i(const CubicalBundle& k, Index n, Index i, const FGAbElement& g, const FGAbElement& h)
{
    SourceTarget st = source_target(k, n, i);
    if (g.group != k.group(n) || h.group != k.group(n))
        throw std::invalid_argument("compose_i: arguments must lie in K_n");
    if (k.face(n, i, 1)(g) != k.face(n, i, 0)(h))
        throw std::invalid_argument("compose_i: d^1_i g differs from d^0_i h");
    return g - st.t(g) + h;
}

FGAbElement inverse_i(const CubicalBundle& k, Index n, Index i, const FGAbElement& g)
{
    SourceTarget st = source_target(k, n, i);
    if (g.group != k.group(n))
        throw std::invalid_argument("inverse_i: argument must lie in K_n");
    return st.s(g) - g + st.t(g);
}

TupleSpace::TupleSpace(const FGAbGroup& factor, std::size_t arity)
    : factors_(arity, factor), group_(direct_sum(factors_)), inclusion_(FGAbHom::identity(group_))
{
}

FGAbHom TupleSpace::projection(std::size_t k) const
{
    return cubab::projection(factors_, k);
}

void TupleSpace::impose(const std::vector<Constraint>& constraints)
{
    if (constraints.empty())
        return;
    std::vector<FGAbHom> differences;
    for (const Constraint& c : constraints)
        differences.push_back(c.lhs - c.rhs);
    Kernel k = kernel_of_hom(pairing(differences));
    group_ = k.group;
    inclusion_ = k.inclusion;
}

FGAbHom TupleSpace::coordinate(std::size_t k) const
{
    return projection(k) * inclusion_;
}

namespace {

// Composition o_i as a hom on the parameter space of x and y.
FGAbHom compose_hom(const SourceTarget& st, const FGAbHom& x, const FGAbHom& y)
{
    return x - st.t * x + y;
}

}   // namespace

Report check_groupoid(const CubicalBundle& k, Index n, Index i)
{
    Report report;
    const SourceTarget st = source_target(k, n, i);
    const FGAbHom& s = st.s;
    const FGAbHom& t = st.t;
    const FGAbHom& d0 = k.face(n, i, 0);
    const FGAbHom& d1 = k.face(n, i, 1);
    const FGAbHom id = FGAbHom::identity(k.group(n));
    const std::vector<long long> at{n, i};

    report.expect_equal("ss=s", at, s * s, s);
    report.expect_equal("tt=t", at, t * t, t);
    report.expect_equal("st=t", at, s * t, t);
    report.expect_equal("ts=s", at, t * s, s);

    report.expect_equal("unit-composable", at, d1 * s, d0);
    report.expect_equal("unit-composable", at, d0 * t, d1);
    report.expect_equal("left-unit", at, compose_hom(st, s, id), id);
    report.expect_equal("right-unit", at, compose_hom(st, id, t), id);

    const FGAbHom inv = s - id + t;
    report.expect_equal("inverse-composable", at, d1, d0 * inv);
    report.expect_equal("inverse-composable", at, d1 * inv, d0);
    report.expect_equal("right-inverse", at, compose_hom(st, id, inv), s);
    report.expect_equal("left-inverse", at, compose_hom(st, inv, id), t);

    TupleSpace pairs(k.group(n), 2);
    pairs.impose({{d1 * pairs.projection(0), d0 * pairs.projection(1)}});
    const FGAbHom g = pairs.coordinate(0);
    const FGAbHom h = pairs.coordinate(1);
    report.expect_equal("composite-source", at, d0 * compose_hom(st, g, h), d0 * g, "pair generator");
    report.expect_equal("composite-target", at, d1 * compose_hom(st, g, h), d1 * h, "pair generator");

    TupleSpace triples(k.group(n), 3);
    triples.impose({{d1 * triples.projection(0), d0 * triples.projection(1)},
                    {d1 * triples.projection(1), d0 * triples.projection(2)}});
    const FGAbHom x = triples.coordinate(0);
    const FGAbHom y = triples.coordinate(1);
    const FGAbHom z = triples.coordinate(2);
    report.expect_equal("associativity", at, compose_hom(st, compose_hom(st, x, y), z),
                        compose_hom(st, x, compose_hom(st, y, z)), "triple generator");
    report.sort();
    return report;
}

Report check_interchange(const CubicalBundle& k, Index n, Index i, Index j)
{
    if (i == j)
        throw std::invalid_argument("check_interchange: directions must differ");
    Report report;
    const SourceTarget sti = source_target(k, n, i);
    const SourceTarget stj = source_target(k, n, j);
    const FGAbHom& di0 = k.face(n, i, 0);
    const FGAbHom& di1 = k.face(n, i, 1);
    const FGAbHom& dj0 = k.face(n, j, 0);
    const FGAbHom& dj1 = k.face(n, j, 1);

    TupleSpace quad(k.group(n), 4);
    const FGAbHom pg = quad.projection(0), ph = quad.projection(1), pk = quad.projection(2), pl = quad.projection(3);
    quad.impose({{di1 * pg, di0 * ph}, {di1 * pk, di0 * pl}, {dj1 * pg, dj0 * pk}, {dj1 * ph, dj0 * pl}});
    const FGAbHom g = quad.coordinate(0), h = quad.coordinate(1), kk = quad.coordinate(2), l = quad.coordinate(3);

    const std::vector<long long> at{n, i, j};
    const FGAbHom gh = compose_hom(sti, g, h);
    const FGAbHom kl = compose_hom(sti, kk, l);
    const FGAbHom gk = compose_hom(stj, g, kk);
    const FGAbHom hl = compose_hom(stj, h, l);
    report.expect_equal("interchange-composable", at, dj1 * gh, dj0 * kl, "quadruple generator");
    report.expect_equal("interchange-composable", at, di1 * gk, di0 * hl, "quadruple generator");
    report.expect_equal("interchange", at, compose_hom(stj, gh, kl), compose_hom(sti, gk, hl), "quadruple generator");
    report.sort();
    return report;
}

Report check_transport(const CubicalBundle& k, Index n, Index i)
{
    if (n >= k.top_degree())
        throw std::out_of_range("check_transport: need n < N");
    Report report;
    const SourceTarget st = source_target(k, n, i);
    const SourceTarget up_i = source_target(k, n + 1, i);
    const SourceTarget up_next = source_target(k, n + 1, i + 1);
    const FGAbHom& gamma = k.connection(n, i);
    const FGAbHom& eps = k.degeneracy(n + 1, i);

    TupleSpace pairs(k.group(n), 2);
    pairs.impose({{k.face(n, i, 1) * pairs.projection(0), k.face(n, i, 0) * pairs.projection(1)}});
    const FGAbHom g = pairs.coordinate(0);
    const FGAbHom h = pairs.coordinate(1);

    const std::vector<long long> at{n, i};
    const FGAbHom inner = compose_hom(up_next, gamma * g, eps * h);
    report.expect_equal("transport-composable", at, k.face(n + 1, i + 1, 1) * gamma * g,
                        k.face(n + 1, i + 1, 0) * eps * h, "pair generator");
    report.expect_equal("transport-composable", at, k.face(n + 1, i, 1) * inner, k.face(n + 1, i, 0) * gamma * h,
                        "pair generator");
    report.expect_equal("transport", at, gamma * compose_hom(st, g, h), compose_hom(up_i, inner, gamma * h),
                        "pair generator");
    report.sort();
    return report;
}

Report check_all_laws(const CubicalBundle& k)
{
    Report report = validate_identities(k);
    for (const Violation& v : report.violations)
    {
        if (v.law == "well-defined")
            return report;
    }
    const Index top = k.top_degree();
    for (Index n = 1; n <= top; ++n)
    {
        for (Index i = 1; i <= n; ++i)
        {
            report.merge(check_groupoid(k, n, i));
            for (Index j = i + 1; j <= n; ++j)
                report.merge(check_interchange(k, n, i, j));
            if (n < top)
                report.merge(check_transport(k, n, i));
        }
    }
    report.sort();
    return report;
}

Report validate_bundle_morphism(const BundleMorphism& f)
{
    Report report;
    const CubicalBundle& a = f.source;
    const CubicalBundle& b = f.target;
    if (a.top_degree() != b.top_degree() || static_cast<Index>(f.components.size()) != a.top_degree() + 1)
    {
        report.add("morphism-shape", {}, "degree mismatch");
        return report;
    }
    for (Index n = 0; n <= a.top_degree(); ++n)
    {
        const FGAbHom& fn = f.components[n];
        if (fn.source() != a.group(n) || fn.target() != b.group(n))
        {
            report.add("morphism-shape", {n}, "component has the wrong source or target");
            return report;
        }
        if (!fn.well_defined())
        {
            report.add("well-defined", {n}, "component");
            return report;
        }
    }
    for (const auto& [key, op] : a.ops())
    {
        auto [from, to] = key_degrees(key);
        report.expect_equal("morphism-commutes", {from, to}, b.ops().at(key) * f.components[from],
                            f.components[to] * op, key + " generator");
    }
    report.sort();
    return report;
}

Report check_morphism_preserves(const BundleMorphism& f)
{
    Report pre = validate_bundle_morphism(f);
    if (!pre.ok())
        throw ValidationError("not a morphism of cubical bundles", pre);
    Report report;
    for (Index n = 1; n <= f.source.top_degree(); ++n)
    {
        const FGAbHom& fn = f.components[n];
        for (Index i = 1; i <= n; ++i)
        {
            const SourceTarget st = source_target(f.source, n, i);
            const SourceTarget image_st = source_target(f.target, n, i);
            TupleSpace pairs(f.source.group(n), 2);
            pairs.impose({{f.source.face(n, i, 1) * pairs.projection(0), f.source.face(n, i, 0) * pairs.projection(1)}});
            const FGAbHom g = pairs.coordinate(0);
            const FGAbHom h = pairs.coordinate(1);
            report.expect_equal("morphism-composable", {n, i}, f.target.face(n, i, 1) * fn * g,
                                f.target.face(n, i, 0) * fn * h, "pair generator");
            report.expect_equal("morphism-preserves", {n, i}, fn * compose_hom(st, g, h),
                                compose_hom(image_st, fn * g, fn * h), "pair generator");
        }
    }
    report.sort();
    return report;
}

}   // namespace cubab
