// Acceptance run: one line per criterion, nonzero exit if any fails.
// All comparisons are exact integer equalities; there is no numeric tolerance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cubab/cli.hpp"
#include "cubab/crossed.hpp"
#include "cubab/cubical.hpp"
#include "cubab/document.hpp"
#include "cubab/nerve.hpp"
#include "cubab/normal_form.hpp"
#include "cubab/random.hpp"
#include "oracles.hpp"

using namespace cubab;

namespace {

constexpr int snf_cases = 500;
constexpr Index snf_max_size = 8;
constexpr long long snf_entry_bound = 50;
constexpr int equivalence_cases = 100;
constexpr int nerve_cases = 50;
constexpr int roundtrip_cases = 50;
constexpr int naturality_maps_required = 20;

// Thrown by check() to abort the current criterion with a message.
struct Failure
{
    std::string what;
};

void check(bool condition, const std::string& what)
{
    if (!condition)
        throw Failure{what};
}

void check_report(const Report& r, const std::string& what)
{
    if (!r.ok())
        throw Failure{what + ": " + r.summary()};
}

bool unimodular(const IntMatrix& a, const IntMatrix& a_inverse)
{
    const Index n = a.rows();
    return multiply(a, a_inverse) == IntMatrix::Identity(n, n) && multiply(a_inverse, a) == IntMatrix::Identity(n, n);
}

std::string criterion_snf()
{
    Rng rng(2024);
    for (int trial = 0; trial < snf_cases; ++trial)
    {
        const Index rows = rng.uniform(1, snf_max_size), cols = rng.uniform(1, snf_max_size);
        IntMatrix m = random_matrix(rows, cols, snf_entry_bound, rng);
        if (trial % 4 == 0 && rows > 2)
            m.row(rows - 1) = m.row(0) - m.row(1);
        const SmithForm<Integer> s = smith_normal_form(m);
        const std::string at = "case " + std::to_string(trial);
        check(multiply(multiply(s.U, m), s.V) == s.D, at + ": U M V != D");
        check(unimodular(s.U, s.U_inverse), at + ": U not unimodular");
        check(unimodular(s.V, s.V_inverse), at + ": V not unimodular");
        for (Index i = 0; i < rows; ++i)
        {
            for (Index j = 0; j < cols; ++j)
            {
                if (i != j || i >= s.rank())
                    check(s.D(i, j).is_zero(), at + ": D not diagonal");
                else
                    check(s.D(i, j) == s.invariant_factors[i] && s.D(i, j) > Integer(0), at + ": bad diagonal");
            }
        }
        for (std::size_t k = 1; k < s.invariant_factors.size(); ++k)
            check((s.invariant_factors[k] % s.invariant_factors[k - 1]).is_zero(), at + ": divisibility fails");
    }
    const oracle::Grid example{{2, 4}, {6, 8}};
    check(oracle::determinantal_factors(example) == std::vector<long long>{2, 4}, "oracle disagrees on [[2,4],[6,8]]");
    const SmithForm<Integer> s = smith_normal_form(oracle::from_grid(example));
    check(s.invariant_factors == std::vector<Integer>{2, 4}, "snf([[2,4],[6,8]]) factors");
    return std::to_string(snf_cases) + " matrices up to 8x8; [[2,4],[6,8]] -> (2,4)";
}

std::string criterion_homology()
{
    const ChainComplex a = oracle::rp2_like();
    const FGAbGroup h0 = homology(a, 0), h1 = homology(a, 1), h2 = homology(a, 2);
    check(h0.free_rank() == 1 && h0.torsion().empty(), "H0 != Z");
    check(h1.free_rank() == 0 && oracle::torsion_of(h1) == std::vector<long long>{2}, "H1 != Z/2");
    check(h2.is_trivial(), "H2 != 0");
    return "H0 = Z, H1 = Z/2, H2 = 0";
}

std::string criterion_equivalence()
{
    for (int trial = 0; trial < equivalence_cases; ++trial)
    {
        const std::string at = "complex " + std::to_string(trial);
        const ChainComplex a = random_complex(trial % 5, 3, 6, 3000 + trial);
        const InternalCrossedComplex c = beta(a);
        check_report(validate_crossed(c), at + ": beta output invalid");

        const ChainIso u = unit_iso(a);
        check_report(validate_chain_map(u.forward), at + ": unit not a chain map");
        check_report(validate_chain_map(u.backward), at + ": unit inverse not a chain map");
        check_report(compare_chain_maps(compose(u.backward, u.forward), ChainMap::identity(a)), at + ": unit left inverse");
        check_report(compare_chain_maps(compose(u.forward, u.backward), ChainMap::identity(u.forward.target)),
                     at + ": unit right inverse");

        const CrossedIso e = counit_iso(c);
        check_report(validate_crossed_morphism(e.forward), at + ": counit not a morphism");
        check_report(validate_crossed_morphism(e.backward), at + ": counit inverse not a morphism");
        check_report(compare_crossed_morphisms(compose(e.backward, e.forward), identity_morphism(e.forward.source), "id"),
                     at + ": counit left inverse");
        check_report(compare_crossed_morphisms(compose(e.forward, e.backward), identity_morphism(c), "id"),
                     at + ": counit right inverse");

        const ChainComplex back = alpha(c);
        for (Index n = 0; n <= a.top_degree(); ++n)
        {
            check(back.group(n).torsion() == a.group(n).torsion() && back.group(n).free_rank() == a.group(n).free_rank(),
                  at + ": alpha beta changes invariant factors in degree " + std::to_string(n));
        }
    }
    return std::to_string(equivalence_cases) + " complexes, top degree <= 4";
}

IntVector v2(const Integer& x, const Integer& y)
{
    IntVector v(2);
    v << x, y;
    return v;
}

// Exhaustive compose1 and act checks on beta(A0 <- A1 <- A2) with d1 = k and d2 = 0.
void formula_cases(const FGAbGroup& g, long long d, long long range_lo, long long range_hi, int& cases)
{
    const ChainComplex a({g, g, g}, {FGAbHom(g, g, oracle::from_grid({{d}})), FGAbHom::zero(g, g)});
    const InternalCrossedComplex c = beta(a);
    check_report(validate_crossed(c), "beta invalid");
    for (long long x = range_lo; x <= range_hi; ++x)
    {
        for (long long y = range_lo; y <= range_hi; ++y)
        {
            for (long long z = range_lo; z <= range_hi; ++z)
            {
                const Integer ia(x), ib(y), ic(z), dd(d);
                const FGAbElement first(c.group(1), v2(ia, ib));
                const FGAbElement second(c.group(1), v2(ia + dd * ib, ic));
                check(compose1(c, first, second) == FGAbElement(c.group(1), v2(ia, ib + ic)), "compose1 formula");

                const FGAbElement m(c.group(2), v2(ia, ib));
                const FGAbElement arrow(c.group(1), v2(ia, ic));
                const FGAbElement moved = act(c, 2, m, arrow);
                check(moved == FGAbElement(c.group(2), v2(ia + dd * ic, ib)), "act formula");
                const bool loop = FGAbElement(g, c.d0().apply(arrow.coords)) == FGAbElement(g, c.d1().apply(arrow.coords));
                if (loop)
                    check(moved == m, "action of a loop is not trivial");
                ++cases;
            }
        }
    }
}

std::string criterion_formulas()
{
    int cases = 0;
    const FGAbGroup z4 = FGAbGroup::cyclic({4});
    for (long long d = 0; d < 4; ++d)
        formula_cases(z4, d, 0, 3, cases);
    const FGAbGroup z = FGAbGroup::free(1);
    for (long long d = -2; d <= 2; ++d)
        formula_cases(z, d, -3, 3, cases);
    return std::to_string(cases) + " exhaustive cases over Z/4 and Z";
}

std::vector<CubicalBundle> groupoid_bundles()
{
    std::vector<CubicalBundle> out;
    for (Index top = 0; top <= 3; ++top)
        out.push_back(constant_bundle(FGAbGroup::cyclic({2, 0}), top));
    for (int k = 0; k < 12; ++k)
    {
        const Index top = k % 4;
        out.push_back(nerve(random_complex(std::min<Index>(top, 2), 2, 6, 5000 + k), top).bundle);
    }
    // Bundles with a corrupted operator; only those that still pass the identities are tested.
    for (int k = 0; k < 6; ++k)
    {
        const CubicalBundle base = nerve(random_complex(1, 2, 6, 5100 + k), 2).bundle;
        std::map<std::string, FGAbHom> ops = base.ops();
        auto it = std::next(ops.begin(), k % static_cast<long>(ops.size()));
        it->second = Integer(k % 2 ? 1 : 0) * it->second;
        out.emplace_back(base.groups(), ops);
    }
    return out;
}

std::string criterion_groupoid()
{
    int tested = 0, skipped = 0;
    for (const CubicalBundle& k : groupoid_bundles())
    {
        if (!validate_identities(k).ok())
        {
            ++skipped;
            continue;
        }
        for (Index n = 1; n <= k.top_degree(); ++n)
        {
            for (Index i = 1; i <= n; ++i)
                check_report(check_groupoid(k, n, i), "groupoid laws at n=" + std::to_string(n));
        }
        ++tested;
    }
    check(tested > 0, "no bundle passed its identities");
    return std::to_string(tested) + " bundles (" + std::to_string(skipped) + " invalid skipped)";
}

std::string criterion_nerve_laws()
{
    int morphisms = 0;
    for (int trial = 0; trial < nerve_cases; ++trial)
    {
        const std::string at = "complex " + std::to_string(trial);
        const Index top = 1 + trial % 3;
        const ChainComplex a = random_complex(top, 3, 6, 7000 + trial);
        const NerveBundle nb = nerve(a, top);
        const CubicalBundle& k = nb.bundle;
        check_report(validate_identities(k), at + ": identities");
        for (Index n = 1; n <= top; ++n)
        {
            for (Index i = 1; i <= n; ++i)
            {
                for (Index j = i + 1; j <= n; ++j)
                    check_report(check_interchange(k, n, i, j), at + ": interchange");
                if (n < top)
                    check_report(check_transport(k, n, i), at + ": transport");
            }
        }
        if (trial % 5 == 0)
        {
            const BundleMorphism f = nerve(random_chain_endomorphism(a, 7100 + trial), nb, nb);
            check_report(check_morphism_preserves(f), at + ": morphism preservation");
            ++morphisms;
        }
    }
    return std::to_string(nerve_cases) + " nerve bundles with N <= 3, " + std::to_string(morphisms) + " morphisms";
}

std::string criterion_cellular()
{
    check_report(validate_cellular_operators(4), "cellular chain-map equation");
    check_report(check_cellular_identities(4), "cellular identity table");
    for (Index n = 0; n <= 4; ++n)
    {
        const ChainComplex q = cube_complex(n).complex;
        check(homology(q, 0).free_rank() == 1 && homology(q, 0).torsion().empty(), "H0 of cube");
        for (Index k = 1; k <= n; ++k)
            check(homology(q, k).is_trivial(), "higher homology of cube");
    }
    return "operators, C1-C6 and point homology for n <= 4";
}

// Z/m concentrated in degree k.
ChainComplex torsion_summand(long long m, Index k)
{
    std::vector<FGAbGroup> groups(k + 1, FGAbGroup());
    groups[k] = FGAbGroup::cyclic({m});
    std::vector<FGAbHom> boundaries;
    for (Index n = 1; n <= k; ++n)
        boundaries.push_back(FGAbHom::zero(groups[n], groups[n - 1]));
    return ChainComplex(groups, boundaries);
}

std::string criterion_roundtrip()
{
    int maps = 0;
    const long long orders[] = {2, 4, 6};
    for (int trial = 0; trial < roundtrip_cases; ++trial)
    {
        const Index top = trial % 4;
        ChainComplex a = random_complex(top, 3, 6, 9000 + trial);
        a = direct_sum(a, torsion_summand(orders[trial % 3], trial % (top + 1)));
        const int trials = 1;
        const RoundTrip rt = roundtrip_nerve(a, top, trials, 9500 + trial);
        check_report(rt.report, "complex " + std::to_string(trial));
        maps += trials;
    }
    check(maps >= naturality_maps_required, "too few naturality maps");
    return std::to_string(roundtrip_cases) + " complexes with Z/2, Z/4, Z/6 summands, " + std::to_string(maps) +
           " naturality maps";
}

int run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    return run(args, out, err);
}

std::string criterion_cli()
{
    std::vector<Document> corpus{{FGAbGroup::cyclic({2, 0})}, {oracle::rp2_like()}, {beta(oracle::rp2_like())},
                                 {nerve(oracle::rp2_like(), 2).bundle}};
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        corpus.push_back({random_complex(static_cast<Index>(seed % 4), 3, 6, seed)});
    for (const Document& doc : corpus)
    {
        const std::string text = serialize_document(doc);
        check(serialize_document(parse_document(text)) == text, "round trip not byte-stable for " + doc.kind());
    }
    const std::string dir = CUBAB_FIXTURES;
    check(run_cli({"homology", dir + "/rp2_like.json", "--degree", "1"}) == exit_ok, "valid complex");
    check(run_cli({"roundtrip", dir + "/rp2_like.json", "--max-dim", "2"}) == exit_ok, "valid roundtrip");
    check(run_cli({"homology", dir + "/invalid_chain.json", "--degree", "0"}) == exit_violation, "invalid complex");
    check(run_cli({"nerve", dir + "/invalid_chain.json", "--max-dim", "2"}) == exit_violation, "invalid nerve");
    check(run_cli({"homology", dir + "/malformed.json", "--degree", "0"}) == exit_input_error, "malformed file");
    check(run_cli({"laws", dir + "/malformed.json"}) == exit_input_error, "malformed bundle");
    return std::to_string(corpus.size()) + " documents, 6 fixture invocations";
}

}   // namespace

int main()
{
    const std::vector<std::pair<int, std::function<std::string()>>> criteria{
        {1, criterion_snf},        {2, criterion_homology},   {3, criterion_equivalence},
        {4, criterion_formulas},   {5, criterion_groupoid},      {6, criterion_nerve_laws},
        {7, criterion_cellular},   {8, criterion_roundtrip},  {9, criterion_cli}};
    int failures = 0;
    for (const auto& [id, body] : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        std::string line;
        bool passed = false;
        try
        {
            line = body();
            passed = true;
        }
        catch (const Failure& f)
        {
            line = f.what;
        }
        catch (const std::exception& e)
        {
            line = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s  %s  (%.2fs)\n", id, passed ? "PASS" : "FAIL", line.c_str(), seconds);
        std::fflush(stdout);
        failures += passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
