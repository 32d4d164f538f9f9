#include "cubab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubab/document.hpp"
#include "cubab/nerve.hpp"

namespace cubab {

using json = nlohmann::ordered_json;

namespace {

class InputError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

template <class T>
T read_as(const std::string& path, const char* kind)
{
    Document doc = parse_document(read_file(path));
    if (auto* value = std::get_if<T>(&doc.payload))
        return std::move(*value);
    throw InputError(path + ": expected a " + std::string(kind) + " document, found " + doc.kind());
}

json matrix_json(const IntMatrix& m)
{
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r)
    {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json violations_json(const Report& report)
{
    json out = json::array();
    for (const Violation& v : report.violations)
    {
        json item;
        item["law"] = v.law;
        item["indices"] = v.indices;
        item["witness"] = v.witness;
        out.push_back(std::move(item));
    }
    return out;
}

json group_summary(const FGAbGroup& g)
{
    json out;
    json torsion = json::array();
    for (const Integer& d : g.torsion())
        torsion.push_back(d.to_string());
    out["invariant_factors"] = std::move(torsion);
    out["free_rank"] = g.free_rank();
    return out;
}

struct Outcome
{
    json report;
    int code = exit_ok;
};

Outcome start(const std::string& command)
{
    Outcome o;
    o.report["command"] = command;
    o.report["status"] = "ok";
    o.report["violations"] = json::array();
    return o;
}

void record(Outcome& o, const Report& report)
{
    if (report.ok())
        return;
    o.report["status"] = "violation";
    o.report["violations"] = violations_json(report);
    o.code = exit_violation;
}

void emit_document(Outcome& o, const Document& doc, const std::string& path)
{
    const std::string text = serialize_document(doc);
    if (path.empty())
    {
        o.report["document"] = json::parse(text);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text))
        throw InputError("cannot write " + path);
    o.report["output"] = path;
}

bool require_valid_chain(Outcome& o, const ChainComplex& a)
{
    Report report = validate_chain(a);
    record(o, report);
    return report.ok();
}

Outcome cmd_homology(const std::string& path, long long degree)
{
    Outcome o = start("homology");
    const ChainComplex a = read_as<ChainComplex>(path, "chain");
    if (!require_valid_chain(o, a))
        return o;
    if (degree < 0 || degree > a.top_degree())
        throw InputError("degree " + std::to_string(degree) + " out of range 0.." + std::to_string(a.top_degree()));
    o.report["degree"] = degree;
    o.report.update(group_summary(homology(a, degree)));
    return o;
}

Outcome cmd_laws(const std::string& path)
{
    Outcome o = start("laws");
    const CubicalBundle k = read_as<CubicalBundle>(path, "bundle");
    o.report["N"] = k.top_degree();
    record(o, check_all_laws(k));
    return o;
}

Outcome cmd_nerve(const std::string& path, long long top, const std::string& output)
{
    Outcome o = start("nerve");
    const ChainComplex a = read_as<ChainComplex>(path, "chain");
    if (!require_valid_chain(o, a))
        return o;
    if (top < a.top_degree() || top > max_cube_dimension)
        throw InputError("--max-dim must lie between the complex's top degree and " + std::to_string(max_cube_dimension));
    o.report["N"] = top;
    emit_document(o, {nerve(a, top).bundle}, output);
    return o;
}

Outcome cmd_normalize(const std::string& path, const std::string& output)
{
    Outcome o = start("normalize");
    const CubicalBundle k = read_as<CubicalBundle>(path, "bundle");
    Report report = validate_identities(k);
    record(o, report);
    if (!report.ok())
        return o;
    emit_document(o, {normalize(k)}, output);
    return o;
}

Outcome cmd_roundtrip(const std::string& path, long long top, int trials, std::uint64_t seed)
{
    Outcome o = start("roundtrip");
    const ChainComplex a = read_as<ChainComplex>(path, "chain");
    if (!require_valid_chain(o, a))
        return o;
    if (top < a.top_degree() || top > max_cube_dimension)
        throw InputError("--max-dim must lie between the complex's top degree and " + std::to_string(max_cube_dimension));
    RoundTrip rt = roundtrip_nerve(a, top, trials, seed);
    o.report["N"] = top;
    json degrees = json::array();
    for (Index n = 0; n <= top; ++n)
    {
        json d;
        d["degree"] = n;
        d["source"] = group_summary(rt.eta.source.group(n));
        d["normalized"] = group_summary(rt.eta.target.group(n));
        degrees.push_back(std::move(d));
    }
    o.report["degrees"] = std::move(degrees);
    record(o, rt.report);
    return o;
}

Outcome cmd_alpha(const std::string& path, const std::string& output)
{
    Outcome o = start("crossed alpha");
    const InternalCrossedComplex c = read_as<InternalCrossedComplex>(path, "crossed");
    Report report = validate_crossed(c);
    record(o, report);
    if (!report.ok())
        return o;
    emit_document(o, {alpha(c)}, output);
    return o;
}

Outcome cmd_beta(const std::string& path, const std::string& output)
{
    Outcome o = start("crossed beta");
    const ChainComplex a = read_as<ChainComplex>(path, "chain");
    if (!require_valid_chain(o, a))
        return o;
    emit_document(o, {beta(a)}, output);
    return o;
}

Outcome cmd_snf(const std::string& path)
{
    Outcome o = start("snf");
    const IntMatrix m = parse_matrix_document(read_file(path));
    const SmithForm<Integer> s = smith_normal_form(m);
    json factors = json::array();
    for (const Integer& d : s.invariant_factors)
        factors.push_back(d.to_string());
    o.report["invariant_factors"] = std::move(factors);
    o.report["D"] = matrix_json(s.D);
    o.report["U"] = matrix_json(s.U);
    o.report["V"] = matrix_json(s.V);
    return o;
}

Outcome failure(const std::string& command, const std::string& message, int code)
{
    Outcome o = start(command);
    o.report["status"] = "error";
    o.report["error"] = message;
    o.code = code;
    return o;
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chain complexes, crossed complexes and cubical groups with connections"};
    app.require_subcommand(1);

    std::string input, output;
    long long degree = 0;
    long long top = 0;
    int trials = 3;
    std::uint64_t seed = 1;

    auto* homology_cmd = app.add_subcommand("homology", "Homology of a chain complex in one degree");
    homology_cmd->add_option("chain", input, "Chain complex document")->required();
    homology_cmd->add_option("--degree", degree, "Degree")->required();

    auto* laws_cmd = app.add_subcommand("laws", "Check every cubical and groupoid law of a bundle");
    laws_cmd->add_option("bundle", input, "Bundle document")->required();

    auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a chain complex");
    nerve_cmd->add_option("chain", input, "Chain complex document")->required();
    nerve_cmd->add_option("--max-dim", top, "Top cube dimension")->required();
    nerve_cmd->add_option("-o,--output", output, "Bundle output file");

    auto* normalize_cmd = app.add_subcommand("normalize", "Normalized chains of a bundle");
    normalize_cmd->add_option("bundle", input, "Bundle document")->required();
    normalize_cmd->add_option("-o,--output", output, "Chain output file");

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check that normalize(nerve(A)) is naturally isomorphic to A");
    roundtrip_cmd->add_option("chain", input, "Chain complex document")->required();
    roundtrip_cmd->add_option("--max-dim", top, "Top cube dimension")->required();
    roundtrip_cmd->add_option("--trials", trials, "Random chain maps used for naturality")->check(CLI::Range(0, 1000));
    roundtrip_cmd->add_option("--seed", seed, "Seed for the random chain maps");

    auto* crossed_cmd = app.add_subcommand("crossed", "Functors between chain and crossed complexes");
    crossed_cmd->require_subcommand(1);
    auto* alpha_cmd = crossed_cmd->add_subcommand("alpha", "Associated chain complex of a crossed complex");
    alpha_cmd->add_option("crossed", input, "Crossed complex document")->required();
    alpha_cmd->add_option("-o,--output", output, "Chain output file");
    auto* beta_cmd = crossed_cmd->add_subcommand("beta", "Crossed complex of a chain complex");
    beta_cmd->add_option("chain", input, "Chain complex document")->required();
    beta_cmd->add_option("-o,--output", output, "Crossed output file");

    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf_cmd->add_option("matrix", input, "Matrix or hom document")->required();

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    std::string command = app.get_subcommands().front()->get_name();
    if (crossed_cmd->parsed())
        command += " " + crossed_cmd->get_subcommands().front()->get_name();
    Outcome outcome;
    try
    {
        if (homology_cmd->parsed())
            outcome = cmd_homology(input, degree);
        else if (laws_cmd->parsed())
            outcome = cmd_laws(input);
        else if (nerve_cmd->parsed())
            outcome = cmd_nerve(input, top, output);
        else if (normalize_cmd->parsed())
            outcome = cmd_normalize(input, output);
        else if (roundtrip_cmd->parsed())
            outcome = cmd_roundtrip(input, top, trials, seed);
        else if (alpha_cmd->parsed())
            outcome = cmd_alpha(input, output);
        else if (beta_cmd->parsed())
            outcome = cmd_beta(input, output);
        else if (snf_cmd->parsed())
            outcome = cmd_snf(input);
    }
    catch (const ValidationError& e)
    {
        outcome = failure(command, e.what(), exit_violation);
        outcome.report["status"] = "violation";
        outcome.report["violations"] = violations_json(e.report());
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        outcome = failure(command, e.what(), exit_input_error);
    }
    catch (...)
    {
        err << "error: unknown failure\n";
        outcome = failure(command, "unknown failure", exit_input_error);
    }
    out << outcome.report.dump(2) << "\n";
    return outcome.code;
}

}   // namespace cubab
