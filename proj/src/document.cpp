#include "cubab/document.hpp"

#include <map>
#include <set>

#include <json.hpp>

namespace cubab {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message)
{
    throw DocumentError((path.empty() ? std::string("/") : path) + ": " + message);
}

void require_keys(const json& j, const std::string& path, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {})
{
    if (!j.is_object())
        fail(path, "expected an object");
    for (const auto& [key, value] : j.items())
    {
        if (!required.count(key) && !optional.count(key))
            fail(path, "unknown field '" + key + "'");
    }
    for (const std::string& key : required)
    {
        if (!j.contains(key))
            fail(path, "missing field '" + key + "'");
    }
}

Index read_count(const json& j, const std::string& path)
{
    if ((j.is_number_integer() || j.is_number_unsigned()) && j.get<std::int64_t>() >= 0 &&
        j.get<std::int64_t>() <= INT32_MAX)
        return j.get<std::int64_t>();
    fail(path, "expected a nonnegative integer");
}

Integer read_entry(const json& j, const std::string& path)
{
    if (j.is_number_unsigned())
    {
        const std::uint64_t v = j.get<std::uint64_t>();
        return Integer::from_string(std::to_string(v));
    }
    if (j.is_number_integer())
        return Integer(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string())
    {
        try
        {
            return Integer::from_string(j.get<std::string>());
        }
        catch (const std::invalid_argument&)
        {
            fail(path, "invalid integer string");
        }
    }
    fail(path, "expected an integer or a decimal string");
}

IntMatrix read_matrix(const json& j, const std::string& path, Index rows, Index cols)
{
    if (!j.is_array())
        fail(path, "expected an array of rows");
    if (static_cast<Index>(j.size()) != rows)
        fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    IntMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r)
    {
        const std::string row_path = path + "/" + std::to_string(r);
        const json& row = j[r];
        if (!row.is_array())
            fail(row_path, "expected an array");
        if (static_cast<Index>(row.size()) != cols)
            fail(row_path, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
        for (Index c = 0; c < cols; ++c)
            m(r, c) = read_entry(row[c], row_path + "/" + std::to_string(c));
    }
    return m;
}

FGAbGroup read_group(const json& j, const std::string& path, bool nested)
{
    if (nested)
        require_keys(j, path, {"generators", "relations"}, {"kind"});
    else
        require_keys(j, path, {"kind", "generators", "relations"});
    if (j.contains("kind") && j["kind"] != "group")
        fail(path + "/kind", "expected \"group\"");
    const Index g = read_count(j["generators"], path + "/generators");
    const json& rel = j["relations"];
    if (!rel.is_array())
        fail(path + "/relations", "expected an array of rows");
    if (static_cast<Index>(rel.size()) != g)
        fail(path + "/relations", "expected one row per generator");
    const Index cols = (g == 0 || !rel[0].is_array()) ? 0 : static_cast<Index>(rel[0].size());
    return FGAbGroup(g, read_matrix(rel, path + "/relations", g, cols));
}

FGAbHom read_hom_matrix(const json& j, const std::string& path, const FGAbGroup& source, const FGAbGroup& target)
{
    return FGAbHom(source, target, read_matrix(j, path, target.generators(), source.generators()));
}

std::vector<FGAbGroup> read_groups(const json& j, const std::string& path)
{
    if (!j.is_array() || j.empty())
        fail(path, "expected a nonempty array of groups");
    std::vector<FGAbGroup> out;
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(read_group(j[k], path + "/" + std::to_string(k), true));
    return out;
}

ChainComplex read_chain(const json& j)
{
    require_keys(j, "", {"kind", "groups", "boundaries"});
    std::vector<FGAbGroup> groups = read_groups(j["groups"], "/groups");
    const json& b = j["boundaries"];
    if (!b.is_object())
        fail("/boundaries", "expected an object keyed by degree");
    std::set<std::string> keys;
    for (std::size_t n = 1; n < groups.size(); ++n)
        keys.insert(std::to_string(n));
    require_keys(b, "/boundaries", keys);
    std::vector<FGAbHom> boundaries;
    for (std::size_t n = 1; n < groups.size(); ++n)
    {
        const std::string key = std::to_string(n);
        boundaries.push_back(read_hom_matrix(b[key], "/boundaries/" + key, groups[n], groups[n - 1]));
    }
    return ChainComplex(std::move(groups), std::move(boundaries));
}

InternalCrossedComplex read_crossed(const json& j)
{
    require_keys(j, "", {"kind", "C0", "levels"});
    FGAbGroup c0 = read_group(j["C0"], "/C0", true);
    const json& levels = j["levels"];
    if (!levels.is_array())
        fail("/levels", "expected an array");
    if (levels.empty())
        return InternalCrossedComplex(c0);

    const json& l1 = levels[0];
    require_keys(l1, "/levels/0", {"group", "d0", "d1", "eps"});
    FGAbGroup c1 = read_group(l1["group"], "/levels/0/group", true);
    InternalCrossedComplex::GroupoidLevel level1{c1, read_hom_matrix(l1["d0"], "/levels/0/d0", c1, c0),
                                                 read_hom_matrix(l1["d1"], "/levels/0/d1", c1, c0),
                                                 read_hom_matrix(l1["eps"], "/levels/0/eps", c0, c1)};
    std::vector<InternalCrossedComplex::BundleLevel> upper;
    FGAbGroup below = c1;
    for (std::size_t k = 1; k < levels.size(); ++k)
    {
        const std::string path = "/levels/" + std::to_string(k);
        const json& l = levels[k];
        require_keys(l, path, {"group", "p", "eps", "delta"});
        FGAbGroup cn = read_group(l["group"], path + "/group", true);
        upper.push_back({cn, read_hom_matrix(l["p"], path + "/p", cn, c0), read_hom_matrix(l["eps"], path + "/eps", c0, cn),
                         read_hom_matrix(l["delta"], path + "/delta", cn, below)});
        below = cn;
    }
    return InternalCrossedComplex(c0, std::move(level1), std::move(upper));
}

CubicalBundle read_bundle(const json& j)
{
    require_keys(j, "", {"kind", "N", "groups", "ops"});
    const Index top = read_count(j["N"], "/N");
    std::vector<FGAbGroup> groups = read_groups(j["groups"], "/groups");
    if (static_cast<Index>(groups.size()) != top + 1)
        fail("/groups", "expected N + 1 groups");
    const json& ops = j["ops"];
    const std::vector<std::string> keys = required_keys(top);
    require_keys(ops, "/ops", {keys.begin(), keys.end()});
    std::map<std::string, FGAbHom> homs;
    for (const std::string& key : keys)
    {
        const Index n = std::stoll(key.substr(key.find(':') + 1));
        Index from = n, to = n;
        if (key.rfind("face:", 0) == 0)
            to = n - 1;
        else if (key.rfind("deg:", 0) == 0)
            from = n - 1;
        else
            to = n + 1;
        homs.emplace(key, read_hom_matrix(ops[key], "/ops/" + key, groups[from], groups[to]));
    }
    return CubicalBundle(std::move(groups), std::move(homs));
}

json write_matrix(const IntMatrix& m)
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

json write_group(const FGAbGroup& g)
{
    json j;
    j["kind"] = "group";
    j["generators"] = g.generators();
    j["relations"] = write_matrix(g.relations());
    return j;
}

json write_groups(const std::vector<FGAbGroup>& groups)
{
    json out = json::array();
    for (const FGAbGroup& g : groups)
        out.push_back(write_group(g));
    return out;
}

json write(const FGAbGroup& g)
{
    return write_group(g);
}

json write(const FGAbHom& f)
{
    json j;
    j["kind"] = "hom";
    j["source"] = write_group(f.source());
    j["target"] = write_group(f.target());
    j["matrix"] = write_matrix(f.matrix());
    return j;
}

json write(const ChainComplex& a)
{
    json j;
    j["kind"] = "chain";
    j["groups"] = write_groups(a.groups());
    json b = json::object();
    for (Index n = 1; n <= a.top_degree(); ++n)
        b[std::to_string(n)] = write_matrix(a.boundary(n).matrix());
    j["boundaries"] = std::move(b);
    return j;
}

json write(const InternalCrossedComplex& c)
{
    json j;
    j["kind"] = "crossed";
    j["C0"] = write_group(c.group(0));
    json levels = json::array();
    for (Index n = 1; n <= c.top_degree(); ++n)
    {
        json l;
        l["group"] = write_group(c.group(n));
        if (n == 1)
        {
            l["d0"] = write_matrix(c.d0().matrix());
            l["d1"] = write_matrix(c.d1().matrix());
            l["eps"] = write_matrix(c.eps().matrix());
        }
        else
        {
            l["p"] = write_matrix(c.base(n).matrix());
            l["eps"] = write_matrix(c.section(n).matrix());
            l["delta"] = write_matrix(c.boundary(n).matrix());
        }
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    return j;
}

json write(const CubicalBundle& k)
{
    json j;
    j["kind"] = "bundle";
    j["N"] = k.top_degree();
    j["groups"] = write_groups(k.groups());
    json ops = json::object();
    for (const auto& [key, hom] : k.ops())
        ops[key] = write_matrix(hom.matrix());
    j["ops"] = std::move(ops);
    return j;
}

}   // namespace

std::string Document::kind() const
{
    static const char* names[] = {"group", "hom", "chain", "crossed", "bundle"};
    return names[payload.index()];
}

Document parse_document(const std::string& text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw DocumentError("syntax error at byte " + std::to_string(e.byte));
    }
    if (!j.is_object())
        fail("", "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string())
        fail("/kind", "missing or non-string kind");
    const std::string kind = j["kind"].get<std::string>();
    try
    {
        if (kind == "group")
            return {read_group(j, "", false)};
        if (kind == "hom")
        {
            require_keys(j, "", {"kind", "source", "target", "matrix"});
            FGAbGroup source = read_group(j["source"], "/source", true);
            FGAbGroup target = read_group(j["target"], "/target", true);
            return {read_hom_matrix(j["matrix"], "/matrix", source, target)};
        }
        if (kind == "chain")
            return {read_chain(j)};
        if (kind == "crossed")
            return {read_crossed(j)};
        if (kind == "bundle")
            return {read_bundle(j)};
    }
    catch (const std::invalid_argument& e)
    {
        throw DocumentError(std::string("schema error: ") + e.what());
    }
    fail("/kind", "unknown kind '" + kind + "'");
}

std::string serialize_document(const Document& doc)
{
    return std::visit([](const auto& value) { return write(value).dump(2); }, doc.payload) + "\n";
}

IntMatrix parse_matrix_document(const std::string& text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw DocumentError("syntax error at byte " + std::to_string(e.byte));
    }
    if (j.is_object())
    {
        Document doc = parse_document(text);
        if (const auto* f = std::get_if<FGAbHom>(&doc.payload))
            return f->matrix();
        fail("/kind", "expected a matrix or a hom document");
    }
    if (!j.is_array())
        fail("", "expected an array of rows");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = (rows == 0 || !j[0].is_array()) ? 0 : static_cast<Index>(j[0].size());
    return read_matrix(j, "", rows, cols);
}

}   // namespace cubab
