#include <catch_amalgamated.hpp>

#include "cubab/document.hpp"
#include "cubab/nerve.hpp"
#include "cubab/random.hpp"
#include "oracles.hpp"

using namespace cubab;

namespace {

void check_round_trip(const Document& doc, const std::string& kind)
{
    const std::string text = serialize_document(doc);
    REQUIRE(text.back() == '\n');
    const Document back = parse_document(text);
    REQUIRE(back.kind() == kind);
    REQUIRE(serialize_document(back) == text);
}

std::string error_of(const std::string& text)
{
    try
    {
        parse_document(text);
    }
    catch (const DocumentError& e)
    {
        return e.what();
    }
    return "";
}

}   // namespace

TEST_CASE("every kind survives a byte-stable round trip")
{
    check_round_trip({FGAbGroup::cyclic({2, 0})}, "group");
    check_round_trip({FGAbHom(FGAbGroup::free(2), FGAbGroup::cyclic({6}), oracle::from_grid({{1, -4}}))}, "hom");
    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        const ChainComplex a = random_complex(static_cast<Index>(seed % 4), 3, 6, seed);
        check_round_trip({a}, "chain");
        check_round_trip({beta(a)}, "crossed");
    }
    check_round_trip({InternalCrossedComplex(FGAbGroup::free(1))}, "crossed");
    check_round_trip({nerve(oracle::rp2_like(), 2).bundle}, "bundle");
    check_round_trip({constant_bundle(FGAbGroup::cyclic({4}), 0)}, "bundle");
}

TEST_CASE("parsed chains keep their structure")
{
    const Document doc = parse_document(R"({"kind": "chain",
        "groups": [{"generators": 1, "relations": [[]]}, {"kind": "group", "generators": 1, "relations": [[]]}],
        "boundaries": {"1": [[2]]}})");
    const ChainComplex& a = std::get<ChainComplex>(doc.payload);
    CHECK(a.top_degree() == 1);
    CHECK(a.boundary(1).matrix() == oracle::from_grid({{2}}));
}

TEST_CASE("large entries are written as decimal strings")
{
    const Document doc = parse_document(R"({"kind": "group", "generators": 1, "relations": [["123456789012345678901234567890"]]})");
    const std::string text = serialize_document(doc);
    CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected with a location")
{
    CHECK(error_of("{\"kind\": ").find("syntax error at byte") == 0);
    CHECK_FALSE(error_of(R"({"kind": "group", "generators": 1, "relations": [[]], "extra": 1})").empty());
    CHECK_FALSE(error_of(R"({"kind": "group", "generators": 2, "relations": [[]]})").empty());
    CHECK_FALSE(error_of(R"({"kind": "nothing"})").empty());
    CHECK_FALSE(error_of(R"({"kind": "group", "generators": 1, "relations": [["x"]]})").empty());
    CHECK_FALSE(error_of(R"([1, 2])").empty());
    // Boundary with the wrong shape.
    CHECK_FALSE(error_of(R"({"kind": "chain",
        "groups": [{"generators": 1, "relations": [[]]}, {"generators": 1, "relations": [[]]}],
        "boundaries": {"1": [[1, 2]]}})")
                    .empty());
    // Missing operator.
    CHECK_FALSE(error_of(R"({"kind": "bundle", "N": 1,
        "groups": [{"generators": 1, "relations": [[]]}, {"generators": 1, "relations": [[]]}],
        "ops": {"face:1:1:0": [[1]], "face:1:1:1": [[1]]}})")
                    .empty());
}

TEST_CASE("matrix documents")
{
    CHECK(parse_matrix_document("[[2, 4], [6, 8]]") == oracle::from_grid({{2, 4}, {6, 8}}));
    const std::string hom = serialize_document({FGAbHom::identity(FGAbGroup::free(2))});
    CHECK(parse_matrix_document(hom) == oracle::from_grid({{1, 0}, {0, 1}}));
    CHECK_THROWS_AS(parse_matrix_document("[[1, 2], [3]]"), DocumentError);
}
