#include <catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "cubab/integer.hpp"

using cubab::Integer;

namespace {

std::string to_string128(__int128 v)
{
    if (v == 0)
        return "0";
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u)
    {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return negative ? "-" + s : s;
}

Integer from128(__int128 v)
{
    return Integer::from_string(to_string128(v));
}

}   // namespace

TEST_CASE("small arithmetic agrees with built-in integers")
{
    CHECK(Integer(7) + Integer(-3) == Integer(4));
    CHECK(Integer(7) * Integer(-3) == Integer(-21));
    CHECK(Integer(-7) / Integer(2) == Integer(-3));
    CHECK(Integer(-7) % Integer(2) == Integer(-1));
    CHECK(cubab::floor_div(Integer(-7), Integer(2)) == Integer(-4));
    CHECK(cubab::floor_mod(Integer(-7), Integer(2)) == Integer(1));
    CHECK(cubab::gcd(Integer(-12), Integer(18)) == Integer(6));
    CHECK(cubab::lcm(Integer(4), Integer(6)) == Integer(12));
    CHECK(cubab::gcd(Integer(0), Integer(0)) == Integer(0));
}

TEST_CASE("overflow promotes to arbitrary precision")
{
    const Integer max = std::numeric_limits<std::int64_t>::max();
    Integer x = max + Integer(1);
    CHECK_FALSE(x.is_small());
    CHECK(x.to_string() == "9223372036854775808");
    CHECK((x - Integer(1)).is_small());
    CHECK((x - Integer(1)) == max);

    Integer square = max * max;
    CHECK(square.to_string() == "85070591730234615847396907784232501249");
    CHECK(square / max == max);
    CHECK(square % max == Integer(0));

    const Integer min = std::numeric_limits<std::int64_t>::min();
    CHECK((-min).to_string() == "9223372036854775808");
    CHECK((min / Integer(-1)).to_string() == "9223372036854775808");
    CHECK_THROWS_AS(x.to_int64(), std::overflow_error);
}

TEST_CASE("random operations match 128-bit arithmetic")
{
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> wide(std::numeric_limits<std::int64_t>::min() / 2,
                                                     std::numeric_limits<std::int64_t>::max() / 2);
    for (int trial = 0; trial < 2000; ++trial)
    {
        const __int128 a = wide(rng);
        const __int128 b = wide(rng);
        const Integer x = from128(a), y = from128(b);
        REQUIRE((x + y).to_string() == to_string128(a + b));
        REQUIRE((x - y).to_string() == to_string128(a - b));
        REQUIRE((x * y).to_string() == to_string128(a * b));
        if (b != 0)
        {
            REQUIRE((x / y).to_string() == to_string128(a / b));
            REQUIRE((x % y).to_string() == to_string128(a % b));
        }
        // Mixed big and small operands after promotion.
        const __int128 big = a * 1000003;
        const Integer z = x * Integer(1000003);
        REQUIRE(z.to_string() == to_string128(big));
        REQUIRE((z + y).to_string() == to_string128(big + b));
        REQUIRE((z < y) == (big < b));
        REQUIRE((z == from128(big)));
    }
}

TEST_CASE("string parsing rejects malformed literals")
{
    CHECK(Integer::from_string("+15") == Integer(15));
    CHECK(Integer::from_string("-0") == Integer(0));
    CHECK_THROWS_AS(Integer::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Integer::from_string("-"), std::invalid_argument);
    CHECK_THROWS_AS(Integer::from_string("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Integer::from_string(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Integer(1) / Integer(0), std::domain_error);
}
