#include "cubab/integer.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cubab {

struct Integer::Big
{
    mpz_class value;
};

namespace {

mpz_class to_mpz(std::int64_t value)
{
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_class(static_cast<long>(value));
}

}   // namespace

void Integer::BigDeleter::operator()(Big* big) const noexcept
{
    delete big;
}

Integer::Integer(BigPtr big) noexcept : big_(std::move(big)) {}

void Integer::copy_big(const Integer& other)
{
    small_ = other.small_;
    big_ = BigPtr(new Big(*other.big_));
}

Integer Integer::from_big(BigPtr big)
{
    if (mpz_fits_slong_p(big->value.get_mpz_t()))
        return Integer(static_cast<long long>(mpz_get_si(big->value.get_mpz_t())));
    return Integer(std::move(big));
}

Integer::BigPtr Integer::as_big() const
{
    if (big_)
        return BigPtr(new Big(*big_));
    return BigPtr(new Big{to_mpz(small_)});
}

Integer Integer::from_string(std::string_view text)
{
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
        throw std::invalid_argument("empty integer literal");
    for (std::size_t k = start; k < s.size(); ++k)
    {
        if (s[k] < '0' || s[k] > '9')
            throw std::invalid_argument("invalid integer literal '" + s + "'");
    }
    if (s[0] == '+')
        s.erase(0, 1);
    BigPtr big(new Big);
    big->value.set_str(s, 10);
    return from_big(std::move(big));
}

int Integer::sign() const noexcept
{
    if (big_)
        return sgn(big_->value);
    return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const
{
    if (big_)
        throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

double Integer::to_double() const
{
    return big_ ? big_->value.get_d() : static_cast<double>(small_);
}

std::string Integer::to_string() const
{
    return big_ ? big_->value.get_str() : std::to_string(small_);
}

Integer& Integer::add_big(const Integer& rhs)
{
    auto big = as_big();
    big->value += rhs.big_ ? rhs.big_->value : to_mpz(rhs.small_);
    return *this = from_big(std::move(big));
}

Integer& Integer::sub_big(const Integer& rhs)
{
    auto big = as_big();
    big->value -= rhs.big_ ? rhs.big_->value : to_mpz(rhs.small_);
    return *this = from_big(std::move(big));
}

Integer& Integer::mul_big(const Integer& rhs)
{
    auto big = as_big();
    big->value *= rhs.big_ ? rhs.big_->value : to_mpz(rhs.small_);
    return *this = from_big(std::move(big));
}

Integer& Integer::operator/=(const Integer& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("integer division by zero");
    if (!big_ && !rhs.big_ && !(small_ == std::numeric_limits<std::int64_t>::min() && rhs.small_ == -1))
    {
        small_ /= rhs.small_;
        return *this;
    }
    auto big = as_big();
    auto divisor = rhs.as_big();
    mpz_tdiv_q(big->value.get_mpz_t(), big->value.get_mpz_t(), divisor->value.get_mpz_t());
    return *this = from_big(std::move(big));
}

Integer& Integer::operator%=(const Integer& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("integer division by zero");
    if (!big_ && !rhs.big_)
    {
        small_ = (rhs.small_ == -1) ? 0 : small_ % rhs.small_;
        return *this;
    }
    auto big = as_big();
    auto divisor = rhs.as_big();
    mpz_tdiv_r(big->value.get_mpz_t(), big->value.get_mpz_t(), divisor->value.get_mpz_t());
    return *this = from_big(std::move(big));
}

Integer Integer::operator-() const
{
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min())
        return Integer(static_cast<long long>(-small_));
    auto big = as_big();
    big->value = -big->value;
    return from_big(std::move(big));
}

int compare(const Integer& lhs, const Integer& rhs) noexcept
{
    if (!lhs.big_ && !rhs.big_)
        return (lhs.small_ > rhs.small_) - (lhs.small_ < rhs.small_);
    if (lhs.big_ && rhs.big_)
        return cmp(lhs.big_->value, rhs.big_->value);
    // A big value never fits in int64, so its sign decides.
    if (lhs.big_)
        return sgn(lhs.big_->value);
    return -sgn(rhs.big_->value);
}

std::ostream& operator<<(std::ostream& os, const Integer& value)
{
    return os << value.to_string();
}

Integer abs(const Integer& value)
{
    return value.sign() < 0 ? -value : value;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer x = abs(a);
    Integer y = abs(b);
    while (!y.is_zero())
    {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a.is_zero() || b.is_zero())
        return 0;
    return abs(a / gcd(a, b) * b);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    Integer r = a - q * b;
    if (!r.is_zero() && (r.sign() != b.sign()))
        q -= 1;
    return q;
}

Integer floor_mod(const Integer& a, const Integer& b)
{
    return a - floor_div(a, b) * b;
}

}   // namespace cubab
