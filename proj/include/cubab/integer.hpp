/**
 * Exact integers with an int64 fast path.
 *
 * Values that fit in a signed 64-bit word are stored inline; every
 * operation checks for overflow and promotes to a GMP integer when needed.
 * Results are demoted back to the inline form whenever they fit, so the
 * representation of a value is unique.
 */

#ifndef CUBAB_INTEGER_HPP
#define CUBAB_INTEGER_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace cubab {

class Integer
{
    public:
        Integer() noexcept = default;
        Integer(int value) noexcept : small_(value) {}
        Integer(long value) noexcept : small_(value) {}
        Integer(long long value) noexcept : small_(value) {}

        /// Parses an optionally signed decimal string; throws std::invalid_argument.
        static Integer from_string(std::string_view text);

        Integer(const Integer& other) : small_(other.small_)
        {
            if (other.big_)
                copy_big(other);
        }
        Integer(Integer&& other) noexcept = default;
        Integer& operator=(const Integer& other)
        {
            if (!other.big_)
            {
                small_ = other.small_;
                big_.reset();
            }
            else if (this != &other)
            {
                copy_big(other);
            }
            return *this;
        }
        Integer& operator=(Integer&& other) noexcept = default;
        ~Integer() = default;

        bool is_small() const noexcept { return !big_; }
        bool is_zero() const noexcept { return !big_ && small_ == 0; }
        int sign() const noexcept;

        /// Value as int64; throws std::overflow_error when it does not fit.
        std::int64_t to_int64() const;
        double to_double() const;
        std::string to_string() const;

        Integer& operator+=(const Integer& rhs)
        {
            std::int64_t out;
            if (!big_ && !rhs.big_ && !__builtin_add_overflow(small_, rhs.small_, &out))
            {
                small_ = out;
                return *this;
            }
            return add_big(rhs);
        }
        Integer& operator-=(const Integer& rhs)
        {
            std::int64_t out;
            if (!big_ && !rhs.big_ && !__builtin_sub_overflow(small_, rhs.small_, &out))
            {
                small_ = out;
                return *this;
            }
            return sub_big(rhs);
        }
        Integer& operator*=(const Integer& rhs)
        {
            std::int64_t out;
            if (!big_ && !rhs.big_ && !__builtin_mul_overflow(small_, rhs.small_, &out))
            {
                small_ = out;
                return *this;
            }
            return mul_big(rhs);
        }
        /// Truncating division, as for built-in integers.
        Integer& operator/=(const Integer& rhs);
        /// Remainder with the sign of the dividend.
        Integer& operator%=(const Integer& rhs);

        Integer operator-() const;

        friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
        friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
        friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
        friend Integer operator/(Integer lhs, const Integer& rhs) { return lhs /= rhs; }
        friend Integer operator%(Integer lhs, const Integer& rhs) { return lhs %= rhs; }

        friend int compare(const Integer& lhs, const Integer& rhs) noexcept;
        friend bool operator==(const Integer& lhs, const Integer& rhs) noexcept
        {
            if (!lhs.big_ && !rhs.big_)
                return lhs.small_ == rhs.small_;
            return compare(lhs, rhs) == 0;
        }
        friend bool operator<(const Integer& lhs, const Integer& rhs) noexcept
        {
            if (!lhs.big_ && !rhs.big_)
                return lhs.small_ < rhs.small_;
            return compare(lhs, rhs) < 0;
        }
        friend bool operator!=(const Integer& a, const Integer& b) noexcept { return !(a == b); }
        friend bool operator>(const Integer& a, const Integer& b) noexcept { return b < a; }
        friend bool operator<=(const Integer& a, const Integer& b) noexcept { return !(b < a); }
        friend bool operator>=(const Integer& a, const Integer& b) noexcept { return !(a < b); }

        friend std::ostream& operator<<(std::ostream& os, const Integer& value);

    private:
        struct Big;
        struct BigDeleter
        {
            void operator()(Big* big) const noexcept;
        };
        using BigPtr = std::unique_ptr<Big, BigDeleter>;

        explicit Integer(BigPtr big) noexcept;
        static Integer from_big(BigPtr big);
        BigPtr as_big() const;
        void copy_big(const Integer& other);
        Integer& add_big(const Integer& rhs);
        Integer& sub_big(const Integer& rhs);
        Integer& mul_big(const Integer& rhs);

        std::int64_t small_ = 0;
        BigPtr big_;
};

Integer abs(const Integer& value);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor division and the matching nonnegative-for-positive-divisor remainder.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

using Index = Eigen::Index;

}   // namespace cubab

namespace Eigen {

template <>
struct NumTraits<cubab::Integer> : GenericNumTraits<cubab::Integer>
{
    typedef cubab::Integer Real;
    typedef cubab::Integer NonInteger;
    typedef cubab::Integer Nested;
    typedef cubab::Integer Literal;

    enum
    {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 8
    };

    static inline int digits10() { return 0; }
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
};

}   // namespace Eigen

namespace cubab {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

}   // namespace cubab

#endif
