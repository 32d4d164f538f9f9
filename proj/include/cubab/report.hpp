#ifndef CUBAB_REPORT_HPP
#define CUBAB_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cubab {

class FGAbHom;

/// One failed law: which identity, at which indices, and a generator witnessing it.
struct Violation
{
    std::string law;
    std::vector<long long> indices;
    std::string witness;

    friend bool operator==(const Violation&, const Violation&) = default;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Report
{
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string law, std::vector<long long> indices, std::string witness);
    void merge(const Report& other);

    /// Sort by law name, then indices, so aggregation is order-independent.
    void sort();

    /**
     * Records a violation unless lhs and rhs agree; the witness names the
     * first source generator on which they differ.
     */
    bool expect_equal(const std::string& law, std::vector<long long> indices, const FGAbHom& lhs,
                      const FGAbHom& rhs, const std::string& witness_space = "generator");

    std::string summary() const;
};

/// Thrown when an operation requires a valid structure and validation failed.
class ValidationError : public std::runtime_error
{
    public:
        ValidationError(const std::string& what, Report report)
            : std::runtime_error(what), report_(std::move(report))
        {
        }

        const Report& report() const { return report_; }

    private:
        Report report_;
};

}   // namespace cubab

#endif
