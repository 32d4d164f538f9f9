#include "cubab/report.hpp"

#include <algorithm>
#include <sstream>

#include "cubab/group.hpp"

namespace cubab {

void Report::add(std::string law, std::vector<long long> indices, std::string witness)
{
    violations.push_back({std::move(law), std::move(indices), std::move(witness)});
}

void Report::merge(const Report& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

void Report::sort()
{
    std::sort(violations.begin(), violations.end());
}

bool Report::expect_equal(const std::string& law, std::vector<long long> indices, const FGAbHom& lhs,
                          const FGAbHom& rhs, const std::string& witness_space)
{
    if (lhs.source() != rhs.source() || lhs.target() != rhs.target())
    {
        add(law, std::move(indices), "shape mismatch");
        return false;
    }
    auto where = first_difference(lhs, rhs);
    if (!where)
        return true;
    add(law, std::move(indices), witness_space + " " + std::to_string(*where));
    return false;
}

std::string Report::summary() const
{
    std::ostringstream os;
    for (const Violation& v : violations)
    {
        os << v.law << " [";
        for (std::size_t k = 0; k < v.indices.size(); ++k)
            os << (k ? "," : "") << v.indices[k];
        os << "] " << v.witness << "\n";
    }
    return os.str();
}

}   // namespace cubab
