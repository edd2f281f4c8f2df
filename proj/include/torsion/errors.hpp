#pragma once

#include <stdexcept>
#include <string>

namespace torsion {

// A closed-form operation was called outside the parameter range it is
// proved for (e.g. the cyclic factor is not an odd prime coprime to n).
class hypothesis_error : public std::domain_error {
public:
    explicit hypothesis_error(const std::string& what) : std::domain_error(what) {}
};

// A brute-force operation would exceed its configured size budget.
// Thrown before any work is done; there is never partial output.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace torsion
