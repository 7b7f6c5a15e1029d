#ifndef MATROID_ERRORS_HPP
#define MATROID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matroid {

// Thrown when a vector/matrix shape does not match.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown on unknown, duplicate or colliding ground-set labels.
struct LabelError : std::invalid_argument {
    explicit LabelError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a structural precondition on a graph fails (e.g. connectivity).
struct StructureError : std::invalid_argument {
    explicit StructureError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an enumeration budget guard trips.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a fixture file is missing, malformed, or fails validation.
struct FixtureError : std::runtime_error {
    explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is applied outside its declared domain.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a quotient check is applied to a lift whose deletion is not
// the declared base.
struct ContractError : std::invalid_argument {
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace matroid

#endif
