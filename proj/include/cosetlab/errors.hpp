#pragma once

#include <stdexcept>
#include <string>

namespace cosetlab {

// Requested family/rank is outside the supported crystallographic scope.
struct UnsupportedTypeError : std::runtime_error {
    explicit UnsupportedTypeError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (group order, poset size, chain count) was exceeded.
struct SizeCapError : std::runtime_error {
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

// A reflection set that is not closed was passed where a parabolic subgroup is required.
struct NotParabolicError : std::runtime_error {
    explicit NotParabolicError(const std::string& what) : std::runtime_error(what) {}
};

// A set of group elements is not downward closed in the right weak order.
struct NotIdealError : std::runtime_error {
    explicit NotIdealError(const std::string& what) : std::runtime_error(what) {}
};

// A user-supplied direction vector is orthogonal to some ray of the chamber complex.
struct NonGenericError : std::runtime_error {
    explicit NonGenericError(const std::string& what) : std::runtime_error(what) {}
};

// The facet ordering failed the panel-intersection condition.  Firing indicates a bug.
struct ShellingViolationError : std::logic_error {
    explicit ShellingViolationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cosetlab
