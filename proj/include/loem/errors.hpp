#pragma once

#include <stdexcept>
#include <string>

namespace loem {

/// Thrown when a frame is singular or numerically too close to singular.
class degeneracy_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a request exceeds a configured enumeration or overflow budget.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when no bundled reference census exists for the requested n.
class unsupported_reference_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace loem
