#pragma once

#include <vector>

#include "loem/metric.hpp"

namespace loem {

struct ReferencePoint {
    int index = 0;  ///< 1-based row number within the census for its n
    RatioCoordinates coords;
    double v_tilde = 0.0;
};

/// The bundled census of critical points (S = n normalization) for
/// n = 1, 2, 3. Throws unsupported_reference_error for other n.
const std::vector<ReferencePoint>& reference_census(int n);

/// Coordinate tuples of the census, convenient for matching.
std::vector<RatioCoordinates> reference_coords(int n);

/// True when a bundled census exists for n.
bool has_reference_census(int n);

}  // namespace loem
