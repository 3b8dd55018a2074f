#pragma once

namespace quas {

/// Gamma function for x > 0 via the Lanczos approximation (g = 607/128, 15 terms),
/// with the reflection formula below 1/2. Throws DomainError for x <= 0.
double gamma(double x);

/// Area of the first quadrant of |x/a|^p + |y/b|^p = 1:
///   a b Gamma(1 + 1/p)^2 / Gamma(1 + 2/p).
double quadrant_area(double a, double b, double p);

}  // namespace quas
