#pragma once

#include "cagekit/cage.hpp"

namespace cagekit {

/// e_1..e_n of the values: the monic polynomial x^n - e_1 x^{n-1} + ... + (-1)^n e_n
/// has exactly these roots.
Vector elementary_symmetric(const Field& field, const Vector& values);
Vector viete_image(const Field& field, const Vector& affine_point);

/// c^n - w_1 c^{n-1} + w_2 c^{n-2} - ... + (-1)^n w_n as a form in (w_1, ..., w_n, w_0),
/// homogenized by the last variable. Vanishes at e iff c is a root of e's polynomial.
LinearForm root_hyperplane(const FieldElement& c, std::size_t n);

/// d points in affine n-space with pairwise distinct values in each coordinate.
struct Configuration {
  Field field;
  std::vector<Vector> points;

  std::size_t d() const { return points.size(); }
  std::size_t n() const { return points.empty() ? 0 : points.front().size(); }
  /// InvalidConfiguration on a repeated value within one coordinate.
  void validate() const;
};

struct CoefficientCage {
  Cage cage;
  ValidationReport report;
};

/// Colour j = root hyperplanes of the j-th coordinates. The cage is validated;
/// failures are left in the report rather than thrown.
CoefficientCage coefficient_cage(const Configuration& q);

}  // namespace cagekit
