#include "cagekit/viete.hpp"

#include "cagekit/errors.hpp"

namespace cagekit {

Vector elementary_symmetric(const Field& field, const Vector& values) {
  // e[k] after processing a prefix is e_k of that prefix.
  Vector e = zero_vector(field, values.size() + 1);
  e[0] = field.one();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = i + 1; k > 0; --k) e[k] += e[k - 1] * values[i];
  }
  e.erase(e.begin());
  return e;
}

Vector viete_image(const Field& field, const Vector& affine_point) { return elementary_symmetric(field, affine_point); }

LinearForm root_hyperplane(const FieldElement& c, std::size_t n) {
  if (n == 0) throw ShapeError("coefficient space needs n >= 1");
  Vector coeffs;
  for (std::size_t k = 1; k <= n; ++k) {
    FieldElement term = c.pow(static_cast<unsigned>(n - k));
    coeffs.push_back(k % 2 ? -term : term);
  }
  coeffs.push_back(c.pow(static_cast<unsigned>(n)));
  return LinearForm(std::move(coeffs));
}

void Configuration::validate() const {
  if (points.empty()) throw InvalidConfiguration("configuration has no points");
  const std::size_t dim = n();
  if (dim == 0) throw InvalidConfiguration("configuration points need at least one coordinate");
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidConfiguration("configuration points have different dimensions");
  }
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t a = 0; a < points.size(); ++a) {
      for (std::size_t b = a + 1; b < points.size(); ++b) {
        if (points[a][j] == points[b][j]) {
          throw InvalidConfiguration("points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                     " share coordinate " + std::to_string(j + 1));
        }
      }
    }
  }
}

CoefficientCage coefficient_cage(const Configuration& q) {
  q.validate();
  std::vector<std::vector<LinearForm>> groups(q.n());
  for (std::size_t j = 0; j < q.n(); ++j) {
    for (const auto& p : q.points) groups[j].push_back(root_hyperplane(p[j], q.n()));
  }
  Cage cage(q.field, std::move(groups));
  ValidationReport report = cage.validate();
  return CoefficientCage{std::move(cage), std::move(report)};
}

}  // namespace cagekit
