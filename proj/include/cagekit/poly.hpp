#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "cagekit/linalg.hpp"

namespace cagekit {

/// Exponent vector. Monomials are ordered graded-lexicographically; bases and
/// term maps list them from the largest (x0^d) down.
struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// a > b in graded-lex order.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// All C(d + n, n) monomials of degree d in num_vars = n + 1 variables, in
/// descending graded-lex order. Matrix columns always follow this order.
std::vector<Monomial> monomial_basis(unsigned degree, std::size_t num_vars);

/// Position of a monomial inside monomial_basis(degree, num_vars).
std::size_t monomial_rank(const Monomial& m);

class LinearForm {
 public:
  /// Throws ShapeError if empty, PreconditionError if all coefficients vanish.
  explicit LinearForm(Vector coeffs);

  std::size_t num_vars() const { return coeffs_.size(); }
  const Field& field() const { return coeffs_.front().field(); }
  const Vector& coeffs() const { return coeffs_; }
  const FieldElement& operator[](std::size_t i) const { return coeffs_[i]; }

  FieldElement evaluate(std::span<const FieldElement> point) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Vector coeffs_;
};

/// Sparse homogeneous polynomial; zero coefficients are never stored.
class HomogPoly {
 public:
  using Terms = std::map<Monomial, FieldElement, GrlexDescending>;

  HomogPoly(Field field, std::size_t num_vars, unsigned degree);

  static HomogPoly from_linear_form(const LinearForm& form);
  /// Dense coefficients in monomial_basis(degree, num_vars) order.
  static HomogPoly from_coefficients(const Field& field, std::size_t num_vars, unsigned degree,
                                     const Vector& coeffs);

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m; throws DegreeOverflow if m has the wrong degree.
  void add_term(const Monomial& m, const FieldElement& c);
  FieldElement coefficient(const Monomial& m) const;
  /// Dense coefficients in monomial_basis order.
  Vector coefficients() const;

  /// Value at a representative; InvalidPoint if all coordinates vanish.
  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Partial derivative with respect to variable `var`.
  HomogPoly derivative(std::size_t var) const;

  HomogPoly& operator+=(const HomogPoly& o);
  HomogPoly& operator-=(const HomogPoly& o);
  HomogPoly& operator*=(const FieldElement& c);
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(HomogPoly a, const FieldElement& c) { return a *= c; }
  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);

  friend bool operator==(const HomogPoly& a, const HomogPoly& b);

 private:
  void check_compatible(const HomogPoly& o) const;

  Field field_;
  std::size_t num_vars_;
  unsigned degree_;
  Terms terms_;
};

/// Product of linear forms; EmptyProduct for an empty list.
HomogPoly product_of_linear_forms(std::span<const LinearForm> forms);

/// s x (n+1) matrix of partial derivatives evaluated at the point.
Matrix jacobian_at(std::span<const HomogPoly> polys, std::span<const FieldElement> point);

/// Throws InvalidPoint if the point is empty or all coordinates vanish.
void require_projective_point(std::span<const FieldElement> point);

/// Inhomogeneous polynomial in num_vars affine variables.
class AffinePoly {
 public:
  using Terms = std::map<std::vector<unsigned>, FieldElement>;

  AffinePoly(Field field, std::size_t num_vars);

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  unsigned total_degree() const;

  void add_term(std::vector<unsigned> exponents, const FieldElement& c);
  FieldElement evaluate(std::span<const FieldElement> point) const;

  friend bool operator==(const AffinePoly& a, const AffinePoly& b);

 private:
  Field field_;
  std::size_t num_vars_;
  Terms terms_;
};

/// Homogenizes to the given degree; the new variable is inserted at position
/// chart_var. DegreeOverflow if the affine degree exceeds `degree`.
HomogPoly homogenize(const AffinePoly& p, unsigned degree, std::size_t chart_var);
/// Sets variable chart_var to 1 and drops it.
AffinePoly dehomogenize(const HomogPoly& p, std::size_t chart_var);

}  // namespace cagekit
