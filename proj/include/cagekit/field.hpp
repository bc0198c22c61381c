#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cagekit/rational.hpp"

namespace cagekit {

enum class FieldKind { rationals, extension };

/// Either Q or a simple extension Q[t]/(min_poly).
///
/// min_poly is stored low-to-high and is monic of degree >= 2. Its
/// irreducibility over Q is asserted by whoever supplies it; inverting an
/// element that shares a factor with it raises ReducibleModulus.
struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  std::vector<Rational> min_poly;
  std::string label;
  /// Image of t under a field automorphism playing the role of complex
  /// conjugation (power-basis coordinates). Optional.
  std::optional<std::vector<Rational>> conjugation;

  std::size_t degree() const { return kind == FieldKind::rationals ? 1 : min_poly.size() - 1; }

  /// Structural equality; labels are ignored.
  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind == b.kind && a.min_poly == b.min_poly;
  }
};

class FieldElement;

/// Shared handle to a FieldDescriptor plus its precomputed reduction table.
class Field {
 public:
  static Field rationals();
  static Field extension(std::vector<Rational> min_poly, std::string label = {},
                         std::optional<std::vector<Rational>> conjugation = std::nullopt);
  static Field from_descriptor(const FieldDescriptor& descriptor);

  const FieldDescriptor& descriptor() const;
  std::size_t degree() const;
  bool is_rational() const;
  bool has_conjugation() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& value) const;
  FieldElement from_int(long value) const;
  /// The class of t; only for extensions.
  FieldElement generator() const;
  /// Element with the given power-basis coordinates, reduced modulo min_poly.
  FieldElement element(std::vector<Rational> coeffs) const;

  friend bool operator==(const Field& a, const Field& b);

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend class FieldElement;
};

/// Element of a Field: coordinates c0 + c1 t + ... + c_{m-1} t^{m-1}.
class FieldElement {
 public:
  FieldElement(Field field, std::vector<Rational> reduced_coeffs);

  const Field& field() const { return field_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime field Q.
  bool is_rational() const;
  /// Throws PreconditionError unless is_rational().
  const Rational& rational_value() const;

  /// Multiplicative inverse by the extended Euclidean algorithm.
  FieldElement inverse() const;
  /// Applies the descriptor's conjugation automorphism (identity on Q).
  FieldElement conjugate() const;
  FieldElement pow(unsigned exponent) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Exact equality; throws FieldMismatch across fields.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Total order on coordinates, used for canonical sorting only.
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

  /// "p/q" for rational elements, "[c0, c1, ...]" otherwise.
  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& o) const;

  Field field_;
  std::vector<Rational> coeffs_;
};

/// Inverse of x in its field (alias of FieldElement::inverse).
FieldElement ext_inverse(const FieldElement& x);

}  // namespace cagekit
