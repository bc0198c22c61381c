#include "cagekit/field.hpp"

#include <algorithm>
#include <utility>

#include "cagekit/errors.hpp"

namespace cagekit {

namespace {

using UPoly = std::vector<Rational>;  // low-to-high

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder and quotient of a / b over Q; b must be nonzero and trimmed.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  trim(a);
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational());
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

struct Field::Impl {
  FieldDescriptor descriptor;
  // reduction[k] = t^(m + k) mod min_poly, k = 0 .. m-2
  std::vector<std::vector<Rational>> reduction;
};

Field Field::rationals() {
  static const Field q(std::make_shared<const Impl>(Impl{FieldDescriptor{FieldKind::rationals, {}, "Q", std::nullopt}, {}}));
  return q;
}

Field Field::extension(std::vector<Rational> min_poly, std::string label,
                       std::optional<std::vector<Rational>> conjugation) {
  trim(min_poly);
  if (min_poly.size() < 3) throw PreconditionError("extension minimal polynomial must have degree >= 2");
  if (!min_poly.back().is_one()) throw PreconditionError("extension minimal polynomial must be monic");
  const std::size_t m = min_poly.size() - 1;

  auto impl = std::make_shared<Impl>();
  impl->descriptor.kind = FieldKind::extension;
  impl->descriptor.min_poly = min_poly;
  impl->descriptor.label = std::move(label);

  // t^m = -(c0 + c1 t + ... + c_{m-1} t^{m-1}); higher powers by shifting.
  std::vector<Rational> power(m);
  for (std::size_t i = 0; i < m; ++i) power[i] = -min_poly[i];
  for (std::size_t k = 0; k + 1 < m; ++k) {
    impl->reduction.push_back(power);
    std::vector<Rational> next(m);
    for (std::size_t i = 1; i < m; ++i) next[i] = power[i - 1];
    for (std::size_t i = 0; i < m; ++i) next[i] -= power[m - 1] * min_poly[i];
    power = std::move(next);
  }

  if (conjugation) {
    if (conjugation->size() > m) throw PreconditionError("conjugation image longer than the field degree");
    conjugation->resize(m, Rational());
    impl->descriptor.conjugation = std::move(conjugation);
  }
  return Field(std::move(impl));
}

Field Field::from_descriptor(const FieldDescriptor& descriptor) {
  if (descriptor.kind == FieldKind::rationals) return rationals();
  return extension(descriptor.min_poly, descriptor.label, descriptor.conjugation);
}

const FieldDescriptor& Field::descriptor() const { return impl_->descriptor; }
std::size_t Field::degree() const { return impl_->descriptor.degree(); }
bool Field::is_rational() const { return impl_->descriptor.kind == FieldKind::rationals; }
bool Field::has_conjugation() const { return is_rational() || impl_->descriptor.conjugation.has_value(); }

FieldElement Field::zero() const { return FieldElement(*this, std::vector<Rational>(degree())); }
FieldElement Field::one() const { return from_rational(Rational(1)); }
FieldElement Field::from_int(long value) const { return from_rational(Rational(value)); }

FieldElement Field::from_rational(const Rational& value) const {
  std::vector<Rational> c(degree());
  c[0] = value;
  return FieldElement(*this, std::move(c));
}

FieldElement Field::generator() const {
  if (is_rational()) throw PreconditionError("the rational field has no generator t");
  std::vector<Rational> c(degree());
  c[1] = Rational(1);
  return FieldElement(*this, std::move(c));
}

FieldElement Field::element(std::vector<Rational> coeffs) const {
  const std::size_t m = degree();
  if (coeffs.size() <= m) {
    coeffs.resize(m, Rational());
    return FieldElement(*this, std::move(coeffs));
  }
  if (is_rational()) throw ShapeError("rational field elements have exactly one coordinate");
  auto [q, r] = divmod(std::move(coeffs), impl_->descriptor.min_poly);
  r.resize(m, Rational());
  return FieldElement(*this, std::move(r));
}

bool operator==(const Field& a, const Field& b) {
  return a.impl_ == b.impl_ || a.impl_->descriptor == b.impl_->descriptor;
}

FieldElement::FieldElement(Field field, std::vector<Rational> reduced_coeffs)
    : field_(std::move(field)), coeffs_(std::move(reduced_coeffs)) {
  if (coeffs_.size() != field_.degree()) throw ShapeError("field element has wrong number of coordinates");
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_.impl_ != o.field_.impl_ && !(field_.impl_->descriptor == o.field_.impl_->descriptor)) {
    throw FieldMismatch("field elements belong to different fields");
  }
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool FieldElement::is_one() const { return is_rational() && coeffs_[0].is_one(); }

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

const Rational& FieldElement::rational_value() const {
  if (!is_rational()) throw PreconditionError("field element is not rational: " + to_string());
  return coeffs_[0];
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const std::size_t m = coeffs_.size();
  if (m == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Rational> full(2 * m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      full[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  const auto& table = field_.impl_->reduction;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const Rational& c = full[m + k];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < m; ++i) full[i] += c * table[k][i];
  }
  full.resize(m);
  coeffs_ = std::move(full);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  if (o.is_zero()) throw DivisionByZero("field division by zero");
  return *this *= o.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw NotInvertible("zero has no inverse");
  if (coeffs_.size() == 1) return FieldElement(field_, {Rational(1) / coeffs_[0]});

  // Invariant: s_i * x == r_i (mod min_poly).
  UPoly r0 = field_.descriptor().min_poly;
  UPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  UPoly s0;
  UPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    UPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) {
    throw ReducibleModulus("minimal polynomial of " + field_.descriptor().label +
                           " is reducible: it shares a factor with " + to_string());
  }
  const Rational scale = Rational(1) / r0[0];
  for (auto& c : s0) c *= scale;
  return field_.element(std::move(s0));
}

FieldElement FieldElement::conjugate() const {
  if (field_.is_rational()) return *this;
  const auto& image = field_.descriptor().conjugation;
  if (!image) throw PreconditionError("field " + field_.descriptor().label + " carries no conjugation");
  const FieldElement sigma_t(field_, *image);
  FieldElement result = field_.zero();
  FieldElement power = field_.one();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) result += field_.from_rational(coeffs_[i]) * power;
    power *= sigma_t;
  }
  return result;
}

FieldElement FieldElement::pow(unsigned exponent) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::string FieldElement::to_string() const {
  if (coeffs_.size() == 1) return coeffs_[0].to_string();
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].to_string();
  }
  return s + "]";
}

FieldElement ext_inverse(const FieldElement& x) { return x.inverse(); }

}  // namespace cagekit
