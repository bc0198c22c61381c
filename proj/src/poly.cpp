#include "cagekit/poly.hpp"

#include <algorithm>
#include <numeric>

#include "cagekit/errors.hpp"

namespace cagekit {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Number of exponent vectors of total degree `degree` in `vars` variables.
std::size_t count_monomials(unsigned degree, std::size_t vars) {
  if (vars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + vars - 1, vars - 1);
}

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& current, std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.push_back(Monomial{current});
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
}

// Powers point[v]^0 .. point[v]^degree for each variable.
std::vector<std::vector<FieldElement>> power_table(std::span<const FieldElement> point, unsigned degree) {
  std::vector<std::vector<FieldElement>> table;
  table.reserve(point.size());
  for (const auto& x : point) {
    std::vector<FieldElement> powers{x.field().one()};
    for (unsigned e = 1; e <= degree; ++e) powers.push_back(powers.back() * x);
    table.push_back(std::move(powers));
  }
  return table;
}

}  // namespace

unsigned Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0U); }

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                      a.exponents.end());
}

std::vector<Monomial> monomial_basis(unsigned degree, std::size_t num_vars) {
  if (num_vars == 0) throw ShapeError("monomial basis needs at least one variable");
  std::vector<Monomial> out;
  out.reserve(count_monomials(degree, num_vars));
  std::vector<unsigned> current(num_vars, 0);
  enumerate(0, degree, current, out);
  return out;
}

std::size_t monomial_rank(const Monomial& m) {
  const std::size_t vars = m.exponents.size();
  unsigned remaining = m.degree();
  std::size_t rank = 0;
  for (std::size_t i = 0; i + 1 < vars; ++i) {
    // Monomials sharing the prefix but with a larger exponent at position i come first.
    for (unsigned e = m.exponents[i] + 1; e <= remaining; ++e) rank += count_monomials(remaining - e, vars - i - 1);
    remaining -= m.exponents[i];
  }
  return rank;
}

void require_projective_point(std::span<const FieldElement> point) {
  if (point.empty() || std::all_of(point.begin(), point.end(), [](const FieldElement& x) { return x.is_zero(); })) {
    throw InvalidPoint("projective point with all coordinates zero");
  }
}

LinearForm::LinearForm(Vector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ShapeError("linear form without variables");
  if (is_zero_vector(coeffs_)) throw PreconditionError("linear form with all coefficients zero");
}

FieldElement LinearForm::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != coeffs_.size()) throw ShapeError("point dimension differs from linear form");
  FieldElement v = field().zero();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero() && !point[i].is_zero()) v += coeffs_[i] * point[i];
  }
  return v;
}

HomogPoly::HomogPoly(Field field, std::size_t num_vars, unsigned degree)
    : field_(std::move(field)), num_vars_(num_vars), degree_(degree) {
  if (num_vars_ == 0) throw ShapeError("polynomial without variables");
}

HomogPoly HomogPoly::from_linear_form(const LinearForm& form) {
  HomogPoly p(form.field(), form.num_vars(), 1);
  for (std::size_t i = 0; i < form.num_vars(); ++i) {
    Monomial m{std::vector<unsigned>(form.num_vars(), 0)};
    m.exponents[i] = 1;
    p.add_term(m, form[i]);
  }
  return p;
}

HomogPoly HomogPoly::from_coefficients(const Field& field, std::size_t num_vars, unsigned degree,
                                       const Vector& coeffs) {
  const auto basis = monomial_basis(degree, num_vars);
  if (coeffs.size() != basis.size()) throw ShapeError("coefficient vector length differs from monomial basis size");
  HomogPoly p(field, num_vars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

void HomogPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (m.exponents.size() != num_vars_) throw ShapeError("monomial has the wrong number of variables");
  if (m.degree() != degree_) throw DegreeOverflow("monomial degree differs from polynomial degree");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement HomogPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

Vector HomogPoly::coefficients() const {
  Vector v = zero_vector(field_, count_monomials(degree_, num_vars_));
  for (const auto& [m, c] : terms_) v[monomial_rank(m)] = c;
  return v;
}

FieldElement HomogPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars_) throw ShapeError("point dimension differs from polynomial");
  require_projective_point(point);
  const auto powers = power_table(point, degree_);
  FieldElement value = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElement term = c;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (m.exponents[v] > 0) term *= powers[v][m.exponents[v]];
    }
    value += term;
  }
  return value;
}

HomogPoly HomogPoly::derivative(std::size_t var) const {
  if (var >= num_vars_) throw OutOfRange("derivative variable out of range");
  HomogPoly d(field_, num_vars_, degree_ == 0 ? 0 : degree_ - 1);
  if (degree_ == 0) return d;
  for (const auto& [m, c] : terms_) {
    if (m.exponents[var] == 0) continue;
    Monomial reduced = m;
    --reduced.exponents[var];
    d.add_term(reduced, c * field_.from_int(static_cast<long>(m.exponents[var])));
  }
  return d;
}

void HomogPoly::check_compatible(const HomogPoly& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("polynomials over different fields");
  if (num_vars_ != o.num_vars_ || degree_ != o.degree_) throw ShapeError("polynomials of different shape");
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

HomogPoly& HomogPoly::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch("polynomials over different fields");
  if (a.num_vars_ != b.num_vars_) throw ShapeError("polynomials in different numbers of variables");
  HomogPoly p(a.field_, a.num_vars_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t v = 0; v < m.exponents.size(); ++v) m.exponents[v] += mb.exponents[v];
      p.add_term(m, ca * cb);
    }
  return p;
}

bool operator==(const HomogPoly& a, const HomogPoly& b) {
  return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomogPoly product_of_linear_forms(std::span<const LinearForm> forms) {
  if (forms.empty()) throw EmptyProduct("product of an empty list of linear forms");
  HomogPoly p = HomogPoly::from_linear_form(forms.front());
  for (std::size_t i = 1; i < forms.size(); ++i) {
    if (forms[i].num_vars() != p.num_vars()) throw ShapeError("linear forms in different numbers of variables");
    p = p * HomogPoly::from_linear_form(forms[i]);
  }
  return p;
}

Matrix jacobian_at(std::span<const HomogPoly> polys, std::span<const FieldElement> point) {
  require_projective_point(point);
  const Field& field = point.front().field();
  Matrix j(field, polys.size(), point.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    if (polys[r].num_vars() != point.size()) throw ShapeError("point dimension differs from polynomial");
    for (std::size_t v = 0; v < point.size(); ++v) j(r, v) = polys[r].derivative(v).evaluate(point);
  }
  return j;
}

AffinePoly::AffinePoly(Field field, std::size_t num_vars) : field_(std::move(field)), num_vars_(num_vars) {}

unsigned AffinePoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
  return d;
}

void AffinePoly::add_term(std::vector<unsigned> exponents, const FieldElement& c) {
  if (exponents.size() != num_vars_) throw ShapeError("affine monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement AffinePoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars_) throw ShapeError("point dimension differs from affine polynomial");
  FieldElement value = field_.zero();
  for (const auto& [e, c] : terms_) {
    FieldElement term = c;
    for (std::size_t v = 0; v < num_vars_; ++v) term *= point[v].pow(e[v]);
    value += term;
  }
  return value;
}

bool operator==(const AffinePoly& a, const AffinePoly& b) {
  return a.field_ == b.field_ && a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

HomogPoly homogenize(const AffinePoly& p, unsigned degree, std::size_t chart_var) {
  if (chart_var > p.num_vars()) throw OutOfRange("homogenizing variable position out of range");
  if (p.total_degree() > degree) throw DegreeOverflow("affine degree exceeds the homogenization degree");
  HomogPoly h(p.field(), p.num_vars() + 1, degree);
  for (const auto& [e, c] : p.terms()) {
    std::vector<unsigned> exps(e.begin(), e.end());
    const unsigned d = std::accumulate(e.begin(), e.end(), 0U);
    exps.insert(exps.begin() + static_cast<std::ptrdiff_t>(chart_var), degree - d);
    h.add_term(Monomial{std::move(exps)}, c);
  }
  return h;
}

AffinePoly dehomogenize(const HomogPoly& p, std::size_t chart_var) {
  if (chart_var >= p.num_vars()) throw OutOfRange("chart variable out of range");
  AffinePoly a(p.field(), p.num_vars() - 1);
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> exps = m.exponents;
    exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(chart_var));
    a.add_term(std::move(exps), c);
  }
  return a;
}

}  // namespace cagekit
