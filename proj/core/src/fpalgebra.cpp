#include "rht/fpalgebra.hpp"

#include <algorithm>

namespace rht {

VectorQ DegreeBasis::coordinates(const Polynomial& f) const {
  const std::size_t n_mono = monomials.size();
  VectorQ v(n_mono);
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree)
      throw InputError("polynomial " + f.to_string() + " is not of degree " +
                       std::to_string(degree));
    v[n_mono - 1 - index.at(m)] = c;
  }
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    const std::size_t p = pivot_cols[i];
    if (is_zero(v[p])) continue;
    const Rational factor = v[p];
    for (const auto& [c, x] : ideal_rref.row(i)) v[c] -= factor * x;
  }
  VectorQ coords(representative.size());
  for (std::size_t j = 0; j < representative.size(); ++j)
    coords[j] = v[n_mono - 1 - representative[j]];
  return coords;
}

Polynomial DegreeBasis::from_coordinates(const AlgebraPtr& algebra,
                                         const VectorQ& coords) const {
  if (coords.size() != representative.size())
    throw DimensionError("coordinate vector length != dim A_n");
  Polynomial::Terms terms;
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (!is_zero(coords[j])) terms.emplace(monomials[representative[j]], coords[j]);
  return Polynomial(algebra, std::move(terms));
}

Presentation::Presentation(AlgebraPtr ambient, std::vector<Polynomial> relations,
                           std::optional<int> formal_dimension)
    : ambient_(std::move(ambient)), formal_dimension_(formal_dimension) {
  for (auto& r : relations) {
    if (!same_algebra(r.algebra(), ambient_))
      throw InputError("relation " + r.to_string() + " lives in a different algebra");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous())
      throw InputError("relation " + r.to_string() + " is not homogeneous");
    if (*r.degree() < 2)
      throw InputError("relation " + r.to_string() + " has degree < 2");
    relations_.push_back(std::move(r));
  }
  if (formal_dimension_) {
    const int m = *formal_dimension_;
    if (m < 0) throw InputError("formal dimension must be nonnegative");
    if (dim(m) == 0)
      throw InputError("formal dimension " + std::to_string(m) + " claimed but A_" +
                       std::to_string(m) + " = 0");
    const int window = std::max(max_generator_degree(), max_relation_degree());
    for (int n = m + 1; n <= m + window; ++n)
      if (dim(n) != 0)
        throw InputError("formal dimension " + std::to_string(m) + " claimed but A_" +
                         std::to_string(n) + " has dimension " +
                         std::to_string(dim(n)));
  }
}

int Presentation::max_generator_degree() const {
  int d = 0;
  for (const auto& g : ambient_->generators()) d = std::max(d, g.degree);
  return d;
}

int Presentation::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations_) d = std::max(d, *r.degree());
  return d;
}

std::shared_ptr<const DegreeBasis> Presentation::degree_basis(int n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    const auto it = cache_->bases.find(n);
    if (it != cache_->bases.end()) return it->second;
  }
  auto computed = compute_basis(n);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.emplace(n, std::move(computed)).first->second;
}

std::shared_ptr<const DegreeBasis> Presentation::compute_basis(int n) const {
  auto out = std::make_shared<DegreeBasis>();
  out->degree = n;
  if (n < 0) return out;
  out->monomials = ambient_->basis(n);
  const std::size_t n_mono = out->monomials.size();
  for (std::size_t i = 0; i < n_mono; ++i) out->index.emplace(out->monomials[i], i);

  std::vector<MatrixQ::Row> rows;
  for (const auto& r : relations_) {
    const int rest = n - *r.degree();
    if (rest < 0) continue;
    for (const auto& g : ambient_->basis(rest)) {
      const auto prod = Polynomial::term(ambient_, g, Rational(1)) * r;
      if (prod.is_zero()) continue;
      MatrixQ::Row row;
      for (const auto& [m, c] : prod.terms())
        row.emplace(n_mono - 1 - out->index.at(m), c);
      rows.push_back(std::move(row));
    }
  }
  MatrixQ span(rows.size(), n_mono);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) span.set(i, c, v);
  auto red = rref(span);
  out->pivot_cols = red.pivot_cols;
  out->ideal_rref = std::move(red.reduced);

  std::vector<bool> pivot(n_mono, false);
  for (auto c : out->pivot_cols) pivot[c] = true;
  for (std::size_t i = 0; i < n_mono; ++i)
    if (!pivot[n_mono - 1 - i]) out->representative.push_back(i);
  for (auto i : out->representative)
    out->representatives.push_back(Polynomial::term(ambient_, out->monomials[i], Rational(1)));
  return out;
}

DegreeBasis degree_basis(const Presentation& p, int n) { return *p.degree_basis(n); }

VectorQ reduce(const Presentation& p, const Polynomial& f) {
  if (f.is_zero()) return {};
  if (!f.is_homogeneous()) throw InputError("cannot reduce inhomogeneous " + f.to_string());
  if (!same_algebra(f.algebra(), p.ambient()))
    throw InputError("polynomial lives in a different algebra");
  return p.degree_basis(*f.degree())->coordinates(f);
}

bool in_ideal(const Presentation& p, const Polynomial& f) {
  const auto v = reduce(p, f);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

std::vector<std::size_t> hilbert_series(const Presentation& p, int max_degree) {
  std::vector<std::size_t> dims;
  for (int k = 0; k <= max_degree; ++k) dims.push_back(p.dim(k));
  return dims;
}

long euler_characteristic(const Presentation& p, int max_degree) {
  long e = 0;
  for (int k = 0; k <= max_degree; ++k)
    e += (k % 2 == 0 ? 1 : -1) * static_cast<long>(p.dim(k));
  return e;
}

int cup_length(const Presentation& p, int max_degree) {
  const int g = std::max(1, p.max_generator_degree());
  for (int k = std::max(1, max_degree - g + 1); k <= max_degree; ++k)
    if (p.dim(k) != 0)
      throw InconclusiveError("A_" + std::to_string(k) + " is nonzero inside the top window; "
                              "rerun cup_length with a larger max_degree");
  int best = 0;
  for (int n = 1; n <= max_degree; ++n) {
    const auto basis = p.degree_basis(n);
    if (basis->dim() == 0) continue;
    for (const auto& m : basis->monomials) {
      if (m.length() <= best) continue;
      const auto v = basis->coordinates(Polynomial::term(p.ambient(), m, Rational(1)));
      if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return !is_zero(q); }))
        best = m.length();
    }
  }
  return best;
}

MatrixQ multiplication_matrix(const Presentation& p, const Polynomial& f, int n) {
  if (!f.is_homogeneous()) throw InputError("multiplier must be homogeneous");
  const int d = f.degree().value_or(0);
  const auto src = p.degree_basis(n);
  const auto dst = p.degree_basis(n + d);
  MatrixQ m(dst->dim(), src->dim());
  if (f.is_zero()) return m;
  for (std::size_t j = 0; j < src->dim(); ++j) {
    const auto col = dst->coordinates(src->representatives[j] * f);
    for (std::size_t i = 0; i < col.size(); ++i) m.set(i, j, col[i]);
  }
  return m;
}

std::size_t cup_square_kernel_dim(const Presentation& p) {
  const auto b2 = p.degree_basis(2);
  const auto b4 = p.degree_basis(4);
  std::vector<VectorQ> rows;
  for (std::size_t i = 0; i < b2->dim(); ++i)
    for (std::size_t j = i; j < b2->dim(); ++j)
      rows.push_back(b4->coordinates(b2->representatives[i] * b2->representatives[j]));
  if (rows.empty()) return 0;
  return rows.size() - rank(MatrixQ::from_rows(rows, b4->dim()));
}

PoincareReport check_poincare_duality(const Presentation& p, int m) {
  const auto top = p.degree_basis(m);
  if (top->dim() != 1)
    throw NotPoincareAlgebraError("dim A_" + std::to_string(m) + " = " +
                                  std::to_string(top->dim()) + ", expected 1");
  PoincareReport report;
  report.formal_dimension = m;
  for (int k = 0; k <= m; ++k) {
    const auto left = p.degree_basis(k);
    const auto right = p.degree_basis(m - k);
    bool ok = left->dim() == right->dim();
    if (ok && left->dim() > 0) {
      MatrixQ pairing(left->dim(), right->dim());
      for (std::size_t i = 0; i < left->dim(); ++i)
        for (std::size_t j = 0; j < right->dim(); ++j)
          pairing.set(i, j,
                      top->coordinates(left->representatives[i] * right->representatives[j])[0]);
      ok = rank(pairing) == left->dim();
    }
    if (!ok) {
      report.nondegenerate = false;
      report.failing_degrees.push_back(k);
    }
  }
  return report;
}

namespace {

void require_kahler_class(const Presentation& p, const Polynomial& omega, int n) {
  if (!same_algebra(omega.algebra(), p.ambient()))
    throw InputError("Kahler class lives in a different algebra");
  if (omega.is_zero() || omega.degree() != 2)
    throw InputError("Kahler class must be a nonzero homogeneous class of degree 2");
  if (n < 1) throw InputError("complex dimension must be >= 1");
  if (p.formal_dimension() && *p.formal_dimension() != 2 * n)
    throw InputError("formal dimension " + std::to_string(*p.formal_dimension()) +
                     " does not match complex dimension " + std::to_string(n));
}

bool all_zero(const VectorQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

}  // namespace

LefschetzReport check_hard_lefschetz(const Presentation& p, const Polynomial& omega, int n) {
  require_kahler_class(p, omega, n);
  LefschetzReport report;
  for (int k = 0; k < n; ++k) {
    const auto m = multiplication_matrix(p, power(omega, n - k), k);
    LefschetzDegree d;
    d.degree = k;
    d.source_dim = m.cols();
    d.target_dim = m.rows();
    d.rank = rank(m);
    d.isomorphism = d.source_dim == d.target_dim && d.rank == d.source_dim;
    report.holds = report.holds && d.isomorphism;
    report.degrees.push_back(d);
  }
  return report;
}

std::vector<Polynomial> primitive_basis(const Presentation& p, const Polynomial& omega, int n) {
  if (!check_hard_lefschetz(p, omega, n).holds)
    throw InputError("hard Lefschetz fails for " + omega.to_string());
  const auto b2 = p.degree_basis(2);
  std::vector<Polynomial> out;
  for (const auto& v : kernel_basis(multiplication_matrix(p, power(omega, n - 1), 2)))
    out.push_back(b2->from_coordinates(p.ambient(), v));
  return out;
}

namespace {

// Coordinates of omega^n and omega^(n-2) y^2 in the one-dimensional top degree.
std::pair<Rational, Rational> top_pairing(const Presentation& p, const Polynomial& omega,
                                          const Polynomial& y, int n) {
  require_kahler_class(p, omega, n);
  if (n < 2) throw InputError("Hodge-Riemann sign needs complex dimension >= 2");
  if (!y.is_zero() && y.degree() != 2) throw InputError("primitive class must have degree 2");
  const auto top = p.degree_basis(2 * n);
  if (top->dim() != 1)
    throw NotPoincareAlgebraError("dim A_" + std::to_string(2 * n) + " = " +
                                  std::to_string(top->dim()) + ", expected 1");
  if (!y.is_zero() && !all_zero(reduce(p, power(omega, n - 1) * y)))
    throw InputError("class " + y.to_string() + " is not primitive");
  const Rational volume = top->coordinates(power(omega, n))[0];
  if (is_zero(volume)) throw InputError("omega^n vanishes; no orientation");
  const auto q = power(omega, n - 2) * y * y;
  const Rational value = q.is_zero() ? Rational(0) : top->coordinates(q)[0];
  return {volume, value};
}

}  // namespace

int hodge_riemann_sign(const Presentation& p, const Polynomial& omega, const Polynomial& y,
                       int n) {
  const auto [volume, value] = top_pairing(p, omega, y, n);
  return sgn(value) * sgn(volume);
}

PrimitiveNormalization normalize_primitive(const Presentation& p, const Polynomial& omega,
                                           const Polynomial& y, int n) {
  const auto [volume, value] = top_pairing(p, omega, y, n);
  if (sgn(value) * sgn(volume) >= 0)
    throw InputError("normalization needs a negative Hodge-Riemann sign");
  PrimitiveNormalization out;
  out.scale_squared = -volume / value;
  out.scale_squared.canonicalize();
  const mpz_class num = out.scale_squared.get_num();
  const mpz_class den = out.scale_squared.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    const Rational t(sqrt(num), sqrt(den));
    out.normalized = y * t;
  }
  return out;
}

}  // namespace rht
