#include "rht/sullivan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rht {

namespace {

using MonomialIndex = std::map<Monomial, std::size_t, GradedLex>;

MonomialIndex index_of(const std::vector<Monomial>& basis) {
  MonomialIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

Polynomial from_vector(const AlgebraPtr& alg, const std::vector<Monomial>& basis,
                       const VectorQ& v) {
  Polynomial::Terms terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) terms.emplace(basis[i], v[i]);
  return Polynomial(alg, std::move(terms));
}

// d: M^k -> M^{k+1}; columns are the degree-k monomials.
MatrixQ differential_matrix(const Derivation& d, int k) {
  const auto& src = d.algebra()->basis(k);
  const auto& dst = d.algebra()->basis(k + 1);
  const auto idx = index_of(dst);
  MatrixQ m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Polynomial image = d.apply(src[j]);
    for (const auto& [mono, c] : image.terms()) m.set(idx.at(mono), j, c);
  }
  return m;
}

std::vector<VectorQ> columns(const MatrixQ& m) {
  std::vector<VectorQ> out(m.cols(), VectorQ(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out[c][r] = v;
  return out;
}

std::string join_degrees(const std::vector<int>& degrees) {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  return os.str();
}

}  // namespace

std::vector<int> SullivanAlgebra::generator_degrees() const {
  std::vector<int> out;
  for (const auto& g : ambient->generators()) out.push_back(g.degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t HomotopyTable::dim(int n) const {
  const auto it = dims.find(n);
  return it == dims.end() ? 0 : it->second;
}

std::size_t HomotopyTable::total() const { return odd_total() + even_total(); }

std::size_t HomotopyTable::odd_total() const {
  std::size_t s = 0;
  for (const auto& [n, d] : dims)
    if (n % 2) s += d;
  return s;
}

std::size_t HomotopyTable::even_total() const {
  std::size_t s = 0;
  for (const auto& [n, d] : dims)
    if (n % 2 == 0) s += d;
  return s;
}

long HomotopyTable::odd_degree_sum() const {
  long s = 0;
  for (const auto& [n, d] : dims)
    if (n % 2) s += static_cast<long>(n) * static_cast<long>(d);
  return s;
}

long HomotopyTable::even_degree_sum() const {
  long s = 0;
  for (const auto& [n, d] : dims)
    if (n % 2 == 0) s += static_cast<long>(n) * static_cast<long>(d);
  return s;
}

std::vector<int> HomotopyTable::generator_degrees() const {
  std::vector<int> out;
  for (const auto& [n, d] : dims) out.insert(out.end(), d, n);
  return out;
}

HomotopyTable table_of(const SullivanAlgebra& s) {
  HomotopyTable t;
  t.computed_through = s.computed_through;
  for (const auto& g : s.ambient->generators()) ++t.dims[g.degree];
  return t;
}

// ---------------------------------------------------------------------------
// Model construction

ModelBuilder::ModelBuilder(const Presentation& cohomology)
    : h_(cohomology), algebra_(FreeGCA::make({})) {
  if (h_.dim(1) != 0)
    throw UnsupportedInputError("A^1 != 0: only simply connected inputs are supported");
}

MatrixQ ModelBuilder::differential_matrix(int k) const {
  return rht::differential_matrix(Derivation(algebra_, d_), k);
}

MatrixQ ModelBuilder::cohomology_map(int k) const {
  const auto& src = algebra_->basis(k);
  const auto target = h_.degree_basis(k);
  MatrixQ m(target->dim(), src.size());
  const auto one = Polynomial::constant(h_.ambient(), Rational(1));
  for (std::size_t j = 0; j < src.size(); ++j) {
    Polynomial image = one;
    for (std::size_t i = 0; i < algebra_->size() && !image.is_zero(); ++i)
      if (src[j].exponent(i)) image = image * power(phi_[i], src[j].exponent(i));
    if (image.is_zero()) continue;
    const auto col = target->coordinates(image);
    for (std::size_t r = 0; r < col.size(); ++r) m.set(r, j, col[r]);
  }
  return m;
}

std::string ModelBuilder::fresh_name(const std::string& stem) const {
  std::string name = stem;
  auto taken = [&](const std::string& n) {
    return algebra_->index_of(n).has_value() || h_.ambient()->index_of(n).has_value();
  };
  while (taken(name)) name += "'";
  return name;
}

const StageRecord& ModelBuilder::advance() {
  const int degree = through_ + 1;
  StageRecord rec;
  rec.degree = degree;

  std::vector<Generator> new_gens;
  std::vector<Polynomial> new_d;  // in the current algebra
  std::vector<Polynomial> new_phi;

  // (a) cover coker(H^n(M) -> A^n) with closed generators.
  const auto target = h_.degree_basis(degree);
  if (target->dim() > 0) {
    const MatrixQ phi_n = cohomology_map(degree);
    SpanBuilder image(target->dim());
    for (const auto& z : kernel_basis(differential_matrix(degree))) image.insert(phi_n.apply(z));
    for (std::size_t i = 0; i < target->dim(); ++i) {
      VectorQ e(target->dim());
      e[i] = 1;
      if (!image.insert(e)) continue;
      const Polynomial& rep = target->representatives[i];
      const Monomial& mono = target->monomials[target->representative[i]];
      std::string name;
      if (mono.length() == 1) {
        for (std::size_t g = 0; g < mono.exponents().size(); ++g)
          if (mono.exponent(g)) name = h_.ambient()->generator(g).name;
        if (algebra_->index_of(name)) name.clear();
      }
      if (name.empty())
        name = fresh_name("c" + std::to_string(degree) + "_" + std::to_string(rec.closed + 1));
      new_gens.push_back({name, degree});
      new_d.push_back(Polynomial(algebra_));
      new_phi.push_back(rep);
      ++rec.closed;
    }
  }

  // (b) kill ker(H^{n+1}(M) -> A^{n+1}).
  const auto& next_basis = algebra_->basis(degree + 1);
  if (!next_basis.empty()) {
    const MatrixQ cocycle_and_phi =
        MatrixQ::stack(differential_matrix(degree + 1), cohomology_map(degree + 1));
    SpanBuilder span(next_basis.size());
    for (const auto& b : columns(differential_matrix(degree))) span.insert(b);
    std::vector<Polynomial> killed;
    for (const auto& w : kernel_basis(cocycle_and_phi))
      if (span.insert(w)) killed.push_back(from_vector(algebra_, next_basis, w));
    const std::string stem = (degree % 2 ? "x" : "w") + std::to_string(degree);
    for (std::size_t k = 0; k < killed.size(); ++k) {
      const std::string name =
          killed.size() == 1 ? stem : stem + "_" + std::to_string(k + 1);
      new_gens.push_back({fresh_name(name), degree});
      new_d.push_back(killed[k]);
      new_phi.push_back(Polynomial(h_.ambient()));
      ++rec.killers;
    }
  }

  if (!new_gens.empty()) {
    auto gens = algebra_->generators();
    gens.insert(gens.end(), new_gens.begin(), new_gens.end());
    // Names must stay unique even when two new generators collide.
    std::set<std::string> names;
    for (auto& g : gens)
      while (!names.insert(g.name).second) g.name += "'";
    auto next = FreeGCA::make(std::move(gens));
    for (auto& p : d_) p = p.embed(next);
    for (auto& p : new_d) d_.push_back(p.embed(next));
    phi_.insert(phi_.end(), new_phi.begin(), new_phi.end());
    stage_.insert(stage_.end(), new_gens.size(), degree);
    algebra_ = std::move(next);
  }
  through_ = degree;
  stages_.push_back(rec);
  return stages_.back();
}

void ModelBuilder::advance_to(int degree) {
  while (through_ < degree) advance();
}

SullivanAlgebra ModelBuilder::model() const {
  SullivanAlgebra s;
  s.ambient = algebra_;
  s.differential = d_;
  s.stage = stage_;
  s.to_cohomology = phi_;
  s.computed_through = through_;
  return s;
}

std::pair<SullivanAlgebra, HomotopyTable> build_bigraded_model(const Presentation& h,
                                                               int max_degree) {
  if (max_degree < 2) throw InputError("max degree must be >= 2");
  ModelBuilder builder(h);
  builder.advance_to(max_degree);
  auto s = builder.model();
  auto t = table_of(s);
  return {std::move(s), std::move(t)};
}

ModelCohomology cohomology_of_model(const SullivanAlgebra& s, int n) {
  if (n > s.computed_through)
    throw InputError("H^" + std::to_string(n) + " needs the model through degree " +
                     std::to_string(n) + "; it is only built through " +
                     std::to_string(s.computed_through));
  ModelCohomology out;
  out.degree = n;
  if (n < 0) return out;
  const Derivation d = s.derivation();
  const auto& basis = s.ambient->basis(n);
  if (basis.empty()) return out;
  SpanBuilder span(basis.size());
  if (n > 0)
    for (const auto& b : columns(differential_matrix(d, n - 1))) span.insert(b);
  for (const auto& z : kernel_basis(differential_matrix(d, n)))
    if (span.insert(z)) out.basis.push_back(from_vector(s.ambient, basis, z));
  out.dim = out.basis.size();
  return out;
}

// ---------------------------------------------------------------------------
// Pure algebras and Koszul homology

PureSullivanData::PureSullivanData(AlgebraPtr even, std::vector<Generator> odd,
                                   std::vector<Polynomial> d)
    : even_algebra(std::move(even)), odd_gens(std::move(odd)), boundaries(std::move(d)) {
  for (const auto& g : even_algebra->generators())
    if (g.odd()) throw InputError("Q generator '" + g.name + "' has odd degree");
  for (const auto& g : odd_gens)
    if (!g.odd()) throw InputError("P generator '" + g.name + "' has even degree");
  if (boundaries.size() != odd_gens.size())
    throw InputError("need one boundary per odd generator");
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    const auto& b = boundaries[i];
    if (!same_algebra(b.algebra(), even_algebra))
      throw InputError("boundary of '" + odd_gens[i].name + "' is not in S*Q");
    if (!b.is_zero() && b.degree() != odd_gens[i].degree + 1)
      throw InputError("boundary of '" + odd_gens[i].name + "' must have degree " +
                       std::to_string(odd_gens[i].degree + 1));
  }
}

Presentation PureSullivanData::quotient() const { return Presentation(even_algebra, boundaries); }

std::optional<PureSullivanData> is_pure(const SullivanAlgebra& s) {
  const auto& gens = s.ambient->generators();
  std::vector<std::size_t> even_idx;
  std::vector<Generator> even, odd;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].odd()) {
      odd.push_back(gens[i]);
      for (const auto& [m, c] : s.differential[i].terms())
        for (std::size_t g = 0; g < gens.size(); ++g)
          if (m.exponent(g) && gens[g].odd()) return std::nullopt;
    } else {
      if (!s.differential[i].is_zero()) return std::nullopt;
      even_idx.push_back(i);
      even.push_back(gens[i]);
    }
  }
  auto even_alg = FreeGCA::make(std::move(even));
  std::vector<Polynomial> boundaries;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].odd()) continue;
    Polynomial::Terms terms;
    for (const auto& [m, c] : s.differential[i].terms()) {
      std::vector<int> e;
      for (auto k : even_idx) e.push_back(m.exponent(k));
      terms.emplace(Monomial(std::move(e), m.degree()), c);
    }
    boundaries.emplace_back(even_alg, std::move(terms));
  }
  return PureSullivanData(std::move(even_alg), std::move(odd), std::move(boundaries));
}

namespace {

struct KoszulComplex {
  AlgebraPtr algebra;  // Q generators followed by P generators
  Derivation d;
  std::size_t even_count;

  explicit KoszulComplex(const PureSullivanData& data)
      : algebra(make_algebra(data)), d(make_derivation(data, algebra)),
        even_count(data.even_count()) {}

  static AlgebraPtr make_algebra(const PureSullivanData& data) {
    auto gens = data.even_algebra->generators();
    gens.insert(gens.end(), data.odd_gens.begin(), data.odd_gens.end());
    return FreeGCA::make(std::move(gens));
  }

  static Derivation make_derivation(const PureSullivanData& data, const AlgebraPtr& alg) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < data.even_count(); ++i) images.emplace_back(alg);
    for (const auto& b : data.boundaries) images.push_back(b.embed(alg));
    return Derivation(alg, std::move(images));
  }

  int odd_factors(const Monomial& m) const {
    int k = 0;
    for (std::size_t i = even_count; i < algebra->size(); ++i) k += m.exponent(i);
    return k;
  }

  // Basis of C_{j, w}: total degree w - j with exactly j odd factors.
  std::vector<Monomial> chain_basis(int j, int w) const {
    std::vector<Monomial> out;
    if (j < 0 || w - j < 0) return out;
    for (const auto& m : algebra->basis(w - j))
      if (odd_factors(m) == j) out.push_back(m);
    return out;
  }

  std::size_t boundary_rank(int j, int w) const {
    const auto src = chain_basis(j, w);
    const auto dst = chain_basis(j - 1, w);
    if (src.empty() || dst.empty()) return 0;
    const auto idx = index_of(dst);
    MatrixQ m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Polynomial image = d.apply(src[c]);
      for (const auto& [mono, v] : image.terms()) m.set(idx.at(mono), c, v);
    }
    return rank(m);
  }
};

}  // namespace

std::vector<std::size_t> koszul_homology(const PureSullivanData& data, int j,
                                         int max_internal_degree) {
  if (j < 0 || static_cast<std::size_t>(j) > data.odd_count())
    throw InputError("homological degree out of range");
  const KoszulComplex c(data);
  std::vector<std::size_t> dims;
  for (int w = 0; w <= max_internal_degree; ++w) {
    const std::size_t chains = c.chain_basis(j, w).size();
    dims.push_back(chains - c.boundary_rank(j, w) - c.boundary_rank(j + 1, w));
  }
  return dims;
}

int default_koszul_bound(const PureSullivanData& data) {
  int sum_p = 0, max_p = 0, sum_y = 0;
  for (const auto& g : data.odd_gens) {
    sum_p += g.degree + 1;
    max_p = std::max(max_p, g.degree + 1);
  }
  for (const auto& g : data.even_algebra->generators()) sum_y += g.degree;
  return sum_p - sum_y + max_p;
}

namespace {

void monomials_of_length(const FreeGCA& alg, std::size_t i, int remaining, std::vector<int>& e,
                         std::vector<Monomial>& out) {
  if (i + 1 == alg.size()) {
    e[i] = remaining;
    out.push_back(alg.monomial(e));
    e[i] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    e[i] = k;
    monomials_of_length(alg, i + 1, remaining - k, e, out);
  }
  e[i] = 0;
}

}  // namespace

RegularityReport is_regular_sequence(const PureSullivanData& data,
                                     std::optional<int> internal_bound) {
  RegularityReport r;
  const std::size_t nq = data.even_count();
  const std::size_t np = data.odd_count();
  int sum_p = 0, max_p = 0, sum_y = 0;
  for (const auto& g : data.odd_gens) {
    sum_p += g.degree + 1;
    max_p = std::max(max_p, g.degree + 1);
  }
  for (const auto& g : data.even_algebra->generators()) sum_y += g.degree;

  if (np > nq) {
    r.reason = "generator count mismatch precludes maximal regular sequence when |P| > |Q|";
    return r;
  }
  if (np == 0) {
    r.regular = true;
    r.reason = "empty sequence";
    return r;
  }
  for (const auto& b : data.boundaries)
    if (b.is_zero()) {
      r.reason = "a boundary polynomial is zero";
      return r;
    }

  if (np < nq) {
    const int bound = internal_bound.value_or(sum_p + max_p);
    r.checked_through = bound;
    const auto h1 = koszul_homology(data, 1, bound);
    const auto bad = std::find_if(h1.begin(), h1.end(), [](std::size_t d) { return d != 0; });
    r.regular = bad == h1.end();
    r.reason = r.regular ? "H_1 vanishes through internal degree " + std::to_string(bound)
                         : "H_1 nonzero in internal degree " +
                               std::to_string(bad - h1.begin());
    return r;
  }

  const int socle = sum_p - sum_y;
  r.socle_degree = socle;
  const int top = std::max(socle, 0) + max_p;
  r.checked_through = internal_bound.value_or(socle + max_p);
  const Presentation quotient = data.quotient();
  for (int n = std::max(socle, 0) + 1; n <= top; ++n) {
    if (quotient.dim(n) != 0) {
      r.reason = "quotient is infinite-dimensional: degree " + std::to_string(n) +
                 " has dimension " + std::to_string(quotient.dim(n)) +
                 " beyond the complete-intersection socle degree " + std::to_string(socle);
      return r;
    }
  }
  const auto h1 = koszul_homology(data, 1, r.checked_through);
  for (std::size_t w = 0; w < h1.size(); ++w)
    if (h1[w] != 0)
      throw std::logic_error("finite quotient but Koszul H_1 != 0 in internal degree " +
                             std::to_string(w));
  r.regular = true;
  r.reason = "finite quotient (vanishes above degree " + std::to_string(socle) +
             ") and H_1 = 0 through internal degree " + std::to_string(r.checked_through);

  const int min_y = [&] {
    int m = data.even_algebra->generator(0).degree;
    for (const auto& g : data.even_algebra->generators()) m = std::min(m, g.degree);
    return m;
  }();
  const int k_max = std::max(socle, 0) / min_y + 1;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Monomial> mons;
    std::vector<int> e(nq, 0);
    monomials_of_length(*data.even_algebra, 0, k, e, mons);
    const bool all_in = std::all_of(mons.begin(), mons.end(), [&](const Monomial& m) {
      return in_ideal(quotient, Polynomial::term(data.even_algebra, m, Rational(1)));
    });
    if (all_in) {
      r.radical_power = k;
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Friedlander-Halperin audit and the dichotomy

bool FHAudit::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

const BoundCheck& FHAudit::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no FH check named " + name);
}

FHAudit check_fh_bounds(const HomotopyTable& t, int m, std::optional<int> cat0) {
  if (t.computed_through < 2 * m - 1)
    throw InputError("homotopy table computed through " + std::to_string(t.computed_through) +
                     " but the audit needs degree " + std::to_string(2 * m - 1));
  FHAudit a;
  a.formal_dimension = m;
  const long odd = t.odd_degree_sum();
  const long even = t.even_degree_sum();
  const long even_count = static_cast<long>(t.even_total());
  a.checks.push_back({"(i)", "sum|x_i| <= 2m-1", odd, 2L * m - 1, odd <= 2L * m - 1});
  a.checks.push_back({"(ii)", "sum|y_j| <= m", even, m, even <= m});
  a.checks.push_back({"(iii)", "sum|x_i| - sum(|y_j|-1) = m", odd - (even - even_count), m,
                      odd - (even - even_count) == m});
  a.checks.push_back({"(iv)", "sum|x_i| - sum|y_j| >= 0", odd - even, 0, odd - even >= 0});
  if (cat0) {
    const long n_odd = static_cast<long>(t.odd_total());
    a.checks.push_back({"cat0", "dim pi_odd <= cat0", n_odd, *cat0, n_odd <= *cat0});
  }
  return a;
}

std::optional<BoundCheck> partial_fh_violation(const HomotopyTable& t, int m) {
  const long odd = t.odd_degree_sum();
  const long even = t.even_degree_sum();
  if (odd > 2L * m - 1) return BoundCheck{"(i)", "sum|x_i| <= 2m-1", odd, 2L * m - 1, false};
  if (even > m) return BoundCheck{"(ii)", "sum|y_j| <= m", even, m, false};
  return std::nullopt;
}

std::string to_string(DichotomyVerdict::Kind kind) {
  switch (kind) {
    case DichotomyVerdict::Kind::Elliptic:
      return "ELLIPTIC";
    case DichotomyVerdict::Kind::Hyperbolic:
      return "HYPERBOLIC";
    case DichotomyVerdict::Kind::Undetermined:
      break;
  }
  return "UNDETERMINED";
}

std::string DichotomyVerdict::summary() const {
  return to_string(kind) + " (" + witness + "; generators at degrees " +
         join_degrees(generator_degrees) + ")";
}

DichotomyVerdict classify_dichotomy(const Presentation& h, int window) {
  if (!h.formal_dimension())
    throw InputError("classification needs a formal dimension");
  const int m = *h.formal_dimension();
  const int through = std::max({window, 2 * m, 2});

  DichotomyVerdict v;
  ModelBuilder builder(h);
  auto finish = [&] {
    v.table = builder.table();
    v.generator_degrees = v.table.generator_degrees();
    std::size_t running = 0;
    for (int n = 2; n <= v.table.computed_through; ++n) {
      running += v.table.dim(n);
      v.cumulative[n] = running;
    }
  };

  // Hyperbolic evidence is final, but the table is still carried through
  // degree 3 so that pi_3 is always reported.
  auto hyperbolic = [&] {
    builder.advance_to(3);
    v.kind = DichotomyVerdict::Kind::Hyperbolic;
    finish();
    return v;
  };
  while (builder.computed_through() < through) {
    const auto& rec = builder.advance();
    const int stage = rec.degree;
    const bool beyond = stage > 2 * m - 1 && rec.closed + rec.killers > 0;
    if (partial_fh_violation(builder.table(), m)) {
      builder.advance_to(3);
      const auto bad = partial_fh_violation(builder.table(), m);
      v.violated_bound = bad;
      v.witness = "FH bound " + bad->name + " violated: " + std::to_string(bad->lhs) + " > " +
                  std::to_string(bad->rhs) + " through degree " +
                  std::to_string(builder.computed_through());
      return hyperbolic();
    }
    if (beyond) {
      v.witness = "new generator in degree " + std::to_string(stage) + " > 2m-1 = " +
                  std::to_string(2 * m - 1);
      return hyperbolic();
    }
  }
  finish();

  const auto model = builder.model();
  const auto pure = is_pure(model);
  if (!pure) {
    v.witness = "model through degree " + std::to_string(through) +
                " is not pure; no bound violated";
    return v;
  }
  v.regularity = is_regular_sequence(*pure);
  if (!v.regularity->regular || pure->odd_count() != pure->even_count()) {
    v.witness = "pure model, but boundaries are not a maximal regular sequence: " +
                v.regularity->reason;
    return v;
  }
  for (int n = 0; n <= 2 * m; ++n) {
    const auto hm = cohomology_of_model(model, n);
    if (hm.dim != h.dim(n)) {
      v.witness = "H^" + std::to_string(n) + "(M) has dimension " + std::to_string(hm.dim) +
                  " but A^" + std::to_string(n) + " has " + std::to_string(h.dim(n));
      return v;
    }
  }
  v.audit = check_fh_bounds(v.table, m);
  v.kind = DichotomyVerdict::Kind::Elliptic;
  v.witness = "pure Sullivan, regular sequence";
  return v;
}

EulerReport euler_characteristics(const HomotopyTable& t, const Presentation& h) {
  if (!h.formal_dimension()) throw InputError("Euler characteristic needs a formal dimension");
  const int m = *h.formal_dimension();
  EulerReport r;
  r.topological = euler_characteristic(h, m);
  r.homotopy = static_cast<long>(t.even_total()) - static_cast<long>(t.odd_total());
  for (int k = 1; k <= m; k += 2)
    if (h.dim(k) != 0) r.odd_betti_vanish = false;
  if (r.topological > 0 && !r.odd_betti_vanish) {
    r.consistent_with_elliptic = false;
    r.flags.push_back("e > 0 but some odd Betti number is nonzero");
  }
  if (r.topological < 0) {
    r.consistent_with_elliptic = false;
    r.flags.push_back("e < 0 violates e >= 0 for elliptic spaces");
  }
  if (r.homotopy > 0) {
    r.consistent_with_elliptic = false;
    r.flags.push_back("chi_pi > 0: dim pi_even exceeds dim pi_odd");
  }
  if (r.topological > 0 && r.homotopy != 0) {
    r.consistent_with_elliptic = false;
    r.flags.push_back("e > 0 requires chi_pi = 0");
  }
  return r;
}

std::size_t pi3_from_cohomology(const Presentation& h) {
  return h.dim(3) + cup_square_kernel_dim(h);
}

}  // namespace rht
