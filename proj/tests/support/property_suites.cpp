#include "property_suites.hpp"

#include <sstream>

#include "rht/kahler.hpp"
#include "rht/sullivan.hpp"

namespace rht::testing {

Rational Gen::small_rational(int range, int max_den) {
  Rational q(uniform(-range, range), uniform(1, max_den));
  q.canonicalize();
  return q;
}

AlgebraPtr Gen::algebra(int min_gens, int max_gens, int max_degree) {
  std::vector<Generator> gens;
  const int k = uniform(min_gens, max_gens);
  for (int i = 0; i < k; ++i) gens.push_back({"g" + std::to_string(i), uniform(1, max_degree)});
  return FreeGCA::make(std::move(gens));
}

Polynomial Gen::homogeneous(const AlgebraPtr& alg, int degree, int max_terms) {
  Polynomial p(alg);
  const auto& basis = alg->basis(degree);
  if (basis.empty()) return p;
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Rational c = small_rational();
    if (is_zero(c)) c = 1;
    p += Polynomial::term(alg, pick(basis), c);
  }
  return p;
}

MatrixQ Gen::sparse_matrix(int max_rows, int max_cols, double density) {
  MatrixQ m(static_cast<std::size_t>(uniform(1, max_rows)),
            static_cast<std::size_t>(uniform(1, max_cols)));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (coin(density)) m.set(r, c, small_rational(4, 2));
  // Occasionally duplicate a row so dependent rows show up often.
  if (m.rows() > 1 && coin(0.3)) {
    const MatrixQ::Row first = m.row(0);
    for (std::size_t c = 0; c < m.cols(); ++c) m.set(m.rows() - 1, c, 0);
    for (const auto& [c, v] : first) m.set(m.rows() - 1, c, 2 * v);
  }
  return m;
}

std::vector<std::vector<Rational>> Gen::invertible(int k) {
  for (;;) {
    std::vector<VectorQ> a(static_cast<std::size_t>(k), VectorQ(static_cast<std::size_t>(k)));
    for (auto& row : a)
      for (auto& x : row) x = uniform(-3, 3);
    if (rank(MatrixQ::from_dense(a)) == static_cast<std::size_t>(k)) return a;
  }
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.algebra()->size()) throw InputError("substitute: image count");
  const auto& target = images.empty() ? p.algebra() : images.front().algebra();
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.exponent(i)) t = t * power(images[i], m.exponent(i));
    out += t;
  }
  return out;
}

ChangedRing change_basis(const Presentation& p, const std::vector<std::vector<Rational>>& a) {
  const auto& alg = p.ambient();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < alg->size(); ++i) {
    Polynomial img(alg);
    for (std::size_t j = 0; j < alg->size(); ++j)
      img += a[i][j] * Polynomial::generator(alg, j);
    images.push_back(img);
  }
  std::vector<Polynomial> rels;
  for (const auto& r : p.relations()) rels.push_back(substitute(r, images));
  return {Presentation(alg, std::move(rels), p.formal_dimension()), images};
}

std::vector<long> free_series(const std::vector<int>& degrees, int n) {
  std::vector<long> s(static_cast<std::size_t>(n) + 1, 0);
  s[0] = 1;
  for (int d : degrees) {
    if (d % 2) {
      for (int k = n; k >= d; --k) s[k] += s[k - d];  // times (1 + t^d)
    } else {
      for (int k = d; k <= n; ++k) s[k] += s[k - d];  // times 1/(1 - t^d)
    }
  }
  return s;
}

namespace {

// Runs `cases` iterations; `body` returns an empty string on success.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int cases,
                      const std::function<std::string(Gen&)>& body) {
  SuiteResult r;
  r.name = name;
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    std::string msg;
    try {
      msg = body(gen);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!msg.empty()) {
      if (r.failures++ == 0)
        r.first_failure = "seed " + std::to_string(seed) + " case " + std::to_string(i) + ": " + msg;
    }
  }
  return r;
}

Polynomial random_monomial(Gen& g, const AlgebraPtr& alg, int degree) {
  const auto& basis = alg->basis(degree);
  if (basis.empty()) return Polynomial(alg);
  return Polynomial::term(alg, g.pick(basis), Rational(1));
}

// A degree with a nonempty basis, or -1.
int populated_degree(Gen& g, const AlgebraPtr& alg, int lo, int hi) {
  for (int tries = 0; tries < 20; ++tries) {
    const int d = g.uniform(lo, hi);
    if (!alg->basis(d).empty()) return d;
  }
  return -1;
}

std::optional<Presentation> random_diamond_ring(Gen& g, bool allow_c) {
  const int which = g.uniform(0, allow_c ? 2 : 1);
  if (which == 0) return ring_diamond_a();
  if (which == 1) return ring_diamond_b(g.small_rational(4, 3));
  try {
    return ring_diamond_c(g.small_rational(3, 2), g.small_rational(3, 2), g.small_rational(3, 2),
                          g.small_rational(3, 2));
  } catch (const InputError&) {
    return std::nullopt;  // parameters where the quotient is not 6-dimensional
  }
}

}  // namespace

SuiteResult koszul_sign_suite(std::uint64_t seed, int cases) {
  return run_suite("Koszul-sign coherence", seed, cases, [](Gen& g) -> std::string {
    const auto alg = g.algebra(2, 5, 5);
    const int da = populated_degree(g, alg, 1, 9);
    const int db = populated_degree(g, alg, 1, 9);
    if (da < 0 || db < 0) return "";
    const auto a = random_monomial(g, alg, da);
    const auto b = random_monomial(g, alg, db);
    const Rational sign = (da * db) % 2 ? -1 : 1;
    if (a * b != sign * (b * a)) return "ab != (-1)^{|a||b|} ba for " + a.to_string() + ", " + b.to_string();
    const auto c = g.homogeneous(alg, populated_degree(g, alg, 1, 6));
    if ((a * b) * c != a * (b * c)) return "associativity fails";
    for (std::size_t i = 0; i < alg->size(); ++i)
      if (alg->generator(i).odd()) {
        const auto x = Polynomial::generator(alg, i);
        if (!(x * x).is_zero()) return "odd square nonzero";
      }
    return "";
  });
}

SuiteResult leibniz_suite(std::uint64_t seed, int cases) {
  return run_suite("Leibniz rule", seed, cases, [](Gen& g) -> std::string {
    const auto alg = g.algebra(2, 4, 4);
    std::vector<Polynomial> images;
    for (const auto& gen : alg->generators())
      images.push_back(g.coin(0.8) ? g.homogeneous(alg, gen.degree + 1) : Polynomial(alg));
    const Derivation d(alg, images);
    const int da = populated_degree(g, alg, 1, 8);
    const int db = populated_degree(g, alg, 1, 8);
    if (da < 0 || db < 0) return "";
    const auto a = g.homogeneous(alg, da);
    const auto b = g.homogeneous(alg, db);
    const Rational sign = da % 2 ? -1 : 1;
    const auto lhs = d.apply(a * b);
    const auto rhs = d.apply(a) * b + sign * (a * d.apply(b));
    if (lhs != rhs) return "d(ab) = " + lhs.to_string() + " but Leibniz gives " + rhs.to_string();
    return "";
  });
}

SuiteResult d_squared_suite(std::uint64_t seed, int cases) {
  return run_suite("d^2 = 0 on built models", seed, cases, [](Gen& g) -> std::string {
    const int k = g.uniform(1, 3);
    std::vector<Generator> gens;
    for (int i = 0; i < k; ++i) gens.push_back({"y" + std::to_string(i + 1), 2});
    if (g.coin(0.3)) gens.push_back({"z", g.coin() ? 3 : 4});
    const auto alg = FreeGCA::make(gens);
    std::vector<Polynomial> rels;
    const int nrels = g.uniform(1, k + 1);
    for (int i = 0; i < nrels; ++i) rels.push_back(g.homogeneous(alg, g.pick(std::vector<int>{4, 6}), 3));
    const Presentation h(alg, rels);
    const int through = k == 3 ? 5 : 6;
    const auto [model, table] = build_bigraded_model(h, through);
    const Derivation d = model.derivation();
    for (std::size_t i = 0; i < model.ambient->size(); ++i) {
      if (!d.apply(model.differential[i]).is_zero())
        return "d(d(" + model.ambient->generator(i).name + ")) != 0";
      for (const auto& [m, c] : model.differential[i].terms())
        if (m.length() < 2) return "differential has a linear term";
    }
    if (table.dim(3) != h.dim(3) + cup_square_kernel_dim(h)) return "pi_3 identity fails";
    const int dp = populated_degree(g, model.ambient, 2, through);
    if (dp > 0) {
      const auto p = g.homogeneous(model.ambient, dp);
      if (!d.apply(d.apply(p)).is_zero()) return "d^2 p != 0";
    }
    return "";
  });
}

SuiteResult rank_nullity_suite(std::uint64_t seed, int cases) {
  return run_suite("rank-nullity and exact solve", seed, cases, [](Gen& g) -> std::string {
    const auto m = g.sparse_matrix(12, 12, g.uniform(1, 9) / 10.0);
    const auto dense = rref(m, {1000});
    const auto sparse = rref(m, {0});
    if (!(dense.reduced == sparse.reduced) || dense.pivot_cols != sparse.pivot_cols)
      return "dense and sparse elimination disagree";
    const auto ker = kernel_basis(m);
    if (dense.rank + ker.size() != m.cols()) return "rank + nullity != cols";
    for (const auto& v : ker)
      for (const auto& x : m.apply(v))
        if (!is_zero(x)) return "kernel vector not in kernel";
    if (!(rref(dense.reduced).reduced == dense.reduced)) return "rref not idempotent";
    VectorQ x(m.cols());
    for (auto& xi : x) xi = g.small_rational();
    const auto b = m.apply(x);
    const auto sol = solve(m, b);
    if (!sol || m.apply(*sol) != b) return "solve failed on a consistent system";
    VectorQ c(m.rows());
    for (auto& ci : c) ci = g.small_rational();
    std::vector<VectorQ> cols = m.transpose().to_dense();
    cols.push_back(c);
    const bool consistent = rank(MatrixQ::from_dense(cols)) == dense.rank;
    const auto sol2 = solve(m, c);
    if (sol2.has_value() != consistent) return "solve disagrees with the rank test";
    if (sol2 && m.apply(*sol2) != c) return "solve returned a wrong solution";
    return "";
  });
}

SuiteResult quotient_suite(std::uint64_t seed, int cases) {
  return run_suite("quotient well-definedness", seed, cases, [](Gen& g) -> std::string {
    auto ring = random_diamond_ring(g, true);
    if (!ring) ring = ring_projective_space(g.uniform(1, 4));
    const auto& alg = ring->ambient();
    auto perturb = [&](const Polynomial& f, int deg) {
      Polynomial out = f;
      for (const auto& r : ring->relations()) {
        const int rest = deg - *r.degree();
        if (rest >= 0 && g.coin(0.7)) out += g.homogeneous(alg, rest, 2) * r;
      }
      return out;
    };
    const int df = 2 * g.uniform(0, 3);
    const int dg = 2 * g.uniform(0, 3);
    const auto f = g.homogeneous(alg, df);
    const auto h = g.homogeneous(alg, dg);
    const auto f2 = perturb(f, df);
    const auto h2 = perturb(h, dg);
    if (f.is_zero() || h.is_zero()) return "";
    if (reduce(*ring, f) != reduce(*ring, f2)) return "reduce(f) depends on the representative";
    const auto prod = f * h;
    if (prod.is_zero()) return "";
    if (reduce(*ring, prod) != reduce(*ring, f2 * h2)) return "product not well defined";
    return "";
  });
}

SuiteResult hilbert_series_suite(std::uint64_t seed, int cases) {
  return run_suite("Hilbert series vs generating function", seed, cases, [](Gen& g) -> std::string {
    const int n = 20;
    if (g.coin()) {
      const auto alg = g.algebra(1, 4, 5);
      std::vector<int> degrees;
      for (const auto& gen : alg->generators()) degrees.push_back(gen.degree);
      const auto oracle = free_series(degrees, n);
      const auto h = hilbert_series(Presentation(alg, {}), n);
      for (int k = 0; k <= n; ++k)
        if (static_cast<long>(h[k]) != oracle[k])
          return "free algebra: dim in degree " + std::to_string(k) + " is " +
                 std::to_string(h[k]) + ", series gives " + std::to_string(oracle[k]);
      return "";
    }
    // Complete intersection Q[y_1..y_k]/(y_i^{e_i}), possibly after a change
    // of basis: series prod (1 - t^{2 e_i}) / (1 - t^2)^k.
    const int k = g.uniform(1, 3);
    std::vector<Generator> gens;
    for (int i = 0; i < k; ++i) gens.push_back({"y" + std::to_string(i + 1), 2});
    const auto alg = FreeGCA::make(gens);
    std::vector<Polynomial> rels;
    std::vector<int> exps;
    for (int i = 0; i < k; ++i) {
      exps.push_back(g.uniform(1, 4));
      rels.push_back(power(Polynomial::generator(alg, static_cast<std::size_t>(i)), exps.back()));
    }
    Presentation p(alg, rels);
    if (g.coin()) p = change_basis(p, g.invertible(k)).ring;
    auto oracle = free_series(std::vector<int>(static_cast<std::size_t>(k), 2), n);
    for (int e : exps)
      for (int d = n; d >= 2 * e; --d) oracle[d] -= oracle[d - 2 * e];
    const auto h = hilbert_series(p, n);
    long euler = 0;
    for (int d = 0; d <= n; ++d) {
      if (static_cast<long>(h[d]) != oracle[d])
        return "complete intersection: degree " + std::to_string(d) + " has " +
               std::to_string(h[d]) + ", series gives " + std::to_string(oracle[d]);
      euler += (d % 2 ? -1 : 1) * oracle[d];
    }
    if (euler_characteristic(p, n) != euler) return "Euler characteristic mismatch";
    return "";
  });
}

SuiteResult poincare_suite(std::uint64_t seed, int cases) {
  return run_suite("Poincare duality on diamonds (a)/(b)/(c)", seed, cases, [](Gen& g) -> std::string {
    auto ring = random_diamond_ring(g, true);
    if (!ring) ring = ring_diamond_c();
    const auto changed = change_basis(*ring, g.invertible(static_cast<int>(ring->ambient()->size())));
    const auto rep = check_poincare_duality(changed.ring, 6);
    if (!rep.nondegenerate) return "pairing degenerate";
    return "";
  });
}

SuiteResult lefschetz_suite(std::uint64_t seed, int cases) {
  return run_suite("hard Lefschetz pass/fail", seed, cases, [](Gen& g) -> std::string {
    const bool use_c = g.coin();
    const auto base = use_c ? ring_diamond_c() : ring_diamond_b();
    const auto changed = change_basis(base, g.invertible(use_c ? 3 : 2));
    const auto& omega = changed.generator_images[0];
    const auto& primitive = changed.generator_images[1];
    if (!check_hard_lefschetz(changed.ring, omega, 3).holds) return "fails for the Kahler class";
    if (check_hard_lefschetz(changed.ring, primitive, 3).holds) return "holds for a primitive class";
    return "";
  });
}

SuiteResult hodge_riemann_suite(std::uint64_t seed, int cases) {
  return run_suite("Hodge-Riemann sign on primitive classes", seed, cases, [](Gen& g) -> std::string {
    std::optional<Presentation> ring;
    while (!ring || ring->ambient()->size() < 2) ring = random_diamond_ring(g, true);
    const int k = static_cast<int>(ring->ambient()->size());
    const auto changed = change_basis(*ring, g.invertible(k));
    const auto& omega = changed.generator_images[0];
    const auto prims = primitive_basis(changed.ring, omega, 3);
    if (static_cast<int>(prims.size()) != k - 1) return "wrong number of primitive classes";
    Polynomial y(changed.ring.ambient());
    while (y.is_zero() || in_ideal(changed.ring, y)) {
      y = Polynomial(changed.ring.ambient());
      for (const auto& p : prims) y += g.small_rational(3, 2) * p;
    }
    const int s = hodge_riemann_sign(changed.ring, omega, y, 3);
    if (s != -1) return "sign " + std::to_string(s) + " for " + y.to_string();
    return "";
  });
}

const std::vector<NamedSuite>& all_suites() {
  static const std::vector<NamedSuite> suites = {
      {"koszul_sign", koszul_sign_suite},   {"leibniz", leibniz_suite},
      {"d_squared", d_squared_suite},       {"rank_nullity", rank_nullity_suite},
      {"quotient", quotient_suite},         {"hilbert_series", hilbert_series_suite},
      {"poincare", poincare_suite},         {"lefschetz", lefschetz_suite},
      {"hodge_riemann", hodge_riemann_suite},
  };
  return suites;
}

}  // namespace rht::testing
