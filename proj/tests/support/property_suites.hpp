#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Every suite is driven by a seeded generator, so a failure report
// (seed, case index) reproduces exactly.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rht/fpalgebra.hpp"
#include "rht/graded_ring.hpp"
#include "rht/matrix.hpp"

namespace rht::testing {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  Rational small_rational(int range = 5, int max_den = 3);
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }

  AlgebraPtr algebra(int min_gens, int max_gens, int max_degree);
  Polynomial homogeneous(const AlgebraPtr& alg, int degree, int max_terms = 4);
  MatrixQ sparse_matrix(int max_rows, int max_cols, double density);
  /// Invertible k x k matrix with small integer entries.
  std::vector<std::vector<Rational>> invertible(int k);

 private:
  std::mt19937_64 rng_;
};

/// Substitutes y_i -> images[i] (all in the same target algebra).
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Ring obtained from `p` by the linear change of generators y -> A y, and the
/// images of the original generators under that isomorphism. Only for
/// presentations whose generators all have the same degree.
struct ChangedRing {
  Presentation ring;
  std::vector<Polynomial> generator_images;
};
ChangedRing change_basis(const Presentation& p, const std::vector<std::vector<Rational>>& a);

/// Coefficients of prod_even 1/(1 - t^|y|) * prod_odd (1 + t^|x|) up to t^n.
std::vector<long> free_series(const std::vector<int>& degrees, int n);

SuiteResult koszul_sign_suite(std::uint64_t seed, int cases);
SuiteResult leibniz_suite(std::uint64_t seed, int cases);
SuiteResult d_squared_suite(std::uint64_t seed, int cases);
SuiteResult rank_nullity_suite(std::uint64_t seed, int cases);
SuiteResult quotient_suite(std::uint64_t seed, int cases);
SuiteResult hilbert_series_suite(std::uint64_t seed, int cases);
SuiteResult poincare_suite(std::uint64_t seed, int cases);
SuiteResult lefschetz_suite(std::uint64_t seed, int cases);
SuiteResult hodge_riemann_suite(std::uint64_t seed, int cases);

struct NamedSuite {
  const char* name;
  std::function<SuiteResult(std::uint64_t, int)> run;
};
const std::vector<NamedSuite>& all_suites();

}  // namespace rht::testing
