#pragma once

// Finitely presented graded-commutative algebras A = Lambda(V)/I, computed
// degree by degree with exact linear algebra. No Groebner bases: the degree-n
// part of I is spanned by the products g*r of relations r with monomials g of
// complementary degree.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rht/graded_ring.hpp"
#include "rht/matrix.hpp"

namespace rht {

class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPoincareAlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis of A_n. Representatives are single monomials that survive the
/// elimination of I_n, listed in graded-lex order.
struct DegreeBasis {
  int degree = 0;
  std::vector<Monomial> monomials;          // all of Lambda(V)_n, graded-lex
  std::vector<std::size_t> representative;  // indices into `monomials`
  std::vector<Polynomial> representatives;

  std::size_t dim() const { return representative.size(); }
  std::size_t ideal_dim() const { return monomials.size() - representative.size(); }

  /// Coordinates of the class of a degree-n polynomial. Zero iff f is in I_n.
  VectorQ coordinates(const Polynomial& f) const;
  /// The polynomial sum_i coords[i] * representatives[i].
  Polynomial from_coordinates(const AlgebraPtr& algebra, const VectorQ& coords) const;

  // Elimination state. Column k of `ideal_rref` is monomial
  // monomials.size() - 1 - k, so pivots land on graded-lex-late monomials.
  MatrixQ ideal_rref;
  std::vector<std::size_t> pivot_cols;
  std::map<Monomial, std::size_t, GradedLex> index;
};

class Presentation {
 public:
  /// Relations must be homogeneous of degree >= 2 and live in `ambient`.
  /// When `formal_dimension` is given it is verified: A_m != 0 and A_n = 0
  /// for m < n <= m + max(generator degree, relation degree).
  Presentation(AlgebraPtr ambient, std::vector<Polynomial> relations,
               std::optional<int> formal_dimension = std::nullopt);

  const AlgebraPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  std::optional<int> formal_dimension() const { return formal_dimension_; }

  int max_generator_degree() const;
  int max_relation_degree() const;

  /// Cached; safe to call concurrently.
  std::shared_ptr<const DegreeBasis> degree_basis(int n) const;

  std::size_t dim(int n) const { return n < 0 ? 0 : degree_basis(n)->dim(); }

 private:
  std::shared_ptr<const DegreeBasis> compute_basis(int n) const;

  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const DegreeBasis>> bases;
  };

  AlgebraPtr ambient_;
  std::vector<Polynomial> relations_;
  std::optional<int> formal_dimension_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

DegreeBasis degree_basis(const Presentation& p, int n);

/// Coordinates of f's class in degree_basis(p, deg f). Throws InputError for
/// inhomogeneous f. The zero polynomial reduces to an empty vector.
VectorQ reduce(const Presentation& p, const Polynomial& f);

/// True iff f lies in the ideal.
bool in_ideal(const Presentation& p, const Polynomial& f);

/// dim A_k for k = 0..max_degree.
std::vector<std::size_t> hilbert_series(const Presentation& p, int max_degree);

/// Alternating sum of dim A_k for k <= max_degree.
long euler_characteristic(const Presentation& p, int max_degree);

/// Largest q such that some product of q positive-degree classes is nonzero.
/// Requires A_k = 0 for the top max_generator_degree() degrees of the window;
/// throws InconclusiveError otherwise.
int cup_length(const Presentation& p, int max_degree);

/// Matrix of multiplication by a homogeneous class f: A_n -> A_{n+|f|},
/// columns indexed by the source basis.
MatrixQ multiplication_matrix(const Presentation& p, const Polynomial& f, int n);

/// dim ker(S^2 A_2 -> A_4), the cup-square kernel that feeds pi_3.
std::size_t cup_square_kernel_dim(const Presentation& p);

struct PoincareReport {
  int formal_dimension = 0;
  bool nondegenerate = true;
  std::vector<int> failing_degrees;
};

/// Pairing A_k x A_{m-k} -> A_m for every k. Throws NotPoincareAlgebraError
/// when dim A_m != 1.
PoincareReport check_poincare_duality(const Presentation& p, int m);

struct LefschetzDegree {
  int degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool isomorphism = false;
};

struct LefschetzReport {
  bool holds = true;
  std::vector<LefschetzDegree> degrees;
};

/// For k < n checks that omega^(n-k): A_k -> A_{2n-k} is an isomorphism.
/// Throws InputError when omega is not homogeneous of degree 2.
LefschetzReport check_hard_lefschetz(const Presentation& p, const Polynomial& omega, int n);

/// Basis of ker(omega^(n-1): A_2 -> A_2n) as polynomials in the
/// representative basis. Throws InputError when hard Lefschetz fails.
std::vector<Polynomial> primitive_basis(const Presentation& p, const Polynomial& omega, int n);

/// Sign (-1, 0, +1) of omega^(n-2) * y^2 measured against omega^n > 0.
/// Kahler inputs give -1 on nonzero primitive y. Throws InputError when y is
/// not primitive, and NotPoincareAlgebraError when dim A_2n != 1.
int hodge_riemann_sign(const Presentation& p, const Polynomial& omega, const Polynomial& y,
                       int n);

struct PrimitiveNormalization {
  /// t^2 such that omega^(n-2) (t y)^2 = -omega^n.
  Rational scale_squared;
  /// t*y when t is rational.
  std::optional<Polynomial> normalized;
};

/// Rescaling of a primitive class to the normalization
/// omega^(n-2) y^2 = -omega^n. Requires hodge_riemann_sign == -1.
PrimitiveNormalization normalize_primitive(const Presentation& p, const Polynomial& omega,
                                           const Polynomial& y, int n);

}  // namespace rht
