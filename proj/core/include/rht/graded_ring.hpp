#pragma once

// Free graded-commutative algebras over Q: polynomial on even generators,
// exterior on odd ones, with Koszul signs.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Generator {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

class Monomial {
 public:
  Monomial() = default;
  /// Exponents indexed by generator position; `degree` is the total degree.
  Monomial(std::vector<int> exponents, int degree)
      : exps_(std::move(exponents)), degree_(degree) {}

  const std::vector<int>& exponents() const { return exps_; }
  int exponent(std::size_t i) const { return exps_[i]; }
  int degree() const { return degree_; }
  /// Number of generator factors, counted with multiplicity.
  int length() const;
  bool is_one() const { return length() == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded lexicographic order: lower degree first; within a degree, larger
/// exponent of the earlier generator first (y1^2 < y1*y2 < y2^2).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class FreeGCA;
using AlgebraPtr = std::shared_ptr<const FreeGCA>;

class FreeGCA {
 public:
  /// Throws InputError on degree < 1, empty/duplicate names.
  explicit FreeGCA(std::vector<Generator> generators);
  FreeGCA(const FreeGCA&) = delete;
  FreeGCA& operator=(const FreeGCA&) = delete;

  static AlgebraPtr make(std::vector<Generator> generators);

  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Monomial one() const;
  Monomial generator_monomial(std::size_t i) const;
  /// Validates exponents (odd generators at most 1) and computes the degree.
  Monomial monomial(std::vector<int> exponents) const;

  /// The degree-n monomials in graded-lex order. Cached per degree.
  const std::vector<Monomial>& basis(int n) const;

  friend bool operator==(const FreeGCA& a, const FreeGCA& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Generator> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<const std::vector<Monomial>>> basis_cache_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Monomials of total degree n, graded-lex order.
std::vector<Monomial> monomial_basis(const FreeGCA& algebra, int n);

struct SignedMonomial {
  int sign = 0;  // 0 when the product vanishes
  Monomial monomial;
};

/// a*b rewritten in normal order: odd generators sorted into declaration
/// order with the Koszul sign accumulated.
SignedMonomial multiply(const FreeGCA& algebra, const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  explicit Polynomial(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  Polynomial(AlgebraPtr algebra, Terms terms);

  static Polynomial constant(AlgebraPtr algebra, const Rational& c);
  static Polynomial generator(AlgebraPtr algebra, std::size_t index);
  static Polynomial generator(AlgebraPtr algebra, const std::string& name);
  static Polynomial term(AlgebraPtr algebra, const Monomial& m, const Rational& c);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for zero and for polynomials whose terms share one degree.
  bool is_homogeneous() const { return homogeneous_; }
  /// Degree of a nonzero homogeneous polynomial.
  std::optional<int> degree() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial multiply(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Same monomials re-expressed in `target`, whose generator list must
  /// extend this polynomial's algebra.
  Polynomial embed(AlgebraPtr target) const;

  std::string to_string() const;

 private:
  void refresh();
  void check_same(const Polynomial& other) const;

  AlgebraPtr algebra_;
  Terms terms_;
  bool homogeneous_ = true;
};

/// Multiplication in the free algebra; throws InputError for operands from
/// different algebras.
Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// Power p^k, k >= 0.
Polynomial power(const Polynomial& p, int k);

class ParseError : public InputError {
 public:
  enum class Kind { Syntax, UnknownGenerator, ExteriorPower };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses sums of rational-coefficient monomials, e.g. "y1^2 - 2*y1*y2 + 1/2 y2^2".
/// `*` between factors is optional (whitespace works too).
Polynomial parse_poly(const std::string& src, const AlgebraPtr& algebra);

/// A graded derivation of degree +1 given by its values on generators.
class Derivation {
 public:
  /// `images[i]` is d(generator i); must be zero or homogeneous of degree
  /// |g_i| + 1. Throws InputError otherwise.
  Derivation(AlgebraPtr algebra, std::vector<Polynomial> images);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Monomial& m) const;
  Polynomial apply(const Polynomial& p) const;

 private:
  AlgebraPtr algebra_;
  std::vector<Polynomial> images_;
};

/// Extension of d to the whole algebra via d(ab) = d(a)b + (-1)^|a| a d(b).
Polynomial apply_derivation(const Derivation& d, const Polynomial& p);

}  // namespace rht
