#pragma once

// Sullivan models of formal spaces: the minimal model of (A, d = 0) built one
// degree at a time, pure-model detection, Koszul homology, regular sequences
// and the elliptic/hyperbolic decision.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rht/fpalgebra.hpp"
#include "rht/graded_ring.hpp"

namespace rht {

class UnsupportedInputError : public InputError {
 public:
  using InputError::InputError;
};

/// Free graded-commutative algebra with a decomposable differential, plus the
/// quasi-isomorphism data recorded while it was built.
struct SullivanAlgebra {
  AlgebraPtr ambient;
  std::vector<Polynomial> differential;  // d(g_i), in `ambient`
  std::vector<int> stage;                // degree at which g_i was added
  std::vector<Polynomial> to_cohomology; // image of g_i in the presentation
  int computed_through = 0;              // all generators of degree <= this exist

  Derivation derivation() const { return Derivation(ambient, differential); }
  std::vector<int> generator_degrees() const;
};

struct HomotopyTable {
  std::map<int, std::size_t> dims;  // degree -> dim pi_n (x) Q, nonzero only
  int computed_through = 0;

  std::size_t dim(int n) const;
  std::size_t total() const;
  std::size_t odd_total() const;
  std::size_t even_total() const;
  /// Sum of degrees over a basis of odd (resp. even) homotopy.
  long odd_degree_sum() const;
  long even_degree_sum() const;
  /// Each degree repeated dim pi_n times, ascending.
  std::vector<int> generator_degrees() const;

  friend bool operator==(const HomotopyTable&, const HomotopyTable&) = default;
};

HomotopyTable table_of(const SullivanAlgebra& s);

struct StageRecord {
  int degree = 0;
  std::size_t closed = 0;   // generators surjecting onto coker(H^n(M) -> A^n)
  std::size_t killers = 0;  // generators killing ker(H^{n+1}(M) -> A^{n+1})
};

/// Stagewise construction of the minimal model of a formal space from its
/// cohomology presentation. Each call to advance() adds the generators of
/// the next degree.
class ModelBuilder {
 public:
  /// Throws UnsupportedInputError unless A^1 = 0.
  explicit ModelBuilder(const Presentation& cohomology);

  int computed_through() const { return through_; }
  const std::vector<StageRecord>& stages() const { return stages_; }

  /// Adds generators of degree computed_through() + 1.
  const StageRecord& advance();
  void advance_to(int degree);

  SullivanAlgebra model() const;
  HomotopyTable table() const { return table_of(model()); }

 private:
  MatrixQ differential_matrix(int k) const;
  MatrixQ cohomology_map(int k) const;
  std::string fresh_name(const std::string& stem) const;

  Presentation h_;
  AlgebraPtr algebra_;
  std::vector<Polynomial> d_;
  std::vector<Polynomial> phi_;
  std::vector<int> stage_;
  int through_ = 1;
  std::vector<StageRecord> stages_;
};

/// The minimal model through degree max_degree (>= 2) and its homotopy table.
std::pair<SullivanAlgebra, HomotopyTable> build_bigraded_model(const Presentation& h,
                                                               int max_degree);

struct ModelCohomology {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<Polynomial> basis;  // cocycle representatives
};

/// H^n(M, d). Needs every generator of degree <= n, i.e. n <= computed_through;
/// throws InputError otherwise.
ModelCohomology cohomology_of_model(const SullivanAlgebra& s, int n);

/// Q (even, closed) and P (odd) with d(P) in S*Q.
struct PureSullivanData {
  AlgebraPtr even_algebra;            // S*Q
  std::vector<Generator> odd_gens;    // P
  std::vector<Polynomial> boundaries; // d(x_i), in even_algebra

  /// Validates parities, d(x_i) homogeneous of degree |x_i| + 1.
  PureSullivanData(AlgebraPtr even, std::vector<Generator> odd, std::vector<Polynomial> d);

  std::size_t even_count() const { return even_algebra->size(); }
  std::size_t odd_count() const { return odd_gens.size(); }
  /// S*Q / (boundaries).
  Presentation quotient() const;
};

std::optional<PureSullivanData> is_pure(const SullivanAlgebra& s);

/// dim H_j of the Koszul complex S*Q (x) Lambda^j P for each internal degree
/// w = 0..max_internal_degree. Internal degree is the weight preserved by the
/// differential: polynomial degree plus |d(x)| for every odd factor x.
std::vector<std::size_t> koszul_homology(const PureSullivanData& data, int j,
                                         int max_internal_degree);

/// sum|p_i| - sum|y_i| + max|p_i|, the default internal-degree bound.
int default_koszul_bound(const PureSullivanData& data);

struct RegularityReport {
  bool regular = false;
  std::string reason;
  int socle_degree = 0;     // sum|p_i| - sum|y_i| (square case)
  int checked_through = 0;  // internal degrees inspected
  std::optional<int> radical_power;  // least k with (Q)^k inside the ideal
};

/// Regular-sequence test for the boundaries. Square case: the quotient is
/// finite-dimensional (checked over D+1 .. D+max|p_i|), then H_1 = 0 is
/// confirmed and the radical power k is reported. |P| > |Q|: not a regular
/// sequence. |P| < |Q|: H_1 = 0 through the internal-degree bound.
RegularityReport is_regular_sequence(const PureSullivanData& data,
                                     std::optional<int> internal_bound = std::nullopt);

struct BoundCheck {
  std::string name;     // "(i)", "(ii)", "(iii)", "(iv)", "cat0"
  std::string formula;
  long lhs = 0;
  long rhs = 0;
  bool pass = false;
};

struct FHAudit {
  int formal_dimension = 0;
  std::vector<BoundCheck> checks;
  bool all_pass() const;
  const BoundCheck& check(const std::string& name) const;
};

/// Friedlander-Halperin audit. Requires the table to be complete through
/// 2m - 1 (InputError otherwise).
FHAudit check_fh_bounds(const HomotopyTable& t, int m, std::optional<int> cat0 = std::nullopt);

/// The bounds (i)/(ii) only grow as generators are added, so a violation on a
/// partial table is already conclusive.
std::optional<BoundCheck> partial_fh_violation(const HomotopyTable& t, int m);

struct DichotomyVerdict {
  enum class Kind { Elliptic, Hyperbolic, Undetermined };

  Kind kind = Kind::Undetermined;
  HomotopyTable table;
  std::vector<int> generator_degrees;
  std::optional<FHAudit> audit;
  std::optional<RegularityReport> regularity;
  std::optional<BoundCheck> violated_bound;
  std::string witness;
  /// Cumulative sum of dim pi_k for k <= n, per degree n (growth diagnostic).
  std::map<int, std::size_t> cumulative;

  std::string summary() const;
};

std::string to_string(DichotomyVerdict::Kind kind);

/// Builds the model through max(window, 2m) and decides. Elliptic needs a pure
/// model whose boundaries form a regular sequence, with H(M) matching A
/// through 2m. Hyperbolic needs an FH-bound violation or a generator above
/// 2m - 1. Anything else is Undetermined. Requires a formal dimension.
DichotomyVerdict classify_dichotomy(const Presentation& h, int window);

struct EulerReport {
  long topological = 0;  // e = sum (-1)^k b_k
  long homotopy = 0;     // chi_pi = dim pi_even - dim pi_odd
  bool odd_betti_vanish = true;
  bool consistent_with_elliptic = true;
  std::vector<std::string> flags;
};

EulerReport euler_characteristics(const HomotopyTable& t, const Presentation& h);

/// b_3 + dim ker(S^2 A^2 -> A^4): the value dim pi_3 must take.
std::size_t pi3_from_cohomology(const Presentation& h);

}  // namespace rht
