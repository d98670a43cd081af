#pragma once

// Hodge diamonds of simply connected compact Kahler surfaces and threefolds,
// and the rules that decide which of them have elliptic homotopy type.

#include <optional>
#include <string>
#include <vector>

#include "rht/fpalgebra.hpp"

namespace rht {

struct HodgeDiamond {
  int n = 0;                            // complex dimension, 2 or 3
  std::vector<std::vector<long>> h;     // h[p][q], (n+1) x (n+1)

  /// Throws InputError unless n is 2 or 3 and the grid is (n+1)^2 row-major.
  static HodgeDiamond from_row_major(int n, const std::vector<long>& values);

  long at(int p, int q) const { return h.at(p).at(q); }
  long betti(int k) const;
  std::vector<long> row_major() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

/// The diamonds that occur in the classification, labelled as in the
/// literature: surfaces (a), (b); threefolds (a)-(d).
HodgeDiamond surface_diamond(char label);
HodgeDiamond threefold_diamond(char label);
HodgeDiamond k3_diamond();

struct DiamondReport {
  bool valid = true;            // every check below except simply_connected
  bool simply_connected = true; // h(1,0) = h(0,1) = 0
  std::vector<std::string> violations;
};

DiamondReport validate_diamond(const HodgeDiamond& d);

struct SurfaceInvariants {
  long q = 0;
  long p_g = 0;
  long chi_O = 0;
  long c2 = 0;
  long c1sq = 0;
  long K2 = 0;
};

/// Throws InputError for an invalid diamond or n != 2.
SurfaceInvariants surface_invariants(const HodgeDiamond& d);

enum class Ellipticity { Elliptic, NotElliptic, Conditional };
std::string to_string(Ellipticity e);

struct ClassificationCase {
  std::string space;
  std::string conditions;
};

struct ClassificationVerdict {
  Ellipticity elliptic = Ellipticity::NotElliptic;
  std::optional<char> diamond;  // matched label, when one applies
  std::vector<ClassificationCase> cases;
  std::vector<std::string> trace;
  std::optional<SurfaceInvariants> invariants;
};

ClassificationVerdict classify_surface(const HodgeDiamond& d);
ClassificationVerdict classify_threefold(const HodgeDiamond& d);

struct LambdaCase {
  std::string sign;        // "> 0", "= 0", "< 0"
  std::string consequence;
  std::string contradiction;
};

struct DiamondDExclusion {
  long chi_O = 0;           // holomorphic Euler characteristic
  long c1c2 = 0;            // 24 * chi_O by Riemann-Roch
  long three_c1c2 = 0;
  std::vector<LambdaCase> cases;
  std::vector<std::string> trace;
};

/// Throws InputError unless d is threefold diamond (d).
DiamondDExclusion exclude_diamond_d(const HodgeDiamond& d);

struct B3Bound {
  int upper = 0;                    // b3 <= n - r
  bool vacuous = false;             // r > n
  std::optional<int> forced;        // n = 3: b3 = 0
  std::optional<long> euler_lower;  // n = 3: e >= 2 + 2 b2 - (n - r)
  std::string note;
};

/// Throws InputError when n < 1 or r < 0 or b2 < 0.
B3Bound symplectic_b3_bound(int b2, int n, int r);

struct LSBounds {
  int cat0_lower = 0;
  int cat_upper = 0;
  std::optional<int> exact;
  std::string squeeze;
};

/// From a Kahler diamond: omega^n != 0 gives cup length >= n.
LSBounds ls_bounds(const HodgeDiamond& d);
/// From a presentation of a 2n-dimensional symplectic (or Kahler) space; the
/// lower bound is the cup length.
LSBounds ls_bounds(const Presentation& p, int n);

/// Cohomology rings realising the elliptic threefold diamonds:
/// (a) Q[y]/(y^4);
/// (b) Q[y1,y2]/(y1^2 - beta y1 y2 + y2^2, y1^2 y2);
/// (c) Q[y1,y2,y3]/(p1, p2, p3) with parameters alpha..delta.
/// All have formal dimension 6.
Presentation ring_diamond_a();
Presentation ring_diamond_b(const Rational& beta = 0);
Presentation ring_diamond_c(const Rational& alpha = 0, const Rational& beta = 0,
                            const Rational& gamma = 0, const Rational& delta = 0);
/// Q[y]/(y^{k+1}) with |y| = 2, the projective space of complex dimension k.
Presentation ring_projective_space(int k);
/// Model ring for an elliptic threefold diamond label (zero parameters).
Presentation model_ring(char label);

}  // namespace rht
