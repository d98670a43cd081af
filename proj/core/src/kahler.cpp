#include "rht/kahler.hpp"

#include <algorithm>

namespace rht {

HodgeDiamond HodgeDiamond::from_row_major(int n, const std::vector<long>& values) {
  if (n != 2 && n != 3)
    throw InputError("complex dimension must be 2 or 3, got " + std::to_string(n));
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  if (values.size() != side * side)
    throw InputError("a diamond with n = " + std::to_string(n) + " needs " +
                     std::to_string(side * side) + " Hodge numbers, got " +
                     std::to_string(values.size()));
  HodgeDiamond d;
  d.n = n;
  d.h.assign(side, std::vector<long>(side, 0));
  for (std::size_t p = 0; p < side; ++p)
    for (std::size_t q = 0; q < side; ++q) d.h[p][q] = values[p * side + q];
  return d;
}

long HodgeDiamond::betti(int k) const {
  long b = 0;
  for (int p = 0; p <= n; ++p) {
    const int q = k - p;
    if (q >= 0 && q <= n) b += h[p][q];
  }
  return b;
}

std::vector<long> HodgeDiamond::row_major() const {
  std::vector<long> out;
  for (const auto& row : h) out.insert(out.end(), row.begin(), row.end());
  return out;
}

namespace {

// Diamonds with h^{p,p} = k for 0 < p < n and zeros off the middle column.
HodgeDiamond middle_column(int n, long k) {
  std::vector<long> v(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (int p = 0; p <= n; ++p) v[p * (n + 1) + p] = (p == 0 || p == n) ? 1 : k;
  return HodgeDiamond::from_row_major(n, v);
}

}  // namespace

HodgeDiamond surface_diamond(char label) {
  switch (label) {
    case 'a':
      return middle_column(2, 1);
    case 'b':
      return middle_column(2, 2);
  }
  throw InputError(std::string("no surface diamond labelled '") + label + "'");
}

HodgeDiamond threefold_diamond(char label) {
  switch (label) {
    case 'a':
      return middle_column(3, 1);
    case 'b':
      return middle_column(3, 2);
    case 'c':
      return middle_column(3, 3);
    case 'd': {
      auto d = middle_column(3, 1);
      d.h[2][0] = d.h[0][2] = d.h[3][1] = d.h[1][3] = 1;
      return d;
    }
  }
  throw InputError(std::string("no threefold diamond labelled '") + label + "'");
}

HodgeDiamond k3_diamond() {
  return HodgeDiamond::from_row_major(2, {1, 0, 1, 0, 20, 0, 1, 0, 1});
}

DiamondReport validate_diamond(const HodgeDiamond& d) {
  DiamondReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.violations.push_back(std::move(msg));
  };
  if (d.n != 2 && d.n != 3) {
    fail("complex dimension must be 2 or 3");
    return r;
  }
  const std::size_t side = static_cast<std::size_t>(d.n) + 1;
  if (d.h.size() != side ||
      std::any_of(d.h.begin(), d.h.end(), [&](const auto& row) { return row.size() != side; })) {
    fail("grid must be " + std::to_string(side) + "x" + std::to_string(side));
    return r;
  }
  auto cell = [](int p, int q) {
    return "h(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  const int n = d.n;
  if (d.at(0, 0) != 1) fail("h(0,0) must be 1, got " + std::to_string(d.at(0, 0)));
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (d.at(p, q) < 0) fail(cell(p, q) + " is negative");
      if (q > p && d.at(p, q) != d.at(q, p))
        fail("Hodge symmetry: " + cell(p, q) + " = " + std::to_string(d.at(p, q)) +
             " but " + cell(q, p) + " = " + std::to_string(d.at(q, p)));
      const int sp = n - p, sq = n - q;
      if (std::make_pair(sp, sq) > std::make_pair(p, q) && d.at(p, q) != d.at(sp, sq))
        fail("Serre duality: " + cell(p, q) + " = " + std::to_string(d.at(p, q)) + " but " +
             cell(sp, sq) + " = " + std::to_string(d.at(sp, sq)));
    }
  // Powers of a Kahler class are nonzero in every H^{p,p}.
  for (int p = 1; p < n; ++p)
    if (d.at(p, p) < 1) fail(cell(p, p) + " must be >= 1 on a Kahler manifold");
  if (d.at(1, 0) != 0 || d.at(0, 1) != 0) {
    r.simply_connected = false;
    r.violations.push_back("not simply connected: h(1,0) = " + std::to_string(d.at(1, 0)) +
                           ", h(0,1) = " + std::to_string(d.at(0, 1)));
  }
  return r;
}

namespace {

void require_valid(const HodgeDiamond& d, int n) {
  const auto r = validate_diamond(d);
  if (!r.valid) {
    std::string msg = "invalid Hodge diamond:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw InputError(msg);
  }
  if (d.n != n)
    throw InputError("expected a diamond of complex dimension " + std::to_string(n) +
                     ", got " + std::to_string(d.n));
}

}  // namespace

SurfaceInvariants surface_invariants(const HodgeDiamond& d) {
  require_valid(d, 2);
  SurfaceInvariants s;
  s.q = d.at(0, 1);
  s.p_g = d.at(0, 2);
  s.chi_O = 1 - s.q + s.p_g;
  s.c2 = 2 - 4 * s.q + d.betti(2);
  s.c1sq = 12 * s.chi_O - s.c2;
  s.K2 = s.c1sq;
  // Topological Euler number and Noether's formula must agree.
  long e = 0;
  for (int k = 0; k <= 4; ++k) e += (k % 2 ? -1 : 1) * d.betti(k);
  if (e != s.c2) throw std::logic_error("c2 disagrees with the alternating Betti sum");
  return s;
}

std::string to_string(Ellipticity e) {
  switch (e) {
    case Ellipticity::Elliptic:
      return "elliptic";
    case Ellipticity::Conditional:
      return "conditional";
    case Ellipticity::NotElliptic:
      break;
  }
  return "not elliptic";
}

ClassificationVerdict classify_surface(const HodgeDiamond& d) {
  require_valid(d, 2);
  ClassificationVerdict v;
  const auto report = validate_diamond(d);
  const long b1 = d.betti(1);
  const long b2 = d.betti(2);
  if (!report.simply_connected) {
    v.trace.push_back("b1 = " + std::to_string(b1) +
                      " != 0: not simply connected, outside the classification");
    return v;
  }
  v.invariants = surface_invariants(d);
  v.trace.push_back("simply connected, so b1 = b3 = 0");
  if (b2 > 2) {
    v.trace.push_back("elliptic spaces satisfy b2 <= m/2 = 2; here b2 = " +
                      std::to_string(b2) + " > 2");
    return v;
  }
  v.elliptic = Ellipticity::Elliptic;
  if (d == surface_diamond('a')) {
    v.diamond = 'a';
    v.trace.push_back("diamond (a): by Yau's theorem X is the complex projective plane");
    v.cases.push_back({"complex projective plane P^2", "unconditional"});
    return v;
  }
  v.diamond = 'b';
  const auto& s = *v.invariants;
  v.trace.push_back("diamond (b): chi(O) = 1 - q + p_g = " + std::to_string(s.chi_O) +
                    ", c2 = 2 - 4q + b2 = " + std::to_string(s.c2) +
                    ", c1^2 = 12 chi(O) - c2 = " + std::to_string(s.c1sq));
  v.trace.push_back("kappa = -infinity: rational with h(1,1) = 2, a Hirzebruch surface");
  v.trace.push_back("kappa = 0: minimal simply connected surfaces are K3, c1^2 = 0 != 8");
  v.trace.push_back("kappa = 1: minimal elliptic fibrations have c1^2 = 0 != 8");
  v.trace.push_back("kappa = 2: a simply connected fake quadric, existence open");
  v.cases.push_back({"Hirzebruch surface S_h", "h >= 0"});
  v.cases.push_back({"simply connected fake quadric",
                     "existence open; would have q = p_g = 0, K^2 = 8, c2 = 4"});
  return v;
}

ClassificationVerdict classify_threefold(const HodgeDiamond& d) {
  require_valid(d, 3);
  ClassificationVerdict v;
  if (!validate_diamond(d).simply_connected) {
    v.trace.push_back("b1 = " + std::to_string(d.betti(1)) +
                      " != 0: not simply connected, outside the classification");
    return v;
  }
  const long b2 = d.betti(2);
  const long b3 = d.betti(3);
  if (b3 > 0) {
    v.trace.push_back("b3 = " + std::to_string(b3) +
                      " > 0, but a simply connected symplectic elliptic 6-manifold has b3 = 0");
    return v;
  }
  if (b2 > 3) {
    v.trace.push_back("elliptic spaces satisfy b2 <= m/2 = 3; here b2 = " +
                      std::to_string(b2) + " > 3");
    return v;
  }
  if (d == threefold_diamond('d')) {
    v.diamond = 'd';
    const auto ex = exclude_diamond_d(d);
    v.trace.push_back("diamond (d): no simply connected compact Kahler threefold realises it");
    v.trace.insert(v.trace.end(), ex.trace.begin(), ex.trace.end());
    return v;
  }
  for (char label : {'a', 'b', 'c'}) {
    if (d != threefold_diamond(label)) continue;
    v.elliptic = Ellipticity::Elliptic;
    v.diamond = label;
    v.trace.push_back(std::string("diamond (") + label +
                      "): the cohomology ring has a pure minimal model whose boundaries "
                      "form a regular sequence");
    static const char* examples[] = {
        "P^3, the quadric threefold, X_22 (b2 = 1, b3 = 0)",
        "P^1-bundles over P^2, P^2-bundles over P^1",
        "P^1-bundles over Hirzebruch surfaces, Hirzebruch-surface bundles over P^1"};
    v.cases.push_back({std::string("Kahler threefold with Hodge diamond (") + label + ")",
                       std::string("examples: ") + examples[label - 'a']});
    return v;
  }
  throw std::logic_error("valid threefold diamond with b3 = 0, b2 <= 3 left unclassified");
}

DiamondDExclusion exclude_diamond_d(const HodgeDiamond& d) {
  if (d != threefold_diamond('d')) throw InputError("input is not threefold diamond (d)");
  DiamondDExclusion ex;
  ex.chi_O = d.at(0, 0) - d.at(0, 1) + d.at(0, 2) - d.at(0, 3);
  ex.c1c2 = 24 * ex.chi_O;
  ex.three_c1c2 = 3 * ex.c1c2;
  const auto s = [](long x) { return std::to_string(x); };
  ex.cases.push_back({"> 0", "anticanonical bundle positive, X is Fano, so h(2,0) = 0",
                      "contradicts h(2,0) = " + s(d.at(2, 0))});
  ex.cases.push_back({"= 0", "c1 = 0 and X simply connected, so K_X is trivial and h(3,0) = 1",
                      "contradicts h(3,0) = " + s(d.at(3, 0))});
  ex.cases.push_back(
      {"< 0",
       "K_X positive; Miyaoka-Yau gives int c1^3 >= 3 int c1 c2, and Riemann-Roch gives "
       "int c1 c2 = 24 chi(O) = " + s(ex.c1c2),
       "int c1^3 = lambda^-3 int omega^3 < 0, violating int c1^3 >= 3 int c1 c2 = " +
           s(ex.three_c1c2)});
  ex.trace.push_back("h(1,1) = 1, so c1 = lambda * omega for some real lambda");
  ex.trace.push_back("chi(O) = 1 - h(0,1) + h(0,2) - h(0,3) = " + s(ex.chi_O));
  for (const auto& c : ex.cases)
    ex.trace.push_back("lambda " + c.sign + ": " + c.consequence + "; " + c.contradiction);
  return ex;
}

B3Bound symplectic_b3_bound(int b2, int n, int r) {
  if (n < 1) throw InputError("complex dimension must be >= 1");
  if (r < 0) throw InputError("kernel dimension must be >= 0");
  if (b2 < 0) throw InputError("b2 must be >= 0");
  B3Bound out;
  out.upper = n - r;
  if (r > n) {
    out.vacuous = true;
    out.note = "r > n: the bound b3 <= n - r is vacuous";
    return out;
  }
  out.note = "b3 <= " + std::to_string(out.upper);
  if (n == 3) {
    // e = 2 + 2 b2 - b3 with omega, omega^2 nonzero; b3 <= n - r keeps e > 0,
    // and positive Euler characteristic kills odd Betti numbers.
    out.euler_lower = 2 + 2L * std::max(b2, 1) - out.upper;
    if (*out.euler_lower > 0) {
      out.forced = 0;
      out.note += "; e >= " + std::to_string(*out.euler_lower) +
                  " > 0, so all odd Betti numbers vanish and b3 = 0";
    }
  }
  return out;
}

LSBounds ls_bounds(const HodgeDiamond& d) {
  require_valid(d, d.n);
  LSBounds b;
  b.cat0_lower = d.n;
  b.cat_upper = d.n;
  b.exact = d.n;
  const auto s = std::to_string(d.n);
  b.squeeze = s + " <= cup-length <= cat0 <= cat <= " + std::to_string(2 * d.n) + "/2 = " + s;
  return b;
}

LSBounds ls_bounds(const Presentation& p, int n) {
  if (n < 1) throw InputError("complex dimension must be >= 1");
  if (p.dim(1) != 0) throw InputError("ls_bounds needs a simply connected input");
  LSBounds b;
  b.cat0_lower = cup_length(p, 2 * n + p.max_generator_degree());
  b.cat_upper = n;
  if (b.cat0_lower == b.cat_upper) b.exact = n;
  b.squeeze = std::to_string(b.cat0_lower) + " = cup-length <= cat0 <= cat <= " +
              std::to_string(2 * n) + "/2 = " + std::to_string(n);
  return b;
}

Presentation ring_projective_space(int k) {
  if (k < 1) throw InputError("projective space dimension must be >= 1");
  auto alg = FreeGCA::make({{"y", 2}});
  return Presentation(alg, {power(Polynomial::generator(alg, 0), k + 1)}, 2 * k);
}

Presentation ring_diamond_a() { return ring_projective_space(3); }

Presentation ring_diamond_b(const Rational& beta) {
  auto alg = FreeGCA::make({{"y1", 2}, {"y2", 2}});
  const auto y1 = Polynomial::generator(alg, 0);
  const auto y2 = Polynomial::generator(alg, 1);
  return Presentation(alg, {y1 * y1 - beta * (y1 * y2) + y2 * y2, y1 * y1 * y2}, 6);
}

Presentation ring_diamond_c(const Rational& alpha, const Rational& beta, const Rational& gamma,
                            const Rational& delta) {
  auto alg = FreeGCA::make({{"y1", 2}, {"y2", 2}, {"y3", 2}});
  const auto y1 = Polynomial::generator(alg, 0);
  const auto y2 = Polynomial::generator(alg, 1);
  const auto y3 = Polynomial::generator(alg, 2);
  return Presentation(alg,
                      {y2 * y2 + y1 * y1 - alpha * (y1 * y2) - beta * (y1 * y3),
                       y2 * y3 - beta * (y1 * y2) - gamma * (y1 * y3),
                       y3 * y3 + y1 * y1 - gamma * (y1 * y2) - delta * (y1 * y3)},
                      6);
}

Presentation model_ring(char label) {
  switch (label) {
    case 'a':
      return ring_diamond_a();
    case 'b':
      return ring_diamond_b();
    case 'c':
      return ring_diamond_c();
  }
  throw InputError(std::string("no elliptic model ring for diamond '") + label + "'");
}

}  // namespace rht
