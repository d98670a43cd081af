#include "rht/graded_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace rht {

int Monomial::length() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Larger exponent on an earlier generator sorts first.
  return a.exponents() > b.exponents();
}

FreeGCA::FreeGCA(std::vector<Generator> generators) : gens_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty()) throw InputError("generator with empty name");
    if (g.degree < 1)
      throw InputError("generator '" + g.name + "' has degree " +
                       std::to_string(g.degree) + "; degrees must be >= 1");
    if (!seen.insert(g.name).second)
      throw InputError("duplicate generator name '" + g.name + "'");
  }
}

AlgebraPtr FreeGCA::make(std::vector<Generator> generators) {
  return std::make_shared<const FreeGCA>(std::move(generators));
}

std::optional<std::size_t> FreeGCA::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

Monomial FreeGCA::one() const { return Monomial(std::vector<int>(gens_.size(), 0), 0); }

Monomial FreeGCA::generator_monomial(std::size_t i) const {
  std::vector<int> e(gens_.size(), 0);
  e.at(i) = 1;
  return Monomial(std::move(e), gens_[i].degree);
}

Monomial FreeGCA::monomial(std::vector<int> exponents) const {
  if (exponents.size() != gens_.size())
    throw InputError("exponent vector length does not match generator count");
  int degree = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (exponents[i] < 0) throw InputError("negative exponent");
    if (gens_[i].odd() && exponents[i] > 1)
      throw InputError("odd generator '" + gens_[i].name + "' raised to power > 1");
    degree += exponents[i] * gens_[i].degree;
  }
  return Monomial(std::move(exponents), degree);
}

namespace {

void enumerate(const FreeGCA& a, std::size_t i, int remaining, std::vector<int>& exps,
               int degree, std::vector<Monomial>& out) {
  if (i == a.size()) {
    if (remaining == 0) out.emplace_back(exps, degree);
    return;
  }
  const auto& g = a.generator(i);
  int max_e = remaining / g.degree;
  if (g.odd()) max_e = std::min(max_e, 1);
  for (int e = max_e; e >= 0; --e) {
    exps[i] = e;
    enumerate(a, i + 1, remaining - e * g.degree, exps, degree, out);
  }
  exps[i] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const FreeGCA& algebra, int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  std::vector<int> exps(algebra.size(), 0);
  enumerate(algebra, 0, n, exps, n, out);
  return out;
}

const std::vector<Monomial>& FreeGCA::basis(int n) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = basis_cache_.find(n);
  if (it == basis_cache_.end())
    it = basis_cache_
             .emplace(n, std::make_unique<const std::vector<Monomial>>(
                             monomial_basis(*this, n)))
             .first;
  return *it->second;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

SignedMonomial multiply(const FreeGCA& algebra, const Monomial& a, const Monomial& b) {
  const std::size_t n = algebra.size();
  std::vector<int> exps(n);
  int swaps = 0;
  // Odd generators of a sitting after position i, used to count the
  // transpositions needed to move b's odd generator i into place.
  int odd_in_a_after = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (algebra.generator(i).odd()) odd_in_a_after += a.exponent(i);
  for (std::size_t i = 0; i < n; ++i) {
    const bool odd = algebra.generator(i).odd();
    if (odd) {
      odd_in_a_after -= a.exponent(i);
      if (a.exponent(i) && b.exponent(i)) return {0, algebra.one()};
      if (b.exponent(i)) swaps += odd_in_a_after;
    }
    exps[i] = a.exponent(i) + b.exponent(i);
  }
  return {swaps % 2 == 0 ? 1 : -1, Monomial(std::move(exps), a.degree() + b.degree())};
}

Polynomial::Polynomial(AlgebraPtr algebra, Terms terms)
    : algebra_(std::move(algebra)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return rht::is_zero(kv.second); });
  refresh();
}

Polynomial Polynomial::constant(AlgebraPtr algebra, const Rational& c) {
  const auto one = algebra->one();
  return term(std::move(algebra), one, c);
}

Polynomial Polynomial::generator(AlgebraPtr algebra, std::size_t index) {
  const auto m = algebra->generator_monomial(index);
  return term(std::move(algebra), m, Rational(1));
}

Polynomial Polynomial::generator(AlgebraPtr algebra, const std::string& name) {
  const auto idx = algebra->index_of(name);
  if (!idx) throw InputError("unknown generator '" + name + "'");
  return generator(std::move(algebra), *idx);
}

Polynomial Polynomial::term(AlgebraPtr algebra, const Monomial& m, const Rational& c) {
  Terms t;
  if (!rht::is_zero(c)) t.emplace(m, c);
  return Polynomial(std::move(algebra), std::move(t));
}

void Polynomial::refresh() {
  homogeneous_ = true;
  if (terms_.empty()) return;
  const int d = terms_.begin()->first.degree();
  homogeneous_ = terms_.rbegin()->first.degree() == d;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty() || !homogeneous_) return std::nullopt;
  return terms_.begin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_same(const Polynomial& other) const {
  if (!same_algebra(algebra_, other.algebra_))
    throw InputError("polynomials belong to different algebras");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (rht::is_zero(it->second)) terms_.erase(it);
    }
  }
  refresh();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (rht::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  refresh();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  p.check_same(q);
  Polynomial::Terms out;
  const FreeGCA& alg = *p.algebra();
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      auto prod = multiply(alg, ma, mb);
      if (prod.sign == 0) continue;
      Rational c = ca * cb;
      if (prod.sign < 0) c = -c;
      auto [it, inserted] = out.try_emplace(std::move(prod.monomial), c);
      if (!inserted) it->second += c;
    }
  }
  return Polynomial(p.algebra(), std::move(out));
}

Polynomial power(const Polynomial& p, int k) {
  if (k < 0) throw InputError("negative power");
  Polynomial out = Polynomial::constant(p.algebra(), Rational(1));
  for (int i = 0; i < k; ++i) out = multiply(out, p);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_algebra(a.algebra_, b.algebra_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::embed(AlgebraPtr target) const {
  const auto& src = algebra_->generators();
  const auto& dst = target->generators();
  if (dst.size() < src.size() || !std::equal(src.begin(), src.end(), dst.begin()))
    throw InputError("embed: target algebra does not extend the source algebra");
  Terms out;
  for (const auto& [m, c] : terms_) {
    auto e = m.exponents();
    e.resize(dst.size(), 0);
    out.emplace(Monomial(std::move(e), m.degree()), c);
  }
  return Polynomial(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.exponents().size(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      std::string f = algebra_->generator(i).name;
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << rht::to_string(mag);
      continue;
    }
    if (mag != 1) os << rht::to_string(mag) << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : InputError(message + " (at offset " + std::to_string(position) + ")"),
      kind_(kind),
      position_(position) {}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& src, const AlgebraPtr& algebra)
      : src_(src), alg_(algebra) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail(ParseError::Kind::Syntax, "empty polynomial expression");
    Polynomial result(alg_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail(ParseError::Kind::Syntax, "expected '+' or '-'");
      }
      first = false;
      Polynomial t = parse_term();
      if (sign < 0) t = -t;
      result += t;
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff(1);
    std::vector<int> exps(alg_->size(), 0);
    bool vanishes = false;
    bool any = false;
    // Signs from reordering odd factors, e.g. "x2*x1".
    Monomial mono = alg_->one();
    int sign = 1;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t start = pos_;
        const std::string name = parse_name();
        const auto idx = alg_->index_of(name);
        if (!idx)
          throw ParseError(ParseError::Kind::UnknownGenerator, start,
                           "unknown generator '" + name + "'");
        int e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          const std::size_t epos = pos_;
          e = parse_exponent();
          if (alg_->generator(*idx).odd() && e > 1)
            throw ParseError(ParseError::Kind::ExteriorPower, epos,
                             "odd generator '" + name + "' raised to power " +
                                 std::to_string(e));
        }
        std::vector<int> f(alg_->size(), 0);
        f[*idx] = e;
        const Monomial factor(std::move(f), e * alg_->generator(*idx).degree);
        auto prod = multiply(*alg_, mono, factor);
        if (prod.sign == 0) vanishes = true;
        else {
          sign *= prod.sign;
          mono = std::move(prod.monomial);
        }
      } else {
        if (!any) fail(ParseError::Kind::Syntax, std::string("unexpected '") + c + "'");
        break;
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !(std::isalnum(static_cast<unsigned char>(peek()))))
          fail(ParseError::Kind::Syntax, "expected a factor after '*'");
      } else if (at_end() || peek() == '+' || peek() == '-') {
        break;
      }
    }
    if (!any) fail(ParseError::Kind::Syntax, "expected a term");
    if (vanishes) return Polynomial(alg_);
    return Polynomial::term(alg_, mono, sign < 0 ? Rational(-coeff) : coeff);
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail(ParseError::Kind::Syntax, "expected denominator after '/'");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(src_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      throw ParseError(ParseError::Kind::Syntax, start, e.what());
    }
  }

  int parse_exponent() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(ParseError::Kind::Syntax, "expected integer exponent after '^'");
    if (pos_ - start > 6) fail(ParseError::Kind::Syntax, "exponent too large");
    return std::stoi(src_.substr(start, pos_ - start));
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    return src_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) const {
    throw ParseError(kind, pos_, msg);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  const std::string& src_;
  const AlgebraPtr& alg_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& src, const AlgebraPtr& algebra) {
  return PolyParser(src, algebra).parse();
}

// ---------------------------------------------------------------------------
// Derivations

Derivation::Derivation(AlgebraPtr algebra, std::vector<Polynomial> images)
    : algebra_(std::move(algebra)), images_(std::move(images)) {
  if (images_.size() != algebra_->size())
    throw InputError("derivation needs one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    if (!same_algebra(img.algebra(), algebra_))
      throw InputError("derivation image of '" + algebra_->generator(i).name +
                       "' lives in a different algebra");
    if (img.is_zero()) continue;
    const auto deg = img.degree();
    if (!deg || *deg != algebra_->generator(i).degree + 1)
      throw InputError("d(" + algebra_->generator(i).name +
                       ") must be zero or homogeneous of degree " +
                       std::to_string(algebra_->generator(i).degree + 1));
  }
}

Polynomial Derivation::apply(const Monomial& m) const {
  const FreeGCA& alg = *algebra_;
  Polynomial result(algebra_);
  int prefix_degree = 0;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    const auto& g = alg.generator(i);
    if (!images_[i].is_zero()) {
      std::vector<int> left(alg.size(), 0), right(alg.size(), 0);
      int left_deg = 0, right_deg = 0;
      for (std::size_t j = 0; j < alg.size(); ++j) {
        if (j < i) {
          left[j] = m.exponent(j);
          left_deg += m.exponent(j) * alg.generator(j).degree;
        } else if (j > i) {
          right[j] = m.exponent(j);
          right_deg += m.exponent(j) * alg.generator(j).degree;
        }
      }
      // d(g^e) = e g^(e-1) dg; for odd g, e == 1.
      std::vector<int> rest(alg.size(), 0);
      rest[i] = e - 1;
      Polynomial middle = multiply(
          Polynomial::term(algebra_, Monomial(std::move(rest), (e - 1) * g.degree),
                           Rational(e)),
          images_[i]);
      Polynomial piece =
          multiply(multiply(Polynomial::term(algebra_, Monomial(std::move(left), left_deg),
                                             Rational(prefix_degree % 2 ? -1 : 1)),
                            middle),
                   Polynomial::term(algebra_, Monomial(std::move(right), right_deg),
                                    Rational(1)));
      result += piece;
    }
    prefix_degree += e * g.degree;
  }
  return result;
}

Polynomial Derivation::apply(const Polynomial& p) const {
  if (!same_algebra(p.algebra(), algebra_))
    throw InputError("derivation applied to a polynomial from another algebra");
  Polynomial result(algebra_);
  for (const auto& [m, c] : p.terms()) result += apply(m) * c;
  return result;
}

Polynomial apply_derivation(const Derivation& d, const Polynomial& p) { return d.apply(p); }

}  // namespace rht
