#include "rht/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <utility>

namespace rht {

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Rational(1));
  return m;
}

MatrixQ MatrixQ::from_dense(const std::vector<VectorQ>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  return from_rows(dense, cols);
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DimensionError("ragged rows in MatrixQ::from_rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_zero(rows[r][c])) m.data_[r].emplace(c, rows[r][c]);
  }
  return m;
}

std::size_t MatrixQ::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

void MatrixQ::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    std::ostringstream os;
    os << "index (" << r << ", " << c << ") outside " << rows_ << "x" << cols_;
    throw DimensionError(os.str());
  }
}

Rational MatrixQ::get(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

void MatrixQ::set(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  if (is_zero(value))
    data_[r].erase(c);
  else
    data_[r][c] = value;
}

void MatrixQ::add(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  if (is_zero(value)) return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (is_zero(it->second)) data_[r].erase(it);
  }
}

std::vector<VectorQ> MatrixQ::to_dense() const {
  std::vector<VectorQ> out(rows_, VectorQ(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

VectorQ MatrixQ::apply(const VectorQ& x) const {
  if (x.size() != cols_) throw DimensionError("vector length != matrix cols");
  VectorQ y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  return t;
}

MatrixQ MatrixQ::stack(const MatrixQ& top, const MatrixQ& bottom) {
  if (top.cols_ != bottom.cols_)
    throw DimensionError("stack: column counts differ");
  MatrixQ m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(top.rows_));
  return m;
}

namespace {

// Sparse elimination runs over Z: each row is scaled to a primitive integer
// vector, so no gcd is paid per entry update the way it is with mpq.
using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const MatrixQ::Row& row) {
  mpz_class den = 1;
  for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, v.get_num() * (den / v.get_den()));
  make_primitive(out);
  return out;
}

mpz_class entry(const IntRow& row, std::size_t col) {
  const auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? it->second : mpz_class(0);
}

// target <- (p/g) target - (a/g) pivot, where p and a are the entries of pivot
// and target in column `col`; the column cancels.
void eliminate(IntRow& target, const IntRow& pivot, std::size_t col) {
  const mpz_class a = entry(target, col);
  if (a == 0) return;
  const mpz_class p = entry(pivot, col);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
  const mpz_class sp = p / g, sa = a / g;
  IntRow out;
  out.reserve(target.size() + pivot.size());
  auto t = target.cbegin();
  auto q = pivot.cbegin();
  while (t != target.cend() || q != pivot.cend()) {
    if (q == pivot.end() || (t != target.end() && t->first < q->first)) {
      out.emplace_back(t->first, sp * t->second);
      ++t;
    } else if (t == target.end() || q->first < t->first) {
      out.emplace_back(q->first, -sa * q->second);
      ++q;
    } else {
      mpz_class v = sp * t->second - sa * q->second;
      if (v != 0) out.emplace_back(t->first, std::move(v));
      ++t;
      ++q;
    }
  }
  make_primitive(out);
  target = std::move(out);
}

// Row echelon form over Z. Among the rows that can pivot on a column the
// sparsest is chosen, which keeps fill-in down; the reduced form does not
// depend on that choice.
std::vector<IntRow> echelon(const MatrixQ& m, std::vector<std::size_t>& pivot_cols) {
  std::vector<IntRow> active;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) active.push_back(to_int_row(m.row(r)));
  std::vector<IntRow> pivots;
  while (!active.empty()) {
    std::size_t col = m.cols();
    for (const auto& row : active) col = std::min(col, row.front().first);
    std::size_t best = active.size();
    for (std::size_t i = 0; i < active.size(); ++i)
      if (active[i].front().first == col &&
          (best == active.size() || active[i].size() < active[best].size()))
        best = i;
    IntRow pivot = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    std::vector<IntRow> rest;
    rest.reserve(active.size());
    for (auto& row : active) {
      if (row.front().first == col) eliminate(row, pivot, col);
      if (!row.empty()) rest.push_back(std::move(row));
    }
    active = std::move(rest);
    pivot_cols.push_back(col);
    pivots.push_back(std::move(pivot));
  }
  return pivots;
}

RrefResult rref_sparse(const MatrixQ& m) {
  RrefResult out;
  auto rows = echelon(m, out.pivot_cols);
  out.rank = rows.size();
  for (std::size_t k = rows.size(); k-- > 0;)
    for (std::size_t i = 0; i < k; ++i) eliminate(rows[i], rows[k], out.pivot_cols[k]);
  out.reduced = MatrixQ(m.rows(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const mpz_class lead = entry(rows[r], out.pivot_cols[r]);
    for (const auto& [c, v] : rows[r]) {
      Rational q(v, lead);
      q.canonicalize();
      out.reduced.set(r, c, q);
    }
  }
  return out;
}

RrefResult rref_dense(const MatrixQ& m) {
  auto a = m.to_dense();
  RrefResult out;
  std::size_t next = 0;
  const std::size_t cols = m.cols();
  for (std::size_t col = 0; col < cols && next < a.size(); ++col) {
    std::size_t found = a.size();
    for (std::size_t r = next; r < a.size(); ++r)
      if (!is_zero(a[r][col])) {
        found = r;
        break;
      }
    if (found == a.size()) continue;
    std::swap(a[next], a[found]);
    const Rational inv = 1 / a[next][col];
    for (std::size_t c = col; c < cols; ++c) a[next][c] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == next || is_zero(a[r][col])) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!is_zero(a[next][c])) a[r][c] -= f * a[next][c];
    }
    out.pivot_cols.push_back(col);
    ++next;
  }
  out.rank = next;
  out.reduced = MatrixQ(m.rows(), cols);
  for (std::size_t r = 0; r < next; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!is_zero(a[r][c])) out.reduced.set(r, c, a[r][c]);
  return out;
}

}  // namespace

RrefResult rref(const MatrixQ& m, const RrefOptions& options) {
  if (m.cols() <= options.dense_threshold) return rref_dense(m);
  return rref_sparse(m);
}

std::size_t rank(const MatrixQ& m) {
  if (m.cols() <= RrefOptions{}.dense_threshold) return rref_dense(m).rank;
  std::vector<std::size_t> pivots;
  return echelon(m, pivots).size();
}

std::vector<VectorQ> kernel_basis(const MatrixQ& m) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<VectorQ> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorQ v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) {
      const auto& row = red.reduced.row(i);
      const auto it = row.find(free);
      if (it != row.end()) v[red.pivot_cols[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b) {
  if (b.size() != m.rows())
    throw DimensionError("solve: right-hand side length != matrix rows");
  MatrixQ aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
    aug.set(r, m.cols(), b[r]);
  }
  const auto red = rref(aug);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols())
    return std::nullopt;
  VectorQ x(m.cols());
  for (std::size_t i = 0; i < red.rank; ++i)
    x[red.pivot_cols[i]] = red.reduced.get(i, m.cols());
  return x;
}

VectorQ SpanBuilder::reduce(const VectorQ& v) const {
  if (v.size() != dim_) throw DimensionError("SpanBuilder: wrong vector length");
  VectorQ out = v;
  for (const auto& [p, row] : pivots_) {
    if (is_zero(out[p])) continue;
    const Rational f = out[p];
    for (const auto& [c, x] : row) out[c] -= f * x;
  }
  return out;
}

bool SpanBuilder::contains(const VectorQ& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return is_zero(q); });
}

bool SpanBuilder::insert(const VectorQ& v) {
  auto r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && is_zero(r[p])) ++p;
  if (p == dim_) return false;
  const Rational inv = 1 / r[p];
  MatrixQ::Row row;
  for (std::size_t c = p; c < dim_; ++c)
    if (!is_zero(r[c])) row.emplace(c, r[c] * inv);
  pivots_.emplace_back(p, std::move(row));
  return true;
}

}  // namespace rht
