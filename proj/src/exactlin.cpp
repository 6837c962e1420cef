#include "cellsheaf/exactlin.hpp"

#include <algorithm>
#include <cctype>

namespace cellsheaf {

Rat rat_from_string(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("not a rational: '" + s + "'"); };
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw bad();
  auto check_int = [&](const std::string& u) {
    if (u.empty()) throw bad();
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) throw bad();
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) throw bad();
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    check_int(t);
    return Rat(Int(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw bad();
  return Rat(Int(num)) / Rat(d);  // division canonicalizes
}

std::string rat_to_string(const Rat& q) { return q.str(); }

bool matrix_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero_matrix(const RatMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

RrefResult rref(RatMatrix m) {
  RrefResult out;
  const Index rows = m.rows(), cols = m.cols();
  Index lead = 0;
  for (Index col = 0; col < cols && lead < rows; ++col) {
    Index piv = -1;
    for (Index r = lead; r < rows; ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(lead));
    Rat inv = Rat(1) / m(lead, col);
    for (Index j = col; j < cols; ++j) m(lead, j) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == lead || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (Index j = col; j < cols; ++j) m(r, j) -= f * m(lead, j);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = static_cast<Index>(out.pivot_cols.size());
  out.reduced = std::move(m);
  return out;
}

namespace {

// Row of integers with implicit common denominator already cleared.
using IntRow = std::vector<Int>;

void normalize_row(IntRow& row) {
  Int g = 0;
  for (const Int& v : row) {
    if (v != 0) g = gcd(g, abs(v));
    if (g == 1) return;
  }
  if (g > 1)
    for (Int& v : row) v /= g;
}

}  // namespace

// Rank via integer elimination: rows are scaled to integers and kept
// gcd-normalized, which controls coefficient growth better than plain
// rational Gauss on the larger boundary matrices.
Index rank(const RatMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<IntRow> a;
  a.reserve(rows);
  for (Index i = 0; i < rows; ++i) {
    Int l = 1;
    for (Index j = 0; j < cols; ++j) l = lcm(l, denominator(m(i, j)));
    IntRow row(cols);
    bool nonzero = false;
    for (Index j = 0; j < cols; ++j) {
      row[j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
      nonzero = nonzero || row[j] != 0;
    }
    if (nonzero) {
      normalize_row(row);
      a.push_back(std::move(row));
    }
  }
  Index r = 0;
  const Index n = static_cast<Index>(a.size());
  for (Index col = 0; col < cols && r < n; ++col) {
    Index piv = -1;
    for (Index i = r; i < n; ++i) {
      if (a[i][col] == 0) continue;
      if (piv < 0 || abs(a[i][col]) < abs(a[piv][col])) piv = i;
    }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (Index i = r + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Int g = gcd(abs(a[r][col]), abs(a[i][col]));
      Int fr = a[i][col] / g, fi = a[r][col] / g;
      for (Index j = col; j < cols; ++j) a[i][j] = fi * a[i][j] - fr * a[r][j];
      normalize_row(a[i]);
    }
    ++r;
  }
  return r;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  const Index cols = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (Index p : r.pivot_cols) is_pivot[p] = true;
  RatMatrix out = RatMatrix::Zero(cols, cols - r.rank);
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out(f, k) = 1;
    for (Index i = 0; i < r.rank; ++i) out(r.pivot_cols[i], k) = -r.reduced(i, f);
    ++k;
  }
  return out;
}

RatMatrix solve_in_span(const RatMatrix& basis, const RatMatrix& targets) {
  if (basis.rows() != targets.rows())
    throw std::invalid_argument("solve_in_span: row counts differ");
  const Index bc = basis.cols(), tc = targets.cols();
  RatMatrix aug(basis.rows(), bc + tc);
  aug << basis, targets;
  RrefResult r = rref(std::move(aug));
  RatMatrix x = RatMatrix::Zero(bc, tc);
  for (Index i = 0; i < r.rank; ++i) {
    Index p = r.pivot_cols[i];
    if (p >= bc)
      throw NotInSpan("target column " + std::to_string(p - bc) +
                      " is not in the span of the basis");
    for (Index j = 0; j < tc; ++j) x(p, j) = r.reduced(i, bc + j);
  }
  return x;
}

Rat determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = m.rows();
  Rat det = 1;
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index r = col; r < n; ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    Rat inv = Rat(1) / m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rat f = m(r, col) * inv;
      for (Index j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

int sign_det(const RatMatrix& m) {
  Rat d = determinant(m);
  return d == 0 ? 0 : (d > 0 ? 1 : -1);
}

RatMatrix column_rref(const RatMatrix& m) {
  RrefResult r = rref(m.transpose());
  return r.reduced.topRows(r.rank).transpose();
}

std::vector<std::vector<Index>> index_subsets(Index n, Index p) {
  std::vector<std::vector<Index>> out;
  if (p < 0 || p > n) return out;
  std::vector<Index> cur(p);
  for (Index i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (p == 0) break;
    Index i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (Index j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Index binomial(Index n, Index p) {
  if (p < 0 || p > n) return 0;
  p = std::min(p, n - p);
  Index out = 1;
  for (Index i = 1; i <= p; ++i) out = out * (n - p + i) / i;
  return out;
}

RatMatrix compound_matrix(const RatMatrix& a, Index p) {
  auto row_sets = index_subsets(a.rows(), p);
  auto col_sets = index_subsets(a.cols(), p);
  RatMatrix out(static_cast<Index>(row_sets.size()), static_cast<Index>(col_sets.size()));
  RatMatrix minor(p, p);
  for (size_t i = 0; i < row_sets.size(); ++i)
    for (size_t j = 0; j < col_sets.size(); ++j) {
      for (Index r = 0; r < p; ++r)
        for (Index c = 0; c < p; ++c) minor(r, c) = a(row_sets[i][r], col_sets[j][c]);
      out(static_cast<Index>(i), static_cast<Index>(j)) = determinant(minor);
    }
  return out;
}

}  // namespace cellsheaf
