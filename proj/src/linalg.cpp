#include "gbv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbv {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch in product");
  QMatrix m(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rational& x = at(i, k);
      if (::gbv::is_zero(x)) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Rational& y = o.at(k, j);
        if (!::gbv::is_zero(y)) m.at(i, j) += x * y;
      }
    }
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  QMatrix m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  QMatrix m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
  return m;
}

QMatrix QMatrix::scaled(const Rational& c) const {
  QMatrix m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * c;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a)
    if (!::gbv::is_zero(x)) return false;
  return true;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> out(rows, Rational(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!::gbv::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
  return out;
}

QMatrix QMatrix::column(int j) const {
  QMatrix m(rows, 1);
  for (int i = 0; i < rows; ++i) m.at(i, 0) = at(i, j);
  return m;
}

Echelon reduced_row_echelon(QMatrix m) {
  Echelon e;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows; ++i)
      if (!is_zero(m.at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Rational inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rank = row;
  e.rref = std::move(m);
  return e;
}

int rank(const QMatrix& m) { return reduced_row_echelon(m).rank; }

QMatrix kernel_basis(const QMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  QMatrix out(m.cols, m.cols - e.rank);
  int k = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    out.at(f, k) = 1;
    for (int r = 0; r < e.rank; ++r) out.at(e.pivot_cols[r], k) = -e.rref.at(r, f);
    ++k;
  }
  return out;
}

QMatrix image_basis(const QMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  QMatrix out(m.rows, e.rank);
  for (int k = 0; k < e.rank; ++k)
    for (int i = 0; i < m.rows; ++i) out.at(i, k) = m.at(i, e.pivot_cols[k]);
  return out;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("vector length mismatch");
  QMatrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  for (int c : e.pivot_cols)
    if (c == m.cols) return std::nullopt;
  std::vector<Rational> x(m.cols, Rational(0));
  for (int r = 0; r < e.rank; ++r) x[e.pivot_cols[r]] = e.rref.at(r, m.cols);
  return x;
}

std::vector<Rational> char_poly(const QMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("characteristic polynomial of a nonsquare matrix");
  int n = m.rows;
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  QMatrix work = QMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    work = m * work;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += work.at(i, i);
    Rational ck = -tr / k;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) work.at(i, i) += ck;
  }
  return c;
}

namespace {

Rational eval_poly(const std::vector<Rational>& c, const Rational& t) {
  Rational v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

// divisors by trial division; bails out on operands too large to factor
std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  if (v == 0) throw std::invalid_argument("divisors of zero");
  mpz_class root = sqrt(v);
  if (root > 2000000)
    throw std::domain_error("coefficient too large for rational root search");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d <= root; ++d)
    if (v % d == 0) {
      out.push_back(d);
      mpz_class q = v / d;
      if (q != d) out.push_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  if (c.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < c.size() && is_zero(c[low])) ++low;
  if (low > 0) {
    roots.push_back(0);
    c.erase(c.begin(), c.begin() + low);
  }
  if (c.size() <= 1) return roots;

  mpz_class scale = 1;
  for (const auto& x : c) scale = lcm(scale, x.get_den());
  std::vector<mpz_class> ic;
  for (const auto& x : c) {
    Rational y = x * Rational(scale);
    ic.push_back(y.get_num());
  }
  std::vector<mpz_class> ps = divisors(ic.front());
  std::vector<mpz_class> qs = divisors(ic.back());
  for (const auto& p : ps)
    for (const auto& q : qs) {
      Rational cand(p, q);
      cand.canonicalize();
      for (int sign = 0; sign < 2; ++sign) {
        Rational r = sign ? Rational(-cand) : cand;
        if (is_zero(eval_poly(c, r))) {
          bool seen = false;
          for (const auto& known : roots) seen |= (known == r);
          if (!seen) roots.push_back(r);
        }
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
  if (coeffs.size() < 2) throw std::invalid_argument("cannot deflate a constant");
  // synthetic division on descending coefficients
  std::vector<Rational> out(coeffs.size() - 1, Rational(0));
  Rational carry = 0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
    carry = coeffs[k] + carry * root;
    out[k - 1] = carry;
  }
  if (!is_zero(coeffs[0] + carry * root))
    throw std::invalid_argument("deflation by a non-root");
  return out;
}

}  // namespace gbv
