#include "burnside/intmat.hpp"

#include <algorithm>
#include <utility>

namespace burnside {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw IndexOutOfRange("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows())
    throw IndexOutOfRange("matrix product dimension mismatch");
  IntMat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols())
    throw IndexOutOfRange("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Extended gcd: returns (g, x, y) with x*a + y*b = g, g >= 0.
struct Egcd {
  Int g, x, y;
};

Egcd extgcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = std::exchange(b, r);
    Int nx = x0 - q * x1;
    Int ny = y0 - q * y1;
    x0 = std::exchange(x1, nx);
    y0 = std::exchange(y1, ny);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Pivot search in the trailing submatrix starting at (t, t): smallest
// nonzero absolute value, lowest row index first, then lowest column.
bool find_pivot(const IntMat& a, std::size_t t, std::size_t* pi,
                std::size_t* pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs_int(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        *pi = i;
        *pj = j;
      }
    }
  return found;
}

} // namespace

SnfDecomposition smith_normal_form(const IntMat& m) {
  SnfDecomposition s;
  s.d = m;
  s.u = IntMat::identity(m.rows());
  s.v = IntMat::identity(m.cols());
  IntMat& a = s.d;
  const std::size_t bound = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(a, t, &pi, &pj)) break;
    a.swap_rows(t, pi);
    s.u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    s.v.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        if (a(i, t) % a(t, t) == 0) {
          Int q = a(i, t) / a(t, t);
          a.add_row(i, t, -q);
          s.u.add_row(i, t, -q);
        } else {
          auto [g, x, y] = extgcd(a(t, t), a(i, t));
          Int at = a(t, t) / g, ai = a(i, t) / g;
          // Unimodular 2x2 combination of rows t and i.
          for (std::size_t c = 0; c < a.cols(); ++c) {
            Int rt = x * a(t, c) + y * a(i, c);
            Int ri = -ai * a(t, c) + at * a(i, c);
            a(t, c) = rt;
            a(i, c) = ri;
          }
          for (std::size_t c = 0; c < s.u.cols(); ++c) {
            Int rt = x * s.u(t, c) + y * s.u(i, c);
            Int ri = -ai * s.u(t, c) + at * s.u(i, c);
            s.u(t, c) = rt;
            s.u(i, c) = ri;
          }
        }
      }
      // Clear row t right of the pivot.
      bool row_dirty = false;
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        if (a(t, j) % a(t, t) == 0) {
          Int q = a(t, j) / a(t, t);
          a.add_col(j, t, -q);
          s.v.add_col(j, t, -q);
        } else {
          auto [g, x, y] = extgcd(a(t, t), a(t, j));
          Int at = a(t, t) / g, aj = a(t, j) / g;
          for (std::size_t r = 0; r < a.rows(); ++r) {
            Int ct = x * a(r, t) + y * a(r, j);
            Int cj = -aj * a(r, t) + at * a(r, j);
            a(r, t) = ct;
            a(r, j) = cj;
          }
          for (std::size_t r = 0; r < s.v.rows(); ++r) {
            Int ct = x * s.v(r, t) + y * s.v(r, j);
            Int cj = -aj * s.v(r, t) + at * s.v(r, j);
            s.v(r, t) = ct;
            s.v(r, j) = cj;
          }
          row_dirty = true;
        }
      }
      // Column operations may have reintroduced entries below the pivot.
      bool col_clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i)
        if (a(i, t) != 0) col_clean = false;
      if (col_clean && !row_dirty) break;
    }

    // Divisibility: pivot must divide the whole trailing block.
    for (;;) {
      bool fixed = true;
      for (std::size_t i = t + 1; i < a.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < a.cols() && fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            s.u.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
      // Re-clear row t (column t is still clean: added row had 0 there).
      for (;;) {
        bool clean = true;
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(t, j) == 0) continue;
          clean = false;
          auto [g, x, y] = extgcd(a(t, t), a(t, j));
          if (a(t, j) % a(t, t) == 0) {
            Int q = a(t, j) / a(t, t);
            a.add_col(j, t, -q);
            s.v.add_col(j, t, -q);
          } else {
            Int at = a(t, t) / g, aj = a(t, j) / g;
            for (std::size_t r = 0; r < a.rows(); ++r) {
              Int ct = x * a(r, t) + y * a(r, j);
              Int cj = -aj * a(r, t) + at * a(r, j);
              a(r, t) = ct;
              a(r, j) = cj;
            }
            for (std::size_t r = 0; r < s.v.rows(); ++r) {
              Int ct = x * s.v(r, t) + y * s.v(r, j);
              Int cj = -aj * s.v(r, t) + at * s.v(r, j);
              s.v(r, t) = ct;
              s.v(r, j) = cj;
            }
          }
        }
        if (clean) break;
        bool col_clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0) col_clean = false;
        if (!col_clean) {
          for (std::size_t i = t + 1; i < a.rows(); ++i) {
            if (a(i, t) == 0) continue;
            auto [g, x, y] = extgcd(a(t, t), a(i, t));
            Int at = a(t, t) / g, ai = a(i, t) / g;
            for (std::size_t c = 0; c < a.cols(); ++c) {
              Int rt = x * a(t, c) + y * a(i, c);
              Int ri = -ai * a(t, c) + at * a(i, c);
              a(t, c) = rt;
              a(i, c) = ri;
            }
            for (std::size_t c = 0; c < s.u.cols(); ++c) {
              Int rt = x * s.u(t, c) + y * s.u(i, c);
              Int ri = -ai * s.u(t, c) + at * s.u(i, c);
              s.u(t, c) = rt;
              s.u(i, c) = ri;
            }
          }
        }
      }
    }

    if (a(t, t) < 0) {
      a.negate_row(t);
      s.u.negate_row(t);
    }
  }

  for (std::size_t t = 0; t < bound; ++t)
    if (a(t, t) != 0) s.rank = t + 1;
  return s;
}

bool solve_integer(const IntMat& m, const std::vector<Int>& x,
                   std::vector<Int>* solution) {
  if (x.size() != m.rows())
    throw IndexOutOfRange("solve_integer: rhs size mismatch");
  SnfDecomposition s = smith_normal_form(m);
  // m = u^-1 d v^-1, so m y = x iff d (v^-1 y) = u x.
  std::vector<Int> c(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) c[i] += s.u(i, j) * x[j];
  std::vector<Int> z(m.cols(), 0);
  const std::size_t bound = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < bound && s.d(i, i) != 0) {
      if (c[i] % s.d(i, i) != 0) return false;
      z[i] = c[i] / s.d(i, i);
    } else if (c[i] != 0) {
      return false;
    }
  }
  if (solution) {
    solution->assign(m.cols(), 0);
    for (std::size_t i = 0; i < m.cols(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        (*solution)[i] += s.v(i, j) * z[j];
  }
  return true;
}

std::size_t rational_rank(const IntMat& m) {
  return smith_normal_form(m).rank;
}

Rat::Rat(Int n, Int d) {
  if (d == 0) throw PreconditionFailed("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = boost::multiprecision::gcd(n < 0 ? Int(-n) : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num * b.num, a.den * b.den);
}
Rat operator/(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den, a.den * b.num);
}

bool solve_rational(const IntMat& m, const std::vector<Int>& x,
                    std::vector<Rat>* solution) {
  if (x.size() != m.rows())
    throw IndexOutOfRange("solve_rational: rhs size mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m(i, j));
    a[i][cols] = Rat(x[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = Rat(Int(1)) / a[r][c];
    for (std::size_t j = c; j <= cols; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].zero()) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j)
        a[i][j] = a[i][j] - f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!a[i][cols].zero()) return false;
  if (solution) {
    solution->assign(cols, Rat());
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      (*solution)[pivot_col[i]] = a[i][cols];
  }
  return true;
}

} // namespace burnside
