#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burnside/errors.hpp"

namespace burnside {

/// Exact integer scalar used by all matrix computations.
using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix, row major.
class IntMat {
public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  IntMat transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row(std::size_t i, std::size_t j, const Int& c);
  /// col i += c * col j
  void add_col(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);

  bool operator==(const IntMat& o) const = default;

private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

IntMat operator*(const IntMat& a, const IntMat& b);

/// Determinant by fraction-free (Bareiss) elimination.  Square input only.
Int determinant(const IntMat& m);

/// U * M * V = D with U, V unimodular and D diagonal with a divisibility
/// chain d_1 | d_2 | ... (entries nonnegative).
struct SnfDecomposition {
  IntMat u, d, v;
  std::size_t rank = 0;
};

/// Deterministic Smith normal form.  Pivot selection: smallest nonzero
/// absolute value, ties broken by lowest row then lowest column index.
SnfDecomposition smith_normal_form(const IntMat& m);

/// Exact solve of M * y = x over the integers.  Returns false when no
/// integral solution exists; fills *solution when given and solvable.
bool solve_integer(const IntMat& m, const std::vector<Int>& x,
                   std::vector<Int>* solution = nullptr);

/// Rank over the rationals.
std::size_t rational_rank(const IntMat& m);

/// Small exact rational, used where cone geometry needs division.
struct Rat {
  Int num = 0;
  Int den = 1; // always > 0

  Rat() = default;
  Rat(Int n) : num(std::move(n)) {}
  Rat(Int n, Int d);

  bool positive() const { return num > 0; }
  bool zero() const { return num == 0; }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);

/// Solve M * y = x over the rationals when M has full column rank.
/// Returns false when the system is inconsistent.
bool solve_rational(const IntMat& m, const std::vector<Int>& x,
                    std::vector<Rat>* solution);

} // namespace burnside
