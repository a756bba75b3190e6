#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace zar {

/// Exact arbitrary-precision integer used throughout the abelian machinery.
using Int = boost::multiprecision::cpp_int;

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Dense integer matrix over cpp_int. Only what the normal-form and
/// congruence solvers need; not a general linear algebra type.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMat operator*(const IntMat& other) const;
  bool operator==(const IntMat& other) const = default;

  std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row(int dst, int src, const Int& factor);  // row dst += factor * row src
  void add_col(int dst, int src, const Int& factor);
  void negate_row(int i);
  void negate_col(int j);

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

/// Smith decomposition left * a * right == d with d diagonal, nonnegative,
/// and d(0,0) | d(1,1) | ... ; left/right unimodular with tracked inverses.
struct SmithForm {
  IntMat d;
  IntMat left, right;
  IntMat left_inv, right_inv;

  int rank() const;
  std::vector<Int> invariant_factors() const;  // the nonzero diagonal entries
};

/// Row/column reduction with the pivot chosen as the smallest nonzero
/// absolute value of the remaining submatrix.
SmithForm smith_normal_form(IntMat a);

/// One integer solution of a x = b, if any.
std::optional<std::vector<Int>> solve_linear_system(const IntMat& a, const std::vector<Int>& b);

/// Columns generate the lattice {x : a x = 0}.
IntMat kernel_basis(const IntMat& a);

}  // namespace zar
