#include "zar/intmat.hpp"

#include <cassert>
#include <cstdlib>

namespace zar {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& other) const {
  assert(cols_ == other.rows_);
  IntMat out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += aik * other(k, j);
    }
  return out;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const {
  assert(static_cast<int>(x.size()) == cols_);
  std::vector<Int> y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

void IntMat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMat::add_row(int dst, int src, const Int& factor) {
  for (int c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMat::add_col(int dst, int src, const Int& factor) {
  for (int r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMat::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMat::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

int SmithForm::rank() const {
  int n = std::min(d.rows(), d.cols());
  int r = 0;
  while (r < n && d(r, r) != 0) ++r;
  return r;
}

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n && d(i, i) != 0; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Transform bookkeeping: every elementary operation applied to d is mirrored
// on the transform and inverted on its tracked inverse.
struct Work {
  IntMat d, left, right, left_inv, right_inv;

  void row_swap(int i, int j) {
    d.swap_rows(i, j);
    left.swap_rows(i, j);
    left_inv.swap_cols(i, j);
  }
  void row_add(int dst, int src, const Int& f) {
    d.add_row(dst, src, f);
    left.add_row(dst, src, f);
    left_inv.add_col(src, dst, -f);
  }
  void row_negate(int i) {
    d.negate_row(i);
    left.negate_row(i);
    left_inv.negate_col(i);
  }
  void col_swap(int i, int j) {
    d.swap_cols(i, j);
    right.swap_cols(i, j);
    right_inv.swap_rows(i, j);
  }
  void col_add(int dst, int src, const Int& f) {
    d.add_col(dst, src, f);
    right.add_col(dst, src, f);
    right_inv.add_row(src, dst, -f);
  }
};

// True when row t and column t are zero outside the pivot.
bool pivot_isolated(const IntMat& d, int t) {
  for (int i = t + 1; i < d.rows(); ++i)
    if (d(i, t) != 0) return false;
  for (int j = t + 1; j < d.cols(); ++j)
    if (d(t, j) != 0) return false;
  return true;
}

bool find_min_pivot(const IntMat& d, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int v = abs(d(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IntMat a) {
  const int m = a.rows(), n = a.cols();
  Work w{std::move(a), IntMat::identity(m), IntMat::identity(n), IntMat::identity(m),
         IntMat::identity(n)};

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    int pi, pj;
    if (!find_min_pivot(w.d, t, pi, pj)) break;  // remainder is zero
    for (;;) {
      find_min_pivot(w.d, t, pi, pj);
      w.row_swap(t, pi);
      w.col_swap(t, pj);
      if (w.d(t, t) < 0) w.row_negate(t);

      for (int i = t + 1; i < m; ++i)
        if (w.d(i, t) != 0) w.row_add(i, t, -(w.d(i, t) / w.d(t, t)));
      for (int j = t + 1; j < n; ++j)
        if (w.d(t, j) != 0) w.col_add(j, t, -(w.d(t, j) / w.d(t, t)));

      if (!pivot_isolated(w.d, t)) continue;  // remainders became new pivots

      // Divisibility fix: drag a non-multiple into row t and keep reducing.
      bool divides_all = true;
      for (int i = t + 1; i < m && divides_all; ++i)
        for (int j = t + 1; j < n && divides_all; ++j)
          if (w.d(i, j) % w.d(t, t) != 0) {
            w.row_add(t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
  }

  return SmithForm{std::move(w.d), std::move(w.left), std::move(w.right), std::move(w.left_inv),
                   std::move(w.right_inv)};
}

std::optional<std::vector<Int>> solve_linear_system(const IntMat& a, const std::vector<Int>& b) {
  assert(static_cast<int>(b.size()) == a.rows());
  SmithForm s = smith_normal_form(a);
  std::vector<Int> lb = s.left.apply(b);
  const int r = s.rank();
  std::vector<Int> y(a.cols());
  for (int i = 0; i < r; ++i) {
    if (lb[i] % s.d(i, i) != 0) return std::nullopt;
    y[i] = lb[i] / s.d(i, i);
  }
  for (int i = r; i < a.rows(); ++i)
    if (lb[i] != 0) return std::nullopt;
  return s.right.apply(y);
}

IntMat kernel_basis(const IntMat& a) {
  SmithForm s = smith_normal_form(a);
  const int r = s.rank();
  const int n = a.cols();
  IntMat out(n, n - r);
  for (int j = r; j < n; ++j)
    for (int i = 0; i < n; ++i) out(i, j - r) = s.right(i, j);
  return out;
}

}  // namespace zar
