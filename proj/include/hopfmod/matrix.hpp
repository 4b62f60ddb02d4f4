#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/errors.hpp"
#include "hopfmod/fields.hpp"

namespace hopfmod {

// Dense exact matrix over a field kernel F (GaloisField or CyclotomicField).
// Row-major storage; deterministic first-nonzero pivoting so every result is
// reproducible bit-for-bit.  Target sizes are desk scale (<= ~800 square).
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;
  using FieldPtr = std::shared_ptr<const F>;

  Matrix() = default;
  Matrix(FieldPtr field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), field_->zero()) {}

  static Matrix identity(FieldPtr field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, field->one());
    return m;
  }

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, Elem v) { a_[static_cast<size_t>(r) * cols_ + c] = std::move(v); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!field_->is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!field_->eq(a_[i], o.a_[i])) return false;
    return true;
  }

  Matrix add(const Matrix& o) const {
    check_same_field(o);
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::InternalError, "shape mismatch in add");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
    return r;
  }

  Matrix sub(const Matrix& o) const {
    check_same_field(o);
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::InternalError, "shape mismatch in sub");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
    return r;
  }

  Matrix scaled(const Elem& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = field_->mul(x, s);
    return r;
  }

  void add_scaled_in_place(const Matrix& o, const Elem& s) {
    check_same_field(o);
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::InternalError, "shape mismatch");
    if (field_->is_zero(s)) return;
    for (size_t i = 0; i < a_.size(); ++i) {
      if (field_->is_zero(o.a_[i])) continue;
      a_[i] = field_->add(a_[i], field_->mul(s, o.a_[i]));
    }
  }

  Matrix mul(const Matrix& o) const {
    check_same_field(o);
    require(cols_ == o.rows_, Errc::InternalError, "shape mismatch in mul");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem& v = at(i, k);
        if (field_->is_zero(v)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Elem& w = o.at(k, j);
          if (field_->is_zero(w)) continue;
          r.at(i, j) = field_->add(r.at(i, j), field_->mul(v, w));
        }
      }
    return r;
  }

  std::vector<Elem> mul_vec(const std::vector<Elem>& v) const {
    require(static_cast<int>(v.size()) == cols_, Errc::InternalError, "vector length mismatch");
    std::vector<Elem> r(static_cast<size_t>(rows_), field_->zero());
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem& x = at(i, k);
        if (field_->is_zero(x) || field_->is_zero(v[static_cast<size_t>(k)])) continue;
        r[static_cast<size_t>(i)] =
            field_->add(r[static_cast<size_t>(i)], field_->mul(x, v[static_cast<size_t>(k)]));
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix neg() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = field_->neg(x);
    return r;
  }

  std::vector<Elem> column(int j) const {
    std::vector<Elem> v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
    return v;
  }

  void set_column(int j, const std::vector<Elem>& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[static_cast<size_t>(i)];
  }

  static Matrix from_columns(FieldPtr field, int rows, const std::vector<std::vector<Elem>>& cols) {
    Matrix m(field, rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.set_column(static_cast<int>(j), cols[j]);
    return m;
  }

  Matrix hstack(const Matrix& o) const {
    check_same_field(o);
    require(rows_ == o.rows_, Errc::InternalError, "row mismatch in hstack");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  // Kronecker product: (a (x) b)(u (x) v) = au (x) bv under basis ordering
  // e_i (x) f_j  ->  i * dim(b) + j.
  static Matrix kron(const Matrix& a, const Matrix& b) {
    a.check_same_field(b);
    Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        const Elem& v = a.at(i, j);
        if (a.field_->is_zero(v)) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l) {
            const Elem& w = b.at(k, l);
            if (a.field_->is_zero(w)) continue;
            r.at(i * b.rows_ + k, j * b.cols_ + l) = a.field_->mul(v, w);
          }
      }
    return r;
  }

  // accumulate  this += s * kron(a, b)  without materializing the product
  void accumulate_kron(const Elem& s, const Matrix& a, const Matrix& b) {
    if (field_->is_zero(s)) return;
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        const Elem& v = a.at(i, j);
        if (field_->is_zero(v)) continue;
        Elem sv = field_->mul(s, v);
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l) {
            const Elem& w = b.at(k, l);
            if (field_->is_zero(w)) continue;
            Elem& dst = at(i * b.rows_ + k, j * b.cols_ + l);
            dst = field_->add(dst, field_->mul(sv, w));
          }
      }
  }

  struct Echelon {
    Matrix reduced;
    int rank = 0;
    std::vector<int> pivot_cols;
  };

  // Reduced row-echelon form with deterministic pivoting: for each column in
  // order, the first row with a nonzero entry becomes the pivot.
  Echelon rref() const {
    Echelon out;
    out.reduced = *this;
    Matrix& m = out.reduced;
    int pivot_row = 0;
    for (int c = 0; c < cols_ && pivot_row < rows_; ++c) {
      int pr = -1;
      for (int r = pivot_row; r < rows_; ++r)
        if (!field_->is_zero(m.at(r, c))) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      if (pr != pivot_row)
        for (int j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(pivot_row, j));
      Elem inv = field_->inv(m.at(pivot_row, c));
      for (int j = c; j < cols_; ++j) m.at(pivot_row, j) = field_->mul(m.at(pivot_row, j), inv);
      for (int r = 0; r < rows_; ++r) {
        if (r == pivot_row) continue;
        const Elem f = m.at(r, c);
        if (field_->is_zero(f)) continue;
        Elem nf = field_->neg(f);
        for (int j = c; j < cols_; ++j) {
          if (field_->is_zero(m.at(pivot_row, j))) continue;
          m.at(r, j) = field_->add(m.at(r, j), field_->mul(nf, m.at(pivot_row, j)));
        }
      }
      out.pivot_cols.push_back(c);
      ++pivot_row;
    }
    out.rank = pivot_row;
    return out;
  }

  int rank() const { return rref().rank; }

  // Basis of the null space; columns are the basis vectors, in the order of
  // the free columns.  m * kernel_basis(m) = 0.
  Matrix kernel_basis() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    std::vector<int> pivot_of_col(static_cast<size_t>(cols_), -1);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
      is_pivot[static_cast<size_t>(e.pivot_cols[i])] = true;
      pivot_of_col[static_cast<size_t>(e.pivot_cols[i])] = static_cast<int>(i);
    }
    int nfree = cols_ - e.rank;
    Matrix k(field_, cols_, nfree);
    int out = 0;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[static_cast<size_t>(c)]) continue;
      k.at(c, out) = field_->one();
      for (int pc = 0; pc < cols_; ++pc) {
        if (!is_pivot[static_cast<size_t>(pc)]) continue;
        int prow = pivot_of_col[static_cast<size_t>(pc)];
        const Elem& v = e.reduced.at(prow, c);
        if (!field_->is_zero(v)) k.at(pc, out) = field_->neg(v);
      }
      ++out;
    }
    return k;
  }

  // Solve a X = b exactly; returns the unique-by-pivot solution when the
  // system is consistent, std::nullopt otherwise.
  static std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    a.check_same_field(b);
    require(a.rows_ == b.rows_, Errc::InternalError, "shape mismatch in solve_right");
    Matrix aug = a.hstack(b);
    Echelon e = aug.rref();
    // any pivot column inside the b-block means an inconsistent row
    for (int c : e.pivot_cols)
      if (c >= a.cols_) return std::nullopt;
    Matrix x(a.field_, a.cols_, b.cols_);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
      int pc = e.pivot_cols[i];
      for (int j = 0; j < b.cols_; ++j) x.at(pc, j) = e.reduced.at(static_cast<int>(i), a.cols_ + j);
    }
    return x;
  }

  // inverse of a square matrix, nullopt when singular (A X = I_n forces full rank)
  std::optional<Matrix> inverse() const {
    require(rows_ == cols_, Errc::InternalError, "inverse of non-square matrix");
    return solve_right(*this, identity(field_, rows_));
  }

  std::string format() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << (i ? ",\n [" : "[");
      for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << field_->format(at(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void check_same_field(const Matrix& o) const {
    require(field_.get() == o.field_.get() || field_->spec() == o.field_->spec(),
            Errc::FieldMismatch, "matrices over different fields");
  }

  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

// Incrementally maintained column space in reduced echelon form (columns are
// basis vectors, each with a distinct pivot row, pivot entry 1, and zeros at
// the other basis pivots).  Used for spans, quotients, and membership tests.
template <class F>
class ColumnSpan {
 public:
  using Elem = typename F::Elem;
  using FieldPtr = std::shared_ptr<const F>;

  ColumnSpan(FieldPtr field, int ambient_dim) : field_(std::move(field)), dim_(ambient_dim) {}

  int ambient_dim() const { return dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Reduce v against the current basis (in pivot order).  The result has
  // zeros at all current pivot rows.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    for (size_t k = 0; k < basis_.size(); ++k) {
      const Elem& coef = v[static_cast<size_t>(pivots_[k])];
      if (field_->is_zero(coef)) continue;
      Elem f = field_->neg(coef);
      const auto& b = basis_[k];
      for (int i = 0; i < dim_; ++i) {
        if (field_->is_zero(b[static_cast<size_t>(i)])) continue;
        v[static_cast<size_t>(i)] =
            field_->add(v[static_cast<size_t>(i)], field_->mul(f, b[static_cast<size_t>(i)]));
      }
    }
    return v;
  }

  bool contains(const std::vector<Elem>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (!field_->is_zero(x)) return false;
    return true;
  }

  // Add a vector to the span; returns true if the span grew.
  bool add(const std::vector<Elem>& v) {
    auto r = reduce(v);
    int pivot = -1;
    for (int i = 0; i < dim_; ++i)
      if (!field_->is_zero(r[static_cast<size_t>(i)])) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    Elem inv = field_->inv(r[static_cast<size_t>(pivot)]);
    for (auto& x : r) x = field_->mul(x, inv);
    // back-reduce existing basis vectors at the new pivot row
    for (size_t k = 0; k < basis_.size(); ++k) {
      const Elem& coef = basis_[k][static_cast<size_t>(pivot)];
      if (field_->is_zero(coef)) continue;
      Elem f = field_->neg(coef);
      for (int i = 0; i < dim_; ++i) {
        if (field_->is_zero(r[static_cast<size_t>(i)])) continue;
        basis_[k][static_cast<size_t>(i)] = field_->add(
            basis_[k][static_cast<size_t>(i)], field_->mul(f, r[static_cast<size_t>(i)]));
      }
    }
    // keep pivot order sorted for determinism
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), pivot);
    basis_.insert(basis_.begin() + static_cast<long>(pos), std::move(r));
    return true;
  }

  void add_columns(const Matrix<F>& m) {
    for (int j = 0; j < m.cols(); ++j) add(m.column(j));
  }

  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<std::vector<Elem>>& basis() const { return basis_; }

  Matrix<F> basis_matrix() const {
    Matrix<F> m(field_, dim_, dim());
    for (size_t k = 0; k < basis_.size(); ++k) m.set_column(static_cast<int>(k), basis_[k]);
    return m;
  }

  // Coordinates of v in the span basis; requires v in the span.
  std::vector<Elem> coordinates(const std::vector<Elem>& v) const {
    std::vector<Elem> coords(basis_.size(), field_->zero());
    auto r = v;
    for (size_t k = 0; k < basis_.size(); ++k) {
      const Elem coef = r[static_cast<size_t>(pivots_[k])];
      coords[k] = coef;
      if (field_->is_zero(coef)) continue;
      Elem f = field_->neg(coef);
      const auto& b = basis_[k];
      for (int i = 0; i < dim_; ++i) {
        if (field_->is_zero(b[static_cast<size_t>(i)])) continue;
        r[static_cast<size_t>(i)] =
            field_->add(r[static_cast<size_t>(i)], field_->mul(f, b[static_cast<size_t>(i)]));
      }
    }
    for (const auto& x : r)
      require(field_->is_zero(x), Errc::InternalError, "vector not in span");
    return coords;
  }

 private:
  FieldPtr field_;
  int dim_;
  std::vector<int> pivots_;
  std::vector<std::vector<Elem>> basis_;
};

// free function aliases matching the operation names used throughout
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  return Matrix<F>::kron(a, b);
}

template <class F>
std::optional<Matrix<F>> solve_right(const Matrix<F>& a, const Matrix<F>& b) {
  return Matrix<F>::solve_right(a, b);
}

}  // namespace hopfmod
