#include "albert/linear_map.hpp"

namespace albert {
namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Scalar>& a, std::size_t rows, std::size_t cols,
                              std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel * cols + c].is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    const Scalar inv = a[r * cols + c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c].is_zero()) continue;
      const Scalar f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearMap::LinearMap(GroundField k, std::size_t rows, std::size_t cols)
    : field_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

LinearMap LinearMap::identity(const GroundField& k, std::size_t n) {
  LinearMap m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

LinearMap LinearMap::from_columns(const GroundField& k, std::size_t rows,
                                  const std::vector<JordanElement>& columns) {
  LinearMap m(k, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ModelMismatch("column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

LinearMap LinearMap::from_rows(const GroundField& k, std::size_t cols,
                               const std::vector<JordanElement>& rows) {
  LinearMap m(k, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ModelMismatch("row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

LinearMap LinearMap::random(const GroundField& k, std::size_t n, Rng& rng) {
  LinearMap m(k, n, n);
  for (auto& x : m.data_) x = k.random(rng);
  return m;
}

JordanElement LinearMap::column(std::size_t j) const {
  JordanElement c = JordanElement::zeros(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

JordanElement LinearMap::apply(const JordanElement& x) const {
  if (x.size() != cols_) throw ModelMismatch("vector length does not match map");
  JordanElement y = JordanElement::zeros(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) acc += a * x[j];
    }
    y[i] = std::move(acc);
  }
  return y;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.cols_ != b.rows_) throw ModelMismatch("incompatible map shapes");
  LinearMap c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ModelMismatch("incompatible map shapes");
  LinearMap c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ModelMismatch("incompatible map shapes");
  LinearMap c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
  LinearMap m = *this;
  for (auto& x : m.data_) x *= c;
  return m;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::size_t LinearMap::rank() const {
  std::vector<Scalar> a = data_;
  return rref(a, rows_, cols_, cols_).size();
}

std::optional<LinearMap> LinearMap::try_inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  std::vector<Scalar> aug(n * 2 * n, field_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = at(i, j);
    aug[i * 2 * n + n + i] = field_.one();
  }
  if (rref(aug, n, 2 * n, n).size() != n) return std::nullopt;
  LinearMap inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug[i * 2 * n + n + j];
  return inv;
}

LinearMap LinearMap::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw SingularMap("map is not invertible");
  return *inv;
}

std::vector<JordanElement> LinearMap::kernel_basis() const {
  std::vector<Scalar> a = data_;
  const auto pivots = rref(a, rows_, cols_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<JordanElement> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    JordanElement v = JordanElement::zeros(field_, cols_);
    v[free] = field_.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r * cols_ + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<JordanElement> LinearMap::solve(const JordanElement& b) const {
  if (b.size() != rows_) throw ModelMismatch("right-hand side has wrong length");
  const std::size_t w = cols_ + 1;
  std::vector<Scalar> aug(rows_ * w, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug[i * w + j] = at(i, j);
    aug[i * w + cols_] = b[i];
  }
  const auto pivots = rref(aug, rows_, w, cols_);
  for (std::size_t i = pivots.size(); i < rows_; ++i)
    if (!aug[i * w + cols_].is_zero()) return std::nullopt;
  JordanElement x = JordanElement::zeros(field_, cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r * w + cols_];
  return x;
}

}  // namespace albert
