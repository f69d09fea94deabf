#include "pderm/data_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace pderm {

DataMatrix DataMatrix::Dense(Eigen::MatrixXd m) {
  DataMatrix out;
  out.sparse_ = false;
  out.rows_ = static_cast<int>(m.rows());
  out.cols_ = static_cast<int>(m.cols());
  out.dense_ = std::move(m);
  return out;
}

DataMatrix DataMatrix::Sparse(int n, int d,
                              const std::vector<std::vector<std::pair<int, double>>>& rows) {
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count mismatch");
  DataMatrix out;
  out.sparse_ = true;
  out.rows_ = n;
  out.cols_ = d;
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, v] : rows[i]) {
      if (j < 0 || j >= d) throw std::invalid_argument("column index out of range");
      trip.emplace_back(i, j, v);
    }
  }
  out.sp_.resize(n, d);
  out.sp_.setFromTriplets(trip.begin(), trip.end());
  out.sp_.makeCompressed();
  return out;
}

DataMatrix::DataMatrix(const DataMatrix& other)
    : sparse_(other.sparse_),
      rows_(other.rows_),
      cols_(other.cols_),
      dense_(other.dense_),
      sp_(other.sp_),
      flops_(other.flops_.load(std::memory_order_relaxed)) {}

DataMatrix& DataMatrix::operator=(const DataMatrix& other) {
  if (this != &other) {
    sparse_ = other.sparse_;
    rows_ = other.rows_;
    cols_ = other.cols_;
    dense_ = other.dense_;
    sp_ = other.sp_;
    flops_.store(other.flops_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  }
  return *this;
}

std::int64_t DataMatrix::nnz() const {
  if (sparse_) return static_cast<std::int64_t>(sp_.nonZeros());
  return static_cast<std::int64_t>(rows_) * cols_;
}

double DataMatrix::row_dot(int i, const Eigen::VectorXd& x) const {
  if (!sparse_) {
    count(static_cast<std::uint64_t>(cols_));
    return dense_.row(i).dot(x.transpose());
  }
  double acc = 0.0;
  std::uint64_t ops = 0;
  for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(sp_, i); it; ++it) {
    acc += it.value() * x[it.col()];
    ++ops;
  }
  count(ops);
  return acc;
}

void DataMatrix::add_row_multiple(int i, double c, Eigen::VectorXd& out) const {
  if (!sparse_) {
    count(static_cast<std::uint64_t>(cols_));
    out.noalias() += c * dense_.row(i).transpose();
    return;
  }
  std::uint64_t ops = 0;
  for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(sp_, i); it; ++it) {
    out[it.col()] += c * it.value();
    ++ops;
  }
  count(ops);
}

double DataMatrix::row_norm(int i) const {
  if (!sparse_) return dense_.row(i).norm();
  double acc = 0.0;
  for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(sp_, i); it; ++it)
    acc += it.value() * it.value();
  return std::sqrt(acc);
}

double DataMatrix::max_row_norm() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i) m = std::max(m, row_norm(i));
  return m;
}

Eigen::VectorXd DataMatrix::multiply(const Eigen::VectorXd& x) const {
  count(static_cast<std::uint64_t>(nnz()));
  if (!sparse_) return dense_ * x;
  return sp_ * x;
}

Eigen::VectorXd DataMatrix::multiply_transpose(const Eigen::VectorXd& y) const {
  count(static_cast<std::uint64_t>(nnz()));
  if (!sparse_) return dense_.transpose() * y;
  return sp_.transpose() * y;
}

Eigen::MatrixXd DataMatrix::gram() const {
  if (!sparse_) return dense_.transpose() * dense_;
  Eigen::SparseMatrix<double> g = sp_.transpose() * sp_;
  return Eigen::MatrixXd(g);
}

void DataMatrix::scale(double s) {
  if (!sparse_) {
    dense_ *= s;
  } else {
    sp_ *= s;
  }
}

std::vector<std::pair<int, double>> DataMatrix::row_entries(int i) const {
  std::vector<std::pair<int, double>> out;
  if (!sparse_) {
    out.reserve(cols_);
    for (int j = 0; j < cols_; ++j) out.emplace_back(j, dense_(i, j));
    return out;
  }
  for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(sp_, i); it; ++it)
    out.emplace_back(static_cast<int>(it.col()), it.value());
  return out;
}

}  // namespace pderm
