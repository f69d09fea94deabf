#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

namespace pderm {

// Row-oriented feature matrix, dense or sparse. All solver kernels go through
// the per-row accessors so that sparse instances pay O(nnz(a_i)) per touch.
// A multiply-add counter backs the per-epoch cost assertions in the tests;
// it is relaxed-atomic so const instances stay shareable across threads.
class DataMatrix {
 public:
  DataMatrix() = default;

  static DataMatrix Dense(Eigen::MatrixXd m);
  // rows[i] holds 0-based (column, value) pairs with strictly increasing columns.
  static DataMatrix Sparse(int n, int d,
                           const std::vector<std::vector<std::pair<int, double>>>& rows);

  DataMatrix(const DataMatrix& other);
  DataMatrix& operator=(const DataMatrix& other);
  DataMatrix(DataMatrix&&) noexcept = default;
  DataMatrix& operator=(DataMatrix&&) noexcept = default;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_sparse() const { return sparse_; }
  std::int64_t nnz() const;

  double row_dot(int i, const Eigen::VectorXd& x) const;
  // out += c * a_i
  void add_row_multiple(int i, double c, Eigen::VectorXd& out) const;
  double row_norm(int i) const;
  double max_row_norm() const;

  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;             // A x
  Eigen::VectorXd multiply_transpose(const Eigen::VectorXd& y) const;   // A^T y
  Eigen::MatrixXd gram() const;                                         // A^T A, dense

  void scale(double s);

  // Extract row i as 0-based (column, value) pairs (structural nonzeros only).
  std::vector<std::pair<int, double>> row_entries(int i) const;

  std::uint64_t flops() const { return flops_.load(std::memory_order_relaxed); }
  void reset_flops() const { flops_.store(0, std::memory_order_relaxed); }

 private:
  void count(std::uint64_t ops) const { flops_.fetch_add(ops, std::memory_order_relaxed); }

  bool sparse_ = false;
  int rows_ = 0;
  int cols_ = 0;
  Eigen::MatrixXd dense_;
  Eigen::SparseMatrix<double, Eigen::RowMajor> sp_;
  mutable std::atomic<std::uint64_t> flops_{0};
};

}  // namespace pderm
