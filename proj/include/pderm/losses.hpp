#pragma once

#include <Eigen/Dense>
#include <utility>

namespace pderm {

enum class LossKind { kSquared, kLogistic };

// Per-sample loss family phi_i with the full primal/dual calculus the solvers
// need: values, derivatives, convex conjugates, the scalar dual proximal map
// prox_{sigma * phi_i^*}, and Bregman divergences of the conjugate.
//
// Squared:  phi_i(z) = (z - b_i)^2 / 2         gamma = 1, delta = 1
// Logistic: phi_i(z) = log(1 + exp(-b_i z))    gamma = 4, delta = 0, b_i in {-1,+1}
//
// gamma is the reciprocal-smoothness constant (phi_i is 1/gamma-smooth) and
// delta the strong convexity of phi_i; gamma * delta <= 1 for both families.
class LossFamily {
 public:
  static LossFamily Squared(Eigen::VectorXd labels);
  static LossFamily Logistic(Eigen::VectorXd labels);  // labels must be +-1

  LossKind kind() const { return kind_; }
  const Eigen::VectorXd& labels() const { return b_; }
  int n() const { return static_cast<int>(b_.size()); }
  double gamma() const { return kind_ == LossKind::kSquared ? 1.0 : 4.0; }
  double delta() const { return kind_ == LossKind::kSquared ? 1.0 : 0.0; }

  double value(int i, double z) const;
  double deriv(int i, double z) const;

  // Conjugate phi_i^*(beta). Logistic domain: b_i * beta in [-1, 0], with the
  // limit convention 0*log(0) = 0 at the endpoints. Throws DomainError outside.
  double conjugate(int i, double beta) const;
  double conjugate_deriv(int i, double beta) const;
  bool in_conjugate_domain(int i, double beta) const;

  // argmin_y { phi_i^*(y) + (y - z)^2 / (2 sigma) }
  double dual_prox(int i, double sigma, double z) const;

  // D_i(y, y_prev) = phi_i^*(y) - phi_i^*(y_prev) - (phi_i^*)'(y_prev) (y - y_prev)
  double conjugate_bregman(int i, double y, double y_prev) const;

  // (y_i^0, v_i^0) with v_i^0 = (phi_i^*)'(y_i^0):
  // squared -> (0, b_i); logistic -> (-b_i/2, 0).
  std::pair<double, double> dual_free_init(int i) const;

 private:
  LossFamily(LossKind kind, Eigen::VectorXd labels) : kind_(kind), b_(std::move(labels)) {}

  LossKind kind_;
  Eigen::VectorXd b_;
};

}  // namespace pderm
