#pragma once

// Pointwise tensor calculus on a Hessian statistical manifold: metric, the
// Amari-Chentsov tensor C_ijk = d^3 Psi, the statistical product, the Yukawa
// scalar, the alpha-connection pencil and its curvature.
//
// Index layout conventions (all storage dense, row-major):
//   Tensor3 for C:            (i, j, k)     -> C_ijk
//   StructuralConstants:      (k, i, j)     -> C^k_ij
//   ConnectionField::gamma:   (k, i, j)     -> Gamma^k_ij
//   ConnectionField::dgamma:  (m, k, i, j)  -> d_m Gamma^k_ij
//   CurvatureTensor:          (l, i, j, k)  -> R^l_ijk
// Lowering a connection contracts the upper index into the last slot:
// Gamma_ijk = g_kl Gamma^l_ij, so Gamma^alpha_ijk = LC_ijk + alpha C_ijk.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "statgeo/models.hpp"

namespace statgeo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, 0.0) {}

  std::size_t dimension() const { return n_; }
  double& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * n_ + b) * n_ + c]; }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * n_ + b) * n_ + c];
  }
  std::span<const double> data() const { return data_; }
  double max_abs() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t dimension() const { return n_; }
  double& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  double operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  std::span<const double> data() const { return data_; }
  double max_abs() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// Symmetric positive-definite metric with its inverse.
class MetricTensor {
 public:
  // Throws DomainError if g is not symmetric or not positive-definite.
  static MetricTensor from_matrix(Matrix g);

  std::size_t dimension() const { return static_cast<std::size_t>(g_.rows()); }
  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return g_inv_; }
  double operator()(std::size_t i, std::size_t j) const { return g_(i, j); }
  double determinant() const { return determinant_; }
  double inner(const Vector& x, const Vector& y) const { return x.dot(g_ * y); }

 private:
  Matrix g_;
  Matrix g_inv_;
  double determinant_ = 0.0;
};

// Totally symmetric rank-3 tensor (the Amari-Chentsov tensor).
class SymmetricThirdTensor {
 public:
  SymmetricThirdTensor() = default;
  explicit SymmetricThirdTensor(Tensor3 c) : c_(std::move(c)) {}

  std::size_t dimension() const { return c_.dimension(); }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  const Tensor3& tensor() const { return c_; }
  // max over entries and the five non-trivial permutations of |C_ijk - C_sigma(ijk)|.
  double symmetry_defect() const;

 private:
  Tensor3 c_;
};

struct StructuralConstants {
  Tensor3 up;  // C^k_ij at (k, i, j)

  // max |C^k_ij - C^k_ji|
  double commutativity_defect() const;
  // max |C^l_ij C^m_lk - C^l_jk C^m_li|
  double associativity_defect() const;
};

struct ConnectionField {
  Tensor3 gamma;                  // Gamma^k_ij at (k, i, j)
  std::optional<Tensor4> dgamma;  // d_m Gamma^k_ij at (m, k, i, j)

  std::size_t dimension() const { return gamma.dimension(); }
  double torsion() const;  // max |Gamma^k_ij - Gamma^k_ji|
};

struct CurvatureTensor {
  Tensor4 r;  // R^l_ijk at (l, i, j, k)

  double max_abs() const { return r.max_abs(); }
  // max |R^l_ijk + R^l_jik|
  double antisymmetry_defect() const;
};

// Everything a connection computation needs at one point.
struct LocalGeometry {
  Coords x;
  MetricTensor metric;
  SymmetricThirdTensor ac;        // third partials of Psi
  std::optional<Tensor4> fourth;  // fourth partials, when requested
};

LocalGeometry local_geometry(const PotentialModel& model, std::span<const double> x,
                             bool with_fourth = true);

MetricTensor metric_at(const PotentialModel& model, std::span<const double> x);
SymmetricThirdTensor ac_tensor_at(const PotentialModel& model, std::span<const double> x);

StructuralConstants structural_constants(const MetricTensor& g, const SymmetricThirdTensor& c);

// (X o Y)^k = g^kl C_ijl X^i Y^j.
Vector statistical_product(const MetricTensor& g, const SymmetricThirdTensor& c, const Vector& x,
                           const Vector& y);

struct YukawaParts {
  double full = 0.0;   // C_ijk C^ijk
  double trace = 0.0;  // C_i C^i with C_i = g^jl C_ijl
  double value() const { return full - trace; }
};

YukawaParts yukawa_parts(const MetricTensor& g, const SymmetricThirdTensor& c);
double yukawa_term(const MetricTensor& g, const SymmetricThirdTensor& c);

// Levi-Civita connection from 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij);
// the derivative table needs geo.fourth.
ConnectionField levi_civita(const LocalGeometry& geo, bool with_derivatives = true);
ConnectionField levi_civita_at(const PotentialModel& model, std::span<const double> x);

// Hessian-coordinate shortcut 1/2 g^kl C_ijl (no derivative table).
Tensor3 hessian_levi_civita(const LocalGeometry& geo);

// Gamma^alpha = LC + alpha g^kl C_ijl; also the Dubrovin connection
// LC nabla_X Y + alpha X o Y under the unit product normalization.
ConnectionField alpha_connection(const ConnectionField& lc, const LocalGeometry& geo, double alpha);
ConnectionField alpha_connection_at(const PotentialModel& model, std::span<const double> x,
                                    double alpha, bool with_derivatives = true);

// Gamma* = 2 LC - Gamma, componentwise including derivatives.
ConnectionField dual_connection(const ConnectionField& gamma, const ConnectionField& lc);

// Gamma_ijk = g_kl Gamma^l_ij.
Tensor3 lower(const ConnectionField& gamma, const MetricTensor& g);

// Gamma^ij_k = -g^is Gamma^j_sk, stored at (i, j, k).
Tensor3 contravariant_connection(const ConnectionField& gamma, const MetricTensor& g);

// d_i <dx^j, d_k> along the pair (contravariant, covariant) of one connection:
// max over i,j,k of |g_is Gamma^sj_k + Gamma^j_ik|. Zero for every connection.
double pairing_defect(const ConnectionField& gamma, const MetricTensor& g);

// R^l_ijk = d_i G^l_jk - d_j G^l_ik + G^l_is G^s_jk - G^l_js G^s_ik.
// Throws std::invalid_argument if the derivative table is missing.
CurvatureTensor riemann_curvature(const ConnectionField& gamma);

}  // namespace statgeo
