#include "statgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "statgeo/error.hpp"

namespace statgeo {

namespace {

double max_abs_of(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

// d_m g^kl = -g^ka T_mab g^bl, stored at (m, k, l) of a Tensor3.
Tensor3 inverse_metric_derivative(const LocalGeometry& geo) {
  const std::size_t n = geo.metric.dimension();
  const Matrix& ginv = geo.metric.inverse();
  Tensor3 out(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        double s = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) s += ginv(k, a) * geo.ac(m, a, b) * ginv(b, l);
        }
        out(m, k, l) = -s;
      }
    }
  }
  return out;
}

}  // namespace

double Tensor3::max_abs() const { return max_abs_of(data_); }
double Tensor4::max_abs() const { return max_abs_of(data_); }

MetricTensor MetricTensor::from_matrix(Matrix g) {
  if (g.rows() != g.cols() || g.rows() == 0) throw DomainError("metric: matrix must be square");
  const double scale = std::max(1e-300, g.cwiseAbs().maxCoeff());
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("metric: Hessian is not symmetric");
  }
  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success) {
    throw DomainError("metric: Hessian is not positive-definite");
  }
  // LLT succeeding on a nearly singular matrix still leaves a useless inverse.
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(g, Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) {
    throw DomainError("metric: Hessian is not positive-definite");
  }
  MetricTensor out;
  out.g_inv_ = llt.solve(Matrix::Identity(g.rows(), g.cols()));
  out.g_inv_ = 0.5 * (out.g_inv_ + out.g_inv_.transpose()).eval();
  const Vector diag = llt.matrixL().toDenseMatrix().diagonal();
  out.determinant_ = diag.prod() * diag.prod();
  out.g_ = std::move(g);
  return out;
}

double SymmetricThirdTensor::symmetry_defect() const {
  const std::size_t n = c_.dimension();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double v = c_(i, j, k);
        for (double w : {c_(i, k, j), c_(j, i, k), c_(j, k, i), c_(k, i, j), c_(k, j, i)}) {
          d = std::max(d, std::abs(v - w));
        }
      }
    }
  }
  return d;
}

double StructuralConstants::commutativity_defect() const {
  const std::size_t n = up.dimension();
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(up(k, i, j) - up(k, j, i)));
    }
  }
  return d;
}

double StructuralConstants::associativity_defect() const {
  const std::size_t n = up.dimension();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
          double lhs = 0.0;
          double rhs = 0.0;
          for (std::size_t l = 0; l < n; ++l) {
            lhs += up(l, i, j) * up(m, l, k);
            rhs += up(l, j, k) * up(m, l, i);
          }
          d = std::max(d, std::abs(lhs - rhs));
        }
      }
    }
  }
  return d;
}

double ConnectionField::torsion() const {
  const std::size_t n = gamma.dimension();
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(gamma(k, i, j) - gamma(k, j, i)));
    }
  }
  return d;
}

double CurvatureTensor::antisymmetry_defect() const {
  const std::size_t n = r.dimension();
  double d = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(r(l, i, j, k) + r(l, j, i, k)));
      }
    }
  }
  return d;
}

LocalGeometry local_geometry(const PotentialModel& model, std::span<const double> x,
                             bool with_fourth) {
  const Jet jet = model.jet(x, with_fourth ? 4 : 3);
  const std::size_t n = model.dimension();
  Matrix g(n, n);
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = jet.d2(i, j);
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = jet.d3(i, j, k);
    }
  }
  LocalGeometry geo{Coords(x.begin(), x.end()), MetricTensor::from_matrix(std::move(g)),
                    SymmetricThirdTensor(std::move(c)), std::nullopt};
  if (with_fourth) {
    Tensor4 q(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) q(i, j, k, l) = jet.d4(i, j, k, l);
        }
      }
    }
    geo.fourth = std::move(q);
  }
  return geo;
}

MetricTensor metric_at(const PotentialModel& model, std::span<const double> x) {
  const Jet jet = model.jet(x, 2);
  const std::size_t n = model.dimension();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = jet.d2(i, j);
  }
  return MetricTensor::from_matrix(std::move(g));
}

SymmetricThirdTensor ac_tensor_at(const PotentialModel& model, std::span<const double> x) {
  return local_geometry(model, x, false).ac;
}

StructuralConstants structural_constants(const MetricTensor& g, const SymmetricThirdTensor& c) {
  const std::size_t n = g.dimension();
  const Matrix& ginv = g.inverse();
  StructuralConstants out{Tensor3(n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += ginv(k, l) * c(i, j, l);
        out.up(k, i, j) = s;
      }
    }
  }
  return out;
}

Vector statistical_product(const MetricTensor& g, const SymmetricThirdTensor& c, const Vector& x,
                           const Vector& y) {
  const std::size_t n = g.dimension();
  if (static_cast<std::size_t>(x.size()) != n || static_cast<std::size_t>(y.size()) != n) {
    throw std::invalid_argument("statistical_product: dimension mismatch");
  }
  // Lowered product C_ijl X^i Y^j over i <= j, then raise. Pairing
  // x_i y_j + x_j y_i makes the result bitwise symmetric in X and Y.
  Vector lowered = Vector::Zero(n);
  for (std::size_t l = 0; l < n; ++l) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s += c(i, i, l) * (x(i) * y(i));
      for (std::size_t j = i + 1; j < n; ++j) s += c(i, j, l) * (x(i) * y(j) + x(j) * y(i));
    }
    lowered(l) = s;
  }
  return g.inverse() * lowered;
}

YukawaParts yukawa_parts(const MetricTensor& g, const SymmetricThirdTensor& c) {
  const std::size_t n = g.dimension();
  const Matrix& ginv = g.inverse();

  // C^ijk = g^ia g^jb g^kc C_abc, one index at a time.
  Tensor3 t1(n), t2(n), raised(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        double s = 0.0;
        for (std::size_t a = 0; a < n; ++a) s += ginv(i, a) * c(a, b, cc);
        t1(i, b, cc) = s;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t cc = 0; cc < n; ++cc) {
        double s = 0.0;
        for (std::size_t b = 0; b < n; ++b) s += ginv(j, b) * t1(i, b, cc);
        t2(i, j, cc) = s;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t cc = 0; cc < n; ++cc) s += ginv(k, cc) * t2(i, j, cc);
        raised(i, j, k) = s;
      }

  YukawaParts parts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) parts.full += c(i, j, k) * raised(i, j, k);

  std::vector<double> lower_trace(n, 0.0);  // C_i = g^jl C_ijl
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) lower_trace[i] += ginv(j, l) * c(i, j, l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) parts.trace += lower_trace[i] * ginv(i, j) * lower_trace[j];
  return parts;
}

double yukawa_term(const MetricTensor& g, const SymmetricThirdTensor& c) {
  return yukawa_parts(g, c).value();
}

ConnectionField levi_civita(const LocalGeometry& geo, bool with_derivatives) {
  const std::size_t n = geo.metric.dimension();
  const Matrix& ginv = geo.metric.inverse();
  // d_a g_bc = C_abc in Hessian coordinates; S_ijl = d_i g_jl + d_j g_il - d_l g_ij.
  auto first_kind = [&](std::size_t i, std::size_t j, std::size_t l) {
    return geo.ac(i, j, l) + geo.ac(j, i, l) - geo.ac(l, i, j);
  };

  ConnectionField lc{Tensor3(n), std::nullopt};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += ginv(k, l) * first_kind(i, j, l);
        lc.gamma(k, i, j) = 0.5 * s;
      }

  if (!with_derivatives) return lc;
  if (!geo.fourth) throw std::invalid_argument("levi_civita: derivatives need fourth partials");
  const Tensor4& q = *geo.fourth;
  const Tensor3 dginv = inverse_metric_derivative(geo);
  Tensor4 d(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double s = 0.0;
          for (std::size_t l = 0; l < n; ++l) {
            const double dfirst = q(m, i, j, l) + q(m, j, i, l) - q(m, l, i, j);
            s += dginv(m, k, l) * first_kind(i, j, l) + ginv(k, l) * dfirst;
          }
          d(m, k, i, j) = 0.5 * s;
        }
  lc.dgamma = std::move(d);
  return lc;
}

ConnectionField levi_civita_at(const PotentialModel& model, std::span<const double> x) {
  return levi_civita(local_geometry(model, x, true), true);
}

Tensor3 hessian_levi_civita(const LocalGeometry& geo) {
  Tensor3 half = structural_constants(geo.metric, geo.ac).up;
  const std::size_t n = half.dimension();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) half(k, i, j) *= 0.5;
  return half;
}

ConnectionField alpha_connection(const ConnectionField& lc, const LocalGeometry& geo, double alpha) {
  const std::size_t n = lc.dimension();
  const StructuralConstants product = structural_constants(geo.metric, geo.ac);
  ConnectionField out{lc.gamma, std::nullopt};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.gamma(k, i, j) += alpha * product.up(k, i, j);

  if (!lc.dgamma) return out;
  if (!geo.fourth) throw std::invalid_argument("alpha_connection: derivatives need fourth partials");
  const Tensor4& q = *geo.fourth;
  const Matrix& ginv = geo.metric.inverse();
  const Tensor3 dginv = inverse_metric_derivative(geo);
  Tensor4 d = *lc.dgamma;
  // d_m (g^kl C_ijl) = (d_m g^kl) C_ijl + g^kl Q_mijl
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double s = 0.0;
          for (std::size_t l = 0; l < n; ++l) s += dginv(m, k, l) * geo.ac(i, j, l) + ginv(k, l) * q(m, i, j, l);
          d(m, k, i, j) += alpha * s;
        }
  out.dgamma = std::move(d);
  return out;
}

ConnectionField alpha_connection_at(const PotentialModel& model, std::span<const double> x,
                                    double alpha, bool with_derivatives) {
  const LocalGeometry geo = local_geometry(model, x, with_derivatives);
  return alpha_connection(levi_civita(geo, with_derivatives), geo, alpha);
}

ConnectionField dual_connection(const ConnectionField& gamma, const ConnectionField& lc) {
  const std::size_t n = gamma.dimension();
  if (lc.dimension() != n) throw std::invalid_argument("dual_connection: dimension mismatch");
  ConnectionField out{Tensor3(n), std::nullopt};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.gamma(k, i, j) = 2.0 * lc.gamma(k, i, j) - gamma.gamma(k, i, j);
  if (gamma.dgamma && lc.dgamma) {
    Tensor4 d(n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            d(m, k, i, j) = 2.0 * (*lc.dgamma)(m, k, i, j) - (*gamma.dgamma)(m, k, i, j);
    out.dgamma = std::move(d);
  }
  return out;
}

Tensor3 lower(const ConnectionField& gamma, const MetricTensor& g) {
  const std::size_t n = gamma.dimension();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += g(k, l) * gamma.gamma(l, i, j);
        out(i, j, k) = s;
      }
  return out;
}

Tensor3 contravariant_connection(const ConnectionField& gamma, const MetricTensor& g) {
  const std::size_t n = gamma.dimension();
  const Matrix& ginv = g.inverse();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t sidx = 0; sidx < n; ++sidx) s += ginv(i, sidx) * gamma.gamma(j, sidx, k);
        out(i, j, k) = -s;
      }
  return out;
}

double pairing_defect(const ConnectionField& gamma, const MetricTensor& g) {
  const std::size_t n = gamma.dimension();
  const Tensor3 contra = contravariant_connection(gamma, g);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t sidx = 0; sidx < n; ++sidx) s += g(i, sidx) * contra(sidx, j, k);
        d = std::max(d, std::abs(s + gamma.gamma(j, i, k)));
      }
  return d;
}

CurvatureTensor riemann_curvature(const ConnectionField& field) {
  if (!field.dgamma) throw std::invalid_argument("riemann_curvature: connection has no derivative table");
  const std::size_t n = field.dimension();
  const Tensor3& g = field.gamma;
  const Tensor4& dg = *field.dgamma;
  CurvatureTensor out{Tensor4(n)};
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          double v = dg(i, l, j, k) - dg(j, l, i, k);
          for (std::size_t s = 0; s < n; ++s) v += g(l, i, s) * g(s, j, k) - g(l, j, s) * g(s, i, k);
          out.r(l, i, j, k) = v;
        }
  return out;
}

}  // namespace statgeo
