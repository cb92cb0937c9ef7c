#include "tlforge/vsystem.hpp"

#include <Eigen/SVD>

namespace tlforge {

static void require_well_formed(const VSystem& vs, const char* who) {
  if (vs.n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
  if (vs.mats.empty()) throw std::invalid_argument(std::string(who) + ": empty system");
  if (vs.r() > vs.n * vs.n)
    throw std::invalid_argument(std::string(who) + ": r exceeds n^2");
  for (const auto& m : vs.mats)
    if (m.rows() != vs.n || m.cols() != vs.n)
      throw std::invalid_argument(std::string(who) + ": matrices must be n x n");
}

Vector vectorize(const Matrix& V) {
  const Index n = V.rows();
  Vector v(n * V.cols());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < V.cols(); ++b) v(a * V.cols() + b) = V(a, b);
  return v;
}

Report check_orthonormal(const VSystem& vs, const Tolerance& tol) {
  require_well_formed(vs, "check_orthonormal");
  const Index r = vs.r();
  double worst = 0.0;
  for (Index s = 0; s < r; ++s)
    for (Index m = 0; m < r; ++m) {
      const Complex g = (vs.mats[s].adjoint() * vs.mats[m]).trace();
      const Complex want = (s == m) ? Complex(1.0) : Complex(0.0);
      worst = std::max(worst, std::abs(g - want));
    }
  const double thr = tol.abs_eps * static_cast<double>(r);
  Report rep;
  rep.checks.push_back({"orthonormal_gram", worst, thr, worst <= thr});
  return rep;
}

Matrix projection_from_vs(const VSystem& vs, const Tolerance& tol) {
  if (!check_orthonormal(vs, tol).pass())
    throw std::invalid_argument("projection_from_vs: V-system is not orthonormal");
  const Index d = vs.n * vs.n;
  Matrix P = Matrix::Zero(d, d);
  for (const auto& V : vs.mats) {
    const Vector v = vectorize(V);
    P += v * v.adjoint();
  }
  return P;
}

Matrix w_matrix(const VSystem& vs) {
  require_well_formed(vs, "w_matrix");
  const Index r = vs.r();
  const Index n = vs.n;
  Matrix W = Matrix::Zero(r * n, r * n);
  for (Index s = 0; s < r; ++s)
    for (Index m = 0; m < r; ++m)
      W.block(s * n, m * n, n, n) = vs.mats[m] * vs.mats[s].conjugate();
  return W;
}

Report unitarity_criterion(const VSystem& vs, double Q, const Tolerance& tol) {
  if (!(Q > 0.0)) throw std::invalid_argument("unitarity_criterion: Q must be positive");
  if (!check_orthonormal(vs, tol).pass())
    throw std::invalid_argument("unitarity_criterion: V-system is not orthonormal");
  const Matrix W = Q * w_matrix(vs);
  const Index d = W.rows();
  const double resid = (W * W.adjoint() - identity(d)).norm();
  const double thr = tol.abs_eps * static_cast<double>(d);
  Report rep;
  rep.checks.push_back({"QW_unitary", resid, thr, resid <= thr});
  return rep;
}

std::optional<double> infer_Q(const VSystem& vs, const Tolerance& tol) {
  if (!check_orthonormal(vs, tol).pass())
    throw std::invalid_argument("infer_Q: V-system is not orthonormal");
  // W is not normal in general, so compare singular values.
  Eigen::BDCSVD<Matrix> svd(w_matrix(vs));
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("infer_Q: singular value decomposition did not converge");
  const auto& sv = svd.singularValues();
  const double hi = sv(0);
  const double lo = sv(sv.size() - 1);
  if (hi <= 0.0) return std::nullopt;
  if (hi - lo > tol.abs_eps * std::max(1.0, hi) * static_cast<double>(sv.size()))
    return std::nullopt;
  return 2.0 / (hi + lo);
}

VSystem gauge_transform(const VSystem& vs, const Matrix& g, const Tolerance& tol) {
  require_well_formed(vs, "gauge_transform");
  if (g.rows() != vs.n || g.cols() != vs.n)
    throw std::invalid_argument("gauge_transform: g must be n x n");
  if (!is_unitary(g, tol))
    throw std::invalid_argument("gauge_transform: g must be unitary");
  VSystem out;
  out.n = vs.n;
  out.mats.reserve(vs.mats.size());
  for (const auto& V : vs.mats) out.mats.push_back(g * V * g.transpose());
  return out;
}

Report quartic_identity_check(const VSystem& vs, double Q, const Tolerance& tol) {
  if (!(Q > 0.0)) throw std::invalid_argument("quartic_identity_check: Q must be positive");
  if (!check_orthonormal(vs, tol).pass())
    throw std::invalid_argument("quartic_identity_check: V-system is not orthonormal");
  const Index r = vs.r();
  const Index n = vs.n;
  double worst = 0.0;
  for (Index l = 0; l < r; ++l)
    for (Index p = 0; p < r; ++p) {
      Matrix sum = Matrix::Zero(n, n);
      for (Index s = 0; s < r; ++s)
        sum += vs.mats[s] * vs.mats[l].conjugate() * vs.mats[p].transpose() *
               vs.mats[s].adjoint();
      Matrix want = (l == p) ? identity(n) : Matrix(Matrix::Zero(n, n));
      worst = std::max(worst, (Q * Q * sum - want).norm());
    }
  const double thr = tol.abs_eps * static_cast<double>(r * n);
  Report rep;
  rep.checks.push_back({"quartic_identity", worst, thr, worst <= thr});
  return rep;
}

VSystem orthonormalize(const VSystem& vs, const Tolerance& tol) {
  require_well_formed(vs, "orthonormalize");
  VSystem out;
  out.n = vs.n;
  for (const auto& V : vs.mats) {
    Matrix W = V;
    for (const auto& U : out.mats) {
      const Complex overlap = (U.adjoint() * W).trace();
      W -= overlap * U;
    }
    const double norm = std::sqrt(std::abs((W.adjoint() * W).trace()));
    if (norm <= tol.abs_eps)
      throw std::invalid_argument("orthonormalize: linearly dependent system");
    out.mats.push_back(W / norm);
  }
  return out;
}

}  // namespace tlforge
