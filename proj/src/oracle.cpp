#include "qocsim/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qocsim/errors.hpp"

namespace qocsim {

DenseMatrix expm_hermitian(const DenseMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw invariant_error("expm_hermitian: eigendecomposition failed");
  DenseVector phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    phases(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

DenseMatrix expm_pade(const DenseMatrix& a) {
  // Scaling and squaring with the (13,13) Pade approximant.
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  const double theta13 = 5.371920351148152;
  if (norm1 > theta13)
    squarings = static_cast<int>(
        std::ceil(std::log2(norm1 / theta13)));
  const DenseMatrix as = a / std::pow(2.0, squarings);
  const Eigen::Index n = a.rows();
  const DenseMatrix i = DenseMatrix::Identity(n, n);
  const DenseMatrix a2 = as * as;
  const DenseMatrix a4 = a2 * a2;
  const DenseMatrix a6 = a2 * a4;
  const DenseMatrix u =
      as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
            b[5] * a4 + b[3] * a2 + b[1] * i);
  const DenseMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                        b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
  DenseMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

double spectral_norm(const DenseMatrix& a) {
  if (a.rows() <= 1024) {
    Eigen::BDCSVD<DenseMatrix> svd(a);
    return svd.singularValues()(0);
  }
  // Power iteration on A^dagger A.
  DenseVector v = DenseVector::Random(a.cols());
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    DenseVector w = a.adjoint() * (a * v);
    const double next = w.norm();
    if (next == 0.0) return 0.0;
    w /= next;
    if (std::abs(next - lambda) <= 1e-13 * next && it > 3) {
      lambda = next;
      break;
    }
    lambda = next;
    v = w;
  }
  return std::sqrt(lambda);
}

DenseMatrix exact_propagator(const DenseMatrix& g0, const DenseMatrix& gc,
                             std::span<const double> field, double dt) {
  const Eigen::Index n = g0.rows();
  DenseMatrix u = DenseMatrix::Identity(n, n);
  for (const double f : field) u = expm_hermitian(g0 + f * gc, dt) * u;
  return u;
}

void exact_evolve(StateVector& psi, const DenseMatrix& g0,
                  const DenseMatrix& gc, std::span<const double> field,
                  double dt) {
  if (static_cast<std::size_t>(g0.rows()) != psi.dim())
    throw invariant_error("exact_evolve dimension mismatch");
  DenseVector v = psi.to_eigen();
  // Cache the step unitary per distinct field value; control sweeps hit the
  // same frozen value repeatedly only for constant fields, so the common
  // case recomputes per step.
  double last_f = std::nan("");
  DenseMatrix step;
  for (const double f : field) {
    if (f != last_f || std::isnan(last_f)) {
      step = expm_hermitian(g0 + f * gc, dt);
      last_f = f;
    }
    v = step * v;
  }
  psi = StateVector::from_eigen(psi.width(), v);
}

DenseMatrix pf_propagator(const DrivenHamiltonian& h,
                          std::span<const double> field,
                          const TrotterPlan& plan) {
  const std::size_t dim = std::size_t{1} << h.width;
  DenseMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector psi = StateVector::basis_state(h.width, col);
    evolve(psi, h, field, plan);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = psi[row];
  }
  return u;
}

double trotter_error(const DrivenHamiltonian& h, std::span<const double> field,
                     const TrotterPlan& plan) {
  const DenseMatrix g0 = reconstruct(h.drift());
  const DenseMatrix gc = reconstruct(h.control());
  const DenseMatrix exact = exact_propagator(g0, gc, field, plan.dt);
  const DenseMatrix pf = pf_propagator(h, field, plan);
  return spectral_norm(pf - exact);
}

OutcomeDistribution outcome_probabilities(const StateVector& psi,
                                          const DenseMatrix& observable,
                                          double degeneracy_tol) {
  if (static_cast<std::size_t>(observable.rows()) != psi.dim())
    throw invariant_error("outcome_probabilities dimension mismatch");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(observable);
  if (es.info() != Eigen::Success)
    throw invariant_error("outcome_probabilities: eigendecomposition failed");
  const DenseVector amps = es.eigenvectors().adjoint() * psi.to_eigen();
  OutcomeDistribution dist;
  // Eigenvalues come out sorted; group near-degenerate ones.
  Eigen::Index k = 0;
  while (k < amps.size()) {
    const double value = es.eigenvalues()(k);
    double p = 0.0;
    double vsum = 0.0;
    Eigen::Index n = 0;
    while (k < amps.size() &&
           es.eigenvalues()(k) <= value + degeneracy_tol) {
      p += std::norm(amps(k));
      vsum += es.eigenvalues()(k);
      ++n;
      ++k;
    }
    dist.eigenvalues.push_back(vsum / static_cast<double>(n));
    dist.probabilities.push_back(p);
  }
  return dist;
}

double max_outcome_deviation(const StateVector& a, const StateVector& b,
                             const DenseMatrix& observable,
                             double degeneracy_tol) {
  if (a.dim() != b.dim())
    throw invariant_error("max_outcome_deviation dimension mismatch");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(observable);
  if (es.info() != Eigen::Success)
    throw invariant_error("max_outcome_deviation: eigendecomposition failed");
  const DenseVector wa = es.eigenvectors().adjoint() * a.to_eigen();
  const DenseVector wb = es.eigenvectors().adjoint() * b.to_eigen();
  double dev = 0.0;
  Eigen::Index k = 0;
  while (k < wa.size()) {
    const double value = es.eigenvalues()(k);
    double pa = 0.0, pb = 0.0;
    while (k < wa.size() && es.eigenvalues()(k) <= value + degeneracy_tol) {
      pa += std::norm(wa(k));
      pb += std::norm(wb(k));
      ++k;
    }
    dev = std::max(dev, std::abs(pa - pb));
  }
  return dev;
}

} // namespace qocsim
