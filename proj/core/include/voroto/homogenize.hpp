#pragma once

#include "voroto/voronoi.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <array>
#include <memory>
#include <vector>

namespace voroto {

/// Linear-elastic base material. Plane stress throughout (thin cellular
/// sheets). void_eps is the relative stiffness given to empty micro cells so
/// the periodic cell problem stays positive definite.
struct BaseMaterial {
  double youngs = 1.0;
  double poisson = 0.3;
  double void_eps = 1e-6;
};

/// 3x3 constitutive matrix in Voigt notation [e_xx, e_yy, gamma_xy],
/// engineering shear, units of the base Young's modulus.
using ElasticityMatrix = Eigen::Matrix3d;

/// Plane-stress isotropic matrix for the base material.
ElasticityMatrix plane_stress_matrix(const BaseMaterial& material);

/// Stiffness matrix of one bilinear quad on the unit square for the solid
/// base material. Symmetric PSD with exactly three rigid modes.
Eigen::Matrix<double, 8, 8> q4_element_stiffness(const BaseMaterial& material);

/// Arithmetic mean of the density samples.
double volume_fraction(const DensityField& field);

struct HomogenizeResult {
  ElasticityMatrix C;
  double volume_fraction = 0.0;
};

/// Periodic numerical homogenization of a rasterized microstructure: solves
/// the three unit macro-strain cell problems on the micro grid and recovers
/// the effective elasticity matrix by mutual energies. Periodicity is
/// enforced by node pairing (opposite edges share dofs), which keeps the
/// reduced system symmetric positive definite for a direct factorization
/// shared across the three load cases.
///
/// Micro element stiffness scales linearly with max(rho, void_eps). One
/// instance caches the grid pattern and symbolic factorization; reuse it for
/// many fields of the same resolution. Instances are not thread-safe: use one
/// per worker.
class Homogenizer {
 public:
  Homogenizer(int nx, int ny, const BaseMaterial& material);

  /// Field dimensions must match the constructor's. Throws
  /// std::invalid_argument on bad input and std::runtime_error if the
  /// factorization fails (impossible for void_eps > 0 unless the field is
  /// invalid).
  HomogenizeResult run(const DensityField& field);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  const BaseMaterial& material() const { return material_; }

 private:
  int nx_, ny_;
  BaseMaterial material_;
  double lambda0_, mu0_;
  Eigen::Matrix<double, 8, 8> ke0_;  // lambda0*ke_lambda + mu0*ke_mu
  Eigen::Matrix<double, 8, 3> fe0_;
  Eigen::Matrix<double, 8, 3> chi0_;  // unit-strain element displacements
  std::vector<std::array<int, 8>> edof_;  // reduced dof ids, -1 where pinned
  Eigen::SparseMatrix<double> K_;
  std::vector<int> slots_;  // (element, i, j) -> K value slot, -1 where pinned
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
};

/// One-shot convenience wrapper around Homogenizer.
HomogenizeResult homogenize(const DensityField& field, const BaseMaterial& material);

}  // namespace voroto
