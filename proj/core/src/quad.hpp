#pragma once

// Bilinear quadrilateral integration on a rectangle [-a,a] x [-b,b], 2x2
// Gauss rule. Node order is counterclockwise from the lower-left corner;
// per-node dofs are (ux, uy). Voigt strain order [e_xx, e_yy, gamma_xy]
// with engineering shear. Internal to the core library.

#include <Eigen/Dense>

#include <array>
#include <cmath>

namespace voroto::detail {

using Matrix3x8 = Eigen::Matrix<double, 3, 8>;

inline std::array<Matrix3x8, 4> q4_strain_matrices(double a, double b) {
  const double g = 1.0 / std::sqrt(3.0);
  const std::array<std::array<double, 2>, 4> pts{{{-g, -g}, {g, -g}, {g, g}, {-g, g}}};
  std::array<Matrix3x8, 4> Bs;
  for (int q = 0; q < 4; ++q) {
    const double xi = pts[q][0];
    const double eta = pts[q][1];
    const std::array<double, 4> dNdxi{-(1 - eta) / 4, (1 - eta) / 4, (1 + eta) / 4,
                                      -(1 + eta) / 4};
    const std::array<double, 4> dNdeta{-(1 - xi) / 4, -(1 + xi) / 4, (1 + xi) / 4,
                                       (1 - xi) / 4};
    Matrix3x8& B = Bs[q];
    B.setZero();
    for (int i = 0; i < 4; ++i) {
      const double dNdx = dNdxi[i] / a;   // x = a*xi
      const double dNdy = dNdeta[i] / b;  // y = b*eta
      B(0, 2 * i) = dNdx;
      B(1, 2 * i + 1) = dNdy;
      B(2, 2 * i) = dNdy;
      B(2, 2 * i + 1) = dNdx;
    }
  }
  return Bs;
}

/// Integral of B^T C B over the rectangle (element stiffness for constant C).
inline Eigen::Matrix<double, 8, 8> q4_ke(const Eigen::Matrix3d& C, double a, double b) {
  const auto Bs = q4_strain_matrices(a, b);
  const double w = a * b;  // Gauss weight 1 * |J| = a*b
  Eigen::Matrix<double, 8, 8> ke = Eigen::Matrix<double, 8, 8>::Zero();
  for (const auto& B : Bs) ke += w * B.transpose() * C * B;
  return ke;
}

/// Integral of B^T C over the rectangle (unit macro-strain element load).
inline Eigen::Matrix<double, 8, 3> q4_fe(const Eigen::Matrix3d& C, double a, double b) {
  const auto Bs = q4_strain_matrices(a, b);
  const double w = a * b;
  Eigen::Matrix<double, 8, 3> fe = Eigen::Matrix<double, 8, 3>::Zero();
  for (const auto& B : Bs) fe += w * B.transpose() * C;
  return fe;
}

}  // namespace voroto::detail
