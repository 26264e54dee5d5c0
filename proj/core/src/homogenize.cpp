#include "voroto/homogenize.hpp"

#include "quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace voroto {

ElasticityMatrix plane_stress_matrix(const BaseMaterial& m) {
  if (!(m.youngs > 0.0)) throw std::invalid_argument("material: E must be positive");
  if (!(m.poisson >= 0.0 && m.poisson < 0.5))
    throw std::invalid_argument("material: nu must be in [0, 0.5)");
  const double f = m.youngs / (1.0 - m.poisson * m.poisson);
  ElasticityMatrix C;
  C << f, f * m.poisson, 0.0,
       f * m.poisson, f, 0.0,
       0.0, 0.0, f * (1.0 - m.poisson) / 2.0;
  return C;
}

Eigen::Matrix<double, 8, 8> q4_element_stiffness(const BaseMaterial& material) {
  return detail::q4_ke(plane_stress_matrix(material), 0.5, 0.5);
}

double volume_fraction(const DensityField& field) {
  if (field.values.empty()) throw std::invalid_argument("volume_fraction: empty field");
  double sum = 0.0;
  for (double v : field.values) sum += v;
  return sum / static_cast<double>(field.values.size());
}

namespace {

// lambda/mu decomposition of the Voigt matrix: C = lambda*Cl + mu*Cm.
Eigen::Matrix3d lambda_basis() {
  Eigen::Matrix3d Cl;
  Cl << 1, 1, 0, 1, 1, 0, 0, 0, 0;
  return Cl;
}

Eigen::Matrix3d mu_basis() {
  Eigen::Matrix3d Cm;
  Cm << 2, 0, 0, 0, 2, 0, 0, 0, 1;
  return Cm;
}

}  // namespace

Homogenizer::Homogenizer(int nx, int ny, const BaseMaterial& material)
    : nx_(nx), ny_(ny), material_(material) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("homogenizer: grid must be >= 1x1");
  if (!(material.void_eps > 0.0 && material.void_eps < 1.0))
    throw std::invalid_argument("homogenizer: void_eps must be in (0, 1)");

  // Plane-stress Lame-type parameters: C_base = lambda0*Cl + mu0*Cm.
  mu0_ = material.youngs / (2.0 * (1.0 + material.poisson));
  lambda0_ = material.youngs * material.poisson / (1.0 - material.poisson * material.poisson);

  const double a = 0.5 / nx;  // micro element half-widths; macro element is unit
  const double b = 0.5 / ny;
  const auto ke_lambda = detail::q4_ke(lambda_basis(), a, b);
  const auto ke_mu = detail::q4_ke(mu_basis(), a, b);
  const auto fe_lambda = detail::q4_fe(lambda_basis(), a, b);
  const auto fe_mu = detail::q4_fe(mu_basis(), a, b);
  ke0_ = lambda0_ * ke_lambda + mu0_ * ke_mu;
  fe0_ = lambda0_ * fe_lambda + mu0_ * fe_mu;

  // Element displacements reproducing the three unit macro strains. The
  // lambda/mu split cancels between ke and fe, so the unscaled sums serve.
  {
    const Eigen::Matrix<double, 8, 8> ke = ke_lambda + ke_mu;
    const Eigen::Matrix<double, 8, 3> fe = fe_lambda + fe_mu;
    // Pin dofs {0,1,3} to remove the three rigid modes of the free element.
    const std::array<int, 5> keep{2, 4, 5, 6, 7};
    Eigen::Matrix<double, 5, 5> ke_red;
    Eigen::Matrix<double, 5, 3> fe_red;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) ke_red(i, j) = ke(keep[i], keep[j]);
      fe_red.row(i) = fe.row(keep[i]);
    }
    const Eigen::Matrix<double, 5, 3> sol = ke_red.llt().solve(fe_red);
    chi0_.setZero();
    for (int i = 0; i < 5; ++i) chi0_.row(keep[i]) = sol.row(i);
  }

  // Periodic node numbering: node (ix, iy) with wrap, id = ix*ny + iy.
  // Node 0 is pinned (both dofs) to remove the rigid translations.
  const auto node = [this](int ix, int iy) {
    return ((ix % nx_) * ny_ + (iy % ny_));
  };
  const auto reduced_dof = [](int dof) { return dof >= 2 ? dof - 2 : -1; };

  const std::size_t nel = static_cast<std::size_t>(nx) * ny;
  edof_.resize(nel);
  for (int ey = 0; ey < ny; ++ey) {
    for (int ex = 0; ex < nx; ++ex) {
      const std::array<int, 4> nodes{node(ex, ey), node(ex + 1, ey),
                                     node(ex + 1, ey + 1), node(ex, ey + 1)};
      auto& dofs = edof_[static_cast<std::size_t>(ey) * nx + ex];
      for (int i = 0; i < 4; ++i) {
        dofs[2 * i] = reduced_dof(2 * nodes[i]);
        dofs[2 * i + 1] = reduced_dof(2 * nodes[i] + 1);
      }
    }
  }

  const int ndof = 2 * nx * ny - 2;
  std::vector<Eigen::Triplet<double>> pattern;
  pattern.reserve(nel * 64);
  for (const auto& dofs : edof_) {
    for (int i = 0; i < 8; ++i) {
      if (dofs[i] < 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (dofs[j] >= 0) pattern.emplace_back(dofs[i], dofs[j], 1.0);
      }
    }
  }
  K_.resize(ndof, ndof);
  K_.setFromTriplets(pattern.begin(), pattern.end());
  K_.makeCompressed();

  // Map each (element, local i, local j) to its slot in the compressed value
  // array so repeated runs only refill values.
  slots_.assign(nel * 64, -1);
  const int* outer = K_.outerIndexPtr();
  const int* inner = K_.innerIndexPtr();
  for (std::size_t e = 0; e < nel; ++e) {
    const auto& dofs = edof_[e];
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        if (dofs[i] < 0 || dofs[j] < 0) continue;
        const int col = dofs[j];
        const int* begin = inner + outer[col];
        const int* end = inner + outer[col + 1];
        const int* it = std::lower_bound(begin, end, dofs[i]);
        slots_[e * 64 + static_cast<std::size_t>(i) * 8 + j] =
            static_cast<int>(it - inner);
      }
    }
  }

  if (ndof > 0) solver_.analyzePattern(K_);
}

HomogenizeResult Homogenizer::run(const DensityField& field) {
  if (field.nx != nx_ || field.ny != ny_)
    throw std::invalid_argument("homogenizer: field resolution mismatch");
  for (double v : field.values) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("homogenizer: field values must lie in [0,1]");
  }

  const std::size_t nel = field.values.size();
  std::vector<double> scale(nel);
  for (std::size_t e = 0; e < nel; ++e)
    scale[e] = std::max(field.values[e], material_.void_eps);

  const int ndof = static_cast<int>(K_.rows());
  double* kval = K_.valuePtr();
  std::fill(kval, kval + K_.nonZeros(), 0.0);
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(ndof, 3);
  for (std::size_t e = 0; e < nel; ++e) {
    const double x = scale[e];
    const int* slot = slots_.data() + e * 64;
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const int s = slot[static_cast<std::size_t>(i) * 8 + j];
        if (s >= 0) kval[s] += x * ke0_(i, j);
      }
      const int r = edof_[e][i];
      if (r >= 0) F.row(r) += x * fe0_.row(i);
    }
  }

  Eigen::MatrixXd chi = Eigen::MatrixXd::Zero(ndof, 3);
  if (ndof > 0) {
    solver_.factorize(K_);
    if (solver_.info() != Eigen::Success)
      throw std::runtime_error("homogenizer: factorization of the periodic cell system failed");
    chi = solver_.solve(F);
  }

  // Mutual energies of (chi0 - chi) pairs, summed over elements. The macro
  // element has unit area, so no volume division is needed.
  ElasticityMatrix C = ElasticityMatrix::Zero();
  Eigen::Matrix<double, 8, 3> g;
  for (std::size_t e = 0; e < nel; ++e) {
    const auto& dofs = edof_[e];
    for (int i = 0; i < 8; ++i) {
      const int r = dofs[i];
      for (int c = 0; c < 3; ++c)
        g(i, c) = chi0_(i, c) - (r >= 0 ? chi(r, c) : 0.0);
    }
    const Eigen::Matrix<double, 8, 3> keg = ke0_ * g;
    C += scale[e] * (g.transpose() * keg);
  }

  return {C, volume_fraction(field)};
}

HomogenizeResult homogenize(const DensityField& field, const BaseMaterial& material) {
  Homogenizer h(field.nx, field.ny, material);
  return h.run(field);
}

}  // namespace voroto
