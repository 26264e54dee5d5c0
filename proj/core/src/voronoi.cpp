#include "voroto/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace voroto {

Vec2 rotated_offset(Vec2 point, Site site, double theta) {
  const double rx = point.x - site.x;
  const double ry = point.y - site.y;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * rx - s * ry, s * rx + c * ry};
}

double anisotropic_distance(Vec2 point, Site site, const CellParams& params) {
  if (!(params.alpha > 0.0))
    throw std::domain_error("anisotropic_distance: alpha must be positive");
  const Vec2 d = rotated_offset(point, site, params.theta);
  return std::sqrt(params.alpha * d.x * d.x + d.y * d.y / params.alpha);
}

namespace {

// Distances from `point` to every site, reusing the caller's buffer.
void fill_distances(Vec2 point, const MicrostructureSpec& spec,
                    std::vector<double>& dist) {
  if (!(spec.params.alpha > 0.0))
    throw std::domain_error("anisotropic_distance: alpha must be positive");
  const double c = std::cos(spec.params.theta);
  const double s = std::sin(spec.params.theta);
  const double alpha = spec.params.alpha;
  dist.resize(spec.sites.size());
  for (std::size_t i = 0; i < spec.sites.size(); ++i) {
    const double rx = point.x - spec.sites[i].x;
    const double ry = point.y - spec.sites[i].y;
    const double dx = c * rx - s * ry;
    const double dy = s * rx + c * ry;
    dist[i] = std::sqrt(alpha * dx * dx + dy * dy / alpha);
  }
}

// Softmax of -k*dist, shifted by the minimum distance before exponentiation
// (shift-invariant, avoids underflow for large k).
void softmax_weights(const std::vector<double>& dist, double k,
                     std::vector<double>& w) {
  const double dmin = *std::min_element(dist.begin(), dist.end());
  w.resize(dist.size());
  double total = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    w[i] = std::exp(-k * (dist[i] - dmin));
    total += w[i];
  }
  for (double& wi : w) wi /= total;
}

double raw_density(const std::vector<double>& w, double beta) {
  double sum = 0.0;
  for (double wi : w) sum += std::pow(wi, beta);
  return 1.0 - sum;
}

}  // namespace

std::vector<double> site_weights(Vec2 point, const MicrostructureSpec& spec) {
  if (spec.sites.empty()) throw std::invalid_argument("spec has no sites");
  std::vector<double> dist, w;
  fill_distances(point, spec, dist);
  softmax_weights(dist, spec.sharpness_k, w);
  return w;
}

double site_density(Vec2 point, const MicrostructureSpec& spec, int s) {
  const auto w = site_weights(point, spec);
  if (s < 0 || static_cast<std::size_t>(s) >= w.size())
    throw std::out_of_range("site index out of range");
  return std::pow(w[static_cast<std::size_t>(s)], spec.params.beta);
}

double total_density(Vec2 point, const MicrostructureSpec& spec) {
  const auto w = site_weights(point, spec);
  return std::clamp(raw_density(w, spec.params.beta), 0.0, 1.0);
}

DensityGradient total_density_gradient(Vec2 point, const MicrostructureSpec& spec) {
  const std::size_t n = spec.sites.size();
  DensityGradient grad;
  grad.d_site_x.assign(n, 0.0);
  grad.d_site_y.assign(n, 0.0);

  std::vector<double> dist, w;
  fill_distances(point, spec, dist);
  softmax_weights(dist, spec.sharpness_k, w);

  const double beta = spec.params.beta;
  const double alpha = spec.params.alpha;
  const double k = spec.sharpness_k;
  const double raw = raw_density(w, beta);
  if (raw <= 0.0 || raw >= 1.0) return grad;  // clamp subgradient

  double pow_sum = 0.0;
  for (double wi : w) pow_sum += std::pow(wi, beta);

  const double c = std::cos(spec.params.theta);
  const double s = std::sin(spec.params.theta);
  for (std::size_t t = 0; t < n; ++t) {
    const double wt = w[t];
    // d(raw)/d(dist_t) through the softmax and the beta power.
    const double draw_dd = k * beta * (std::pow(wt, beta) - wt * pow_sum);
    if (wt > 0.0) grad.d_beta -= std::pow(wt, beta) * std::log(wt);

    const double rx = point.x - spec.sites[t].x;
    const double ry = point.y - spec.sites[t].y;
    const double dx = c * rx - s * ry;
    const double dy = s * rx + c * ry;
    const double d = dist[t];
    if (d == 0.0) continue;  // distance kink at the site itself
    const double dd_ddx = alpha * dx / d;
    const double dd_ddy = dy / (alpha * d);
    grad.d_site_x[t] = draw_dd * (dd_ddx * -c + dd_ddy * -s);
    grad.d_site_y[t] = draw_dd * (dd_ddx * s + dd_ddy * -c);
    grad.d_alpha += draw_dd * (dx * dx - dy * dy / (alpha * alpha)) / (2.0 * d);
    grad.d_theta += draw_dd * dx * dy * (1.0 / alpha - alpha) / d;
  }
  return grad;
}

DensityField rasterize(const MicrostructureSpec& spec, int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("rasterize: resolution must be >= 1");
  if (spec.sites.empty()) throw std::invalid_argument("spec has no sites");
  DensityField field;
  field.nx = nx;
  field.ny = ny;
  field.values.resize(static_cast<std::size_t>(nx) * ny);
  std::vector<double> dist, w;
  for (int iy = 0; iy < ny; ++iy) {
    const double py = (iy + 0.5) / ny;
    for (int ix = 0; ix < nx; ++ix) {
      const double px = (ix + 0.5) / nx;
      fill_distances({px, py}, spec, dist);
      softmax_weights(dist, spec.sharpness_k, w);
      field.at(ix, iy) = std::clamp(raw_density(w, spec.params.beta), 0.0, 1.0);
    }
  }
  return field;
}

}  // namespace voroto
