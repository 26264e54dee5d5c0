#pragma once

#include <cstddef>
#include <vector>

namespace voroto {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Voronoi cell seed. Coordinates are in element-lengths, relative to the
/// lower-left corner of the center element of a 3x3 neighborhood: center
/// sites lie in [0,1]^2, neighbor sites in [-1,2]^2.
struct Site {
  double x = 0.0;
  double y = 0.0;
};

/// Shape parameters shared by every cell of one microstructure: wall
/// thickness exponent, in-plane anisotropy ratio, and orientation.
struct CellParams {
  double beta = 1.0;    // > 0
  double alpha = 1.0;   // >= 1 in the sampling ranges; > 0 required
  double theta = 0.0;   // radians
};

/// One microstructure: the sites of a 3x3 element neighborhood plus the
/// center element's cell parameters. The canonical layout is 9 elements
/// (ordered bottom to top, then left to right) with 4 sites each, but the
/// density evaluator accepts any site count (degenerate specs are useful in
/// tests).
struct MicrostructureSpec {
  std::vector<Site> sites;
  CellParams params;
  double sharpness_k = 60.0;  // softmax sharpness per element-length
};

inline constexpr int kSitesPerElement = 4;
inline constexpr int kNeighborhoodElements = 9;
inline constexpr int kNeighborhoodSites = kSitesPerElement * kNeighborhoodElements;

/// Scalar density samples on a regular grid over the center element [0,1]^2,
/// evaluated at cell centroids. Row-major with x fastest: values[iy*nx+ix].
struct DensityField {
  int nx = 0;
  int ny = 0;
  std::vector<double> values;

  double& at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * nx + ix]; }
  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
};

/// Offset of `point` from `site` in the frame rotated by theta:
/// (dx, dy) = R(theta) (point - site), R the standard 2D rotation.
Vec2 rotated_offset(Vec2 point, Site site, double theta);

/// Anisotropic oriented distance sqrt(alpha*dx^2 + dy^2/alpha) in the rotated
/// frame. Equals the Euclidean distance for alpha = 1. Throws
/// std::domain_error for alpha <= 0.
double anisotropic_distance(Vec2 point, Site site, const CellParams& params);

/// Softmax base weights exp(-k d_s) / sum_t exp(-k d_t) over all sites of the
/// spec; they sum to 1 exactly. Stabilized by shifting distances by the
/// minimum before exponentiation.
std::vector<double> site_weights(Vec2 point, const MicrostructureSpec& spec);

/// Per-site density (softmax weight)^beta, in (0, 1]. `s` is a 0-based site
/// index.
double site_density(Vec2 point, const MicrostructureSpec& spec, int s);

/// Total density 1 - sum_s site_density, clamped to [0,1]. The raw value can
/// leave [0,1] for beta < 1; density must stay physical for homogenization.
double total_density(Vec2 point, const MicrostructureSpec& spec);

/// Derivatives of total_density at a point with respect to every site
/// coordinate and the three cell parameters. Zero in the clamped regions
/// (clamp subgradient).
struct DensityGradient {
  std::vector<double> d_site_x;
  std::vector<double> d_site_y;
  double d_beta = 0.0;
  double d_alpha = 0.0;
  double d_theta = 0.0;
};
DensityGradient total_density_gradient(Vec2 point, const MicrostructureSpec& spec);

/// Samples total_density at the centroids of an nx-by-ny grid over the
/// center element [0,1]^2.
DensityField rasterize(const MicrostructureSpec& spec, int nx, int ny);

}  // namespace voroto
