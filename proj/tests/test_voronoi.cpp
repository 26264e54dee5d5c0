#include "voroto/voronoi.hpp"
#include "voroto/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace voroto;

namespace {

constexpr double kPi = 3.14159265358979323846;

MicrostructureSpec two_site_spec(double beta, double k = 60.0) {
  MicrostructureSpec spec;
  spec.sites = {{0.25, 0.5}, {0.75, 0.5}};
  spec.params = {beta, 1.0, 0.0};
  spec.sharpness_k = k;
  return spec;
}

// Random but well-separated spec for property tests.
MicrostructureSpec random_spec(Rng& rng, double beta, double alpha, double theta) {
  MicrostructureSpec spec;
  for (int ex = -1; ex <= 1; ++ex) {
    for (int ey = -1; ey <= 1; ++ey) {
      for (int s = 0; s < 4; ++s) {
        const double bx = (s % 2 == 0) ? 0.25 : 0.75;
        const double by = (s / 2 == 0) ? 0.25 : 0.75;
        spec.sites.push_back({ex + bx + rng.uniform(-0.2, 0.2),
                              ey + by + rng.uniform(-0.2, 0.2)});
      }
    }
  }
  spec.params = {beta, alpha, theta};
  return spec;
}

}  // namespace

TEST_CASE("rotated_offset basics") {
  auto o = rotated_offset({1, 0}, {0, 0}, 0.0);
  CHECK(o.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(o.y == doctest::Approx(0.0).epsilon(1e-15));

  o = rotated_offset({1, 0}, {0, 0}, kPi / 2);
  CHECK(o.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(o.y == doctest::Approx(1.0).epsilon(1e-15));

  o = rotated_offset({0.5, 0.5}, {0.5, 0.5}, 1.234);
  CHECK(o.x == 0.0);
  CHECK(o.y == 0.0);
}

TEST_CASE("anisotropic_distance examples") {
  CHECK(anisotropic_distance({1, 0}, {0, 0}, {1.0, 1.0, 0.0}) == doctest::Approx(1.0));
  CHECK(anisotropic_distance({1, 0}, {0, 0}, {1.0, 4.0, 0.0}) == doctest::Approx(2.0));
  CHECK(anisotropic_distance({1, 0}, {0, 0}, {1.0, 4.0, kPi / 2}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(anisotropic_distance({1, 0}, {0, 0}, {1.0, 0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(anisotropic_distance({1, 0}, {0, 0}, {1.0, -2.0, 0.0}), std::domain_error);
}

TEST_CASE("anisotropic_distance reduces to Euclidean for alpha=1") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Vec2 p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Site s{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double theta = rng.uniform(0, kPi);
    const double d = anisotropic_distance(p, s, {1.0, 1.0, theta});
    const double euclid = std::hypot(p.x - s.x, p.y - s.y);
    CHECK(d == doctest::Approx(euclid).epsilon(1e-14));
  }
}

TEST_CASE("anisotropic_distance invariant under joint rotation") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Vec2 p{rng.uniform(-1, 2), rng.uniform(-1, 2)};
    const Site s{rng.uniform(-1, 2), rng.uniform(-1, 2)};
    const double alpha = rng.uniform(1.0, 3.5);
    const double theta = rng.uniform(0, kPi);
    const double phi = rng.uniform(-kPi, kPi);
    const double c = std::cos(phi), sn = std::sin(phi);
    const Vec2 pr{c * p.x - sn * p.y, sn * p.x + c * p.y};
    const Site sr{c * s.x - sn * s.y, sn * s.x + c * s.y};
    // Rotating the scene by phi means the cell frame angle theta decreases
    // by phi relative to the new coordinates.
    const double d0 = anisotropic_distance(p, s, {1.0, alpha, theta});
    const double d1 = anisotropic_distance(pr, sr, {1.0, alpha, theta - phi});
    CHECK(std::abs(d0 - d1) < 1e-12);
  }
}

TEST_CASE("site_density examples") {
  MicrostructureSpec one;
  one.sites = {{0.4, 0.6}};
  one.params = {2.5, 1.0, 0.0};
  CHECK(site_density({0.9, 0.1}, one, 0) == doctest::Approx(1.0));

  auto two = two_site_spec(1.0);
  CHECK(site_density({0.5, 0.5}, two, 0) == doctest::Approx(0.5));
  CHECK(site_density({0.5, 0.5}, two, 1) == doctest::Approx(0.5));

  two.params.beta = 2.0;
  CHECK(site_density({0.5, 0.5}, two, 0) == doctest::Approx(0.25));
}

TEST_CASE("softmax base weights sum to one") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    auto spec = random_spec(rng, rng.uniform(0.3, 3.0), rng.uniform(1.0, 3.5),
                            rng.uniform(0.0, kPi));
    const Vec2 p{rng.uniform(0, 1), rng.uniform(0, 1)};
    const auto w = site_weights(p, spec);
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("total_density examples") {
  auto two = two_site_spec(2.0);
  CHECK(total_density({0.5, 0.5}, two) == doctest::Approx(0.5));

  two.params.beta = 1.0;
  CHECK(total_density({0.5, 0.5}, two) == doctest::Approx(0.0));

  two.params.beta = 0.3;
  // Raw value 1 - 2*0.5^0.3 is negative; the clamp takes over.
  const double raw = 1.0 - 2.0 * std::pow(0.5, 0.3);
  CHECK(raw == doctest::Approx(-0.6245).epsilon(1e-3));
  CHECK(total_density({0.5, 0.5}, two) == 0.0);
}

TEST_CASE("larger beta gives denser walls pointwise") {
  Rng rng(14);
  auto lo = random_spec(rng, 0.7, 2.0, 0.3);
  auto hi = lo;
  hi.params.beta = 2.1;
  for (int i = 0; i < 100; ++i) {
    const Vec2 p{rng.uniform(0, 1), rng.uniform(0, 1)};
    CHECK(total_density(p, hi) >= total_density(p, lo) - 1e-14);
  }
}

TEST_CASE("rasterize degenerate single-site spec is all void") {
  MicrostructureSpec one;
  one.sites = {{0.5, 0.5}};
  one.params = {1.7, 1.0, 0.0};
  const auto field = rasterize(one, 2, 2);
  REQUIRE(field.values.size() == 4);
  for (double v : field.values) CHECK(v == 0.0);
}

TEST_CASE("rasterize shape and range contract") {
  Rng rng(15);
  auto spec = random_spec(rng, 0.5, 2.5, 1.0);
  const auto field = rasterize(spec, 17, 9);
  CHECK(field.nx == 17);
  CHECK(field.ny == 9);
  REQUIRE(field.values.size() == 17u * 9u);
  for (double v : field.values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK_THROWS_AS(rasterize(spec, 0, 4), std::invalid_argument);
}

TEST_CASE("rasterize invariant under site permutation") {
  Rng rng(16);
  auto spec = random_spec(rng, 1.2, 1.8, 0.7);
  auto shuffled = spec;
  for (std::size_t i = shuffled.sites.size(); i > 1; --i)
    std::swap(shuffled.sites[i - 1], shuffled.sites[rng.next_below(i)]);
  const auto a = rasterize(spec, 24, 24);
  const auto b = rasterize(shuffled, 24, 24);
  for (std::size_t i = 0; i < a.values.size(); ++i)
    CHECK(std::abs(a.values[i] - b.values[i]) < 1e-12);
}

TEST_CASE("density gradient matches central differences") {
  Rng rng(17);
  int checked = 0;
  while (checked < 25) {
    auto spec = random_spec(rng, rng.uniform(0.5, 2.5), rng.uniform(1.1, 3.0),
                            rng.uniform(0.1, kPi - 0.1));
    const Vec2 p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95)};
    const double rho = total_density(p, spec);
    if (rho < 0.05 || rho > 0.95) continue;  // stay away from the clamp
    ++checked;
    const auto grad = total_density_gradient(p, spec);
    const double h = 1e-6;

    const auto check_pair = [&](double analytic, double plus, double minus) {
      const double fd = (plus - minus) / (2 * h);
      const double scale = std::max({std::abs(fd), std::abs(analytic), 1e-3});
      CHECK(std::abs(analytic - fd) / scale < 1e-4);
    };

    for (std::size_t s = 0; s < spec.sites.size(); s += 7) {
      auto sp = spec, sm = spec;
      sp.sites[s].x += h;
      sm.sites[s].x -= h;
      check_pair(grad.d_site_x[s], total_density(p, sp), total_density(p, sm));
      sp = spec;
      sm = spec;
      sp.sites[s].y += h;
      sm.sites[s].y -= h;
      check_pair(grad.d_site_y[s], total_density(p, sp), total_density(p, sm));
    }
    auto bp = spec, bm = spec;
    bp.params.beta += h;
    bm.params.beta -= h;
    check_pair(grad.d_beta, total_density(p, bp), total_density(p, bm));
    auto ap = spec, am = spec;
    ap.params.alpha += h;
    am.params.alpha -= h;
    check_pair(grad.d_alpha, total_density(p, ap), total_density(p, am));
    auto tp = spec, tm = spec;
    tp.params.theta += h;
    tm.params.theta -= h;
    check_pair(grad.d_theta, total_density(p, tp), total_density(p, tm));
  }
}

TEST_CASE("gradient is zero in clamped regions") {
  auto two = two_site_spec(0.3);  // raw density negative at the midpoint
  const auto grad = total_density_gradient({0.5, 0.5}, two);
  CHECK(grad.d_beta == 0.0);
  CHECK(grad.d_alpha == 0.0);
  for (double g : grad.d_site_x) CHECK(g == 0.0);
}
