#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "minksurf/association.hpp"
#include "minksurf/examples.hpp"

using namespace minksurf;
using std::numbers::pi;

namespace {

SurfaceData simple_data(const char* a, const char* mu, DomainRect dom, Complex w0) {
  return SurfaceData::create(expr::HolomorphicFn::from_source(a),
                             expr::HolomorphicFn::from_source(mu), dom, w0);
}

// Patch of pitch h around a center, 2*half+1 nodes per side.
DomainRect patch_around(Complex center, double h, int half) {
  return DomainRect{center.real() - half * h, center.real() + half * h,
                    center.imag() - half * h, center.imag() + half * h};
}

SurfaceData on_patch(const SurfaceData& sd, const DomainRect& patch) {
  return SurfaceData::create(sd.a_fn(), sd.mu_fn(), patch,
                             Complex(0.5 * (patch.u_min + patch.u_max),
                                     0.5 * (patch.v_min + patch.v_max)));
}

double worst_residual(const PairReport& r) {
  return *std::max_element(r.max_residuals.begin(), r.max_residuals.end());
}

}  // namespace

TEST_CASE("pair_check accepts the family-generated pair") {
  const double h = 1e-3;
  const int half = 10, n = 2 * half + 1;
  for (const ExampleId id : {ExampleId::Ex36, ExampleId::Ex37, ExampleId::Ex38}) {
    const ExampleScenario ex = make_example(id);
    const SurfaceData patch = on_patch(ex.data, patch_around(ex.data.base_point(), h, half));
    const SampledSurface x = sample_grid(patch, 0.0, n, n);
    const SampledSurface y = sample_grid(patch, pi, n, n);
    const PairReport report = pair_check(x, y, h);
    INFO("example ", ex.id);
    CHECK(report.verdict);
    CHECK(worst_residual(report) < 1e-5);
  }
}

TEST_CASE("pair_check accepts the closed-form pair samples") {
  // Externally supplied samples: the two closed-form slices of the quotient
  // family, exact to roundoff.
  const ExampleScenario ex = make_example(ExampleId::Ex38);
  const double h = 1e-3;
  const DomainRect patch = patch_around(Complex(0.75, 0.0), h, 10);
  const SampledSurface x = SampledSurface::from_function(0.0, patch, 21, 21,
                                                         ex.closed_form_theta0);
  const SampledSurface y = SampledSurface::from_function(pi, patch, 21, 21, ex.closed_form_pi);
  const PairReport report = pair_check(x, y, h);
  CHECK(report.verdict);
  CHECK(worst_residual(report) < 1e-5);
}

TEST_CASE("pair_check rejects mismatched data") {
  const double h = 1e-3;
  const int half = 10, n = 2 * half + 1;
  const DomainRect patch = patch_around(Complex(0.75, 0.0), h, half);
  const ExampleScenario ex36 = make_example(ExampleId::Ex36);
  const ExampleScenario ex37 = make_example(ExampleId::Ex37);

  SUBCASE("cross pair: sin-family Lorentzian slice against exp-family Euclidean slice") {
    const SampledSurface x = sample_grid(on_patch(ex36.data, patch), 0.0, n, n);
    const SampledSurface y = sample_grid(on_patch(ex37.data, patch), pi, n, n);
    const PairReport report = pair_check(x, y, h);
    CHECK_FALSE(report.verdict);
    CHECK(worst_residual(report) > 0.1);  // O(1) mismatch
  }
  SUBCASE("a surface is not associated to itself") {
    const SampledSurface x = sample_grid(on_patch(ex36.data, patch), 0.0, n, n);
    const PairReport report = pair_check(x, x, h);
    CHECK_FALSE(report.verdict);
  }
}

TEST_CASE("pair_check on constant-a planes") {
  const double h = 1e-3;
  const SurfaceData planes = simple_data("0.4+0.2i", "1+0.5*w", patch_around({0, 0}, h, 10),
                                         Complex(0, 0));
  const SampledSurface x = sample_grid(planes, 0.0, 21, 21);
  const SampledSurface y = sample_grid(planes, pi, 21, 21);
  const PairReport report = pair_check(x, y, h);
  CHECK(report.verdict);
}

TEST_CASE("pair_check grid hygiene") {
  const double h = 1e-3;
  const ExampleScenario ex = make_example(ExampleId::Ex38);
  const SurfaceData patch = on_patch(ex.data, patch_around(ex.data.base_point(), h, 10));
  const SampledSurface x = sample_grid(patch, 0.0, 21, 21);
  SUBCASE("different node counts") {
    const SampledSurface y = sample_grid(patch, pi, 19, 19);
    CHECK_THROWS_AS((void)pair_check(x, y, h), GridMismatch);
  }
  SUBCASE("wrong spacing") {
    const SampledSurface y = sample_grid(patch, pi, 21, 21);
    CHECK_THROWS_AS((void)pair_check(x, y, 2.0 * h), GridMismatch);
  }
  SUBCASE("different rectangles") {
    const SurfaceData other = on_patch(ex.data, patch_around(Complex(0.8, 0.0), h, 10));
    const SampledSurface y = sample_grid(other, pi, 21, 21);
    CHECK_THROWS_AS((void)pair_check(x, y, h), GridMismatch);
  }
}

TEST_CASE("pair residual truncation scales as O(h^2)") {
  const ExampleScenario ex = make_example(ExampleId::Ex38);
  const auto residual_at = [&](double h) {
    const SurfaceData patch = on_patch(ex.data, patch_around(ex.data.base_point(), h, 10));
    const SampledSurface x = sample_grid(patch, 0.0, 21, 21);
    const SampledSurface y = sample_grid(patch, pi, 21, 21);
    return worst_residual(pair_check(x, y, h));
  };
  const double coarse = residual_at(1e-3);
  const double fine = residual_at(5e-4);
  const double ratio = coarse / fine;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("graph Jacobian") {
  const ExampleScenario ex36 = make_example(ExampleId::Ex36);
  const ExampleScenario ex37 = make_example(ExampleId::Ex37);
  const ExampleScenario ex38 = make_example(ExampleId::Ex38);

  SUBCASE("vanishes exactly where a is real") {
    // sin w is real on the real axis
    CHECK(graph_jacobian(ex36.data, Complex(0.7, 0.0)) == Complex(0, 0));
  }
  SUBCASE("purely imaginary by antisymmetry") {
    std::mt19937 rng(23u);
    std::uniform_real_distribution<double> uu(0.3, 1.2), vv(-0.5, 0.5);
    for (int k = 0; k < 30; ++k) {
      const Complex j = graph_jacobian(ex38.data, Complex(uu(rng), vv(rng)));
      CHECK(j.real() == 0.0);
    }
  }
  SUBCASE("factored identity 4i |mu|^2 (1 - |a|^2) Im a") {
    std::mt19937 rng(29u);
    for (const ExampleScenario* ex : {&ex36, &ex37, &ex38}) {
      const DomainRect& d = ex->data.domain();
      std::uniform_real_distribution<double> uu(d.u_min, d.u_max), vv(d.v_min, d.v_max);
      for (int k = 0; k < 100; ++k) {
        const Complex w(uu(rng), vv(rng));
        const Complex lhs = graph_jacobian(ex->data, w);
        const Complex a = ex->data.a(w);
        const Complex rhs = Complex(0, 4) * std::norm(ex->data.mu(w)) *
                            (1.0 - std::norm(a)) * a.imag();
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("graph admissibility") {
  SUBCASE("sin family crossing the real axis is obstructed") {
    auto sd = simple_data("sin(w)", "1", DomainRect{0.2, 1.2, -0.3, 0.3}, Complex(0.7, 0.0));
    const GraphReport report = graph_admissibility(sd, 17, 17);
    CHECK_FALSE(report.admissible);
    CHECK(report.min_abs_im_a < 1e-12);
    CHECK_FALSE(report.near_zero_nodes.empty());
    // Im(sin w) = cos u sinh v = 0 exactly on v = 0
    CHECK(report.argmin_w.imag() == 0.0);
  }
  SUBCASE("exp family on a thin strip keeps Im a = e^u cos v positive") {
    auto sd = simple_data("i*exp(w)", "exp(-w)", DomainRect{0.05, 1.0, -0.1, 0.1},
                          Complex(0.5, 0.0));
    const GraphReport report = graph_admissibility(sd, 17, 17);
    CHECK(report.admissible);
    CHECK(report.min_abs_im_a > 1.0);  // e^0.05 cos(0.1) > 1
    CHECK(report.near_zero_nodes.empty());
  }
  SUBCASE("constant real a is obstructed everywhere") {
    auto sd = simple_data("0.5", "1", DomainRect{-1, 1, -1, 1}, Complex(0, 0));
    const GraphReport report = graph_admissibility(sd, 9, 9);
    CHECK_FALSE(report.admissible);
    CHECK(report.near_zero_nodes.size() == 81);
  }
}

TEST_CASE("planar set classification") {
  SUBCASE("sin family: discrete chain along the real axis") {
    // the zeros of cos w sit on |sin w| = 1, so scan the bare function
    const auto a = expr::HolomorphicFn::from_source("sin(w)");
    CHECK(planar_discreteness_scan(a, DomainRect{0.3, 5.0, -0.25, 0.25}, 65, 17) ==
          PlanarSetKind::Discrete);
  }
  SUBCASE("constant a: everywhere planar") {
    auto sd = simple_data("0.5", "1", DomainRect{-1, 1, -1, 1}, Complex(0, 0));
    CHECK(planar_discreteness_scan(sd, 17, 17) == PlanarSetKind::Everywhere);
  }
  SUBCASE("quotient family: empty") {
    const ExampleScenario ex = make_example(ExampleId::Ex38);
    CHECK(planar_discreteness_scan(ex.data, 17, 17) == PlanarSetKind::Empty);
  }
}
