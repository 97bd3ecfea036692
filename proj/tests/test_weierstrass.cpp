#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "minksurf/examples.hpp"
#include "minksurf/sampling.hpp"

using namespace minksurf;
using std::numbers::pi;

namespace {

double max_abs_diff(const RVec4& a, const RVec4& b) { return max_abs_component(a - b); }

SurfaceData simple_data(const char* a, const char* mu, DomainRect dom, Complex w0) {
  return SurfaceData::create(expr::HolomorphicFn::from_source(a),
                             expr::HolomorphicFn::from_source(mu), dom, w0);
}

}  // namespace

TEST_CASE("w_vector closed forms") {
  const CVec4 origin = w_vector(0.0, 0.0);
  CHECK(origin[0] == Complex(0, 0));
  CHECK(origin[1] == Complex(1, 0));
  CHECK(origin[2] == Complex(0, 1));
  CHECK(origin[3] == Complex(0, 0));

  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    const Complex a(box(rng), box(rng));
    const CVec4 same = w_vector(a, a);
    CHECK(std::abs(same[0] - 2.0 * a) < 1e-15);
    CHECK(std::abs(same[1] - (1.0 + a * a)) < 1e-15);
    CHECK(std::abs(same[2] - Complex(0, 1) * (1.0 - a * a)) < 1e-15);
    CHECK(same[3] == Complex(0, 0));

    const CVec4 opp = w_vector(a, -a);
    CHECK(opp[0] == Complex(0, 0));
    CHECK(std::abs(opp[1] - (1.0 - a * a)) < 1e-15);
    CHECK(std::abs(opp[2] - Complex(0, 1) * (1.0 + a * a)) < 1e-15);
    CHECK(std::abs(opp[3] - 2.0 * a) < 1e-15);

    // Monge isotropy for arbitrary (a, b)
    const Complex b(box(rng), box(rng));
    CHECK(std::abs(clorentz_dot(w_vector(a, b), w_vector(a, b))) < 1e-14);
  }
}

TEST_CASE("integrand values") {
  const ExampleScenario ex36 = make_example(ExampleId::Ex36);
  const ExampleScenario ex37 = make_example(ExampleId::Ex37);

  // mu = 1, a = sin 0 = 0 at the origin: plain W(0, 0).
  const CVec4 at0 = integrand(ex36.data, 0.0, Complex(0, 0));
  CHECK(std::abs(at0[0]) < 1e-15);
  CHECK(std::abs(at0[1] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(at0[2] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(at0[3]) < 1e-15);

  // theta = pi at w = 0 for a = i e^w, mu = e^-w.
  const CVec4 at_pi = integrand(ex37.data, pi, Complex(0, 0));
  CHECK(std::abs(at_pi[0] - Complex(0, 0)) < 1e-15);
  CHECK(std::abs(at_pi[1] - Complex(2, 0)) < 1e-15);
  CHECK(std::abs(at_pi[2] - Complex(0, 0)) < 1e-15);
  CHECK(std::abs(at_pi[3] - Complex(0, 2)) < 1e-15);

  SUBCASE("2 pi periodicity in theta") {
    std::mt19937 rng(5u);
    std::uniform_real_distribution<double> th(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> uu(0.5, 1.5), vv(-0.5, 0.5);
    for (int k = 0; k < 20; ++k) {
      const double theta = th(rng);
      const Complex w(uu(rng), vv(rng));
      const CVec4 lo = integrand(ex37.data, theta, w);
      const CVec4 hi = integrand(ex37.data, theta + 2.0 * pi, w);
      CHECK(max_abs_component(lo - hi) < 1e-13);
    }
  }
}

TEST_CASE("monge_residual") {
  // null direction, lambda^2 = 0
  const MongeResidual null_r = monge_residual(CVec4{{1, 0, 0, 1}}, 0.0);
  CHECK(null_r.isotropy == Complex(0, 0));
  CHECK(null_r.conformal == 0.0);

  // W(0,0) with its conformal factor 4
  const MongeResidual w0_r = monge_residual(w_vector(0.0, 0.0), 4.0);
  CHECK(w0_r.isotropy == Complex(0, 0));
  CHECK(w0_r.conformal == 0.0);

  SUBCASE("vanishes for family integrands with the closed-form factor") {
    const ExampleScenario ex38 = make_example(ExampleId::Ex38);
    std::mt19937 rng(6u);
    std::uniform_real_distribution<double> th(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> uu(0.3, 1.2), vv(-0.5, 0.5);
    for (int k = 0; k < 30; ++k) {
      const double theta = th(rng);
      const Complex w(uu(rng), vv(rng));
      const CVec4 fw = integrand(ex38.data, theta, w);
      const MongeResidual r = monge_residual(fw, lambda2(ex38.data, theta, w));
      CHECK(std::abs(r.isotropy) < 1e-12);
      CHECK(std::abs(r.conformal) < 1e-12 * (1.0 + lambda2(ex38.data, theta, w)));
    }
  }
}

TEST_CASE("integrate_point basics") {
  const RVec4 p{{1, 2, 3, 4}};
  const RVec4 q{{-1, 0, 0, 5}};
  auto sd = SurfaceData::create(expr::HolomorphicFn::from_source("sin(w)"),
                                expr::HolomorphicFn::from_source("1"),
                                DomainRect{0.2, 1.2, -0.3, 0.3}, Complex(0.7, 0.1), p, q);
  const ThetaSample at_base = integrate_point(sd, 0.37, sd.base_point());
  CHECK(at_base.point == p);
  const ThetaSample conj_base = integrate_conjugate(sd, 0.37, sd.base_point());
  CHECK(conj_base.point == q);
}

TEST_CASE("closed-form reproduction by quadrature") {
  SUBCASE("a = sin w family, theta = 0") {
    const ExampleScenario ex = make_example(ExampleId::Ex36);
    const Complex wref = ex.data.base_point();
    for (const Complex w : {Complex(0.5, 0.3), Complex(1.1, -0.25), Complex(0.21, 0.05)}) {
      const RVec4 numeric =
          integrate_point(ex.data, 0.0, w).point - integrate_point(ex.data, 0.0, wref).point;
      const RVec4 closed = ex.closed_form_theta0(w) - ex.closed_form_theta0(wref);
      CHECK(max_abs_diff(numeric, closed) < 1e-8);
    }
  }
  SUBCASE("a = i e^w family, arbitrary theta") {
    const ExampleScenario ex = make_example(ExampleId::Ex37);
    const Complex wref = ex.data.base_point();
    for (const double theta : {0.0, pi / 3.0, 2.1, pi}) {
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          const Complex w(0.5 + 0.25 * i, -0.5 + 0.25 * j);
          const RVec4 numeric = integrate_point(ex.data, theta, w).point -
                                integrate_point(ex.data, theta, wref).point;
          const RVec4 closed = ex.closed_form(theta, w) - ex.closed_form(theta, wref);
          CHECK(max_abs_diff(numeric, closed) < 1e-8);
        }
    }
  }
}

TEST_CASE("conjugate family") {
  const ExampleScenario ex = make_example(ExampleId::Ex38);

  SUBCASE("Im z = Re(-i z): H equals F of the data with mu scaled by -i") {
    const SurfaceData rotated = ex.data.with_mu_scaled(Complex(0, -1));
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> th(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> uu(0.3, 1.2), vv(-0.5, 0.5);
    for (int k = 0; k < 10; ++k) {
      const double theta = th(rng);
      const Complex w(uu(rng), vv(rng));
      const RVec4 h = integrate_conjugate(ex.data, theta, w).point;
      const RVec4 f = integrate_point(rotated, theta, w).point;
      CHECK(max_abs_diff(h, f) < 1e-9);
    }
  }

  SUBCASE("F and H components are harmonic conjugates (Cauchy-Riemann)") {
    const double h = 1e-4;
    for (const Complex w : {Complex(0.7, 0.1), Complex(0.5, -0.2), Complex(1.0, 0.3)}) {
      const auto f = [&](Complex z) { return integrate_point(ex.data, 0.0, z).point; };
      const auto g = [&](Complex z) { return integrate_conjugate(ex.data, 0.0, z).point; };
      const RVec4 fu = (f(w + h) - f(w - h)) / (2.0 * h);
      const RVec4 fv = (f(w + Complex(0, h)) - f(w - Complex(0, h))) / (2.0 * h);
      const RVec4 gu = (g(w + h) - g(w - h)) / (2.0 * h);
      const RVec4 gv = (g(w + Complex(0, h)) - g(w - Complex(0, h))) / (2.0 * h);
      CHECK(max_abs_diff(fu, gv) < 1e-5);
      CHECK(max_abs_diff(fv, -gu) < 1e-5);
    }
  }
}

TEST_CASE("sample_grid") {
  const ExampleScenario ex = make_example(ExampleId::Ex37);

  SUBCASE("2x2 grid hits the corners") {
    const SampledSurface s = sample_grid(ex.data, 0.0, 2, 2);
    REQUIRE(s.nodes.size() == 4);
    const DomainRect& d = ex.data.domain();
    CHECK(s.at(0, 0).w == Complex(d.u_min, d.v_min));
    CHECK(s.at(1, 0).w == Complex(d.u_max, d.v_min));
    CHECK(s.at(0, 1).w == Complex(d.u_min, d.v_max));
    CHECK(s.at(1, 1).w == Complex(d.u_max, d.v_max));
  }

  SUBCASE("17x17 grid matches the closed form everywhere") {
    for (const double theta : {0.0, pi}) {
      const SampledSurface s = sample_grid(ex.data, theta, 17, 17);
      const RVec4 ref_closed = ex.closed_form(theta, s.at(0, 0).w);
      for (const SurfaceNode& node : s.nodes) {
        const RVec4 numeric = node.point - s.at(0, 0).point;
        const RVec4 closed = ex.closed_form(theta, node.w) - ref_closed;
        CHECK(max_abs_diff(numeric, closed) < 1e-8);
        CHECK(node.lambda2 > 0.0);
      }
    }
  }

  SUBCASE("telescoped rows agree with direct segment integration") {
    const SampledSurface s = sample_grid(ex.data, pi / 3.0, 9, 9);
    for (const auto [i, j] : {std::pair{4, 4}, {8, 2}, {1, 7}}) {
      const RVec4 direct = integrate_point(ex.data, pi / 3.0, s.at(i, j).w).point;
      CHECK(max_abs_diff(direct, s.at(i, j).point) < 1e-9);
    }
  }

  SUBCASE("worker count does not change results") {
    const SampledSurface s1 = sample_grid(ex.data, 1.0, 9, 9, 1);
    const SampledSurface s4 = sample_grid(ex.data, 1.0, 9, 9, 4);
    for (std::size_t k = 0; k < s1.nodes.size(); ++k)
      CHECK(s1.nodes[k].point == s4.nodes[k].point);
  }
}

TEST_CASE("path independence of the contour integral") {
  for (const ExampleId id : {ExampleId::Ex36, ExampleId::Ex37, ExampleId::Ex38}) {
    const ExampleScenario ex = make_example(id);
    const DomainRect& d = ex.data.domain();
    std::mt19937 rng(31u + static_cast<unsigned>(id));
    std::uniform_real_distribution<double> th(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> uu(d.u_min, d.u_max), vv(d.v_min, d.v_max);
    for (int k = 0; k < 20; ++k) {
      const double theta = th(rng);
      const Complex w(uu(rng), vv(rng)), mid(uu(rng), vv(rng));
      const CVec4 straight = integrate_segment(ex.data, theta, ex.data.base_point(), w);
      const CVec4 detour = integrate_segment(ex.data, theta, ex.data.base_point(), mid) +
                           integrate_segment(ex.data, theta, mid, w);
      CHECK(max_abs_component(straight - detour) < 1e-8);
    }
  }
}

TEST_CASE("distinguished slices stay in their hyperplanes") {
  const ExampleScenario ex = make_example(ExampleId::Ex36);
  const SampledSurface s0 = sample_grid(ex.data, 0.0, 9, 9);
  // theta = 0: the last integrand component is exactly zero, so the sampled
  // component equals the offset bitwise.
  for (const SurfaceNode& node : s0.nodes) CHECK(node.point[3] == ex.data.offset_p()[3]);
  const SampledSurface spi = sample_grid(ex.data, pi, 9, 9);
  for (const SurfaceNode& node : spi.nodes)
    CHECK(std::abs(node.point[0] - ex.data.offset_p()[0]) < 1e-12);
}

TEST_CASE("theta periodicity of the integral") {
  const ExampleScenario ex = make_example(ExampleId::Ex38);
  for (const Complex w : {Complex(0.5, 0.2), Complex(1.0, -0.4)}) {
    const RVec4 lo = integrate_point(ex.data, 1.1, w).point;
    const RVec4 hi = integrate_point(ex.data, 1.1 + 2.0 * pi, w).point;
    CHECK(max_abs_diff(lo, hi) < 1e-10);
  }
}

TEST_CASE("surface data validation") {
  SUBCASE("base point must lie inside the rectangle") {
    CHECK_THROWS_AS(simple_data("sin(w)", "1", DomainRect{0.2, 1.2, -0.3, 0.3}, Complex(2, 0)),
                    RegularityError);
  }
  SUBCASE("degenerate rectangle") {
    CHECK_THROWS_AS(simple_data("sin(w)", "1", DomainRect{1.2, 0.2, -0.3, 0.3}, Complex(0.7, 0)),
                    RegularityError);
  }
  SUBCASE("|a| = 1 crossing is caught") {
    // sin^2 u + sinh^2 v = 1 crosses any rectangle containing u = pi/2, v = 0
    CHECK_THROWS_AS(simple_data("sin(w)", "1", DomainRect{1.0, 2.0, -1.0, 1.0}, Complex(1.2, 0)),
                    RegularityError);
  }
  SUBCASE("vanishing mu is caught") {
    CHECK_THROWS_AS(simple_data("0.3", "w", DomainRect{-0.5, 0.5, -0.5, 0.5}, Complex(0.2, 0)),
                    RegularityError);
  }
  SUBCASE("valid data constructs") {
    CHECK_NOTHROW(simple_data("sin(w)", "1", DomainRect{0.2, 1.2, -0.3, 0.3}, Complex(0.7, 0)));
  }
}

TEST_CASE("quadrature subdivision limit") {
  // an oscillatory integrand with a starved subdivision budget
  auto sd = simple_data("0.05*sin(40*w)", "1", DomainRect{0.0, 1.0, -0.05, 0.05},
                        Complex(0.5, 0.0));
  QuadratureOptions starved;
  starved.abs_tol = 1e-14;
  starved.max_subdivisions = 1;
  CHECK_THROWS_AS((void)integrate_segment(sd, 0.0, Complex(0.0, 0.0), Complex(1.0, 0.0), starved),
                  QuadratureNoConvergence);
  // the default budget handles it
  CHECK_NOTHROW((void)integrate_segment(sd, 0.0, Complex(0.0, 0.0), Complex(1.0, 0.0)));
}

TEST_CASE("eval singularity propagates out of the integrand") {
  // mu = 1/w is regular on the probe grid of this off-origin rectangle but
  // blows up at the origin itself; integrating across it must surface the
  // singularity.
  auto sd = simple_data("0.3", "1/(w-0.5)+1", DomainRect{0.0, 1.0, -0.2, 0.2}, Complex(0.1, 0.1));
  CHECK_THROWS_AS((void)integrand(sd, 0.0, Complex(0.5, 0.0)), EvalSingularity);
}
