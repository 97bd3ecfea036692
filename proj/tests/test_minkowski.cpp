#include <doctest.h>

#include <random>

#include "minksurf/minkowski.hpp"

using namespace minksurf;

namespace {

std::mt19937 rng(170355u);

RVec4 random_rvec() {
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  return RVec4{{box(rng), box(rng), box(rng), box(rng)}};
}

CVec4 random_cvec() {
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  return CVec4{{Complex(box(rng), box(rng)), Complex(box(rng), box(rng)),
                Complex(box(rng), box(rng)), Complex(box(rng), box(rng))}};
}

}  // namespace

TEST_CASE("signature (-,+,+,+)") {
  const RVec4 e0{{1, 0, 0, 0}}, e3{{0, 0, 0, 1}};
  CHECK(lorentz_dot(e0, e0) == -1.0);
  CHECK(lorentz_dot(e3, e3) == 1.0);
  CHECK(lorentz_dot(RVec4{{1, 1, 0, 0}}, RVec4{{1, -1, 0, 0}}) == -2.0);
}

TEST_CASE("complex bilinear extension") {
  // (i e0).(i e0) = i*i*(-1) = +1: bilinear, not Hermitian.
  const CVec4 ie0{{Complex(0, 1), 0, 0, 0}};
  CHECK(clorentz_dot(ie0, ie0) == Complex(1, 0));

  SUBCASE("restriction to real vectors equals lorentz_dot exactly") {
    for (int k = 0; k < 50; ++k) {
      const RVec4 u = random_rvec(), v = random_rvec();
      const Complex c = clorentz_dot(to_complex(u), to_complex(v));
      CHECK(c.real() == lorentz_dot(u, v));
      CHECK(c.imag() == 0.0);
    }
  }

  SUBCASE("bilinearity in the first slot") {
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
      const CVec4 u = random_cvec(), v = random_cvec(), x = random_cvec();
      const Complex alpha(box(rng), box(rng));
      const Complex lhs = clorentz_dot(alpha * u + v, x);
      const Complex rhs = alpha * clorentz_dot(u, x) + clorentz_dot(v, x);
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
  }
}

TEST_CASE("causal character classification") {
  CHECK(causal_character(RVec4{{1, 0, 0, 0}}) == CausalCharacter::Timelike);
  CHECK(causal_character(RVec4{{0, 1, 0, 0}}) == CausalCharacter::Spacelike);
  CHECK(causal_character(RVec4{{1, 1, 0, 0}}) == CausalCharacter::Lightlike);
  CHECK_THROWS_AS((void)causal_character(RVec4{}), ZeroVector);

  // tolerance is overridable per call
  const RVec4 nearly{{1.0, 1.0 + 1e-8, 0, 0}};
  CHECK(causal_character(nearly) == CausalCharacter::Spacelike);
  CHECK(causal_character(nearly, 1e-6) == CausalCharacter::Lightlike);
}

TEST_CASE("vector arithmetic") {
  const RVec4 a{{1, 2, 3, 4}}, b{{-1, 0, 1, 0}};
  CHECK(a + b == RVec4{{0, 2, 4, 4}});
  CHECK(a - b == RVec4{{2, 2, 2, 4}});
  CHECK(2.0 * b == RVec4{{-2, 0, 2, 0}});
  const CVec4 c = to_complex(a);
  CHECK(real_part(Complex(0, 1) * c) == RVec4{});
  CHECK(imag_part(Complex(0, 1) * c) == a);
  CHECK(real_part(conj(Complex(0, 1) * c)) == RVec4{});
  CHECK(imag_part(conj(Complex(0, 1) * c)) == -a);
}
