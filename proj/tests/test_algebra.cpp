#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cstar/algebra.hpp"
#include "cstar/lcg.hpp"
#include "oracles.hpp"

using cstar::BlockElement;
using cstar::Complex;
using cstar::ComplexScalar;
using cstar::FunctionElement;
using cstar::Lcg;
using cstar::QuaternionElement;

namespace {

BlockElement random_block(Lcg& rng, int k) {
  BlockElement b(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      b.at(i, j) = Complex(rng.next_uniform(-1.0, 1.0), rng.next_uniform(-1.0, 1.0));
  return b;
}

// Random trigonometric polynomial of low degree: smooth and exactly
// resolved by the grid, so products stay grid-exact.
FunctionElement random_smooth(Lcg& rng, double lo, double hi, int g) {
  double ar[4], br[4], ai[4], bi[4];
  for (int m = 0; m < 4; ++m) {
    ar[m] = rng.next_uniform(-1.0, 1.0);
    br[m] = rng.next_uniform(-1.0, 1.0);
    ai[m] = rng.next_uniform(-1.0, 1.0);
    bi[m] = rng.next_uniform(-1.0, 1.0);
  }
  return FunctionElement::sample(lo, hi, g, [&](double t) {
    const double u = (2.0 * t - lo - hi) / (hi - lo);
    Complex v(0.0, 0.0);
    for (int m = 0; m < 4; ++m)
      v += Complex(ar[m] * std::cos(m * u) + br[m] * std::sin(m * u),
                   ai[m] * std::cos(m * u) + bi[m] * std::sin(m * u));
    return v;
  });
}

QuaternionElement random_quat(Lcg& rng) {
  return QuaternionElement(rng.next_uniform(-2.0, 2.0), rng.next_uniform(-2.0, 2.0),
                           rng.next_uniform(-2.0, 2.0), rng.next_uniform(-2.0, 2.0));
}

}  // namespace

TEST_CASE("complex scalar norm and adjoint") {
  const ComplexScalar x(Complex(3.0, 4.0));
  CHECK(x.norm() == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(x.adjoint().value() == Complex(3.0, -4.0));
  CHECK((x * x.one_like()).value() == x.value());
}

TEST_CASE("function element norm: exp(-t) on [1,2]") {
  const FunctionElement f = FunctionElement::sample(
      1.0, 2.0, 201, [](double t) { return std::exp(-t); });
  // monotone decreasing: the sup sits at the left endpoint
  CHECK(f.norm() == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // dense resampling oracle
  double dense = 0.0;
  for (int i = 0; i <= 20000; ++i)
    dense = std::max(dense, std::exp(-(1.0 + i / 20000.0)));
  CHECK(f.norm() == doctest::Approx(dense).epsilon(1e-9));
}

TEST_CASE("function sup-norm examples") {
  const FunctionElement c1 = FunctionElement::constant(0.0, 1.0, 201, Complex(1.0));
  CHECK(c1.sup_norm(2001) == doctest::Approx(1.0).epsilon(1e-15));
  const FunctionElement t2p1 =
      FunctionElement::sample(0.0, 1.0, 201, [](double t) { return t * t + 1.0; });
  CHECK(t2p1.sup_norm(2001) == doctest::Approx(2.0).epsilon(1e-13));
  const FunctionElement et =
      FunctionElement::sample(0.0, 1.0, 201, [](double t) { return std::exp(t); });
  CHECK(et.sup_norm(2001) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  CHECK_THROWS_AS(et.sup_norm(100), cstar::PreconditionViolation);
}

TEST_CASE("function elements on different grids do not combine") {
  const FunctionElement a = FunctionElement::constant(0.0, 1.0, 33, Complex(1.0));
  const FunctionElement b = FunctionElement::constant(0.0, 1.0, 65, Complex(1.0));
  const FunctionElement c = FunctionElement::constant(0.0, 2.0, 33, Complex(1.0));
  CHECK_THROWS_AS((void)(a * b), cstar::IncompatibleOperands);
  CHECK_THROWS_AS((void)(a + c), cstar::IncompatibleOperands);
}

TEST_CASE("block product matches dense oracle") {
  Lcg rng(42);
  const BlockElement x = random_block(rng, 2);
  const BlockElement y = random_block(rng, 2);
  const BlockElement z = x * y;
  // direct 2x2 multiplication
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Complex want = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
      CHECK(std::abs(z.at(i, j) - want) < 1e-15);
    }
  CHECK_THROWS_AS((void)(x * BlockElement(3)), cstar::IncompatibleOperands);
}

TEST_CASE("block norm is the largest singular value") {
  Lcg rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const BlockElement x = random_block(rng, 3);
    oracles::CMat m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = x.at(i, j);
    CHECK(x.norm() == doctest::Approx(oracles::spectral_norm(m)).epsilon(1e-9));
  }
  CHECK(BlockElement(4).norm() == 0.0);
}

TEST_CASE("quaternion arithmetic table and norm") {
  const QuaternionElement i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
  const QuaternionElement ij = i * j;
  CHECK(ij.a() == 0.0);
  CHECK(ij.b() == 0.0);
  CHECK(ij.c() == 0.0);
  CHECK(ij.d() == 1.0);
  CHECK(QuaternionElement(1, 1, 1, 1).norm() == doctest::Approx(2.0));
  CHECK((k * k).a() == -1.0);
}

TEST_CASE("quaternion embedding: displayed 2x2 representation") {
  const BlockElement one = cstar::quat_to_block(QuaternionElement(1, 0, 0, 0));
  CHECK(one.at(0, 0) == Complex(1, 0));
  CHECK(one.at(1, 1) == Complex(1, 0));
  CHECK(one.at(0, 1) == Complex(0, 0));

  const BlockElement im = cstar::quat_to_block(QuaternionElement(0, 1, 0, 0));
  CHECK(im.at(0, 0) == Complex(0, 1));
  CHECK(im.at(1, 1) == Complex(0, -1));
  CHECK(im.at(0, 1) == Complex(0, 0));
  CHECK(im.at(1, 0) == Complex(0, 0));

  CHECK(cstar::quat_to_block(QuaternionElement(1, 1, 1, 1)).norm() ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quaternion embedding is a norm-preserving homomorphism") {
  Lcg rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const QuaternionElement p = random_quat(rng);
    const QuaternionElement q = random_quat(rng);
    const BlockElement lhs = cstar::quat_to_block(p * q);
    const BlockElement rhs = cstar::quat_to_block(p) * cstar::quat_to_block(q);
    const BlockElement sum_l = cstar::quat_to_block(p + q);
    const BlockElement sum_r = cstar::quat_to_block(p) + cstar::quat_to_block(q);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(lhs.at(i, j) - rhs.at(i, j)) < 1e-12);
        CHECK(std::abs(sum_l.at(i, j) - sum_r.at(i, j)) < 1e-12);
      }
    CHECK(p.norm() == doctest::Approx(cstar::quat_to_block(p).norm()).epsilon(1e-12));
    // round trip
    const QuaternionElement back = cstar::block_to_quat(cstar::quat_to_block(p));
    CHECK((p - back).norm() < 1e-15);
  }
}

TEST_CASE("submultiplicativity and C*-identity: 10000 random pairs per algebra") {
  // scalars
  {
    Lcg rng(11);
    for (int t = 0; t < 10000; ++t) {
      const ComplexScalar x(Complex(rng.next_uniform(-3, 3), rng.next_uniform(-3, 3)));
      const ComplexScalar y(Complex(rng.next_uniform(-3, 3), rng.next_uniform(-3, 3)));
      REQUIRE((x * y).norm() <= x.norm() * y.norm() + 1e-10);
      REQUIRE(std::abs((x.adjoint() * x).norm() - x.norm() * x.norm()) <=
              1e-8 * x.norm() * x.norm() + 1e-14);
    }
  }
  // blocks
  {
    Lcg rng(12);
    for (int t = 0; t < 10000; ++t) {
      const BlockElement x = random_block(rng, 3);
      const BlockElement y = random_block(rng, 3);
      REQUIRE((x * y).norm() <= x.norm() * y.norm() + 1e-10);
      REQUIRE(std::abs((x.adjoint() * x).norm() - x.norm() * x.norm()) <=
              1e-8 * x.norm() * x.norm() + 1e-14);
    }
  }
  // sampled functions, refined sup-norm
  {
    Lcg rng(13);
    const int g = 17;
    for (int t = 0; t < 10000; ++t) {
      const FunctionElement x = random_smooth(rng, 0.0, 1.0, g);
      const FunctionElement y = random_smooth(rng, 0.0, 1.0, g);
      const double nx = x.sup_norm(2001);
      const double ny = y.sup_norm(2001);
      REQUIRE((x * y).sup_norm(2001) <= nx * ny + 1e-10);
      REQUIRE(std::abs((x.adjoint() * x).sup_norm(2001) - nx * nx) <=
              1e-8 * nx * nx + 1e-14);
    }
  }
  // quaternions
  {
    Lcg rng(14);
    for (int t = 0; t < 10000; ++t) {
      const QuaternionElement x = random_quat(rng);
      const QuaternionElement y = random_quat(rng);
      REQUIRE((x * y).norm() <= x.norm() * y.norm() + 1e-10);
      REQUIRE(std::abs((x.adjoint() * x).norm() - x.norm() * x.norm()) <=
              1e-8 * x.norm() * x.norm() + 1e-14);
    }
  }
}

TEST_CASE("unit and zero norms") {
  CHECK(ComplexScalar().one_like().norm() == 1.0);
  CHECK(ComplexScalar().zero_like().norm() == 0.0);
  CHECK(BlockElement(3).one_like().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(FunctionElement::constant(0, 1, 33, Complex(0.0)).norm() == 0.0);
  CHECK(QuaternionElement().one_like().norm() == 1.0);
}
