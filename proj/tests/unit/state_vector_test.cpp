#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "qkle/state_vector.hpp"

using namespace qkle;
using namespace qkle::qsim;

TEST(StateVector, LayoutAndInitialState) {
  StateVector sv({{"a", 2}, {"b", 3}});
  EXPECT_EQ(sv.num_qubits(), 5);
  EXPECT_EQ(sv.dimension(), 32u);
  EXPECT_EQ(sv.reg("a").offset, 0);
  EXPECT_EQ(sv.reg("b").offset, 2);
  EXPECT_DOUBLE_EQ(std::norm(sv.amplitudes()[0]), 1.0);
  EXPECT_THROW(sv.reg("c"), std::invalid_argument);
  EXPECT_THROW(StateVector({{"a", 20}, {"b", 10}}, 26), std::length_error);
}

TEST(StateVector, HadamardIsSelfInverse) {
  StateVector sv({{"x", 4}});
  sv.set_basis_state(9);
  sv.hadamard("x");
  for (auto a : sv.amplitudes()) EXPECT_NEAR(std::abs(a), 0.25, 1e-12);
  EXPECT_NEAR(sv.amplitudes()[9].real(), 0.25, 1e-12);  // (-1)^(9.9) = +1
  sv.hadamard("x");
  EXPECT_NEAR(sv.amplitudes()[9].real(), 1.0, 1e-12);
  EXPECT_NEAR(sv.norm_squared(), 1.0, 1e-12);
}

TEST(StateVector, XorOracle) {
  StateVector sv({{"x", 2}, {"y", 2}});
  sv.hadamard("x");
  const std::vector<Word> f = {3, 1, 1, 2};
  sv.apply_xor_oracle(f, "x", "y");
  for (Index x = 0; x < 4; ++x) EXPECT_NEAR(std::norm(sv.amplitudes()[x | (Index{f[x]} << 2)]), 0.25, 1e-12);
  sv.apply_xor_oracle(f, "x", "y");
  EXPECT_NEAR(sv.distribution("y")[0], 1.0, 1e-12);
}

TEST(StateVector, PhaseFlipAndBasisMap) {
  StateVector sv({{"x", 2}});
  sv.hadamard("x");
  sv.phase_flip([](Index i) { return i == 2; });
  EXPECT_LT(sv.amplitudes()[2].real(), 0);
  sv.phase_flip_zero("x");
  EXPECT_LT(sv.amplitudes()[0].real(), 0);
  sv.apply_basis_map([](Index i) { return i ^ 1; });
  EXPECT_LT(sv.amplitudes()[1].real(), 0);
  EXPECT_THROW(sv.apply_basis_map([](Index) { return Index{0}; }), std::invalid_argument);
}

TEST(StateVector, InplacePermutation) {
  StateVector sv({{"x", 3}});
  sv.set_basis_state(5);
  const auto p = make_permutation(3, 2);
  sv.apply_inplace_perm(p, "x");
  EXPECT_NEAR(std::norm(sv.amplitudes()[p(5)]), 1.0, 1e-12);
}

TEST(StateVector, MeasurementCollapses) {
  StateVector sv({{"x", 3}, {"y", 1}});
  sv.hadamard("x");
  Rng rng(4);
  const auto m = sv.measure("x", rng);
  EXPECT_NEAR(m.probability, 0.125, 1e-12);
  EXPECT_NEAR(sv.distribution("x")[m.value], 1.0, 1e-12);
  EXPECT_NEAR(sv.norm_squared(), 1.0, 1e-12);
}

TEST(StateVector, SamplingFollowsBornRule) {
  StateVector sv({{"x", 1}});
  auto amps = sv.amplitudes();
  amps[0] = std::sqrt(0.2);
  amps[1] = std::sqrt(0.8);
  Rng rng(8);
  const auto shots = sample_register(sv, "x", 20000, rng);
  double ones = 0;
  for (auto s : shots) ones += static_cast<double>(s);
  EXPECT_NEAR(ones / 20000, 0.8, 0.015);
}

TEST(StateVector, CsvListsNonzeroAmplitudes) {
  StateVector sv({{"x", 2}});
  sv.set_basis_state(2);
  std::ostringstream out;
  sv.write_csv(out);
  EXPECT_NE(out.str().find("x,2,1"), std::string::npos);
}
