#include "sl3/kernels.hpp"

#include <gtest/gtest.h>
#include <omp.h>

namespace sl3 {
namespace {

class KernelsTest : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { omp_set_num_threads(GetParam()); }
};

TEST_P(KernelsTest, StabilizerSweepMatchesSerial) {
  const auto par = stabilizer_sweep(6, 40, 3);
  EXPECT_EQ(par, stabilizer_sweep_serial(6, 40, 3));
  EXPECT_EQ(par.vertices, 28);
  EXPECT_EQ(par.samples, 28 * 40);
  EXPECT_EQ(par.mismatches, 0);
}

TEST_P(KernelsTest, LinkSweepMatchesSerial) {
  const MorseTable t(Window{21});
  const auto par = descending_link_sweep(t, 12);
  EXPECT_EQ(par, descending_link_sweep_serial(t, 12));
  EXPECT_EQ(par.failures, 0);
  EXPECT_LE(par.max_edges, 2);
  EXPECT_EQ(par.zero_edge_vertices, 2);
}

TEST_P(KernelsTest, PairingMatchesSerial) {
  const MorseTable t(Window{21});
  const auto par = pairing_matrix(8, t);
  const auto ser = pairing_matrix_serial(8, t);
  EXPECT_EQ(par.entries, ser.entries);
  EXPECT_EQ(par.certificates, ser.certificates);
  EXPECT_EQ(par.all_certified, ser.all_certified);
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelsTest, ::testing::Values(1, 4));

TEST(Kernels, SeedsChangeSamples) {
  EXPECT_EQ(stabilizer_sweep(3, 10, 1).mismatches, 0);
  EXPECT_EQ(stabilizer_sweep(3, 10, 2).mismatches, 0);
}

TEST(Kernels, PairingRejectsSmallWindow) {
  const MorseTable t(Window{10});
  EXPECT_THROW(pairing_matrix(8, t), std::invalid_argument);
  EXPECT_THROW(pairing_matrix_serial(-1, t), std::invalid_argument);
}

}  // namespace
}  // namespace sl3
