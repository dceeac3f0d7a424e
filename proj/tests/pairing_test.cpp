#include "sl3/pairing.hpp"

#include <gtest/gtest.h>

namespace sl3 {
namespace {

TEST(Rank, SmallMatrices) {
  EXPECT_EQ(rank_over_q({}), 0);
  EXPECT_EQ(rank_over_q({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(rank_over_q({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(rank_over_q({{0, 1}, {1, 0}}), 2);
  // Hilbert matrix: nonsingular over Q.
  std::vector<std::vector<Rat>> h(4, std::vector<Rat>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = make_rat(1, i + j + 1);
  EXPECT_EQ(rank_over_q(h), 4);
  h[3] = h[0];
  EXPECT_EQ(rank_over_q(h), 3);
}

TEST(LocalPairing, Entries) {
  const MorseTable t(Window{required_i_max(8)});
  for (int n = 0; n <= 8; ++n) {
    const PairingEntry d = local_pairing(n, n, t);
    EXPECT_EQ(d.value, -2);
    EXPECT_TRUE(d.certified);
  }
  const PairingEntry below = local_pairing(5, 2, t);
  EXPECT_EQ(below.value, 0);
  EXPECT_TRUE(below.certified);
  EXPECT_NE(below.certificate.find("<"), std::string::npos);
  const PairingEntry above = local_pairing(2, 5, t);
  EXPECT_EQ(above.value, 0);
  EXPECT_TRUE(above.certified);
  EXPECT_THROW(local_pairing(-1, 0, t), std::invalid_argument);
}

TEST(LocalPairing, SmallWindowOverflows) {
  const MorseTable t(Window{6});
  EXPECT_THROW(local_pairing(8, 2, t), WindowOverflow);
}

TEST(RequiredWindow, Value) {
  EXPECT_EQ(required_i_max(8), 18);
  EXPECT_LE(required_i_max(8), 21);
}

}  // namespace
}  // namespace sl3
