#include "sl3/cocycle.hpp"
#include "sl3/random.hpp"

#include <gtest/gtest.h>

#include <map>

namespace sl3 {
namespace {

// Hand-written expected projection of sigma_n.
LinkChain expected_hat() {
  LinkChain c;
  c.add({0, 0}, 2);
  c.add({-1, 0}, -1);
  c.add({-1, 1}, 1);
  c.add({0, 1}, -1);
  c.add({0, -1}, -1);
  c.add({1, -1}, 1);
  c.add({1, 0}, -1);
  return c;
}

TEST(LinkChain, ZeroCoefficientsVanish) {
  LinkChain c = LinkChain::edge({1, 2}, 3);
  c.add({1, 2}, -3);
  EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(c.coeff({1, 2}), 0);
  EXPECT_EQ(LinkChain::edge({0, 0}) - LinkChain::edge({0, 0}), LinkChain());
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(3, LinkChain::edge({0, 0})), 0);
  EXPECT_EQ(phi(0, LinkChain::edge({make_rat(2, 3), 6})), 4);
  auto rng = gen::engine(31);
  for (int k = 0; k < 500; ++k) {
    const Rat q1 = gen::rat(rng), q2 = gen::rat(rng), r1 = gen::rat(rng), r2 = gen::rat(rng);
    const LinkChain loop = four_loop(q1, q2, r1, r2);
    EXPECT_EQ(phi(k % 9, loop), (q1 - q2) * (r1 - r2));
    EXPECT_TRUE(boundary(loop).empty());
  }
}

TEST(Boundary, SingleEdge) {
  const VertexChain b = boundary(LinkChain::edge({1, 2}));
  ASSERT_EQ(b.size(), 2U);
  EXPECT_EQ(b.at(LinkVertex{LinkFamily::kR, 2}), 1);
  EXPECT_EQ(b.at(LinkVertex{LinkFamily::kQ, 1}), -1);
}

TEST(Shift, Invariance) {
  const LinkChain loop = four_loop(1, 2, 3, 5);
  EXPECT_EQ(shift_chain(loop, 0, 0), loop);
  auto rng = gen::engine(32);
  for (int k = 0; k < 200; ++k) {
    LinkChain c;
    for (int p = 0; p < 3; ++p) c = c + gen::rat(rng) * four_loop(gen::rat(rng), gen::rat(rng), gen::rat(rng), gen::rat(rng));
    const Rat a = gen::rat(rng), b = gen::rat(rng);
    EXPECT_EQ(phi(0, shift_chain(c, a, b)), phi(0, c));
    EXPECT_EQ(phi(0, shift_chain(sigma_hat(k % 9), a, b)), -2);
  }
}

TEST(SquareDecomposition, RebuildsCycles) {
  auto rng = gen::engine(33);
  for (int k = 0; k < 100; ++k) {
    LinkChain c;
    for (int p = 0; p < 1 + k % 4; ++p) {
      c = c + gen::rat(rng) * four_loop(gen::rat(rng), gen::rat(rng), gen::rat(rng), gen::rat(rng));
    }
    const Rat q0 = gen::rat(rng), r0 = gen::rat(rng);
    LinkChain rebuilt;
    Rat value = 0;
    for (const SquareTerm& s : square_decomposition(c, q0, r0)) {
      rebuilt = rebuilt + s.coeff * four_loop(s.corner.q, q0, s.corner.r, r0);
      value += s.coeff * (s.corner.q - q0) * (s.corner.r - r0);
    }
    EXPECT_EQ(rebuilt, c);
    EXPECT_EQ(value, phi(0, c));
  }
}

TEST(Sigma, ProjectsToCycle) {
  for (int n = 0; n <= 8; ++n) {
    const ChamberChain s = sigma(n);
    ASSERT_EQ(s.terms.size(), 8U);
    Rat total = 0;
    for (const auto& term : s.terms) total += term.coeff;
    EXPECT_EQ(total, 0);
    const LinkChain hat = project(n, s);
    EXPECT_EQ(hat, expected_hat());
    EXPECT_EQ(hat, sigma_hat(n));
    EXPECT_TRUE(boundary(hat).empty());
    EXPECT_EQ(phi(n, hat), -2);
    Rat mass = 0;
    for (const auto& [e, c] : hat.terms()) mass += c < 0 ? Rat(-c) : c;
    EXPECT_EQ(mass, 8);
  }
}

TEST(Sigma, WordLabels) {
  for (int n = 0; n <= 8; ++n) {
    const ChamberChain s = sigma(n);
    std::map<EdgeLabel, int> counts;
    for (const auto& term : s.terms) {
      const auto [a, b] = label(term.word, n);
      ++counts[EdgeLabel{a, b}];
    }
    const std::map<EdgeLabel, int> expected{{{0, 0}, 2}, {{-1, 0}, 1}, {{-1, 1}, 1}, {{0, 1}, 1},
                                            {{0, -1}, 1}, {{1, -1}, 1}, {{1, 0}, 1}};
    EXPECT_EQ(counts, expected);
    // Term 5 is the commutator word.
    const Unipotent u1 = Unipotent::e12(Poly::monomial(1, n)), u2 = Unipotent::e23(Poly::monomial(1, n));
    EXPECT_EQ(s.terms[4].word, uni_commutator(u1.inverse(), u2));
    EXPECT_EQ(s.terms[4].word, uni_commutator(u1, u2.inverse()));
  }
}

TEST(Project, IdentityOnlyChain) {
  ChamberChain c;
  c.terms.push_back({make_rat(5, 2), Unipotent::identity(), "1"});
  EXPECT_EQ(project(3, c), LinkChain::edge({0, 0}, make_rat(5, 2)));
}

TEST(Sigma, SignVariantIsNotACycle) {
  const LinkChain v = sign_variant_sigma_hat();
  EXPECT_EQ(phi(0, v), -2);
  EXPECT_FALSE(boundary(v).empty());
  EXPECT_THROW(sigma(-1), std::invalid_argument);
}

}  // namespace
}  // namespace sl3
