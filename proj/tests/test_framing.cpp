#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "transknot/framing.hpp"
#include "transknot/generate.hpp"
#include "transknot/stabilize.hpp"

using namespace transknot;
using namespace testing_support;

TEST(MT, Examples) {
  EXPECT_EQ(compute_m_T({}), 0);
  EXPECT_EQ(compute_m_T({4, 6}), 2);
  EXPECT_EQ(compute_m_T({0, 0, 5}), 5);
}

TEST(MT, DividesInputsAndIgnoresSignAndOrder) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(-40, 40), len(0, 5);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::int64_t> xs(static_cast<std::size_t>(len(rng)));
    for (auto& x : xs) x = v(rng);
    const auto m = compute_m_T(xs);
    EXPECT_GE(m, 0);
    for (auto x : xs) {
      if (m != 0) EXPECT_EQ(x % m, 0);
      else EXPECT_EQ(x, 0);
    }
    auto flipped = xs;
    for (auto& x : flipped) x = -x;
    std::shuffle(flipped.begin(), flipped.end(), rng);
    EXPECT_EQ(compute_m_T(flipped), m);
  }
}

TEST(Act, Examples) {
  EXPECT_EQ(act(FramingTorsor{0}, 5, 3), 8);
  EXPECT_EQ(act(FramingTorsor{2}, 1, 1), 0);
  EXPECT_EQ(act(FramingTorsor{0}, 0, -4), -4);
  EXPECT_EQ(act(FramingTorsor{3}, -7, 2), 1);
}

TEST(Act, GroupLawsExhaustive) {
  for (std::int64_t m : {0, 2, 3}) {
    const FramingTorsor t{m};
    for (std::int64_t x = -10; x <= 10; ++x) {
      const std::int64_t rx = t.reduce(x);
      EXPECT_EQ(act(t, 0, rx), rx);
      for (std::int64_t j = -10; j <= 10; ++j)
        for (std::int64_t k = -10; k <= 10; ++k) EXPECT_EQ(act(t, k, act(t, j, rx)), act(t, k + j, rx));
      // Free and transitive on residues.
      for (std::int64_t y = -10; y <= 10; ++y) {
        const std::int64_t ry = t.reduce(y);
        EXPECT_EQ(act(t, ry - rx, rx), ry);
        if (m > 0 && ry != rx) EXPECT_NE((ry - rx) % m, 0);
      }
    }
  }
}

TEST(LoopDelta, ExamplesAndAdditivity) {
  EXPECT_EQ(loop_delta({}), 0);
  EXPECT_EQ(loop_delta({2, -2}), 0);
  EXPECT_EQ(loop_delta({1, 1, -3}), -1);
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> v(-5, 5), len(0, 8);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
    for (auto& x : a) x = v(rng);
    for (auto& x : b) x = v(rng);
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(loop_delta(ab), loop_delta(a) + loop_delta(b));
  }
}

TEST(Exists, Examples) {
  ManifoldDescriptor tight;
  tight.tight_contact = true;
  auto v = relative_framing_exists(tight);
  EXPECT_EQ(v.kind, ExistenceVerdict::Kind::Exists);
  EXPECT_EQ(v.reason, ExistsReason::TightContact);

  ManifoldDescriptor mod;
  mod.torus_pairings = {4, 6};
  mod.pairings_exhaustive = true;
  v = relative_framing_exists(mod);
  EXPECT_EQ(v.kind, ExistenceVerdict::Kind::ModOnly);
  EXPECT_EQ(v.modulus, 2);

  mod.pairings_exhaustive = false;
  EXPECT_EQ(relative_framing_exists(mod).kind, ExistenceVerdict::Kind::Unknown);

  v = relative_framing_exists(ManifoldDescriptor{});
  EXPECT_EQ(v.kind, ExistenceVerdict::Kind::Exists);
  EXPECT_EQ(v.reason, ExistsReason::ZeroModulus);
}

TEST(Exists, FirstMatchingConditionIsReported) {
  ManifoldDescriptor d;
  d.euler_finite_order = d.closed_irreducible_atoroidal = d.tight_contact = true;
  EXPECT_EQ(relative_framing_exists(d).reason, ExistsReason::FiniteOrderEuler);
  d.euler_finite_order = false;
  EXPECT_EQ(relative_framing_exists(d).reason, ExistsReason::ClosedIrreducibleAtoroidal);
}

TEST(Bennequin, Examples) {
  const auto u = fixture("u_minus.td");
  const ComponentLabel unknot{"trivial", Coorientation::Plus};
  EXPECT_EQ(relative_bennequin({unknot, 0}, u), -1);
  EXPECT_EQ(relative_bennequin({unknot, 7}, u), 6);
  EXPECT_THROW(relative_bennequin({{"trivial", Coorientation::Minus}, 0}, u), ComponentMismatch);
  EXPECT_THROW(relative_bennequin({unknot, 0}, fixture("u_minus_overflipped.td")), InvalidDiagram);
}

TEST(Bennequin, ConstantDifferenceAndStabilization) {
  const ComponentLabel label{"any", Coorientation::Plus};
  const RelativeFraming f1{label, 4}, f2{label, -9};
  for (const auto& d : random_valid_diagrams(81, 30)) {
    EXPECT_EQ(relative_bennequin(f1, d) - relative_bennequin(f2, d), 13);
    EXPECT_EQ(relative_bennequin(f1, stabilize(d, EdgeRef{2}, 2)), relative_bennequin(f1, d) - 4);
  }
}

TEST(FramedClasses, Examples) {
  ManifoldDescriptor plain, sphere;
  sphere.has_nonseparating_sphere = true;
  EXPECT_EQ(framed_classes_equal(plain, {"k", 2}, {"k", 2}), FramedEquality::Equal);
  EXPECT_EQ(framed_classes_equal(plain, {"k", 2}, {"k", 5}), FramedEquality::NotEqual);
  EXPECT_EQ(framed_classes_equal(sphere, {"k", 2}, {"k", 5}), FramedEquality::Indeterminate);
  EXPECT_EQ(framed_classes_equal(sphere, {"k", 2}, {"j", 2}), FramedEquality::NotEqual);
}

TEST(Components, Examples) {
  const auto [plus, minus] = transverse_components("trivial");
  EXPECT_EQ(plus, (ComponentLabel{"trivial", Coorientation::Plus}));
  EXPECT_EQ(minus, (ComponentLabel{"trivial", Coorientation::Minus}));
  EXPECT_EQ(plus.curve_class, minus.curve_class);
  EXPECT_NE(plus, minus);
  const auto again = transverse_components("trivial");
  EXPECT_EQ(again.first, plus);
  EXPECT_EQ(again.second, minus);
}

TEST(Distinguish, Examples) {
  ManifoldDescriptor tight;
  tight.tight_contact = true;
  auto r = distinguish_by_relative_framing(tight, false, 1);
  EXPECT_EQ(r.verdict, Verdict::Distinguished);
  EXPECT_EQ(r.torsor_line, "F(K1) = (-2)·F(K0)");

  ManifoldDescriptor sphere = tight;
  sphere.has_nonseparating_sphere = true;
  EXPECT_EQ(distinguish_by_relative_framing(sphere, true, 1).verdict, Verdict::Distinguished);
  EXPECT_EQ(distinguish_by_relative_framing(sphere, false, 1).verdict, Verdict::Inconclusive);
  EXPECT_EQ(distinguish_by_relative_framing(tight, false, 0).verdict, Verdict::Inconclusive);
  EXPECT_EQ(distinguish_by_relative_framing(tight, false, 3).torsor_shift, -6);
}

TEST(Distinguish, RequiresExistence) {
  ManifoldDescriptor none;
  none.torus_pairings = {4, 6};
  none.pairings_exhaustive = true;
  EXPECT_THROW(distinguish_by_relative_framing(none, true, 1), PreconditionFailed);
}
