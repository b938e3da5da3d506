#include <gtest/gtest.h>

#include "support.hpp"
#include "transknot/generate.hpp"
#include "transknot/singular.hpp"

using namespace transknot;
using namespace testing_support;

namespace {

// Squashed trefoil: crossing #1 has tangents (1,-1) on e1 and (1,1) on e11.
TransverseDiagram squashed_trefoil() {
  return map_vertices(fixture("trefoil.td"), [](const Point& p) { return Point{p.x, 2 * p.z}; });
}

ResolutionAssignment assignment(std::initializer_list<Resolution> rs) { return {std::vector<Resolution>(rs)}; }

}  // namespace

TEST(MakeSingular, Examples) {
  EXPECT_THROW(make_singular(fixture("u_minus.td"), {0}), InadmissibleDoublePoint);

  const auto t = squashed_trefoil();
  const auto s = make_singular(t, {0});
  EXPECT_EQ(s.double_point_count(), 1u);

  const auto none = make_singular(t, {});
  EXPECT_EQ(none.double_point_count(), 0u);
  EXPECT_EQ(resolve(none, {}), t);
}

TEST(MakeSingular, AdmissibilityIsTheClosedCone) {
  const auto t = fixture("trefoil.td");
  // Braid crossings are admissible, the two loop crossings are forced.
  EXPECT_EQ(admissible_sites(t), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Resolve, Examples) {
  const auto t = squashed_trefoil();
  const auto s = make_singular(t, {0});
  const auto pos = resolve(s, assignment({Resolution::Pos}));
  EXPECT_EQ(pos.crossings[0].over_edge(), EdgeRef{1});  // the (1,-1) strand
  EXPECT_EQ(crossing_sign(pos, pos.crossings[0]), 1);
  const auto neg = resolve(s, assignment({Resolution::Neg}));
  EXPECT_EQ(neg.crossings[0].over_edge(), EdgeRef{11});  // the (1,1) strand
  EXPECT_EQ(crossing_sign(neg, neg.crossings[0]), -1);
  EXPECT_TRUE(validate(pos).valid());
  EXPECT_TRUE(validate(neg).valid());
}

TEST(Resolve, ResolutionsDifferOnlyAtChangedSites) {
  const auto t = fixture("trefoil.td");
  const auto s = make_singular(t, {0, 1, 2});
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b) {
      ResolutionAssignment ra, rb;
      int pos_a = 0, pos_b = 0, hamming = 0;
      for (unsigned j = 0; j < 3; ++j) {
        ra.choices.push_back((a >> j) & 1 ? Resolution::Neg : Resolution::Pos);
        rb.choices.push_back((b >> j) & 1 ? Resolution::Neg : Resolution::Pos);
        if (ra.choices[j] != rb.choices[j]) {
          ++hamming;
          pos_a += ra.choices[j] == Resolution::Pos;
          pos_b += rb.choices[j] == Resolution::Pos;
        }
      }
      const auto da = resolve(s, ra), db = resolve(s, rb);
      for (std::size_t k = 0; k < t.crossings.size(); ++k) {
        const bool differs = k < 3 && ra.choices[k] != rb.choices[k];
        EXPECT_EQ(da.crossings[k].over != db.crossings[k].over, differs);
      }
      EXPECT_EQ(writhe(da) - writhe(db), 2 * (pos_a - pos_b));
      EXPECT_EQ(assignment_sign(ra) * assignment_sign(rb), hamming % 2 == 0 ? 1 : -1);
    }
}

TEST(Resolve, RejectsIncompleteAssignment) {
  const auto s = make_singular(fixture("trefoil.td"), {0, 1});
  EXPECT_THROW(resolve(s, assignment({Resolution::Pos})), PreconditionFailed);
}

TEST(AssignmentSign, Examples) {
  EXPECT_EQ(assignment_sign(assignment({Resolution::Pos, Resolution::Pos})), 1);
  EXPECT_EQ(assignment_sign(assignment({Resolution::Pos, Resolution::Neg})), -1);
  EXPECT_EQ(assignment_sign(assignment({Resolution::Neg, Resolution::Neg})), 1);
}

TEST(Defect, Examples) {
  const auto t = fixture("trefoil.td");
  EXPECT_EQ(vassiliev_defect(writhe_invariant(), make_singular(t, {1})).defect, 2);
  EXPECT_EQ(vassiliev_defect(writhe_invariant(), make_singular(t, {0, 2})).defect, 0);
  const auto r = vassiliev_defect(v2_invariant(), make_singular(t, {0, 1, 2}));
  EXPECT_EQ(r.defect, 0);
  EXPECT_EQ(r.resolutions_evaluated, 8u);
}

TEST(Defect, BruteForceAgreesAndIgnoresSiteOrder) {
  // Oracle: enumerate resolutions by flipping over bits directly in the
  // crossing list, in reverse site order.
  for (const auto& s : singular_family(51, 2, 10)) {
    std::vector<std::size_t> sites;
    for (std::size_t k = 0; k < s.sites.size(); ++k)
      if (std::holds_alternative<DoublePoint>(s.sites[k])) sites.push_back(k);
    std::int64_t expected = 0;
    for (unsigned mask = 0; mask < 4; ++mask) {
      TransverseDiagram d{s.curve, s.coorientation, {}};
      int negatives = 0;
      for (std::size_t k = 0; k < s.sites.size(); ++k) {
        if (const auto* c = std::get_if<Crossing>(&s.sites[k])) {
          d.crossings.push_back(*c);
          continue;
        }
        const auto& dp = std::get<DoublePoint>(s.sites[k]);
        const bool neg = (mask >> (k == sites[0] ? 1 : 0)) & 1;
        negatives += neg;
        Crossing c{dp.lo, dp.hi, dp.point, Strand::Lo};
        if (crossing_sign(d, c) != (neg ? -1 : 1)) c.over = Strand::Hi;
        d.crossings.push_back(c);
      }
      expected += (negatives % 2 ? -1 : 1) * v2(d);
    }
    EXPECT_EQ(vassiliev_defect(v2_invariant(), s).defect, expected);
  }
}

TEST(OrderCheck, Writhe) {
  const auto two = singular_family(61, 2, 10);
  EXPECT_TRUE(is_order_at_most(writhe_invariant(), 1, two).holds);
  const auto one = singular_family(62, 1, 10);
  const auto check = is_order_at_most(writhe_invariant(), 0, one);
  EXPECT_FALSE(check.holds);
  for (auto v : check.defects) EXPECT_EQ(v, 2);
}

TEST(OrderCheck, V2) {
  EXPECT_TRUE(is_order_at_most(v2_invariant(), 2, singular_family(63, 3, 10)).holds);
  EXPECT_FALSE(is_order_at_most(v2_invariant(), 1, singular_family(64, 2, 20)).holds);
}

TEST(OrderCheck, ArityMismatch) {
  EXPECT_THROW(is_order_at_most(writhe_invariant(), 1, singular_family(65, 1, 2)), FamilyArityError);
}

TEST(Pullback, Examples) {
  const auto sl = sl_pullback_invariant();
  for (const auto& d : random_valid_diagrams(66, 10)) EXPECT_EQ(sl.evaluate(d), self_linking(d));

  FramedInvariantHandle quad{"f^2-w", 2, [](const TransverseDiagram& d, std::int64_t f) {
                               return f * f - writhe(d);
                             }};
  const auto pulled = pullback_framed_invariant(quad);
  EXPECT_EQ(pulled.claimed_order, 2);
  for (const auto& d : random_valid_diagrams(67, 10)) {
    const std::int64_t w = writhe(d);
    EXPECT_EQ(pulled.evaluate(d), w * w - w);
  }
  EXPECT_TRUE(is_order_at_most(sl, 1, singular_family(68, 2, 10)).holds);
}

TEST(Family, Deterministic) {
  const auto a = singular_family(70, 2, 5), b = singular_family(70, 2, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].curve, b[i].curve);
    EXPECT_EQ(a[i].double_point_count(), 2u);
  }
}
