#include "doctest.h"

#include "qlink/algebra.hpp"

using namespace qlink;

TEST_CASE("make_spec constants") {
  AlgebraSpec b1 = AlgebraSpec::make(Family::B, 1);
  CHECK(b1.dim() == 3);
  CHECK(b1.gamma() == Laurent::parse("q^{-1/2}"));
  CHECK(b1.alpha() == Laurent::parse("q"));
  // delta = exact_div(q - q^{-1}, q^{1/2} - q^{-1/2}) + 1
  Laurent want = exact_div(Laurent::parse("q - q^{-1}"), Laurent::parse("q^{1/2} - q^{-1/2}")) +
                 Laurent::one();
  CHECK(b1.delta() == want);
  CHECK(b1.delta() == Laurent::parse("q^{1/2} + 1 + q^{-1/2}"));

  AlgebraSpec c2 = AlgebraSpec::make(Family::C, 2);
  CHECK(c2.dim() == 4);
  CHECK(c2.gamma() == Laurent::parse("q^{-1/4}"));
  CHECK(c2.alpha() == Laurent::parse("-q^{5/4}"));
  CHECK(c2.z() == Laurent::parse("q^{1/4} - q^{-1/4}"));

  AlgebraSpec d3 = AlgebraSpec::make(Family::D, 3);
  CHECK(d3.dim() == 6);
  CHECK(d3.alpha() == Laurent::parse("q^{5/2}"));
  CHECK(d3.delta().eval({1.0, 0.0}).real() == doctest::Approx(6.0));

  CHECK_THROWS_AS(AlgebraSpec::make(Family::B, 0), UnsupportedRank);
  CHECK_THROWS_AS(AlgebraSpec::make(Family::D, 1), UnsupportedRank);
}

TEST_CASE("delta at q=1 gives signed dimension") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(AlgebraSpec::make(Family::B, n).delta().eval({1, 0}).real() ==
          doctest::Approx(2 * n + 1).epsilon(1e-12));
    CHECK(AlgebraSpec::make(Family::C, n).delta().eval({1, 0}).real() ==
          doctest::Approx(-2 * n).epsilon(1e-12));
    if (n >= 2)
      CHECK(AlgebraSpec::make(Family::D, n).delta().eval({1, 0}).real() ==
            doctest::Approx(2 * n).epsilon(1e-12));
  }
}

TEST_CASE("inner product lemma tables") {
  AlgebraSpec b2 = AlgebraSpec::make(Family::B, 2);
  CHECK(b2.inner2(1, 3) == -2);  // s+t=2n, s!=t
  CHECK(b2.inner2(2, 2) == 0);   // s+t=2n, s=t
  CHECK(b2.inner2(1, 1) == 2);
  CHECK(b2.inner2(0, 1) == 0);

  AlgebraSpec c2 = AlgebraSpec::make(Family::C, 2);
  CHECK(c2.inner2(1, 2) == -1);  // s+t=2n-1 -> -1/2
  CHECK(c2.inner2(1, 1) == 1);   // 1/2
  CHECK(c2.inner2(0, 2) == 0);

  AlgebraSpec d3 = AlgebraSpec::make(Family::D, 3);
  // lambda^2 and lambda^2' are complementary: orders 2 and 3 sum to 2n-1=5
  int o2 = d3.order({2, false});
  int o2p = d3.order({2, true});
  CHECK(o2 == 2);
  CHECK(o2p == 3);
  CHECK(d3.inner2(o2, o2p) == -2);
  CHECK(d3.inner2(o2, o2) == 2);
}

TEST_CASE("complement and order") {
  AlgebraSpec b2 = AlgebraSpec::make(Family::B, 2);
  CHECK(b2.complement({1, false}) == WeightLabel{3, false});

  AlgebraSpec d3 = AlgebraSpec::make(Family::D, 3);
  CHECK(d3.complement({2, false}) == WeightLabel{2, true});
  CHECK(d3.order({2, true}) == 3);
  CHECK(d3.label(3).name() == "2p");
  for (int o = 0; o <= d3.m(); ++o) {
    CHECK(d3.order(d3.label(o)) == o);
    CHECK(d3.complement(d3.complement(d3.label(o))) == d3.label(o));
  }
  CHECK_THROWS_AS(d3.order({7, false}), InvalidLabel);
  CHECK_THROWS_AS(d3.order({1, true}), InvalidLabel);
}

TEST_CASE("duality and rank independence of inner products") {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    for (int n = fam == Family::D ? 2 : 1; n <= 5; ++n) {
      AlgebraSpec spec = AlgebraSpec::make(fam, n);
      int m = spec.m();
      for (int s = 0; s <= m; ++s)
        for (int t = 0; t <= m; ++t)
          CHECK(spec.inner2(s, t) == spec.inner2(m - s, m - t));
    }
  }
  // same index pattern, different rank: identical value
  AlgebraSpec b2 = AlgebraSpec::make(Family::B, 2), b5 = AlgebraSpec::make(Family::B, 5);
  CHECK(b2.inner2(1, 2 * 2 - 1) == b5.inner2(1, 2 * 5 - 1));
  CHECK(b2.inner2(0, 0) == b5.inner2(0, 0));
  AlgebraSpec c2 = AlgebraSpec::make(Family::C, 2), c4 = AlgebraSpec::make(Family::C, 4);
  CHECK(c2.inner2(0, 2 * 2 - 1) == c4.inner2(0, 2 * 4 - 1));
}

TEST_CASE("root counts pair complementarily to the vacuum") {
  for (Family fam : {Family::B, Family::C, Family::D}) {
    for (int n = fam == Family::D ? 2 : 1; n <= 4; ++n) {
      AlgebraSpec spec = AlgebraSpec::make(fam, n);
      int m = spec.m();
      std::vector<int> vacuum = spec.root_counts(0);
      for (size_t i = 0; i < vacuum.size(); ++i) vacuum[i] += spec.root_counts(m)[i];
      for (int o = 0; o <= m; ++o) {
        std::vector<int> sum = spec.root_counts(o);
        std::vector<int> co = spec.root_counts(m - o);
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += co[i];
        CHECK(sum == vacuum);
      }
      // root-count vectors are distinct across labels
      for (int o1 = 0; o1 <= m; ++o1)
        for (int o2 = o1 + 1; o2 <= m; ++o2) CHECK(spec.root_counts(o1) != spec.root_counts(o2));
    }
  }
}

TEST_CASE("D_2 builds from the same tables") {
  AlgebraSpec d2 = AlgebraSpec::make(Family::D, 2);
  CHECK(d2.dim() == 4);
  CHECK(d2.delta().eval({1, 0}).real() == doctest::Approx(4.0));
}
