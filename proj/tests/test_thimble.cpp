#include "doctest.h"

#include "qlink/thimble.hpp"

using namespace qlink;

TEST_CASE("descent conserves Im f and decreases h") {
  AiryParams p{0.0, 1.0};
  auto [v1, v2] = descent_directions(p, {1.0, 0.0});
  FlowTrajectory t = descend(p, std::complex<double>(1.0, 0.0) + 1e-4 * v1, v1, 14.0);
  CHECK(t.max_im_drift < 1e-6);

  AiryParams p2{1.0, 1.0};
  auto [w1, w2] = descent_directions(p2, {1.0, 0.0});
  FlowTrajectory t2 = descend(p2, std::complex<double>(1.0, 0.0) + 1e-4 * w1, w1, 14.0);
  CHECK(t2.max_im_drift < 1e-6);
  CHECK(t2.escaped);
}

TEST_CASE("connection happens exactly on the wall") {
  ScanEntry on_wall = scan_one(0.0, 1.0);
  CHECK(on_wall.connected);
  CHECK(on_wall.max_im_drift < 1e-6);

  for (double a : {-1.0, 1.0}) {
    ScanEntry off = scan_one(a, 1.0);
    CHECK(!off.connected);
    CHECK(off.max_im_drift < 1e-6);
  }
}

TEST_CASE("scan reports connectivity across a values") {
  std::vector<ScanEntry> rows = stokes_scan({-1.0, 0.0, 1.0}, 1.0);
  CHECK(rows.size() == 3);
  CHECK(!rows[0].connected);
  CHECK(rows[1].connected);
  CHECK(!rows[2].connected);
}

TEST_CASE("J+ endpoint sector flips across the wall") {
  ScanEntry left = scan_one(-1.0, 1.0);
  ScanEntry right = scan_one(1.0, 1.0);
  auto sectors = [](const ScanEntry& e) {
    std::pair<int, int> s{e.jplus[0].sector, e.jplus[1].sector};
    if (s.first > s.second) std::swap(s.first, s.second);
    return s;
  };
  CHECK(sectors(left) != sectors(right));
}

TEST_CASE("wall localization by bisection") {
  for (double b : {1.0, -1.0}) {
    double wall = locate_wall(b);
    CHECK(std::abs(wall) < 1e-3);
  }
}

TEST_CASE("b = 0 is rejected") {
  AiryParams p{0.0, 0.0};
  CHECK_THROWS_AS(descend(p, {1.0, 0.0}, {1.0, 0.0}, 1.0), std::invalid_argument);
}
