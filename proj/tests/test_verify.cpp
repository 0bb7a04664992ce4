#include "doctest.h"

#include "qlink/verify.hpp"

using namespace qlink;

TEST_CASE("suite passes on small specs") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::B, 1}, {Family::B, 3}, {Family::C, 1}, {Family::C, 2}, {Family::D, 3}}) {
    MatrixSet ms = build_matrices(fam, rank);
    VerifyReport rep = run_suite(ms);
    INFO(rep.to_json());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("yang baxter catches a zeroed beta entry") {
  MatrixSet ms = build_matrices(Family::B, 1);
  ms.braid.set_entry(ms.braid.key(0, 2), ms.braid.key(1, 1), Laurent::zero());
  CHECK(check_yang_baxter(ms).pass == false);
}

TEST_CASE("skein check catches a corrupted fusion entry") {
  MatrixSet ms = build_matrices(Family::B, 1);
  ms.fusion.zeta[0] = Laurent::parse("q");
  VerifyReport rep = run_suite(ms);
  CHECK(!rep.all_pass());
  bool named = false;
  for (const auto& c : rep.checks)
    if (!c.pass && !c.counterexample.empty()) named = true;
  CHECK(named);
}

TEST_CASE("report serializes to json") {
  MatrixSet ms = build_matrices(Family::C, 1);
  VerifyReport rep = run_suite(ms);
  std::string json = rep.to_json();
  CHECK(json.find("\"spec\":\"C1\"") != std::string::npos);
  CHECK(json.find("\"yang_baxter\"") != std::string::npos);
}

TEST_CASE("every single-beta perturbation of B_1 is detected") {
  MatrixSet clean = build_matrices(Family::B, 1);
  // the three wall-crossing entries of the critical block
  std::vector<std::pair<int, int>> betas = {
      {clean.braid.key(0, 2), clean.braid.key(1, 1)},
      {clean.braid.key(0, 2), clean.braid.key(0, 2)},
      {clean.braid.key(1, 1), clean.braid.key(0, 2)},
  };
  for (auto [src, dst] : betas) {
    MatrixSet ms = build_matrices(Family::B, 1);
    ms.braid.set_entry(src, dst, Laurent::zero());
    bool caught = !check_yang_baxter(ms).pass || !check_skein(ms).pass ||
                  !check_loop_twist(ms).pass;
    CHECK(caught);
  }
}
