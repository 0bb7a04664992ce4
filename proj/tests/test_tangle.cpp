#include "doctest.h"

#include "qlink/tangle.hpp"

#include <random>

using namespace qlink;

TEST_CASE("parse_braid") {
  BraidWord w = parse_braid("1 1 1", 2);
  CHECK(w.letters == std::vector<int>{1, 1, 1});
  BraidWord f8 = parse_braid("1 -2 1 -2", 3);
  CHECK(f8.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(parse_braid("", 1).letters.empty());
  CHECK_THROWS_AS(parse_braid("3", 2), GeneratorOutOfRange);
  CHECK_THROWS_AS(parse_braid("0", 2), ParseError);
  CHECK_THROWS_AS(parse_braid("x", 2), ParseError);
}

TEST_CASE("closure tape shape") {
  Tape unknot = closure_tape(parse_braid("", 1));
  CHECK(unknot.events == std::vector<MorseEvent>{{MorseEvent::Cup, 0}, {MorseEvent::Cap, 0}});
  Tape curl = closure_tape(parse_braid("1", 2));
  CHECK(curl.events.size() == 5);
  CHECK(curl.strand_profile() == std::vector<int>{0, 2, 4, 4, 2, 0});

  Tape bad;
  bad.events = {{MorseEvent::Cup, 0}, {MorseEvent::Pos, 1}, {MorseEvent::Cap, 0}};
  CHECK_THROWS_AS(bad.strand_profile(), InvalidTape);
}

TEST_CASE("tape text round trip") {
  Tape t = closure_tape(parse_braid("1 -1", 2));
  Tape back = Tape::parse(t.render());
  CHECK(back.events == t.events);
  CHECK_THROWS_AS(Tape::parse("cup x"), ParseError);
  CHECK_THROWS_AS(Tape::parse("hop 1"), ParseError);
}

TEST_CASE("unknot evaluates to delta") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::B, 1}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}}) {
    MatrixSet ms = build_matrices(fam, rank);
    CHECK(evaluate_tape(ms, closure_tape(parse_braid("", 1))) == ms.spec.delta());
  }
}

TEST_CASE("curl scales by alpha, per the twist condition") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::B, 1}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}}) {
    MatrixSet ms = build_matrices(fam, rank);
    Laurent raw = evaluate_tape(ms, closure_tape(parse_braid("1", 2)));
    CHECK(raw == ms.spec.alpha() * ms.spec.delta());
    Laurent raw_neg = evaluate_tape(ms, closure_tape(parse_braid("-1", 2)));
    CHECK(raw_neg == ms.spec.alpha_inv() * ms.spec.delta());
    // normalized unknot-with-curl = normalized unknot = delta
    CHECK(normalized_invariant(ms, parse_braid("1", 2)) == ms.spec.delta());
  }
}

TEST_CASE("two disjoint unknots give delta squared") {
  MatrixSet ms = build_matrices(Family::B, 1);
  CHECK(evaluate_tape(ms, closure_tape(parse_braid("", 2))) == ms.spec.delta() * ms.spec.delta());
  // nesting order does not matter for the same abstract diagram
  Tape sequential;
  sequential.events = {{MorseEvent::Cup, 0}, {MorseEvent::Cap, 0},
                       {MorseEvent::Cup, 0}, {MorseEvent::Cap, 0}};
  CHECK(evaluate_tape(ms, sequential) == ms.spec.delta() * ms.spec.delta());
}

TEST_CASE("writhe is the exponent sum") {
  CHECK(writhe(parse_braid("1 1 1", 2)) == 3);
  CHECK(writhe(parse_braid("1 -1", 2)) == 0);
  CHECK(writhe(parse_braid("-1 -2 -1", 3)) == -3);
}

TEST_CASE("mirror braid equals the q -> 1/q image") {
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::B, 1}, {Family::C, 2}, {Family::D, 3}}) {
    MatrixSet ms = build_matrices(fam, rank);
    for (const char* word : {"1 1 1", "1 -2 1 -2", "1 1"}) {
      BraidWord w = parse_braid(word, 3);
      BraidWord mirror = w;
      for (int& j : mirror.letters) j = -j;
      Laurent direct = evaluate_tape(ms, closure_tape(mirror));
      Laurent flipped = evaluate_tape(ms, closure_tape(w)).invert_variable();
      CHECK(direct == flipped);
    }
  }
}

TEST_CASE("classical limit counts permutation cycles") {
  // at q=1 the braiding degenerates to the swap, so raw values become
  // alpha(1)^writhe * delta(1)^cycles
  auto cycles = [](const BraidWord& w) {
    std::vector<int> perm(w.strands);
    for (int i = 0; i < w.strands; ++i) perm[i] = i;
    for (int j : w.letters) std::swap(perm[std::abs(j) - 1], perm[std::abs(j)]);
    std::vector<bool> seen(w.strands, false);
    int count = 0;
    for (int i = 0; i < w.strands; ++i) {
      if (seen[i]) continue;
      ++count;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return count;
  };
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::B, 2}, {Family::C, 2}, {Family::D, 3}}) {
    MatrixSet ms = build_matrices(fam, rank);
    double a1 = ms.spec.alpha().eval({1, 0}).real();
    double d1 = ms.spec.delta().eval({1, 0}).real();
    for (const char* word : {"1 1 1", "1 -2 1 -2", "1 1", "1 2"}) {
      BraidWord w = parse_braid(word, 3);
      Laurent raw = evaluate_tape(ms, closure_tape(w));
      double want = std::pow(a1, writhe(w)) * std::pow(d1, cycles(w));
      CHECK(raw.eval({1, 0}).real() == doctest::Approx(want).epsilon(1e-9));
      CHECK(raw.eval({1, 0}).imag() == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("R2, R3 and Markov invariance on random words") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> strands_d(2, 4), len_d(0, 6);
  for (auto [fam, rank] :
       std::vector<std::pair<Family, int>>{{Family::B, 1}, {Family::C, 2}}) {
    MatrixSet ms = build_matrices(fam, rank);
    for (int trial = 0; trial < 12; ++trial) {
      int strands = strands_d(rng);
      std::uniform_int_distribution<int> gen_d(1, strands - 1);
      std::uniform_int_distribution<int> sign_d(0, 1);
      BraidWord w;
      w.strands = strands;
      int len = len_d(rng);
      for (int i = 0; i < len; ++i) w.letters.push_back(gen_d(rng) * (sign_d(rng) ? 1 : -1));

      Laurent base = evaluate_tape(ms, closure_tape(w));

      // R2: insert "j -j" anywhere
      BraidWord r2 = w;
      int j = gen_d(rng);
      size_t at = w.letters.empty() ? 0 : rng() % (w.letters.size() + 1);
      r2.letters.insert(r2.letters.begin() + at, {j, -j});
      CHECK(evaluate_tape(ms, closure_tape(r2)) == base);

      // R3: "j j+1 j" == "j+1 j j+1"
      if (strands >= 3) {
        int g = std::uniform_int_distribution<int>(1, strands - 2)(rng);
        BraidWord r3a = w, r3b = w;
        r3a.letters.insert(r3a.letters.begin() + at, {g, g + 1, g});
        r3b.letters.insert(r3b.letters.begin() + at, {g + 1, g, g + 1});
        CHECK(evaluate_tape(ms, closure_tape(r3a)) == evaluate_tape(ms, closure_tape(r3b)));
      }

      // Markov conjugation: w -> g w g^{-1} preserves the normalized invariant
      BraidWord conj = w;
      int g = gen_d(rng);
      conj.letters.insert(conj.letters.begin(), g);
      conj.letters.push_back(-g);
      CHECK(normalized_invariant(ms, conj) == normalized_invariant(ms, w));

      // stabilization: appending sigma_k^{+-1} on a new strand scales raw by alpha^{+-1}
      BraidWord stab = w;
      stab.strands = strands + 1;
      stab.letters.push_back(strands);
      CHECK(evaluate_tape(ms, closure_tape(stab)) == ms.spec.alpha() * base);
    }
  }
}
