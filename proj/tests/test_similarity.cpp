#include "dnacode/constraints.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/similarity.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace dnacode;

namespace {

dna_seq
random_seq(std::mt19937& rng, std::size_t n)
{
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back("ACGT"[pick(rng)]);
  }
  return dna_seq{ s };
}

const ss_params unit_weights{ 1.0, 0.0, 1.0, 0.0 };

} // namespace

TEST_CASE("hamming distance")
{
  CHECK(hamming_distance(dna_seq{ "ACGT" }, dna_seq{ "ACGT" }) == 0);
  CHECK(hamming_distance(dna_seq{ "AAAA" }, dna_seq{ "TTTT" }) == 4);
  CHECK(hamming_distance(dna_seq{ "ACGT" }, dna_seq{ "ACGA" }) == 1);
  CHECK_THROWS_AS(hamming_distance(dna_seq{ "ACG" }, dna_seq{ "ACGT" }), length_mismatch);
}

TEST_CASE("edit distance")
{
  CHECK(edit_distance(dna_seq{ "ACGT" }, dna_seq{ "ACGT" }) == 0);
  CHECK(edit_distance(dna_seq{ "ACGT" }, dna_seq{ "CGT" }) == 1);
  // Frozen from a breadth-first search over edit scripts.
  CHECK(edit_distance(dna_seq{ "AACC" }, dna_seq{ "ACAC" }) == 2);
}

TEST_CASE("edit distance matches edit-script search on short strings")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto u = random_seq(rng, 1 + static_cast<std::size_t>(trial % 4));
    const auto v = random_seq(rng, 1 + static_cast<std::size_t>((trial / 4) % 4));
    CAPTURE(u.str());
    CAPTURE(v.str());
    CHECK(edit_distance(u, v) == oracle::bfs_edit_distance(u.str(), v.str()));
  }
}

TEST_CASE("edit distance never exceeds hamming distance")
{
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(trial % 12);
    const auto u = random_seq(rng, n);
    const auto v = random_seq(rng, n);
    CHECK(edit_distance(u, v) <= hamming_distance(u, v));
  }
}

TEST_CASE("best alignment examples")
{
  const auto id = best_alignment(dna_seq{ "ACGT" }, dna_seq{ "ACGT" });
  CHECK(id.shift == 0);
  CHECK(id.l == 4);
  CHECK(id.k == 0);
  CHECK(id.f == 8);

  const auto none = best_alignment(dna_seq{ "AAAA" }, dna_seq{ "TTTT" });
  CHECK(none.shift == 0);
  CHECK(none.f == 0);
  CHECK(none.l == 0);
  CHECK(none.k == 0);

  // u[1..4] = CGTA opposite v[0..3] = CGTA.
  const auto shifted = best_alignment(dna_seq{ "ACGTA" }, dna_seq{ "CGTAA" });
  CHECK(shifted.shift == 1);
  CHECK(shifted.l == 4);
  CHECK(shifted.k == 0);
  CHECK(shifted.f == 8);
  CHECK(shifted.epsilon == 1);
  CHECK(shifted.overlap_len == 4);
}

TEST_CASE("best alignment is optimal and follows the tie-break (exhaustive n <= 4)")
{
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto all = oracle::all_strings(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto got = best_alignment(dna_seq{ a }, dna_seq{ b });
        const auto want = oracle::naive_best_alignment(a, b);
        REQUIRE(got.f == oracle::naive_best_f(a, b));
        REQUIRE(got.shift == want.shift);
        REQUIRE(got.l == want.l);
        REQUIRE(got.k == want.k);
      }
    }
  }
}

TEST_CASE("alignment statistics invariants")
{
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(trial % 10);
    const auto u = random_seq(rng, n);
    const auto v = random_seq(rng, n);
    const auto a = best_alignment(u, v);
    CHECK(a.overlap_len >= 1);
    CHECK(a.overlap_len <= n);
    CHECK(a.l + a.k <= a.overlap_len);
    CHECK(a.f == 2 * a.l + a.k);
    CHECK((a.epsilon == 0) == (a.shift == 0));
    CHECK(a.overlap_len + a.epsilon == n);
  }
  CHECK_THROWS_AS(align_at_shift(dna_seq{ "ACG" }, dna_seq{ "ACG" }, 3), config_error);
  CHECK_THROWS_AS(best_alignment(dna_seq{ "ACG" }, dna_seq{ "AC" }), length_mismatch);
}

TEST_CASE("alignment objective is invariant under joint reverse complement")
{
  std::mt19937 rng(9);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(trial % 11);
    const auto u = random_seq(rng, n);
    const auto v = random_seq(rng, n);
    CHECK(best_alignment(u, v).f ==
          best_alignment(reverse_complement(u), reverse_complement(v)).f);
  }
}

TEST_CASE("similarity vector examples")
{
  const dna_seq u{ "ACGTA" };
  const dna_seq v{ "CGTAA" };
  const auto a = best_alignment(u, v);
  const auto cross = similarity_vector(u, v, a, 1.0, 0.0);
  CHECK(cross == std::vector<double>{ 1.0, 2.0, 1.0, 1.0 });
  CHECK(cross == oracle::naive_weights(u.str(), v.str(), a.shift, 1.0, 0.0));
  CHECK(similarity_score(u, v, a, 1.0, 0.0) == 5.0);

  const auto self = similarity_vector(u, u, align_at_shift(u, u, 0), 1.0, 0.0);
  CHECK(self == std::vector<double>{ 1.0, 1.0, 2.0, 1.0, 1.0 });
  CHECK(self_score(u, 1.0, 0.0) == 6.0);

  const dna_seq w{ "AAAA" };
  const dna_seq x{ "TTTT" };
  CHECK(similarity_vector(w, x, best_alignment(w, x), 1.0, 1.0) ==
        std::vector<double>(4, 0.0));
}

TEST_CASE("similarity vector uses beta after an identical A/T pair")
{
  // Left neighbour of G is an identical A: state s_beta.
  const dna_seq u{ "AGCA" };
  const auto w = similarity_vector(u, u, align_at_shift(u, u, 0), 0.5, 0.25);
  CHECK(w == std::vector<double>{ 1.0, 1.25, 1.5, 1.0 });
}

TEST_CASE("similarity vector matches the rule interpreter at every shift")
{
  std::mt19937 rng(13);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(trial % 9);
    const auto u = random_seq(rng, n);
    const auto v = random_seq(rng, n);
    const int shift = static_cast<int>(trial % (2 * n - 1)) - static_cast<int>(n - 1);
    const auto a = align_at_shift(u, v, shift);
    const auto w = similarity_vector(u, v, a, 0.7, 0.3);
    CHECK(w.size() == a.overlap_len);
    CHECK(w == oracle::naive_weights(u.str(), v.str(), shift, 0.7, 0.3));
  }
}

TEST_CASE("ss examples")
{
  const dna_seq u{ "ACGTA" };
  const dna_seq v{ "CGTAA" };
  CHECK(ss(u, u, unit_weights) == 1.0);
  CHECK(ss(u, u, ss_params{ 0.3, 0.9, 0.1, 0.2 }) == 1.0);
  CHECK(ss(u, v, unit_weights) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(ss(dna_seq{ "AAAA" }, dna_seq{ "TTTT" }, ss_params{ 0.5, 0.5, 0.5, 0.5 }) == 0.0);
  CHECK_THROWS_AS(ss(dna_seq{ "ACG" }, dna_seq{ "ACGT" }, unit_weights), length_mismatch);
}

TEST_CASE("ss_rc examples")
{
  const dna_seq u{ "ATCGGAA" };
  const dna_seq v{ "TTCCGAT" };
  CHECK(ss_rc(u, v, unit_weights) == 1.0);
  CHECK(ss_rc(u, v, ss_params{ 0.2, 0.4, 0.6, 0.8 }) == 1.0);
  CHECK(ss_rc(dna_seq{ "AAAA" }, dna_seq{ "AAAA" }, unit_weights) == 0.0);
  const dna_seq w{ "ACGGT" };
  CHECK(ss_rc(w, w, unit_weights) == ss(w, reverse_complement(w), unit_weights));
}

TEST_CASE("ss matches the naive evaluator, is symmetric and bounded")
{
  std::mt19937 rng(17);
  const std::vector<ss_params> params = {
    unit_weights, { 0.0, 0.0, 0.0, 0.0 }, { 0.5, 0.5, 1.0, 1.0 }, { 0.2, 0.7, 0.2, 0.7 }
  };
  for (int trial = 0; trial < 4000; ++trial) {
    const auto n = 2 + static_cast<std::size_t>(trial % 11);
    const auto u = random_seq(rng, n);
    const auto v = random_seq(rng, n);
    const auto& p = params[static_cast<std::size_t>(trial) % params.size()];
    const double t = ss(u, v, p);
    CHECK(t == oracle::naive_ss(u.str(), v.str(), p.alpha1, p.beta1, p.alpha2, p.beta2));
    CHECK(t == ss(v, u, p));
    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
    if (u != v) {
      CHECK(t < 1.0);
    }
  }
}

TEST_CASE("unweighted ss pinned at shift 0 reduces to hamming similarity")
{
  std::mt19937 rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = 1 + static_cast<std::size_t>(trial % 12);
    const auto u = random_seq(rng, n);
    const auto v = random_seq(rng, n);
    const double cross = similarity_score(u, v, align_at_shift(u, v, 0), 0.0, 0.0);
    const double self = std::min(self_score(u, 0.0, 0.0), self_score(v, 0.0, 0.0));
    CHECK(self == static_cast<double>(n));
    CHECK(cross / self ==
          static_cast<double>(n - hamming_distance(u, v)) / static_cast<double>(n));
  }
}

TEST_CASE("model_similarity_exceeds")
{
  const similarity_model ss_model{ model_kind::ss, unit_weights };
  const similarity_model hamming{ model_kind::hamming, {} };
  const similarity_model edit{ model_kind::edit, {} };

  // tau(AATT, AACC) = 2 / min(4, 5) = 0.5; equality complies.
  const dna_seq u{ "AATT" };
  const dna_seq v{ "AACC" };
  REQUIRE(ss(u, v, unit_weights) == 0.5);
  CHECK_FALSE(model_similarity_exceeds(ss_model, u, v, false, 0.5));
  CHECK(model_similarity_exceeds(ss_model, u, v, false, 0.49));

  const dna_seq a{ "AAAAAAAA" };
  const dna_seq b{ "AAAAATTT" };
  REQUIRE(hamming_distance(a, b) == 3);
  CHECK(model_similarity_exceeds(hamming, a, b, false, 4.0));
  CHECK_FALSE(model_similarity_exceeds(hamming, a, b, false, 3.0));

  const dna_seq c{ "AAAAAAAA" };
  const dna_seq d{ "TTTTAAAA" };
  REQUIRE(edit_distance(c, d) == 4);
  CHECK_FALSE(model_similarity_exceeds(edit, c, d, false, 4.0));
  CHECK(model_similarity_exceeds(edit, c, d, false, 5.0));

  // The rc side compares against reverse_complement(v).
  CHECK(model_similarity_exceeds(hamming, dna_seq{ "ACGG" }, dna_seq{ "CCGT" }, true, 1.0));

  CHECK_THROWS_AS(model_similarity_exceeds(ss_model, u, v, false, 1.5), config_error);
  CHECK_THROWS_AS(model_similarity_exceeds(ss_model, u, v, false, -0.1), config_error);
  CHECK_THROWS_AS(model_similarity_exceeds(hamming, u, v, false, 2.5), config_error);
  CHECK_THROWS_AS(model_similarity_exceeds(edit, u, v, false, -1.0), config_error);
}

TEST_CASE("model names and weight validation")
{
  CHECK(model_kind_from_string("hamming") == model_kind::hamming);
  CHECK(model_kind_from_string("edit") == model_kind::edit);
  CHECK(model_kind_from_string("ss") == model_kind::ss);
  CHECK(to_string(model_kind::edit) == "edit");
  CHECK_THROWS_AS(model_kind_from_string("blast"), config_error);
  CHECK_THROWS_AS((ss_params{ 1.1, 0.0, 1.0, 0.0 }.validate()), config_error);
  CHECK_NOTHROW((ss_params{ 0.0, 1.0, 1.0, 0.0 }.validate()));
}
