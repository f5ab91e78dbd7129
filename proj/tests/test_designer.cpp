#include "dnacode/constraints.hpp"
#include "dnacode/designer.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/evaluation.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace dnacode;

namespace {

design_config
ss_config(std::size_t n, double t_th)
{
  design_config cfg;
  cfg.spec = constraint_spec{ n, 0.4, 0.6, 3 };
  cfg.model = similarity_model{ model_kind::ss, ss_params{ 1.0, 0.0, 1.0, 0.0 } };
  cfg.t_th = t_th;
  return cfg;
}

design_config
distance_config(model_kind kind, std::size_t n, unsigned d_th)
{
  design_config cfg;
  cfg.spec = constraint_spec{ n, 0.4, 0.6, 3 };
  cfg.model = similarity_model{ kind, {} };
  cfg.d_th = d_th;
  return cfg;
}

std::vector<std::string>
strings(const std::vector<dna_seq>& seqs)
{
  std::vector<std::string> out;
  for (const auto& s : seqs) {
    out.push_back(s.str());
  }
  return out;
}

std::size_t
key_distance(const std::string& a, const std::string& b)
{
  return oracle::naive_hamming(a, b);
}

/**
 * Straight transcription of the sorting-based search on strings: group by
 * suffix, sort by size then key, link nearest keys, and scan. Exhausted
 * groups are retried when reached again.
 */
std::vector<std::string>
naive_search(const std::vector<std::string>& candidates, std::size_t suffix, const oracle::design_rule_checker& rules)
{
  std::map<std::string, std::vector<std::string>> by_key;
  for (const auto& c : candidates) {
    by_key[c.substr(c.size() - suffix)].push_back(c);
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> groups(by_key.begin(), by_key.end());
  for (auto& g : groups) {
    std::sort(g.second.begin(), g.second.end());
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return a.second.size() != b.second.size() ? a.second.size() < b.second.size() : a.first < b.first;
  });
  std::vector<int> neighbor(groups.size(), -1);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = 0; j < groups.size(); ++j) {
      if (i == j) {
        continue;
      }
      if (neighbor[i] < 0) {
        neighbor[i] = static_cast<int>(j);
        continue;
      }
      const auto& best = groups[static_cast<std::size_t>(neighbor[i])].first;
      const auto d = key_distance(groups[i].first, groups[j].first);
      const auto bd = key_distance(groups[i].first, best);
      if (d < bd || (d == bd && groups[j].first < best)) {
        neighbor[i] = static_cast<int>(j);
      }
    }
  }

  std::vector<std::string> code;
  std::vector<bool> eliminated(groups.size(), false);
  const auto attempt = [&](std::size_t g) {
    for (const auto& m : groups[g].second) {
      if (rules.accepts(m, code)) {
        code.push_back(m);
        eliminated[g] = true;
        return true;
      }
    }
    return false;
  };
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (eliminated[g] || !attempt(g)) {
      continue;
    }
    if (neighbor[g] >= 0 && !eliminated[static_cast<std::size_t>(neighbor[g])]) {
      attempt(static_cast<std::size_t>(neighbor[g]));
    }
  }
  return code;
}

} // namespace

TEST_CASE("design_config validation")
{
  auto cfg = ss_config(6, 0.5);
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.threshold() == 0.5);

  auto both = cfg;
  both.d_th = 3;
  CHECK_THROWS_AS(both.validate(), config_error);

  auto missing = cfg;
  missing.t_th.reset();
  CHECK_THROWS_AS(missing.validate(), config_error);

  auto out_of_range = cfg;
  out_of_range.t_th = 1.2;
  CHECK_THROWS_AS(out_of_range.validate(), config_error);

  auto hamming = distance_config(model_kind::hamming, 6, 3);
  CHECK_NOTHROW(hamming.validate());
  CHECK(hamming.threshold() == 3.0);
  hamming.d_th = 0;
  CHECK_THROWS_AS(hamming.validate(), config_error);
  hamming.d_th.reset();
  hamming.t_th = 0.5;
  CHECK_THROWS_AS(hamming.validate(), config_error);

  auto bad_weights = cfg;
  bad_weights.model.params.beta2 = 2.0;
  CHECK_THROWS_AS(bad_weights.validate(), config_error);
}

TEST_CASE("check_candidate with an empty code is the self-RC clause")
{
  const auto cfg = ss_config(4, 0.5);
  // ACGT is its own reverse complement: tau(x, x') = 1.
  CHECK_FALSE(check_candidate(dna_seq{ "ACGT" }, std::vector<dna_seq>{}, cfg));
  CHECK_FALSE(check_candidate(dna_seq{ "ACGT" }, std::vector<dna_seq>{ dna_seq{ "AACC" } }, cfg));
  // ACAC against GTGT shares no symbol: tau(x, x') = 0.
  CHECK(check_candidate(dna_seq{ "ACAC" }, std::vector<dna_seq>{}, cfg));
  CHECK_THROWS_AS(check_candidate(dna_seq{ "ACA" }, std::vector<dna_seq>{}, cfg), length_mismatch);
}

TEST_CASE("check_candidate agrees with a direct reading of the constraints")
{
  const auto candidates = strings(enumerate_constrained({ 4, 0.4, 0.6, 3 }));
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  for (const double t : { 0.25, 0.4, 0.5, 0.6 }) {
    const auto cfg = ss_config(4, t);
    const oracle::design_rule_checker rules{ t };
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<std::string> code;
      for (int i = 0; i < trial % 4; ++i) {
        code.push_back(candidates[pick(rng)]);
      }
      const auto x = candidates[pick(rng)];
      std::vector<dna_seq> words;
      for (const auto& c : code) {
        words.emplace_back(c);
      }
      CAPTURE(x);
      CHECK(check_candidate(dna_seq{ x }, words, cfg) == rules.accepts(x, code));
    }
  }
}

TEST_CASE("check_candidate for distance models")
{
  const auto cfg = distance_config(model_kind::hamming, 4, 2);
  // AACC vs rc GGTT: distance 4.
  CHECK(check_candidate(dna_seq{ "AACC" }, std::vector<dna_seq>{}, cfg));
  // ACCA vs rc TGGT differ everywhere, but ACCA vs ACCT differ once.
  CHECK(check_candidate(dna_seq{ "ACCA" }, std::vector<dna_seq>{}, cfg));
  CHECK_FALSE(check_candidate(dna_seq{ "ACCA" }, std::vector<dna_seq>{ dna_seq{ "ACCT" } }, cfg));
}

TEST_CASE("suffix_length")
{
  CHECK(suffix_length(8, 0.5) == 5);
  CHECK(suffix_length(6, 1.0) == 6);
  CHECK(suffix_length(5, 0.0) == 1);
  CHECK(suffix_length(7, 1.0 - 4.0 / 7.0) == 4);
  CHECK(suffix_length_for_distance(8, 4) == 5);
  CHECK(suffix_length_for_distance(8, 8) == 1);
  CHECK(suffix_length_for_distance(8, 12) == 1);
  CHECK(suffix_length_for_distance(8, 1) == 8);
  CHECK(suffix_length(distance_config(model_kind::hamming, 8, 4)) == 5);
  CHECK(suffix_length(ss_config(8, 0.5)) == 5);
  CHECK_THROWS_AS(suffix_length(8, 1.5), config_error);
}

TEST_CASE("sharing the distance suffix forces a hamming violation")
{
  // Exhaustive over prefix pairs: the suffix is shared, so only the prefix
  // can differ. The next shorter suffix admits a counterexample.
  for (std::size_t n = 2; n <= 8; ++n) {
    for (unsigned d = 1; d <= std::min<unsigned>(4, static_cast<unsigned>(n)); ++d) {
      const auto len = suffix_length_for_distance(n, d);
      const auto prefix = n - len;
      std::size_t worst = 0;
      for (const auto& a : oracle::all_strings(prefix)) {
        for (const auto& b : oracle::all_strings(prefix)) {
          worst = std::max(worst, oracle::naive_hamming(a, b));
        }
      }
      CAPTURE(n);
      CAPTURE(d);
      CHECK(worst < d);
      if (len > 1) {
        CHECK(prefix + 1 >= d);
      }
    }
  }
}

TEST_CASE("group_by_suffix")
{
  const std::vector<dna_seq> cands{ dna_seq{ "TACG" }, dna_seq{ "AACG" }, dna_seq{ "AAGT" } };
  const auto groups = group_by_suffix(cands, 3);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].key == "ACG");
  CHECK(strings(groups[0].members) == std::vector<std::string>{ "AACG", "TACG" });
  CHECK(groups[1].key == "AGT");
  CHECK(strings(groups[1].members) == std::vector<std::string>{ "AAGT" });

  const auto all = enumerate_constrained({ 6, 0.4, 0.6, 3 });
  for (std::size_t len = 1; len <= 6; ++len) {
    const auto g = group_by_suffix(all, len);
    std::size_t total = 0;
    for (const auto& grp : g) {
      total += grp.members.size();
      CHECK(std::is_sorted(grp.members.begin(), grp.members.end()));
      for (const auto& m : grp.members) {
        CHECK(m.str().ends_with(grp.key));
      }
      if (len == 6) {
        CHECK(grp.members.size() == 1);
      }
    }
    CHECK(total == all.size());
  }
  CHECK(group_by_suffix({}, 3).empty());
  CHECK_THROWS_AS(group_by_suffix(cands, 5), config_error);
}

TEST_CASE("sort_and_link")
{
  std::vector<suffix_group> groups{
    { "AAA", { dna_seq{ "AAAA" }, dna_seq{ "CAAA" }, dna_seq{ "GAAA" } }, false },
    { "CCC", { dna_seq{ "ACCC" } }, false },
    { "GGG", { dna_seq{ "AGGG" }, dna_seq{ "CGGG" } }, false },
  };
  const auto index = sort_and_link(groups);
  REQUIRE(index.groups.size() == 3);
  CHECK(index.groups[0].members.size() == 1);
  CHECK(index.groups[1].members.size() == 2);
  CHECK(index.groups[2].members.size() == 3);

  std::vector<suffix_group> keyed{
    { "ACG", { dna_seq{ "AACG" } }, false },
    { "ACT", { dna_seq{ "AACT" } }, false },
    { "GGG", { dna_seq{ "AGGG" } }, false },
  };
  const auto linked = sort_and_link(keyed);
  CHECK(linked.groups[0].key == "ACG");
  CHECK(linked.neighbor[0] == std::optional<std::size_t>{ 1 });
  CHECK(linked.neighbor[1] == std::optional<std::size_t>{ 0 });
  // GGG is at distance 2 from ACG and ACT; the smaller key wins.
  CHECK(linked.neighbor[2] == std::optional<std::size_t>{ 0 });

  const auto pair = sort_and_link({ keyed[0], keyed[2] });
  CHECK(pair.neighbor[0] == std::optional<std::size_t>{ 1 });
  CHECK(pair.neighbor[1] == std::optional<std::size_t>{ 0 });

  const auto single = sort_and_link({ keyed[0] });
  CHECK_FALSE(single.neighbor[0].has_value());
}

TEST_CASE("search trivial cases")
{
  const auto cfg = ss_config(4, 0.5);
  CHECK(search(cfg, {}).size() == 0);
  const auto one = search(cfg, { dna_seq{ "ACAC" } });
  CHECK(strings(one.words) == std::vector<std::string>{ "ACAC" });
  CHECK(search(cfg, { dna_seq{ "ACGT" } }).size() == 0);
  CHECK(search(ss_config(4, 0.0)).size() <= 1);
}

TEST_CASE("search reproduces a direct transcription of the algorithm")
{
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto candidates = enumerate_constrained({ n, 0.4, 0.6, 3 });
    for (const double t : { 0.25, 0.4, 0.5, 0.6 }) {
      CAPTURE(n);
      CAPTURE(t);
      const auto cfg = ss_config(n, t);
      const auto got = strings(search(cfg, candidates).words);
      CHECK(got == naive_search(strings(candidates), suffix_length(n, t), oracle::design_rule_checker{ t }));
    }
  }
}

TEST_CASE("search output is valid, one word per group and deterministic")
{
  const std::vector<design_config> cfgs{
    ss_config(6, 1.0 - 4.0 / 6.0), ss_config(7, 1.0 - 4.0 / 7.0), ss_config(8, 0.5),
    distance_config(model_kind::hamming, 7, 3), distance_config(model_kind::edit, 7, 3),
  };
  for (const auto& cfg : cfgs) {
    const auto first = search(cfg);
    const auto second = search(cfg);
    CHECK(first.words == second.words);
    CHECK(validate_code(first, cfg).valid());

    std::set<std::string> suffixes;
    const auto len = suffix_length(cfg);
    for (const auto& w : first.words) {
      CHECK(suffixes.insert(w.str().substr(w.size() - len)).second);
    }
  }
}

TEST_CASE("brute force oracle")
{
  const auto cfg = ss_config(4, 0.5);
  CHECK(brute_force_oracle(cfg, { dna_seq{ "ACGT" }, dna_seq{ "AATT" } }) == 0);
  CHECK(brute_force_oracle(cfg, { dna_seq{ "AAAC" }, dna_seq{ "AAAG" } }) == 1);
  CHECK_THROWS_AS(brute_force_oracle(ss_config(7, 1.0)), capacity_error);
}

TEST_CASE("oracle equals an independent clique search and dominates search")
{
  for (std::size_t n = 4; n <= 5; ++n) {
    const auto candidates = enumerate_constrained({ n, 0.4, 0.6, 3 });
    for (const double t : { 0.25, 0.4 }) {
      const auto cfg = ss_config(n, t);
      const oracle::design_rule_checker rules{ t };
      std::vector<std::string> vertices;
      for (const auto& c : strings(candidates)) {
        if (rules.self_ok(c)) {
          vertices.push_back(c);
        }
      }
      std::vector<std::vector<char>> adj(vertices.size(), std::vector<char>(vertices.size(), 0));
      for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
          adj[a][b] = adj[b][a] = rules.pair_ok(vertices[a], vertices[b]) ? 1 : 0;
        }
      }
      const auto expected =
        oracle::bron_kerbosch_max(vertices.size(), [&](std::size_t a, std::size_t b) { return adj[a][b] != 0; });
      const auto optimum = brute_force_oracle(cfg, candidates);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(optimum == expected);
      CHECK(optimum >= search(cfg, candidates).size());
    }
  }
}

TEST_CASE("expurgate keeps an acceptance-order prefix")
{
  const auto c = search(ss_config(7, 1.0 - 4.0 / 7.0));
  REQUIRE(c.size() >= 3);
  CHECK(expurgate(c, c.size()).words == c.words);
  CHECK(expurgate(c, 0).words.empty());
  for (std::size_t a = 0; a <= c.size(); ++a) {
    for (std::size_t b = a; b <= c.size(); ++b) {
      const auto small = expurgate(c, a).words;
      const auto large = expurgate(c, b).words;
      CHECK(std::equal(small.begin(), small.end(), large.begin()));
    }
  }
  CHECK_THROWS_AS(expurgate(c, c.size() + 1), config_error);
}
