#pragma once

#include "dnacode/constraints.hpp"
#include "dnacode/sequence.hpp"
#include "dnacode/similarity.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dnacode {

/** Parameters of a single code design run. */
struct design_config
{
  constraint_spec spec{};
  similarity_model model{};
  /** Maximum significance; set iff model.kind == ss. */
  std::optional<double> t_th{};
  /** Minimum distance; set iff model is a distance model. */
  std::optional<unsigned> d_th{};
  std::size_t enumeration_cap = default_enumeration_cap;

  /** Throws config_error on any inconsistency. */
  void validate() const;

  /** t_th or d_th as a real, whichever the model uses. */
  [[nodiscard]] double threshold() const;

  bool operator==(const design_config&) const = default;
};

/** Accepted codewords in acceptance order plus the config that built them. */
struct code
{
  std::vector<dna_seq> words{};
  design_config config{};

  [[nodiscard]] std::size_t size() const noexcept { return words.size(); }
};

/** Candidates sharing their last key.size() symbols. */
struct suffix_group
{
  std::string key{};
  std::vector<dna_seq> members{};
  bool eliminated = false;
};

/** Groups in ascending size order, each linked to its nearest-key group. */
struct group_index
{
  std::vector<suffix_group> groups{};
  /** neighbor[i] indexes groups; empty only when there is a single group. */
  std::vector<std::optional<std::size_t>> neighbor{};
};

/**
 * True iff x may join the code: its self-RC measure complies, and for every
 * word c the (x, c), (x, c') and (c, x') measures comply.
 */
[[nodiscard]] bool
check_candidate(const dna_seq& x,
                const std::vector<dna_seq>& words,
                const design_config& cfg);

[[nodiscard]] inline bool
check_candidate(const dna_seq& x, const code& c, const design_config& cfg)
{
  return check_candidate(x, c.words, cfg);
}

/** floor(n * t_th) + 1, at most n. */
[[nodiscard]] std::size_t
suffix_length(std::size_t n, double t_th);

/** n - d_th + 1 clamped to [1, n]. */
[[nodiscard]] std::size_t
suffix_length_for_distance(std::size_t n, unsigned d_th);

[[nodiscard]] std::size_t
suffix_length(const design_config& cfg);

/**
 * Partitions candidates by their last suffix_len symbols. Groups come out in
 * key order with members sorted; empty input gives no groups.
 */
[[nodiscard]] std::vector<suffix_group>
group_by_suffix(const std::vector<dna_seq>& candidates, std::size_t suffix_len);

/**
 * Sorts groups by ascending size (ties by key) and links each to the other
 * group whose key is nearest in Hamming distance (ties by smallest key).
 */
[[nodiscard]] group_index
sort_and_link(std::vector<suffix_group> groups);

/** Sorting-based exhaustive search over the constrained candidate set. */
[[nodiscard]] code
search(const design_config& cfg);

/** As search(cfg), over an explicit candidate list. */
[[nodiscard]] code
search(const design_config& cfg, const std::vector<dna_seq>& candidates);

/** Largest candidate set accepted by brute_force_oracle. */
inline constexpr std::size_t max_oracle_vertices = 2000;

/**
 * Size of the largest mutually compatible candidate set, found by exact
 * maximum-clique search. Throws capacity_error beyond max_oracle_vertices.
 */
[[nodiscard]] std::size_t
brute_force_oracle(const design_config& cfg);

[[nodiscard]] std::size_t
brute_force_oracle(const design_config& cfg,
                   const std::vector<dna_seq>& candidates);

/** First m words in acceptance order; throws config_error if m > size. */
[[nodiscard]] code
expurgate(const code& c, std::size_t m);

} // namespace dnacode
