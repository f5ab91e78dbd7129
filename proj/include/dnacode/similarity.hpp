#pragma once

#include "dnacode/sequence.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace dnacode {

/**
 * Ungapped placement of v against u: v[j] sits opposite u[j + shift], so a
 * positive shift leaves the first |shift| bases of u and the last |shift|
 * bases of v overhanging.
 */
struct alignment
{
  int shift = 0;
  std::size_t overlap_len = 0;
  std::size_t epsilon = 0;
  /** Longest run of consecutive identical pairs in the overlap. */
  std::size_t l = 0;
  /** Identical pairs outside that run. */
  std::size_t k = 0;
  /** Objective 2l + k. */
  std::size_t f = 0;

  bool operator==(const alignment&) const = default;
};

/** Per-pair weight-transfer state of the weighted similarity allocation. */
enum class weight_state
{
  s0,
  s_alpha,
  s_beta,
};

/** Extra weights for cross vectors (alpha1, beta1) and self vectors (alpha2, beta2). */
struct ss_params
{
  double alpha1 = 1.0;
  double beta1 = 0.0;
  double alpha2 = 1.0;
  double beta2 = 0.0;

  /** Throws config_error unless all four weights lie in [0, 1]. */
  void validate() const;

  bool operator==(const ss_params&) const = default;
};

enum class model_kind
{
  hamming,
  edit,
  ss,
};

[[nodiscard]] std::string_view
to_string(model_kind kind) noexcept;

/** Parses "hamming", "edit" or "ss"; throws config_error. */
[[nodiscard]] model_kind
model_kind_from_string(std::string_view name);

struct similarity_model
{
  model_kind kind = model_kind::ss;
  /** Only consulted when kind == ss. */
  ss_params params{};

  /** True for hamming/edit, whose thresholds are minimum distances. */
  [[nodiscard]] bool is_distance() const noexcept
  {
    return kind != model_kind::ss;
  }

  bool operator==(const similarity_model&) const = default;
};

/** Number of differing positions; throws length_mismatch. */
[[nodiscard]] std::size_t
hamming_distance(const dna_seq& u, const dna_seq& v);

/** Levenshtein distance with unit costs. */
[[nodiscard]] std::size_t
edit_distance(const dna_seq& u, const dna_seq& v);

/** Match statistics of the placement with the given shift; |shift| < n. */
[[nodiscard]] alignment
align_at_shift(const dna_seq& u, const dna_seq& v, int shift);

/**
 * Best-alignment criterion: the shift maximizing f = 2l + k over all
 * ungapped shifts in [-(n-1), n-1]. Ties prefer larger l, then smaller
 * |shift|, then the negative shift. Throws length_mismatch.
 */
[[nodiscard]] alignment
best_alignment(const dna_seq& u, const dna_seq& v);

/**
 * Weighted similarity allocation over the overlap of a, left to right.
 * Identical pairs weigh 1; identical G/C pairs gain alpha when the pair to
 * their left is an identical G/C pair and beta when it is an identical A/T
 * pair. The leftmost overlap pair is always in state s0.
 */
[[nodiscard]] std::vector<double>
similarity_vector(const dna_seq& u,
                  const dna_seq& v,
                  const alignment& a,
                  double alpha,
                  double beta);

/** Sum of similarity_vector without materializing it. */
[[nodiscard]] double
similarity_score(const dna_seq& u,
                 const dna_seq& v,
                 const alignment& a,
                 double alpha,
                 double beta);

/** Score of u against itself at shift 0. */
[[nodiscard]] double
self_score(const dna_seq& u, double alpha, double beta);

/**
 * Similarity significance: the weighted cross score at the best alignment
 * over the smaller of the two weighted self scores. Identical sequences have
 * significance 1. Throws length_mismatch.
 */
[[nodiscard]] double
ss(const dna_seq& u, const dna_seq& v, const ss_params& p);

/** ss(u, reverse_complement(v), p). */
[[nodiscard]] double
ss_rc(const dna_seq& u, const dna_seq& v, const ss_params& p);

/**
 * Model-dependent measure: the significance for ss, the distance for
 * hamming/edit. Applied to (u, v) or (u, v') depending on rc_side.
 */
[[nodiscard]] double
model_measure(const similarity_model& model,
              const dna_seq& u,
              const dna_seq& v,
              bool rc_side);

/**
 * True when the value breaks the threshold: ss strictly above it, or a
 * distance strictly below it. Significances are correctly rounded ratios,
 * so the comparison is exact against the threshold as represented.
 */
[[nodiscard]] bool
violates(const similarity_model& model, double value, double threshold) noexcept;

/** Throws config_error unless threshold suits the model kind. */
void
validate_threshold(const similarity_model& model, double threshold);

/**
 * Uniform constraint check: true iff the (u, v) or (u, v') measure violates
 * the threshold. Throws config_error for out-of-domain thresholds.
 */
[[nodiscard]] bool
model_similarity_exceeds(const similarity_model& model,
                         const dna_seq& u,
                         const dna_seq& v,
                         bool rc_side,
                         double threshold);

} // namespace dnacode
