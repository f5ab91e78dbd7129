#pragma once

#include "dnacode/clique.hpp"
#include "dnacode/designer.hpp"
#include "dnacode/sequence.hpp"
#include "dnacode/similarity.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Data-parallel kernels used by the designer and the evaluator. Each kernel
// has a single-threaded reference twin with identical output; the tests
// compare the two and bench/ times them.

namespace dnacode {

/** Row-major square matrix of pairwise measures. */
struct pair_matrix
{
  std::size_t size = 0;
  std::vector<double> values{};

  [[nodiscard]] double at(std::size_t i, std::size_t j) const noexcept
  {
    return values[i * size + j];
  }

  bool operator==(const pair_matrix&) const = default;
};

/** measure(w_i, w_j) and measure(w_i, w_j') for every ordered pair. */
struct pair_measures
{
  pair_matrix direct{};
  pair_matrix rc{};

  bool operator==(const pair_measures&) const = default;
};

[[nodiscard]] pair_measures
compute_pair_measures(const std::vector<dna_seq>& words,
                      const similarity_model& model);

[[nodiscard]] pair_measures
compute_pair_measures_serial(const std::vector<dna_seq>& words,
                             const similarity_model& model);

/**
 * For each key, the index of the other key at minimum Hamming distance,
 * ties by smallest key text. All keys must share a length; with fewer than
 * two keys every entry is empty.
 */
[[nodiscard]] std::vector<std::optional<std::size_t>>
link_nearest_keys(const std::vector<std::string>& keys);

/** Quadratic all-pairs reference for link_nearest_keys. */
[[nodiscard]] std::vector<std::optional<std::size_t>>
link_nearest_keys_serial(const std::vector<std::string>& keys);

/**
 * Compatibility graph over vertices: an edge joins u and v iff every
 * pairwise clause of check_candidate holds for them.
 */
[[nodiscard]] bit_graph
build_compatibility_graph(const std::vector<dna_seq>& vertices,
                          const design_config& cfg);

[[nodiscard]] bit_graph
build_compatibility_graph_serial(const std::vector<dna_seq>& vertices,
                                 const design_config& cfg);

/** True iff the pairwise clauses of check_candidate hold for (x, c). */
[[nodiscard]] bool
pair_compatible(const dna_seq& x, const dna_seq& c, const design_config& cfg);

/** True iff the self-RC clause of check_candidate holds for x. */
[[nodiscard]] bool
self_compatible(const dna_seq& x, const design_config& cfg);

} // namespace dnacode
