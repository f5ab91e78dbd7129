#pragma once

#include "dnacode/sequence.hpp"

#include <cstddef>
#include <vector>

namespace dnacode {

/** Largest length enumerated by default (4^14 candidates). */
inline constexpr std::size_t default_enumeration_cap = 14;

/**
 * Per-codeword combinatorial constraints: closed GC-fraction interval and a
 * maximum homopolymer run.
 */
struct constraint_spec
{
  std::size_t n = 8;
  double gc_low = 0.4;
  double gc_high = 0.6;
  std::size_t run_max = 3;

  /** Throws config_error unless 1 <= n, 0 <= gc_low <= gc_high <= 1, run_max >= 1. */
  void validate() const;

  /** Smallest and largest admissible GC counts for length n. */
  [[nodiscard]] std::size_t min_gc_count() const;
  [[nodiscard]] std::size_t max_gc_count() const;

  [[nodiscard]] bool admits(const dna_seq& u) const noexcept;

  bool operator==(const constraint_spec&) const = default;
};

/**
 * All sequences of length spec.n meeting the constraints, in canonical
 * lexicographic order. Filters the full 4^n space in parallel; the output
 * order does not depend on the thread count.
 *
 * Throws capacity_error when spec.n exceeds cap.
 */
[[nodiscard]] std::vector<dna_seq>
enumerate_constrained(const constraint_spec& spec,
                      std::size_t cap = default_enumeration_cap);

/** Single-threaded reference for enumerate_constrained. */
[[nodiscard]] std::vector<dna_seq>
enumerate_constrained_serial(const constraint_spec& spec,
                             std::size_t cap = default_enumeration_cap);

} // namespace dnacode
