#include "dnacode/constraints.hpp"
#include "dnacode/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dnacode {

namespace {

// Slack for fractional GC bounds such as 0.4 * 5 == 2.0000000000000004.
constexpr double gc_slack = 1e-9;

void
check_cap(const constraint_spec& spec, std::size_t cap)
{
  spec.validate();
  if (spec.n > cap) {
    throw capacity_error("length " + std::to_string(spec.n) +
                         " exceeds the enumeration cap of " + std::to_string(cap));
  }
}

/** Filters the index directly on its 2-bit digits, skipping string building. */
bool
admits_index(std::uint64_t index,
             std::size_t n,
             std::size_t min_gc,
             std::size_t max_gc,
             std::size_t run_max) noexcept
{
  std::size_t gc = 0;
  std::size_t run = 0;
  unsigned prev = 4;
  for (std::size_t i = 0; i < n; ++i) {
    const auto digit = static_cast<unsigned>(index & 3U);
    index >>= 2U;
    gc += (digit == 1 || digit == 2) ? 1 : 0;
    run = digit == prev ? run + 1 : 1;
    if (run > run_max) {
      return false;
    }
    prev = digit;
  }
  return gc >= min_gc && gc <= max_gc;
}

} // namespace

void
constraint_spec::validate() const
{
  if (n < 1) {
    throw config_error("sequence length must be at least 1");
  }
  if (!(gc_low >= 0.0 && gc_low <= gc_high && gc_high <= 1.0)) {
    throw config_error("GC bounds must satisfy 0 <= gc_low <= gc_high <= 1");
  }
  if (run_max < 1) {
    throw config_error("maximum homopolymer run must be at least 1");
  }
}

std::size_t
constraint_spec::min_gc_count() const
{
  const double lo = std::ceil(gc_low * static_cast<double>(n) - gc_slack);
  return static_cast<std::size_t>(std::max(0.0, lo));
}

std::size_t
constraint_spec::max_gc_count() const
{
  const double hi = std::floor(gc_high * static_cast<double>(n) + gc_slack);
  return static_cast<std::size_t>(std::max(0.0, hi));
}

bool
constraint_spec::admits(const dna_seq& u) const noexcept
{
  if (u.size() != n) {
    return false;
  }
  const auto gc = gc_count(u);
  return gc >= min_gc_count() && gc <= max_gc_count() &&
         max_homopolymer_run(u) <= run_max;
}

std::vector<dna_seq>
enumerate_constrained_serial(const constraint_spec& spec, std::size_t cap)
{
  check_cap(spec, cap);
  std::vector<dna_seq> out;
  const std::uint64_t total = std::uint64_t{ 1 } << (2 * spec.n);
  for (std::uint64_t i = 0; i < total; ++i) {
    auto s = decode_index(i, spec.n);
    if (spec.admits(s)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<dna_seq>
enumerate_constrained(const constraint_spec& spec, std::size_t cap)
{
  check_cap(spec, cap);
  const std::uint64_t total = std::uint64_t{ 1 } << (2 * spec.n);
  const auto min_gc = spec.min_gc_count();
  const auto max_gc = spec.max_gc_count();

  // Fixed chunking keeps the concatenation order independent of threads.
  constexpr std::uint64_t chunk = 1U << 14U;
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<std::uint64_t>> hits(chunks);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    auto& local = hits[static_cast<std::size_t>(c)];
    for (std::uint64_t i = begin; i < end; ++i) {
      if (admits_index(i, spec.n, min_gc, max_gc, spec.run_max)) {
        local.push_back(i);
      }
    }
  }

  std::size_t count = 0;
  for (const auto& h : hits) {
    count += h.size();
  }
  std::vector<dna_seq> out;
  out.reserve(count);
  for (const auto& h : hits) {
    for (const auto i : h) {
      out.push_back(decode_index(i, spec.n));
    }
  }
  return out;
}

} // namespace dnacode
