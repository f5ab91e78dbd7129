#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dnacode {

/** Nucleotide; enumerator order is the canonical order A < C < G < T. */
enum class base : std::uint8_t
{
  A = 0,
  C = 1,
  G = 2,
  T = 3,
};

[[nodiscard]] constexpr base
complement(base b) noexcept
{
  // A<->T and C<->G are mirror images in the canonical order
  return static_cast<base>(3 - static_cast<std::uint8_t>(b));
}

[[nodiscard]] constexpr bool
is_gc(base b) noexcept
{
  return b == base::C || b == base::G;
}

[[nodiscard]] char
to_char(base b) noexcept;

/** Returns the base for an uppercase ACGT character; throws parse_error. */
[[nodiscard]] base
base_from_char(char c);

/**
 * Non-empty DNA sequence over {A, C, G, T}, stored 5' to 3'.
 *
 * Sequences are stored as their uppercase text so that ordering, hashing and
 * printing coincide with the canonical lexicographic order.
 */
class dna_seq
{
public:
  /** Validates the text; throws parse_error on empty input or bad symbols. */
  explicit dna_seq(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return m_bases.size(); }
  [[nodiscard]] base operator[](std::size_t i) const noexcept
  {
    return base_from_validated(m_bases[i]);
  }
  [[nodiscard]] char symbol(std::size_t i) const noexcept { return m_bases[i]; }
  [[nodiscard]] const std::string& str() const noexcept { return m_bases; }

  auto operator<=>(const dna_seq&) const = default;
  bool operator==(const dna_seq&) const = default;

private:
  struct trusted
  {
  };
  dna_seq(std::string text, trusted) noexcept
    : m_bases(std::move(text))
  {
  }

  static base base_from_validated(char c) noexcept
  {
    switch (c) {
      case 'A':
        return base::A;
      case 'C':
        return base::C;
      case 'G':
        return base::G;
      default:
        return base::T;
    }
  }

  friend dna_seq reverse_complement(const dna_seq& u);
  friend dna_seq decode_index(std::uint64_t index, std::size_t n);

  std::string m_bases;
};

std::ostream&
operator<<(std::ostream& os, const dna_seq& seq);

/** Reversal of the base-wise complement, written 5' to 3'. */
[[nodiscard]] dna_seq
reverse_complement(const dna_seq& u);

/** Fraction of G and C bases. */
[[nodiscard]] double
gc_fraction(const dna_seq& u) noexcept;

[[nodiscard]] std::size_t
gc_count(const dna_seq& u) noexcept;

/** Length of the longest run of identical consecutive bases. */
[[nodiscard]] std::size_t
max_homopolymer_run(const dna_seq& u) noexcept;

/**
 * Decodes the index-th sequence of length n in canonical order, i.e. the
 * base-4 digits of index (most significant first) with A=0, C=1, G=2, T=3.
 */
[[nodiscard]] dna_seq
decode_index(std::uint64_t index, std::size_t n);

/**
 * Parses one sequence per line. Blank lines and lines starting with '#' are
 * skipped; anything else must be uppercase ACGT. Errors carry the 1-based
 * line number.
 */
[[nodiscard]] std::vector<dna_seq>
parse_sequences(std::istream& in);

[[nodiscard]] std::vector<dna_seq>
parse_sequences(std::string_view text);

void
write_sequences(std::ostream& out, const std::vector<dna_seq>& seqs);

} // namespace dnacode
