#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dnacode {

/** Undirected simple graph stored as adjacency bit rows. */
class bit_graph
{
public:
  explicit bit_graph(std::size_t vertices);

  [[nodiscard]] std::size_t size() const noexcept { return m_size; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return m_words; }

  void add_edge(std::size_t u, std::size_t v);
  [[nodiscard]] bool has_edge(std::size_t u, std::size_t v) const noexcept;
  [[nodiscard]] std::size_t edge_count() const noexcept;

  [[nodiscard]] const std::uint64_t* row(std::size_t u) const noexcept
  {
    return m_bits.data() + u * m_words;
  }

  bool operator==(const bit_graph&) const = default;

private:
  std::size_t m_size;
  std::size_t m_words;
  std::vector<std::uint64_t> m_bits;
};

/**
 * Exact maximum clique size by branch and bound with greedy-colouring
 * bounds over bitsets.
 */
[[nodiscard]] std::size_t
max_clique_size(const bit_graph& g);

} // namespace dnacode
