#include "dnacode/clique.hpp"
#include "dnacode/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dnacode {

namespace {

using bitset_row = std::vector<std::uint64_t>;

bool
any(const bitset_row& s) noexcept
{
  return std::any_of(s.begin(), s.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t
first_bit(const bitset_row& s) noexcept
{
  for (std::size_t w = 0; w < s.size(); ++w) {
    if (s[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(s[w]));
    }
  }
  return s.size() * 64;
}

void
reset_bit(bitset_row& s, std::size_t v) noexcept
{
  s[v / 64] &= ~(std::uint64_t{ 1 } << (v % 64));
}

class clique_solver
{
public:
  explicit clique_solver(const bit_graph& g)
    : m_graph(g)
  {
  }

  std::size_t solve()
  {
    bitset_row all(m_graph.words_per_row(), 0);
    for (std::size_t v = 0; v < m_graph.size(); ++v) {
      all[v / 64] |= std::uint64_t{ 1 } << (v % 64);
    }
    m_best = m_graph.size() > 0 ? 1 : 0;
    expand(0, all);
    return m_best;
  }

private:
  /** Greedy sequential colouring; colours bound the clique within P. */
  void colour(const bitset_row& candidates,
              std::vector<std::size_t>& order,
              std::vector<std::size_t>& bounds) const
  {
    bitset_row uncoloured = candidates;
    std::size_t colour_no = 0;
    while (any(uncoloured)) {
      ++colour_no;
      bitset_row q = uncoloured;
      while (any(q)) {
        const auto v = first_bit(q);
        reset_bit(q, v);
        reset_bit(uncoloured, v);
        const auto* adj = m_graph.row(v);
        for (std::size_t w = 0; w < q.size(); ++w) {
          q[w] &= ~adj[w];
        }
        order.push_back(v);
        bounds.push_back(colour_no);
      }
    }
  }

  void expand(std::size_t depth, bitset_row candidates)
  {
    std::vector<std::size_t> order;
    std::vector<std::size_t> bounds;
    colour(candidates, order, bounds);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (depth + bounds[idx] <= m_best) {
        return;
      }
      const auto v = order[idx];
      bitset_row next(candidates.size());
      const auto* adj = m_graph.row(v);
      for (std::size_t w = 0; w < next.size(); ++w) {
        next[w] = candidates[w] & adj[w];
      }
      if (any(next)) {
        expand(depth + 1, std::move(next));
      } else {
        m_best = std::max(m_best, depth + 1);
      }
      reset_bit(candidates, v);
    }
  }

  const bit_graph& m_graph;
  std::size_t m_best = 0;
};

} // namespace

bit_graph::bit_graph(std::size_t vertices)
  : m_size(vertices)
  , m_words((vertices + 63) / 64)
  , m_bits(m_size * m_words, 0)
{
}

void
bit_graph::add_edge(std::size_t u, std::size_t v)
{
  if (u >= m_size || v >= m_size || u == v) {
    throw config_error("invalid edge");
  }
  m_bits[u * m_words + v / 64] |= std::uint64_t{ 1 } << (v % 64);
  m_bits[v * m_words + u / 64] |= std::uint64_t{ 1 } << (u % 64);
}

bool
bit_graph::has_edge(std::size_t u, std::size_t v) const noexcept
{
  return ((m_bits[u * m_words + v / 64] >> (v % 64)) & 1U) != 0;
}

std::size_t
bit_graph::edge_count() const noexcept
{
  std::size_t bits = 0;
  for (const auto w : m_bits) {
    bits += static_cast<std::size_t>(std::popcount(w));
  }
  return bits / 2;
}

std::size_t
max_clique_size(const bit_graph& g)
{
  // Relabel by descending degree; colouring then bounds far more tightly.
  std::vector<std::size_t> degree(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t w = 0; w < g.words_per_row(); ++w) {
      degree[v] += static_cast<std::size_t>(std::popcount(g.row(v)[w]));
    }
  }
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{ 0 });
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  bit_graph relabelled(g.size());
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (g.has_edge(order[a], order[b])) {
        relabelled.add_edge(a, b);
      }
    }
  }
  return clique_solver(relabelled).solve();
}

} // namespace dnacode
