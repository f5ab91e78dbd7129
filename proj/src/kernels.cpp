#include "dnacode/kernels.hpp"
#include "dnacode/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace dnacode {

namespace {

std::size_t
key_distance(const std::string& a, const std::string& b) noexcept
{
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i] ? 1 : 0;
  }
  return d;
}

void
require_uniform_keys(const std::vector<std::string>& keys)
{
  for (const auto& k : keys) {
    if (k.size() != keys.front().size()) {
      throw length_mismatch(k.size(), keys.front().size());
    }
  }
}

std::optional<std::size_t>
nearest_by_scan(const std::vector<std::string>& keys, std::size_t i)
{
  std::optional<std::size_t> best;
  std::size_t best_dist = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < keys.size(); ++j) {
    if (j == i) {
      continue;
    }
    const auto d = key_distance(keys[i], keys[j]);
    if (d < best_dist || (d == best_dist && keys[j] < keys[*best])) {
      best = j;
      best_dist = d;
    }
  }
  return best;
}

/** Number of strings at exactly Hamming distance r from a length-len key. */
double
sphere_size(std::size_t len, std::size_t r)
{
  double binom = 1.0;
  for (std::size_t i = 0; i < r; ++i) {
    binom = binom * static_cast<double>(len - i) / static_cast<double>(i + 1);
  }
  return binom * std::pow(3.0, static_cast<double>(r));
}

/** Visits every variant of key at exactly distance r (positions from `from`). */
template<typename Visit>
void
visit_sphere(std::string& key, std::size_t from, std::size_t r, Visit&& visit)
{
  if (r == 0) {
    visit(key);
    return;
  }
  for (std::size_t pos = from; pos + r <= key.size(); ++pos) {
    const char original = key[pos];
    for (const char c : { 'A', 'C', 'G', 'T' }) {
      if (c == original) {
        continue;
      }
      key[pos] = c;
      visit_sphere(key, pos + 1, r - 1, visit);
    }
    key[pos] = original;
  }
}

/**
 * Grows Hamming spheres around the key until one hits another key; falls
 * back to a full scan once a sphere would outnumber the keys.
 */
std::optional<std::size_t>
nearest_by_spheres(const std::vector<std::string>& keys,
                   const std::unordered_map<std::string, std::size_t>& lookup,
                   std::size_t i)
{
  const std::size_t len = keys[i].size();
  std::string probe = keys[i];
  for (std::size_t r = 1; r <= len; ++r) {
    if (sphere_size(len, r) > static_cast<double>(keys.size())) {
      return nearest_by_scan(keys, i);
    }
    std::optional<std::size_t> best;
    visit_sphere(probe, 0, r, [&](const std::string& variant) {
      if (const auto it = lookup.find(variant); it != lookup.end()) {
        if (!best || keys[it->second] < keys[*best]) {
          best = it->second;
        }
      }
    });
    if (best) {
      return best;
    }
  }
  return nearest_by_scan(keys, i);
}

pair_measures
empty_measures(std::size_t m)
{
  pair_measures out;
  out.direct.size = m;
  out.direct.values.assign(m * m, 0.0);
  out.rc.size = m;
  out.rc.values.assign(m * m, 0.0);
  return out;
}

void
fill_measures(pair_measures& out,
              const std::vector<dna_seq>& words,
              const std::vector<dna_seq>& rcs,
              const similarity_model& model,
              std::size_t i,
              std::size_t j)
{
  const auto m = words.size();
  const auto measure = [&](const dna_seq& a, const dna_seq& b) {
    switch (model.kind) {
      case model_kind::hamming:
        return static_cast<double>(hamming_distance(a, b));
      case model_kind::edit:
        return static_cast<double>(edit_distance(a, b));
      case model_kind::ss:
        return ss(a, b, model.params);
    }
    return 0.0;
  };
  out.direct.values[i * m + j] = measure(words[i], words[j]);
  out.rc.values[i * m + j] = measure(words[i], rcs[j]);
}

std::vector<dna_seq>
reverse_complements(const std::vector<dna_seq>& words)
{
  std::vector<dna_seq> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    out.push_back(reverse_complement(w));
  }
  return out;
}

void
require_uniform_words(const std::vector<dna_seq>& words)
{
  for (const auto& w : words) {
    if (w.size() != words.front().size()) {
      throw length_mismatch(w.size(), words.front().size());
    }
  }
}

bit_graph
graph_from_flags(std::size_t m, const std::vector<std::uint8_t>& compatible)
{
  bit_graph g(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (compatible[i * m + j] != 0) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

} // namespace

bool
self_compatible(const dna_seq& x, const design_config& cfg)
{
  return !violates(cfg.model, model_measure(cfg.model, x, x, true), cfg.threshold());
}

bool
pair_compatible(const dna_seq& x, const dna_seq& c, const design_config& cfg)
{
  const double t = cfg.threshold();
  const auto& model = cfg.model;
  return !violates(model, model_measure(model, x, c, false), t) &&
         !violates(model, model_measure(model, x, c, true), t) &&
         !violates(model, model_measure(model, c, x, true), t);
}

pair_measures
compute_pair_measures_serial(const std::vector<dna_seq>& words,
                             const similarity_model& model)
{
  require_uniform_words(words);
  const auto rcs = reverse_complements(words);
  auto out = empty_measures(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      fill_measures(out, words, rcs, model, i, j);
    }
  }
  return out;
}

pair_measures
compute_pair_measures(const std::vector<dna_seq>& words, const similarity_model& model)
{
  require_uniform_words(words);
  const auto rcs = reverse_complements(words);
  const auto m = static_cast<std::int64_t>(words.size());
  auto out = empty_measures(words.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 0; j < m; ++j) {
      fill_measures(out, words, rcs, model, static_cast<std::size_t>(i),
                    static_cast<std::size_t>(j));
    }
  }
  return out;
}

std::vector<std::optional<std::size_t>>
link_nearest_keys_serial(const std::vector<std::string>& keys)
{
  require_uniform_keys(keys);
  std::vector<std::optional<std::size_t>> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = nearest_by_scan(keys, i);
  }
  return out;
}

std::vector<std::optional<std::size_t>>
link_nearest_keys(const std::vector<std::string>& keys)
{
  require_uniform_keys(keys);
  std::unordered_map<std::string, std::size_t> lookup;
  lookup.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!lookup.emplace(keys[i], i).second) {
      throw config_error("duplicate group key '" + keys[i] + "'");
    }
  }

  std::vector<std::optional<std::size_t>> out(keys.size());
  const auto count = static_cast<std::int64_t>(keys.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
      nearest_by_spheres(keys, lookup, static_cast<std::size_t>(i));
  }
  return out;
}

bit_graph
build_compatibility_graph_serial(const std::vector<dna_seq>& vertices,
                                 const design_config& cfg)
{
  const auto m = vertices.size();
  std::vector<std::uint8_t> compatible(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      compatible[i * m + j] = pair_compatible(vertices[i], vertices[j], cfg) ? 1 : 0;
    }
  }
  return graph_from_flags(m, compatible);
}

bit_graph
build_compatibility_graph(const std::vector<dna_seq>& vertices, const design_config& cfg)
{
  const auto m = vertices.size();
  std::vector<std::uint8_t> compatible(m * m, 0);
  const auto count = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto row = static_cast<std::size_t>(i);
    for (std::size_t j = row + 1; j < m; ++j) {
      compatible[row * m + j] = pair_compatible(vertices[row], vertices[j], cfg) ? 1 : 0;
    }
  }
  return graph_from_flags(m, compatible);
}

} // namespace dnacode
