#include "dnacode/designer.hpp"
#include "dnacode/clique.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace dnacode {

namespace {

// n * t_th lands a hair below an integer for thresholds like 1 - 4/7.
constexpr double floor_slack = 1e-9;

} // namespace

void
design_config::validate() const
{
  spec.validate();
  if (enumeration_cap < 1) {
    throw config_error("enumeration cap must be at least 1");
  }
  if (model.is_distance()) {
    if (!d_th || t_th) {
      throw config_error(std::string(to_string(model.kind)) +
                         " model requires d_th and no t_th");
    }
    if (*d_th < 1) {
      throw config_error("d_th must be a positive integer");
    }
  } else {
    if (!t_th || d_th) {
      throw config_error("ss model requires t_th and no d_th");
    }
    validate_threshold(model, *t_th);
    model.params.validate();
  }
}

double
design_config::threshold() const
{
  if (model.is_distance()) {
    if (!d_th) {
      throw config_error("d_th is not set");
    }
    return static_cast<double>(*d_th);
  }
  if (!t_th) {
    throw config_error("t_th is not set");
  }
  return *t_th;
}

bool
check_candidate(const dna_seq& x,
                const std::vector<dna_seq>& words,
                const design_config& cfg)
{
  if (x.size() != cfg.spec.n) {
    throw length_mismatch(x.size(), cfg.spec.n);
  }
  if (!self_compatible(x, cfg)) {
    return false;
  }
  return std::all_of(words.begin(), words.end(), [&](const dna_seq& c) {
    return pair_compatible(x, c, cfg);
  });
}

std::size_t
suffix_length(std::size_t n, double t_th)
{
  if (!(t_th >= 0.0 && t_th <= 1.0)) {
    throw config_error("similarity threshold must lie in [0, 1]");
  }
  const auto kept = static_cast<std::size_t>(
    std::floor(static_cast<double>(n) * t_th + floor_slack));
  return std::min(n, kept + 1);
}

std::size_t
suffix_length_for_distance(std::size_t n, unsigned d_th)
{
  if (d_th >= n + 1) {
    return 1;
  }
  return std::clamp<std::size_t>(n - d_th + 1, 1, n);
}

std::size_t
suffix_length(const design_config& cfg)
{
  if (cfg.model.is_distance()) {
    return suffix_length_for_distance(cfg.spec.n, static_cast<unsigned>(cfg.threshold()));
  }
  return suffix_length(cfg.spec.n, cfg.threshold());
}

std::vector<suffix_group>
group_by_suffix(const std::vector<dna_seq>& candidates, std::size_t suffix_len)
{
  std::map<std::string, std::vector<dna_seq>> by_key;
  for (const auto& c : candidates) {
    if (suffix_len < 1 || suffix_len > c.size()) {
      throw config_error("suffix length " + std::to_string(suffix_len) +
                         " outside [1, " + std::to_string(c.size()) + "]");
    }
    by_key[c.str().substr(c.size() - suffix_len)].push_back(c);
  }

  std::vector<suffix_group> groups;
  groups.reserve(by_key.size());
  for (auto& [key, members] : by_key) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    groups.push_back(suffix_group{ key, std::move(members), false });
  }
  return groups;
}

group_index
sort_and_link(std::vector<suffix_group> groups)
{
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.members.size() != b.members.size()) {
      return a.members.size() < b.members.size();
    }
    return a.key < b.key;
  });

  std::vector<std::string> keys;
  keys.reserve(groups.size());
  for (const auto& g : groups) {
    keys.push_back(g.key);
  }

  group_index index;
  index.neighbor = link_nearest_keys(keys);
  index.groups = std::move(groups);
  return index;
}

code
search(const design_config& cfg, const std::vector<dna_seq>& candidates)
{
  cfg.validate();
  code result;
  result.config = cfg;
  if (candidates.empty()) {
    return result;
  }

  auto index = sort_and_link(group_by_suffix(candidates, suffix_length(cfg)));
  auto& groups = index.groups;
  // A group whose members all failed stays failed: the code only grows.
  std::vector<bool> exhausted(groups.size(), false);

  const auto try_group = [&](std::size_t g) {
    for (const auto& member : groups[g].members) {
      if (check_candidate(member, result.words, cfg)) {
        result.words.push_back(member);
        groups[g].eliminated = true;
        return true;
      }
    }
    exhausted[g] = true;
    return false;
  };

  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].eliminated || exhausted[g]) {
      continue;
    }
    if (!try_group(g)) {
      continue;
    }
    if (const auto y = index.neighbor[g]; y && !groups[*y].eliminated && !exhausted[*y]) {
      try_group(*y);
    }
  }
  return result;
}

code
search(const design_config& cfg)
{
  cfg.validate();
  return search(cfg, enumerate_constrained(cfg.spec, cfg.enumeration_cap));
}

std::size_t
brute_force_oracle(const design_config& cfg, const std::vector<dna_seq>& candidates)
{
  cfg.validate();
  std::vector<dna_seq> vertices;
  for (const auto& c : candidates) {
    if (self_compatible(c, cfg)) {
      vertices.push_back(c);
    }
  }
  if (vertices.size() > max_oracle_vertices) {
    throw capacity_error("oracle instance has " + std::to_string(vertices.size()) +
                         " vertices; the limit is " +
                         std::to_string(max_oracle_vertices));
  }
  if (vertices.empty()) {
    return 0;
  }
  return max_clique_size(build_compatibility_graph(vertices, cfg));
}

std::size_t
brute_force_oracle(const design_config& cfg)
{
  cfg.validate();
  return brute_force_oracle(cfg, enumerate_constrained(cfg.spec, cfg.enumeration_cap));
}

code
expurgate(const code& c, std::size_t m)
{
  if (m > c.size()) {
    throw config_error("cannot expurgate a code of size " + std::to_string(c.size()) +
                       " to " + std::to_string(m));
  }
  code out;
  out.config = c.config;
  out.words.assign(c.words.begin(), c.words.begin() + static_cast<std::ptrdiff_t>(m));
  return out;
}

} // namespace dnacode
