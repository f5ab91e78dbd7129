#pragma once

#include "dnacode/designer.hpp"
#include "dnacode/kernels.hpp"
#include "dnacode/mfe.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dnacode {

inline constexpr int report_schema_version = 1;

enum class clause
{
  self_rc,
  seq_seq,
  seq_rc,
  gc_content,
  homopolymer,
  length,
};

[[nodiscard]] std::string_view
to_string(clause c) noexcept;

[[nodiscard]] clause
clause_from_string(std::string_view name);

/** A broken constraint; j == i for per-word clauses. */
struct violation
{
  std::size_t i = 0;
  std::size_t j = 0;
  clause kind = clause::seq_seq;
  double value = 0.0;

  bool operator==(const violation&) const = default;
};

struct evaluation_report
{
  design_config config{};
  std::vector<dna_seq> words{};

  /** Largest significance over u != v; absent below two words. */
  std::optional<double> max_ssss{};
  /** Largest significance against an RC, self-RC terms included. */
  std::optional<double> max_srcss{};
  /** Significance gap, computed with config.model.params for every model. */
  std::optional<double> t_gap{};
  /** Smallest model distances; distance models only. */
  std::optional<double> min_seq_distance{};
  std::optional<double> min_rc_distance{};
  /** Free energy gap, when an MFE table was supplied. */
  std::optional<double> delta{};
  /** Single-word code: pair terms of the gaps are vacuous. */
  bool degenerate = false;

  /** Model measures for every ordered pair of words. */
  pair_measures measures{};
  std::vector<violation> violations{};

  [[nodiscard]] std::size_t size() const noexcept { return words.size(); }
  [[nodiscard]] bool valid() const noexcept { return violations.empty(); }

  bool operator==(const evaluation_report&) const = default;
};

/**
 * Re-derives every design constraint of the words from scratch: per-word
 * length, GC and homopolymer limits, self-RC, and all pairwise clauses.
 * Violations are reported, never thrown.
 */
[[nodiscard]] evaluation_report
validate_code(const std::vector<dna_seq>& words, const design_config& cfg);

[[nodiscard]] inline evaluation_report
validate_code(const code& c, const design_config& cfg)
{
  return validate_code(c.words, cfg);
}

/**
 * Significance gap: max over u of max over v != u of
 * {ss(u,u'), ss(u,v'), ss(u,v)}, minus ss(u,u) = 1. A single word reduces
 * to ss(u,u') - 1. Throws dnacode_error on an empty code.
 */
[[nodiscard]] double
t_gap(const std::vector<dna_seq>& words, const ss_params& p);

[[nodiscard]] nlohmann::json
to_json(const design_config& cfg);

[[nodiscard]] design_config
design_config_from_json(const nlohmann::json& j);

[[nodiscard]] nlohmann::json
to_json(const evaluation_report& report);

[[nodiscard]] evaluation_report
report_from_json(const nlohmann::json& j);

/** Human-readable summary of a report. */
[[nodiscard]] std::string
format_report(const evaluation_report& report);

/** One design run within a model comparison. */
struct comparison_row
{
  std::string label{};
  design_config config{};
  /** Size produced by search, before any expurgation. */
  std::size_t searched_size = 0;
  code result{};
  evaluation_report report{};
  std::vector<mfe_pair> manifest{};
};

/**
 * Runs search for every config. With match_sizes, larger codes are
 * expurgated down to the smallest size. Configs must share n; labels, when
 * given, must match cfgs in length.
 */
[[nodiscard]] std::vector<comparison_row>
compare_models(const std::vector<design_config>& cfgs,
               bool match_sizes,
               const std::vector<std::string>& labels = {});

/** Tab-separated comparison table, one row per config. */
void
write_comparison_table(std::ostream& out, const std::vector<comparison_row>& rows);

} // namespace dnacode
