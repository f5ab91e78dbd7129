#pragma once

#include "dnacode/designer.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace dnacode {

/**
 * Settings for one CLI invocation. Config files hold one "key = value" per
 * line; '#' starts a comment. Recognized keys: n, gc_low, gc_high, run_max,
 * model, t_th, d_th, alpha1, beta1, alpha2, beta2, enumeration_cap,
 * mfe_table, match_sizes, out, label.
 */
struct run_config
{
  constraint_spec spec{};
  model_kind model = model_kind::ss;
  ss_params params{};
  std::optional<double> t_th{};
  std::optional<unsigned> d_th{};
  std::size_t enumeration_cap = default_enumeration_cap;
  std::string mfe_table{};
  bool match_sizes = false;
  std::string out{};
  std::string label{};
  /** Whether n came from a file or flag rather than the default. */
  bool n_given = false;

  /** Applies one key; throws config_error for unknown keys or bad values. */
  void set(std::string_view key, std::string_view value);

  /** Builds and validates the design parameters. */
  [[nodiscard]] design_config design() const;
};

/** Applies every line of a config file on top of cfg. */
void
apply_config(run_config& cfg, std::istream& in);

/** Reads a config file; throws parse_error with the offending line. */
[[nodiscard]] run_config
load_config(const std::string& path, run_config base = {});

} // namespace dnacode
