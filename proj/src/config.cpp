#include "dnacode/config.hpp"
#include "dnacode/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>

namespace dnacode {

namespace {

std::string_view
trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template<typename T>
T
parse_number(std::string_view key, std::string_view value)
{
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw config_error("invalid value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool
parse_bool(std::string_view key, std::string_view value)
{
  if (value == "true" || value == "1" || value == "yes") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no") {
    return false;
  }
  throw config_error("invalid boolean '" + std::string(value) + "' for " + std::string(key));
}

} // namespace

void
run_config::set(std::string_view key, std::string_view value)
{
  value = trim(value);
  if (key == "n") {
    spec.n = parse_number<std::size_t>(key, value);
    n_given = true;
  } else if (key == "gc_low") {
    spec.gc_low = parse_number<double>(key, value);
  } else if (key == "gc_high") {
    spec.gc_high = parse_number<double>(key, value);
  } else if (key == "run_max") {
    spec.run_max = parse_number<std::size_t>(key, value);
  } else if (key == "model") {
    model = model_kind_from_string(value);
  } else if (key == "t_th") {
    t_th = parse_number<double>(key, value);
  } else if (key == "d_th") {
    d_th = parse_number<unsigned>(key, value);
  } else if (key == "alpha1") {
    params.alpha1 = parse_number<double>(key, value);
  } else if (key == "beta1") {
    params.beta1 = parse_number<double>(key, value);
  } else if (key == "alpha2") {
    params.alpha2 = parse_number<double>(key, value);
  } else if (key == "beta2") {
    params.beta2 = parse_number<double>(key, value);
  } else if (key == "enumeration_cap") {
    enumeration_cap = parse_number<std::size_t>(key, value);
  } else if (key == "mfe_table") {
    mfe_table = std::string(value);
  } else if (key == "match_sizes") {
    match_sizes = parse_bool(key, value);
  } else if (key == "out") {
    out = std::string(value);
  } else if (key == "label") {
    label = std::string(value);
  } else {
    throw config_error("unknown config key '" + std::string(key) + "'");
  }
}

design_config
run_config::design() const
{
  design_config cfg;
  cfg.spec = spec;
  cfg.model = similarity_model{ model, params };
  cfg.t_th = t_th;
  cfg.d_th = d_th;
  cfg.enumeration_cap = enumeration_cap;
  cfg.validate();
  return cfg;
}

void
apply_config(run_config& cfg, std::istream& in)
{
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) {
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw parse_error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      cfg.set(trim(body.substr(0, eq)), body.substr(eq + 1));
    } catch (const config_error& e) {
      throw parse_error("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

run_config
load_config(const std::string& path, run_config base)
{
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open config file '" + path + "'");
  }
  apply_config(base, in);
  return base;
}

} // namespace dnacode
