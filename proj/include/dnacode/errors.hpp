#pragma once

#include <stdexcept>
#include <string>

namespace dnacode {

/** Base class for all errors raised by the library. */
class dnacode_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/** Malformed sequence text, config files or MFE tables. */
class parse_error : public dnacode_error
{
public:
  using dnacode_error::dnacode_error;
};

/** Two sequences that must share a length do not. */
class length_mismatch : public dnacode_error
{
public:
  length_mismatch(std::size_t lhs, std::size_t rhs)
    : dnacode_error("sequence length mismatch: " + std::to_string(lhs) +
                    " vs " + std::to_string(rhs))
  {
  }
};

/** Parameter outside its documented domain. */
class config_error : public dnacode_error
{
public:
  using dnacode_error::dnacode_error;
};

/** Instance exceeds a configured size guard (enumeration cap, clique size). */
class capacity_error : public dnacode_error
{
public:
  using dnacode_error::dnacode_error;
};

/** File could not be opened, read or written. */
class io_error : public dnacode_error
{
public:
  using dnacode_error::dnacode_error;
};

} // namespace dnacode
