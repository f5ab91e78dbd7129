#pragma once

#include "dnacode/errors.hpp"
#include "dnacode/sequence.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dnacode {

/** Hybridization category of an ordered strand pair. */
enum class pair_role
{
  self_fold, // (u, u)
  seq_seq,   // (u, v)
  seq_rc,    // (u, v')
  rc_rc,     // (u', v')
  perfect,   // (u, u')
};

[[nodiscard]] std::string_view
to_string(pair_role role) noexcept;

[[nodiscard]] pair_role
pair_role_from_string(std::string_view tag);

/** One record of the pair manifest handed to an external MFE tool. */
struct mfe_pair
{
  std::string id{};
  pair_role role = pair_role::self_fold;
  std::string seq1{};
  std::string seq2{};

  bool operator==(const mfe_pair&) const = default;
};

/** Temperature convention written into every manifest header. */
inline constexpr std::string_view manifest_temperature = "37C";

/**
 * Every ordered pair needed for the free energy gap: (u,u) and (u,u') per
 * word, then (u,v), (u,v') and (u',v') per ordered pair u != v. Records
 * whose (seq1, seq2) repeat an earlier record are dropped. Ids are P1, P2,
 * ... in emission order.
 */
[[nodiscard]] std::vector<mfe_pair>
export_mfe_pairs(const std::vector<dna_seq>& words);

/** Tab-separated: id, role tag, seq1, seq2; header "# temperature=37C". */
void
write_manifest(std::ostream& out, const std::vector<mfe_pair>& pairs);

[[nodiscard]] std::vector<mfe_pair>
parse_manifest(std::istream& in);

using strand_pair = std::pair<std::string, std::string>;

/** Minimum free energies (kcal/mol) keyed by ordered strand pair. */
class mfe_table
{
public:
  void set(std::string seq1, std::string seq2, double dg);
  [[nodiscard]] const double* find(const std::string& seq1,
                                   const std::string& seq2) const noexcept;
  [[nodiscard]] std::size_t size() const noexcept { return m_entries.size(); }

  std::string temperature_label{};

private:
  std::map<strand_pair, double> m_entries{};
};

/**
 * Reads "seq1<TAB>seq2<TAB>dG" or "id<TAB>dG" records; ids resolve through
 * the manifest. Lines starting with '#' are comments, and a
 * "# temperature=..." comment sets the label. Unparseable lines throw
 * parse_error naming the line.
 */
[[nodiscard]] mfe_table
parse_mfe_table(std::istream& in, const std::vector<mfe_pair>& manifest = {});

/** Required table entries that were absent. */
class missing_mfe_entries : public dnacode_error
{
public:
  explicit missing_mfe_entries(std::vector<strand_pair> missing);

  [[nodiscard]] const std::vector<strand_pair>& missing() const noexcept
  {
    return m_missing;
  }

private:
  std::vector<strand_pair> m_missing;
};

/** Positive free energies carry no hybridization potential and count as 0. */
[[nodiscard]] constexpr double
clamp_mfe(double dg) noexcept
{
  return dg > 0.0 ? 0.0 : dg;
}

/**
 * Free energy gap: the minimum over u of the smallest undesirable energy
 * (self-fold, and for every v != u the seq-seq, seq-RC and RC-RC energies)
 * minus the perfect duplex energy of u. Entries are clamped first. A
 * single-word code uses its self-fold energy alone. Throws
 * missing_mfe_entries listing every absent pair, or dnacode_error for an
 * empty code.
 */
[[nodiscard]] double
free_energy_gap(const std::vector<dna_seq>& words, const mfe_table& table);

} // namespace dnacode
