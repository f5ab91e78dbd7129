#include "dnacode/mfe.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace dnacode {

namespace {

std::vector<std::string>
split_tabs(const std::string& line)
{
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) {
      return fields;
    }
    start = tab + 1;
  }
}

std::string
strip_cr(std::string line)
{
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

double
parse_energy(const std::string& text)
{
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw parse_error("invalid free energy '" + text + "'");
  }
  return value;
}

std::string
checked_strand(const std::string& text)
{
  return dna_seq{ text }.str();
}

} // namespace

std::string_view
to_string(pair_role role) noexcept
{
  switch (role) {
    case pair_role::self_fold:
      return "SELF_FOLD";
    case pair_role::seq_seq:
      return "SEQ_SEQ";
    case pair_role::seq_rc:
      return "SEQ_RC";
    case pair_role::rc_rc:
      return "RC_RC";
    case pair_role::perfect:
      return "PERFECT";
  }
  return "SELF_FOLD";
}

pair_role
pair_role_from_string(std::string_view tag)
{
  for (const auto role : { pair_role::self_fold, pair_role::seq_seq, pair_role::seq_rc,
                           pair_role::rc_rc, pair_role::perfect }) {
    if (to_string(role) == tag) {
      return role;
    }
  }
  throw parse_error("unknown pair role '" + std::string(tag) + "'");
}

std::vector<mfe_pair>
export_mfe_pairs(const std::vector<dna_seq>& words)
{
  std::vector<mfe_pair> out;
  std::set<strand_pair> seen;
  const auto emit = [&](pair_role role, const dna_seq& a, const dna_seq& b) {
    if (seen.emplace(a.str(), b.str()).second) {
      out.push_back(mfe_pair{ "P" + std::to_string(out.size() + 1), role, a.str(), b.str() });
    }
  };

  std::vector<dna_seq> rcs;
  rcs.reserve(words.size());
  for (const auto& w : words) {
    rcs.push_back(reverse_complement(w));
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    emit(pair_role::self_fold, words[i], words[i]);
    emit(pair_role::perfect, words[i], rcs[i]);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (j == i) {
        continue;
      }
      emit(pair_role::seq_seq, words[i], words[j]);
      emit(pair_role::seq_rc, words[i], rcs[j]);
      emit(pair_role::rc_rc, rcs[i], rcs[j]);
    }
  }
  return out;
}

void
write_manifest(std::ostream& out, const std::vector<mfe_pair>& pairs)
{
  out << "# temperature=" << manifest_temperature << '\n';
  out << "# pair_id\trole\tseq1\tseq2\n";
  for (const auto& p : pairs) {
    out << p.id << '\t' << to_string(p.role) << '\t' << p.seq1 << '\t' << p.seq2 << '\n';
  }
}

std::vector<mfe_pair>
parse_manifest(std::istream& in)
{
  std::vector<mfe_pair> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (line.empty() || line.front() == '#') {
      continue;
    }
    try {
      const auto fields = split_tabs(line);
      if (fields.size() != 4) {
        throw parse_error("expected 4 tab-separated fields");
      }
      out.push_back(mfe_pair{ fields[0], pair_role_from_string(fields[1]),
                              checked_strand(fields[2]), checked_strand(fields[3]) });
    } catch (const parse_error& e) {
      throw parse_error("manifest line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void
mfe_table::set(std::string seq1, std::string seq2, double dg)
{
  const auto [it, inserted] = m_entries.emplace(strand_pair{ std::move(seq1), std::move(seq2) }, dg);
  if (!inserted && it->second != dg) {
    throw parse_error("conflicting free energies for " + it->first.first + "/" +
                      it->first.second);
  }
}

const double*
mfe_table::find(const std::string& seq1, const std::string& seq2) const noexcept
{
  const auto it = m_entries.find(strand_pair{ seq1, seq2 });
  return it == m_entries.end() ? nullptr : &it->second;
}

mfe_table
parse_mfe_table(std::istream& in, const std::vector<mfe_pair>& manifest)
{
  mfe_table table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      constexpr std::string_view tag = "# temperature=";
      if (line.starts_with(tag)) {
        table.temperature_label = line.substr(tag.size());
      }
      continue;
    }
    try {
      const auto fields = split_tabs(line);
      if (fields.size() == 3) {
        table.set(checked_strand(fields[0]), checked_strand(fields[1]), parse_energy(fields[2]));
      } else if (fields.size() == 2) {
        const auto it = std::find_if(manifest.begin(), manifest.end(),
                                     [&](const mfe_pair& p) { return p.id == fields[0]; });
        if (it == manifest.end()) {
          throw parse_error("unknown pair id '" + fields[0] + "'");
        }
        table.set(it->seq1, it->seq2, parse_energy(fields[1]));
      } else {
        throw parse_error("expected 'seq1<TAB>seq2<TAB>dG' or 'id<TAB>dG'");
      }
    } catch (const parse_error& e) {
      throw parse_error("MFE table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

namespace {

std::string
describe_missing(const std::vector<strand_pair>& missing)
{
  std::ostringstream msg;
  msg << missing.size() << " MFE table entr" << (missing.size() == 1 ? "y" : "ies")
      << " missing:";
  for (const auto& [a, b] : missing) {
    msg << ' ' << a << '/' << b;
  }
  return msg.str();
}

} // namespace

missing_mfe_entries::missing_mfe_entries(std::vector<strand_pair> missing)
  : dnacode_error(describe_missing(missing))
  , m_missing(std::move(missing))
{
}

double
free_energy_gap(const std::vector<dna_seq>& words, const mfe_table& table)
{
  if (words.empty()) {
    throw dnacode_error("free energy gap of an empty code");
  }

  std::vector<strand_pair> missing;
  std::set<strand_pair> reported;
  const auto energy = [&](const dna_seq& a, const dna_seq& b) {
    if (const auto* dg = table.find(a.str(), b.str())) {
      return clamp_mfe(*dg);
    }
    if (reported.emplace(a.str(), b.str()).second) {
      missing.emplace_back(a.str(), b.str());
    }
    return 0.0;
  };

  std::vector<dna_seq> rcs;
  for (const auto& w : words) {
    rcs.push_back(reverse_complement(w));
  }

  double delta = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < words.size(); ++i) {
    double undesirable = energy(words[i], words[i]);
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (j != i) {
        undesirable = std::min({ undesirable, energy(words[i], words[j]),
                                 energy(words[i], rcs[j]), energy(rcs[i], rcs[j]) });
      }
    }
    delta = std::min(delta, undesirable - energy(words[i], rcs[i]));
  }

  if (!missing.empty()) {
    throw missing_mfe_entries(std::move(missing));
  }
  return delta;
}

} // namespace dnacode
