#include "dnacode/sequence.hpp"
#include "dnacode/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dnacode {

char
to_char(base b) noexcept
{
  constexpr char symbols[] = { 'A', 'C', 'G', 'T' };
  return symbols[static_cast<std::uint8_t>(b)];
}

base
base_from_char(char c)
{
  switch (c) {
    case 'A':
      return base::A;
    case 'C':
      return base::C;
    case 'G':
      return base::G;
    case 'T':
      return base::T;
    default:
      throw parse_error(std::string("invalid base '") + c + "'");
  }
}

dna_seq::dna_seq(std::string_view text)
  : m_bases(text)
{
  if (m_bases.empty()) {
    throw parse_error("empty sequence");
  }
  for (const char c : m_bases) {
    static_cast<void>(base_from_char(c));
  }
}

std::ostream&
operator<<(std::ostream& os, const dna_seq& seq)
{
  return os << seq.str();
}

dna_seq
reverse_complement(const dna_seq& u)
{
  std::string out(u.size(), 'A');
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[u.size() - 1 - i] = to_char(complement(u[i]));
  }
  return dna_seq{ std::move(out), dna_seq::trusted{} };
}

std::size_t
gc_count(const dna_seq& u) noexcept
{
  const auto& s = u.str();
  return static_cast<std::size_t>(
    std::count_if(s.begin(), s.end(), [](char c) { return c == 'G' || c == 'C'; }));
}

double
gc_fraction(const dna_seq& u) noexcept
{
  return static_cast<double>(gc_count(u)) / static_cast<double>(u.size());
}

std::size_t
max_homopolymer_run(const dna_seq& u) noexcept
{
  const auto& s = u.str();
  std::size_t best = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    run = s[i] == s[i - 1] ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

dna_seq
decode_index(std::uint64_t index, std::size_t n)
{
  std::string out(n, 'A');
  for (std::size_t i = n; i-- > 0;) {
    out[i] = to_char(static_cast<base>(index & 3U));
    index >>= 2U;
  }
  return dna_seq{ std::move(out), dna_seq::trusted{} };
}

std::vector<dna_seq>
parse_sequences(std::istream& in)
{
  std::vector<dna_seq> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    try {
      out.emplace_back(line);
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<dna_seq>
parse_sequences(std::string_view text)
{
  std::istringstream in{ std::string(text) };
  return parse_sequences(in);
}

void
write_sequences(std::ostream& out, const std::vector<dna_seq>& seqs)
{
  for (const auto& s : seqs) {
    out << s.str() << '\n';
  }
}

} // namespace dnacode
