#include "dnacode/similarity.hpp"
#include "dnacode/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dnacode {

namespace {

void
require_same_length(const dna_seq& u, const dna_seq& v)
{
  if (u.size() != v.size()) {
    throw length_mismatch(u.size(), v.size());
  }
}

/** Category of the identical pair to the left, driving the weight state. */
enum class left_pair
{
  none,
  identical_gc,
  identical_at,
};

weight_state
state_of(left_pair left) noexcept
{
  switch (left) {
    case left_pair::identical_gc:
      return weight_state::s_alpha;
    case left_pair::identical_at:
      return weight_state::s_beta;
    default:
      return weight_state::s0;
  }
}

template<typename Sink>
void
allocate_weights(const dna_seq& u,
                 const dna_seq& v,
                 const alignment& a,
                 double alpha,
                 double beta,
                 Sink&& sink)
{
  const std::size_t n = u.size();
  const std::size_t begin = a.shift < 0 ? static_cast<std::size_t>(-a.shift) : 0;
  const std::size_t end = n - (a.shift > 0 ? static_cast<std::size_t>(a.shift) : 0);
  auto left = left_pair::none;
  for (std::size_t j = begin; j < end; ++j) {
    const char x = u.symbol(static_cast<std::size_t>(static_cast<long>(j) + a.shift));
    const char y = v.symbol(j);
    if (x != y) {
      sink(0.0);
      left = left_pair::none;
      continue;
    }
    const bool gc = x == 'G' || x == 'C';
    double weight = 1.0;
    if (gc) {
      switch (state_of(left)) {
        case weight_state::s_alpha:
          weight += alpha;
          break;
        case weight_state::s_beta:
          weight += beta;
          break;
        case weight_state::s0:
          break;
      }
    }
    sink(weight);
    left = gc ? left_pair::identical_gc : left_pair::identical_at;
  }
}

} // namespace

void
ss_params::validate() const
{
  for (const double w : { alpha1, beta1, alpha2, beta2 }) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw config_error("similarity weights must lie in [0, 1]");
    }
  }
}

std::string_view
to_string(model_kind kind) noexcept
{
  switch (kind) {
    case model_kind::hamming:
      return "hamming";
    case model_kind::edit:
      return "edit";
    case model_kind::ss:
      return "ss";
  }
  return "ss";
}

model_kind
model_kind_from_string(std::string_view name)
{
  if (name == "hamming") {
    return model_kind::hamming;
  } else if (name == "edit") {
    return model_kind::edit;
  } else if (name == "ss") {
    return model_kind::ss;
  }
  throw config_error("unknown model '" + std::string(name) +
                     "'; expected hamming, edit or ss");
}

std::size_t
hamming_distance(const dna_seq& u, const dna_seq& v)
{
  require_same_length(u, v);
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d += u.symbol(i) != v.symbol(i) ? 1 : 0;
  }
  return d;
}

std::size_t
edit_distance(const dna_seq& u, const dna_seq& v)
{
  const auto& a = u.str();
  const auto& b = v.str();
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) {
    row[j] = j;
  }
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({ up + 1, row[j - 1] + 1, diag + (a[i - 1] != b[j - 1] ? 1 : 0) });
      diag = up;
    }
  }
  return row[b.size()];
}

alignment
align_at_shift(const dna_seq& u, const dna_seq& v, int shift)
{
  require_same_length(u, v);
  const auto n = static_cast<int>(u.size());
  if (shift <= -n || shift >= n) {
    throw config_error("shift " + std::to_string(shift) + " leaves no overlap");
  }

  alignment a;
  a.shift = shift;
  a.epsilon = static_cast<std::size_t>(std::abs(shift));
  a.overlap_len = u.size() - a.epsilon;

  std::size_t matches = 0;
  std::size_t run = 0;
  const int begin = std::max(0, -shift);
  const int end = n - std::max(0, shift);
  for (int j = begin; j < end; ++j) {
    if (u.symbol(static_cast<std::size_t>(j + shift)) == v.symbol(static_cast<std::size_t>(j))) {
      ++matches;
      a.l = std::max(a.l, ++run);
    } else {
      run = 0;
    }
  }
  a.k = matches - a.l;
  a.f = 2 * a.l + a.k;
  return a;
}

alignment
best_alignment(const dna_seq& u, const dna_seq& v)
{
  require_same_length(u, v);
  const auto n = static_cast<int>(u.size());
  alignment best = align_at_shift(u, v, 0);
  // Visiting 0, -1, +1, -2, +2, ... and keeping only strict improvements
  // resolves (f, l) ties toward the smaller |shift|, negative first.
  for (int d = 1; d < n; ++d) {
    for (const int shift : { -d, d }) {
      const auto a = align_at_shift(u, v, shift);
      if (a.f > best.f || (a.f == best.f && a.l > best.l)) {
        best = a;
      }
    }
  }
  return best;
}

std::vector<double>
similarity_vector(const dna_seq& u,
                  const dna_seq& v,
                  const alignment& a,
                  double alpha,
                  double beta)
{
  require_same_length(u, v);
  std::vector<double> out;
  out.reserve(a.overlap_len);
  allocate_weights(u, v, a, alpha, beta, [&](double w) { out.push_back(w); });
  return out;
}

double
similarity_score(const dna_seq& u,
                 const dna_seq& v,
                 const alignment& a,
                 double alpha,
                 double beta)
{
  require_same_length(u, v);
  double sum = 0.0;
  allocate_weights(u, v, a, alpha, beta, [&](double w) { sum += w; });
  return sum;
}

double
self_score(const dna_seq& u, double alpha, double beta)
{
  alignment identity;
  identity.overlap_len = u.size();
  return similarity_score(u, u, identity, alpha, beta);
}

double
ss(const dna_seq& u, const dna_seq& v, const ss_params& p)
{
  require_same_length(u, v);
  if (u == v) {
    return 1.0;
  }
  // Mirrored shifts can tie under the alignment criterion yet carry
  // different weighted scores; aligning in a fixed order keeps ss symmetric.
  const auto& first = u < v ? u : v;
  const auto& second = u < v ? v : u;
  const auto a = best_alignment(first, second);
  const double cross = similarity_score(first, second, a, p.alpha1, p.beta1);
  const double self = std::min(self_score(u, p.alpha2, p.beta2),
                               self_score(v, p.alpha2, p.beta2));
  return cross / self;
}

double
ss_rc(const dna_seq& u, const dna_seq& v, const ss_params& p)
{
  return ss(u, reverse_complement(v), p);
}

double
model_measure(const similarity_model& model,
              const dna_seq& u,
              const dna_seq& v,
              bool rc_side)
{
  const dna_seq other = rc_side ? reverse_complement(v) : v;
  switch (model.kind) {
    case model_kind::hamming:
      return static_cast<double>(hamming_distance(u, other));
    case model_kind::edit:
      return static_cast<double>(edit_distance(u, other));
    case model_kind::ss:
      return ss(u, other, model.params);
  }
  return 0.0;
}

bool
violates(const similarity_model& model, double value, double threshold) noexcept
{
  if (model.is_distance()) {
    return value < threshold;
  }
  return value > threshold;
}

void
validate_threshold(const similarity_model& model, double threshold)
{
  if (model.is_distance()) {
    if (!(threshold >= 0.0) || std::floor(threshold) != threshold) {
      throw config_error("distance threshold must be a non-negative integer");
    }
  } else if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw config_error("similarity threshold must lie in [0, 1]");
  }
}

bool
model_similarity_exceeds(const similarity_model& model,
                         const dna_seq& u,
                         const dna_seq& v,
                         bool rc_side,
                         double threshold)
{
  validate_threshold(model, threshold);
  return violates(model, model_measure(model, u, v, rc_side), threshold);
}

} // namespace dnacode
