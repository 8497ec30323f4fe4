#pragma once

// The evolutionary sieve core: pairwise reduction as recombination, norm as
// fitness, and two survivor-selection schemes. The local scheme replaces the
// longer parent in place the moment a shorter child appears; the global
// scheme pools parents and children and keeps the fittest. Either can mutate
// accepted children by adding or removing a single basis vector.
//
// Every generation operation is templated over the scalar type. run_sieve
// instantiates the int64 engine whenever the reduced basis and the initial
// population fit the range caps below, and replays with BigInt points
// otherwise, so results are exact in both regimes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evosieve/basis.hpp"
#include "evosieve/bigint.hpp"
#include "evosieve/errors.hpp"
#include "evosieve/point.hpp"
#include "evosieve/population.hpp"
#include "evosieve/rng.hpp"
#include "evosieve/sampler.hpp"

namespace evosieve {

enum class Variant { local, global, local_mut, global_mut };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

struct SieveConfig {
  Variant variant = Variant::local;
  int pop_size = 0;  // 0 means default_pop_size(dim)
  double mutation_rate = 0.1;
  std::uint64_t seed = 0;
  int max_generations = 1000;
  int stale_generations = 3;
  SamplerParams sampler{};
  Rational lll_delta = Rational(99, 100);
};

struct GenerationStats {
  int generation = 0;
  int pop_size = 0;
  double avg_norm = 0.0;  // mean Euclidean norm
  double min_norm = 0.0;
  std::int64_t replacements = 0;  // surviving children this generation
  std::int64_t cumulative_replacements = 0;
  std::int64_t wall_ms = 0;
};

enum class Termination { stagnation, no_updates, max_generations };

const char* termination_name(Termination t);

struct SieveResult {
  SieveConfig config;
  BasisMatrix reduced_basis;  // the basis the run operated on after LLL
  LatticePoint best;          // shortest vector ever created during the run
  Population final_population;
  std::vector<GenerationStats> trail;
  std::vector<BigInt> best_norm_sq_trail;  // best-ever after each generation
  Termination terminated_by;
};

// ceil(5 * (4/3)^(d/2)), floored at 200.
int default_pop_size(int dim);

// --- engine range caps (int64 instantiation only) ---
//
// Every point inserted into a population or candidate pool must satisfy
// these caps; then all intermediate products and sums in the generation
// operations stay below 2^62 for d <= 50 and cannot overflow.

inline constexpr std::int64_t kEngineNormCap = std::int64_t{1} << 56;
inline constexpr std::int64_t kEngineCoeffCap = std::int64_t{1} << 31;

inline void ensure_engine_range(const SmallPoint& p) {
  if (p.norm_sq > kEngineNormCap) {
    throw EngineRangeError("norm_sq beyond int64 engine cap");
  }
  for (const std::int64_t c : p.coeffs) {
    if (c > kEngineCoeffCap || c < -kEngineCoeffCap) {
      throw EngineRangeError("coefficient beyond int64 engine cap");
    }
  }
}

inline void ensure_engine_range(const LatticePoint&) {}

// --- best-ever tracking ---
//
// Children rejected by reduce_pair are at least as long as their longer
// parent, which is never shorter than the population minimum, so offering
// accepted children, mutated children and initial samples is exhaustive.

template <class I>
struct BestTracker {
  PointT<I> best{};
  bool has = false;

  void offer(const PointT<I>& p) {
    if (!has || p.norm_sq < best.norm_sq) {
      best = p;
      has = true;
    }
  }
};

// Population norm statistics. Norms are summed in ascending order so that a
// pointwise-dominated population always reports a smaller-or-equal average,
// even in floating point.
template <class I>
struct NormSummary {
  double avg = 0.0;
  double min = 0.0;
  I min_sq{};
};

template <class I>
NormSummary<I> norm_summary(const PopulationT<I>& pop) {
  std::vector<I> norms;
  norms.reserve(pop.size());
  for (const PointT<I>& p : pop.members()) norms.push_back(p.norm_sq);
  std::sort(norms.begin(), norms.end());
  NormSummary<I> s;
  double sum = 0.0;
  for (const I& n : norms) sum += std::sqrt(to_double(n));
  s.avg = sum / static_cast<double>(norms.size());
  s.min_sq = norms.front();
  s.min = std::sqrt(to_double(s.min_sq));
  return s;
}

// --- recombination and mutation ---

// The child u = v - w (canonical), kept iff it is shorter than the longer
// parent. The rejection path needs only one inner product.
template <class I>
std::optional<PointT<I>> reduce_pair(const PointT<I>& v, const PointT<I>& w) {
  I ip = dot(v.coords, w.coords);
  I child_norm = v.norm_sq + w.norm_sq - ip - ip;
  const I& longer = v.norm_sq >= w.norm_sq ? v.norm_sq : w.norm_sq;
  if (child_norm == 0 || child_norm >= longer) return std::nullopt;
  auto u = sub_points(v, w);
  assert(u && u->norm_sq == child_norm);
  return u;
}

// Candidate admission for global selection: the child only has to beat the
// longest vector currently in the population, not its own parents.
template <class I>
std::optional<PointT<I>> pool_candidate(const PointT<I>& v, const PointT<I>& w,
                                        const I& worst_parent_norm_sq) {
  I ip = dot(v.coords, w.coords);
  I child_norm = v.norm_sq + w.norm_sq - ip - ip;
  if (child_norm == 0 || child_norm > worst_parent_norm_sq) return std::nullopt;
  auto u = sub_points(v, w);
  assert(u && u->norm_sq == child_norm);
  return u;
}

// Adds or removes one uniformly chosen basis vector. If that cancels the
// point to zero, the original point is returned unchanged. Draw order:
// index, then sign.
template <class I>
PointT<I> mutate(const PointT<I>& p, const Matrix<I>& basis, Rng& rng) {
  const std::size_t index = static_cast<std::size_t>(rng.below(basis.size()));
  const int sign = rng.below(2) == 0 ? 1 : -1;
  auto q = add_signed_basis_vector(p, index, sign, basis);
  return q ? std::move(*q) : p;
}

// --- one generation, local replacement ---
//
// Walks all index pairs (i < j) of the current population state, so a
// replacement is visible to every later pair in the same pass. Acceptance
// judges the unmutated child; mutation applies to the inserted vector.
// A child that duplicates an existing member skips its pair.
template <class I>
GenerationStats generation_local(PopulationT<I>& pop, const Matrix<I>& basis,
                                 double mutation_rate, Rng& rng,
                                 BestTracker<I>* best = nullptr) {
  const std::size_t n = pop.size();
  std::int64_t replacements = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PointT<I>& v = pop[i];
      const PointT<I>& w = pop[j];
      auto child = reduce_pair(v, w);
      if (!child) continue;
      if (best) best->offer(*child);
      if (mutation_rate > 0.0 && rng.bernoulli(mutation_rate)) {
        *child = mutate(*child, basis, rng);
        if (best) best->offer(*child);
      }
      if (pop.contains(child->coeffs)) continue;
      ensure_engine_range(*child);
      const std::size_t target = v.norm_sq > w.norm_sq ? i : j;
      pop.replace(target, std::move(*child));
      ++replacements;
    }
  }
  GenerationStats stats;
  stats.pop_size = static_cast<int>(pop.size());
  const auto summary = norm_summary(pop);
  stats.avg_norm = summary.avg;
  stats.min_norm = summary.min;
  stats.replacements = replacements;
  return stats;
}

// --- one generation, global selection ---
//
// Candidates come from all pairs of the input population (parents are not
// modified mid-pass). Parents and candidates are pooled, ordered by fitness
// with lexicographic coefficient tie-breaks, deduplicated, and truncated to
// the population cap. Replacements counts next-generation members that are
// not parents.
template <class I>
std::pair<PopulationT<I>, GenerationStats> generation_global(
    const PopulationT<I>& pop, const Matrix<I>& basis, double mutation_rate,
    Rng& rng, BestTracker<I>* best = nullptr) {
  std::vector<PointT<I>> pool(pop.members());
  const std::size_t n = pop.size();
  // Children longer than the longest parent can never make the cut, so
  // dropping them up front leaves the selection outcome identical to
  // pooling every child while keeping the pool near |P| + #useful.
  I worst_parent = pop[0].norm_sq;
  for (const PointT<I>& p : pop.members()) {
    if (p.norm_sq > worst_parent) worst_parent = p.norm_sq;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto child = pool_candidate(pop[i], pop[j], worst_parent);
      if (!child) continue;
      if (best) best->offer(*child);
      if (mutation_rate > 0.0 && rng.bernoulli(mutation_rate)) {
        *child = mutate(*child, basis, rng);
        if (best) best->offer(*child);
      }
      ensure_engine_range(*child);
      pool.push_back(std::move(*child));
    }
  }
  std::sort(pool.begin(), pool.end(),
            [](const PointT<I>& a, const PointT<I>& b) {
              const int c = cmp_scalar(a.norm_sq, b.norm_sq);
              if (c != 0) return c < 0;
              return cmp_vec(a.coeffs, b.coeffs) < 0;
            });
  PopulationT<I> next(pop.max_size());
  std::int64_t replacements = 0;
  for (PointT<I>& cand : pool) {
    if (next.size() >= next.max_size()) break;
    const bool is_parent = pop.contains(cand.coeffs);
    if (next.insert(std::move(cand)) && !is_parent) ++replacements;
  }
  GenerationStats stats;
  stats.pop_size = static_cast<int>(next.size());
  const auto summary = norm_summary(next);
  stats.avg_norm = summary.avg;
  stats.min_norm = summary.min;
  stats.replacements = replacements;
  return {std::move(next), stats};
}

// Draws from the configured sampler until pop_size distinct nonzero
// canonical points are collected; throws SamplerStarvationError after
// 100 * pop_size attempts.
Population initialize_population(const BasisMatrix& basis,
                                 const SieveConfig& config, Rng& rng);

// Full pipeline: LLL -> initial population -> generations until zero
// replacements, a stagnant stretch, or the generation cap.
SieveResult run_sieve(const BasisMatrix& basis, const SieveConfig& config);

}  // namespace evosieve
