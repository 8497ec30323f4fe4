#include "evosieve/sieve.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <type_traits>

#include "evosieve/lll.hpp"

namespace evosieve {
namespace {

using Clock = std::chrono::steady_clock;

std::optional<LatticePoint> draw_sample(const BasisMatrix& basis,
                                        const GramSchmidtData& gso,
                                        const SamplerParams& params, Rng& rng) {
  if (params.kind == SamplerKind::naive) {
    return naive_sample(basis, params.naive_bound, rng);
  }
  return klein_sample(basis, gso, params, rng);
}

// --- int64 fast path admission ---

bool fits_engine(const BigInt& norm_sq) {
  return fits_int64(norm_sq) && norm_sq.get_si() <= kEngineNormCap;
}

bool fits_engine_coeff(const BigInt& c) {
  return fits_int64(c) && c.get_si() <= kEngineCoeffCap &&
         c.get_si() >= -kEngineCoeffCap;
}

bool fits_small_engine(const BasisMatrix& basis, const Population& pop) {
  for (const auto& row : basis.rows()) {
    if (!fits_engine(norm_sq_of(row))) return false;
  }
  for (const LatticePoint& p : pop.members()) {
    if (!fits_engine(p.norm_sq)) return false;
    for (const BigInt& c : p.coeffs) {
      if (!fits_engine_coeff(c)) return false;
    }
  }
  return true;
}

Matrix<std::int64_t> to_small_matrix(const IntMatrix& rows) {
  Matrix<std::int64_t> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i].reserve(rows[i].size());
    for (const BigInt& v : rows[i]) out[i].push_back(v.get_si());
  }
  return out;
}

SmallPoint to_small_point(const LatticePoint& p) {
  SmallPoint q;
  q.coeffs.reserve(p.coeffs.size());
  q.coords.reserve(p.coords.size());
  for (const BigInt& v : p.coeffs) q.coeffs.push_back(v.get_si());
  for (const BigInt& v : p.coords) q.coords.push_back(v.get_si());
  q.norm_sq = p.norm_sq.get_si();
  return q;
}

LatticePoint to_big_point(const SmallPoint& p) {
  LatticePoint q;
  q.coeffs.reserve(p.coeffs.size());
  q.coords.reserve(p.coords.size());
  for (const std::int64_t v : p.coeffs) q.coeffs.emplace_back(static_cast<long>(v));
  for (const std::int64_t v : p.coords) q.coords.emplace_back(static_cast<long>(v));
  q.norm_sq = static_cast<long>(p.norm_sq);
  return q;
}

template <class I>
LatticePoint widen_point(const PointT<I>& p) {
  if constexpr (std::is_same_v<I, BigInt>) {
    return p;
  } else {
    return to_big_point(p);
  }
}

template <class I>
Population widen_population(const PopulationT<I>& pop) {
  if constexpr (std::is_same_v<I, BigInt>) {
    return pop;
  } else {
    Population out(pop.max_size());
    for (const PointT<I>& p : pop.members()) out.insert(to_big_point(p));
    return out;
  }
}

template <class I>
BigInt widen_scalar(const I& v) {
  if constexpr (std::is_same_v<I, BigInt>) {
    return v;
  } else {
    return BigInt(static_cast<long>(v));
  }
}

// The generation loop shared by both scalar instantiations. rng is taken by
// value: on an int64 range fault, run_sieve replays the identical stream
// with BigInt points.
template <class I>
SieveResult run_engine(const SieveConfig& config, const BasisMatrix& reduced,
                       const Matrix<I>& rows, PopulationT<I> pop, Rng rng) {
  const bool global = config.variant == Variant::global ||
                      config.variant == Variant::global_mut;
  const bool mutating = config.variant == Variant::local_mut ||
                        config.variant == Variant::global_mut;
  const double rate = mutating ? config.mutation_rate : 0.0;

  BestTracker<I> best;
  for (const PointT<I>& p : pop.members()) best.offer(p);

  std::vector<GenerationStats> trail;
  std::vector<BigInt> best_trail;
  Termination terminated = Termination::max_generations;
  I prev_min_sq{};
  double prev_avg = std::numeric_limits<double>::quiet_NaN();
  int stale = 0;

  for (int g = 1; g <= config.max_generations; ++g) {
    const auto t0 = Clock::now();
    GenerationStats stats;
    if (global) {
      auto [next, s] = generation_global(pop, rows, rate, rng, &best);
      pop = std::move(next);
      stats = s;
    } else {
      stats = generation_local(pop, rows, rate, rng, &best);
    }
    stats.generation = g;
    stats.cumulative_replacements =
        (trail.empty() ? 0 : trail.back().cumulative_replacements) +
        stats.replacements;
    stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count();
    trail.push_back(stats);
    best_trail.push_back(widen_scalar(best.best.norm_sq));

    if (stats.replacements == 0) {
      terminated = Termination::no_updates;
      break;
    }
    const auto summary = norm_summary(pop);
    if (g > 1 && summary.min_sq == prev_min_sq && stats.avg_norm == prev_avg) {
      if (++stale >= config.stale_generations) {
        terminated = Termination::stagnation;
        break;
      }
    } else {
      stale = 0;
    }
    prev_min_sq = summary.min_sq;
    prev_avg = stats.avg_norm;
  }

  return SieveResult{config,
                     reduced,
                     widen_point(best.best),
                     widen_population(pop),
                     std::move(trail),
                     std::move(best_trail),
                     terminated};
}

void validate_config(const SieveConfig& config) {
  if (config.mutation_rate < 0.0 || config.mutation_rate > 1.0) {
    throw InvalidParamsError("mutation_rate must lie in [0, 1]");
  }
  if (config.max_generations < 1) {
    throw InvalidParamsError("max_generations must be >= 1");
  }
  if (config.stale_generations < 1) {
    throw InvalidParamsError("stale_generations must be >= 1");
  }
  if (config.pop_size < 0 || config.pop_size == 1) {
    throw InvalidParamsError("pop_size must be >= 2 (0 selects the default)");
  }
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::local:
      return "local";
    case Variant::global:
      return "global";
    case Variant::local_mut:
      return "local-mut";
    case Variant::global_mut:
      return "global-mut";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  if (name == "local") return Variant::local;
  if (name == "global") return Variant::global;
  if (name == "local-mut") return Variant::local_mut;
  if (name == "global-mut") return Variant::global_mut;
  return std::nullopt;
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::stagnation:
      return "stagnation";
    case Termination::no_updates:
      return "no_updates";
    case Termination::max_generations:
      return "max_generations";
  }
  return "?";
}

int default_pop_size(int dim) {
  const long double est =
      5.0L * std::exp2(0.5L * dim * std::log2(4.0L / 3.0L));
  return std::max(200, static_cast<int>(std::ceil(est)));
}

namespace {

Population fill_population(const BasisMatrix& basis,
                           const GramSchmidtData& gso,
                           const SamplerParams& params, int pop_size,
                           Rng& rng) {
  Population pop(static_cast<std::size_t>(pop_size));
  const std::int64_t max_attempts = 100LL * pop_size;
  std::int64_t attempts = 0;
  while (pop.size() < static_cast<std::size_t>(pop_size)) {
    if (attempts++ >= max_attempts) {
      throw SamplerStarvationError(
          "could not collect " + std::to_string(pop_size) +
          " distinct nonzero samples in " + std::to_string(max_attempts) +
          " attempts");
    }
    auto p = draw_sample(basis, gso, params, rng);
    if (!p) continue;
    pop.insert(std::move(*p));
  }
  return pop;
}

}  // namespace

Population initialize_population(const BasisMatrix& basis,
                                 const SieveConfig& config, Rng& rng) {
  validate_config(config);
  const int pop_size =
      config.pop_size > 0 ? config.pop_size : default_pop_size(basis.dim());
  const GramSchmidtData gso = gram_schmidt(basis);

  SamplerParams params = config.sampler;
  const bool auto_width =
      params.kind == SamplerKind::klein && params.sigma == 0.0;
  if (!auto_width) return fill_population(basis, gso, params, pop_size, rng);

  // Automatic width: widen stepwise when the lattice is too coarse to
  // supply pop_size distinct points at the preferred narrow width.
  params.sigma = default_klein_sigma(gso);
  constexpr int kWidenSteps = 8;
  for (int step = 0;; ++step, params.sigma *= 2.0) {
    try {
      return fill_population(basis, gso, params, pop_size, rng);
    } catch (const SamplerStarvationError&) {
      if (step == kWidenSteps) throw;
    }
  }
}

SieveResult run_sieve(const BasisMatrix& basis, const SieveConfig& config) {
  validate_config(config);
  BasisMatrix reduced = lll_reduce(basis, config.lll_delta);
  Rng rng(config.seed);
  Population pop = initialize_population(reduced, config, rng);

  if (fits_small_engine(reduced, pop)) {
    PopulationT<std::int64_t> small_pop(pop.max_size());
    for (const LatticePoint& p : pop.members()) {
      small_pop.insert(to_small_point(p));
    }
    const Matrix<std::int64_t> small_rows = to_small_matrix(reduced.rows());
    try {
      return run_engine<std::int64_t>(config, reduced, small_rows,
                                      std::move(small_pop), rng);
    } catch (const EngineRangeError&) {
      // fall through: replay the identical stream with unbounded integers
    }
  }
  return run_engine<BigInt>(config, reduced, reduced.rows(), std::move(pop),
                            rng);
}

}  // namespace evosieve
