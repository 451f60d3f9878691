#pragma once

#include <optional>

#include "lamlab/reduction.hpp"
#include "lamlab/residuals.hpp"

namespace lamlab {

// Tri-state produced by fuel-bounded strategy runs.
enum class NeedFlag { Yes, No, Diverged };

const char* to_string(NeedFlag f);

struct NeedClass {
  NeedFlag needed = NeedFlag::Diverged;
  NeedFlag head_needed = NeedFlag::Diverged;
  NeedFlag whnd_needed = NeedFlag::Diverged;

  bool operator==(const NeedClass&) const = default;
};

// Classification together with the strategy runs that justify it.
struct NeedReport {
  NeedClass flags;
  StrategyResult leftmost;
  StrategyResult head;
  StrategyResult name;
};

// A redex r is needed when every reduction to normal form contracts a
// residual of r; head / weak-head neededness use head / weak-head normal
// forms instead. Each flag is decided by running the matching deterministic
// strategy and asking whether the run used r. Fuel exhaustion gives
// Diverged: the redex may be vacuously needed (no normal form at all), but
// that cannot be confirmed within bounds.
NeedReport classify_full(const Term& t, const Occurrence& r, int fuel);
NeedClass classify(const Term& t, const Occurrence& r, int fuel);

// One step of the weak-head needed strategy; none on weak-head normal forms.
std::optional<Term> whnd_step(const Term& t);

// Verdicts of the enumeration oracle.
enum class OracleFlag { Yes, No, Inconclusive };

const char* to_string(OracleFlag f);

struct OracleClass {
  OracleFlag needed = OracleFlag::Inconclusive;
  OracleFlag head_needed = OracleFlag::Inconclusive;
  OracleFlag whnd_needed = OracleFlag::Inconclusive;

  bool operator==(const OracleClass&) const = default;
};

// Independent oracle: explores every reduction sequence that avoids r and
// its residuals, bounded by depth steps per path and width visited states,
// deduplicating states up to alpha-equivalence. Reaching a (weak-head,
// head, full) normal form on such a path refutes the corresponding flag;
// exhausting the whole space confirms it; hitting a bound first is
// Inconclusive.
OracleClass brute_force_classify(const Term& t, const Occurrence& r, int depth,
                                 std::size_t width);

}  // namespace lamlab
