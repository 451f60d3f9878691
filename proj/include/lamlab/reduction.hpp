#pragma once

#include <optional>
#include <vector>

#include "lamlab/occurrence.hpp"
#include "lamlab/term.hpp"

namespace lamlab {

bool is_redex(const Term& t);

// Positions of all beta redexes.
OccurrenceSet redex_occurrences(const Term& t);

// r1 strictly to the left of r2: r1 a proper prefix of r2, or the words
// diverge with r1 taking the 0 branch. Both must be redex occurrences of t.
bool to_the_left(const Term& t, const Occurrence& r1, const Occurrence& r2);

std::optional<Occurrence> leftmost_redex(const Term& t);
// The least redex occurrence of shape 0^n (none when the head is a variable).
std::optional<Occurrence> head_redex(const Term& t);
// Same, but with no abstraction allowed on the 0-path above it.
std::optional<Occurrence> weak_head_redex(const Term& t);

// Beta-contract the redex at r (throws NotARedexError otherwise).
Term contract(const Term& t, const Occurrence& r);

bool is_nf(const Term& t);
bool is_hnf(const Term& t);
bool is_whnf(const Term& t);

struct TraceStep {
  Occurrence occ;
  Term after;
};

struct ReductionTrace {
  Term initial;
  std::vector<TraceStep> steps;

  const Term& before(std::size_t i) const { return i == 0 ? initial : steps[i - 1].after; }
  const Term& final() const { return steps.empty() ? initial : steps.back().after; }
  std::size_t size() const { return steps.size(); }
};

enum class Strategy { Name, Head, Leftmost };

enum class StrategyStatus { Normalized, FuelExhausted };

struct StrategyResult {
  StrategyStatus status;
  ReductionTrace trace;
  const Term& final() const { return trace.final(); }
};

struct StrategyOptions {
  bool record_trace = true;
  // Abort (as fuel exhaustion) once the term outgrows this; diverging terms
  // can double in size every step.
  std::size_t max_term_size = 50000;
};

// Iterates the strategy's redex until its normal form notion is reached
// (whnf / hnf / nf) or fuel runs out. Asserts the dichotomy: no redex
// found iff the corresponding normal form predicate holds.
StrategyResult run_strategy(const Term& t, Strategy strategy, int fuel,
                            const StrategyOptions& opts = {});

}  // namespace lamlab
