#pragma once

#include <string>
#include <vector>

#include "lamlab/term.hpp"

namespace lamlab {

// Call-by-need on terms with explicit substitutions t[x/u]. Values are
// abstractions, answers are abstractions under a closure chain L<\y.t>, and
// evaluation contracts
//   L<\x.t> u        -> L<t[x/u]>             (dB)
//   N<<x>>[x/L<v>]   -> L<N<v>[x/v]>          (lsv)
// at the hereditarily needed position: left of applications, into closure
// bodies, and into the bound term of a closure whose body needs its binder.

struct NeedFrame {
  enum class Kind { AppLeft, CloBody, CloBound };
  Kind kind;
  std::string binder;  // CloBody / CloBound
  // AppLeft: the argument; CloBody: the bound term; CloBound: the body whose
  // needed variable is the binder.
  Term other;
};

enum class NeedStatus { Redex, Answer, Stuck };

struct NeedDecomposition {
  NeedStatus status;
  std::vector<NeedFrame> context;  // outermost first; empty for Answer
  // Redex: the dB (application) or lsv (closure) redex root.
  // Answer: the whole term. Stuck: the needed free variable.
  Term focus;
  std::string stuck_var;  // Stuck only
};

NeedDecomposition decompose_need(const Term& t);

// Rebuild the term a decomposition was taken from.
Term replug(const std::vector<NeedFrame>& context, const Term& focus);

struct NeedStep {
  NeedStatus status;        // Redex: stepped
  Term term;                // stepped term / answer / original for Stuck
  std::string rule;         // "dB" or "lsv" when stepped
  std::string stuck_var;
};

NeedStep step_need(const Term& t);

enum class NeedOutcome { Answer, Stuck, FuelExhausted };

struct NeedTraceStep {
  std::string rule;
  Term after;
};

struct NeedResult {
  NeedOutcome outcome;
  Term initial;
  Term final_term;
  std::vector<NeedTraceStep> steps;
  std::string stuck_var;  // Stuck only
};

// Iterates step_need up to fuel steps. Oversized intermediate terms count as
// fuel exhaustion, mirroring the strategy runner.
NeedResult eval_need(const Term& t, int fuel);

// Collapse explicit substitutions by meta-level substitution.
Term unfold(const Term& t);

}  // namespace lamlab
