#pragma once

#include "lamlab/reduction.hpp"

namespace lamlab {

// Positions k in body with body|_k a free occurrence of x (binders that
// rebind x shadow as usual).
OccurrenceSet free_var_occurrences(const Term& body, const std::string& x);

// Residuals of position p after contracting the redex at r in t:
//   {}           if p is the redex or its abstraction node
//   {p}          if r is not a prefix of p
//   {r q}        if p = r 0 0 q          (inside the body)
//   {r k q : k a free occurrence of the bound variable}
//                if p = r 1 q            (inside the argument)
OccurrenceSet residuals_step(const Term& t, const Occurrence& p, const Occurrence& r);

OccurrenceSet residuals_step_set(const Term& t, const OccurrenceSet& ps, const Occurrence& r);

// Residuals of the positions in ps along a whole trace.
OccurrenceSet residuals_trace(const OccurrenceSet& ps, const ReductionTrace& trace);

// Whether the trace contracts r or one of its residuals.
bool used_in(const Occurrence& r, const ReductionTrace& trace);

}  // namespace lamlab
