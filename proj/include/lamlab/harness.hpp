#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamlab/occurrence.hpp"
#include "lamlab/term.hpp"

namespace lamlab {

struct CorpusSpec {
  std::uint64_t seed = 1;
  int max_size = 14;
  int count = 1000;
  bool closed_only = false;
  // I, K, Omega, Delta, K I Omega, the needed/head/weak-head taxonomy term
  // and the call-by-need worked example
  bool include_zoo = true;
};

// Deterministic in the seed; zoo terms first.
std::vector<Term> generate_corpus(const CorpusSpec& spec);

// yes / no-within-fuel / inconclusive; fuel exhaustion is never a definite no
enum class Verdict { Yes, NoWithinFuel, Inconclusive };
const char* to_string(Verdict v);
bool is_definite(Verdict v);

struct EquivalenceRow {
  Term term;
  Verdict typable;
  Verdict wn_name;
  Verdict wn_whnd;
  Verdict wn_need;
  // pairs of definite verdicts that disagree
  std::vector<std::string> mismatches;
};

// Runs the four independent checkers: principal-typing inference, the name
// strategy, a weak-head-needed step driver, and call-by-need evaluation.
EquivalenceRow check_equivalences(const Term& t, int fuel);

struct EquivalenceReport {
  std::vector<EquivalenceRow> rows;
  std::size_t mismatch_count = 0;
};

EquivalenceReport run_corpus(const CorpusSpec& spec, int fuel);

struct ObsResult {
  bool agree = true;
  // first context with a disagreement, and what disagreed
  std::optional<Term> context_skeleton;
  std::string detail;
};

// Enumerates contexts C ::= hole | C s | s C | \x. C with a small pool of
// terms s, plugs both terms in (capture-permitting) and compares the
// weak-head and need verdicts. Unlike check_equivalences this treats
// yes-vs-fuel-exhaustion as a disagreement: the contexts are how divergence
// is observed.
ObsResult check_observational(const Term& t, const Term& u, int max_ctx_size, int fuel);

}  // namespace lamlab
