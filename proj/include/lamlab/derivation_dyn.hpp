#pragma once

#include "lamlab/derivation.hpp"
#include "lamlab/reduction.hpp"

namespace lamlab {

// Substitute u for x in body's subject while transporting the typing: every
// typed occurrence of x consumes one derivation of u from args (matched
// left-to-right, first fit by type; the multiset of arg types must equal
// body's context entry for x), untyped occurrences are replaced textually.
// Mirrors substitute() exactly, renamings included, so the resulting
// subject is substitute(subject(body), x, u).
Derivation typed_substitute(const Derivation& body, const std::string& x, const Term& u,
                            const std::vector<Derivation>& args);

// Rename a free variable throughout a derivation, subject and context both.
Derivation rename_free(const Derivation& d, const std::string& from, const std::string& to);

// Rebuild d so that its subject becomes the alpha-equivalent term s.
Derivation convert_subject(const Derivation& d, const Term& s);

// One reduction step lifted to derivations: contract the subject redex at r
// and transport the typing. At a typed redex the body premise absorbs the
// argument premises (size strictly shrinks); below a typed position the
// subjects are rewritten textually (size is kept). Context and type of the
// conclusion never change.
Derivation reduce_derivation(const Derivation& d, const Occurrence& r);

// Inverse step: given a derivation of contract(t, r), produce one of t with
// the same context and type.
Derivation expand_derivation(const Term& t, const Occurrence& r, const Derivation& d_after);

// Principal derivation of a weak-head normalizing term: type its weak-head
// normal form minimally (val/a for abstractions; x : []->...->[]->alpha1
// with untyped arguments for head variables), then pull that typing back
// along the recorded trace. nullopt when fuel runs out first.
std::optional<Derivation> infer_principal(const Term& t, int fuel);

// Redex occurrences of t that its principal derivation types.
std::optional<OccurrenceSet> whnd_redexes_by_typing(const Term& t, int fuel);

}  // namespace lamlab
