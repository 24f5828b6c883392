#pragma once

#include <string>

#include "bordcalc/rules.hpp"

// Rule application, bounded equality search and diagram enumeration.
//
// Equality of 2-cells is semi-decided: the search runs bidirectionally over
// structural normal forms with explicit node and depth budgets, and
// NotProven is a first-class answer. Every Equal verdict carries a
// replayable trace.

namespace bordcalc {

enum class RuleDirection : std::uint8_t { Forward, Backward };

struct RuleLocation {
  RuleDirection direction = RuleDirection::Forward;
  std::size_t step_index = 0;  // window start in the step list
  std::size_t event_shift = 0; // instance shift: event anchor
  int offset_shift = 0;        // instance shift: sheet offset

  friend bool operator==(const RuleLocation&, const RuleLocation&) = default;
};

Expected<PlanarDiagram> apply_rule(const PlanarDiagram& p, const RewriteRule& rule,
                                   const RuleLocation& loc);

// All locations where the rule applies to p (either direction), validated.
std::vector<RuleLocation> rule_matches(const PlanarDiagram& p, const RewriteRule& rule);

struct ProofMove {
  std::string rule_id;
  RuleLocation location;

  friend bool operator==(const ProofMove&, const ProofMove&) = default;
};

struct ProofTrace {
  PlanarDiagram start;
  PlanarDiagram end;
  std::vector<ProofMove> moves;  // applied to structural normal forms
};

struct SearchBudget {
  std::size_t max_nodes = 10000;
  int max_depth = 8;
};

struct EqualityResult {
  enum class Verdict : std::uint8_t { Equal, NotProven, NotParallel } verdict =
      Verdict::NotProven;
  std::optional<ProofTrace> trace;
  std::size_t nodes_expanded = 0;

  bool equal() const { return verdict == Verdict::Equal; }
};

// Empty `rules` means the full bordism rule set.
EqualityResult equal_bounded(const PlanarDiagram& p, const PlanarDiagram& q,
                             const SearchBudget& budget = {},
                             const std::vector<const RewriteRule*>& rules = {});

// Replays a trace through apply_rule with full validation; returns the final
// normalized diagram on success.
Expected<PlanarDiagram> replay_trace(const ProofTrace& trace,
                                     const std::vector<const RewriteRule*>& rules = {});

struct EnumerateOptions {
  std::size_t max_diagrams = 0;  // 0: unlimited
  std::size_t max_events = 0;    // prune cells growing beyond this
};

// All validated diagrams reachable from the identity 2-cell of the given
// word by at most `max_steps` generator applications, deduplicated by
// structural normal form.
std::vector<PlanarDiagram> enumerate_diagrams(const SheetWord& source_word, int max_steps,
                                              const EnumerateOptions& opt = {});

}  // namespace bordcalc
