#include "bordcalc/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "bordcalc/search.hpp"
#include "bordcalc/structural.hpp"

namespace bordcalc {

// ---------------------------------------------------------------------------
// Step-path search between 1-cells.

std::vector<std::pair<SliceStep, LinearDiagram>> reverse_steps(const LinearDiagram& cell,
                                                               bool cfd_only) {
  std::vector<std::pair<SliceStep, LinearDiagram>> out;
  // A step s applied at predecessor P gives `cell` iff replacing the
  // generator's target window in `cell` by its source yields a valid P.
  // Structural steps are self-dual under inverse_step.
  const std::size_t n = cell.events.size();
  std::vector<SheetWord> words(n + 1);
  words[0] = cell.domain;
  for (std::size_t i = 0; i < n; ++i) {
    words[i + 1] = words[i];
    if (apply_event(words[i + 1], cell.events[i])) return out;
  }
  auto matches = [&](const std::vector<LinearEvent>& pat, std::size_t at, int off) {
    if (at + pat.size() > n) return false;
    for (std::size_t i = 0; i < pat.size(); ++i) {
      LinearEvent want = pat[i];
      want.offset += off;
      if (!(cell.events[at + i] == want)) return false;
    }
    return true;
  };
  for (std::size_t gi = 0; gi < kGeneratorCount; ++gi) {
    const Gen g = static_cast<Gen>(gi);
    if (cfd_only && !in_cfd_fragment(g)) continue;
    const Generator2Cell& cat = generator(g);
    for (std::size_t at = 0; at + cat.target.size() <= n; ++at) {
      const int width = static_cast<int>(words[at].size());
      for (int off = 0; off <= width; ++off) {
        if (off + static_cast<int>(cat.context.size()) > width) continue;
        bool ctx = true;
        for (std::size_t i = 0; i < cat.context.size(); ++i)
          if (words[at][off + i] != cat.context[i]) ctx = false;
        if (!ctx) continue;
        if (!matches(cat.target, at, off)) continue;
        LinearDiagram pred = cell;
        pred.events.erase(pred.events.begin() + at, pred.events.begin() + at + cat.target.size());
        std::vector<LinearEvent> src = cat.source;
        for (LinearEvent& e : src) e.offset += off;
        pred.events.insert(pred.events.begin() + at, src.begin(), src.end());
        if (!validate_linear(pred).ok()) continue;
        LinearDiagram check = pred;
        const SliceStep s = apply_step(g, at, off);
        if (apply_slice_step(check, s) || !(check == cell)) continue;
        out.emplace_back(s, std::move(pred));
      }
    }
  }
  // Structural moves run backward through their inverses.
  for (const SliceStep& s : applicable_steps(cell, cfd_only)) {
    if (s.kind == SliceStep::Kind::Apply) continue;
    LinearDiagram next = cell;
    if (apply_slice_step(next, s)) continue;
    auto inv = inverse_step(cell, s);
    if (!inv) continue;
    // `inv` applied at `next` recovers `cell`, so (inv, next) is a reverse
    // edge of `cell`... but we want predecessors P with step(P) == cell:
    // (s applied at cell gives next) means s^-1 applied at next gives cell.
    out.emplace_back(*inv, std::move(next));
  }
  return out;
}

std::optional<std::vector<SliceStep>> find_step_path(const LinearDiagram& from,
                                                     const LinearDiagram& to,
                                                     const StepPathOptions& opt) {
  if (from == to && opt.banned_first.empty()) return std::vector<SliceStep>{};
  const std::size_t max_events =
      opt.max_events ? opt.max_events
                     : std::max(from.events.size(), to.events.size()) + 6;

  auto gen_allowed = [&](const SliceStep& s) {
    if (s.kind != SliceStep::Kind::Apply) return true;
    if (opt.invertible_only && !generator(s.gen).invertible) return false;
    return std::find(opt.banned.begin(), opt.banned.end(), s.gen) == opt.banned.end();
  };

  struct Node {
    LinearDiagram cell;
    int parent;
    SliceStep via;
    int depth;
  };
  struct Side {
    std::vector<Node> nodes;
    std::unordered_map<std::uint64_t, int> seen;
    std::deque<int> queue;
  };
  Side fwd, bwd;
  fwd.nodes.push_back({from, -1, {}, 0});
  fwd.seen.emplace(hash_linear(from), 0);
  fwd.queue.push_back(0);
  bwd.nodes.push_back({to, -1, {}, 0});
  bwd.seen.emplace(hash_linear(to), 0);
  bwd.queue.push_back(0);

  auto assemble = [&](int fid, int bid) {
    std::vector<SliceStep> path;
    for (int i = fid; i > 0; i = fwd.nodes[i].parent) path.push_back(fwd.nodes[i].via);
    std::reverse(path.begin(), path.end());
    for (int i = bid; i > 0; i = bwd.nodes[i].parent) path.push_back(bwd.nodes[i].via);
    return path;
  };

  bool turn_fwd = true;
  while ((!fwd.queue.empty() || !bwd.queue.empty()) &&
         fwd.nodes.size() + bwd.nodes.size() < opt.node_budget) {
    Side& side = (turn_fwd && !fwd.queue.empty()) || bwd.queue.empty() ? fwd : bwd;
    const bool is_fwd = &side == &fwd;
    turn_fwd = !turn_fwd;
    if (side.queue.empty()) continue;
    const int cur = side.queue.front();
    side.queue.pop_front();
    if (2 * side.nodes[cur].depth >= opt.max_depth + 1) continue;
    const LinearDiagram cell = side.nodes[cur].cell;

    auto visit = [&](const SliceStep& via, LinearDiagram next) -> std::optional<std::vector<SliceStep>> {
      if (next.events.size() > max_events) return std::nullopt;
      const std::uint64_t h = hash_linear(next);
      if (side.seen.count(h)) return std::nullopt;
      side.nodes.push_back({next, cur, via, side.nodes[cur].depth + 1});
      const int id = static_cast<int>(side.nodes.size()) - 1;
      side.seen.emplace(h, id);
      side.queue.push_back(id);
      Side& other = is_fwd ? bwd : fwd;
      auto hit = other.seen.find(h);
      if (hit != other.seen.end() && other.nodes[hit->second].cell == next) {
        auto path = is_fwd ? assemble(id, hit->second) : assemble(hit->second, id);
        if (!path.empty() &&
            std::find(opt.banned_first.begin(), opt.banned_first.end(), path.front()) !=
                opt.banned_first.end())
          return std::nullopt;  // this meeting violates the first-step ban; keep looking
        return path;
      }
      return std::nullopt;
    };

    if (is_fwd) {
      for (const SliceStep& s : applicable_steps(cell, opt.cfd_only)) {
        if (!gen_allowed(s)) continue;
        if (side.nodes[cur].depth == 0 &&
            std::find(opt.banned_first.begin(), opt.banned_first.end(), s) !=
                opt.banned_first.end())
          continue;
        LinearDiagram next = cell;
        if (apply_slice_step(next, s)) continue;
        if (auto path = visit(s, std::move(next))) return path;
      }
    } else {
      for (auto& [s, pred] : reverse_steps(cell, opt.cfd_only)) {
        if (!gen_allowed(s)) continue;
        if (auto path = visit(s, std::move(pred))) return path;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rule application.

namespace {

// Shifts a rule's step by an event-index delta and a sheet-offset delta.
SliceStep shift_step(const SliceStep& s, std::size_t d_at, int d_off) {
  SliceStep out = s;
  out.at += d_at;
  if (out.kind == SliceStep::Kind::Apply ||
      (out.kind == SliceStep::Kind::SymSlide && out.op == SlideOp::CreatePair))
    out.offset += d_off;
  return out;
}

bool steps_match_shifted(const std::vector<SliceStep>& steps, std::size_t at,
                         const std::vector<SliceStep>& pattern, std::size_t d_at, int d_off) {
  if (at + pattern.size() > steps.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (!(steps[at + i] == shift_step(pattern[i], d_at, d_off))) return false;
  return true;
}

}  // namespace

Expected<PlanarDiagram> apply_rule(const PlanarDiagram& p, const RewriteRule& rule,
                                   const RuleLocation& loc) {
  const std::vector<SliceStep>& from = loc.direction == RuleDirection::Forward ? rule.lhs : rule.rhs;
  const std::vector<SliceStep>& to = loc.direction == RuleDirection::Forward ? rule.rhs : rule.lhs;
  if (loc.step_index > p.steps.size())
    return Error{ErrorCode::NoMatch, loc.step_index, "rule window past end"};
  if (!steps_match_shifted(p.steps, loc.step_index, from, loc.event_shift, loc.offset_shift))
    return Error{ErrorCode::NoMatch, loc.step_index, "rule lhs does not match at location"};

  PlanarDiagram out = p;
  out.steps.erase(out.steps.begin() + loc.step_index,
                  out.steps.begin() + loc.step_index + from.size());
  std::vector<SliceStep> repl;
  repl.reserve(to.size());
  for (const SliceStep& s : to) repl.push_back(shift_step(s, loc.event_shift, loc.offset_shift));
  out.steps.insert(out.steps.begin() + loc.step_index, repl.begin(), repl.end());

  auto target = validate_planar(out);
  if (!target)
    return Error{ErrorCode::NoMatch, loc.step_index,
                 "rule replacement does not validate: " + target.error().message};
  auto orig = validate_planar(p);
  if (!orig) return orig.error();
  if (!(target.value() == orig.value()))
    return Error{ErrorCode::NoMatch, loc.step_index, "rule replacement changes the target"};
  return out;
}

std::vector<RuleLocation> rule_matches(const PlanarDiagram& p, const RewriteRule& rule) {
  std::vector<RuleLocation> out;
  const auto consider = [&](RuleDirection dir, const std::vector<SliceStep>& pat) {
    if (pat.empty()) return;  // insertion-only sides are reached from the other direction
    for (std::size_t at = 0; at + pat.size() <= p.steps.size(); ++at) {
      const SliceStep& first = p.steps[at];
      if (first.kind != pat[0].kind) continue;
      // Recover the candidate shift from the first step of the window.
      if (first.at < pat[0].at) continue;
      const std::size_t d_at = first.at - pat[0].at;
      int d_off = 0;
      if (pat[0].kind == SliceStep::Kind::Apply) {
        if (first.gen != pat[0].gen) continue;
        d_off = first.offset - pat[0].offset;
      }
      if (d_off < 0) continue;
      if (!steps_match_shifted(p.steps, at, pat, d_at, d_off)) continue;
      RuleLocation loc{dir, at, d_at, d_off};
      if (apply_rule(p, rule, loc).ok()) out.push_back(loc);
    }
  };
  consider(RuleDirection::Forward, rule.lhs);
  consider(RuleDirection::Backward, rule.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Bounded equality search.

namespace {

struct SearchNode {
  PlanarDiagram diagram;
  int parent;
  ProofMove via;
  int depth;
};

// Expand a node: all rule applications over the active rule set.
template <typename Visit>
void expand(const PlanarDiagram& d, const std::vector<const RewriteRule*>& rules, Visit&& visit) {
  for (const RewriteRule* rule : rules) {
    for (const RuleLocation& loc : rule_matches(d, *rule)) {
      auto next = apply_rule(d, *rule, loc);
      if (!next.ok()) continue;
      visit(structural_normal_form(next.value()), ProofMove{rule->id, loc});
    }
  }
}

}  // namespace

EqualityResult equal_bounded(const PlanarDiagram& p, const PlanarDiagram& q,
                             const SearchBudget& budget,
                             const std::vector<const RewriteRule*>& rules_in) {
  EqualityResult result;
  auto tp = validate_planar(p);
  auto tq = validate_planar(q);
  if (!tp.ok() || !tq.ok() || !(p.source == q.source) || !(tp.value() == tq.value())) {
    result.verdict = EqualityResult::Verdict::NotParallel;
    return result;
  }

  std::vector<const RewriteRule*> rules = rules_in;
  if (rules.empty())
    for (const RewriteRule& r : rule_set()) rules.push_back(&r);

  const PlanarDiagram np = structural_normal_form(p);
  const PlanarDiagram nq = structural_normal_form(q);
  if (np == nq) {
    result.verdict = EqualityResult::Verdict::Equal;
    return result;
  }

  // Bidirectional breadth-first search over structural classes. Forward
  // moves from p; backward moves from q (trace reversed on meet).
  struct Side {
    std::vector<SearchNode> nodes;
    std::unordered_map<std::uint64_t, int> seen;
    std::deque<int> queue;
  };
  Side fwd, bwd;
  fwd.nodes.push_back({np, -1, {}, 0});
  fwd.seen.emplace(hash_planar(np), 0);
  fwd.queue.push_back(0);
  bwd.nodes.push_back({nq, -1, {}, 0});
  bwd.seen.emplace(hash_planar(nq), 0);
  bwd.queue.push_back(0);

  auto unwind = [](const Side& side, int id) {
    std::vector<ProofMove> moves;
    for (int i = id; i > 0; i = side.nodes[i].parent) moves.push_back(side.nodes[i].via);
    std::reverse(moves.begin(), moves.end());
    return moves;
  };
  auto flip = [](ProofMove m) {
    m.location.direction = m.location.direction == RuleDirection::Forward
                               ? RuleDirection::Backward
                               : RuleDirection::Forward;
    return m;
  };

  std::size_t expanded = 0;
  bool forward_turn = true;
  while ((!fwd.queue.empty() || !bwd.queue.empty()) && expanded < budget.max_nodes) {
    Side& side = forward_turn && !fwd.queue.empty() ? fwd : (!bwd.queue.empty() ? bwd : fwd);
    const bool is_fwd = &side == &fwd;
    forward_turn = !forward_turn;
    if (side.queue.empty()) continue;
    const int cur = side.queue.front();
    side.queue.pop_front();
    if (side.nodes[cur].depth >= budget.max_depth) continue;
    ++expanded;
    const PlanarDiagram d = side.nodes[cur].diagram;
    bool met = false;
    expand(d, rules, [&](PlanarDiagram next, ProofMove via) {
      if (met) return;
      const std::uint64_t h = hash_planar(next);
      if (side.seen.count(h)) return;
      side.nodes.push_back({next, cur, via, side.nodes[cur].depth + 1});
      const int id = static_cast<int>(side.nodes.size()) - 1;
      side.seen.emplace(h, id);
      side.queue.push_back(id);
      Side& other = is_fwd ? bwd : fwd;
      auto hit = other.seen.find(h);
      if (hit != other.seen.end() && other.nodes[hit->second].diagram == next) {
        // Assemble the full trace p -> meeting point -> q.
        std::vector<ProofMove> a = unwind(is_fwd ? fwd : bwd, is_fwd ? id : hit->second);
        std::vector<ProofMove> b = unwind(is_fwd ? bwd : fwd, is_fwd ? hit->second : id);
        std::reverse(b.begin(), b.end());
        for (ProofMove& m : b) m = flip(m);
        a.insert(a.end(), b.begin(), b.end());
        result.trace = ProofTrace{p, q, std::move(a)};
        met = true;
      }
    });
    if (met) {
      result.verdict = EqualityResult::Verdict::Equal;
      result.nodes_expanded = expanded;
      return result;
    }
  }
  result.verdict = EqualityResult::Verdict::NotProven;
  result.nodes_expanded = expanded;
  return result;
}

Expected<PlanarDiagram> replay_trace(const ProofTrace& trace,
                                     const std::vector<const RewriteRule*>& /*rules*/) {
  PlanarDiagram cur = structural_normal_form(trace.start);
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const ProofMove& m = trace.moves[i];
    const RewriteRule* rule = find_rule(m.rule_id);
    if (!rule) return Error{ErrorCode::UnknownRule, i, "unknown rule " + m.rule_id};
    auto next = apply_rule(cur, *rule, m.location);
    if (!next.ok()) {
      Error e = next.error();
      e.index = i;
      return e;
    }
    cur = structural_normal_form(next.value());
  }
  const PlanarDiagram want = structural_normal_form(trace.end);
  if (!(cur == want))
    return Error{ErrorCode::NoMatch, trace.moves.size(), "trace does not land on the end diagram"};
  return cur;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.

std::vector<PlanarDiagram> enumerate_diagrams(const SheetWord& source_word, int max_steps,
                                              const EnumerateOptions& opt) {
  std::vector<PlanarDiagram> out;
  const PlanarDiagram root = identity_2cell(identity_1cell(source_word));
  out.push_back(root);

  std::vector<PlanarDiagram> frontier{root};
  std::unordered_set<std::uint64_t> seen{structural_key(root)};
  for (int depth = 0; depth < max_steps; ++depth) {
    std::vector<PlanarDiagram> next_frontier;
    for (const PlanarDiagram& d : frontier) {
      auto target = validate_planar(d);
      if (!target.ok()) continue;
      for (const SliceStep& s : applicable_steps(target.value(), false,
                                                 /*structural_too=*/false)) {
        PlanarDiagram next = d;
        next.steps.push_back(s);
        if (opt.max_events &&
            cell_at(next, next.steps.size()).events.size() > opt.max_events)
          continue;
        const std::uint64_t key = structural_key(next);
        if (!seen.insert(key).second) continue;
        out.push_back(next);
        next_frontier.push_back(std::move(next));
        if (opt.max_diagrams && out.size() >= opt.max_diagrams) return out;
      }
    }
    frontier = std::move(next_frontier);
  }
  return out;
}

}  // namespace bordcalc
