#include "bordcalc/structural.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>

namespace bordcalc {

namespace {

std::vector<SliceStep> structural_moves(const LinearDiagram& cell, std::size_t max_events) {
  std::vector<SliceStep> out;
  const std::size_t n = cell.events.size();
  LinearDiagram probe = cell;
  auto try_push = [&](SliceStep s) {
    probe = cell;
    if (!apply_slice_step(probe, s)) out.push_back(s);
  };
  for (std::size_t at = 0; at + 1 < n; ++at) {
    try_push(interchange_step(at));
    try_push(symslide_step(SlideOp::TwistAcross, at));
    try_push(symslide_step(SlideOp::CancelPair, at));
  }
  for (std::size_t at = 0; at + 2 < n; ++at) {
    try_push(symslide_step(SlideOp::BraidLeft, at));
    try_push(symslide_step(SlideOp::BraidRight, at));
  }
  // Swap-pair creation, capped so canonical-path searches stay finite.
  if (n + 2 <= max_events) {
    SheetWord word = cell.domain;
    for (std::size_t at = 0; at <= n; ++at) {
      const int width = static_cast<int>(word.size());
      for (int off = 0; off + 1 < width; ++off)
        out.push_back(symslide_step(SlideOp::CreatePair, at, off));
      if (at < n) apply_event(word, cell.events[at]);
    }
  }
  return out;
}

struct PathNode {
  LinearDiagram cell;
  int parent = -1;
  SliceStep via{};
};

}  // namespace

std::optional<std::vector<SliceStep>> structural_path(const LinearDiagram& from,
                                                      const LinearDiagram& to,
                                                      std::size_t node_budget) {
  if (from == to) return std::vector<SliceStep>{};
  std::vector<PathNode> nodes;
  nodes.push_back({from, -1, {}});
  std::unordered_map<std::uint64_t, int> seen;
  seen.emplace(hash_linear(from), 0);
  const std::size_t max_events = std::max(from.events.size(), to.events.size()) + 2;
  std::deque<int> queue{0};
  while (!queue.empty() && nodes.size() < node_budget) {
    const int cur = queue.front();
    queue.pop_front();
    const LinearDiagram cell = nodes[cur].cell;
    for (const SliceStep& s : structural_moves(cell, max_events)) {
      LinearDiagram next = cell;
      if (apply_slice_step(next, s)) continue;
      const std::uint64_t h = hash_linear(next);
      if (seen.count(h)) continue;
      nodes.push_back({next, cur, s});
      const int id = static_cast<int>(nodes.size()) - 1;
      seen.emplace(h, id);
      if (next == to) {
        std::vector<SliceStep> path;
        for (int i = id; i > 0; i = nodes[i].parent) path.push_back(nodes[i].via);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(id);
    }
  }
  return std::nullopt;
}

bool structurally_equal_cells(const LinearDiagram& a, const LinearDiagram& b,
                              std::size_t node_budget) {
  return structural_path(a, b, node_budget).has_value();
}

namespace {

struct Window {
  std::size_t lo;   // event index
  std::size_t hi;   // one past last source event (lo == hi: insertion)
  int delta;        // event-count change
};

Window apply_window(const SliceStep& s) {
  const Generator2Cell& g = generator(s.gen);
  return {s.at, s.at + g.source.size(),
          static_cast<int>(g.target.size()) - static_cast<int>(g.source.size())};
}

Window structural_window(const SliceStep& s) {
  switch (s.kind) {
    case SliceStep::Kind::Interchange: return {s.at, s.at + 2, 0};
    case SliceStep::Kind::SymSlide:
      switch (s.op) {
        case SlideOp::TwistAcross: return {s.at, s.at + 2, 0};
        case SlideOp::CancelPair: return {s.at, s.at + 2, -2};
        case SlideOp::CreatePair: return {s.at, s.at, +2};
        case SlideOp::BraidLeft:
        case SlideOp::BraidRight: return {s.at, s.at + 3, 0};
      }
      break;
    case SliceStep::Kind::Apply: break;
  }
  return apply_window(s);
}

Window step_window(const SliceStep& s) {
  return s.kind == SliceStep::Kind::Apply ? apply_window(s) : structural_window(s);
}

// Transport of an Apply step A backward through the step B preceding it.
// Valid when the windows are disjoint in B's before-coordinates; the
// returned pair runs A first. Parallel patterns keep sheet offsets intact.
std::optional<std::pair<SliceStep, SliceStep>> commute_back(const SliceStep& b,
                                                            const SliceStep& a) {
  if (a.kind != SliceStep::Kind::Apply) return std::nullopt;
  const Window wb = step_window(b);
  Window wa = apply_window(a);
  const std::size_t b_out_hi = wb.lo + (wb.hi - wb.lo) + wb.delta;
  SliceStep a_first = a;
  SliceStep b_second = b;
  if (wa.lo >= b_out_hi) {
    a_first.at = wa.lo - wb.delta;
    b_second = b;  // b unaffected; a's window sits beyond it either way
    // After a runs first, b's window indices are shifted by a's delta only
    // if b sits right of a, which it does not here.
    return std::make_pair(a_first, b_second);
  }
  if (wa.hi <= wb.lo) {
    if (static_cast<int>(wb.lo) + wa.delta < 0) return std::nullopt;
    a_first = a;
    b_second.at = static_cast<std::size_t>(static_cast<int>(wb.lo) + wa.delta);
    return std::make_pair(a_first, b_second);
  }
  return std::nullopt;
}

std::tuple<std::size_t, int, int> apply_key(const SliceStep& s) {
  return {s.at, s.offset, static_cast<int>(s.gen)};
}

}  // namespace

namespace {

// Moves step j immediately before position i by successive backward
// commutations. Returns the rewritten list, or nullopt if any hop is
// blocked or invalidates the diagram.
std::optional<std::vector<SliceStep>> transport_to(const PlanarDiagram& base,
                                                   const LinearDiagram& target,
                                                   std::vector<SliceStep> steps, std::size_t j,
                                                   std::size_t i) {
  while (j > i) {
    auto swapped = commute_back(steps[j - 1], steps[j]);
    if (!swapped) return std::nullopt;
    steps[j - 1] = swapped->first;
    steps[j] = swapped->second;
    --j;
  }
  PlanarDiagram probe{base.source, steps};
  auto check = validate_planar(probe);
  if (!check || !(check.value() == target)) return std::nullopt;
  return steps;
}

// One selection pass: at every position, pull in the transportable Apply
// step with the least key.
PlanarDiagram selection_pass(const PlanarDiagram& p, const LinearDiagram& target) {
  PlanarDiagram cur = p;
  for (std::size_t i = 0; i < cur.steps.size(); ++i) {
    std::optional<std::tuple<std::size_t, int, int>> best_key;
    std::optional<std::vector<SliceStep>> best_steps;
    if (cur.steps[i].kind == SliceStep::Kind::Apply) best_key = apply_key(cur.steps[i]);
    for (std::size_t j = i + 1; j < cur.steps.size(); ++j) {
      if (cur.steps[j].kind != SliceStep::Kind::Apply) continue;
      auto moved = transport_to(cur, target, cur.steps, j, i);
      if (!moved) continue;
      const auto key = apply_key((*moved)[i]);
      if (!best_key || key < *best_key) {
        best_key = key;
        best_steps = std::move(moved);
      }
    }
    if (best_steps) cur.steps = std::move(*best_steps);
  }
  return cur;
}

// Replaces every maximal structural segment by a canonical path between its
// endpoint cells.
PlanarDiagram canonical_segments(const PlanarDiagram& p) {
  PlanarDiagram out{p.source, {}};
  LinearDiagram cell = p.source;
  std::size_t i = 0;
  while (i < p.steps.size()) {
    if (p.steps[i].kind == SliceStep::Kind::Apply) {
      out.steps.push_back(p.steps[i]);
      apply_slice_step(cell, p.steps[i]);
      ++i;
      continue;
    }
    LinearDiagram seg_end = cell;
    std::size_t j = i;
    std::vector<SliceStep> original;
    while (j < p.steps.size() && p.steps[j].kind != SliceStep::Kind::Apply) {
      original.push_back(p.steps[j]);
      apply_slice_step(seg_end, p.steps[j]);
      ++j;
    }
    auto canon = structural_path(cell, seg_end);
    const std::vector<SliceStep>& seg = canon ? *canon : original;
    out.steps.insert(out.steps.end(), seg.begin(), seg.end());
    cell = seg_end;
    i = j;
  }
  return out;
}

std::string planar_sort_key(const PlanarDiagram& p) { return planar_to_string(p); }

}  // namespace

PlanarDiagram structural_normal_form(const PlanarDiagram& p) {
  auto target = validate_planar(p);
  if (!target) return p;

  // Iterate selection-sort migration and segment canonicalization to a
  // fixpoint; if the composite map ever cycles, return the least member of
  // the cycle so the result stays deterministic and idempotent.
  std::vector<PlanarDiagram> trail;
  PlanarDiagram cur = canonical_segments(p);
  for (int guard = 0; guard < 64; ++guard) {
    for (const PlanarDiagram& seen : trail) {
      if (seen == cur) {
        const PlanarDiagram* best = &cur;
        bool in_cycle = false;
        for (const PlanarDiagram& d : trail) {
          if (d == cur) in_cycle = true;
          if (in_cycle && planar_sort_key(d) < planar_sort_key(*best)) best = &d;
        }
        return *best;
      }
    }
    trail.push_back(cur);
    PlanarDiagram next = canonical_segments(selection_pass(cur, target.value()));
    if (next == cur) return cur;
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t structural_key(const PlanarDiagram& p) {
  return hash_planar(structural_normal_form(p));
}

PlanarDiagram structural_shuffle(const PlanarDiagram& p, std::uint64_t seed, int moves) {
  PlanarDiagram cur = p;
  auto target = validate_planar(p);
  if (!target) return p;
  std::uint64_t state = seed * 6364136223846793005ull + 1442695040888963407ull;
  auto next_rand = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int m = 0; m < moves; ++m) {
    const std::uint64_t r = next_rand();
    if (cur.steps.empty()) break;
    const std::size_t i = r % cur.steps.size();
    switch (r % 3) {
      case 0: {
        // Commute two adjacent steps if legal either way.
        if (i + 1 >= cur.steps.size()) break;
        auto swapped = commute_back(cur.steps[i], cur.steps[i + 1]);
        if (!swapped) break;
        PlanarDiagram probe = cur;
        probe.steps[i] = swapped->first;
        probe.steps[i + 1] = swapped->second;
        auto check = validate_planar(probe);
        if (check && check.value() == target.value()) cur = std::move(probe);
        break;
      }
      case 1: {
        // Insert a structural move and its inverse.
        LinearDiagram cell = cell_at(cur, i);
        auto opts = structural_moves(cell, cell.events.size() + 2);
        if (opts.empty()) break;
        const SliceStep s = opts[next_rand() % opts.size()];
        LinearDiagram after = cell;
        if (apply_slice_step(after, s)) break;
        auto inv = inverse_step(cell, s);
        if (!inv) break;
        PlanarDiagram probe = cur;
        probe.steps.insert(probe.steps.begin() + i, {s, *inv});
        auto check = validate_planar(probe);
        if (check && check.value() == target.value()) cur = std::move(probe);
        break;
      }
      default: {
        // Replace a structural step by a detour of two.
        if (cur.steps[i].kind == SliceStep::Kind::Apply) break;
        LinearDiagram cell = cell_at(cur, i);
        LinearDiagram after = cell;
        if (apply_slice_step(after, cur.steps[i])) break;
        auto opts = structural_moves(cell, cell.events.size() + 2);
        if (opts.empty()) break;
        const SliceStep detour = opts[next_rand() % opts.size()];
        LinearDiagram mid = cell;
        if (apply_slice_step(mid, detour)) break;
        auto back = structural_path(mid, after, 4000);
        if (!back) break;
        PlanarDiagram probe = cur;
        probe.steps.erase(probe.steps.begin() + i);
        std::vector<SliceStep> repl{detour};
        repl.insert(repl.end(), back->begin(), back->end());
        probe.steps.insert(probe.steps.begin() + i, repl.begin(), repl.end());
        auto check = validate_planar(probe);
        if (check && check.value() == target.value()) cur = std::move(probe);
        break;
      }
    }
  }
  return cur;
}

}  // namespace bordcalc
