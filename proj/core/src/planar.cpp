#include "bordcalc/planar.hpp"

#include <algorithm>
#include <sstream>

namespace bordcalc {

SliceStep apply_step(Gen g, std::size_t at, int offset) {
  SliceStep s;
  s.kind = SliceStep::Kind::Apply;
  s.gen = g;
  s.at = at;
  s.offset = offset;
  return s;
}

SliceStep interchange_step(std::size_t at) {
  SliceStep s;
  s.kind = SliceStep::Kind::Interchange;
  s.at = at;
  return s;
}

SliceStep symslide_step(SlideOp op, std::size_t at, int offset) {
  SliceStep s;
  s.kind = SliceStep::Kind::SymSlide;
  s.op = op;
  s.at = at;
  s.offset = offset;
  return s;
}

std::string step_to_string(const SliceStep& s) {
  std::ostringstream os;
  switch (s.kind) {
    case SliceStep::Kind::Apply:
      os << "apply " << gen_name(s.gen) << " @" << s.at << " #" << s.offset;
      break;
    case SliceStep::Kind::Interchange:
      os << "interchange @" << s.at;
      break;
    case SliceStep::Kind::SymSlide:
      switch (s.op) {
        case SlideOp::TwistAcross: os << "slide twist @" << s.at; break;
        case SlideOp::CancelPair: os << "slide cancel @" << s.at; break;
        case SlideOp::CreatePair: os << "slide create @" << s.at << " #" << s.offset; break;
        case SlideOp::BraidLeft: os << "slide braidL @" << s.at; break;
        case SlideOp::BraidRight: os << "slide braidR @" << s.at; break;
      }
      break;
  }
  return os.str();
}

namespace {

// Support of an event on the word *before* it acts: the sheet indices it
// reads or writes. Insertions occupy the gap at their offset, encoded as a
// half-open empty range.
struct Support {
  int lo;      // first touched sheet
  int hi;      // one past last touched sheet (lo == hi for pure insertions)
  int resize;  // word growth caused by the event
};

Support event_support(const LinearEvent& e) {
  switch (e.kind) {
    case EventKind::ElbowRight: return {e.offset, e.offset + 2, -2};
    case EventKind::ElbowLeft: return {e.offset, e.offset, +2};
    case EventKind::Twist: return {e.offset, e.offset + 1, 0};
    case EventKind::Swap: return {e.offset, e.offset + 2, 0};
  }
  return {0, 0, 0};
}

// Interchange of adjacent events a (first) then b. Returns the pair in the
// opposite order, with offsets renumbered, or nullopt if supports overlap.
std::optional<std::pair<LinearEvent, LinearEvent>> interchange_events(const LinearEvent& a,
                                                                      const LinearEvent& b) {
  const Support sa = event_support(a);
  // b's support lives in coordinates after a. a's output occupies
  // [sa.lo, sa.lo + out_width) there.
  const int out_width = (sa.hi - sa.lo) + sa.resize;
  Support sb = event_support(b);
  bool b_right;
  if (sb.lo >= sa.lo + out_width) {
    b_right = true;
    sb.lo -= sa.resize;  // translate to before-a coordinates
    sb.hi -= sa.resize;
  } else if (sb.hi <= sa.lo) {
    b_right = false;  // coordinates already agree
  } else {
    return std::nullopt;
  }

  LinearEvent b_first = b;
  b_first.offset = sb.lo;
  LinearEvent a_second = a;
  if (!b_right) a_second.offset += sb.resize;  // b's effect now precedes a
  return std::make_pair(b_first, a_second);
}

bool events_match(const std::vector<LinearEvent>& events, std::size_t at,
                  const std::vector<LinearEvent>& pattern, int offset) {
  if (at + pattern.size() > events.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    LinearEvent want = pattern[i];
    want.offset += offset;
    if (!(events[at + i] == want)) return false;
  }
  return true;
}

bool context_ok(const SheetWord& word, const SheetWord& context, int offset) {
  if (offset < 0) return false;
  if (offset + static_cast<int>(context.size()) > static_cast<int>(word.size())) return false;
  for (std::size_t i = 0; i < context.size(); ++i)
    if (word[offset + i] != context[i]) return false;
  return true;
}

}  // namespace

std::optional<Error> apply_slice_step(LinearDiagram& cell, const SliceStep& step) {
  auto& ev = cell.events;
  switch (step.kind) {
    case SliceStep::Kind::Apply: {
      const Generator2Cell& g = generator(step.gen);
      if (step.at > ev.size())
        return Error{ErrorCode::PatternMismatch, 0, "apply anchor past end"};
      SheetWord word = cell.domain;
      for (std::size_t i = 0; i < step.at; ++i)
        if (auto err = apply_event(word, ev[i])) return err;
      if (!context_ok(word, g.context, step.offset))
        return Error{ErrorCode::PatternMismatch, 0,
                     std::string("context of ") + std::string(gen_name(step.gen)) +
                         " not met at offset " + std::to_string(step.offset)};
      if (!events_match(ev, step.at, g.source, step.offset))
        return Error{ErrorCode::PatternMismatch, 0,
                     std::string("source pattern of ") + std::string(gen_name(step.gen)) +
                         " not found at " + std::to_string(step.at)};
      std::vector<LinearEvent> repl = g.target;
      for (LinearEvent& e : repl) e.offset += step.offset;
      ev.erase(ev.begin() + step.at, ev.begin() + step.at + g.source.size());
      ev.insert(ev.begin() + step.at, repl.begin(), repl.end());
      return std::nullopt;
    }
    case SliceStep::Kind::Interchange: {
      if (step.at + 1 >= ev.size())
        return Error{ErrorCode::StructuralMoveInvalid, 0, "interchange needs two events"};
      auto swapped = interchange_events(ev[step.at], ev[step.at + 1]);
      if (!swapped)
        return Error{ErrorCode::StructuralMoveInvalid, 0, "events do not have disjoint support"};
      ev[step.at] = swapped->first;
      ev[step.at + 1] = swapped->second;
      return std::nullopt;
    }
    case SliceStep::Kind::SymSlide: {
      switch (step.op) {
        case SlideOp::TwistAcross: {
          if (step.at + 1 >= ev.size())
            return Error{ErrorCode::StructuralMoveInvalid, 0, "slide needs two events"};
          LinearEvent& a = ev[step.at];
          LinearEvent& b = ev[step.at + 1];
          if (a.kind == EventKind::Swap && b.kind == EventKind::Twist &&
              (b.offset == a.offset || b.offset == a.offset + 1)) {
            const int other = (b.offset == a.offset) ? a.offset + 1 : a.offset;
            LinearEvent tw = twist(other, b.dir);
            b = a;
            a = tw;
            return std::nullopt;
          }
          if (a.kind == EventKind::Twist && b.kind == EventKind::Swap &&
              (a.offset == b.offset || a.offset == b.offset + 1)) {
            const int other = (a.offset == b.offset) ? b.offset + 1 : b.offset;
            LinearEvent sw = b;
            b = twist(other, a.dir);
            a = sw;
            return std::nullopt;
          }
          return Error{ErrorCode::StructuralMoveInvalid, 0, "not a twist against a swap"};
        }
        case SlideOp::CancelPair: {
          if (step.at + 1 >= ev.size() || ev[step.at].kind != EventKind::Swap ||
              ev[step.at + 1].kind != EventKind::Swap ||
              ev[step.at].offset != ev[step.at + 1].offset)
            return Error{ErrorCode::StructuralMoveInvalid, 0, "no adjacent double swap"};
          ev.erase(ev.begin() + step.at, ev.begin() + step.at + 2);
          return std::nullopt;
        }
        case SlideOp::CreatePair: {
          if (step.at > ev.size())
            return Error{ErrorCode::StructuralMoveInvalid, 0, "create past end"};
          SheetWord word = cell.domain;
          for (std::size_t i = 0; i < step.at; ++i)
            if (auto err = apply_event(word, ev[i])) return err;
          if (step.offset < 0 || step.offset + 1 >= static_cast<int>(word.size()))
            return Error{ErrorCode::StructuralMoveInvalid, 0, "swap pair out of range"};
          ev.insert(ev.begin() + step.at, {swap(step.offset), swap(step.offset)});
          return std::nullopt;
        }
        case SlideOp::BraidLeft:
        case SlideOp::BraidRight: {
          if (step.at + 2 >= ev.size())
            return Error{ErrorCode::StructuralMoveInvalid, 0, "braid needs three events"};
          LinearEvent* e = &ev[step.at];
          const bool left = step.op == SlideOp::BraidLeft;
          const int o = e[0].offset;
          const int p = left ? o + 1 : o - 1;
          if (e[0].kind != EventKind::Swap || e[1].kind != EventKind::Swap ||
              e[2].kind != EventKind::Swap || e[1].offset != p || e[2].offset != o || p < 0)
            return Error{ErrorCode::StructuralMoveInvalid, 0, "no braid triple"};
          e[0].offset = p;
          e[1].offset = o;
          e[2].offset = p;
          return std::nullopt;
        }
      }
      return Error{ErrorCode::StructuralMoveInvalid, 0, "unknown slide"};
    }
  }
  return Error{ErrorCode::StructuralMoveInvalid, 0, "unknown step"};
}

std::optional<SliceStep> inverse_step(const LinearDiagram& before, const SliceStep& step) {
  switch (step.kind) {
    case SliceStep::Kind::Apply: {
      const Generator2Cell& g = generator(step.gen);
      if (!g.invertible) return std::nullopt;
      return apply_step(g.inverse, step.at, step.offset);
    }
    case SliceStep::Kind::Interchange:
      return interchange_step(step.at);
    case SliceStep::Kind::SymSlide:
      switch (step.op) {
        case SlideOp::TwistAcross:
          return symslide_step(SlideOp::TwistAcross, step.at);
        case SlideOp::CancelPair: {
          if (step.at >= before.events.size()) return std::nullopt;
          return symslide_step(SlideOp::CreatePair, step.at, before.events[step.at].offset);
        }
        case SlideOp::CreatePair:
          return symslide_step(SlideOp::CancelPair, step.at);
        case SlideOp::BraidLeft:
          return symslide_step(SlideOp::BraidRight, step.at);
        case SlideOp::BraidRight:
          return symslide_step(SlideOp::BraidLeft, step.at);
      }
  }
  return std::nullopt;
}

Expected<LinearDiagram> validate_planar(const PlanarDiagram& p) {
  auto src = validate_linear(p.source);
  if (!src) return src.error();
  LinearDiagram cell = p.source;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (auto err = apply_slice_step(cell, p.steps[i])) {
      err->index = i;
      err->message += " (step " + std::to_string(i) + ": " + step_to_string(p.steps[i]) + ")";
      return *err;
    }
  }
  return cell;
}

LinearDiagram cell_at(const PlanarDiagram& p, std::size_t count) {
  LinearDiagram cell = p.source;
  for (std::size_t i = 0; i < count && i < p.steps.size(); ++i) apply_slice_step(cell, p.steps[i]);
  return cell;
}

Expected<PlanarDiagram> vcompose_planar(const PlanarDiagram& p, const PlanarDiagram& q) {
  auto target = validate_planar(p);
  if (!target) return target.error();
  if (!(target.value() == q.source))
    return Error{ErrorCode::BoundaryMismatch, 0, "target of first != source of second"};
  PlanarDiagram out{p.source, p.steps};
  out.steps.insert(out.steps.end(), q.steps.begin(), q.steps.end());
  return out;
}

PlanarDiagram tensor_planar(const PlanarDiagram& p, const PlanarDiagram& q) {
  PlanarDiagram out;
  out.source = tensor_linear(p.source, q.source);
  out.steps = p.steps;
  // q's steps run on the right factor: shift event anchors by the (evolving)
  // length of the left factor's event list and sheet offsets by the left
  // codomain width.
  auto pcod = validate_linear(p.source);
  const int width = pcod ? static_cast<int>(pcod.value().size())
                         : static_cast<int>(p.source.domain.size());
  // Event-list length of the left half stays fixed while q's steps run.
  LinearDiagram left_final = p.source;
  for (const SliceStep& s : p.steps) apply_slice_step(left_final, s);
  const std::size_t shift_at = left_final.events.size();
  for (SliceStep s : q.steps) {
    s.at += shift_at;
    if (s.kind == SliceStep::Kind::Apply || (s.kind == SliceStep::Kind::SymSlide &&
                                             s.op == SlideOp::CreatePair))
      s.offset += width;
    out.steps.push_back(s);
  }
  return out;
}

std::optional<PlanarDiagram> invert_planar(const PlanarDiagram& p) {
  auto target = validate_planar(p);
  if (!target) return std::nullopt;
  PlanarDiagram out{target.value(), {}};
  LinearDiagram cell = p.source;
  std::vector<SliceStep> inverses;
  for (const SliceStep& s : p.steps) {
    auto inv = inverse_step(cell, s);
    if (!inv) return std::nullopt;
    inverses.push_back(*inv);
    apply_slice_step(cell, s);
  }
  out.steps.assign(inverses.rbegin(), inverses.rend());
  return out;
}

std::uint64_t hash_planar(const PlanarDiagram& p) {
  std::uint64_t h = hash_linear(p.source);
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const SliceStep& s : p.steps) {
    mix(static_cast<std::uint64_t>(s.kind) + 3);
    mix(static_cast<std::uint64_t>(s.gen) + 5);
    mix(s.at + 17);
    mix(static_cast<std::uint64_t>(s.offset) + 23);
    mix(static_cast<std::uint64_t>(s.op) + 29);
  }
  return h;
}

std::string planar_to_string(const PlanarDiagram& p) {
  std::ostringstream os;
  os << linear_to_string(p.source) << " {";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (i) os << "; ";
    os << step_to_string(p.steps[i]);
  }
  os << "}";
  return os.str();
}

std::vector<SliceStep> applicable_steps(const LinearDiagram& cell, bool cfd_only,
                                        bool structural_too) {
  std::vector<SliceStep> out;
  const std::size_t n = cell.events.size();

  // Precompute running words at each event index.
  std::vector<SheetWord> words(n + 1);
  words[0] = cell.domain;
  for (std::size_t i = 0; i < n; ++i) {
    words[i + 1] = words[i];
    if (apply_event(words[i + 1], cell.events[i])) return out;  // invalid cell
  }

  auto cfd_allows = [&](Gen g, std::size_t at, int offset) {
    if (!cfd_only) return true;
    if (!in_cfd_fragment(g)) return false;
    // Morse cells place twists on their own elbow pairs (positive sheets of
    // the expansion), never a bare negative twist; nothing more to check.
    (void)at;
    (void)offset;
    return true;
  };

  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    const Gen g = static_cast<Gen>(i);
    const Generator2Cell& cat = generator(g);
    // Empty-source generators insert at any anchor 0..n; the loop bound
    // covers both shapes.
    for (std::size_t at = 0; at + cat.source.size() <= n; ++at) {
      const int width = static_cast<int>(words[at].size());
      for (int off = 0; off <= width; ++off) {
        if (!context_ok(words[at], cat.context, off)) continue;
        if (!events_match(cell.events, at, cat.source, off)) continue;
        if (!cfd_allows(g, at, off)) continue;
        out.push_back(apply_step(g, at, off));
      }
    }
  }

  if (structural_too) {
    LinearDiagram probe = cell;
    for (std::size_t at = 0; at + 1 < n; ++at) {
      SliceStep s = interchange_step(at);
      probe = cell;
      if (!apply_slice_step(probe, s)) out.push_back(s);
      s = symslide_step(SlideOp::TwistAcross, at);
      probe = cell;
      if (!apply_slice_step(probe, s)) out.push_back(s);
      s = symslide_step(SlideOp::CancelPair, at);
      probe = cell;
      if (!apply_slice_step(probe, s)) out.push_back(s);
    }
    for (std::size_t at = 0; at + 2 < n; ++at) {
      for (SlideOp op : {SlideOp::BraidLeft, SlideOp::BraidRight}) {
        SliceStep s = symslide_step(op, at);
        probe = cell;
        if (!apply_slice_step(probe, s)) out.push_back(s);
      }
    }
  }
  return out;
}

}  // namespace bordcalc
