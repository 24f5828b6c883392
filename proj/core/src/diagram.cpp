#include "bordcalc/diagram.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace bordcalc {

SheetWord word_from_string(const std::string& text) {
  SheetWord w;
  for (char ch : text) {
    if (ch == '+') w.push_back(Sign::Plus);
    if (ch == '-') w.push_back(Sign::Minus);
  }
  return w;
}

std::string word_to_string(const SheetWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += sign_char(w[i]);
  }
  out += ')';
  return out;
}

std::string event_to_string(const LinearEvent& e) {
  std::ostringstream os;
  switch (e.kind) {
    case EventKind::ElbowRight: os << "elbowR @" << e.offset; break;
    case EventKind::ElbowLeft: os << "elbowL @" << e.offset; break;
    case EventKind::Swap: os << "swap @" << e.offset; break;
    case EventKind::Twist:
      os << "twist " << (e.dir == TwistDir::Straightforward ? "str" : "inv") << " @" << e.offset;
      break;
  }
  return os.str();
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::OffsetOutOfRange: return "OffsetOutOfRange";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::StructuralMoveInvalid: return "StructuralMoveInvalid";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::IllTyped: return "IllTyped";
    case ErrorCode::MissingAdjoint: return "MissingAdjoint";
    case ErrorCode::GlobularityViolation: return "GlobularityViolation";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnassignedSymbol: return "UnassignedSymbol";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::optional<Error> apply_event(SheetWord& word, const LinearEvent& event) {
  const int n = static_cast<int>(word.size());
  const int o = event.offset;
  switch (event.kind) {
    case EventKind::ElbowRight:
      if (o < 0 || o + 1 >= n)
        return Error{ErrorCode::OffsetOutOfRange, 0, "right elbow needs two sheets at offset"};
      if (word[o] != Sign::Plus || word[o + 1] != Sign::Minus)
        return Error{ErrorCode::SignMismatch, 0, "right elbow folds (+,-) only"};
      word.erase(word.begin() + o, word.begin() + o + 2);
      return std::nullopt;
    case EventKind::ElbowLeft:
      if (o < 0 || o > n)
        return Error{ErrorCode::OffsetOutOfRange, 0, "left elbow offset out of range"};
      word.insert(word.begin() + o, {Sign::Minus, Sign::Plus});
      return std::nullopt;
    case EventKind::Twist:
      if (o < 0 || o >= n)
        return Error{ErrorCode::OffsetOutOfRange, 0, "twist offset out of range"};
      return std::nullopt;
    case EventKind::Swap:
      if (o < 0 || o + 1 >= n)
        return Error{ErrorCode::OffsetOutOfRange, 0, "swap needs two sheets at offset"};
      std::swap(word[o], word[o + 1]);
      return std::nullopt;
  }
  return Error{ErrorCode::OffsetOutOfRange, 0, "unknown event"};
}

Expected<SheetWord> validate_linear(const LinearDiagram& d) {
  SheetWord word = d.domain;
  for (std::size_t i = 0; i < d.events.size(); ++i) {
    if (auto err = apply_event(word, d.events[i])) {
      err->index = i;
      err->message += " (event " + std::to_string(i) + ": " + event_to_string(d.events[i]) + ")";
      return *err;
    }
  }
  return word;
}

SheetWord word_at(const LinearDiagram& d, std::size_t count) {
  SheetWord word = d.domain;
  for (std::size_t i = 0; i < count && i < d.events.size(); ++i) apply_event(word, d.events[i]);
  return word;
}

Expected<LinearDiagram> compose_linear(const LinearDiagram& f, const LinearDiagram& g) {
  auto cod = validate_linear(f);
  if (!cod) return cod.error();
  if (cod.value() != g.domain)
    return Error{ErrorCode::BoundaryMismatch, 0,
                 "codomain " + word_to_string(cod.value()) + " != domain " + word_to_string(g.domain)};
  LinearDiagram out{f.domain, f.events};
  out.events.insert(out.events.end(), g.events.begin(), g.events.end());
  return out;
}

LinearDiagram tensor_linear(const LinearDiagram& f, const LinearDiagram& g) {
  // Left factor first: f acts unshifted, g shifted by the running width of
  // the f side at its end.
  LinearDiagram out;
  out.domain = f.domain;
  out.domain.insert(out.domain.end(), g.domain.begin(), g.domain.end());
  out.events = f.events;
  auto fcod = validate_linear(f);
  const int shift = fcod ? static_cast<int>(fcod.value().size()) : static_cast<int>(f.domain.size());
  for (LinearEvent e : g.events) {
    e.offset += shift;
    out.events.push_back(e);
  }
  return out;
}

std::string linear_to_string(const LinearDiagram& d) {
  std::ostringstream os;
  os << word_to_string(d.domain) << " [";
  for (std::size_t i = 0; i < d.events.size(); ++i) {
    if (i) os << "; ";
    os << event_to_string(d.events[i]);
  }
  os << "]";
  return os.str();
}

namespace {

struct EndpointTracer {
  // Tracks, per current sheet, the open strand end it continues.
  // Ends are ids: domain endpoints first, then fresh internal ids.
  std::vector<int> open;
  int next_id;
  std::vector<std::pair<int, int>> joins;  // pairs of strand-end ids welded together
  int loops = 0;
};

}  // namespace

Expected<StrandMatching> strand_matching(const LinearDiagram& d) {
  auto cod = validate_linear(d);
  if (!cod) return cod.error();

  const int nd = static_cast<int>(d.domain.size());
  // Union-find over endpoint ids; domain 0..nd-1, codomain follow, internal after.
  std::vector<int> parent;
  auto uf_make = [&]() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  };
  std::function<int(int)> uf_find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto uf_union = [&](int a, int b) { parent[uf_find(a)] = uf_find(b); };

  for (int i = 0; i < nd; ++i) uf_make();

  // `ends[k]`: endpoint id whose strand currently occupies sheet k.
  std::vector<int> ends(nd);
  std::iota(ends.begin(), ends.end(), 0);
  int loops = 0;

  SheetWord word = d.domain;
  for (const LinearEvent& e : d.events) {
    switch (e.kind) {
      case EventKind::ElbowRight: {
        const int a = ends[e.offset], b = ends[e.offset + 1];
        if (uf_find(a) == uf_find(b))
          ++loops;  // closing a strand onto itself
        else
          uf_union(a, b);
        ends.erase(ends.begin() + e.offset, ends.begin() + e.offset + 2);
        break;
      }
      case EventKind::ElbowLeft: {
        const int a = uf_make();
        const int b = uf_make();
        uf_union(a, b);  // elbow joins the newborn pair
        ends.insert(ends.begin() + e.offset, {a, b});
        break;
      }
      case EventKind::Swap:
        std::swap(ends[e.offset], ends[e.offset + 1]);
        break;
      case EventKind::Twist:
        break;
    }
    apply_event(word, e);
  }

  const int nc = static_cast<int>(cod.value().size());
  StrandMatching m;
  m.domain_size = nd;
  m.codomain_size = nc;
  m.loops = loops;
  // Codomain endpoint i is represented externally as nd + i.
  // Pair up all 2nd-count boundary endpoints by strand class.
  std::vector<int> boundary_class(nd + nc);
  for (int i = 0; i < nd; ++i) boundary_class[i] = uf_find(i);
  std::vector<int> internal_of_codomain(nc);
  for (int i = 0; i < nc; ++i) boundary_class[nd + i] = uf_find(ends[i]);
  std::vector<std::pair<int, int>> seen;  // (class, first endpoint)
  for (int i = 0; i < nd + nc; ++i) {
    const int cls = boundary_class[i];
    bool matched = false;
    for (auto& [c, first] : seen) {
      if (c == cls && first >= 0) {
        m.pairs.emplace_back(first, i);
        first = -1;
        matched = true;
        break;
      }
    }
    if (!matched) seen.emplace_back(cls, i);
  }
  return m;
}

std::uint64_t hash_linear(const LinearDiagram& d) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (Sign s : d.domain) mix(static_cast<std::uint64_t>(s) + 1);
  mix(0xABCDull);
  for (const LinearEvent& e : d.events) {
    mix(static_cast<std::uint64_t>(e.kind) + 11);
    mix(static_cast<std::uint64_t>(e.offset) + 101);
    if (e.kind == EventKind::Twist) mix(static_cast<std::uint64_t>(e.dir) + 7);
  }
  return h;
}

}  // namespace bordcalc
