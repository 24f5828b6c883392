#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Sheet words, linear events and framed linear diagrams.
//
// A sheet word is an ordered sequence of signs; index 0 is the leftmost
// tensor factor (drawn topmost). A linear diagram is a word together with an
// ordered list of events read left to right, domain to codomain. Right
// elbows fold a (plus, minus) pair, left elbows emit (minus, plus), twists
// mark a full framing rotation on one sheet, swaps transpose adjacent
// sheets.

namespace bordcalc {

enum class Sign : std::uint8_t { Plus, Minus };

inline Sign flipped(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

using SheetWord = std::vector<Sign>;

SheetWord word_from_string(const std::string& text);  // "+-+" or "(+,-,+)"
std::string word_to_string(const SheetWord& w);

enum class EventKind : std::uint8_t { ElbowRight, ElbowLeft, Twist, Swap };

enum class TwistDir : std::uint8_t { Straightforward, Inverted };

inline TwistDir flipped(TwistDir d) {
  return d == TwistDir::Straightforward ? TwistDir::Inverted : TwistDir::Straightforward;
}

struct LinearEvent {
  EventKind kind = EventKind::Twist;
  int offset = 0;
  TwistDir dir = TwistDir::Straightforward;  // Twist only

  friend bool operator==(const LinearEvent&, const LinearEvent&) = default;
};

inline LinearEvent elbow_right(int offset) { return {EventKind::ElbowRight, offset, {}}; }
inline LinearEvent elbow_left(int offset) { return {EventKind::ElbowLeft, offset, {}}; }
inline LinearEvent twist(int offset, TwistDir dir) { return {EventKind::Twist, offset, dir}; }
inline LinearEvent swap(int offset) { return {EventKind::Swap, offset, {}}; }

std::string event_to_string(const LinearEvent& e);

enum class ErrorCode : std::uint8_t {
  SignMismatch,
  OffsetOutOfRange,
  BoundaryMismatch,
  PatternMismatch,
  StructuralMoveInvalid,
  NotParallel,
  NoMatch,
  UnknownRule,
  NotInvertible,
  IllTyped,
  MissingAdjoint,
  GlobularityViolation,
  UnknownSymbol,
  UnassignedSymbol,
  ParseError,
};

const char* error_code_name(ErrorCode code);

struct Error {
  ErrorCode code{};
  std::size_t index = 0;  // first failing event / step / line
  std::string message;
};

// Minimal value-or-error carrier; keeps hot validation paths exception free.
template <typename T>
class Expected {
 public:
  Expected(T value) : value_(std::move(value)) {}
  Expected(Error error) : error_(std::move(error)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const { return *value_; }
  T& value() { return *value_; }
  const Error& error() const { return *error_; }

 private:
  std::optional<T> value_;
  std::optional<Error> error_;
};

// Applies one event to `word` in place. Returns nullopt on success, or the
// reason it does not apply.
std::optional<Error> apply_event(SheetWord& word, const LinearEvent& event);

struct LinearDiagram {
  SheetWord domain;
  std::vector<LinearEvent> events;

  friend bool operator==(const LinearDiagram&, const LinearDiagram&) = default;
};

inline LinearDiagram identity_1cell(SheetWord word) { return {std::move(word), {}}; }

// Runs the events over the domain; on success the codomain, otherwise the
// first failing event index and reason.
Expected<SheetWord> validate_linear(const LinearDiagram& d);

// Word after the first `count` events (requires a valid diagram prefix).
SheetWord word_at(const LinearDiagram& d, std::size_t count);

Expected<LinearDiagram> compose_linear(const LinearDiagram& f, const LinearDiagram& g);
LinearDiagram tensor_linear(const LinearDiagram& f, const LinearDiagram& g);

std::string linear_to_string(const LinearDiagram& d);

// Strand-level structure of the 1-manifold a linear diagram reconstructs:
// intervals matching boundary endpoints plus closed loops.
struct StrandMatching {
  // Endpoint ids: domain sheets are 0..|domain|-1, codomain sheets follow.
  std::vector<std::pair<int, int>> pairs;
  int loops = 0;
  int domain_size = 0;
  int codomain_size = 0;
};

Expected<StrandMatching> strand_matching(const LinearDiagram& d);

std::uint64_t hash_linear(const LinearDiagram& d);

}  // namespace bordcalc
