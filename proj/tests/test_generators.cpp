#include "bordcalc/generators.hpp"

#include <set>

#include "doctest.h"

using namespace bordcalc;

namespace {

// Runs a pattern over a context word extended on both sides and returns the
// resulting word, or nullopt if some event fails.
std::optional<SheetWord> run_pattern(const std::vector<LinearEvent>& pattern,
                                     const SheetWord& ambient, int anchor) {
  SheetWord word = ambient;
  for (LinearEvent e : pattern) {
    e.offset += anchor;
    if (apply_event(word, e)) return std::nullopt;
  }
  return word;
}

std::vector<SheetWord> ambient_words(const SheetWord& context) {
  // Context word padded by every sign combination on one extra sheet either
  // side, exercising all required ambient signs.
  std::vector<SheetWord> out;
  out.push_back(context);
  for (Sign l : {Sign::Plus, Sign::Minus}) {
    SheetWord w{l};
    w.insert(w.end(), context.begin(), context.end());
    out.push_back(w);
    for (Sign r : {Sign::Plus, Sign::Minus}) {
      SheetWord w2 = w;
      w2.push_back(r);
      out.push_back(w2);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("catalog has exactly 24 distinct generators") {
  const auto& cat = generator_catalog();
  CHECK(cat.size() == 24);
  std::set<std::string_view> names;
  for (const auto& g : cat) names.insert(gen_name(g.name));
  CHECK(names.size() == 24);
}

TEST_CASE("mu_e source pattern is empty: endomorphism of the unit") {
  const auto& g = generator(Gen::MuE);
  CHECK(g.source.empty());
  CHECK(g.context.empty());
  REQUIRE(g.target.size() == 4);
  CHECK(g.target[0] == elbow_left(0));
  CHECK(g.target[1] == twist(1, TwistDir::Inverted));
  CHECK(g.target[2] == swap(0));
  CHECK(g.target[3] == elbow_right(0));
}

TEST_CASE("eps_c source is the c then c^L circle") {
  const auto& g = generator(Gen::EpsC);
  REQUIRE(g.source.size() == 4);
  CHECK(g.source[0] == elbow_left(0));
  CHECK(g.source[1] == swap(0));
  CHECK(g.source[2] == twist(0, TwistDir::Straightforward));
  CHECK(g.source[3] == elbow_right(0));
  CHECK(g.target.empty());
}

TEST_CASE("every generator is parallel in every admissible context") {
  for (const auto& g : generator_catalog()) {
    for (const SheetWord& ambient : ambient_words(g.context)) {
      // The anchor sits where the context starts within the ambient word.
      for (int anchor = 0;
           anchor + static_cast<int>(g.context.size()) <= static_cast<int>(ambient.size());
           ++anchor) {
        bool ctx_ok = true;
        for (std::size_t i = 0; i < g.context.size(); ++i)
          if (ambient[anchor + i] != g.context[i]) ctx_ok = false;
        if (!ctx_ok) continue;
        auto src = run_pattern(g.source, ambient, anchor);
        auto tgt = run_pattern(g.target, ambient, anchor);
        REQUIRE_MESSAGE(src.has_value(), gen_name(g.name));
        REQUIRE_MESSAGE(tgt.has_value(), gen_name(g.name));
        CHECK_MESSAGE(*src == *tgt, gen_name(g.name));
      }
    }
  }
}

TEST_CASE("alpha is parallel to the identity on (+)") {
  const auto& g = generator(Gen::Alpha);
  auto src = run_pattern(g.source, {Sign::Plus}, 0);
  auto tgt = run_pattern(g.target, {Sign::Plus}, 0);
  REQUIRE(src.has_value());
  REQUIRE(tgt.has_value());
  CHECK(*src == SheetWord{Sign::Plus});
  CHECK(*tgt == SheetWord{Sign::Plus});
}

TEST_CASE("inverse pairing is involutive and Morse cells are not invertible") {
  for (const auto& g : generator_catalog()) {
    if (is_morse(g.name)) {
      CHECK(!g.invertible);
    } else {
      REQUIRE(g.invertible);
      const auto& inv = generator(g.inverse);
      CHECK(inv.inverse == g.name);
      CHECK(inv.source == g.target);
      CHECK(inv.target == g.source);
    }
  }
}

TEST_CASE("crossing signs cancel in inverse pairs") {
  for (const auto& g : generator_catalog()) {
    if (!is_crossing(g.name)) continue;
    CHECK(g.crossing_sign + generator(g.inverse).crossing_sign == 0);
  }
}

TEST_CASE("name round trip") {
  for (const auto& g : generator_catalog()) {
    auto back = gen_by_name(gen_name(g.name));
    REQUIRE(back.has_value());
    CHECK(*back == g.name);
  }
  CHECK(!gen_by_name("nonsense").has_value());
}
