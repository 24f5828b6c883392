#include "bordcalc/generators.hpp"

#include <unordered_map>

namespace bordcalc {

namespace {

constexpr TwistDir kStr = TwistDir::Straightforward;
constexpr TwistDir kInv = TwistDir::Inverted;

std::array<Generator2Cell, kGeneratorCount> build_catalog() {
  std::array<Generator2Cell, kGeneratorCount> cat{};
  auto set = [&](Gen g, std::vector<LinearEvent> src, std::vector<LinearEvent> tgt,
                 SheetWord ctx, int crossing_sign, int euler_delta) {
    Generator2Cell cell;
    cell.name = g;
    cell.source = std::move(src);
    cell.target = std::move(tgt);
    cell.context = std::move(ctx);
    cell.crossing_sign = crossing_sign;
    cell.euler_delta = euler_delta;
    cat[static_cast<std::size_t>(g)] = std::move(cell);
  };
  auto pair_up = [&](Gen a, Gen b) {
    cat[static_cast<std::size_t>(a)].invertible = true;
    cat[static_cast<std::size_t>(a)].inverse = b;
    cat[static_cast<std::size_t>(b)].invertible = true;
    cat[static_cast<std::size_t>(b)].inverse = a;
  };

  const SheetWord plus{Sign::Plus};
  const SheetWord minus{Sign::Minus};
  const SheetWord plus_minus{Sign::Plus, Sign::Minus};
  const SheetWord minus_plus{Sign::Minus, Sign::Plus};

  // Morse cells. e^L = b (R x q^-1) c reads as [elbowL, twist inv, swap];
  // c^L = e (q x R) b reads as [swap, twist str, elbowR].
  set(Gen::MuE, {}, {elbow_left(0), twist(1, kInv), swap(0), elbow_right(0)}, {}, 0, +1);
  set(Gen::EpsE, {elbow_right(0), elbow_left(0), twist(1, kInv), swap(0)}, {}, plus_minus, 0, -1);
  set(Gen::MuC, {}, {swap(0), twist(0, kStr), elbow_right(0), elbow_left(0)}, minus_plus, 0, -1);
  set(Gen::EpsC, {elbow_left(0), swap(0), twist(0, kStr), elbow_right(0)}, {}, {}, 0, +1);

  // Cusp isomorphisms.
  set(Gen::Alpha, {elbow_left(1), elbow_right(0)}, {}, plus, 0, 0);
  set(Gen::AlphaInv, {}, {elbow_left(1), elbow_right(0)}, plus, 0, 0);
  set(Gen::Beta, {elbow_left(0), elbow_right(1)}, {}, minus, 0, 0);
  set(Gen::BetaInv, {}, {elbow_left(0), elbow_right(1)}, minus, 0, 0);

  // Twist birth-death: psi: q q^-1 => id, phi: q^-1 q => id on the positive
  // point; theta, vartheta the same on the negative one.
  set(Gen::Psi, {twist(0, kInv), twist(0, kStr)}, {}, plus, 0, 0);
  set(Gen::PsiInv, {}, {twist(0, kInv), twist(0, kStr)}, plus, 0, 0);
  set(Gen::Phi, {twist(0, kStr), twist(0, kInv)}, {}, plus, 0, 0);
  set(Gen::PhiInv, {}, {twist(0, kStr), twist(0, kInv)}, plus, 0, 0);
  set(Gen::Theta, {twist(0, kInv), twist(0, kStr)}, {}, minus, 0, 0);
  set(Gen::ThetaInv, {}, {twist(0, kInv), twist(0, kStr)}, minus, 0, 0);
  set(Gen::Vartheta, {twist(0, kStr), twist(0, kInv)}, {}, minus, 0, 0);
  set(Gen::VarthetaInv, {}, {twist(0, kStr), twist(0, kInv)}, minus, 0, 0);

  // Crossings at a left elbow (coevaluation). The elbow's output pair is
  // (minus, plus) at the anchor; the twist hops between those two sheets.
  set(Gen::ChiPlus, {elbow_left(0), twist(1, kStr)}, {elbow_left(0), twist(0, kInv)}, {}, -1, 0);
  set(Gen::ChiPlusInv, {elbow_left(0), twist(0, kInv)}, {elbow_left(0), twist(1, kStr)}, {}, +1, 0);
  set(Gen::ChiMinus, {elbow_left(0), twist(1, kInv)}, {elbow_left(0), twist(0, kStr)}, {}, +1, 0);
  set(Gen::ChiMinusInv, {elbow_left(0), twist(0, kStr)}, {elbow_left(0), twist(1, kInv)}, {}, -1, 0);

  // Crossings at a right elbow (evaluation) on a (plus, minus) context pair.
  set(Gen::ZetaPlus, {twist(0, kStr), elbow_right(0)}, {twist(1, kInv), elbow_right(0)},
      plus_minus, -1, 0);
  set(Gen::ZetaPlusInv, {twist(1, kInv), elbow_right(0)}, {twist(0, kStr), elbow_right(0)},
      plus_minus, +1, 0);
  set(Gen::ZetaMinus, {twist(0, kInv), elbow_right(0)}, {twist(1, kStr), elbow_right(0)},
      plus_minus, +1, 0);
  set(Gen::ZetaMinusInv, {twist(1, kStr), elbow_right(0)}, {twist(0, kInv), elbow_right(0)},
      plus_minus, -1, 0);

  pair_up(Gen::Alpha, Gen::AlphaInv);
  pair_up(Gen::Beta, Gen::BetaInv);
  pair_up(Gen::Psi, Gen::PsiInv);
  pair_up(Gen::Phi, Gen::PhiInv);
  pair_up(Gen::Theta, Gen::ThetaInv);
  pair_up(Gen::Vartheta, Gen::VarthetaInv);
  pair_up(Gen::ChiPlus, Gen::ChiPlusInv);
  pair_up(Gen::ChiMinus, Gen::ChiMinusInv);
  pair_up(Gen::ZetaPlus, Gen::ZetaPlusInv);
  pair_up(Gen::ZetaMinus, Gen::ZetaMinusInv);

  return cat;
}

const std::unordered_map<std::string_view, Gen>& name_index() {
  static const std::unordered_map<std::string_view, Gen> idx = [] {
    std::unordered_map<std::string_view, Gen> m;
    for (std::size_t i = 0; i < kGeneratorCount; ++i) {
      const Gen g = static_cast<Gen>(i);
      m.emplace(gen_name(g), g);
    }
    return m;
  }();
  return idx;
}

}  // namespace

const std::array<Generator2Cell, kGeneratorCount>& generator_catalog() {
  static const auto cat = build_catalog();
  return cat;
}

const Generator2Cell& generator(Gen g) { return generator_catalog()[static_cast<std::size_t>(g)]; }

std::string_view gen_name(Gen g) {
  switch (g) {
    case Gen::MuE: return "mu_e";
    case Gen::EpsE: return "eps_e";
    case Gen::MuC: return "mu_c";
    case Gen::EpsC: return "eps_c";
    case Gen::Alpha: return "alpha";
    case Gen::AlphaInv: return "alpha_inv";
    case Gen::Beta: return "beta";
    case Gen::BetaInv: return "beta_inv";
    case Gen::Psi: return "psi";
    case Gen::PsiInv: return "psi_inv";
    case Gen::Phi: return "phi";
    case Gen::PhiInv: return "phi_inv";
    case Gen::Theta: return "theta";
    case Gen::ThetaInv: return "theta_inv";
    case Gen::Vartheta: return "vartheta";
    case Gen::VarthetaInv: return "vartheta_inv";
    case Gen::ChiPlus: return "chi_plus";
    case Gen::ChiPlusInv: return "chi_plus_inv";
    case Gen::ChiMinus: return "chi_minus";
    case Gen::ChiMinusInv: return "chi_minus_inv";
    case Gen::ZetaPlus: return "zeta_plus";
    case Gen::ZetaPlusInv: return "zeta_plus_inv";
    case Gen::ZetaMinus: return "zeta_minus";
    case Gen::ZetaMinusInv: return "zeta_minus_inv";
  }
  return "?";
}

std::optional<Gen> gen_by_name(std::string_view name) {
  auto it = name_index().find(name);
  if (it == name_index().end()) return std::nullopt;
  return it->second;
}

bool is_morse(Gen g) {
  return g == Gen::MuE || g == Gen::EpsE || g == Gen::MuC || g == Gen::EpsC;
}

bool is_cusp(Gen g) {
  return g == Gen::Alpha || g == Gen::AlphaInv || g == Gen::Beta || g == Gen::BetaInv;
}

bool is_crossing(Gen g) { return generator(g).crossing_sign != 0; }

bool is_twist_homotopy(Gen g) {
  switch (g) {
    case Gen::Psi: case Gen::PsiInv: case Gen::Phi: case Gen::PhiInv:
    case Gen::Theta: case Gen::ThetaInv: case Gen::Vartheta: case Gen::VarthetaInv:
      return true;
    default:
      return false;
  }
}

bool in_cfd_fragment(Gen g) {
  if (is_morse(g) || is_cusp(g)) return true;
  switch (g) {
    case Gen::Psi: case Gen::PsiInv: case Gen::Phi: case Gen::PhiInv:
      return true;
    default:
      return false;
  }
}

}  // namespace bordcalc
