#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bolext/group.hpp"

namespace bolext {

/// One of the eight maps G x G -> G x G built from swapping the two
/// coordinates and inverting either output coordinate:
///
///   (a, b) -> (u, v),  u = (swap ? b : a)^(inv_first ? -1 : 1),
///                      v = (swap ? a : b)^(inv_second ? -1 : 1).
///
/// Each map also stands for the twisted multiplication (a, b) -> u v on G.
/// The code packs the flags as swap*4 + inv_first*2 + inv_second, which gives
/// the canonical order xy, xy-, x-y, x-y-, yx, yx-, y-x, y-x-.
class ThetaMap {
 public:
  constexpr ThetaMap() = default;
  constexpr ThetaMap(bool swap, bool inv_first, bool inv_second)
      : code_(static_cast<std::uint8_t>((swap ? 4 : 0) | (inv_first ? 2 : 0) | (inv_second ? 1 : 0))) {}

  static constexpr ThetaMap from_code(unsigned code) {
    ThetaMap t;
    t.code_ = static_cast<std::uint8_t>(code & 7u);
    return t;
  }

  [[nodiscard]] constexpr bool swap() const noexcept { return code_ & 4; }
  [[nodiscard]] constexpr bool inv_first() const noexcept { return code_ & 2; }
  [[nodiscard]] constexpr bool inv_second() const noexcept { return code_ & 1; }
  [[nodiscard]] constexpr unsigned code() const noexcept { return code_; }

  [[nodiscard]] std::string_view name() const noexcept { return kNames[code_]; }

  static ThetaMap parse(std::string_view s) {
    for (unsigned c = 0; c < 8; ++c)
      if (kNames[c] == s) return from_code(c);
    throw PreconditionError("unknown map name '" + std::string(s) + "' (expected one of xy, xy-, x-y, x-y-, "
                            "yx, yx-, y-x, y-x-)");
  }

  friend constexpr bool operator==(ThetaMap, ThetaMap) = default;
  friend constexpr auto operator<=>(ThetaMap a, ThetaMap b) { return a.code_ <=> b.code_; }

  static constexpr std::array<std::string_view, 8> kNames{"xy", "xy-", "x-y", "x-y-", "yx", "yx-", "y-x", "y-x-"};

 private:
  std::uint8_t code_ = 0;
};

namespace theta {
inline constexpr ThetaMap xy = ThetaMap::from_code(0);
inline constexpr ThetaMap xy_ = ThetaMap::from_code(1);    // (a, b^-1)
inline constexpr ThetaMap x_y = ThetaMap::from_code(2);    // (a^-1, b)
inline constexpr ThetaMap x_y_ = ThetaMap::from_code(3);   // (a^-1, b^-1)
inline constexpr ThetaMap yx = ThetaMap::from_code(4);     // (b, a)
inline constexpr ThetaMap yx_ = ThetaMap::from_code(5);    // (b, a^-1)
inline constexpr ThetaMap y_x = ThetaMap::from_code(6);    // (b^-1, a)
inline constexpr ThetaMap y_x_ = ThetaMap::from_code(7);   // (b^-1, a^-1)

inline constexpr std::array<ThetaMap, 8> all{xy, xy_, x_y, x_y_, yx, yx_, y_x, y_x_};
}  // namespace theta

inline std::pair<Element, Element> apply_pair(ThetaMap t, Element a, Element b, const FiniteGroup& g) {
  if (a >= g.order() || b >= g.order()) throw std::out_of_range("element index out of range");
  Element u = t.swap() ? b : a;
  Element v = t.swap() ? a : b;
  if (t.inv_first()) u = g.inv(u);
  if (t.inv_second()) v = g.inv(v);
  return {u, v};
}

/// The twisted product: multiply the two coordinates of apply_pair.
inline Element apply_delta(ThetaMap t, Element a, Element b, const FiniteGroup& g) {
  const auto [u, v] = apply_pair(t, a, b, g);
  return g.mul(u, v);
}

namespace detail {

// Symbolic coordinate: which input (0 = first, 1 = second) and whether inverted.
struct Coord {
  int source = 0;
  bool inverted = false;
  friend bool operator==(Coord, Coord) = default;
};

constexpr std::pair<Coord, Coord> act(ThetaMap t, std::pair<Coord, Coord> p) {
  Coord u = t.swap() ? p.second : p.first;
  Coord v = t.swap() ? p.first : p.second;
  if (t.inv_first()) u.inverted = !u.inverted;
  if (t.inv_second()) v.inverted = !v.inverted;
  return {u, v};
}

}  // namespace detail

/// outer after inner, as maps on G x G.
inline ThetaMap compose(ThetaMap outer, ThetaMap inner) {
  const std::pair<detail::Coord, detail::Coord> id{{0, false}, {1, false}};
  const auto img = detail::act(outer, detail::act(inner, id));
  const auto result = ThetaMap(img.first.source == 1, img.first.inverted, img.second.inverted);
  assert(img.first.source != img.second.source);
  assert(detail::act(result, id) == img);
  return result;
}

/// Pair-action order of a map (smallest k > 0 with t^k = identity).
inline unsigned theta_order(ThetaMap t) {
  ThetaMap p = t;
  unsigned k = 1;
  while (p != theta::xy) {
    p = compose(t, p);
    ++k;
  }
  return k;
}

struct ThetaProfile {
  std::size_t order = 0;
  CayleyTable composition;                  ///< entry (s, t) = code of compose(s, t)
  std::map<unsigned, unsigned> element_orders;  ///< order -> count
  std::vector<unsigned> order_of;           ///< by map code
  bool generated_by_swap_and_invert = false;
  std::string isomorphism_type;             ///< "C8", "C4xC2", "C2xC2xC2", "D8" or "Q8"
  bool matches_quaternion = false;
};

/// Builds the full composition table of the eight maps, validates it as a
/// group and reports its structure. The identification of the isomorphism
/// type uses element orders, which separates all five groups of order 8.
inline ThetaProfile theta_group_profile() {
  ThetaProfile p;
  CayleyTable t(8);
  for (ThetaMap s : theta::all)
    for (ThetaMap u : theta::all) t.at(s.code(), u.code()) = compose(s, u).code();
  const FiniteGroup as_group = FiniteGroup::from_cayley_table(t, "Theta");
  p.order = as_group.order();
  p.composition = as_group.table();

  for (ThetaMap s : theta::all) {
    const unsigned k = theta_order(s);
    p.order_of.push_back(k);
    ++p.element_orders[k];
  }

  // orbit closure from the two generators
  std::vector<char> reached(8, 0);
  std::vector<ThetaMap> frontier{theta::xy};
  reached[theta::xy.code()] = 1;
  while (!frontier.empty()) {
    const ThetaMap cur = frontier.back();
    frontier.pop_back();
    for (ThetaMap gen : {theta::yx, theta::xy_}) {
      const ThetaMap nxt = compose(gen, cur);
      if (!reached[nxt.code()]) {
        reached[nxt.code()] = 1;
        frontier.push_back(nxt);
      }
    }
  }
  p.generated_by_swap_and_invert = std::count(reached.begin(), reached.end(), 1) == 8;

  const unsigned involutions = p.element_orders.count(2) ? p.element_orders.at(2) : 0;
  if (p.element_orders.count(8)) {
    p.isomorphism_type = "C8";
  } else if (as_group.is_abelian()) {
    p.isomorphism_type = involutions == 7 ? "C2xC2xC2" : "C4xC2";
  } else {
    p.isomorphism_type = involutions == 1 ? "Q8" : "D8";
  }
  p.matches_quaternion = p.isomorphism_type == "Q8";
  return p;
}

/// The four maps (alpha, beta, gamma, delta) used for the quadrants G*G,
/// G*Gbar, Gbar*G and Gbar*Gbar. Text form: "xy,x-y,yx,yx-".
struct Tuple {
  ThetaMap alpha, beta, gamma, delta;

  /// Index in the full 8^4 space: alpha*512 + beta*64 + gamma*8 + delta.
  [[nodiscard]] constexpr unsigned index() const noexcept {
    return alpha.code() * 512 + beta.code() * 64 + gamma.code() * 8 + delta.code();
  }
  static constexpr Tuple from_index(unsigned i) {
    return {ThetaMap::from_code(i / 512), ThetaMap::from_code(i / 64), ThetaMap::from_code(i / 8),
            ThetaMap::from_code(i)};
  }

  [[nodiscard]] std::string str() const {
    std::string s(alpha.name());
    for (ThetaMap t : {beta, gamma, delta}) {
      s += ',';
      s += t.name();
    }
    return s;
  }

  static Tuple parse(std::string_view s) {
    std::array<ThetaMap, 4> parts{};
    std::size_t k = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      const auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (k == 4) throw PreconditionError("tuple needs exactly four maps: '" + std::string(s) + "'");
      parts[k++] = ThetaMap::parse(piece);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (k != 4) throw PreconditionError("tuple needs exactly four maps: '" + std::string(s) + "'");
    return {parts[0], parts[1], parts[2], parts[3]};
  }

  friend constexpr bool operator==(const Tuple&, const Tuple&) = default;
  friend constexpr auto operator<=>(const Tuple& a, const Tuple& b) { return a.index() <=> b.index(); }
};

/// The eight twisted multiplications of a group, tabulated.
class DeltaTables {
 public:
  explicit DeltaTables(const FiniteGroup& g) : n_(g.order()) {
    for (ThetaMap t : theta::all) {
      auto& tab = tables_[t.code()];
      tab.resize(n_ * n_);
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b) tab[a * n_ + b] = apply_delta(t, a, b, g);
    }
  }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] Element operator()(ThetaMap t, Element a, Element b) const noexcept {
    return tables_[t.code()][a * n_ + b];
  }
  [[nodiscard]] bool same_multiplication(ThetaMap s, ThetaMap t) const {
    return tables_[s.code()] == tables_[t.code()];
  }
  /// Smallest-code map with the same twisted multiplication as t.
  [[nodiscard]] ThetaMap representative(ThetaMap t) const {
    for (ThetaMap s : theta::all)
      if (same_multiplication(s, t)) return s;
    return t;
  }

 private:
  std::size_t n_;
  std::array<std::vector<Element>, 8> tables_;
};

}  // namespace bolext
