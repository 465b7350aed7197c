#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bolext/group.hpp"
#include "bolext/table.hpp"
#include "bolext/theta.hpp"

namespace bolext {

/// A group together with the four quadrant maps. Any tuple is allowed;
/// whether the result is a loop is decided downstream.
struct ExtensionSpec {
  std::shared_ptr<const FiniteGroup> group;
  Tuple tuple;

  ExtensionSpec(std::shared_ptr<const FiniteGroup> g, Tuple t) : group(std::move(g)), tuple(t) {
    if (!group) throw PreconditionError("extension spec needs a group");
  }
  ExtensionSpec(FiniteGroup g, Tuple t) : ExtensionSpec(std::make_shared<const FiniteGroup>(std::move(g)), t) {}

  [[nodiscard]] ThetaMap alpha() const noexcept { return tuple.alpha; }
  [[nodiscard]] ThetaMap beta() const noexcept { return tuple.beta; }
  [[nodiscard]] ThetaMap gamma() const noexcept { return tuple.gamma; }
  [[nodiscard]] ThetaMap delta() const noexcept { return tuple.delta; }
  [[nodiscard]] std::size_t base_order() const noexcept { return group->order(); }

  friend bool operator==(const ExtensionSpec& a, const ExtensionSpec& b) {
    return a.tuple == b.tuple && (a.group == b.group || *a.group == *b.group);
  }
};

/// Multiplication table on 2n elements. Indices 0..n-1 are G, index n+k is
/// the barred copy of k. Always a Latin square.
class MagmaTable {
 public:
  explicit MagmaTable(CayleyTable table, std::optional<ExtensionSpec> origin = std::nullopt)
      : table_(std::move(table)), origin_(std::move(origin)) {
    if (auto bad = first_latin_violation(table_)) {
      throw ValidationError("not a Latin square: repeated entry at cell (" + std::to_string(bad->first) + "," +
                            std::to_string(bad->second) + ")");
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
  [[nodiscard]] Element operator()(Element a, Element b) const noexcept { return table_(a, b); }
  [[nodiscard]] const CayleyTable& table() const noexcept { return table_; }
  [[nodiscard]] const std::optional<ExtensionSpec>& origin() const noexcept { return origin_; }

  [[nodiscard]] MagmaTable transposed() const { return MagmaTable(table_.transposed()); }

  /// Cell equality; provenance is ignored.
  friend bool operator==(const MagmaTable& a, const MagmaTable& b) { return a.table_ == b.table_; }

 private:
  CayleyTable table_;
  std::optional<ExtensionSpec> origin_;
};

/// Bijection between two tables: forward[x] is the image of x.
struct IsoWitness {
  std::vector<Element> forward;
  std::string description;

  [[nodiscard]] std::string str() const { return format_permutation(forward); }
};

/// True if `w` maps every product of `source` onto the matching product of `target`.
template <BinaryTable A, BinaryTable B>
bool verify_witness(const A& source, const B& target, const std::vector<Element>& forward) {
  const auto n = static_cast<Element>(source.size());
  if (target.size() != n || forward.size() != n) return false;
  std::vector<char> seen(n);
  for (Element f : forward) {
    if (f >= n || seen[f]) return false;
    seen[f] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (forward[source(a, b)] != target(forward[a], forward[b])) return false;
  return true;
}

/// G*G in G, G*Gbar and Gbar*G in Gbar, Gbar*Gbar in G.
template <BinaryTable T>
bool has_coset_layout(const T& t) {
  const auto size = static_cast<Element>(t.size());
  if (size % 2) return false;
  const Element n = size / 2;
  for (Element a = 0; a < size; ++a)
    for (Element b = 0; b < size; ++b) {
      const bool bar_expected = (a >= n) != (b >= n);
      if ((t(a, b) >= n) != bar_expected) return false;
    }
  return true;
}

/// Builds the 2n x 2n table from precomputed twisted multiplications.
inline MagmaTable build(const ExtensionSpec& spec, const DeltaTables& delta) {
  const auto n = static_cast<Element>(spec.base_order());
  CayleyTable t(2 * n);
  const Tuple& m = spec.tuple;
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      t.at(g, h) = delta(m.alpha, g, h);
      t.at(g, n + h) = n + delta(m.beta, g, h);
      t.at(n + g, h) = n + delta(m.gamma, g, h);
      t.at(n + g, n + h) = delta(m.delta, g, h);
    }
  if (!has_coset_layout(t)) throw std::logic_error("extension table broke the coset layout");
  return MagmaTable(std::move(t), spec);
}

inline MagmaTable build(const ExtensionSpec& spec) { return build(spec, DeltaTables(*spec.group)); }

inline MagmaTable build(const FiniteGroup& g, Tuple t) { return build(ExtensionSpec(g, t)); }

inline constexpr Tuple kCheinTuple{theta::xy, theta::yx, theta::xy_, theta::y_x};

/// Chein's Moufang loop M(G,2).
inline MagmaTable chein(const FiniteGroup& g) { return build(g, kCheinTuple); }

/// Tuple whose extension is the opposite (transposed) table over the same group.
/// Each map is precomposed with the coordinate swap.
inline ExtensionSpec opposite_spec(const ExtensionSpec& spec) {
  const Tuple& m = spec.tuple;
  auto sw = [](ThetaMap t) { return compose(t, theta::yx); };
  return ExtensionSpec(spec.group, Tuple{sw(m.alpha), sw(m.gamma), sw(m.beta), sw(m.delta)});
}

/// The same table written as an extension of the opposite group. Each map is
/// postcomposed with the coordinate swap.
inline ExtensionSpec express_over_opposite(const ExtensionSpec& spec) {
  const Tuple& m = spec.tuple;
  auto sw = [](ThetaMap t) { return compose(theta::yx, t); };
  return ExtensionSpec(std::make_shared<const FiniteGroup>(opposite_group(*spec.group)),
                       Tuple{sw(m.alpha), sw(m.beta), sw(m.gamma), sw(m.delta)});
}

namespace detail {

inline std::optional<ThetaMap> iso_partner_beta(ThetaMap b) {
  using namespace theta;
  if (b == xy) return yx_;
  if (b == yx) return x_y;
  if (b == x_y) return yx;
  if (b == yx_) return xy;
  return std::nullopt;
}

inline std::optional<ThetaMap> iso_partner_gamma(ThetaMap c) {
  using namespace theta;
  if (c == xy) return y_x;
  if (c == yx) return xy_;
  if (c == xy_) return yx;
  if (c == y_x) return xy;
  return std::nullopt;
}

}  // namespace detail

/// Rewrites (a, b, c, d) as (a, b', c', d composed with full inversion) and
/// returns the isomorphism f(x) = x, f(xbar) = (x^-1)bar. The witness is
/// checked on the built tables before returning.
inline std::pair<ExtensionSpec, IsoWitness> lemma_iso_transform(const ExtensionSpec& spec) {
  const auto beta2 = detail::iso_partner_beta(spec.beta());
  const auto gamma2 = detail::iso_partner_gamma(spec.gamma());
  if (!beta2) throw PreconditionError("beta = " + std::string(spec.beta().name()) + " has no listed partner");
  if (!gamma2) throw PreconditionError("gamma = " + std::string(spec.gamma().name()) + " has no listed partner");

  ExtensionSpec target(spec.group, Tuple{spec.alpha(), *beta2, *gamma2, compose(theta::x_y_, spec.delta())});

  const auto n = static_cast<Element>(spec.base_order());
  IsoWitness w;
  w.forward.resize(2 * n);
  for (Element x = 0; x < n; ++x) {
    w.forward[x] = x;
    w.forward[n + x] = n + spec.group->inv(x);
  }
  w.description = "f(x)=x, f(xbar)=(x^-1)bar";

  const DeltaTables delta(*spec.group);
  if (!verify_witness(build(spec, delta), build(target, delta), w.forward)) {
    throw std::logic_error("inversion witness failed for " + spec.tuple.str());
  }
  return {std::move(target), std::move(w)};
}

/// The direct product G x C2 written as an extension table (all quadrants plain).
inline MagmaTable direct_product_c2(const FiniteGroup& g) {
  return build(g, Tuple{theta::xy, theta::xy, theta::xy, theta::xy});
}

}  // namespace bolext
