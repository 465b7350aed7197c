#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bolext/table.hpp"

namespace bolext {

/// Finite group given by a validated Cayley table. The neutral element is
/// always index 0. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates `raw` as a group table. If the neutral element is not index 0,
  /// it is swapped into place and the relabeling recorded in the label.
  static FiniteGroup from_cayley_table(const CayleyTable& raw, std::string label = "G") {
    const auto n = static_cast<Element>(raw.size());
    if (n == 0) throw ValidationError("group must have at least one element");
    if (auto bad = first_latin_violation(raw)) {
      throw ValidationError("not a Latin square: repeated entry at cell (" + std::to_string(bad->first) + "," +
                            std::to_string(bad->second) + ")");
    }
    std::optional<Element> neutral;
    for (Element e = 0; e < n && !neutral; ++e) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) ok = raw(e, x) == x && raw(x, e) == x;
      if (ok) neutral = e;
    }
    if (!neutral) throw ValidationError("no neutral element");

    CayleyTable table = raw;
    std::optional<std::vector<Element>> relabeling;
    if (*neutral != 0) {
      std::vector<Element> perm(n);
      for (Element i = 0; i < n; ++i) perm[i] = i;
      std::swap(perm[0], perm[*neutral]);
      table = relabel(raw, perm);
      label += "[relabel " + format_permutation(perm) + "]";
      relabeling = std::move(perm);
    }

    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (table(table(x, y), z) != table(x, table(y, z))) {
            throw ValidationError("not associative at triple (" + std::to_string(x) + "," + std::to_string(y) +
                                  "," + std::to_string(z) + ")");
          }
    return FiniteGroup(std::move(table), std::move(label), std::move(relabeling));
  }

  [[nodiscard]] std::size_t size() const noexcept { return table_.size(); }
  [[nodiscard]] std::size_t order() const noexcept { return table_.size(); }
  [[nodiscard]] Element operator()(Element a, Element b) const noexcept { return table_(a, b); }
  [[nodiscard]] Element mul(Element a, Element b) const noexcept { return table_(a, b); }
  [[nodiscard]] Element inv(Element a) const noexcept { return inverses_[a]; }
  [[nodiscard]] static constexpr Element neutral() noexcept { return 0; }

  [[nodiscard]] const CayleyTable& table() const noexcept { return table_; }
  [[nodiscard]] const std::vector<Element>& inverses() const noexcept { return inverses_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  /// Permutation applied by from_cayley_table (input index -> stored index), if any.
  [[nodiscard]] const std::optional<std::vector<Element>>& relabeling() const noexcept { return relabeling_; }

  [[nodiscard]] Element power(Element a, unsigned m) const noexcept {
    Element r = 0;
    for (unsigned i = 0; i < m; ++i) r = table_(r, a);
    return r;
  }

  [[nodiscard]] bool is_abelian() const noexcept { return abelian_; }
  [[nodiscard]] bool squares_central() const noexcept { return squares_central_; }
  [[nodiscard]] bool is_elementary_abelian_2() const noexcept { return elementary_abelian_2_; }
  [[nodiscard]] bool exponent_divides(unsigned m) const noexcept {
    for (Element a = 0; a < size(); ++a)
      if (power(a, m) != 0) return false;
    return true;
  }

  FiniteGroup with_label(std::string label) const {
    FiniteGroup g = *this;
    g.label_ = std::move(label);
    return g;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  FiniteGroup(CayleyTable table, std::string label, std::optional<std::vector<Element>> relabeling)
      : table_(std::move(table)), label_(std::move(label)), relabeling_(std::move(relabeling)) {
    const auto n = static_cast<Element>(table_.size());
    inverses_.resize(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (table_(a, b) == 0) inverses_[a] = b;

    abelian_ = true;
    for (Element a = 0; a < n && abelian_; ++a)
      for (Element b = a + 1; b < n && abelian_; ++b) abelian_ = table_(a, b) == table_(b, a);

    std::vector<char> central(n, 1);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n && central[a]; ++b) central[a] = table_(a, b) == table_(b, a);
    squares_central_ = true;
    elementary_abelian_2_ = true;
    for (Element a = 0; a < n; ++a) {
      const Element sq = table_(a, a);
      squares_central_ = squares_central_ && central[sq];
      elementary_abelian_2_ = elementary_abelian_2_ && sq == 0;
    }
  }

  CayleyTable table_;
  std::vector<Element> inverses_;
  std::string label_;
  std::optional<std::vector<Element>> relabeling_;
  bool abelian_ = true;
  bool squares_central_ = true;
  bool elementary_abelian_2_ = true;
};

/// A subset of a group's elements, sorted ascending and duplicate-free.
struct ElementSubset {
  std::string parent_label;
  std::size_t parent_order = 0;
  std::vector<Element> members;

  [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
  [[nodiscard]] bool contains(Element x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  [[nodiscard]] bool is_everything() const noexcept { return members.size() == parent_order; }
};

namespace detail {

template <typename Pred>
ElementSubset collect(const FiniteGroup& g, Pred pred) {
  ElementSubset s{g.label(), g.order(), {}};
  for (Element a = 0; a < g.order(); ++a)
    if (pred(a)) s.members.push_back(a);
  return s;
}

}  // namespace detail

// ----- constructors -------------------------------------------------------

inline FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  CayleyTable t(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t.at(a, b) = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_cayley_table(t, "C" + std::to_string(n));
}

/// Dihedral group of the given (even) order 2k. Index i < k is r^i, index
/// k + i is s r^i, with s r^i * s r^j = r^(j-i).
inline FiniteGroup make_dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw PreconditionError("dihedral order must be even and >= 2");
  const std::size_t k = order / 2;
  CayleyTable t(order);
  for (Element a = 0; a < order; ++a) {
    const std::size_t fa = a / k, ia = a % k;
    for (Element b = 0; b < order; ++b) {
      const std::size_t fb = b / k, ib = b % k;
      // s^fa r^ia * s^fb r^ib = s^(fa+fb) r^(+-ia + ib)
      const std::size_t rot = (fb ? (k - ia) % k : ia) + ib;
      t.at(a, b) = static_cast<Element>(((fa + fb) % 2) * k + rot % k);
    }
  }
  return FiniteGroup::from_cayley_table(t, "D" + std::to_string(order));
}

/// Quaternion group: indices 0..7 are 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup make_quaternion8() {
  // unit products among {1,i,j,k} as (sign, unit)
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  CayleyTable t(8);
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) {
      const int sa = (a % 2) ? -1 : 1, sb = (b % 2) ? -1 : 1;
      const auto [s, u] = units[a / 2][b / 2];
      const int sign = sa * sb * s;
      t.at(a, b) = static_cast<Element>(2 * u + (sign < 0 ? 1 : 0));
    }
  return FiniteGroup::from_cayley_table(t, "Q8");
}

/// Symmetric group on k points; elements in lexicographic order of their
/// image lists, so index 0 is the identity. (p*q)(x) = p(q(x)).
inline FiniteGroup make_symmetric(std::size_t k) {
  if (k == 0) throw PreconditionError("symmetric group degree must be positive");
  if (k > 6) throw PreconditionError("symmetric group degree capped at 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<int>(i);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  CayleyTable t(n);
  std::vector<int> c(k);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];
      t.at(a, b) = index_of(c);
    }
  return FiniteGroup::from_cayley_table(t, "S" + std::to_string(k));
}

/// Direct product; element (x, y) has index x * |b| + y.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  CayleyTable t(na * nb);
  for (Element x1 = 0; x1 < na; ++x1)
    for (Element y1 = 0; y1 < nb; ++y1)
      for (Element x2 = 0; x2 < na; ++x2)
        for (Element y2 = 0; y2 < nb; ++y2)
          t.at(static_cast<Element>(x1 * nb + y1), static_cast<Element>(x2 * nb + y2)) =
              static_cast<Element>(a(x1, x2) * nb + b(y1, y2));
  return FiniteGroup::from_cayley_table(t, a.label() + "x" + b.label());
}

inline FiniteGroup from_cayley_table(const CayleyTable& raw, std::string label = "G") {
  return FiniteGroup::from_cayley_table(raw, std::move(label));
}

inline FiniteGroup opposite_group(const FiniteGroup& g) {
  return FiniteGroup::from_cayley_table(g.table().transposed(), g.label() + "^op");
}

// ----- subsets and predicates ---------------------------------------------

/// { g^m : g in G }
inline ElementSubset power_subset(const FiniteGroup& g, unsigned m) {
  std::vector<char> hit(g.order());
  for (Element a = 0; a < g.order(); ++a) hit[g.power(a, m)] = 1;
  return detail::collect(g, [&](Element a) { return hit[a] != 0; });
}

/// { g : g^m = 1 }
inline ElementSubset torsion_subset(const FiniteGroup& g, unsigned m) {
  return detail::collect(g, [&](Element a) { return g.power(a, m) == 0; });
}

inline ElementSubset center(const FiniteGroup& g) {
  return detail::collect(g, [&](Element a) {
    for (Element b = 0; b < g.order(); ++b)
      if (g(a, b) != g(b, a)) return false;
    return true;
  });
}

inline bool is_abelian(const FiniteGroup& g) { return g.is_abelian(); }
inline bool squares_central(const FiniteGroup& g) { return g.squares_central(); }
inline bool exponent_divides(const FiniteGroup& g, unsigned m) { return g.exponent_divides(m); }
inline bool is_elementary_abelian_2(const FiniteGroup& g) { return g.is_elementary_abelian_2(); }

/// |G| > 1 and G is not an elementary abelian 2-group. Every classification
/// statement in this library assumes it.
inline bool nondegenerate(const FiniteGroup& g) { return g.order() > 1 && !g.is_elementary_abelian_2(); }

/// Parses names such as "C4", "D8", "Q8", "S3" and products "C4xC2".
inline FiniteGroup group_by_name(const std::string& name) {
  if (name.empty()) throw PreconditionError("empty group name");
  if (auto pos = name.find('x'); pos != std::string::npos) {
    return direct_product(group_by_name(name.substr(0, pos)), group_by_name(name.substr(pos + 1)));
  }
  const char kind = name[0];
  std::size_t used = 0;
  std::size_t n = 0;
  try {
    n = std::stoul(name.substr(1), &used);
  } catch (const std::exception&) {
    throw PreconditionError("unknown group name '" + name + "'");
  }
  if (used + 1 != name.size()) throw PreconditionError("unknown group name '" + name + "'");
  switch (kind) {
    case 'C': return make_cyclic(n);
    case 'D': return make_dihedral(n);
    case 'S': return make_symmetric(n);
    case 'Q':
      if (n == 8) return make_quaternion8();
      break;
    default: break;
  }
  throw PreconditionError("unknown group name '" + name + "'");
}

}  // namespace bolext
