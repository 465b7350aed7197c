#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bolext/extension.hpp"
#include "bolext/identities.hpp"
#include "bolext/table.hpp"

namespace bolext {

/// Isomorphism invariants of a loop.
struct LoopProfile {
  std::size_t size = 0;
  std::size_t center_size = 0;
  std::map<unsigned, unsigned> order_spectrum;  ///< element order -> count
  std::size_t exponent2_count = 0;              ///< #{x : x*x = e}, e included
  bool associator_nontrivial = false;

  friend bool operator==(const LoopProfile&, const LoopProfile&) = default;
};

namespace detail {

template <BinaryTable T>
Element loop_neutral(const T& t, const char* what) {
  if (first_latin_violation(t)) throw PreconditionError(std::string(what) + " requires a loop (not a Latin square)");
  auto e = find_neutral(t);
  if (!e) throw PreconditionError(std::string(what) + " requires a loop (no neutral element)");
  return *e;
}

/// Order of x under left-bracketed powers x*(x*(...*x)).
template <BinaryTable T>
unsigned left_power_order(const T& t, Element x, Element e) {
  Element p = x;
  unsigned k = 1;
  while (p != e) {
    p = t(x, p);
    ++k;
  }
  return k;
}

}  // namespace detail

template <BinaryTable T>
LoopProfile profile(const T& t) {
  const Element e = detail::loop_neutral(t, "profile");
  const auto n = static_cast<Element>(t.size());
  LoopProfile p;
  p.size = n;
  for (Element x = 0; x < n; ++x) {
    bool central = true;
    for (Element y = 0; y < n && central; ++y) central = t(x, y) == t(y, x);
    p.center_size += central;
    ++p.order_spectrum[detail::left_power_order(t, x, e)];
    p.exponent2_count += t(x, x) == e;
  }
  p.associator_nontrivial = !check_direct(t, IdentityId::associative).holds;
  return p;
}

/// Number of cells on which two tables over the same labeled set disagree.
template <BinaryTable A, BinaryTable B>
std::size_t drapal_distance(const A& a, const B& b) {
  if (a.size() != b.size()) {
    throw PreconditionError("distance needs equal sizes (" + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()) + ")");
  }
  const auto n = static_cast<Element>(a.size());
  std::size_t d = 0;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) d += a(x, y) != b(x, y);
  return d;
}

namespace detail {

/// Subloop generated by `gens` (closure under multiplication, which suffices
/// in a finite quasigroup).
template <BinaryTable T>
std::vector<char> closure(const T& t, const std::vector<Element>& gens, Element e) {
  const auto n = static_cast<Element>(t.size());
  std::vector<char> in(n, 0);
  std::vector<Element> members{e};
  in[e] = 1;
  for (Element g : gens)
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [a, b] : {std::pair{members[i], members[j]}, std::pair{members[j], members[i]}}) {
        const Element c = t(a, b);
        if (!in[c]) {
          in[c] = 1;
          members.push_back(c);
        }
      }
  return in;
}

/// Greedy generating set: scan elements by index, keep each one not yet
/// generated by the earlier picks.
template <BinaryTable T>
std::vector<Element> greedy_generators(const T& t, Element e) {
  const auto n = static_cast<Element>(t.size());
  std::vector<Element> gens;
  std::vector<char> in = closure(t, gens, e);
  for (Element x = 0; x < n; ++x)
    if (!in[x]) {
      gens.push_back(x);
      in = closure(t, gens, e);
    }
  return gens;
}

template <BinaryTable T>
std::vector<std::size_t> element_invariants(const T& t, Element e) {
  const auto n = static_cast<Element>(t.size());
  std::vector<std::size_t> inv(n);
  for (Element x = 0; x < n; ++x) {
    bool central = true;
    for (Element y = 0; y < n && central; ++y) central = t(x, y) == t(y, x);
    inv[x] = left_power_order(t, x, e) * 4 + (t(x, x) == e ? 2 : 0) + (central ? 1 : 0);
  }
  return inv;
}

template <BinaryTable A, BinaryTable B>
class IsoSearch {
 public:
  IsoSearch(const A& a, const B& b, Element ea, Element eb)
      : a_(a), b_(b), n_(static_cast<Element>(a.size())), gens_(greedy_generators(a, ea)),
        inv_a_(element_invariants(a, ea)), inv_b_(element_invariants(b, eb)) {
    fwd_.assign(n_, kUnset);
    bwd_.assign(n_, kUnset);
    assign(ea, eb);
  }

  std::optional<std::vector<Element>> run() {
    if (!propagate()) return std::nullopt;
    if (search(0)) return fwd_;
    return std::nullopt;
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  void assign(Element x, Element y) {
    fwd_[x] = y;
    bwd_[y] = x;
    mapped_.push_back(x);
  }

  /// Extends the partial map through products of mapped elements. Returns
  /// false on a conflict. `mapped_` grows; the caller truncates on backtrack.
  bool propagate() {
    for (std::size_t i = 0; i < mapped_.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (auto [x, y] : {std::pair{mapped_[i], mapped_[j]}, std::pair{mapped_[j], mapped_[i]}}) {
          const Element xy = a_(x, y);
          const Element img = b_(fwd_[x], fwd_[y]);
          if (fwd_[xy] == kUnset) {
            if (bwd_[img] != kUnset || inv_a_[xy] != inv_b_[img]) return false;
            assign(xy, img);
          } else if (fwd_[xy] != img) {
            return false;
          }
        }
    return true;
  }

  bool search(std::size_t k) {
    if (k == gens_.size()) return mapped_.size() == n_;
    const Element g = gens_[k];
    if (fwd_[g] != kUnset) return search(k + 1);
    for (Element c = 0; c < n_; ++c) {
      if (bwd_[c] != kUnset || inv_a_[g] != inv_b_[c]) continue;
      const std::size_t mark = mapped_.size();
      assign(g, c);
      if (propagate() && search(k + 1)) return true;
      for (std::size_t i = mark; i < mapped_.size(); ++i) {
        bwd_[fwd_[mapped_[i]]] = kUnset;
        fwd_[mapped_[i]] = kUnset;
      }
      mapped_.resize(mark);
    }
    return false;
  }

  const A& a_;
  const B& b_;
  Element n_;
  std::vector<Element> gens_;
  std::vector<std::size_t> inv_a_, inv_b_;
  std::vector<Element> fwd_, bwd_, mapped_;
};

}  // namespace detail

/// Complete isomorphism test for loops. Profiles are compared first; then a
/// backtracking search assigns images to a greedy generating set and
/// propagates through products. A returned witness has been checked on
/// every cell.
template <BinaryTable A, BinaryTable B>
std::optional<IsoWitness> is_isomorphic(const A& a, const B& b) {
  const Element ea = detail::loop_neutral(a, "is_isomorphic");
  const Element eb = detail::loop_neutral(b, "is_isomorphic");
  if (a.size() != b.size()) return std::nullopt;
  if (profile(a) != profile(b)) return std::nullopt;
  detail::IsoSearch<A, B> s(a, b, ea, eb);
  auto fwd = s.run();
  if (!fwd) return std::nullopt;
  if (!verify_witness(a, b, *fwd)) throw std::logic_error("isomorphism search produced an invalid witness");
  return IsoWitness{std::move(*fwd), "backtracking over greedy generators"};
}

/// Partition of `loops` into isomorphism classes; classes and members are
/// ordered by first occurrence.
template <BinaryTable T>
std::vector<std::vector<std::size_t>> isomorphism_classes(const std::vector<T>& loops) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (loops[cls.front()].size() == loops[i].size() && is_isomorphic(loops[cls.front()], loops[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

}  // namespace bolext
