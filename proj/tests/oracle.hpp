#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the table types: maps are interpreted from their names,
// groups come from permutations or modular arithmetic, checks are plain loops.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bolext/table.hpp"

namespace oracle {

using bolext::CayleyTable;
using bolext::Element;

using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {  // apply q, then p
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

/// Group generated by `gens`, elements in BFS order starting at the identity.
inline CayleyTable permutation_group(const std::vector<Perm>& gens) {
  const std::size_t d = gens.front().size();
  Perm id(d);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm p = compose(elems[i], g);
      if (!index.count(p)) {
        index[p] = static_cast<Element>(elems.size());
        elems.push_back(p);
      }
    }
  std::vector<std::vector<Element>> rows(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) rows[a][b] = index.at(compose(elems[a], elems[b]));
  return CayleyTable::from_rows(rows);
}

inline CayleyTable cyclic(int n) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = static_cast<Element>((a + b) % n);
  return CayleyTable::from_rows(rows);
}

/// Symmetries of a square acting on its corners.
inline CayleyTable dihedral8() { return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}); }
inline CayleyTable symmetric3() { return permutation_group({{1, 0, 2}, {0, 2, 1}}); }
/// Q8 as the left regular action of i and j on {±1,±i,±j,±k} encoded 0..7.
inline CayleyTable quaternion8() {
  // encoding: 0=1 1=i 2=j 3=k 4=-1 5=-i 6=-j 7=-k
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  auto mul = [](int a, int b) {
    int r = unit[a % 4][b % 4];
    if ((a >= 4) != (b >= 4)) r = (r + 4) % 8;
    return r;
  };
  Perm li(8), lj(8);
  for (int x = 0; x < 8; ++x) {
    li[x] = mul(1, x);
    lj[x] = mul(2, x);
  }
  return permutation_group({li, lj});
}

/// Group inverse by search.
inline Element inverse(const CayleyTable& g, Element a) {
  for (Element b = 0; b < g.size(); ++b)
    if (g(a, b) == 0) return b;
  throw std::logic_error("no inverse");
}

/// Evaluates a map written as in "y-x" on (a, b) and multiplies the result.
inline Element twisted(const CayleyTable& g, const std::string& name, Element a, Element b) {
  std::vector<Element> picked;
  for (std::size_t i = 0; i < name.size(); ++i) {
    Element v = name[i] == 'x' ? a : b;
    if (i + 1 < name.size() && name[i + 1] == '-') {
      v = inverse(g, v);
      ++i;
    }
    picked.push_back(v);
  }
  return g(picked.at(0), picked.at(1));
}

/// The 2n extension table straight from the four quadrant rules.
inline CayleyTable extension(const CayleyTable& g, const std::array<std::string, 4>& m) {
  const Element n = static_cast<Element>(g.size());
  std::vector<std::vector<Element>> rows(2 * n, std::vector<Element>(2 * n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      rows[x][y] = twisted(g, m[0], x, y);
      rows[x][n + y] = n + twisted(g, m[1], x, y);
      rows[n + x][y] = n + twisted(g, m[2], x, y);
      rows[n + x][n + y] = twisted(g, m[3], x, y);
    }
  return CayleyTable::from_rows(rows);
}

template <typename T>
bool all3(const T& t, const std::function<bool(Element, Element, Element)>& p) {
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      for (Element z = 0; z < t.size(); ++z)
        if (!p(x, y, z)) return false;
  return true;
}

template <typename T>
bool left_bol(const T& t) {
  return all3(t, [&](Element x, Element y, Element z) { return t(x, t(y, t(x, z))) == t(t(x, t(y, x)), z); });
}
template <typename T>
bool right_bol(const T& t) {
  return all3(t, [&](Element x, Element y, Element z) { return t(t(t(z, x), y), x) == t(z, t(t(x, y), x)); });
}
template <typename T>
bool associative(const T& t) {
  return all3(t, [&](Element x, Element y, Element z) { return t(t(x, y), z) == t(x, t(y, z)); });
}
template <typename T>
bool left_alternative(const T& t) {
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y)
      if (t(x, t(x, y)) != t(t(x, x), y)) return false;
  return true;
}
template <typename T>
bool latin(const T& t) {
  for (Element a = 0; a < t.size(); ++a) {
    std::vector<char> r(t.size()), c(t.size());
    for (Element b = 0; b < t.size(); ++b) {
      if (r[t(a, b)]++ || c[t(b, a)]++) return false;
    }
  }
  return true;
}
template <typename T>
bool is_loop_with_zero(const T& t) {
  if (!latin(t)) return false;
  for (Element x = 0; x < t.size(); ++x)
    if (t(0, x) != x || t(x, 0) != x) return false;
  return true;
}

/// Brute-force isomorphism over all permutations fixing 0 (loops with
/// neutral 0 only; fine up to order 8).
template <typename A, typename B>
bool brute_isomorphic(const A& a, const B& b) {
  const Element n = static_cast<Element>(a.size());
  if (b.size() != n) return false;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y) ok = p[a(x, y)] == b(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

inline std::vector<Element> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::array<std::string, 4> names(const std::string& csv) {
  std::array<std::string, 4> out;
  std::size_t k = 0, start = 0;
  while (k < 4) {
    auto c = csv.find(',', start);
    out[k++] = csv.substr(start, c - start);
    start = c + 1;
  }
  return out;
}

}  // namespace oracle
