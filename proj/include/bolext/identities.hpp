#pragma once

#include <array>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bolext/extension.hpp"
#include "bolext/group.hpp"
#include "bolext/table.hpp"
#include "bolext/theta.hpp"

namespace bolext {

/// Defining equations (x, y, z range over the whole table, e is the neutral
/// element, x^l / x^r the left / right inverse of x):
///
///   associative             (xy)z = x(yz)
///   left_alternative        x(xy) = (xx)y
///   right_alternative       (yx)x = y(xx)
///   flexible                x(yx) = (xy)x
///   left_bol                x(y(xz)) = (x(yx))z
///   right_bol               ((zx)y)x = z((xy)x)
///   moufang                 left_bol and right_bol
///   two_sided_inverses      x^l = x^r for every x
///   left_inverse_property   x^l(xy) = y
///   right_inverse_property  (yx)x^r = y
///   inverse_property        both of the above
enum class IdentityId {
  latin_square,
  has_neutral,
  is_loop,
  associative,
  left_alternative,
  right_alternative,
  flexible,
  left_bol,
  right_bol,
  moufang,
  two_sided_inverses,
  left_inverse_property,
  right_inverse_property,
  inverse_property,
};

inline constexpr std::array<IdentityId, 14> kAllIdentities{
    IdentityId::latin_square,       IdentityId::has_neutral,           IdentityId::is_loop,
    IdentityId::associative,        IdentityId::left_alternative,      IdentityId::right_alternative,
    IdentityId::flexible,           IdentityId::left_bol,              IdentityId::right_bol,
    IdentityId::moufang,            IdentityId::two_sided_inverses,    IdentityId::left_inverse_property,
    IdentityId::right_inverse_property, IdentityId::inverse_property,
};

inline std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::latin_square: return "latin_square";
    case IdentityId::has_neutral: return "has_neutral";
    case IdentityId::is_loop: return "is_loop";
    case IdentityId::associative: return "associative";
    case IdentityId::left_alternative: return "left_alternative";
    case IdentityId::right_alternative: return "right_alternative";
    case IdentityId::flexible: return "flexible";
    case IdentityId::left_bol: return "left_bol";
    case IdentityId::right_bol: return "right_bol";
    case IdentityId::moufang: return "moufang";
    case IdentityId::two_sided_inverses: return "two_sided_inverses";
    case IdentityId::left_inverse_property: return "left_inverse_property";
    case IdentityId::right_inverse_property: return "right_inverse_property";
    case IdentityId::inverse_property: return "inverse_property";
  }
  return "?";
}

inline IdentityId parse_identity(std::string_view s) {
  for (IdentityId id : kAllIdentities)
    if (identity_name(id) == s) return id;
  throw PreconditionError("unknown identity '" + std::string(s) + "'");
}

/// Outcome of an exhaustive check. `witness` holds the lexicographically
/// first counterexample and is present exactly when the check fails.
struct CheckResult {
  bool holds = true;
  std::vector<Element> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<Element> w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return holds; }
};

inline constexpr std::size_t kSoftSizeCap = 512;  // 2n for |G| = 256

namespace detail {

template <BinaryTable T>
void warn_if_large(const T& t) {
  static bool warned = false;
  if (!warned && t.size() > kSoftSizeCap) {
    warned = true;
    std::clog << "bolext: warning: identity checks on " << t.size()
              << " elements are cubic and may take a long time\n";
  }
}

template <BinaryTable T>
std::optional<Element> find_neutral(const T& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

template <BinaryTable T, typename Eq>
CheckResult scan2(const T& t, Eq eq) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!eq(x, y)) return CheckResult::fail({x, y});
  return CheckResult::pass();
}

template <BinaryTable T, typename Eq>
CheckResult scan3(const T& t, Eq eq) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!eq(x, y, z)) return CheckResult::fail({x, y, z});
  return CheckResult::pass();
}

template <BinaryTable T>
Element require_neutral(const T& t, IdentityId id) {
  auto e = find_neutral(t);
  if (!e || first_latin_violation(t)) {
    throw PreconditionError(std::string(identity_name(id)) + " requires a loop");
  }
  return *e;
}

template <BinaryTable T>
std::vector<Element> left_inverses(const T& t, Element e) {
  const auto n = static_cast<Element>(t.size());
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (t(y, x) == e) inv[x] = y;
  return inv;
}

template <BinaryTable T>
std::vector<Element> right_inverses(const T& t, Element e) {
  const auto n = static_cast<Element>(t.size());
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (t(x, y) == e) inv[x] = y;
  return inv;
}

}  // namespace detail

/// Exhaustive evaluation of an identity on the whole table.
template <BinaryTable T>
CheckResult check_direct(const T& t, IdentityId id) {
  detail::warn_if_large(t);
  const auto m = [&t](Element a, Element b) { return t(a, b); };
  switch (id) {
    case IdentityId::latin_square: {
      if (auto bad = first_latin_violation(t)) return CheckResult::fail({bad->first, bad->second});
      return CheckResult::pass();
    }
    case IdentityId::has_neutral: {
      if (detail::find_neutral(t)) return CheckResult::pass();
      // no neutral: report where candidate 0 fails
      for (Element x = 0; x < t.size(); ++x)
        if (m(0, x) != x || m(x, 0) != x) return CheckResult::fail({0, x});
      return CheckResult::fail({0});
    }
    case IdentityId::is_loop: {
      if (auto r = check_direct(t, IdentityId::latin_square); !r) return r;
      return check_direct(t, IdentityId::has_neutral);
    }
    case IdentityId::associative:
      return detail::scan3(t, [&](Element x, Element y, Element z) { return m(m(x, y), z) == m(x, m(y, z)); });
    case IdentityId::left_alternative:
      return detail::scan2(t, [&](Element x, Element y) { return m(x, m(x, y)) == m(m(x, x), y); });
    case IdentityId::right_alternative:
      return detail::scan2(t, [&](Element x, Element y) { return m(m(y, x), x) == m(y, m(x, x)); });
    case IdentityId::flexible:
      return detail::scan2(t, [&](Element x, Element y) { return m(x, m(y, x)) == m(m(x, y), x); });
    case IdentityId::left_bol:
      return detail::scan3(
          t, [&](Element x, Element y, Element z) { return m(x, m(y, m(x, z))) == m(m(x, m(y, x)), z); });
    case IdentityId::right_bol:
      return detail::scan3(
          t, [&](Element x, Element y, Element z) { return m(m(m(z, x), y), x) == m(z, m(m(x, y), x)); });
    case IdentityId::moufang: {
      detail::require_neutral(t, id);
      if (auto r = check_direct(t, IdentityId::left_bol); !r) return r;
      return check_direct(t, IdentityId::right_bol);
    }
    case IdentityId::two_sided_inverses: {
      const Element e = detail::require_neutral(t, id);
      const auto li = detail::left_inverses(t, e);
      const auto ri = detail::right_inverses(t, e);
      for (Element x = 0; x < t.size(); ++x)
        if (li[x] != ri[x]) return CheckResult::fail({x});
      return CheckResult::pass();
    }
    case IdentityId::left_inverse_property: {
      const Element e = detail::require_neutral(t, id);
      const auto li = detail::left_inverses(t, e);
      return detail::scan2(t, [&](Element x, Element y) { return m(li[x], m(x, y)) == y; });
    }
    case IdentityId::right_inverse_property: {
      const Element e = detail::require_neutral(t, id);
      const auto ri = detail::right_inverses(t, e);
      return detail::scan2(t, [&](Element x, Element y) { return m(m(y, x), ri[x]) == y; });
    }
    case IdentityId::inverse_property: {
      if (auto r = check_direct(t, IdentityId::left_inverse_property); !r) return r;
      return check_direct(t, IdentityId::right_inverse_property);
    }
  }
  throw PreconditionError("unhandled identity");
}

/// Single-identity Moufang law x(y(xz)) = ((xy)x)z, kept as a cross-check of
/// the two-Bol definition.
template <BinaryTable T>
CheckResult check_moufang_single(const T& t) {
  const auto m = [&t](Element a, Element b) { return t(a, b); };
  return detail::scan3(
      t, [&](Element x, Element y, Element z) { return m(x, m(y, m(x, z))) == m(m(m(x, y), x), z); });
}

/// Re-evaluates the defining equation of `id` at `witness`; true if it fails there.
template <BinaryTable T>
bool reproduces_violation(const T& t, IdentityId id, const std::vector<Element>& w) {
  const auto m = [&t](Element a, Element b) { return t(a, b); };
  switch (id) {
    case IdentityId::associative: return w.size() == 3 && m(m(w[0], w[1]), w[2]) != m(w[0], m(w[1], w[2]));
    case IdentityId::left_alternative: return w.size() == 2 && m(w[0], m(w[0], w[1])) != m(m(w[0], w[0]), w[1]);
    case IdentityId::right_alternative: return w.size() == 2 && m(m(w[1], w[0]), w[0]) != m(w[1], m(w[0], w[0]));
    case IdentityId::flexible: return w.size() == 2 && m(w[0], m(w[1], w[0])) != m(m(w[0], w[1]), w[0]);
    case IdentityId::left_bol:
      return w.size() == 3 && m(w[0], m(w[1], m(w[0], w[2]))) != m(m(w[0], m(w[1], w[0])), w[2]);
    case IdentityId::right_bol:
      return w.size() == 3 && m(m(m(w[2], w[0]), w[1]), w[0]) != m(w[2], m(m(w[0], w[1]), w[0]));
    case IdentityId::moufang:
      return reproduces_violation(t, IdentityId::left_bol, w) || reproduces_violation(t, IdentityId::right_bol, w);
    default: return !check_direct(t, id).holds;
  }
}

// ---------------------------------------------------------------------------
// Loop criterion and translated identities.
// ---------------------------------------------------------------------------

/// Membership test: alpha in {xy, yx}, beta in {xy, yx, yx-, x-y},
/// gamma in {xy, yx, y-x, xy-}. For groups that are not elementary abelian
/// 2-groups this is exactly the condition for the extension to be a loop.
inline bool loop_conditions(const Tuple& t) {
  using namespace theta;
  const bool a = t.alpha == xy || t.alpha == yx;
  const bool b = t.beta == xy || t.beta == yx || t.beta == yx_ || t.beta == x_y;
  const bool c = t.gamma == xy || t.gamma == yx || t.gamma == y_x || t.gamma == xy_;
  return a && b && c;
}
inline bool loop_conditions(const ExtensionSpec& spec) { return loop_conditions(spec.tuple); }

/// One identity on G obtained by fixing which arguments lie in G and which in
/// the barred copy. `label` is LA1..LA4 or LB1..LB8.
struct TranslatedPart {
  std::string label;
  std::string pattern;  ///< e.g. "x,ybar,zbar"
  CheckResult result;
};

struct TranslatedCheck {
  CheckResult result;  ///< conjunction; witness given in 2n-table indices
  std::vector<TranslatedPart> parts;
  std::optional<std::string> first_failure;
};

namespace detail {

struct TranslatedIdentity {
  const char* label;
  const char* pattern;
  std::array<bool, 3> barred;  // which of x, y, z lie in the barred copy
  // lhs, rhs over G given the quadrant maps
  std::function<Element(const DeltaTables&, const Tuple&, Element, Element, Element)> lhs, rhs;
};

inline const std::vector<TranslatedIdentity>& left_alternative_translations() {
  using D = const DeltaTables&;
  using M = const Tuple&;
  static const std::vector<TranslatedIdentity> ids{
      {"LA1", "x,y", {false, false, false},
       [](D d, M m, Element x, Element y, Element) { return d(m.alpha, x, d(m.alpha, x, y)); },
       [](D d, M m, Element x, Element y, Element) { return d(m.alpha, d(m.alpha, x, x), y); }},
      {"LA2", "x,ybar", {false, true, false},
       [](D d, M m, Element x, Element y, Element) { return d(m.beta, x, d(m.beta, x, y)); },
       [](D d, M m, Element x, Element y, Element) { return d(m.beta, d(m.alpha, x, x), y); }},
      {"LA3", "xbar,y", {true, false, false},
       [](D d, M m, Element x, Element y, Element) { return d(m.delta, x, d(m.gamma, x, y)); },
       [](D d, M m, Element x, Element y, Element) { return d(m.alpha, d(m.delta, x, x), y); }},
      {"LA4", "xbar,ybar", {true, true, false},
       [](D d, M m, Element x, Element y, Element) { return d(m.gamma, x, d(m.delta, x, y)); },
       [](D d, M m, Element x, Element y, Element) { return d(m.beta, d(m.delta, x, x), y); }},
  };
  return ids;
}

inline const std::vector<TranslatedIdentity>& left_bol_translations() {
  using D = const DeltaTables&;
  using M = const Tuple&;
  static const std::vector<TranslatedIdentity> ids{
      {"LB1", "x,y,z", {false, false, false},
       [](D d, M m, Element x, Element y, Element z) { return d(m.alpha, x, d(m.alpha, y, d(m.alpha, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.alpha, d(m.alpha, x, d(m.alpha, y, x)), z); }},
      {"LB2", "x,y,zbar", {false, false, true},
       [](D d, M m, Element x, Element y, Element z) { return d(m.beta, x, d(m.beta, y, d(m.beta, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.beta, d(m.alpha, x, d(m.alpha, y, x)), z); }},
      {"LB3", "x,ybar,z", {false, true, false},
       [](D d, M m, Element x, Element y, Element z) { return d(m.beta, x, d(m.gamma, y, d(m.alpha, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.gamma, d(m.beta, x, d(m.gamma, y, x)), z); }},
      {"LB4", "xbar,y,z", {true, false, false},
       [](D d, M m, Element x, Element y, Element z) { return d(m.delta, x, d(m.beta, y, d(m.gamma, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.alpha, d(m.delta, x, d(m.beta, y, x)), z); }},
      {"LB5", "x,ybar,zbar", {false, true, true},
       [](D d, M m, Element x, Element y, Element z) { return d(m.alpha, x, d(m.delta, y, d(m.beta, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.delta, d(m.beta, x, d(m.gamma, y, x)), z); }},
      {"LB6", "xbar,y,zbar", {true, false, true},
       [](D d, M m, Element x, Element y, Element z) { return d(m.gamma, x, d(m.alpha, y, d(m.delta, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.beta, d(m.delta, x, d(m.beta, y, x)), z); }},
      {"LB7", "xbar,ybar,z", {true, true, false},
       [](D d, M m, Element x, Element y, Element z) { return d(m.gamma, x, d(m.delta, y, d(m.gamma, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.gamma, d(m.gamma, x, d(m.delta, y, x)), z); }},
      {"LB8", "xbar,ybar,zbar", {true, true, true},
       [](D d, M m, Element x, Element y, Element z) { return d(m.delta, x, d(m.gamma, y, d(m.delta, x, z))); },
       [](D d, M m, Element x, Element y, Element z) { return d(m.delta, d(m.gamma, x, d(m.delta, y, x)), z); }},
  };
  return ids;
}

}  // namespace detail

/// Evaluates left_alternative (4 identities over G^2) or left_bol (8 over
/// G^3) through the quadrant maps, without building the 2n table. Witnesses
/// are reported as 2n-table indices; the overall witness is the
/// lexicographically smallest among the failing parts.
inline TranslatedCheck check_translated(const ExtensionSpec& spec, IdentityId id, const DeltaTables& delta) {
  if (id != IdentityId::left_alternative && id != IdentityId::left_bol) {
    throw PreconditionError("no translated form for " + std::string(identity_name(id)));
  }
  if (!loop_conditions(spec)) {
    throw PreconditionError("translated identities need a tuple satisfying the loop criterion: " + spec.tuple.str());
  }
  const auto n = static_cast<Element>(spec.base_order());
  const bool three = id == IdentityId::left_bol;
  const auto& ids = three ? detail::left_bol_translations() : detail::left_alternative_translations();

  TranslatedCheck out;
  for (const auto& ti : ids) {
    TranslatedPart part{ti.label, ti.pattern, CheckResult::pass()};
    const Element zmax = three ? n : 1;
    for (Element x = 0; x < n && part.result.holds; ++x)
      for (Element y = 0; y < n && part.result.holds; ++y)
        for (Element z = 0; z < zmax && part.result.holds; ++z)
          if (ti.lhs(delta, spec.tuple, x, y, z) != ti.rhs(delta, spec.tuple, x, y, z)) {
            std::vector<Element> w{x + (ti.barred[0] ? n : 0), y + (ti.barred[1] ? n : 0)};
            if (three) w.push_back(z + (ti.barred[2] ? n : 0));
            part.result = CheckResult::fail(std::move(w));
          }
    if (!part.result.holds) {
      if (!out.first_failure) out.first_failure = part.label;
      if (out.result.holds || part.result.witness < out.result.witness) out.result = part.result;
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

inline TranslatedCheck check_translated(const ExtensionSpec& spec, IdentityId id) {
  return check_translated(spec, id, DeltaTables(*spec.group));
}

}  // namespace bolext
