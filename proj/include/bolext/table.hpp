#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bolext {

/// Dense element index. Elements of an order-n structure are 0..n-1.
using Element = std::uint32_t;

/// Raised when an input table violates a structural requirement
/// (Latin square, associativity, neutral element, file syntax).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Anything with a square multiplication table over 0..size()-1.
template <typename T>
concept BinaryTable = requires(const T& t, Element a, Element b) {
  { t.size() } -> std::convertible_to<std::size_t>;
  { t(a, b) } -> std::convertible_to<Element>;
};

/// Plain square table, row-major. No algebraic validation.
class CayleyTable {
 public:
  CayleyTable() = default;

  explicit CayleyTable(std::size_t n) : n_(n), cells_(n * n, 0) {}

  CayleyTable(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) {
      throw ValidationError("table has " + std::to_string(cells_.size()) + " cells, expected " +
                            std::to_string(n_ * n_));
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (cells_[i] >= n_) {
        throw ValidationError("cell (" + std::to_string(i / n_) + "," + std::to_string(i % n_) +
                              ") holds " + std::to_string(cells_[i]) + ", out of range 0.." +
                              std::to_string(n_ == 0 ? 0 : n_ - 1));
      }
    }
  }

  static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " entries, table is not square (n=" + std::to_string(n) + ")");
      }
      cells.insert(cells.end(), rows[r].begin(), rows[r].end());
    }
    return CayleyTable(n, std::move(cells));
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] Element operator()(Element a, Element b) const noexcept { return cells_[a * n_ + b]; }
  [[nodiscard]] Element& at(Element a, Element b) noexcept { return cells_[a * n_ + b]; }

  [[nodiscard]] std::span<const Element> row(Element a) const noexcept {
    return std::span<const Element>(cells_).subspan(a * n_, n_);
  }
  [[nodiscard]] std::span<const Element> cells() const noexcept { return cells_; }

  [[nodiscard]] CayleyTable transposed() const {
    CayleyTable t(n_);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) t.at(a, b) = (*this)(b, a);
    return t;
  }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

template <BinaryTable T>
CayleyTable to_cayley(const T& t) {
  const auto n = static_cast<Element>(t.size());
  CayleyTable out(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out.at(a, b) = t(a, b);
  return out;
}

/// Relabel a table through a bijection `perm` (old index -> new index).
template <BinaryTable T>
CayleyTable relabel(const T& t, std::span<const Element> perm) {
  const auto n = static_cast<Element>(t.size());
  CayleyTable out(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out.at(perm[a], perm[b]) = perm[t(a, b)];
  return out;
}

/// First cell (row, col) at which a Latin-square condition fails, if any.
/// Rows are scanned before columns.
template <BinaryTable T>
std::optional<std::pair<Element, Element>> first_latin_violation(const T& t) {
  const auto n = static_cast<Element>(t.size());
  std::vector<char> seen(n);
  for (Element r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element c = 0; c < n; ++c) {
      const Element v = t(r, c);
      if (seen[v]) return std::pair{r, c};
      seen[v] = 1;
    }
  }
  for (Element c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element r = 0; r < n; ++r) {
      const Element v = t(r, c);
      if (seen[v]) return std::pair{r, c};
      seen[v] = 1;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cayley-table text format:
//   line 1: n
//   next n lines: n space-separated zero-based indices (row i is i*0 .. i*(n-1))
// '#' starts a comment that runs to end of line. Blank lines are ignored.
// ---------------------------------------------------------------------------

inline CayleyTable read_cayley_text(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) {
        throw ValidationError("line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
      tokens.push_back(v);
    }
  }
  if (tokens.empty()) throw ValidationError("empty table file");
  const auto n = static_cast<std::size_t>(tokens.front());
  if (n == 0) throw ValidationError("table order must be positive");
  if (tokens.size() != 1 + n * n) {
    throw ValidationError("expected " + std::to_string(n * n) + " entries after order line, found " +
                          std::to_string(tokens.size() - 1));
  }
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t i = 1; i < tokens.size(); ++i) cells.push_back(static_cast<Element>(tokens[i]));
  return CayleyTable(n, std::move(cells));
}

template <BinaryTable T>
void write_cayley_text(std::ostream& out, const T& t) {
  const auto n = static_cast<Element>(t.size());
  out << n << '\n';
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << t(a, b);
    }
    out << '\n';
  }
}

template <BinaryTable T>
std::string to_cayley_text(const T& t) {
  std::ostringstream os;
  write_cayley_text(os, t);
  return os.str();
}

/// One-line permutation in image notation: "f(0) f(1) ... f(n-1)".
inline std::string format_permutation(std::span<const Element> perm) {
  std::string s;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(perm[i]);
  }
  return s;
}

inline std::vector<Element> parse_permutation(const std::string& text) {
  std::istringstream is(text);
  std::vector<Element> perm;
  long long v = 0;
  while (is >> v) {
    if (v < 0) throw ValidationError("negative entry in permutation");
    perm.push_back(static_cast<Element>(v));
  }
  std::vector<char> seen(perm.size());
  for (Element p : perm) {
    if (p >= perm.size() || seen[p]) throw ValidationError("not a permutation: " + text);
    seen[p] = 1;
  }
  return perm;
}

}  // namespace bolext
