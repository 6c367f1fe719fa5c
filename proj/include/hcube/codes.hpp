#pragma once

// Binary codes: linear codes from generators or parity checks with their
// cosets, explicit (unrestricted) codes, the repetition code, and the
// length-12 Hadamard code from the Paley construction over GF(11).
//
// Code files: a header line "n=<n>" followed by one binary word per line.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hcube/cube.hpp"
#include "hcube/error.hpp"
#include "hcube/verify.hpp"
#include "hcube/word.hpp"

namespace hcube {

namespace gf2 {

/// Reduced row echelon form; zero rows dropped, pivots are the highest set bits,
/// rows sorted by decreasing pivot.
[[nodiscard]] inline std::vector<word_t> rref(std::vector<word_t> rows) {
  std::vector<word_t> out;
  for (int bit = 63; bit >= 0; --bit) {
    const word_t mask = word_t{1} << bit;
    auto it = std::find_if(rows.begin(), rows.end(), [&](word_t r) { return (r & mask) != 0; });
    if (it == rows.end()) continue;
    const word_t pivot = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r & mask) r ^= pivot;
    for (auto& r : out)
      if (r & mask) r ^= pivot;
    out.push_back(pivot);
  }
  return out;
}

[[nodiscard]] inline int highest_bit(word_t w) { return 63 - std::countl_zero(w); }

}  // namespace gf2

class LinearCode {
 public:
  LinearCode(int n, std::vector<word_t> generators) : n_(n) {
    require(n >= 1 && n <= kMaxLength, ErrorCode::Shape, "code length must be in 1..64");
    for (auto g : generators) require((g & ~low_mask(n)) == 0, ErrorCode::Shape, "generator longer than the code");
    basis_ = gf2::rref(std::move(generators));
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int dimension() const noexcept { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const std::vector<word_t>& basis() const noexcept { return basis_; }
  [[nodiscard]] std::uint64_t size() const noexcept { return std::uint64_t{1} << dimension(); }

  /// Canonical coset representative: w reduced against the echelon basis.
  [[nodiscard]] word_t reduce(word_t w) const noexcept {
    for (auto b : basis_)
      if (w & (word_t{1} << gf2::highest_bit(b))) w ^= b;
    return w;
  }

  [[nodiscard]] bool contains(word_t w) const noexcept { return reduce(w) == 0; }

  /// Codewords in ascending order.
  [[nodiscard]] std::vector<word_t> codewords() const {
    require(dimension() <= 26, ErrorCode::Precondition, "code too large to enumerate");
    std::vector<word_t> out;
    out.reserve(size());
    for (std::uint64_t mask = 0; mask < size(); ++mask) {
      word_t w = 0;
      for (int i = 0; i < dimension(); ++i)
        if (mask >> i & 1U) w ^= basis_[static_cast<std::size_t>(i)];
      out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Cosets w + C ordered by their smallest word; with `even_only`, only the
  /// cosets inside the even-weight subspace (the code must be even itself).
  [[nodiscard]] std::vector<std::vector<word_t>> cosets(bool even_only = false) const {
    require(n_ <= 26, ErrorCode::Precondition, "coset enumeration needs n <= 26");
    if (even_only)
      for (auto b : basis_) require(parity_of(b) == 0, ErrorCode::Parity, "code has odd-weight words");
    const auto words = codewords();
    std::vector<std::vector<word_t>> out;
    std::vector<bool> seen(std::size_t{1} << n_, false);
    for (word_t w = 0; w < (word_t{1} << n_); ++w) {
      if (seen[w] || (even_only && parity_of(w) != 0)) continue;
      std::vector<word_t> coset;
      coset.reserve(words.size());
      for (auto c : words) {
        seen[w ^ c] = true;
        coset.push_back(w ^ c);
      }
      std::sort(coset.begin(), coset.end());
      out.push_back(std::move(coset));
    }
    return out;
  }

  /// True when every generator is orthogonal to every parity row.
  [[nodiscard]] bool satisfies(const std::vector<word_t>& parity_rows) const {
    for (auto g : basis_)
      for (auto h : parity_rows)
        if (parity_of(g & h)) return false;
    return true;
  }

 private:
  int n_;
  std::vector<word_t> basis_;
};

[[nodiscard]] inline LinearCode span_code(int n, const std::vector<word_t>& generators) { return {n, generators}; }

/// Solutions x of H x^T = 0 for the given parity-check rows.
[[nodiscard]] inline LinearCode kernel_code(int n, const std::vector<word_t>& parity_rows) {
  for (auto r : parity_rows) require((r & ~low_mask(n)) == 0, ErrorCode::Shape, "parity row longer than the code");
  const auto rows = gf2::rref(parity_rows);
  word_t pivots = 0;
  for (auto r : rows) pivots |= word_t{1} << gf2::highest_bit(r);
  std::vector<word_t> basis;
  for (int f = 0; f < n; ++f) {
    const word_t fb = word_t{1} << f;
    if (pivots & fb) continue;
    word_t x = fb;
    for (auto r : rows)
      if (r & fb) x |= word_t{1} << gf2::highest_bit(r);
    basis.push_back(x);
  }
  return {n, basis};
}

/// A code given by its words (not necessarily linear).
class UnrestrictedCode {
 public:
  UnrestrictedCode(int n, std::vector<word_t> words) : n_(n), words_(std::move(words)) {
    require(n >= 1 && n <= kMaxLength, ErrorCode::Shape, "code length must be in 1..64");
    require(!words_.empty(), ErrorCode::EmptyCode, "a code needs at least one word");
    for (auto w : words_) require((w & ~low_mask(n)) == 0, ErrorCode::Shape, "codeword longer than the code");
    std::sort(words_.begin(), words_.end());
    require(std::adjacent_find(words_.begin(), words_.end()) == words_.end(), ErrorCode::Shape,
            "codewords must be distinct");
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<word_t>& words() const noexcept { return words_; }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size(); }

  [[nodiscard]] bool even_weight() const {
    return std::all_of(words_.begin(), words_.end(), [](word_t w) { return parity_of(w) == 0; });
  }

  /// Minimum distance (n+1 for a one-word code).
  [[nodiscard]] int min_distance() const {
    int best = n_ + 1;
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::size_t j = i + 1; j < words_.size(); ++j) best = std::min(best, popcount(words_[i] ^ words_[j]));
    return best;
  }

  [[nodiscard]] DistancePartition distance_layers() const { return distance_partition(CubeGraph::full(n_), words_); }

  [[nodiscard]] int covering_radius() const { return distance_layers().covering_radius(); }

  [[nodiscard]] UnrestrictedCode translated(word_t shift) const {
    auto w = words_;
    for (auto& x : w) x ^= shift;
    return {n_, std::move(w)};
  }

  [[nodiscard]] static UnrestrictedCode from_linear(const LinearCode& code) { return {code.n(), code.codewords()}; }

 private:
  int n_;
  std::vector<word_t> words_;
};

[[nodiscard]] inline UnrestrictedCode repetition(int n) {
  require(n >= 2, ErrorCode::Shape, "repetition code needs n >= 2");
  return {n, {0, low_mask(n)}};
}

/// Normalized order-12 Hadamard matrix from the Paley construction over GF(11):
/// H = I + [[0, 1^T], [-1, Q]] with the Jacobsthal matrix Q(i,j) = chi(j - i),
/// then rows and columns scaled so row 0 and column 0 are all +1.
[[nodiscard]] inline std::array<std::array<int, 12>, 12> paley_hadamard12() {
  constexpr int q = 11;
  std::array<int, q> chi{};
  for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>(x * x % q)] = 1;
  for (int x = 1; x < q; ++x)
    if (chi[static_cast<std::size_t>(x)] == 0) chi[static_cast<std::size_t>(x)] = -1;

  std::array<std::array<int, 12>, 12> h{};
  for (int j = 1; j < 12; ++j) {
    h[0][static_cast<std::size_t>(j)] = 1;
    h[static_cast<std::size_t>(j)][0] = -1;
  }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      h[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = chi[static_cast<std::size_t>(((j - i) % q + q) % q)];
  for (int i = 0; i < 12; ++i) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += 1;

  for (auto& row : h)
    if (row[0] < 0)
      for (auto& x : row) x = -x;
  for (std::size_t j = 0; j < 12; ++j)
    if (h[0][j] < 0)
      for (auto& row : h) row[j] = -row[j];
  return h;
}

/// The 24-word length-12 Hadamard code: the rows of the normalized Paley
/// matrix with +1 -> 0, -1 -> 1, and their complements.
[[nodiscard]] inline UnrestrictedCode hadamard12() {
  const auto h = paley_hadamard12();
  std::vector<word_t> words;
  for (const auto& row : h) {
    word_t w = 0;
    for (int j = 0; j < 12; ++j)
      if (row[static_cast<std::size_t>(j)] < 0) w |= word_t{1} << bit_of_coordinate(12, j + 1);
    words.push_back(w);
    words.push_back(w ^ low_mask(12));
  }
  return {12, std::move(words)};
}

inline void write_code(std::ostream& os, int n, const std::vector<word_t>& words) {
  os << "n=" << n << '\n';
  for (auto w : words) os << format_word(w, n) << '\n';
}

[[nodiscard]] inline UnrestrictedCode read_code(std::istream& is) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), ErrorCode::Parse, "missing code header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const int n = detail::parse_int_field(line, "n");
  require(n >= 1 && n <= kMaxLength, ErrorCode::Parse, "n must be in 1..64");
  std::vector<word_t> words;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    words.push_back(BinaryWord::parse(line, n).bits());
  }
  require(!words.empty(), ErrorCode::Parse, "code file has no words");
  std::sort(words.begin(), words.end());
  require(std::adjacent_find(words.begin(), words.end()) == words.end(), ErrorCode::Parse, "duplicate codeword");
  return {n, std::move(words)};
}

}  // namespace hcube
