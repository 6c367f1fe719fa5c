#pragma once

// Small dense integer and rational matrices. Quotient matrices are tiny
// (k <= 3 in practice), so the representation favours exactness over speed.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hcube/error.hpp"

namespace hcube {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class QuotientMatrix {
 public:
  using value_type = std::int64_t;

  QuotientMatrix() = default;

  explicit QuotientMatrix(std::vector<std::vector<value_type>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
      require(r.size() == rows_.size(), ErrorCode::Shape, "quotient matrix must be square");
  }

  QuotientMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
      : QuotientMatrix(std::vector<std::vector<value_type>>(rows.begin(), rows.end())) {}

  static QuotientMatrix two_by_two(value_type a, value_type b, value_type c, value_type d) {
    return QuotientMatrix{{a, b}, {c, d}};
  }

  static QuotientMatrix zero(int k) {
    return QuotientMatrix(std::vector<std::vector<value_type>>(static_cast<std::size_t>(k),
                                                               std::vector<value_type>(static_cast<std::size_t>(k), 0)));
  }

  static QuotientMatrix identity(int k) {
    auto m = zero(k);
    for (int i = 0; i < k; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] int k() const noexcept { return static_cast<int>(rows_.size()); }

  [[nodiscard]] value_type operator()(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  value_type& operator()(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  [[nodiscard]] const std::vector<std::vector<value_type>>& rows() const noexcept { return rows_; }

  // 2x2 accessors [[a,b],[c,d]].
  [[nodiscard]] value_type a() const { return at2(0, 0); }
  [[nodiscard]] value_type b() const { return at2(0, 1); }
  [[nodiscard]] value_type c() const { return at2(1, 0); }
  [[nodiscard]] value_type d() const { return at2(1, 1); }

  [[nodiscard]] value_type row_sum(int i) const {
    value_type s = 0;
    for (auto x : rows_[static_cast<std::size_t>(i)]) s += x;
    return s;
  }

  /// Common row sum, if every row has the same one.
  [[nodiscard]] std::optional<value_type> common_row_sum() const {
    if (rows_.empty()) return std::nullopt;
    const auto s = row_sum(0);
    for (int i = 1; i < k(); ++i)
      if (row_sum(i) != s) return std::nullopt;
    return s;
  }

  /// Matrix of the same partition with cells renamed: new cell i is old cell perm[i].
  [[nodiscard]] QuotientMatrix permuted(const std::vector<int>& perm) const {
    require(static_cast<int>(perm.size()) == k(), ErrorCode::Shape, "permutation size mismatch");
    auto m = zero(k());
    for (int i = 0; i < k(); ++i)
      for (int j = 0; j < k(); ++j) m(i, j) = (*this)(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return m;
  }

  /// 2x2 matrix after swapping the two cells: [[d,c],[b,a]].
  [[nodiscard]] QuotientMatrix swapped() const { return permuted({1, 0}); }

  friend QuotientMatrix operator*(const QuotientMatrix& x, const QuotientMatrix& y) {
    require(x.k() == y.k(), ErrorCode::Shape, "matrix size mismatch");
    auto m = zero(x.k());
    for (int i = 0; i < x.k(); ++i)
      for (int j = 0; j < x.k(); ++j)
        for (int l = 0; l < x.k(); ++l) m(i, j) += x(i, l) * y(l, j);
    return m;
  }

  friend QuotientMatrix operator+(const QuotientMatrix& x, const QuotientMatrix& y) {
    require(x.k() == y.k(), ErrorCode::Shape, "matrix size mismatch");
    auto m = x;
    for (int i = 0; i < x.k(); ++i)
      for (int j = 0; j < x.k(); ++j) m(i, j) += y(i, j);
    return m;
  }

  friend QuotientMatrix operator*(value_type s, const QuotientMatrix& x) {
    auto m = x;
    for (auto& r : m.rows_)
      for (auto& v : r) v *= s;
    return m;
  }

  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

  /// "[[a,b],[c,d]]"
  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < k(); ++i) {
      if (i) os << ',';
      os << '[';
      for (int j = 0; j < k(); ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

  /// Compact row form used by partition files: "a,b;c,d".
  [[nodiscard]] std::string to_row_string() const {
    std::ostringstream os;
    for (int i = 0; i < k(); ++i) {
      if (i) os << ';';
      for (int j = 0; j < k(); ++j) os << (j ? "," : "") << (*this)(i, j);
    }
    return os.str();
  }

  static QuotientMatrix from_json(const nlohmann::json& j) {
    require(j.is_array() && !j.empty(), ErrorCode::Parse, "matrix must be a non-empty array of rows");
    std::vector<std::vector<value_type>> rows;
    for (const auto& r : j) {
      require(r.is_array(), ErrorCode::Parse, "matrix row must be an array");
      std::vector<value_type> row;
      for (const auto& x : r) {
        require(x.is_number_integer(), ErrorCode::Parse, "matrix entries must be integers");
        row.push_back(x.get<value_type>());
      }
      rows.push_back(std::move(row));
    }
    for (const auto& r : rows) require(r.size() == rows.size(), ErrorCode::Parse, "matrix must be square");
    return QuotientMatrix(std::move(rows));
  }

  /// Accepts "[[4,62],[2,64]]" or the row form "4,62;2,64".
  static QuotientMatrix parse(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
      auto j = nlohmann::json::parse(text, nullptr, false);
      require(!j.is_discarded(), ErrorCode::Parse, "malformed matrix literal '" + text + "'");
      return from_json(j);
    }
    std::vector<std::vector<value_type>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
      std::vector<value_type> r;
      std::stringstream rs(row);
      std::string cell;
      while (std::getline(rs, cell, ',')) {
        try {
          std::size_t used = 0;
          r.push_back(std::stoll(cell, &used));
          require(used == cell.size(), ErrorCode::Parse, "bad matrix entry '" + cell + "'");
        } catch (const std::logic_error&) {
          fail(ErrorCode::Parse, "bad matrix entry '" + cell + "'");
        }
      }
      rows.push_back(std::move(r));
    }
    require(!rows.empty(), ErrorCode::Parse, "empty matrix literal");
    for (const auto& r : rows) require(r.size() == rows.size(), ErrorCode::Parse, "matrix must be square");
    return QuotientMatrix(std::move(rows));
  }

  [[nodiscard]] nlohmann::json to_json() const { return rows_; }

 private:
  [[nodiscard]] value_type at2(int i, int j) const {
    require(k() == 2, ErrorCode::Shape, "2x2 accessor on a " + std::to_string(k()) + "x" + std::to_string(k()) + " matrix");
    return (*this)(i, j);
  }

  std::vector<std::vector<value_type>> rows_;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int k)
      : k_(k), data_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), Rational(0)) {}

  explicit RationalMatrix(const QuotientMatrix& m) : RationalMatrix(m.k()) {
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) (*this)(i, j) = Rational(m(i, j));
  }

  static RationalMatrix identity(int k) {
    RationalMatrix m(k);
    for (int i = 0; i < k; ++i) m(i, i) = 1;
    return m;
  }

  [[nodiscard]] int k() const noexcept { return k_; }
  Rational& operator()(int i, int j) { return data_[index(i, j)]; }
  [[nodiscard]] const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }

  [[nodiscard]] bool is_integral() const {
    for (const auto& x : data_)
      if (denominator(x) != 1) return false;
    return true;
  }

  [[nodiscard]] bool is_nonnegative() const {
    for (const auto& x : data_)
      if (x < 0) return false;
    return true;
  }

  /// Integer matrix; only meaningful when is_integral().
  [[nodiscard]] QuotientMatrix to_integer() const {
    require(is_integral(), ErrorCode::Shape, "matrix has non-integral entries");
    auto m = QuotientMatrix::zero(k_);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) m(i, j) = static_cast<std::int64_t>(numerator((*this)(i, j)));
    return m;
  }

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    RationalMatrix m(x.k_);
    for (int i = 0; i < x.k_; ++i)
      for (int j = 0; j < x.k_; ++j)
        for (int l = 0; l < x.k_; ++l) m(i, j) += x(i, l) * y(l, j);
    return m;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < k_; ++i) {
      if (i) os << ',';
      os << '[';
      for (int j = 0; j < k_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << ']';
    }
    os << ']';
    return os.str();
  }

  /// Integers stay JSON numbers when they fit; other entries become "p/q" strings.
  [[nodiscard]] nlohmann::json to_json() const {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < k_; ++i) {
      auto row = nlohmann::json::array();
      for (int j = 0; j < k_; ++j) {
        const auto& x = (*this)(i, j);
        if (denominator(x) == 1 && abs(numerator(x)) < BigInt(std::numeric_limits<std::int64_t>::max()))
          row.push_back(static_cast<std::int64_t>(numerator(x)));
        else
          row.push_back(x.str());
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
  }

  int k_ = 0;
  std::vector<Rational> data_;
};

}  // namespace hcube
