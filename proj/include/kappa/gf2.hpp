#pragma once

/**
 * Dense linear algebra over GF(2). Rows are bitsets; elimination XORs whole
 * words at a time. Pivots are chosen as the first row with a set bit in the
 * current column, so solutions are reproducible.
 */

#include "kappa/bitset.hpp"
#include "kappa/error.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

class Gf2Matrix
{
public:
  Gf2Matrix(int rows, int cols) : _cols(cols), _data(rows, BitVector(cols)) {
    if (rows < 0 || cols < 0)
      throw ContractViolation("negative matrix dimension");
  }

  static auto identity(int n) -> Gf2Matrix {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      m.set(i, i);
    return m;
  }

  static auto from_rows(int cols, std::vector<BitVector> rows) -> Gf2Matrix {
    Gf2Matrix m(0, cols);
    for (auto & r : rows) {
      if (r.size() != cols)
        throw ContractViolation("row width " + std::to_string(r.size()) + " != " +
                                std::to_string(cols));
      m._data.push_back(std::move(r));
    }
    return m;
  }

  auto rows() const -> int { return static_cast<int>(_data.size()); }
  auto cols() const -> int { return _cols; }

  auto get(int r, int c) const -> bool { return _data.at(r).test(c); }
  auto set(int r, int c, bool value = true) -> void { _data.at(r).set(c, value); }

  auto row(int r) const -> const BitVector & { return _data.at(r); }

  auto multiply(const BitVector & x) const -> BitVector {
    if (x.size() != _cols)
      throw ContractViolation("multiply: vector length " + std::to_string(x.size()) +
                              " != cols " + std::to_string(_cols));
    BitVector out(rows());
    for (int r = 0; r < rows(); ++r)
      if (_data[r].dot(x))
        out.set(r);
    return out;
  }

private:
  int _cols;
  std::vector<BitVector> _data;
};

// Solution set = particular + span(kernel_basis).
struct Gf2Solution
{
  BitVector particular;
  std::vector<BitVector> kernel_basis;
};

namespace detail {

struct Echelon
{
  std::vector<BitVector> rows; // reduced rows, pivots first
  std::vector<BitVector> rhs;  // one-bit vectors tracking b
  std::vector<int> pivot_cols;
  bool consistent = true;
};

// Reduced row echelon form of [m | b].
inline auto eliminate(const Gf2Matrix & m, const BitVector * b) -> Echelon {
  Echelon e;
  std::vector<BitVector> rows;
  std::vector<bool> rhs;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    rows.push_back(m.row(r));
    rhs.push_back(b ? b->test(r) : false);
  }

  int next = 0;
  for (int c = 0; c < m.cols() && next < m.rows(); ++c) {
    int pivot = -1;
    for (int r = next; r < m.rows(); ++r)
      if (rows[r].test(c)) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      continue;
    std::swap(rows[pivot], rows[next]);
    std::swap(rhs[pivot], rhs[next]);
    for (int r = 0; r < m.rows(); ++r)
      if (r != next && rows[r].test(c)) {
        rows[r] ^= rows[next];
        rhs[r] = rhs[r] != rhs[next];
      }
    e.pivot_cols.push_back(c);
    ++next;
  }
  for (int r = next; r < m.rows(); ++r)
    if (rhs[r])
      e.consistent = false;

  for (int r = 0; r < next; ++r) {
    e.rows.push_back(std::move(rows[r]));
    BitVector bit(1);
    if (rhs[r])
      bit.set(0);
    e.rhs.push_back(std::move(bit));
  }
  return e;
}

inline auto kernel_from_echelon(const Echelon & e, int cols) -> std::vector<BitVector> {
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols)
    is_pivot[c] = true;
  std::vector<BitVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    BitVector v(cols);
    v.set(free);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      if (e.rows[r].test(free))
        v.set(e.pivot_cols[r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace detail

inline auto rank(const Gf2Matrix & m) -> int {
  return static_cast<int>(detail::eliminate(m, nullptr).pivot_cols.size());
}

// Basis of {x : Mx = 0}.
inline auto kernel_basis(const Gf2Matrix & m) -> std::vector<BitVector> {
  return detail::kernel_from_echelon(detail::eliminate(m, nullptr), m.cols());
}

// Empty when Mx = b has no solution. Free variables are set to zero in the
// particular solution.
inline auto solve(const Gf2Matrix & m, const BitVector & b) -> std::optional<Gf2Solution> {
  if (b.size() != m.rows())
    throw ContractViolation("solve: rhs length " + std::to_string(b.size()) + " != rows " +
                            std::to_string(m.rows()));
  auto e = detail::eliminate(m, &b);
  if (!e.consistent)
    return std::nullopt;

  Gf2Solution s{BitVector(m.cols()), detail::kernel_from_echelon(e, m.cols())};
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
    if (e.rhs[r].test(0))
      s.particular.set(e.pivot_cols[r]);
  return s;
}

} // namespace kappa
