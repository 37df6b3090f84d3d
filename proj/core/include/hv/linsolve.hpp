#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

/// Sparse row with strictly increasing column indices and nonzero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

/// Scales a rational row to a primitive integer row with positive leading
/// entry. Zero entries are dropped; the result is empty for the zero row.
SparseRow primitive_row(const std::map<std::uint32_t, Rational>& row);

/// Row echelon form built incrementally by fraction-free elimination.
/// Pivot of a row = its first nonzero column; rows are inserted in the
/// order given, each one reduced against the existing pivots first.
class Echelon {
 public:
  explicit Echelon(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return rank() == columns_; }

  /// Returns true when the row was independent of the rows so far.
  bool insert(SparseRow row);
  bool insert(const std::map<std::uint32_t, Rational>& row) { return insert(primitive_row(row)); }

  /// Remainder of the row after reduction by the pivots (empty iff the row
  /// lies in the row space).
  SparseRow reduce(SparseRow row) const;

  /// True when every stored row annihilates v.
  bool annihilates(const std::vector<Rational>& v) const;

  /// Basis of {v : row . v = 0 for all rows}, one vector per free column
  /// (free variable 1, other free variables 0), in increasing column order.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t columns_;
  std::map<std::uint32_t, SparseRow> pivots_;
};

/// Homogeneous system in `variables` unknowns.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const { return variables_; }
  /// InvalidParams for a column outside [0, variables).
  void add_equation(const std::map<std::uint32_t, Rational>& row);
  const std::vector<SparseRow>& equations() const { return equations_; }

 private:
  std::size_t variables_;
  std::vector<SparseRow> equations_;
};

Echelon echelon(const LinearSystem& sys);
std::vector<std::vector<Rational>> solve_nullspace(const LinearSystem& sys);

}  // namespace hv
