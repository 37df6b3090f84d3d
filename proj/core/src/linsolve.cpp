#include "hv/linsolve.hpp"

#include "hv/errors.hpp"

namespace hv {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r <- p[c] * r - r[c] * p, where c is the common leading column.
SparseRow eliminate(const SparseRow& r, const SparseRow& p) {
  const Integer a = p.front().second;
  const Integer b = r.front().second;
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 1;
  std::size_t j = 1;
  Integer t;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      t = a * r[i].second - b * p[j].second;
      if (t != 0) out.emplace_back(r[i].first, t);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

SparseRow primitive_row(const std::map<std::uint32_t, Rational>& row) {
  Integer l = 1;
  for (const auto& [c, v] : row)
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow out;
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    out.emplace_back(c, v.get_num() * (l / v.get_den()));
  }
  make_primitive(out);
  return out;
}

SparseRow Echelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    row = eliminate(row, it->second);
  }
  return row;
}

bool Echelon::insert(SparseRow row) {
  if (row.empty() || full()) return false;
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::uint32_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool Echelon::annihilates(const std::vector<Rational>& v) const {
  Rational s;
  for (const auto& [lead, row] : pivots_) {
    s = 0;
    for (const auto& [c, x] : row) s += Rational(x) * v.at(c);
    if (s != 0) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> Echelon::nullspace() const {
  std::vector<std::vector<Rational>> basis;
  for (std::uint32_t f = 0; f < columns_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Rational> v(columns_);
    v[f] = 1;
    // Back substitution, pivots in decreasing column order.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const SparseRow& row = it->second;
      Rational s;
      for (std::size_t k = 1; k < row.size(); ++k) s += Rational(row[k].second) * v[row[k].first];
      v[it->first] = -s / Rational(row.front().second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void LinearSystem::add_equation(const std::map<std::uint32_t, Rational>& row) {
  for (const auto& [c, v] : row)
    if (c >= variables_) throw Error(ErrorKind::InvalidParams, "equation references undeclared variable " + std::to_string(c));
  SparseRow r = primitive_row(row);
  if (!r.empty()) equations_.push_back(std::move(r));
}

Echelon echelon(const LinearSystem& sys) {
  Echelon e(sys.variables());
  for (const auto& row : sys.equations()) e.insert(row);
  return e;
}

std::vector<std::vector<Rational>> solve_nullspace(const LinearSystem& sys) { return echelon(sys).nullspace(); }

}  // namespace hv
