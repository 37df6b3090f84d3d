#include "hv/grading.hpp"

#include <algorithm>
#include <cstdlib>

#include "hv/errors.hpp"

namespace hv {

namespace {

void check_rank_value(std::size_t rank) {
  if (rank == 0) throw Error(ErrorKind::InvalidContext, "rank must be positive");
  if (rank > kMaxRank) throw Error(ErrorKind::RankTooLarge, "rank " + std::to_string(rank) + " exceeds " + std::to_string(kMaxRank));
}

}  // namespace

GroupElem::GroupElem(std::span<const int> coords) : rank_(coords.size()) {
  check_rank_value(rank_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

GroupElem::GroupElem(std::initializer_list<int> coords)
    : GroupElem(std::span<const int>(coords.begin(), coords.size())) {}

GroupElem GroupElem::zero(std::size_t rank) {
  check_rank_value(rank);
  GroupElem a;
  a.rank_ = rank;
  return a;
}

GroupElem GroupElem::unit(std::size_t rank, std::size_t i) {
  GroupElem a = zero(rank);
  if (i < 1 || i > rank) throw Error(ErrorKind::InvalidParams, "basis index out of range");
  a.c_[i - 1] = 1;
  return a;
}

bool GroupElem::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
}

int GroupElem::norm() const {
  int m = 0;
  for (std::size_t i = 0; i < rank_; ++i) m = std::max(m, std::abs(c_[i]));
  return m;
}

void GroupElem::check_rank(const GroupElem& o) const {
  if (rank_ != o.rank_)
    throw Error(ErrorKind::RankMismatch, to_string(*this) + " vs " + to_string(o));
}

GroupElem GroupElem::operator+(const GroupElem& o) const {
  check_rank(o);
  GroupElem r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] += o.c_[i];
  return r;
}

GroupElem GroupElem::operator-(const GroupElem& o) const {
  check_rank(o);
  GroupElem r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

GroupElem GroupElem::operator-() const {
  GroupElem r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

GroupElem GroupElem::operator*(int k) const {
  GroupElem r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] *= k;
  return r;
}

bool GroupElem::operator==(const GroupElem& o) const {
  return rank_ == o.rank_ && std::equal(c_.begin(), c_.begin() + rank_, o.c_.begin());
}

std::strong_ordering GroupElem::operator<=>(const GroupElem& o) const {
  if (auto c = rank_ <=> o.rank_; c != 0) return c;
  for (std::size_t i = 0; i < rank_; ++i)
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Scalar value(const GroupElem& a) {
  Polynomial p(static_cast<long>(a[0]));
  for (std::size_t i = 1; i < a.rank(); ++i)
    if (a[i] != 0) p += Polynomial::variable(i - 1).scaled(Rational(a[i]));
  return Scalar(p);
}

Rational value_at(const GroupElem& a, std::span<const Rational> assignment) {
  if (assignment.size() + 1 < a.rank())
    throw Error(ErrorKind::RankMismatch, "assignment too short for rank " + std::to_string(a.rank()));
  Rational v(a[0]);
  for (std::size_t i = 1; i < a.rank(); ++i) v += assignment[i - 1] * a[i];
  return v;
}

std::string to_string(const GroupElem& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(a[i]);
  }
  return s + "]";
}

std::vector<GroupElem> window(std::size_t rank, int radius) {
  if (radius < 0) throw Error(ErrorKind::InvalidParams, "negative window radius");
  std::vector<int> c(rank, -radius);
  std::vector<GroupElem> out;
  while (true) {
    out.emplace_back(std::span<const int>(c));
    std::size_t i = rank;
    while (i > 0 && c[i - 1] == radius) c[--i] = -radius;
    if (i == 0) break;
    ++c[i - 1];
  }
  return out;
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::Plain: return "plain";
    case Variant::Extended: return "extended";
    case Variant::DerivedPrime: return "derived-prime";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "plain") return Variant::Plain;
  if (text == "extended") return Variant::Extended;
  if (text == "derived-prime") return Variant::DerivedPrime;
  throw Error(ErrorKind::SyntaxError, "unknown variant '" + std::string(text) + "'");
}

AlgebraContext::AlgebraContext(std::size_t rank, Rational lambda, Variant variant)
    : rank_(rank), lambda_(std::move(lambda)), variant_(variant) {
  check_rank_value(rank_);
  if (variant_ == Variant::Extended && lambda_ == -1)
    throw Error(ErrorKind::InvalidContext, "the extended algebra needs lambda != -1");
  if (variant_ == Variant::DerivedPrime && lambda_ != -1)
    throw Error(ErrorKind::InvalidContext, "the derived-prime algebra needs lambda = -1");
}

}  // namespace hv
