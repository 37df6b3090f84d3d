#include "hv/oracle.hpp"

#include <future>
#include <random>
#include <unordered_map>

#include "hv/cocycles.hpp"
#include "hv/derivations.hpp"
#include "hv/errors.hpp"
#include "hv/linsolve.hpp"

namespace hv {

std::vector<std::uint64_t> default_seeds() { return {11, 23, 47}; }

namespace {

// Structure constants of g (or g') specialized at a rational assignment,
// computed from the defining brackets without going through Scalar.
class Model {
 public:
  enum : std::uint8_t { kL = 0, kI = 1 };
  struct Key {
    std::uint8_t kind;
    std::uint32_t cell;  // window index of the degree
  };
  struct Term {
    int key = -1;  // -1: zero
    Rational coef;
  };

  Model(const AlgebraContext& ctx, int radius, std::span<const Rational> assignment)
      : rank_(ctx.rank()), radius_(radius), lambda_(ctx.lambda()) {
    const std::size_t side = 2 * static_cast<std::size_t>(radius) + 1;
    std::size_t cells = 1;
    for (std::size_t i = 0; i < rank_; ++i) cells *= side;
    degrees_.reserve(cells);
    values_.reserve(cells);
    for (std::size_t idx = 0; idx < cells; ++idx) {
      std::array<int, kMaxRank> c{};
      std::size_t rest = idx;
      for (std::size_t i = rank_; i-- > 0;) {
        c[i] = static_cast<int>(rest % side) - radius;
        rest /= side;
      }
      degrees_.emplace_back(std::span<const int>(c.data(), rank_));
      values_.push_back(value_at(degrees_.back(), assignment));
    }
    key_of_[kL].assign(cells, -1);
    key_of_[kI].assign(cells, -1);
    for (std::uint8_t kind : {kL, kI}) {
      for (std::uint32_t cell = 0; cell < cells; ++cell) {
        if (kind == kI && ctx.variant() == Variant::DerivedPrime && degrees_[cell].is_zero()) continue;
        key_of_[kind][cell] = static_cast<int>(keys_.size());
        keys_.push_back({kind, cell});
      }
    }
  }

  std::size_t cells() const { return degrees_.size(); }
  const std::vector<Key>& keys() const { return keys_; }
  const GroupElem& degree(std::uint32_t cell) const { return degrees_[cell]; }
  int key_of(std::uint8_t kind, std::uint32_t cell) const { return key_of_[kind][cell]; }

  /// Window index of a, or -1 outside B_R.
  long cell_of(const GroupElem& a) const {
    long idx = 0;
    const long side = 2L * radius_ + 1;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (a[i] < -radius_ || a[i] > radius_) return -1;
      idx = idx * side + (a[i] + radius_);
    }
    return idx;
  }

  long sum_cell(std::uint32_t p, std::uint32_t q) const { return cell_of(degrees_[p] + degrees_[q]); }

  /// [x, y] for key ids whose degree sum lies in the window.
  Term bracket(int x, int y) const {
    const Key& kx = keys_[static_cast<std::size_t>(x)];
    const Key& ky = keys_[static_cast<std::size_t>(y)];
    Term t;
    if (kx.kind == kI && ky.kind == kI) return t;
    const long s = sum_cell(kx.cell, ky.cell);
    if (s < 0) throw Error(ErrorKind::OutOfWindow, "bracket leaves the oracle window");
    const Rational& va = values_[kx.cell];
    const Rational& vb = values_[ky.cell];
    if (kx.kind == kL && ky.kind == kL) {
      t.coef = vb - va;
      t.key = key_of_[kL][static_cast<std::size_t>(s)];
    } else if (kx.kind == kL) {
      t.coef = vb - lambda_ * va;
      t.key = key_of_[kI][static_cast<std::size_t>(s)];
    } else {
      t.coef = -(va - lambda_ * vb);
      t.key = key_of_[kI][static_cast<std::size_t>(s)];
    }
    if (t.coef == 0) t.key = -1;
    return t;
  }

  BasisKey basis_key(int id) const {
    const Key& k = keys_[static_cast<std::size_t>(id)];
    return k.kind == kL ? BasisKey::L(degrees_[k.cell]) : BasisKey::I(degrees_[k.cell]);
  }

 private:
  std::size_t rank_;
  int radius_;
  Rational lambda_;
  std::vector<GroupElem> degrees_;
  std::vector<Rational> values_;
  std::vector<int> key_of_[2];
  std::vector<Key> keys_;
};

bool degenerate(const AlgebraContext& ctx, int radius, const std::vector<Rational>& assignment) {
  const auto w = window(ctx.rank(), radius);
  for (const Rational& c : {Rational(1), ctx.lambda()}) {
    for (const auto& a : w) {
      for (const auto& b : w) {
        bool nonzero = false;
        Rational v = Rational(b[0]) - c * a[0];
        nonzero = v != 0;
        for (std::size_t i = 1; i < ctx.rank(); ++i) {
          const Rational coord = Rational(b[i]) - c * a[i];
          nonzero = nonzero || coord != 0;
          v += coord * assignment[i - 1];
        }
        if (nonzero && v == 0) return true;
      }
    }
  }
  return false;
}

struct H2Run {
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  // block of total degree zero, kept for the builtin check
  std::vector<std::pair<int, int>> zero_unknowns;
  std::vector<SparseRow> zero_coboundaries;
  std::unique_ptr<Echelon> zero_block;
};

H2Run run_h2(const AlgebraContext& ctx, int radius, const std::vector<Rational>& assignment) {
  const Model m(ctx, radius, assignment);
  const auto& keys = m.keys();
  const std::size_t nk = keys.size();

  std::vector<std::vector<std::pair<int, int>>> unknowns(m.cells());
  std::unordered_map<std::uint64_t, std::uint32_t> column;
  auto pair_id = [nk](int x, int y) { return static_cast<std::uint64_t>(x) * nk + static_cast<std::uint64_t>(y); };
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = i + 1; j < nk; ++j) {
      const long s = m.sum_cell(keys[i].cell, keys[j].cell);
      if (s < 0) continue;
      auto& block = unknowns[static_cast<std::size_t>(s)];
      column.emplace(pair_id(static_cast<int>(i), static_cast<int>(j)), static_cast<std::uint32_t>(block.size()));
      block.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }

  std::vector<Echelon> blocks;
  blocks.reserve(m.cells());
  for (const auto& u : unknowns) blocks.emplace_back(u.size());

  std::map<std::uint32_t, Rational> row;
  auto term = [&](int p, int q, int r) {
    const Model::Term t = m.bracket(p, q);
    if (t.key < 0 || t.key == r) return;
    if (t.key < r) row[column.at(pair_id(t.key, r))] += t.coef;
    else row[column.at(pair_id(r, t.key))] -= t.coef;
  };

  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = i + 1; j < nk; ++j) {
      const long sij = m.sum_cell(keys[i].cell, keys[j].cell);
      if (sij < 0) continue;
      for (std::size_t k = j + 1; k < nk; ++k) {
        if (m.sum_cell(keys[j].cell, keys[k].cell) < 0 || m.sum_cell(keys[i].cell, keys[k].cell) < 0) continue;
        const long total = m.sum_cell(static_cast<std::uint32_t>(sij), keys[k].cell);
        if (total < 0) continue;
        Echelon& e = blocks[static_cast<std::size_t>(total)];
        if (e.full()) continue;
        row.clear();
        const int x = static_cast<int>(i), y = static_cast<int>(j), z = static_cast<int>(k);
        term(x, y, z);
        term(y, z, x);
        term(z, x, y);
        e.insert(row);
      }
    }
  }

  H2Run run;
  const long zero_cell = m.cell_of(GroupElem::zero(ctx.rank()));
  for (std::size_t s = 0; s < m.cells(); ++s) {
    run.cocycle_dim += unknowns[s].size() - blocks[s].rank();
    // Coboundary of the dual functional of each key of degree s.
    std::map<int, std::map<std::uint32_t, Rational>> cob;
    for (std::uint32_t c = 0; c < unknowns[s].size(); ++c) {
      const Model::Term t = m.bracket(unknowns[s][c].first, unknowns[s][c].second);
      if (t.key >= 0) cob[t.key][c] += t.coef;
    }
    Echelon ce(unknowns[s].size());
    for (const auto& [key, r] : cob) {
      SparseRow pr = primitive_row(r);
      if (static_cast<long>(s) == zero_cell) run.zero_coboundaries.push_back(pr);
      ce.insert(std::move(pr));
    }
    run.coboundary_dim += ce.rank();
  }
  run.zero_unknowns = std::move(unknowns[static_cast<std::size_t>(zero_cell)]);
  run.zero_block = std::make_unique<Echelon>(std::move(blocks[static_cast<std::size_t>(zero_cell)]));
  return run;
}

struct DerRun {
  std::size_t dim = 0;
  std::size_t columns = 0;
  std::vector<long> position;  // window cell -> admissible index, -1 otherwise
  std::unique_ptr<Echelon> system;
};

DerRun run_der(const AlgebraContext& ctx, const GroupElem& d, int radius, const std::vector<Rational>& assignment) {
  const Model m(ctx, radius, assignment);
  DerRun run;
  run.position.assign(m.cells(), -1);
  long count = 0;
  for (std::uint32_t c = 0; c < m.cells(); ++c)
    if (m.cell_of(m.degree(c) + d) >= 0) run.position[c] = count++;
  run.columns = 4 * static_cast<std::size_t>(count);
  run.system = std::make_unique<Echelon>(run.columns);

  auto col = [&](std::uint32_t cell, std::uint8_t from, std::uint8_t to) {
    return static_cast<std::uint32_t>(4 * run.position[cell] + 2 * from + to);
  };
  const auto& keys = m.keys();
  std::map<std::uint32_t, Rational> rows[2];  // target L, target I

  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto& kx = keys[i];
    if (run.position[kx.cell] < 0) continue;
    const auto shifted_x = static_cast<std::uint32_t>(m.cell_of(m.degree(kx.cell) + d));
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      const auto& ky = keys[j];
      if (run.position[ky.cell] < 0) continue;
      const long s = m.sum_cell(kx.cell, ky.cell);
      if (s < 0 || run.position[static_cast<std::size_t>(s)] < 0) continue;
      const auto shifted_y = static_cast<std::uint32_t>(m.cell_of(m.degree(ky.cell) + d));
      rows[0].clear();
      rows[1].clear();
      // D[x, y]
      const Model::Term t = m.bracket(static_cast<int>(i), static_cast<int>(j));
      if (t.key >= 0) {
        const auto kind = keys[static_cast<std::size_t>(t.key)].kind;
        for (std::uint8_t to : {Model::kL, Model::kI}) rows[to][col(static_cast<std::uint32_t>(s), kind, to)] += t.coef;
      }
      // - [D x, y] - [x, D y]
      for (std::uint8_t to : {Model::kL, Model::kI}) {
        const Model::Term a = m.bracket(m.key_of(to, shifted_x), static_cast<int>(j));
        if (a.key >= 0) rows[keys[static_cast<std::size_t>(a.key)].kind][col(kx.cell, kx.kind, to)] -= a.coef;
        const Model::Term b = m.bracket(static_cast<int>(i), m.key_of(to, shifted_y));
        if (b.key >= 0) rows[keys[static_cast<std::size_t>(b.key)].kind][col(ky.cell, ky.kind, to)] -= b.coef;
      }
      run.system->insert(rows[0]);
      run.system->insert(rows[1]);
    }
  }
  run.dim = run.columns - run.system->rank();
  return run;
}

template <typename Solve>
DimReport collect(const AlgebraContext& ctx, int radius, const std::vector<std::uint64_t>& seeds, Solve solve,
                  const char* what) {
  if (radius < 3) throw Error(ErrorKind::InvalidParams, "oracle radius must be >= 3");
  if (seeds.empty()) throw Error(ErrorKind::InvalidParams, "at least one seed is required");
  DimReport report;
  report.radius = radius;
  report.seeds = seeds;
  const std::vector<std::uint64_t> used = ctx.rank() == 1 ? std::vector<std::uint64_t>{seeds.front()} : seeds;

  std::vector<std::future<DimRun>> jobs;
  for (int r : {radius, radius + 1}) {
    for (std::uint64_t seed : used) {
      jobs.push_back(std::async(std::launch::async, [&ctx, r, seed, radius, &solve] {
        DimRun run = solve(r, specialization(ctx, seed, radius + 1));
        run.radius = r;
        run.seed = seed;
        return run;
      }));
    }
  }
  for (auto& j : jobs) report.runs.push_back(j.get());

  const DimRun& first = report.runs.front();
  report.cocycle_dim = first.cocycle_dim;
  report.coboundary_dim = first.coboundary_dim;
  report.quotient_dim = first.quotient_dim;
  report.stable = true;
  for (const auto& r : report.runs) report.stable = report.stable && r.quotient_dim == first.quotient_dim;
  if (!report.stable) {
    std::string msg = std::string(what) + " differs across runs:";
    for (const auto& r : report.runs)
      msg += " (R=" + std::to_string(r.radius) + ", seed=" + std::to_string(r.seed) + ") -> " + std::to_string(r.quotient_dim);
    throw Error(ErrorKind::UnstableTruncation, msg);
  }
  return report;
}

std::vector<Cocycle> builtins_for(const AlgebraContext& ctx) {
  std::vector<Cocycle> out;
  if (ctx.variant() == Variant::DerivedPrime) {
    for (auto& [k, c] : extension_cocycles(ctx)) out.push_back(c);
  } else if (!delta_lambda(ctx, -1)) {
    for (auto& [k, c] : extension_cocycles(ctx.with_variant(Variant::Extended))) out.push_back(c);
  }
  return out;
}

std::vector<DerivationDescriptor> families_for(const AlgebraContext& ctx, const GroupElem& d) {
  using D = DerivationDescriptor;
  std::vector<D> out;
  if (!d.is_zero()) return {D::ad_L(d), D::ad_I(d)};
  const std::size_t n = ctx.rank();
  out.push_back(D::simple(D::Kind::Phi));
  out.push_back(D::simple(D::Kind::Psi));
  if (delta_lambda(ctx, 0)) out.push_back(D::simple(D::Kind::Sigma0));
  if (delta_lambda(ctx, -1)) out.push_back(D::simple(D::Kind::SigmaM1));
  if (delta_lambda(ctx, -2)) out.push_back(D::simple(D::Kind::SigmaM2));
  for (std::size_t i = 0; i < n; ++i) {
    AddHom A{std::vector<Scalar>(n)};
    A.values[i] = Scalar(1L);
    out.push_back(D::xi(A));
    if (delta_lambda(ctx, 1)) out.push_back(D::eta1(A));
  }
  return out;
}

void require_variant(const AlgebraContext& ctx, bool allow_prime) {
  if (ctx.variant() == Variant::Extended || (!allow_prime && ctx.variant() == Variant::DerivedPrime))
    throw Error(ErrorKind::VariantMismatch, std::string("the oracle works on ") + (allow_prime ? "g or g'" : "g"));
}

}  // namespace

std::vector<Rational> specialization(const AlgebraContext& ctx, std::uint64_t seed, int radius) {
  const std::size_t n = ctx.rank();
  if (n == 1) return {};
  std::mt19937_64 gen(seed);
  auto draw = [&gen] {
    const long num = static_cast<long>(gen() % 20001) - 10000;
    const long den = static_cast<long>(gen() % 10000) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> a;
    for (std::size_t i = 1; i < n; ++i) a.push_back(draw());
    if (!degenerate(ctx, radius, a)) return a;
  }
  throw Error(ErrorKind::InvalidParams, "no admissible specialization for seed " + std::to_string(seed));
}

DimReport h2_dimension(const AlgebraContext& ctx, int radius, const std::vector<std::uint64_t>& seeds) {
  require_variant(ctx, true);
  return collect(
      ctx, radius, seeds,
      [&ctx](int r, const std::vector<Rational>& assignment) {
        const H2Run h = run_h2(ctx, r, assignment);
        DimRun run;
        run.cocycle_dim = h.cocycle_dim;
        run.coboundary_dim = h.coboundary_dim;
        run.quotient_dim = h.cocycle_dim - h.coboundary_dim;
        return run;
      },
      "H^2 dimension");
}

DimReport der_dimension(const AlgebraContext& ctx, const GroupElem& degree, int radius,
                        const std::vector<std::uint64_t>& seeds) {
  require_variant(ctx, false);
  if (degree.rank() != ctx.rank()) throw Error(ErrorKind::RankMismatch, "degree " + to_string(degree) + " in a rank-" + std::to_string(ctx.rank()) + " algebra");
  return collect(
      ctx, radius, seeds,
      [&ctx, &degree](int r, const std::vector<Rational>& assignment) {
        const DerRun d = run_der(ctx, degree, r, assignment);
        DimRun run;
        run.cocycle_dim = d.dim;
        run.quotient_dim = d.dim;
        return run;
      },
      "derivation dimension");
}

CheckReport h2_builtin_check(const AlgebraContext& ctx, int radius, std::uint64_t seed) {
  require_variant(ctx, true);
  CheckReport report;
  report.check = "h2-builtins";
  const auto assignment = specialization(ctx, seed, radius);
  const H2Run run = run_h2(ctx, radius, assignment);
  const Model m(ctx, radius, assignment);
  const auto builtins = builtins_for(ctx);

  Echelon span(run.zero_unknowns.size());
  for (const auto& r : run.zero_coboundaries) span.insert(r);
  const std::size_t cob_rank = span.rank();

  for (std::size_t b = 0; b < builtins.size(); ++b) {
    ++report.cases;
    std::vector<Rational> v(run.zero_unknowns.size());
    std::map<std::uint32_t, Rational> row;
    for (std::size_t c = 0; c < v.size(); ++c) {
      const auto [x, y] = run.zero_unknowns[c];
      v[c] = eval_cocycle(ctx, builtins[b], m.basis_key(x), m.basis_key(y)).specialize(assignment);
      if (v[c] != 0) row[static_cast<std::uint32_t>(c)] = v[c];
    }
    const std::string name = std::visit(
        [](const auto& f) -> std::string {
          if constexpr (std::is_same_v<std::decay_t<decltype(f)>, Cocycle::Builtin>) return to_string(f.kind, f.index);
          return "cocycle";
        },
        builtins[b].form());
    if (!run.zero_block->annihilates(v)) report.fail(name + " does not solve the window cocycle system");
    if (!span.insert(row)) report.fail(name + " is a coboundary modulo the other builtins");
  }
  ++report.cases;
  if (span.rank() != cob_rank + builtins.size())
    report.fail("builtins are not independent modulo coboundaries");
  return report;
}

CheckReport der_family_check(const AlgebraContext& ctx, const GroupElem& degree, int radius, std::uint64_t seed) {
  require_variant(ctx, false);
  CheckReport report;
  report.check = "derivation-families";
  const auto assignment = specialization(ctx, seed, radius);
  const DerRun run = run_der(ctx, degree, radius, assignment);
  const Model m(ctx, radius, assignment);

  Echelon span(run.columns);
  for (const auto& d : families_for(ctx, degree)) {
    ++report.cases;
    std::vector<Rational> v(run.columns);
    std::map<std::uint32_t, Rational> row;
    for (std::uint32_t cell = 0; cell < m.cells(); ++cell) {
      if (run.position[cell] < 0) continue;
      const GroupElem& a = m.degree(cell);
      const GroupElem ad = a + degree;
      for (std::uint8_t from : {Model::kL, Model::kI}) {
        const BasisKey x = from == Model::kL ? BasisKey::L(a) : BasisKey::I(a);
        const Element image = der_apply(ctx, d, x);
        for (std::uint8_t to : {Model::kL, Model::kI}) {
          const BasisKey y = to == Model::kL ? BasisKey::L(ad) : BasisKey::I(ad);
          const auto c = static_cast<std::uint32_t>(4 * run.position[cell] + 2 * from + to);
          v[c] = image.coefficient(y).specialize(assignment);
          if (v[c] != 0) row[c] = v[c];
        }
      }
    }
    if (!run.system->annihilates(v)) report.fail(to_string(d) + " does not solve the window Leibniz system");
    span.insert(row);
  }
  ++report.cases;
  if (span.rank() != run.dim)
    report.fail("classified families span " + std::to_string(span.rank()) + " dimensions, solver found " + std::to_string(run.dim));
  return report;
}

}  // namespace hv
