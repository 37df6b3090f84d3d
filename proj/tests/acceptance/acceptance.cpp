// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hv/algebra.hpp"
#include "hv/automorphisms.hpp"
#include "hv/cocycles.hpp"
#include "hv/derivations.hpp"
#include "hv/errors.hpp"
#include "hv/oracle.hpp"
#include "support.hpp"
#ifdef HV_WITH_CLI
#include "cli.hpp"
#endif

namespace {

using namespace hv;
using Clock = std::chrono::steady_clock;

// Pinned bounds.
constexpr double kJacobiSeconds = 60.0;
constexpr double kSolveSeconds = 120.0;
constexpr int kRandomTuples = 100;
constexpr int kRandomCoboundaries = 100;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string describe(const AlgebraContext& ctx) {
  return "rank " + std::to_string(ctx.rank()) + " lambda " + to_string(ctx.lambda()) + " " + to_string(ctx.variant());
}

class Criterion {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (failed_) {
      s += ", " + std::to_string(failed_) + " failed:";
      for (const auto& f : failures_) s += " [" + f + "]";
    }
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

void lie_algebra_validity(Criterion& c) {
  std::vector<AlgebraContext> ctxs;
  for (const Rational l : {Rational(0), Rational(1), Rational(-1), Rational(-2), Rational(-1, 2), Rational(5, 7)})
    ctxs.emplace_back(1, l);
  for (const Rational l : {Rational(0), Rational(1), Rational(-2), Rational(5, 7)}) ctxs.emplace_back(1, l, Variant::Extended);
  ctxs.emplace_back(1, -1, Variant::DerivedPrime);
  ctxs.emplace_back(2, 0, Variant::Extended);
  ctxs.emplace_back(2, -2, Variant::Extended);
  for (const auto& ctx : ctxs) {
    const auto t0 = Clock::now();
    const CheckReport r = jacobi_check(ctx, ctx.rank() == 1 ? 4 : 3);
    const double s = seconds_since(t0);
    c.require(r.passed(), "jacobi " + describe(ctx) + ": " + std::to_string(r.failure_count) + " violations");
    c.require(s < kJacobiSeconds, "jacobi " + describe(ctx) + " took " + std::to_string(s) + " s");
  }
}

void cocycle_suite(Criterion& c) {
  for (const auto& ext : {AlgebraContext(1, Rational(5, 7), Variant::Extended), AlgebraContext(1, 0, Variant::Extended),
                          AlgebraContext(1, 1, Variant::Extended), AlgebraContext(1, -2, Variant::Extended),
                          AlgebraContext(1, -1, Variant::DerivedPrime), AlgebraContext(2, 0, Variant::Extended),
                          AlgebraContext(2, -2, Variant::Extended)}) {
    const AlgebraContext base = ext.variant() == Variant::Extended ? ext.with_variant(Variant::Plain) : ext;
    for (const auto& [key, form] : extension_cocycles(ext))
      c.require(is_cocycle(base, form, ext.rank() == 1 ? 5 : 3).passed(), "builtin for " + to_string(key) + " " + describe(base));
  }

  test::Rng rng(2024);
  const std::vector<AlgebraContext> ctxs{AlgebraContext(1, 0), AlgebraContext(1, 1), AlgebraContext(1, -2),
                                         AlgebraContext(1, Rational(5, 7)), AlgebraContext(1, -1, Variant::DerivedPrime)};
  constexpr int radius = 3;
  for (int i = 0; i < kRandomCoboundaries; ++i) {
    const AlgebraContext& ctx = ctxs[static_cast<std::size_t>(i) % ctxs.size()];
    const Cocycle cob = coboundary(test::random_functional(rng, ctx, radius));
    c.require(is_cocycle(ctx, cob, radius).passed(), "random coboundary " + describe(ctx));
    const NormalizedCocycle nc = normalize_cocycle(ctx, cob, radius);
    bool zero = true;
    const auto keys = window_keys(ctx, radius);
    for (const auto& x : keys)
      for (const auto& y : keys) zero = zero && eval_cocycle(ctx, nc.cocycle, x, y).is_zero();
    c.require(zero, "normalized coboundary nonzero " + describe(ctx));
  }
}

void h2_dimensions(Criterion& c) {
  const std::vector<std::pair<AlgebraContext, std::size_t>> cases{
      {AlgebraContext(1, Rational(5, 7)), 1}, {AlgebraContext(1, 0), 3}, {AlgebraContext(1, 1), 2},
      {AlgebraContext(1, -2), 1},           {AlgebraContext(2, -2), 2}, {AlgebraContext(2, 0), 3},
      {AlgebraContext(1, -1, Variant::DerivedPrime), 4}};
  for (const auto& [ctx, want] : cases) {
    const auto t0 = Clock::now();
    try {
      const DimReport r = h2_dimension(ctx, 4, default_seeds());
      const double s = seconds_since(t0);
      c.require(r.quotient_dim == want,
                "H2 " + describe(ctx) + " = " + std::to_string(r.quotient_dim) + ", expected " + std::to_string(want));
      c.require(r.stable && r.seeds.size() >= 3, "H2 " + describe(ctx) + " not stable over R=4,5 and 3 seeds");
      c.require(s < kSolveSeconds, "H2 " + describe(ctx) + " took " + std::to_string(s) + " s");
      c.require(h2_builtin_check(ctx, 4, default_seeds().front()).passed(), "builtin membership " + describe(ctx));
    } catch (const Error& err) {
      c.require(false, "H2 " + describe(ctx) + ": " + err.what());
    }
  }
}

void derivation_suite(Criterion& c) {
  test::Rng rng(77);
  for (const Rational lambda : {Rational(0), Rational(1), Rational(-1), Rational(-2), Rational(5, 7)}) {
    for (const std::size_t rank : {std::size_t{1}, std::size_t{2}}) {
      for (const Variant v : {Variant::Plain, Variant::Extended}) {
        if (v == Variant::Extended && lambda == -1) continue;
        const AlgebraContext ctx(rank, lambda, v);
        for (const auto& d : test::gated_descriptors(rng, ctx))
          c.require(leibniz_check(ctx, d, rank == 1 ? 4 : 2).passed(), "leibniz " + to_string(d) + " " + describe(ctx));
      }
    }
  }
  for (const Rational lambda : {Rational(0), Rational(1), Rational(3), Rational(-2)})
    c.require(inner_derivation_identity_check(AlgebraContext(1, lambda), 4).passed(),
              "inner identities lambda " + to_string(lambda));
}

void derivation_dimensions(Criterion& c) {
  struct Case {
    AlgebraContext ctx;
    GroupElem degree;
    std::size_t want;
  };
  std::vector<Case> cases{{AlgebraContext(1, Rational(5, 7)), GroupElem{0}, 3}, {AlgebraContext(1, 3), GroupElem{0}, 3},
                          {AlgebraContext(1, 0), GroupElem{0}, 4},             {AlgebraContext(1, -1), GroupElem{0}, 4},
                          {AlgebraContext(1, -2), GroupElem{0}, 4},            {AlgebraContext(1, 1), GroupElem{0}, 3},
                          {AlgebraContext(2, 0), GroupElem{0, 0}, 5},          {AlgebraContext(2, 0), GroupElem{1, -1}, 2},
                          {AlgebraContext(2, -2), GroupElem{0, 1}, 2}};
  for (const Rational lambda : {Rational(0), Rational(1), Rational(-1), Rational(-2), Rational(5, 7)})
    for (const int d : {1, 2, -3}) cases.push_back({AlgebraContext(1, lambda), GroupElem{d}, 2});
  for (const auto& [ctx, degree, want] : cases) {
    const std::string what = "Der " + describe(ctx) + " degree " + to_string(degree);
    try {
      const DimReport r = der_dimension(ctx, degree, 4, default_seeds());
      c.require(r.quotient_dim == want, what + " = " + std::to_string(r.quotient_dim) + ", expected " + std::to_string(want));
      c.require(r.stable, what + " not stable over R=4,5");
      c.require(der_family_check(ctx, degree, 4, default_seeds().front()).passed(), what + " family span");
    } catch (const Error& err) {
      c.require(false, what + ": " + err.what());
    }
  }
}

void automorphism_laws(Criterion& c) {
  test::Rng rng(4242);
  for (const Rational lambda : {Rational(0), Rational(1), Rational(-1), Rational(-2), Rational(5, 7)}) {
    const AlgebraContext ctx(1, lambda);
    const auto keys = window_keys(ctx, 3);
    const std::string where = " lambda " + to_string(lambda);
    for (int i = 0; i < kRandomTuples; ++i) {
      const AutParams outer = test::random_aut_params(rng, ctx);
      const AutParams inner = test::random_aut_params(rng, ctx);
      const AutParams both = aut_compose(outer, inner);
      bool same = true;
      for (const auto& k : keys) same = same && aut_apply(ctx, both, k) == aut_apply(ctx, outer, aut_apply(ctx, inner, k));
      c.require(same, "formula vs pointwise composition" + where);
      c.require(aut_compose(outer, aut_inverse(outer)) == AutParams::identity(1), "inverse" + where);
      c.require(aut_factor(outer).recompose() == outer, "factor" + where);
      c.require(hom_check(ctx, [&](const BasisKey& k) { return aut_apply(ctx, outer, k); }, 3).passed(), "hom aut" + where);
      const InnerAut u = test::random_inner(rng, ctx, 3);
      c.require(hom_check(ctx, [&](const BasisKey& k) { return inner_apply(ctx, u, Element(k)); }, 3).passed(),
                "hom inner" + where);
    }
  }
}

void lift_correctness(Criterion& c) {
  test::Rng rng(99);
  for (const Rational lambda : {Rational(0), Rational(1), Rational(-2), Rational(5, 7)}) {
    const AlgebraContext ext(1, lambda, Variant::Extended);
    const std::string where = " lambda " + to_string(lambda);
    std::vector<BasisKey> probe{BasisKey::L(GroupElem{0}), BasisKey::I(GroupElem{0})};
    for (const auto& k : central_keys(ext)) probe.push_back(k);
    for (int i = 0; i < kRandomTuples; ++i) {
      const AutParams p = test::random_aut_params(rng, ext, true);
      c.require(hom_check(ext, [&](const BasisKey& k) { return aut_lift_apply(ext, p, k); }, 3).passed(), "lift hom" + where);
      for (const auto& k : probe)
        c.require(aut_lift_apply(ext, p, k) == test::lift_image_from_brackets(ext, p, k), "lift image " + to_string(k) + where);
    }
  }
  for (const Rational lambda : {Rational(1), Rational(-2), Rational(5, 7)}) {
    const AlgebraContext ext(1, lambda, Variant::Extended);
    for (const auto& d : test::gated_descriptors(rng, ext))
      c.require(leibniz_check(ext, d, 4).passed(), "leibniz " + to_string(d) + " lambda " + to_string(lambda));
  }
}

#ifdef HV_WITH_CLI
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}
#endif

void cli_golden(Criterion& c) {
#ifdef HV_WITH_CLI
  const std::string dir = HV_GOLDEN_DIR;
  const std::vector<std::pair<std::vector<std::string>, std::string>> golden{
      {{"bracket", "--rank", "1", "--lambda", "0", "--variant", "extended", "L[1]", "I[-1]"}, "bracket_extended_lambda0.json"},
      {{"h2-dim", "--rank", "1", "--lambda", "0", "--radius", "5"}, "h2_dim_rank1_lambda0.json"},
      {{"jacobi", "--rank", "1", "--lambda", "-1", "--variant", "derived-prime", "--radius", "3"}, "jacobi_derived_prime.json"}};
  for (const auto& [args, file] : golden) {
    std::string out;
    c.require(run_cli(args, &out) == cli::kExitPass, file + " exit code");
    c.require(out == read_file(dir + "/" + file), file + " differs");
  }
  c.require(run_cli({"bracket", "--rank", "1", "--lambda", "0", "L[1", "I[2]"}) == cli::kExitUsage, "syntax error exit");
  c.require(run_cli({"bracket", "--rank", "1", "--lambda", "1", "--variant", "extended", "CI", "L[1]"}) == cli::kExitUsage,
            "inactive key exit");
  c.require(run_cli({"bracket", "--bogus"}) == cli::kExitUsage, "unknown option exit");
  c.require(run_cli({"hom-check", "--rank", "1", "--lambda", "0", "--radius", "2", "--der", "phi"}) == cli::kExitCheckFailed,
            "failed check exit");
#else
  c.require(false, "the CLI was not built");
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"Lie-algebra validity (Jacobi, zero violations, < 60 s per run)", lie_algebra_validity},
      {"cocycle suite (builtins, 100 coboundaries, normalization)", cocycle_suite},
      {"H^2 dimensions (exact, stable over R=4,5 and 3 seeds, < 120 s per solve)", h2_dimensions},
      {"derivation suite (Leibniz for gated families, inner identities)", derivation_suite},
      {"derivation dimensions (exact, stable over R=4,5)", derivation_dimensions},
      {"automorphism group laws (100 tuples per lambda, exact)", automorphism_laws},
      {"lift correctness (100 tuples per lambda, exact central images)", lift_correctness},
      {"CLI golden files and exit codes (byte-identical)", cli_golden},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    std::printf("criterion %zu: %s  %s  (%s, %.1f s)\n", i + 1, c.passed() ? "PASS" : "FAIL", criteria[i].first,
                c.summary().c_str(), s);
    std::fflush(stdout);
    failed += !c.passed();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
