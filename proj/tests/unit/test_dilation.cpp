#include <doctest.h>

#include "helpers.hpp"
#include "iipm/dilation.hpp"
#include "iipm/explorer.hpp"

using namespace iipm;
using namespace iipm::testing;

namespace {

Space hyperbolic_plane() {
  const Ring r = gf2();
  MatE g(2, 2);
  g << r.zero(), r.one(), r.one(), r.zero();
  return make_space(r, 2, g);
}

Operator from_rows(const Space& s, std::initializer_list<uint64_t> masks) {
  MatE m(s.dim(), s.dim());
  auto it = masks.begin();
  for (Index i = 0; i < s.dim(); ++i)
    for (Index j = 0; j < s.dim(); ++j) m(i, j) = s.ring().element(*it++);
  return make_operator(s, m);
}

/// The explicit inverse from the construction: row 0 = [T, I+T, 0..0],
/// row r = identity at column r+1 for 1 <= r <= N-1, row N = [I+T, T, 0..0].
Operator egervary_proof_inverse(const Operator& t, int n) {
  const Space& s = t.space;
  const Index d = s.dim();
  const MatE mix = identity_matrix(s.ring(), d) + t.mat;
  MatE v = zero_matrix(s.ring(), d * (n + 1), d * (n + 1));
  v.block(0, 0, d, d) = t.mat;
  v.block(0, d, d, d) = mix;
  for (int r = 1; r <= n - 1; ++r)
    v.block(r * d, (r + 1) * d, d, d) = identity_matrix(s.ring(), d);
  v.block(n * d, 0, d, d) = mix;
  v.block(n * d, d, d, d) = t.mat;
  return Operator{direct_sum(s, n + 1), std::move(v)};
}

std::vector<Space> sample_spaces() {
  return {standard_space(gf2(), 1), standard_space(gf2(), 2), standard_space(gf2(), 3),
          standard_space(gf4(), 1), standard_space(gf4(true), 2), hyperbolic_plane()};
}

}  // namespace

TEST_SUITE("dilation") {

TEST_CASE("halmos examples over GF(2) and GF(4)") {
  const Space line = standard_space(gf2(), 1);

  const Operator u0 = halmos_dilate(zero_op(line));
  CHECK(u0 == from_rows(direct_sum(line, 2), {0, 1, 1, 0}));
  CHECK(u0 * u0 == identity_op(u0.space));

  const Operator u1 = halmos_dilate(identity_op(line));
  CHECK(u1 == identity_op(u1.space));

  const Space line4 = standard_space(gf4(), 1);
  const Operator uw = halmos_dilate(from_rows(line4, {2}));
  CHECK(uw == from_rows(direct_sum(line4, 2), {2, 3, 3, 2}));
  CHECK(uw * adjoint(uw) == identity_op(uw.space));
}

TEST_CASE("halmos dilation is unitary and self-adjoint, its own inverse") {
  for (const Space& s : sample_spaces()) {
    for (const Operator& t : enumerate_self_adjoint(s)) {
      const Operator u = halmos_dilate(t);
      CHECK(classify(u).unitary);
      CHECK(adjoint(u) == u);  // the construction is its own adjoint and inverse
      CHECK(u * u == identity_op(u.space));
      CHECK(compress(u, 0, s.dim()) == t);
      CHECK(compress(adjoint(u), 0, s.dim()) == adjoint(t));
    }
  }
}

TEST_CASE("halmos requires a self-adjoint operator") {
  const Space s = standard_space(gf2(), 2);
  CHECK_THROWS_AS(halmos_dilate(from_rows(s, {0, 1, 0, 0})), NotSelfAdjoint);
}

TEST_CASE("egervary with N = 1 is the halmos dilation") {
  for (const Space& s : sample_spaces())
    for (const Operator& t : enumerate_self_adjoint(s))
      CHECK(egervary_dilate(t, 1) == halmos_dilate(t));
}

TEST_CASE("egervary examples") {
  const Space line = standard_space(gf2(), 1);
  const Operator one = identity_op(line);

  const Operator u = egervary_dilate(one, 2);
  CHECK(u == from_rows(direct_sum(line, 3), {1, 0, 0, 0, 0, 1, 0, 1, 0}));
  for (int k = 1; k <= 2; ++k)
    CHECK(compress(op_pow(u, unsigned(k)), 0, 1) == one);

  // the N+1 power fails for T = 0, N = 1: the dilation is the swap, swap^2 = I
  const Operator u0 = egervary_dilate(zero_op(line), 1);
  CHECK(compress(op_pow(u0, 2), 0, 1) == identity_op(line));
  CHECK(compress(op_pow(u0, 2), 0, 1) != zero_op(line));

  CHECK_THROWS_AS(egervary_dilate(one, 0), Error);
}

TEST_CASE("egervary powers compress exactly up to N, exhaustive") {
  for (const Space& s : {standard_space(gf2(), 1), standard_space(gf2(), 2), hyperbolic_plane()}) {
    for (const Operator& t : enumerate_self_adjoint(s)) {
      for (int n = 1; n <= 4; ++n) {
        const Operator u = egervary_dilate(t, n);
        CHECK(classify(u).unitary);
        const Operator uadj = adjoint(u);
        for (int k = 1; k <= n; ++k) {
          CHECK(compress(op_pow(u, unsigned(k)), 0, s.dim()) == op_pow(t, unsigned(k)));
          CHECK(compress(op_pow(uadj, unsigned(k)), 0, s.dim()) ==
                op_pow(adjoint(t), unsigned(k)));
        }
      }
    }
  }
}

TEST_CASE("the construction's explicit inverse is both inverse and adjoint") {
  Rng rng(2718);
  for (const Space& s : sample_spaces()) {
    const Operator t = random_self_adjoint(s, rng.next());
    for (int n = 1; n <= 4; ++n) {
      const Operator u = egervary_dilate(t, n);
      const Operator v = egervary_proof_inverse(t, n);
      CHECK(u * v == identity_op(u.space));
      CHECK(v * u == identity_op(u.space));
      CHECK(adjoint(u) == v);
    }
  }
}

TEST_CASE("verify_dilation reports for the finite kinds") {
  const Space line = standard_space(gf2(), 1);

  const DilationReport halmos_report = verify_dilation(identity_op(line), DilationKind::halmos);
  CHECK(halmos_report.unitary_ok);
  CHECK(halmos_report.ok());
  for (const auto& pc : halmos_report.power_checks) CHECK(pc.holds);

  VerifyOptions opt;
  opt.egervary_n = 1;
  const DilationReport egervary_report =
      verify_dilation(zero_op(line), DilationKind::egervary, opt);
  REQUIRE(egervary_report.power_checks.size() == 2);
  CHECK(egervary_report.power_checks[0].power == 1);
  CHECK(egervary_report.power_checks[0].holds);
  CHECK(egervary_report.power_checks[1].power == 2);
  CHECK_FALSE(egervary_report.power_checks[1].holds);  // the identity stops at N
  CHECK(egervary_report.ok());                         // ...which is not a defect
  CHECK(egervary_report.witness.has_value());
  CHECK_FALSE(egervary_report.power_holds(2));
}

TEST_CASE("verify_dilation reports for the lazy kinds") {
  const Space line4 = standard_space(gf4(), 1);
  VerifyOptions opt;
  opt.max_power = 8;
  const DilationReport sznagy_report =
      verify_dilation(from_rows(line4, {2}), DilationKind::sznagy, opt);
  CHECK(sznagy_report.unitary_ok);
  CHECK(sznagy_report.isometry_ok);
  CHECK(sznagy_report.ok());
  for (const auto& pc : sznagy_report.power_checks) CHECK(pc.holds);
  for (const auto& pc : sznagy_report.adjoint_power_checks) CHECK(pc.holds);

  // isometric with T = I: isometry holds, UU* does not
  const Space line = standard_space(gf2(), 1);
  const DilationReport iso_report =
      verify_dilation(identity_op(line), DilationKind::isometric, opt);
  CHECK(iso_report.isometry_ok);
  CHECK_FALSE(iso_report.unitary_ok);
  CHECK(iso_report.ok());
}

TEST_CASE("cross-oracle: three routes to T^n agree") {
  Rng rng(31415);
  for (const Space& s : sample_spaces()) {
    for (int rep = 0; rep < 4; ++rep) {
      const Operator t = random_self_adjoint(s, rng.next());
      const Operator u = egervary_dilate(t, 4);
      const LazyBandedOp lazy = sznagy_dilate(t);
      for (int n = 1; n <= 4; ++n) {
        const Operator direct = op_pow(t, unsigned(n));
        const Operator via_egervary = compress(op_pow(u, unsigned(n)), 0, s.dim());
        const Operator via_lazy = lazy_compress_power(lazy, n);
        CHECK(direct == via_egervary);
        CHECK(direct == via_lazy);
        CHECK(via_egervary == via_lazy);
      }
    }
  }
}

}  // TEST_SUITE
