#include <doctest.h>

#include "bring/continuation.hpp"
#include "bring/curve.hpp"
#include "bring/real_paths.hpp"

using namespace bring;

TEST_CASE("fiber roots satisfy the affine equation") {
  for (cplx x : {cplx(2.0), cplx(0.3, 0.4), cplx(-1.2, 0.7)}) {
    const Fiber f = solve_fiber(x);
    REQUIRE(f.sheets.size() == 5);
    for (cplx y : f.sheets) CHECK(std::abs(affine::F(x, y)) < 1e-10 * (1.0 + std::norm(y) * std::norm(y)));
  }
}

TEST_CASE("ten finite nonzero branch points plus zero and infinity") {
  const auto bps = branch_points();
  int finite_nonzero = 0, inf = 0, zero = 0;
  for (const auto& b : bps) {
    if (b.infinite)
      ++inf;
    else if (std::abs(b.x) < 1e-12)
      ++zero;
    else
      ++finite_nonzero;
  }
  CHECK(finite_nonzero == 10);
  CHECK(zero == 1);
  CHECK(inf == 1);
}

TEST_CASE("contractible loop gives the identity permutation") {
  const cplx c(1.7, 1.7);
  REQUIRE(distance_to_critical(c) > 0.3);
  PlanePath loop{Segment::arc(c, 0.2, 0.0, 2.0 * kPi)};
  const Fiber start = solve_fiber(c + 0.2);
  const ContinuationResult r = continue_fiber(loop, start);
  REQUIRE(r.closed);
  CHECK(is_identity(r.permutation));
}

TEST_CASE("orientation reversal inverts the monodromy") {
  const cplx base(2.0);
  const cplx target = finite_branch_points().front();
  const PlanePath loop = branch_loop(base, target, default_clearance());
  const Fiber start = solve_fiber(base);
  const Permutation p = continue_fiber(loop, start).permutation;
  const Permutation q = continue_fiber(reversed(loop), start).permutation;
  CHECK(cycle_type(p) == "(2)");
  CHECK(is_identity(compose(p, q)));
  CHECK(q == inverse(p));
}

TEST_CASE("permutation helpers") {
  const Permutation p{1, 2, 0, 4, 3};
  CHECK(cycle_type(p) == "(2)(3)");
  CHECK(cycle_lengths(p) == std::vector<int>{2, 3});
  CHECK(is_identity(compose(p, inverse(p))));
}

TEST_CASE("monodromy at the default base") {
  const MonodromyReport m = monodromy(2.0);
  CHECK(m.data.size() == 12);
  CHECK(m.product_identity);
  CHECK(m.transitive);
  CHECK(m.ramification_total == 16);
  CHECK(m.genus == 4);
}

TEST_CASE("real locus") {
  const RealPathReport r = trace_real_paths();
  CHECK(r.oval_count == 1);
  CHECK(r.root_counts_ok);
  CHECK(r.ordering_violations == 0);
  CHECK(real_roots(0.5).size() == 3);
}
