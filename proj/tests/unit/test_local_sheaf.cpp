#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "support/fixtures.hpp"

using namespace fixtures;

namespace {

  gf::Covering chain() { return gf::restriction_covering(pair(4), {0, 1, 2, 3}, {{0, 1, 2}, {1, 2, 3}}); }

  gf::Covering trivial(gf::Groupoid const& g, std::vector<gf::Obj> const& u) {
    return gf::restriction_covering(g, u, {u});
  }

}  // namespace

TEST_CASE("gluing restrictions recovers the functor") {
  std::mt19937_64 rng(3);
  std::vector<gf::Groupoid> cods{z(2).groupoid(), s3().groupoid(), gf::product(pair(2), z(2).groupoid())};
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t const n = 2 + std::size_t(trial % 4);
    auto const        parent = pair(n);
    std::vector<gf::Obj> all(n);
    std::iota(all.begin(), all.end(), 0);
    // consecutive windows of width two always generate
    std::vector<std::vector<gf::Obj>> parts;
    for (gf::Obj x = 0; x + 1 < n; ++x) parts.push_back({x, gf::Obj(x + 1)});
    auto const c   = gf::restriction_covering(parent, all, parts);
    REQUIRE(gf::generates(parent, c));
    auto const e   = gf::embed(parent, c);
    auto const fs  = gf::enumerate_functors(e.target.groupoid, cods[std::size_t(trial) % cods.size()]).functors;
    auto const& w  = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
    auto const locals = gf::restrict_to_parts(e, w);
    CHECK(gf::check_compatible(parent, e, locals).ok());
    CHECK(gf::glue(parent, c, locals) == w);
  }
}

TEST_CASE("incompatible local functors are refused with a witness") {
  auto const c      = chain();
  auto const e      = gf::embed(pair(4), c);
  auto const fs     = gf::enumerate_functors(e.target.groupoid, s3().groupoid()).functors;
  auto       locals = gf::restrict_to_parts(e, fs.front());
  auto const good   = locals;
  gf::Report r;
  for (auto const& w : fs) {
    locals[1] = gf::restrict_to_parts(e, w)[1];
    r         = gf::check_compatible(pair(4), e, locals);
    if (!r.ok()) break;
  }
  REQUIRE_FALSE(r.ok());
  CHECK(r.count("compatible") > 0);
  try {
    (void)gf::glue(pair(4), c, locals);
    FAIL("glue accepted incompatible data");
  } catch (gf::DomainError const& err) {
    CHECK_FALSE(err.witness().empty());
  }
  locals = good;
  locals.pop_back();
  CHECK_THROWS_AS(gf::check_compatible(pair(4), e, locals), gf::DomainError);
}

TEST_CASE("frozen factorization over the chain covering") {
  auto const g = pair(4);
  auto const c = chain();
  gf::Mor const alpha = g.hom(0, 3).front();
  auto const f = gf::factorize(g, c, alpha);
  REQUIRE(f.status == gf::FactorStatus::ok);
  // BFS reaches 3 through 1: (1,0) in the first part, then (3,1) in the second.
  CHECK(f.factors == std::vector<gf::Mor>{g.hom(0, 1).front(), g.hom(1, 3).front()});
  CHECK(f.part_of == std::vector<std::size_t>{0, 1});
  CHECK(gf::check_factorization(g, c, alpha, f).ok());

  auto const r = gf::factorize(g, c, alpha, 100000, true);
  REQUIRE(r.status == gf::FactorStatus::ok);
  CHECK(gf::check_factorization(g, c, alpha, r).ok());

  for (gf::Mor m : c.target.morphisms) {
    CHECK(gf::check_factorization(g, c, m, gf::factorize(g, c, m)).ok());
  }
}

TEST_CASE("factorization failures are distinguished") {
  auto const g = pair(3);
  auto const split = gf::restriction_covering(g, {0, 1, 2}, {{0}, {1, 2}});
  CHECK(gf::factorize(g, split, g.hom(0, 2).front()).status == gf::FactorStatus::no_factorization);
  CHECK_FALSE(gf::generates(g, split));
  auto const e  = gf::embed(g, split);
  auto const fs = gf::enumerate_functors(e.target.groupoid, z(2).groupoid()).functors;
  CHECK_THROWS_AS(gf::glue(g, split, gf::restrict_to_parts(e, fs.front())), gf::DomainError);

  auto const wide = gf::restriction_covering(pair(5), {0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(gf::factorize(pair(5), wide, pair(5).hom(0, 4).front(), 0).status
        == gf::FactorStatus::budget_exhausted);
}

TEST_CASE("covering validation") {
  auto const g = pair(3);
  CHECK_THROWS_AS(gf::check_covering(g, gf::restriction_covering(g, {0, 1}, {{0}})), gf::DomainError);
  CHECK_THROWS_AS(gf::check_covering(g, gf::restriction_covering(g, {0, 1}, {{0, 2}, {1}})), gf::DomainError);
  CHECK_NOTHROW(gf::check_covering(g, gf::restriction_covering(g, {0, 1}, {{0}, {1}, {0, 1}})));
}

TEST_CASE("the chain covering fails the pull-back axiom") {
  auto const g = pair(4);
  auto const c = chain();
  auto const r = gf::check_covering_axioms(g, {c, trivial(g, {0, 1, 2, 3})});
  CHECK(r.count("pullback") > 0);
  CHECK(r.count("generate") == 0);
}

TEST_CASE("a site of trivial coverings satisfies every axiom") {
  auto const g = pair(3);
  std::vector<gf::Covering> site;
  for (std::size_t mask = 1; mask < 8; ++mask) {
    std::vector<gf::Obj> u;
    for (gf::Obj x = 0; x < 3; ++x) {
      if (mask >> x & 1) u.push_back(x);
    }
    site.push_back(trivial(g, u));
  }
  CHECK(gf::check_covering_axioms(g, site).ok());
}

TEST_CASE("local generation by candidate coverings") {
  auto const g = pair(3);
  std::vector<gf::LocalCandidates> good{
      {{0, 1, 2}, {{{0}, {1, 2}}, {{0, 1}, {1, 2}}}},
      {{0, 1}, {{{0, 1}}}},
  };
  CHECK(gf::is_locally_generated(g, good).ok());
  std::vector<gf::LocalCandidates> bad{{{0, 1, 2}, {{{0}, {1, 2}}, {{0}, {1}, {2}}}}};
  CHECK(gf::is_locally_generated(g, bad).count("locally-generated") == 1);
}
