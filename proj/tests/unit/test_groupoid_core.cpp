#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "oracles/oracles.hpp"
#include "support/fixtures.hpp"

using namespace fixtures;

namespace {

  gf::GroupoidTable corrupted(gf::Groupoid const& g, std::function<void(gf::GroupoidTable&)> edit) {
    auto t = g.table();
    edit(t);
    return t;
  }

}  // namespace

TEST_CASE("pair groupoid has one morphism per ordered pair") {
  auto const g = pair(3);
  CHECK(g.num_objects() == 3);
  CHECK(g.num_morphisms() == 9);
  for (gf::Obj x = 0; x < 3; ++x) {
    for (gf::Obj y = 0; y < 3; ++y) CHECK(g.hom(x, y).size() == 1);
  }
  gf::Mor const yx = g.hom(0, 1).front(), zy = g.hom(1, 2).front();
  CHECK(g.compose(zy, yx) == g.hom(0, 2).front());
  CHECK(g.inv(yx) == g.hom(1, 0).front());
  CHECK(g.is_unit(g.unit(2)));
}

TEST_CASE("constructions satisfy the axioms, checked by library and oracle") {
  std::vector<gf::Groupoid> gs{
      gf::unit_groupoid(names(4)),
      pair(5),
      s3().groupoid(),
      gf::direct_product(z(3), z(2)).groupoid(),
      gf::action_groupoid(s3(), names(3), natural_action(s3(), 3)),
      s3_sign_action(),
      gf::product(pair(2), z(3).groupoid()),
      gf::disjoint_union(pair(2), z(2).groupoid()),
      gf::pullback_groupoid(pair(3), names(4, "w"), {0, 1, 1, 2}).groupoid,
      gf::almost_product(rotation_action(4, 2), pair(2), {0, 1}).total,
  };
  for (auto const& g : gs) {
    CHECK(gf::validate(g).ok());
    CHECK(oracle::axiom_failures(g) == 0);
  }
}

TEST_CASE("frozen sizes of constructions") {
  // Values derived by hand: |G ⋉ X| = |G||X|, |P(n)| = n², pull-back of
  // P(3) along {0,1,1,2} is P(4) so 16 morphisms.
  CHECK(gf::action_groupoid(s3(), names(3), natural_action(s3(), 3)).num_morphisms() == 18);
  CHECK(gf::pullback_groupoid(pair(3), names(4, "w"), {0, 1, 1, 2}).groupoid.num_morphisms() == 16);
  CHECK(gf::fibered_product(pair(3), gf::unit_groupoid(names(3))).groupoid.num_morphisms() == 3);
  CHECK(gf::almost_product(pair(3), pair(2), {0, 0, 1}).total.num_morphisms() == 9);
}

TEST_CASE("validator names each violated axiom") {
  auto const g = pair(2);
  gf::Mor const a = g.hom(0, 1).front(), b = g.hom(1, 0).front();

  auto missing = corrupted(g, [&](auto& t) { t.at(b, a) = gf::npos; });
  CHECK(gf::validate(missing).count("definedness") == 1);

  auto extra = corrupted(g, [&](auto& t) { t.at(a, a) = a; });
  CHECK(gf::validate(extra).count("definedness") == 1);

  auto ends = corrupted(g, [&](auto& t) { t.at(b, a) = a; });
  CHECK(gf::validate(ends).count("endpoints") == 1);

  auto unit = corrupted(g, [&](auto& t) { t.unit[0] = a; });
  CHECK(gf::validate(unit).count("units") >= 1);

  auto inverse = corrupted(g, [&](auto& t) { t.inv[a] = a; });
  CHECK(gf::validate(inverse).count("inverses") == 1);

  CHECK_THROWS_AS(gf::Groupoid::from_table(missing), gf::DomainError);
}

TEST_CASE("associativity failures are found with a witness triple") {
  // Z4 with four products changed.
  auto t = z(4).groupoid().table();
  t.at(1, 2) = 0;  // 1+2 should be 3
  t.at(2, 1) = 0;
  t.at(1, 3) = 3;  // 1+3 should be 0
  t.at(3, 1) = 3;
  auto const r = gf::validate(t);
  REQUIRE(r.count("associativity") > 0);
  for (auto const& v : r.violations()) {
    if (v.rule == "associativity") CHECK(v.witness.size() == 3);
  }
  CHECK(oracle::axiom_failures(gf::Groupoid::trusted(t)) > 0);
}

TEST_CASE("dangling identifiers are structural errors") {
  auto t   = pair(2).table();
  t.src[0] = 7;
  CHECK_THROWS_AS(gf::validate(t), gf::MalformedError);
  CHECK_THROWS_AS(gf::Groupoid::trusted(t), gf::MalformedError);
}

TEST_CASE("large tables use sampled associativity") {
  auto const g = pair(9);  // 81 morphisms, beyond the default threshold
  CHECK(g.num_morphisms() > gf::ValidateOptions{}.exhaustive_threshold);
  CHECK(gf::validate(g).ok());
  auto t = g.table();
  t.at(g.hom(1, 2).front(), g.hom(0, 1).front()) = gf::npos;
  CHECK(gf::validate(t).count("definedness") == 1);
}

TEST_CASE("groups as one-object groupoids") {
  auto const g = s3();
  CHECK(g.order() == 6);
  CHECK(g.name(g.identity()) == "123");
  auto const a = g.element("213"), b = g.element("132");
  CHECK(g.mul(a, b) != g.mul(b, a));
  CHECK(g.mul(a, g.inv(a)) == g.identity());
  CHECK(g.conj(a, b) == g.mul(g.mul(a, b), g.inv(a)));
  CHECK_THROWS_AS(gf::Group(pair(2)), gf::DomainError);
}

TEST_CASE("orbits, isotropy and the fundamental subgroupoid") {
  auto const g = s3_sign_action();
  CHECK(gf::orbits(g).size() == 1);
  CHECK(gf::isotropy(g, 0).group.order() == 3);
  CHECK(gf::orbits(gf::unit_groupoid(names(3))).size() == 3);
  auto const f = gf::fundamental_subgroupoid(g);
  CHECK(f.morphisms.size() == 6);
  CHECK(gf::check_subgroupoid(g, f).ok());
  CHECK(gf::check_normal(g, f).ok());
}

TEST_CASE("relabelling preserves every invariant") {
  std::mt19937_64 rng(11);
  for (auto const& g : {s3_sign_action(), pair(3), rotation_action(4, 2)}) {
    std::vector<gf::Obj> op(g.num_objects());
    std::vector<gf::Mor> mp(g.num_morphisms());
    std::iota(op.begin(), op.end(), 0);
    std::iota(mp.begin(), mp.end(), 0);
    std::shuffle(op.begin(), op.end(), rng);
    std::shuffle(mp.begin(), mp.end(), rng);
    auto const h = gf::relabel(g, op, mp);
    CHECK(gf::validate(h).ok());
    CHECK(gf::orbits(h).size() == gf::orbits(g).size());
    CHECK(gf::isotropy(h, 0).group.order() == gf::isotropy(g, op[0]).group.order());
    CHECK(gf::enumerate_functors(h, z(2).groupoid()).functors.size()
          == gf::enumerate_functors(g, z(2).groupoid()).functors.size());
  }
}
