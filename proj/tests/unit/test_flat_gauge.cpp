#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "oracles/oracles.hpp"
#include "support/fixtures.hpp"

using namespace fixtures;

namespace {

  using Relation = std::function<bool(oracle::FiniteGroup const&, std::vector<int> const&)>;

  struct Space {
    char const* text;
    char const* name;
    int         gens;
    Relation    relation;
  };

  std::vector<Space> spaces() {
    auto const any = [](oracle::FiniteGroup const&, std::vector<int> const&) { return true; };
    return {
        {torus, "torus", 2,
         [](auto const& g, auto const& t) { return g.mul[t[0]][t[1]] == g.mul[t[1]][t[0]]; }},
        {klein, "klein", 2,
         [](auto const& g, auto const& t) { return g.mul[g.mul[t[0]][t[1]]][t[0]] == t[1]; }},
        {circle, "circle", 1, any},
        {projective_plane, "rp2", 1, [](auto const& g, auto const& t) { return g.mul[t[0]][t[0]] == 0; }},
        {theta, "theta", 2, any},
        {disk, "disk", 1, [](auto const&, auto const& t) { return t[0] == 0; }},
    };
  }

  gf::Word join(gf::Word a, gf::Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

}  // namespace

TEST_CASE("hom and class counts agree with the oracle") {
  std::vector<std::pair<gf::Group, oracle::FiniteGroup>> groups{
      {z(2), oracle::cyclic(2)}, {z(3), oracle::cyclic(3)}, {s3(), oracle::symmetric(3)}};
  for (auto const& s : spaces()) {
    auto const sp = gf::presentation_from_complex(complex(s.text, s.name), 0);
    REQUIRE(sp.presentation.generators.size() == std::size_t(s.gens));
    for (auto const& [g, ref] : groups) {
      INFO(s.name << " into a group of order " << g.order());
      auto const homs = gf::enumerate_homs(sp.presentation, g);
      auto const sols = oracle::solutions(ref, s.gens, [&](auto const& t) { return s.relation(ref, t); });
      CHECK(homs.size() == sols.size());
      CHECK(gf::moduli_classes(homs, g).size() == oracle::burnside(ref, sols));
    }
  }
}

TEST_CASE("frozen moduli into S3") {
  // Frozen from the oracle above.
  std::vector<std::tuple<char const*, std::size_t, std::size_t>> expected{
      {torus, 18, 8}, {klein, 18, 6}, {circle, 6, 3},
      {projective_plane, 4, 2}, {theta, 36, 11}, {disk, 1, 1}};
  for (auto const& [text, homs, classes] : expected) {
    auto const sp = gf::presentation_from_complex(complex(text, "x"), 0);
    auto const hs = gf::enumerate_homs(sp.presentation, s3());
    CHECK(hs.size() == homs);
    CHECK(gf::moduli_classes(hs, s3()).size() == classes);
  }
}

TEST_CASE("holonomy composes along paths") {
  std::mt19937_64 rng(5);
  auto const      g = s3();
  for (auto const& s : spaces()) {
    auto const cx = complex(s.text, s.name);
    auto const sp = gf::presentation_from_complex(cx, 0);
    for (auto const& h : gf::enumerate_homs(sp.presentation, g)) {
      auto const l = gf::labeling_from_hom(cx, sp, g, h);
      REQUIRE(gf::check_flat(cx, g, l).ok());
      for (int k = 0; k < 20; ++k) {
        gf::Obj const from = gf::Obj(k % cx.vertices.size());
        auto const    p2   = gf::random_path(cx, from, std::size_t(k % 5), rng);
        auto const    mid  = gf::path_endpoints(cx, p2, from).second;
        auto const    p1   = gf::random_path(cx, mid, std::size_t(k % 4), rng);
        auto const    both = join(p2, p1);
        CHECK(gf::evaluate(g, l.edge_labels, both)
              == g.mul(gf::evaluate(g, l.edge_labels, p1), gf::evaluate(g, l.edge_labels, p2)));
        CHECK(gf::evaluate(g, l.edge_labels, gf::free_reduce(both)) == gf::evaluate(g, l.edge_labels, both));
        CHECK(gf::evaluate(g, l.edge_labels, gf::invert(p2)) == g.inv(gf::evaluate(g, l.edge_labels, p2)));
      }
    }
  }
}

TEST_CASE("gauge transformations preserve flatness and moduli classes") {
  std::mt19937_64 rng(9);
  auto const      g = s3();
  for (auto const& s : spaces()) {
    auto const cx      = complex(s.text, s.name);
    auto const sp      = gf::presentation_from_complex(cx, 0);
    auto const homs    = gf::enumerate_homs(sp.presentation, g);
    auto const classes = gf::moduli_classes(homs, g);
    std::vector<std::size_t> class_of(homs.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t i : classes[c]) class_of[i] = c;
    }
    std::uniform_int_distribution<gf::Mor> element(0, gf::Mor(g.order() - 1));
    for (std::size_t i = 0; i < homs.size(); ++i) {
      auto const l = gf::labeling_from_hom(cx, sp, g, homs[i]);
      CHECK(gf::hom_from_labeling(cx, sp, g, l) == homs[i]);
      std::vector<gf::Mor> at(cx.vertices.size());
      for (auto& x : at) x = element(rng);
      auto const moved = gf::gauge_transform(cx, g, l, at);
      CHECK(gf::check_flat(cx, g, moved).ok());
      auto const h2 = gf::hom_from_labeling(cx, sp, g, moved);
      for (std::size_t j = 0; j < h2.size(); ++j) CHECK(h2[j] == g.conj(at[0], homs[i][j]));
      auto const it = std::find(homs.begin(), homs.end(), h2);
      REQUIRE(it != homs.end());
      CHECK(class_of[std::size_t(it - homs.begin())] == class_of[i]);
    }
  }
}

TEST_CASE("a non-flat labeling is reported face by face") {
  auto const cx = complex(torus, "torus");
  auto const g  = s3();
  gf::Labeling l{{g.element("213"), g.element("132")}, 0};
  auto const r = gf::check_flat(cx, g, l);
  CHECK(r.count("flat") == 1);
  auto const sp = gf::presentation_from_complex(cx, 0);
  CHECK_THROWS_AS(gf::labeling_from_hom(cx, sp, g, {g.element("213"), g.element("132")}),
                  gf::DomainError);
}

TEST_CASE("malformed complexes and paths") {
  auto cx = complex(disk, "disk");
  CHECK_THROWS_AS(gf::path_endpoints(cx, {{0, false}, {0, false}}, 0), gf::DomainError);
  auto open = cx;
  open.faces.push_back({{0, false}});
  CHECK_THROWS_AS(gf::check_complex(open), gf::DomainError);
  auto dangling = cx;
  dangling.edges.push_back({"d", 0, 9});
  CHECK_THROWS_AS(gf::check_complex(dangling), gf::MalformedError);
  CHECK_THROWS_AS(gf::presentation_from_complex(cx, 7), gf::DomainError);
}

TEST_CASE("path groupoid of the theta graph") {
  auto const cx   = complex(theta, "theta");
  auto const sp   = gf::presentation_from_complex(cx, 0);
  auto const homs = gf::enumerate_homs(sp.presentation, z(2));
  auto const pg   = gf::path_groupoid(cx, 0, z(2), homs);
  CHECK(gf::validate(pg.groupoid).ok());
  // Generator tuples of all four homs into Z2 span Z2 × Z2.
  CHECK(pg.holonomies.order() == 4);
  CHECK(pg.groupoid.num_morphisms() == 2 * 2 * 4);
  auto const fs = gf::edge_path_functors(pg);
  CHECK(fs.size() == homs.size());
  for (auto const& rc : fs) CHECK(gf::verify_bundle(rc).ok());
}
