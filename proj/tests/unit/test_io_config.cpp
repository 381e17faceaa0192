#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"

using namespace fixtures;

namespace {

  std::filesystem::path data(std::string const& name) { return std::filesystem::path(GF_DATA_DIR) / name; }

  std::string written(gf::Groupoid const& g) {
    std::ostringstream os;
    gf::io::write_groupoid(os, g);
    return os.str();
  }

  template <typename F>
  gf::ParseError parse_error(F&& f) {
    try {
      f();
    } catch (gf::ParseError const& e) {
      return e;
    }
    FAIL("no parse error");
    throw;
  }

}  // namespace

TEST_CASE("groupoid tables round trip through text") {
  for (auto const& g : {pair(3), s3().groupoid(), s3_sign_action(), gf::product(pair(2), z(2).groupoid())}) {
    auto const text = written(g);
    auto const back = gf::Groupoid::from_table(gf::io::parse_groupoid_table(text, "mem"));
    CHECK(written(back) == text);
    CHECK(back.num_morphisms() == g.num_morphisms());
    CHECK(gf::validate(back).ok());
  }
}

TEST_CASE("parse errors carry file, line and column") {
  auto const e = parse_error([] { gf::io::load_groupoid(data("dangling.grpd")); });
  CHECK(e.line() == 6);
  CHECK(e.column() == 5);
  CHECK(std::string(e.what()).find("unknown morphism") != std::string::npos);

  auto const u = parse_error([] { gf::io::parse_document("objects:\nbogus: x\n", "f.grpd", {"objects"}); });
  CHECK(u.file() == "f.grpd");
  CHECK(u.line() == 2);
  CHECK(u.column() == 1);

  auto const before = parse_error([] { gf::io::parse_document("\n  x y\n", "f", {"objects"}); });
  CHECK(before.line() == 2);
  CHECK(before.column() == 3);

  CHECK_THROWS_AS(gf::io::read_file(data("missing.grpd")), gf::ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  auto const doc = gf::io::parse_document("# header\n\nobjects: a b # trailing\n  c\n", "f", {"objects"});
  REQUIRE(doc.sections.size() == 1);
  CHECK(doc.sections[0].header.tokens.size() == 2);
  CHECK(doc.sections[0].body.size() == 1);
  CHECK(doc.sections[0].body[0].tokens[0].column == 3);
}

TEST_CASE("a table with missing products loads but fails validation") {
  auto const t = gf::io::load_groupoid_table(data("bad.grpd"));
  CHECK(gf::validate(t).count("definedness") > 0);
  CHECK_THROWS_AS(gf::io::load_groupoid(data("bad.grpd")), gf::DomainError);
}

TEST_CASE("bundled data files load") {
  CHECK(gf::io::load_group(data("s3.grp")).order() == 6);
  CHECK(gf::io::load_groupoid(data("pair4.grpd")).num_morphisms() == 16);

  auto const flip = gf::io::load_functor(data("flip.func"));
  CHECK(gf::validate_functor(flip).ok());
  CHECK(flip.obj_map == std::vector<gf::Obj>{1, 0});

  auto const nat = gf::io::load_nat_trans(data("flip.nat"));
  CHECK(gf::validate_nat_trans(nat).ok());

  auto const prob = gf::io::load_probing(data("almost.prob"));
  CHECK(prob.proj == std::vector<gf::Obj>{0, 0, 1});
  CHECK_FALSE(prob.explicit_form);

  auto const cover = gf::io::load_cover(data("chain.cover"));
  CHECK(cover.covering.parts.size() == 2);
  CHECK(gf::generates(cover.parent, cover.covering));

  auto const slab = gf::io::load_slab(data("clock.slab"));
  REQUIRE(slab.slices.size() == 3);
  CHECK(slab.slices[1].marked == 1);
  CHECK(slab.interior[0] == std::vector<std::string>{"i0"});

  auto const lower = gf::io::load_history(data("lower.hist"));
  auto const upper = gf::io::load_history(data("upper.hist"));
  CHECK(gf::compose_blocks(lower, upper).functor.mor_map.size() == 64);

  auto const cx = gf::io::load_complex(data("torus.cmplx"));
  CHECK(cx.faces.size() == 1);
  auto const pres = gf::io::parse_presentation(gf::io::read_file(data("torus.pres")), "torus.pres");
  CHECK(gf::enumerate_homs(pres, s3()).size() == 18);
}

TEST_CASE("presentations round trip through text") {
  auto const sp = gf::presentation_from_complex(complex(klein, "klein"), 0);
  std::ostringstream os;
  gf::io::write_presentation(os, sp.presentation);
  auto const back = gf::io::parse_presentation(os.str(), "mem");
  CHECK(back.generators == sp.presentation.generators);
  CHECK(back.relators == sp.presentation.relators);
}

TEST_CASE("slabs need one starred point per slice") {
  CHECK_THROWS_AS(gf::io::parse_slab("slice: a b\n", "s"), gf::ParseError);
  CHECK_THROWS_AS(gf::io::parse_slab("slice: *a *b\n", "s"), gf::ParseError);
  CHECK_THROWS_AS(gf::io::parse_slab("slice: *a\ninterior: x\n", "s"), gf::ParseError);
}

TEST_CASE("config keys and errors") {
  gf::RunConfig cfg;
  gf::apply_config_text(cfg, "limit = 5\n# comment\nseed=99\nmachine=true\nfactor-budget=3\n", "c");
  CHECK(cfg.limit == 5);
  CHECK(cfg.seed == 99);
  CHECK(cfg.machine);
  CHECK(cfg.factor_budget == 3);
  CHECK(cfg.budget == gf::RunConfig{}.budget);

  auto const bad = parse_error([&] { gf::apply_config_text(cfg, "\nlimit=0\n", "c"); });
  CHECK(bad.line() == 2);
  CHECK_THROWS_AS(gf::apply_config_text(cfg, "limit=-3\n", "c"), gf::ParseError);
  CHECK_THROWS_AS(gf::apply_config_text(cfg, "colour=red\n", "c"), gf::ParseError);
  CHECK_THROWS_AS(gf::apply_config_text(cfg, "machine=yes\n", "c"), gf::ParseError);
  CHECK_THROWS_AS(gf::apply_config_text(cfg, "limit\n", "c"), gf::ParseError);
}

TEST_CASE("config is read from GF_CONFIG") {
  auto const path = std::filesystem::temp_directory_path() / "gf_test_config.cfg";
  {
    std::ofstream out(path);
    out << "budget=12\nthreshold=4\n";
  }
  ::setenv("GF_CONFIG", path.c_str(), 1);
  auto const cfg = gf::load_config();
  ::unsetenv("GF_CONFIG");
  std::filesystem::remove(path);
  CHECK(cfg.budget == 12);
  CHECK(cfg.validation().exhaustive_threshold == 4);
  CHECK(gf::load_config().budget == gf::RunConfig{}.budget);
}
