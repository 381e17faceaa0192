#include <catch_amalgamated.hpp>

#include "support/fixtures.hpp"

using namespace fixtures;

namespace {

  // Object maps φ with proj ∘ φ = id; each extends uniquely into a pair groupoid.
  std::size_t pair_sections(std::size_t n, std::vector<gf::Obj> const& proj, std::size_t probe) {
    std::size_t count = 1;
    for (gf::Obj s = 0; s < probe; ++s) {
      count *= std::size_t(std::count(proj.begin(), proj.end(), s));
    }
    (void)n;
    return count;
  }

  std::size_t kernel_size(gf::ProbingDecomposition const& p) {
    std::size_t k = 0;
    for (gf::Mor m : p.detection.mor_map) k += p.probe.is_unit(m);
    return k;
  }

}  // namespace

TEST_CASE("sections of a split pair groupoid") {
  std::vector<gf::Obj> const proj{0, 0, 1};
  auto const ap = gf::almost_product(pair(3), pair(2), proj);
  CHECK(ap.total.num_morphisms() == 9);
  auto const ss = gf::inner_sections(ap);
  CHECK(ss.size() == pair_sections(3, proj, 2));
  CHECK(ss.size() == 2);
  for (auto const& s : ss) {
    auto const w = gf::section_from_inner_hom(ap, s);
    CHECK(gf::section_to_inner_hom(ap, w) == s);
    auto const p = gf::decomposition(ap, w);
    CHECK(gf::verify_probing(p).ok());
    CHECK(kernel_size(p) == p.inner.num_morphisms());
  }
}

TEST_CASE("vertical part of an action groupoid") {
  auto const nat = gf::action_groupoid(s3(), names(3), natural_action(s3(), 3));
  auto const ap  = gf::almost_product(nat, pair(2), {0, 0, 1});
  // Morphisms among {0,1}: 4 from each pair of ends, plus 2 loops at 2.
  CHECK(ap.vertical.groupoid.num_morphisms() == 10);
  for (auto const& s : gf::inner_sections(ap)) {
    CHECK(gf::verify_probing(gf::decomposition(ap, gf::section_from_inner_hom(ap, s))).ok());
  }
}

TEST_CASE("a split total need not be a direct product") {
  auto const p = gf::product_decomposition(s3().groupoid(), pair(2));
  CHECK(gf::verify_probing(p).ok());
  CHECK(kernel_size(p) == 12);
  auto const [total, prod] = gf::product_orbit_counts(p);
  CHECK(total == 1);
  CHECK(prod == 2);
}

TEST_CASE("product decomposition at another base object") {
  auto const p = gf::product_decomposition(pair(2), pair(3), 1);
  CHECK(gf::verify_probing(p).ok());
  for (gf::Obj t = 0; t < 3; ++t) CHECK(p.proj[p.section.obj_map[t]] == t);
  CHECK_THROWS_AS(gf::product_decomposition(pair(2), pair(3), 5), gf::DomainError);
}

TEST_CASE("corruptions are named by the verifier") {
  auto const good = gf::product_decomposition(pair(2), pair(2));

  auto bad_section = good;
  std::swap(bad_section.section.obj_map[0], bad_section.section.obj_map[1]);
  CHECK_FALSE(gf::verify_probing(bad_section).ok());

  auto bad_detection = good;
  for (auto& m : bad_detection.detection.mor_map) m = good.probe.unit(0);
  for (auto& x : bad_detection.detection.obj_map) x = 0;
  auto const r = gf::verify_probing(bad_detection);
  CHECK(r.count("surjective") > 0);

  auto small_inner = good;
  small_inner.inner     = gf::unit_groupoid(good.total.object_names());
  small_inner.inclusion = gf::GroupoidHom{small_inner.inner, good.total, {}, {}};
  for (gf::Obj x = 0; x < good.total.num_objects(); ++x) {
    small_inner.inclusion.obj_map.push_back(x);
    small_inner.inclusion.mor_map.push_back(good.total.unit(x));
  }
  CHECK(gf::verify_probing(small_inner).count("kernel") > 0);
}

TEST_CASE("sections must lie over the probe") {
  auto const ap = gf::almost_product(pair(3), pair(2), {0, 0, 1});
  gf::GroupoidHom w{pair(2), pair(3), {2, 0}, {}};
  auto const& p2 = w.dom;
  auto const& p3 = w.cod;
  for (gf::Mor m = 0; m < p2.num_morphisms(); ++m) {
    w.mor_map.push_back(p3.hom(w.obj_map[p2.src(m)], w.obj_map[p2.tgt(m)]).front());
  }
  CHECK(gf::validate_functor(w).ok());
  CHECK_THROWS_AS(gf::section_from_inner_hom(ap, w), gf::DomainError);
  CHECK_THROWS_AS(gf::almost_product(pair(3), pair(2), {0, 1}), gf::DomainError);
  CHECK_THROWS_AS(gf::almost_product(pair(3), pair(2), {0, 1, 2}), gf::DomainError);
}
