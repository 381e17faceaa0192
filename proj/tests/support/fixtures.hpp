// Shared test instances.
#ifndef GF_TESTS_FIXTURES_HPP_
#define GF_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "gf/gf.hpp"

namespace fixtures {

  inline std::vector<std::string> names(std::size_t n, std::string const& prefix = "") {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
  }

  inline gf::Groupoid pair(std::size_t n) { return gf::pair_groupoid(names(n)); }

  inline gf::Group z(std::size_t n) { return gf::cyclic_group(n); }
  inline gf::Group s3() { return gf::symmetric_group(3); }

  /// Natural action of S_n on its points, read from the one-line names.
  inline std::vector<std::vector<gf::Obj>> natural_action(gf::Group const& sn, std::size_t n) {
    std::vector<std::vector<gf::Obj>> act;
    for (gf::Mor g = 0; g < sn.order(); ++g) {
      std::vector<gf::Obj> row;
      for (std::size_t x = 0; x < n; ++x) row.push_back(gf::Obj(sn.name(g)[x] - '1'));
      act.push_back(row);
    }
    return act;
  }

  /// S3 acting on two points through the sign.
  inline gf::Groupoid s3_sign_action() {
    auto const g   = s3();
    auto const nat = natural_action(g, 3);
    std::vector<std::vector<gf::Obj>> act;
    for (auto const& p : nat) {
      int inversions = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
      }
      act.push_back(inversions % 2 ? std::vector<gf::Obj>{1, 0} : std::vector<gf::Obj>{0, 1});
    }
    return gf::action_groupoid(g, {"+", "-"}, act);
  }

  /// Z_n acting on m points by rotation modulo m (m divides n).
  inline gf::Groupoid rotation_action(std::size_t n, std::size_t m) {
    std::vector<std::vector<gf::Obj>> act;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<gf::Obj> row;
      for (std::size_t x = 0; x < m; ++x) row.push_back(gf::Obj((x + k) % m));
      act.push_back(row);
    }
    return gf::action_groupoid(z(n), names(m, "p"), act);
  }

  /// Connected groupoids with at most 12 morphisms.
  inline std::vector<std::pair<std::string, gf::Groupoid>> small_probes() {
    return {
        {"pair1", pair(1)},
        {"pair2", pair(2)},
        {"pair3", pair(3)},
        {"Z2", z(2).groupoid()},
        {"Z3", z(3).groupoid()},
        {"Z4", z(4).groupoid()},
        {"Z2xZ2", gf::direct_product(z(2), z(2)).groupoid()},
        {"Z6", z(6).groupoid()},
        {"S3", s3().groupoid()},
        {"Z2|2", rotation_action(2, 2)},
        {"Z4|2", rotation_action(4, 2)},
        {"Z3|3", rotation_action(3, 3)},
        {"Z6|2", rotation_action(6, 2)},
        {"S3|sign", s3_sign_action()},
        {"pair2xZ2", gf::product(pair(2), z(2).groupoid())},
        {"pair2xZ3", gf::product(pair(2), z(3).groupoid())},
    };
  }

  inline char const* const torus = R"(vertices:
v
edges:
a v v
b v v
faces:
a b a- b-
)";

  inline char const* const klein = R"(vertices:
v
edges:
a v v
b v v
faces:
a b a b-
)";

  inline char const* const circle = R"(vertices:
v
edges:
a v v
)";

  inline char const* const projective_plane = R"(vertices:
v
edges:
a v v
faces:
a a
)";

  // Two vertices joined by three edges; the edge-path group is free of rank 2.
  inline char const* const theta = R"(vertices:
p q
edges:
a p q
b p q
c p q
)";

  // A triangulated disk: the boundary loop bounds a face.
  inline char const* const disk = R"(vertices:
p q r
edges:
a p q
b q r
c r p
faces:
a b c
)";

  inline gf::TwoComplex complex(char const* text, std::string const& name) {
    return gf::io::parse_complex(text, name);
  }

}  // namespace fixtures

#endif  // GF_TESTS_FIXTURES_HPP_
