// Groupoid homomorphisms (functor fields) and natural transformations
// (gauge transformations).
#ifndef GF_FUNCTOR_HPP_
#define GF_FUNCTOR_HPP_

#include <compare>
#include <string>
#include <vector>

#include "groupoid.hpp"
#include "structure.hpp"

namespace gf {

  struct GroupoidHom {
    Groupoid         dom;
    Groupoid         cod;
    std::vector<Obj> obj_map;
    std::vector<Mor> mor_map;

    Obj operator()(Obj x) const { return obj_map[x]; }
    Mor on(Mor m) const { return mor_map[m]; }

    /// Equal maps between structurally equal groupoids.
    friend bool operator==(GroupoidHom const& a, GroupoidHom const& b) {
      return a.obj_map == b.obj_map && a.mor_map == b.mor_map && a.dom == b.dom
             && a.cod == b.cod;
    }
  };

  /// Canonical order: lexicographic on (object map, morphism map).
  inline bool canonical_less(GroupoidHom const& a, GroupoidHom const& b) {
    if (a.obj_map != b.obj_map) return a.obj_map < b.obj_map;
    return a.mor_map < b.mor_map;
  }

  inline bool parallel(GroupoidHom const& a, GroupoidHom const& b) {
    return a.dom == b.dom && a.cod == b.cod;
  }

  /// Throws MalformedError when the maps are not total or leave the codomain.
  inline void check_maps(GroupoidHom const& w) {
    if (w.obj_map.size() != w.dom.num_objects()
        || w.mor_map.size() != w.dom.num_morphisms()) {
      throw MalformedError("functor maps are not total on the domain");
    }
    for (Obj y : w.obj_map) {
      if (y >= w.cod.num_objects()) throw MalformedError("object image outside codomain");
    }
    for (Mor m : w.mor_map) {
      if (m >= w.cod.num_morphisms()) throw MalformedError("morphism image outside codomain");
    }
  }

  /// Empty iff w respects endpoints, units, inverses and composition.
  inline Report validate_functor(GroupoidHom const& w) {
    check_maps(w);
    Report      r;
    auto const& d = w.dom;
    auto const& c = w.cod;
    for (Mor m = 0; m < d.num_morphisms(); ++m) {
      Mor const img = w.mor_map[m];
      if (c.src(img) != w.obj_map[d.src(m)] || c.tgt(img) != w.obj_map[d.tgt(m)]) {
        r.add("endpoints", {d.morphism_name(m), c.morphism_name(img)});
      }
      if (w.mor_map[d.inv(m)] != c.inv(img)) {
        r.add("inverses", {d.morphism_name(m)});
      }
    }
    for (Obj x = 0; x < d.num_objects(); ++x) {
      if (w.mor_map[d.unit(x)] != c.unit(w.obj_map[x])) {
        r.add("units", {d.object_name(x)});
      }
    }
    for (Mor f = 0; f < d.num_morphisms(); ++f) {
      for (Mor g = 0; g < d.num_morphisms(); ++g) {
        if (!d.composable(g, f)) continue;
        Mor const lhs = w.mor_map[d.compose(g, f)];
        Mor const rhs = c.try_compose(w.mor_map[g], w.mor_map[f]);
        if (lhs != rhs) r.add("composition", {d.morphism_name(g), d.morphism_name(f)});
      }
    }
    return r;
  }

  inline GroupoidHom identity_functor(Groupoid const& g) {
    GroupoidHom w{g, g, {}, {}};
    for (Obj x = 0; x < g.num_objects(); ++x) w.obj_map.push_back(x);
    for (Mor m = 0; m < g.num_morphisms(); ++m) w.mor_map.push_back(m);
    return w;
  }

  /// second ∘ first.
  inline GroupoidHom compose(GroupoidHom const& second, GroupoidHom const& first) {
    if (!(first.cod == second.dom)) {
      throw DomainError("functors are not composable");
    }
    GroupoidHom w{first.dom, second.cod, {}, {}};
    for (Obj y : first.obj_map) w.obj_map.push_back(second.obj_map[y]);
    for (Mor m : first.mor_map) w.mor_map.push_back(second.mor_map[m]);
    return w;
  }

  /// Restriction along an embedded subgroupoid.
  inline GroupoidHom restrict_to(GroupoidHom const& w, Embedded const& e) {
    GroupoidHom r{e.groupoid, w.cod, {}, {}};
    for (Obj x : e.obj_to_parent) r.obj_map.push_back(w.obj_map[x]);
    for (Mor m : e.mor_to_parent) r.mor_map.push_back(w.mor_map[m]);
    return r;
  }

  inline GroupoidHom inclusion(Embedded const& e, Groupoid const& parent) {
    return GroupoidHom{e.groupoid, parent, e.obj_to_parent, e.mor_to_parent};
  }

  struct NaturalTransformation {
    GroupoidHom      source;
    GroupoidHom      target;
    std::vector<Mor> component;  // per domain object

    friend bool operator==(NaturalTransformation const&,
                           NaturalTransformation const&) = default;
  };

  /// Endpoint errors are reported under rule "endpoint"; naturality squares
  /// are checked only when every component has the right endpoints.
  inline Report validate_nat_trans(NaturalTransformation const& n) {
    if (!parallel(n.source, n.target)) {
      throw DomainError("natural transformation between non-parallel functors");
    }
    check_maps(n.source);
    check_maps(n.target);
    auto const& d = n.source.dom;
    auto const& c = n.source.cod;
    if (n.component.size() != d.num_objects()) {
      throw MalformedError("natural transformation components are not total");
    }
    Report r;
    for (Obj x = 0; x < d.num_objects(); ++x) {
      Mor const k = n.component[x];
      if (k >= c.num_morphisms()) throw MalformedError("component outside codomain");
      if (c.src(k) != n.source.obj_map[x] || c.tgt(k) != n.target.obj_map[x]) {
        r.add("endpoint", {d.object_name(x), c.morphism_name(k)});
      }
    }
    if (!r.ok()) return r;
    for (Mor a = 0; a < d.num_morphisms(); ++a) {
      Obj const x = d.src(a), y = d.tgt(a);
      Mor const lhs = c.try_compose(n.target.mor_map[a], n.component[x]);
      Mor const rhs = c.try_compose(n.component[y], n.source.mor_map[a]);
      if (lhs == npos || lhs != rhs) r.add("naturality", {d.morphism_name(a)});
    }
    return r;
  }

  inline NaturalTransformation identity_transformation(GroupoidHom const& f) {
    NaturalTransformation n{f, f, {}};
    for (Obj x = 0; x < f.dom.num_objects(); ++x) {
      n.component.push_back(f.cod.unit(f.obj_map[x]));
    }
    return n;
  }

  /// (second ∘_v first)(x) = second(x) ∘ first(x).
  inline NaturalTransformation vertical_compose(NaturalTransformation const& second,
                                                NaturalTransformation const& first) {
    if (!(first.target == second.source)) {
      throw DomainError("vertical composition needs matching middle functor");
    }
    NaturalTransformation n{first.source, second.target, {}};
    auto const&           c = first.source.cod;
    for (Obj x = 0; x < first.component.size(); ++x) {
      n.component.push_back(c.compose(second.component[x], first.component[x]));
    }
    return n;
  }

  inline NaturalTransformation inverse(NaturalTransformation const& n) {
    NaturalTransformation out{n.target, n.source, {}};
    for (Mor k : n.component) out.component.push_back(n.source.cod.inv(k));
    return out;
  }

}  // namespace gf

#endif  // GF_FUNCTOR_HPP_
