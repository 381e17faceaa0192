// Principal bundles from isotropy homomorphisms and back.
//
// Given a connected probe P, a base object x0, a finite group G and a
// homomorphism w0: P(x0) → G, the total space is the set of classes [α, g]
// of pairs with α ∈ P_{x0}, under (α, g)·γ0 = (α ∘ γ0, w0(γ0⁻¹) g).
#ifndef GF_RECONSTRUCTION_HPP_
#define GF_RECONSTRUCTION_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "functor.hpp"
#include "gauge.hpp"
#include "structure.hpp"

namespace gf {

  /// Aut_G(π) is fully materialised: a G-equivariant bijection between the
  /// fibres over y and z is fixed by where it sends the base point b_y, so the
  /// morphism (z, y, h) is b_y·g ↦ b_z·h·g.
  struct PrincipalBundle {
    Groupoid probe;
    Obj      x0 = 0;
    Group    group;

    std::vector<std::pair<Mor, Mor>> points;  // canonical (α, g) per class
    std::vector<std::string>         point_names;
    std::vector<Obj>                 proj;
    std::vector<std::vector<Obj>>    action;  // action[ξ][h] = ξ·h
    std::vector<std::vector<Obj>>    fibers;  // per base object, ascending
    std::vector<Mor>                 tau;     // least x0 → y, unit at x0
    std::vector<Obj>                 base_point;
    Groupoid                         aut;

    std::vector<Obj> class_of;  // indexed by α·|G| + g

    Obj point(Mor alpha, Mor g) const { return class_of[alpha * group.order() + g]; }
    Obj act(Obj xi, Mor h) const { return action[xi][h]; }

    Mor aut_morphism(Obj z, Obj y, Mor h) const {
      return Mor((std::size_t(z) * probe.num_objects() + y) * group.order() + h);
    }
    /// The group element h of an Aut_G(π) morphism (z, y, h).
    Mor aut_element(Mor m) const { return Mor(m % group.order()); }

    /// Image of ξ under an Aut_G(π) morphism whose source is proj(ξ).
    Obj apply(Mor m, Obj xi) const {
      Obj const y = aut.src(m);
      if (proj[xi] != y) throw DomainError("point not in the source fibre", {point_names[xi]});
      // ξ = b_y · g for the unique g
      Mor g = 0;
      while (act(base_point[y], g) != xi) ++g;
      return act(base_point[aut.tgt(m)], group.mul(aut_element(m), g));
    }

    /// The g with ξ·g = ξ' for ξ, ξ' in one fibre.
    Mor difference(Obj xi, Obj xi2) const {
      for (Mor g = 0; g < group.order(); ++g) {
        if (act(xi, g) == xi2) return g;
      }
      throw DomainError("points lie in different fibres", {point_names[xi], point_names[xi2]});
    }
  };

  namespace detail {
    inline std::vector<Mor> isotropy_values(Groupoid const& probe, Obj x0,
                                            Group const& g, GroupoidHom const& w0) {
      auto iso = isotropy(probe, x0);
      if (!(w0.dom == iso.group.groupoid()) || !(w0.cod == g.groupoid())) {
        throw DomainError("isotropy hom has the wrong domain or codomain");
      }
      check_maps(w0);
      Report r = validate_functor(w0);
      if (!r.ok()) {
        throw DomainError("isotropy map is not a homomorphism", r.violations().front().witness);
      }
      std::vector<Mor> out(probe.num_morphisms(), npos);
      for (Mor i = 0; i < iso.to_parent.size(); ++i) out[iso.to_parent[i]] = w0.mor_map[i];
      return out;
    }

    // pair(objects) × G with morphisms (z, y, h).
    inline Groupoid aut_groupoid(std::vector<std::string> const& objects, Group const& g) {
      std::size_t const n = objects.size(), k = g.order();
      GroupoidTable     t;
      t.objects = objects;
      for (Obj z = 0; z < n; ++z) {
        for (Obj y = 0; y < n; ++y) {
          for (Mor h = 0; h < k; ++h) {
            t.morphisms.push_back(tuple_name({t.objects[z], t.objects[y], g.name(h)}));
            t.src.push_back(y);
            t.tgt.push_back(z);
          }
        }
      }
      auto id = [n, k](Obj z, Obj y, Mor h) { return Mor((std::size_t(z) * n + y) * k + h); };
      fill_table(
          t,
          [&](Mor b, Mor a) {
            return id(t.tgt[b], t.src[a], g.mul(Mor(b % k), Mor(a % k)));
          },
          [&](Mor a) { return id(t.src[a], t.tgt[a], g.inv(Mor(a % k))); },
          [&](Obj x) { return id(x, x, g.identity()); });
      return Groupoid::trusted(std::move(t));
    }
  }  // namespace detail

  struct Reconstruction {
    PrincipalBundle bundle;
    GroupoidHom     functor;  // probe → bundle.aut
  };

  /// Builds the bundle and the functor W(β)[α, g] = [β ∘ α, g].
  inline Reconstruction reconstruct(Groupoid const& probe, Obj x0, Group const& g,
                                    GroupoidHom const& w0) {
    if (x0 >= probe.num_objects()) throw DomainError("base object out of range");
    if (!is_connected(probe)) throw DomainError("probe groupoid is not connected");
    auto const w = detail::isotropy_values(probe, x0, g, w0);

    Reconstruction   out;
    PrincipalBundle& b = out.bundle;
    b.probe            = probe;
    b.x0               = x0;
    b.group            = g;
    std::size_t const k = g.order();
    auto const&       loops = probe.hom(x0, x0);

    b.class_of.assign(probe.num_morphisms() * k, npos);
    for (Mor alpha = 0; alpha < probe.num_morphisms(); ++alpha) {
      if (probe.src(alpha) != x0) continue;
      for (Mor h = 0; h < k; ++h) {
        if (b.class_of[alpha * k + h] != npos) continue;
        // (alpha, h) is the least pair of a new orbit
        Obj const cls = Obj(b.points.size());
        b.points.emplace_back(alpha, h);
        b.point_names.push_back("[" + probe.morphism_name(alpha) + "," + g.name(h) + "]");
        b.proj.push_back(probe.tgt(alpha));
        for (Mor c : loops) {
          Mor const a2 = probe.compose(alpha, c);
          Mor const h2 = g.mul(w[probe.inv(c)], h);
          b.class_of[a2 * k + h2] = cls;
        }
      }
    }

    b.fibers.assign(probe.num_objects(), {});
    for (Obj xi = 0; xi < b.points.size(); ++xi) b.fibers[b.proj[xi]].push_back(xi);
    b.action.assign(b.points.size(), std::vector<Obj>(k));
    for (Obj xi = 0; xi < b.points.size(); ++xi) {
      auto [alpha, h0] = b.points[xi];
      for (Mor h = 0; h < k; ++h) b.action[xi][h] = b.point(alpha, g.mul(h0, h));
    }
    for (Obj y = 0; y < probe.num_objects(); ++y) {
      b.tau.push_back(y == x0 ? probe.unit(x0) : probe.hom(x0, y).front());
      b.base_point.push_back(b.point(b.tau[y], g.identity()));
    }
    b.aut = detail::aut_groupoid(probe.object_names(), g);

    out.functor = GroupoidHom{probe, b.aut, {}, {}};
    for (Obj y = 0; y < probe.num_objects(); ++y) out.functor.obj_map.push_back(y);
    for (Mor beta = 0; beta < probe.num_morphisms(); ++beta) {
      Obj const y = probe.src(beta), z = probe.tgt(beta);
      Mor const loop =
          probe.compose(probe.inv(b.tau[z]), probe.compose(beta, b.tau[y]));
      out.functor.mor_map.push_back(b.aut_morphism(z, y, w[loop]));
    }
    return out;
  }

  /// w0(β0) is the g with W(β0)(marked) = marked·g.
  inline GroupoidHom restrict_to_isotropy(PrincipalBundle const& b, GroupoidHom const& w,
                                          Obj marked) {
    if (!(w.dom == b.probe) || !(w.cod == b.aut)) {
      throw DomainError("functor is not probe → Aut_G(π) for this bundle");
    }
    check_maps(w);
    if (marked >= b.points.size() || b.proj[marked] != b.x0) {
      throw DomainError("marked point not in the fibre over the base object",
                        {marked < b.points.size() ? b.point_names[marked] : std::to_string(marked)});
    }
    auto        iso = isotropy(b.probe, b.x0);
    GroupoidHom out{iso.group.groupoid(), b.group.groupoid(),
                    std::vector<Obj>{0}, {}};
    for (Mor loop : iso.to_parent) {
      out.mor_map.push_back(b.difference(marked, b.apply(w.mor_map[loop], marked)));
    }
    return out;
  }

  /// Freeness and transitivity on fibres, the size formula and functoriality.
  inline Report verify_bundle(Reconstruction const& rc) {
    Report      r;
    auto const& b = rc.bundle;
    std::size_t const k = b.group.order();
    std::size_t       from_x0 = 0;
    for (Mor m = 0; m < b.probe.num_morphisms(); ++m) from_x0 += b.probe.src(m) == b.x0;
    std::size_t const loops = b.probe.hom(b.x0, b.x0).size();
    if (b.points.size() * loops != from_x0 * k) {
      r.add("size", {std::to_string(b.points.size())});
    }
    for (Obj xi = 0; xi < b.points.size(); ++xi) {
      for (Mor h = 0; h < k; ++h) {
        if (h != b.group.identity() && b.act(xi, h) == xi) {
          r.add("free", {b.point_names[xi], b.group.name(h)});
        }
        if (b.proj[b.act(xi, h)] != b.proj[xi]) r.add("fibre", {b.point_names[xi]});
      }
    }
    for (auto const& f : b.fibers) {
      if (f.size() != k) r.add("transitive", {std::to_string(f.size())});
    }
    r.merge(validate_functor(rc.functor), "functor");
    return r;
  }

  /// Forward round trip from w0 and, when `w` is given, the reverse round
  /// trip up to natural isomorphism.
  inline Report verify_round_trip(Groupoid const& probe, Obj x0, Group const& g,
                                  GroupoidHom const& w0,
                                  GroupoidHom const* w = nullptr,
                                  std::size_t        budget = 1000000) {
    auto   rc = reconstruct(probe, x0, g, w0);
    Report r  = verify_bundle(rc);
    auto   back = restrict_to_isotropy(rc.bundle, rc.functor, rc.bundle.base_point[x0]);
    if (back.mor_map != w0.mor_map) r.add("forward", {probe.object_name(x0)});
    if (w != nullptr) {
      auto w0b = restrict_to_isotropy(rc.bundle, *w, rc.bundle.base_point[x0]);
      auto rc2 = reconstruct(probe, x0, g, w0b);
      auto s   = find_gauge_transformation(rc2.functor, *w, budget);
      if (s.decision == Decision::inequivalent) r.add("reverse", {probe.object_name(x0)});
      if (s.decision == Decision::undecided) {
        r.add("reverse", {probe.object_name(x0)}, "search budget exhausted");
      }
    }
    return r;
  }

}  // namespace gf

#endif  // GF_RECONSTRUCTION_HPP_
