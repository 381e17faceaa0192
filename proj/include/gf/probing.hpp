// Probing systems: almost products Γ ×_Ω π*P, detection and section functors,
// and verification of the split exact sequence.
#ifndef GF_PROBING_HPP_
#define GF_PROBING_HPP_

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "functor.hpp"
#include "gauge.hpp"
#include "structure.hpp"

namespace gf {

  /// inner ↪ total → probe, with a section of the detection functor.
  /// `inner` is a standalone groupoid; `inclusion` embeds it in `total`.
  struct ProbingDecomposition {
    Groupoid         inner;
    Groupoid         probe;
    Groupoid         total;
    std::vector<Obj> proj;  // objects of total → objects of probe
    GroupoidHom      inclusion;
    GroupoidHom      detection;
    GroupoidHom      section;
  };

  /// Γ ×_Ω π*P with its coordinate maps. `gamma[m]` is the Γ component of a
  /// total morphism and `sigma[m]` its probe component.
  struct AlmostProduct {
    Groupoid         gamma;
    Groupoid         probe;
    std::vector<Obj> proj;
    Groupoid         total;
    std::vector<Mor> first;
    std::vector<Mor> sigma;
    GroupoidHom      detection;
    // Fibre-preserving part of Γ and its copy α ↦ (α, (b, 1, a)) in total.
    Embedded    vertical;
    GroupoidHom inclusion;

    Mor find(Mor alpha, Mor s) const {
      auto it = index_.find((std::uint64_t(alpha) << 32) | s);
      return it == index_.end() ? npos : it->second;
    }

    std::unordered_map<std::uint64_t, Mor> index_;
  };

  inline AlmostProduct almost_product(Groupoid const& inner, Groupoid const& probe,
                                      std::vector<Obj> const& proj) {
    if (proj.size() != inner.num_objects()) {
      throw DomainError("projection must be total on inner objects");
    }
    for (Obj s : proj) {
      if (s >= probe.num_objects()) throw DomainError("projection leaves the probe");
    }
    auto pb = pullback_groupoid(probe, inner.object_names(), proj);
    auto fp = fibered_product(inner, pb.groupoid);

    AlmostProduct ap;
    ap.gamma = inner;
    ap.probe = probe;
    ap.proj  = proj;
    ap.total = fp.groupoid;
    ap.first = fp.first;
    for (Mor m = 0; m < ap.total.num_morphisms(); ++m) {
      ap.sigma.push_back(pb.base[fp.second[m]]);
      ap.index_.emplace((std::uint64_t(ap.first[m]) << 32) | ap.sigma[m], m);
    }
    ap.detection = GroupoidHom{ap.total, probe, proj, ap.sigma};

    Subgroupoid v;
    for (Obj x = 0; x < inner.num_objects(); ++x) v.objects.push_back(x);
    for (Mor a = 0; a < inner.num_morphisms(); ++a) {
      if (proj[inner.src(a)] == proj[inner.tgt(a)]) v.morphisms.push_back(a);
    }
    ap.vertical  = materialize(inner, v);
    ap.inclusion = GroupoidHom{ap.vertical.groupoid, ap.total, ap.vertical.obj_to_parent, {}};
    for (Mor a : ap.vertical.mor_to_parent) {
      ap.inclusion.mor_map.push_back(ap.find(a, probe.unit(proj[inner.src(a)])));
    }
    return ap;
  }

  /// W(σ) = (W_Γ(σ), (φ(y), σ, φ(x))) with φ the object map of W_Γ.
  inline GroupoidHom section_from_inner_hom(AlmostProduct const& ap,
                                            GroupoidHom const&   w_gamma) {
    check_maps(w_gamma);
    if (!(w_gamma.dom == ap.probe) || !(w_gamma.cod == ap.gamma)) {
      throw DomainError("inner hom must map the probe into the inner groupoid");
    }
    GroupoidHom w{ap.probe, ap.total, w_gamma.obj_map, {}};
    for (Obj s = 0; s < ap.probe.num_objects(); ++s) {
      if (ap.proj[w_gamma.obj_map[s]] != s) {
        throw DomainError("inner hom does not lie over the probe",
                          {ap.probe.object_name(s)});
      }
    }
    for (Mor s = 0; s < ap.probe.num_morphisms(); ++s) {
      Mor const m = ap.find(w_gamma.mor_map[s], s);
      if (m == npos) {
        throw DomainError("inner hom image has wrong endpoints", {ap.probe.morphism_name(s)});
      }
      w.mor_map.push_back(m);
    }
    return w;
  }

  /// W_Γ = pr₁ ∘ W.
  inline GroupoidHom section_to_inner_hom(AlmostProduct const& ap, GroupoidHom const& w) {
    if (!(w.cod == ap.total) || !(w.dom == ap.probe)) {
      throw DomainError("section is not into this almost product");
    }
    check_maps(w);
    GroupoidHom out{ap.probe, ap.gamma, w.obj_map, {}};
    for (Mor m : w.mor_map) out.mor_map.push_back(ap.first[m]);
    return out;
  }

  /// Functors probe → Γ lying over the probe, i.e. inner homs of sections.
  inline std::vector<GroupoidHom> inner_sections(AlmostProduct const& ap,
                                                 std::size_t limit = 1000000) {
    std::vector<GroupoidHom> out;
    for (auto& w : enumerate_functors(ap.probe, ap.gamma, limit).functors) {
      bool over = true;
      for (Obj s = 0; s < ap.probe.num_objects(); ++s) {
        over = over && ap.proj[w.obj_map[s]] == s;
      }
      if (over) out.push_back(std::move(w));
    }
    return out;
  }

  inline ProbingDecomposition decomposition(AlmostProduct const& ap,
                                            GroupoidHom const&   section) {
    return ProbingDecomposition{ap.vertical.groupoid, ap.probe, ap.total,   ap.proj,
                                ap.inclusion,         ap.detection, section};
  }

  /// Γ × C with D = pr₂, inner = Γ × 1_T and W(σ) = (1_{ω₀}, σ).
  inline ProbingDecomposition product_decomposition(Groupoid const& gamma,
                                                    Groupoid const& clock,
                                                    Obj             omega0 = 0) {
    if (omega0 >= gamma.num_objects()) throw DomainError("base object out of range");
    std::size_t const bo = clock.num_objects(), bm = clock.num_morphisms();
    ProbingDecomposition p;
    p.probe = clock;
    p.total = product(gamma, clock);
    p.inner = product(gamma, unit_groupoid(clock.object_names()));
    for (Obj x = 0; x < p.total.num_objects(); ++x) p.proj.push_back(Obj(x % bo));
    p.detection = GroupoidHom{p.total, clock, p.proj, {}};
    for (Mor m = 0; m < p.total.num_morphisms(); ++m) {
      p.detection.mor_map.push_back(Mor(m % bm));
    }
    p.inclusion = GroupoidHom{p.inner, p.total, {}, {}};
    for (Obj x = 0; x < p.inner.num_objects(); ++x) p.inclusion.obj_map.push_back(x);
    for (Mor m = 0; m < p.inner.num_morphisms(); ++m) {
      p.inclusion.mor_map.push_back(Mor((m / bo) * bm + clock.unit(Obj(m % bo))));
    }
    p.section = GroupoidHom{clock, p.total, {}, {}};
    for (Obj t = 0; t < bo; ++t) p.section.obj_map.push_back(Obj(omega0 * bo + t));
    for (Mor s = 0; s < bm; ++s) {
      p.section.mor_map.push_back(Mor(gamma.unit(omega0) * bm + s));
    }
    return p;
  }

  /// Checks functoriality, surjectivity of D, D ∘ W = id, ker D = inner and
  /// minimal intersection of inner with the image of W.
  inline Report verify_probing(ProbingDecomposition const& p) {
    Report r;
    r.merge(validate_functor(p.detection), "detection");
    r.merge(validate_functor(p.section), "section");
    r.merge(validate_functor(p.inclusion), "inclusion");
    if (!r.ok()) return r;
    auto const& t  = p.total;
    auto const& pr = p.probe;

    std::vector<char> hit(pr.num_morphisms(), 0);
    for (Mor m : p.detection.mor_map) hit[m] = 1;
    for (Mor s = 0; s < pr.num_morphisms(); ++s) {
      if (!hit[s]) r.add("surjective", {pr.morphism_name(s)});
    }

    for (Obj s = 0; s < pr.num_objects(); ++s) {
      if (p.detection.obj_map[p.section.obj_map[s]] != s) {
        r.add("right-inverse", {pr.object_name(s)});
      }
    }
    for (Mor s = 0; s < pr.num_morphisms(); ++s) {
      if (p.detection.mor_map[p.section.mor_map[s]] != s) {
        r.add("right-inverse", {pr.morphism_name(s)});
      }
    }

    std::vector<char> in_inner(t.num_morphisms(), 0);
    for (Mor m : p.inclusion.mor_map) {
      if (in_inner[m]) r.add("kernel", {t.morphism_name(m)}, "inclusion not injective");
      in_inner[m] = 1;
    }
    for (Mor m = 0; m < t.num_morphisms(); ++m) {
      bool const in_kernel = pr.is_unit(p.detection.mor_map[m]);
      if (in_kernel != bool(in_inner[m])) {
        r.add("kernel", {t.morphism_name(m)},
              in_kernel ? "kernel element outside inner" : "inner element outside kernel");
      }
    }

    for (Mor s = 0; s < pr.num_morphisms(); ++s) {
      Mor const m = p.section.mor_map[s];
      if (in_inner[m] && !t.is_unit(m)) r.add("minimal-intersection", {t.morphism_name(m)});
    }
    return r;
  }

  /// Orbit counts of the total groupoid and of inner × probe. Different
  /// counts witness that the split total is not a direct product.
  inline std::pair<std::size_t, std::size_t> product_orbit_counts(
      ProbingDecomposition const& p) {
    return {orbits(p.total).size(), orbits(product(p.inner, p.probe)).size()};
  }

}  // namespace gf

#endif  // GF_PROBING_HPP_
