// Derived structure of a finite groupoid: orbits, isotropy groups and
// subgroupoids.
#ifndef GF_STRUCTURE_HPP_
#define GF_STRUCTURE_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "groupoid.hpp"

namespace gf {

  /// Partition of objects into orbits. Each orbit is sorted; orbits are
  /// ordered by their least object.
  inline std::vector<std::vector<Obj>> orbits(Groupoid const& g) {
    std::vector<Obj> parent(g.num_objects());
    std::iota(parent.begin(), parent.end(), Obj(0));
    auto find = [&](Obj x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (Mor m = 0; m < g.num_morphisms(); ++m) {
      Obj a = find(g.src(m)), b = find(g.tgt(m));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<Obj>> out;
    std::vector<Obj>              slot(g.num_objects(), npos);
    for (Obj x = 0; x < g.num_objects(); ++x) {
      Obj const r = find(x);
      if (slot[r] == npos) {
        slot[r] = Obj(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(x);
    }
    return out;
  }

  inline bool is_connected(Groupoid const& g) { return orbits(g).size() == 1; }

  /// The isotropy group Γ(x) together with the source fibre Γ_x and the
  /// target fibre Γ^x.
  struct Isotropy {
    Group            group;
    std::vector<Mor> to_parent;
    std::vector<Mor> source_fiber;
    std::vector<Mor> target_fiber;
  };

  inline Isotropy isotropy(Groupoid const& g, Obj x) {
    if (x >= g.num_objects()) {
      throw DomainError("unknown object", {std::to_string(x)});
    }
    Isotropy                      out;
    std::vector<Mor> const&       loops = g.hom(x, x);
    std::vector<Mor>              local(g.num_morphisms(), npos);
    std::vector<std::string>      names;
    for (Mor i = 0; i < loops.size(); ++i) {
      local[loops[i]] = i;
      names.push_back(g.morphism_name(loops[i]));
    }
    std::vector<std::vector<Mor>> mul(loops.size(), std::vector<Mor>(loops.size()));
    for (Mor i = 0; i < loops.size(); ++i) {
      for (Mor j = 0; j < loops.size(); ++j) {
        mul[i][j] = local[g.compose(loops[i], loops[j])];
      }
    }
    out.group     = group_from_table(std::move(names), mul, g.object_name(x));
    out.to_parent = loops;
    for (Mor m = 0; m < g.num_morphisms(); ++m) {
      if (g.src(m) == x) out.source_fiber.push_back(m);
      if (g.tgt(m) == x) out.target_fiber.push_back(m);
    }
    return out;
  }

  /// A subset of a parent groupoid's morphisms with the objects they touch.
  /// Both vectors are sorted; the parent is passed to every operation.
  struct Subgroupoid {
    std::vector<Obj> objects;
    std::vector<Mor> morphisms;

    bool contains(Mor m) const {
      return std::binary_search(morphisms.begin(), morphisms.end(), m);
    }
    bool has_object(Obj x) const {
      return std::binary_search(objects.begin(), objects.end(), x);
    }
    bool empty() const noexcept { return objects.empty(); }

    friend bool operator==(Subgroupoid const&, Subgroupoid const&) = default;
  };

  namespace detail {
    inline Subgroupoid from_mask(Groupoid const& g, std::vector<char> const& mask) {
      Subgroupoid       s;
      std::vector<char> obj(g.num_objects(), 0);
      for (Mor m = 0; m < g.num_morphisms(); ++m) {
        if (mask[m]) {
          s.morphisms.push_back(m);
          obj[g.src(m)] = obj[g.tgt(m)] = 1;
        }
      }
      for (Obj x = 0; x < g.num_objects(); ++x) {
        if (obj[x]) s.objects.push_back(x);
      }
      return s;
    }
  }  // namespace detail

  inline Subgroupoid whole(Groupoid const& g) {
    Subgroupoid s;
    s.objects.resize(g.num_objects());
    std::iota(s.objects.begin(), s.objects.end(), Obj(0));
    s.morphisms.resize(g.num_morphisms());
    std::iota(s.morphisms.begin(), s.morphisms.end(), Mor(0));
    return s;
  }

  /// G_U = { α: x → y | x, y ∈ U }.
  inline Subgroupoid restriction(Groupoid const& g, std::vector<Obj> objects) {
    std::sort(objects.begin(), objects.end());
    objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
    Subgroupoid s;
    s.objects = objects;
    for (Obj x : objects) {
      if (x >= g.num_objects()) throw DomainError("unknown object", {std::to_string(x)});
    }
    for (Mor m = 0; m < g.num_morphisms(); ++m) {
      if (std::binary_search(objects.begin(), objects.end(), g.src(m))
          && std::binary_search(objects.begin(), objects.end(), g.tgt(m))) {
        s.morphisms.push_back(m);
      }
    }
    return s;
  }

  /// Restriction of a subgroupoid to an object subset.
  inline Subgroupoid restriction(Groupoid const& g, Subgroupoid const& h,
                                 std::vector<Obj> const& objects) {
    std::vector<char> in(g.num_objects(), 0);
    for (Obj x : objects) in.at(x) = 1;
    Subgroupoid s;
    for (Obj x : h.objects) {
      if (in[x]) s.objects.push_back(x);
    }
    for (Mor m : h.morphisms) {
      if (in[g.src(m)] && in[g.tgt(m)]) s.morphisms.push_back(m);
    }
    return s;
  }

  inline Subgroupoid intersection(Subgroupoid const& a, Subgroupoid const& b) {
    Subgroupoid s;
    std::set_intersection(a.objects.begin(), a.objects.end(), b.objects.begin(),
                          b.objects.end(), std::back_inserter(s.objects));
    std::set_intersection(a.morphisms.begin(), a.morphisms.end(),
                          b.morphisms.begin(), b.morphisms.end(),
                          std::back_inserter(s.morphisms));
    return s;
  }

  inline bool is_subset(Subgroupoid const& a, Subgroupoid const& b) {
    return std::includes(b.morphisms.begin(), b.morphisms.end(),
                         a.morphisms.begin(), a.morphisms.end())
           && std::includes(b.objects.begin(), b.objects.end(),
                            a.objects.begin(), a.objects.end());
  }

  /// Smallest subgroupoid containing `seed`: adds units of touched objects and
  /// inverses, then saturates under composition.
  inline Subgroupoid generated_subgroupoid(Groupoid const&         g,
                                           std::vector<Mor> const& seed) {
    std::vector<char> in(g.num_morphisms(), 0);
    std::vector<Mor>  work;
    auto              add = [&](Mor m) {
      if (!in[m]) {
        in[m] = 1;
        work.push_back(m);
      }
    };
    for (Mor m : seed) {
      if (m >= g.num_morphisms()) throw DomainError("seed outside groupoid");
      add(m);
      add(g.inv(m));
      add(g.unit(g.src(m)));
      add(g.unit(g.tgt(m)));
    }
    std::vector<std::vector<Mor>> by_src(g.num_objects()), by_tgt(g.num_objects());
    for (std::size_t i = 0; i < work.size(); ++i) {
      Mor const m = work[i];
      // Compose the new morphism with every member already present.
      std::vector<Mor> const after  = by_src[g.tgt(m)];
      std::vector<Mor> const before = by_tgt[g.src(m)];
      by_src[g.src(m)].push_back(m);
      by_tgt[g.tgt(m)].push_back(m);
      for (Mor k : after) add(g.compose(k, m));
      for (Mor k : before) add(g.compose(m, k));
      if (g.src(m) == g.tgt(m)) add(g.compose(m, m));
    }
    return detail::from_mask(g, in);
  }

  inline Subgroupoid generated_subgroupoid(Groupoid const&         g,
                                           std::vector<Subgroupoid> const& parts) {
    std::vector<Mor> seed;
    for (auto const& p : parts) seed.insert(seed.end(), p.morphisms.begin(), p.morphisms.end());
    Subgroupoid s = generated_subgroupoid(g, seed);
    // Parts may contribute objects that carry only units.
    for (auto const& p : parts) {
      for (Obj x : p.objects) {
        if (!s.has_object(x)) {
          s.objects.insert(std::lower_bound(s.objects.begin(), s.objects.end(), x), x);
          Mor const u = g.unit(x);
          s.morphisms.insert(std::lower_bound(s.morphisms.begin(), s.morphisms.end(), u), u);
        }
      }
    }
    return s;
  }

  /// Γ₀ = ⊔ₓ Γ(x).
  inline Subgroupoid fundamental_subgroupoid(Groupoid const& g) {
    std::vector<char> mask(g.num_morphisms(), 0);
    for (Mor m = 0; m < g.num_morphisms(); ++m) mask[m] = g.src(m) == g.tgt(m);
    Subgroupoid s = detail::from_mask(g, mask);
    return s;
  }

  /// Closure checks for a candidate subgroupoid.
  inline Report check_subgroupoid(Groupoid const& g, Subgroupoid const& s) {
    Report r;
    for (Mor m : s.morphisms) {
      if (!s.has_object(g.src(m)) || !s.has_object(g.tgt(m))) {
        r.add("objects", {g.morphism_name(m)}, "endpoint outside object subset");
      }
      if (!s.contains(g.inv(m))) r.add("inverses", {g.morphism_name(m)});
      for (Mor k : s.morphisms) {
        if (g.composable(k, m) && !s.contains(g.compose(k, m))) {
          r.add("composition", {g.morphism_name(k), g.morphism_name(m)});
        }
      }
    }
    for (Obj x : s.objects) {
      if (!s.contains(g.unit(x))) r.add("units", {g.object_name(x)});
    }
    return r;
  }

  /// Normality: f∘γ∘f⁻¹ ∈ N(y) for every f: x → y and γ ∈ N(x).
  inline Report check_normal(Groupoid const& g, Subgroupoid const& n) {
    Report r;
    for (Mor gamma : n.morphisms) {
      if (g.src(gamma) != g.tgt(gamma)) {
        r.add("loops", {g.morphism_name(gamma)}, "normal subgroupoids are wide bundles of groups");
        continue;
      }
      Obj const x = g.src(gamma);
      for (Mor f = 0; f < g.num_morphisms(); ++f) {
        if (g.src(f) != x) continue;
        Mor const c = g.compose(g.compose(f, gamma), g.inv(f));
        if (!n.contains(c)) {
          r.add("conjugation", {g.morphism_name(f), g.morphism_name(gamma)});
        }
      }
    }
    return r;
  }

  /// A subgroupoid realised as a standalone groupoid (identifiers kept) with
  /// the embedding into its parent.
  struct Embedded {
    Groupoid         groupoid;
    std::vector<Obj> obj_to_parent;
    std::vector<Mor> mor_to_parent;
    std::vector<Obj> obj_from_parent;  // npos outside
    std::vector<Mor> mor_from_parent;  // npos outside
  };

  inline Embedded materialize(Groupoid const& g, Subgroupoid const& s) {
    Report r = check_subgroupoid(g, s);
    if (!r.ok()) {
      auto const& v = r.violations().front();
      throw DomainError("not a subgroupoid: " + v.rule, v.witness);
    }
    Embedded out;
    out.obj_to_parent = s.objects;
    out.mor_to_parent = s.morphisms;
    out.obj_from_parent.assign(g.num_objects(), npos);
    out.mor_from_parent.assign(g.num_morphisms(), npos);
    GroupoidTable t;
    for (Obj i = 0; i < s.objects.size(); ++i) {
      out.obj_from_parent[s.objects[i]] = i;
      t.objects.push_back(g.object_name(s.objects[i]));
    }
    for (Mor i = 0; i < s.morphisms.size(); ++i) {
      Mor const m               = s.morphisms[i];
      out.mor_from_parent[m] = i;
      t.morphisms.push_back(g.morphism_name(m));
      t.src.push_back(out.obj_from_parent[g.src(m)]);
      t.tgt.push_back(out.obj_from_parent[g.tgt(m)]);
    }
    detail::fill_table(
        t,
        [&](Mor a, Mor b) {
          return out.mor_from_parent[g.compose(s.morphisms[a], s.morphisms[b])];
        },
        [&](Mor a) { return out.mor_from_parent[g.inv(s.morphisms[a])]; },
        [&](Obj x) { return out.mor_from_parent[g.unit(s.objects[x])]; });
    out.groupoid = Groupoid::trusted(std::move(t));
    return out;
  }

}  // namespace gf

#endif  // GF_STRUCTURE_HPP_
