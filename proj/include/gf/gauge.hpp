// Enumeration of functor fields, gauge equivalence and classical sections.
//
// Functors out of a connected groupoid are parametrised by a spanning tree
// rooted at the least object: the image of the root, the image of every tree
// morphism τ_x: root → x, and a homomorphism on the root isotropy group.
// Any α: x → y factors as τ_y ∘ (τ_y⁻¹ ∘ α ∘ τ_x) ∘ τ_x⁻¹.
#ifndef GF_GAUGE_HPP_
#define GF_GAUGE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "functor.hpp"
#include "structure.hpp"

namespace gf {

  /// Spanning-tree data for one connected component.
  struct ComponentFrame {
    Obj              root = npos;
    std::vector<Obj> objects;
    std::vector<Mor> morphisms;
    std::vector<Mor> tree;        // indexed by object; τ_x or npos outside
    std::vector<Mor> loops;       // hom(root, root)
    std::vector<Mor> generators;  // generates `loops`
  };

  inline std::vector<Mor> loop_closure(Groupoid const& g, Obj root,
                                       std::vector<Mor> const& gens) {
    std::vector<char> in(g.num_morphisms(), 0);
    std::vector<Mor>  out{g.unit(root)};
    in[g.unit(root)] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Mor s : gens) {
        Mor const x = g.compose(out[i], s);
        if (!in[x]) {
          in[x] = 1;
          out.push_back(x);
        }
      }
    }
    return out;
  }

  inline std::vector<ComponentFrame> component_frames(Groupoid const& g) {
    std::vector<ComponentFrame> out;
    for (auto const& orbit : orbits(g)) {
      ComponentFrame f;
      f.root    = orbit.front();
      f.objects = orbit;
      f.tree.assign(g.num_objects(), npos);
      for (Obj x : orbit) {
        f.tree[x] = g.hom(f.root, x).front();
        for (Obj y : orbit) {
          auto const& h = g.hom(x, y);
          f.morphisms.insert(f.morphisms.end(), h.begin(), h.end());
        }
      }
      f.tree[f.root] = g.unit(f.root);
      std::sort(f.morphisms.begin(), f.morphisms.end());
      f.loops = g.hom(f.root, f.root);
      std::vector<char> covered(g.num_morphisms(), 0);
      covered[g.unit(f.root)] = 1;
      for (Mor m : f.loops) {
        if (covered[m]) continue;
        f.generators.push_back(m);
        for (Mor c : loop_closure(g, f.root, f.generators)) covered[c] = 1;
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  namespace detail {
    // Extends generator images to a homomorphism from the isotropy group at
    // `root` of `d` into the loops at `y0` of `c`. Returns false if the
    // assignment is inconsistent with the group law.
    inline bool extend_homomorphism(Groupoid const& d, ComponentFrame const& f,
                                    Groupoid const& c, Obj y0,
                                    std::vector<Mor> const& gen_images,
                                    std::vector<Mor>&       image) {
      image.assign(d.num_morphisms(), npos);
      std::vector<Mor> queue{d.unit(f.root)};
      image[d.unit(f.root)] = c.unit(y0);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Mor const a = queue[i];
        for (std::size_t k = 0; k < f.generators.size(); ++k) {
          Mor const b   = d.compose(a, f.generators[k]);
          Mor const img = c.compose(image[a], gen_images[k]);
          if (image[b] == npos) {
            image[b] = img;
            queue.push_back(b);
          } else if (image[b] != img) {
            return false;
          }
        }
      }
      return true;
    }

    // Odometer over per-slot choice lists; calls visit(indices) until it
    // returns false or choices are exhausted.
    template <typename Visit>
    void odometer(std::vector<std::size_t> const& sizes, Visit&& visit) {
      for (std::size_t s : sizes) {
        if (s == 0) return;
      }
      std::vector<std::size_t> idx(sizes.size(), 0);
      while (true) {
        if (!visit(idx)) return;
        std::size_t k = sizes.size();
        while (k > 0) {
          --k;
          if (++idx[k] < sizes[k]) break;
          idx[k] = 0;
          if (k == 0) return;
        }
        if (sizes.empty()) return;
      }
    }

    // Images of one component's objects and morphisms under one functor.
    struct Partial {
      std::vector<Obj> obj;  // aligned with frame.objects
      std::vector<Mor> mor;  // aligned with frame.morphisms
    };

    inline std::vector<Partial> component_functors(Groupoid const& d,
                                                   ComponentFrame const& f,
                                                   Groupoid const& c,
                                                   std::size_t     cap,
                                                   bool&           truncated) {
      std::vector<Partial> out;
      std::vector<Obj>     nonroot;
      for (Obj x : f.objects) {
        if (x != f.root) nonroot.push_back(x);
      }
      for (Obj y0 = 0; y0 < c.num_objects() && out.size() <= cap; ++y0) {
        // Outgoing morphisms of y0: candidate images of tree morphisms.
        std::vector<Mor> out_y0;
        for (Mor m = 0; m < c.num_morphisms(); ++m) {
          if (c.src(m) == y0) out_y0.push_back(m);
        }
        auto const& loops_y0 = c.hom(y0, y0);
        std::vector<std::vector<Mor>> homs;
        std::vector<std::size_t>      gen_sizes(f.generators.size(), loops_y0.size());
        odometer(gen_sizes, [&](std::vector<std::size_t> const& idx) {
          std::vector<Mor> gi;
          for (std::size_t k : idx) gi.push_back(loops_y0[k]);
          std::vector<Mor> image;
          if (extend_homomorphism(d, f, c, y0, gi, image)) homs.push_back(std::move(image));
          return true;
        });
        std::vector<std::size_t> sizes(nonroot.size(), out_y0.size());
        sizes.push_back(homs.size());
        odometer(sizes, [&](std::vector<std::size_t> const& idx) {
          if (out.size() > cap) {
            truncated = true;
            return false;
          }
          std::vector<Mor> tree_img(d.num_objects(), npos);
          tree_img[f.root] = c.unit(y0);
          for (std::size_t k = 0; k < nonroot.size(); ++k) {
            tree_img[nonroot[k]] = out_y0[idx[k]];
          }
          auto const& rho = homs[idx.back()];
          Partial     p;
          for (Obj x : f.objects) p.obj.push_back(c.tgt(tree_img[x]));
          for (Mor a : f.morphisms) {
            Obj const x = d.src(a), y = d.tgt(a);
            Mor const loop = d.compose(d.inv(f.tree[y]), d.compose(a, f.tree[x]));
            p.mor.push_back(c.compose(
                tree_img[y], c.compose(rho[loop], c.inv(tree_img[x]))));
          }
          out.push_back(std::move(p));
          return true;
        });
      }
      if (out.size() > cap) {
        truncated = true;
        out.resize(cap);
      }
      return out;
    }
  }  // namespace detail

  struct FunctorEnumeration {
    std::vector<GroupoidHom> functors;
    bool                     truncated = false;
  };

  /// Every functor dom → cod, sorted canonically. When more than `limit`
  /// exist, at most `limit` are returned and `truncated` is set.
  inline FunctorEnumeration enumerate_functors(Groupoid const& dom,
                                               Groupoid const& cod,
                                               std::size_t     limit = 1000000) {
    FunctorEnumeration                    out;
    auto const                            frames = component_frames(dom);
    std::vector<std::vector<detail::Partial>> parts;
    for (auto const& f : frames) {
      parts.push_back(detail::component_functors(dom, f, cod, limit, out.truncated));
    }
    std::vector<std::size_t> sizes;
    for (auto const& p : parts) sizes.push_back(p.size());
    if (frames.empty()) {
      out.functors.push_back(GroupoidHom{dom, cod, {}, {}});
      return out;
    }
    detail::odometer(sizes, [&](std::vector<std::size_t> const& idx) {
      if (out.functors.size() >= limit) {
        out.truncated = true;
        return false;
      }
      GroupoidHom w{dom, cod, std::vector<Obj>(dom.num_objects()),
                    std::vector<Mor>(dom.num_morphisms())};
      for (std::size_t k = 0; k < frames.size(); ++k) {
        auto const& p = parts[k][idx[k]];
        for (std::size_t i = 0; i < frames[k].objects.size(); ++i) {
          w.obj_map[frames[k].objects[i]] = p.obj[i];
        }
        for (std::size_t i = 0; i < frames[k].morphisms.size(); ++i) {
          w.mor_map[frames[k].morphisms[i]] = p.mor[i];
        }
      }
      out.functors.push_back(std::move(w));
      return true;
    });
    std::sort(out.functors.begin(), out.functors.end(), canonical_less);
    out.functors.erase(std::unique(out.functors.begin(), out.functors.end()),
                       out.functors.end());
    return out;
  }

  enum class Decision { equivalent, inequivalent, undecided };

  struct GaugeSearch {
    Decision                             decision = Decision::inequivalent;
    std::optional<NaturalTransformation> transformation;
    std::size_t                          candidates = 0;
  };

  /// Searches for an invertible natural transformation a ⇒ b. On each
  /// component the root component c_r determines the rest:
  /// c(x) = b(τ_x) ∘ c_r ∘ a(τ_x)⁻¹.
  inline GaugeSearch find_gauge_transformation(GroupoidHom const& a,
                                               GroupoidHom const& b,
                                               std::size_t budget = 1000000) {
    if (!parallel(a, b)) throw DomainError("gauge search needs parallel functors");
    GaugeSearch out;
    auto const& d = a.dom;
    auto const& c = a.cod;
    std::vector<Mor> comp(d.num_objects(), npos);
    for (auto const& f : component_frames(d)) {
      bool found = false;
      for (Mor cr : c.hom(a.obj_map[f.root], b.obj_map[f.root])) {
        if (++out.candidates > budget) {
          out.decision = Decision::undecided;
          return out;
        }
        for (Obj x : f.objects) {
          comp[x] = c.compose(b.mor_map[f.tree[x]],
                              c.compose(cr, c.inv(a.mor_map[f.tree[x]])));
        }
        bool natural = true;
        for (Mor m : f.morphisms) {
          if (c.compose(b.mor_map[m], comp[d.src(m)])
              != c.compose(comp[d.tgt(m)], a.mor_map[m])) {
            natural = false;
            break;
          }
        }
        if (natural) {
          found = true;
          break;
        }
      }
      if (!found) return out;
    }
    out.decision       = Decision::equivalent;
    out.transformation = NaturalTransformation{a, b, comp};
    return out;
  }

  struct GaugePartition {
    // Indices into the input list. Each class is sorted canonically by
    // functor, so front() is the canonical representative; classes are
    // ordered by representative.
    std::vector<std::vector<std::size_t>>          classes;
    std::vector<std::pair<std::size_t, std::size_t>> undecided;
  };

  inline GaugePartition gauge_classes(std::vector<GroupoidHom> const& funs,
                                      std::size_t budget = 1000000) {
    GaugePartition           out;
    std::vector<std::size_t> order(funs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return canonical_less(funs[x], funs[y]);
    });
    for (std::size_t i : order) {
      if (!parallel(funs[i], funs[order.front()])) {
        throw DomainError("gauge classes need parallel functors");
      }
      bool placed = false;
      for (auto& cls : out.classes) {
        auto s = find_gauge_transformation(funs[cls.front()], funs[i], budget);
        if (s.decision == Decision::equivalent) {
          cls.push_back(i);
          placed = true;
          break;
        }
        if (s.decision == Decision::undecided) out.undecided.emplace_back(cls.front(), i);
      }
      if (!placed) out.classes.push_back({i});
    }
    return out;
  }

  /// φ(x) = W(x) for W out of a unit groupoid, checked against proj∘φ = id.
  inline std::vector<Obj> classical_section(GroupoidHom const&      w,
                                            std::vector<Obj> const& proj) {
    check_maps(w);
    for (Mor m = 0; m < w.dom.num_morphisms(); ++m) {
      if (!w.dom.is_unit(m)) {
        throw DomainError("classical section needs a unit-groupoid domain",
                          {w.dom.morphism_name(m)});
      }
    }
    if (proj.size() != w.cod.num_objects()) {
      throw DomainError("projection must be total on codomain objects");
    }
    for (Obj x = 0; x < w.dom.num_objects(); ++x) {
      if (proj[w.obj_map[x]] != x) {
        throw DomainError("section condition fails",
                          {w.dom.object_name(x), w.cod.object_name(w.obj_map[x])});
      }
    }
    return w.obj_map;
  }

}  // namespace gf

#endif  // GF_GAUGE_HPP_
