// Coverings of subgroupoids by restrictions, factorization through a
// covering, covering axioms and gluing of compatible local functors.
#ifndef GF_LOCAL_SHEAF_HPP_
#define GF_LOCAL_SHEAF_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "functor.hpp"
#include "structure.hpp"

namespace gf {

  /// A target subgroupoid H over U and object subsets U_i whose union is U.
  /// Part i is H restricted to U_i.
  struct Covering {
    Subgroupoid                   target;
    std::vector<std::vector<Obj>> parts;
  };

  namespace detail {
    inline std::string object_list(Groupoid const& g, std::vector<Obj> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? "," : "") + g.object_name(xs[i]);
      }
      return out + "}";
    }
  }  // namespace detail

  /// Restriction covering of parent_U by the given object subsets.
  inline Covering restriction_covering(Groupoid const& parent, std::vector<Obj> const& u,
                                       std::vector<std::vector<Obj>> parts) {
    for (auto& p : parts) {
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return Covering{restriction(parent, u), std::move(parts)};
  }

  /// Throws DomainError unless the parts lie in U and cover it.
  inline void check_covering(Groupoid const& parent, Covering const& c) {
    Report r = check_subgroupoid(parent, c.target);
    if (!r.ok()) throw DomainError("covering target is not a subgroupoid", r.violations().front().witness);
    std::vector<char> covered(parent.num_objects(), 0);
    for (auto const& p : c.parts) {
      for (Obj x : p) {
        if (x >= parent.num_objects() || !c.target.has_object(x)) {
          throw DomainError("part leaves the covered object set",
                            {x < parent.num_objects() ? parent.object_name(x) : std::to_string(x)});
        }
        covered[x] = 1;
      }
    }
    for (Obj x : c.target.objects) {
      if (!covered[x]) throw DomainError("parts do not cover the object set", {parent.object_name(x)});
    }
  }

  inline Subgroupoid part(Groupoid const& parent, Covering const& c, std::size_t i) {
    return restriction(parent, c.target, c.parts.at(i));
  }

  inline std::vector<Subgroupoid> parts(Groupoid const& parent, Covering const& c) {
    std::vector<Subgroupoid> out;
    for (std::size_t i = 0; i < c.parts.size(); ++i) out.push_back(part(parent, c, i));
    return out;
  }

  /// True when the parts generate the whole target.
  inline bool generates(Groupoid const& parent, Covering const& c) {
    return generated_subgroupoid(parent, parts(parent, c)) == c.target;
  }

  /// Per-U candidate coverings of parent_U.
  struct LocalCandidates {
    std::vector<Obj>                           u;
    std::vector<std::vector<std::vector<Obj>>> coverings;
  };

  /// One violation per U for which no candidate covering generates parent_U.
  inline Report is_locally_generated(Groupoid const& g,
                                     std::vector<LocalCandidates> const& family) {
    Report r;
    for (auto const& f : family) {
      bool ok = false;
      for (auto const& ps : f.coverings) {
        Covering c = restriction_covering(g, f.u, ps);
        check_covering(g, c);
        ok = ok || generates(g, c);
      }
      if (!ok) r.add("locally-generated", {detail::object_list(g, restriction(g, f.u).objects)});
    }
    return r;
  }

  enum class FactorStatus { ok, no_factorization, budget_exhausted };

  struct Factorization {
    FactorStatus             status = FactorStatus::ok;
    std::vector<Mor>         factors;  // application order: factors[0] first
    std::vector<std::size_t> part_of;  // part index per factor
    std::size_t              nodes = 0;
  };

  /// α = α_r ∘ ⋯ ∘ α_1 with each α_k in one part, found by breadth-first
  /// search over objects linked through a shared part. Intermediate factors
  /// are the least target morphisms between consecutive objects; the last
  /// factor absorbs the remainder. `reversed` scans candidates in descending
  /// order and so usually finds a different factorization.
  inline Factorization factorize(Groupoid const& parent, Covering const& c, Mor alpha,
                                 std::size_t budget = 100000, bool reversed = false) {
    if (!c.target.contains(alpha)) throw DomainError("morphism not in covering target", {parent.morphism_name(alpha)});
    Factorization out;
    Obj const     x = parent.src(alpha), y = parent.tgt(alpha);
    std::size_t const np = c.parts.size();
    auto in_part = [&](std::size_t i, Obj v) {
      return std::binary_search(c.parts[i].begin(), c.parts[i].end(), v);
    };
    auto part_order = [&](std::size_t k) { return reversed ? np - 1 - k : k; };
    for (std::size_t k = 0; k < np; ++k) {
      std::size_t const i = part_order(k);
      if (in_part(i, x) && in_part(i, y)) {
        out.factors = {alpha};
        out.part_of = {i};
        return out;
      }
    }
    // least target morphism u → v, npos if none
    auto least = [&](Obj u, Obj v) -> Mor {
      for (Mor m : parent.hom(u, v)) {
        if (c.target.contains(m)) return m;
      }
      return npos;
    };
    std::vector<Obj>         objs = c.target.objects;
    if (reversed) std::reverse(objs.begin(), objs.end());
    std::vector<Obj>         prev(parent.num_objects(), npos);
    std::vector<std::size_t> via(parent.num_objects(), npos);
    std::vector<Obj>         queue{x};
    prev[x] = x;
    bool found = false;
    for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
      Obj const u = queue[qi];
      for (Obj v : objs) {
        if (prev[v] != npos) continue;
        if (++out.nodes > budget) {
          out.status = FactorStatus::budget_exhausted;
          return out;
        }
        std::size_t shared = npos;
        for (std::size_t k = 0; k < np && shared == npos; ++k) {
          std::size_t const i = part_order(k);
          if (in_part(i, u) && in_part(i, v)) shared = i;
        }
        if (shared == npos || least(u, v) == npos) continue;
        prev[v] = u;
        via[v]  = shared;
        if (v == y) {
          found = true;
          break;
        }
        queue.push_back(v);
      }
    }
    if (!found) {
      out.status = FactorStatus::no_factorization;
      return out;
    }
    std::vector<Obj> path{y};
    while (path.back() != x) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    Mor so_far = parent.unit(x);
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
      Mor const s = least(path[k - 1], path[k]);
      out.factors.push_back(s);
      out.part_of.push_back(via[path[k]]);
      so_far = parent.compose(s, so_far);
    }
    out.factors.push_back(parent.compose(alpha, parent.inv(so_far)));
    out.part_of.push_back(via[y]);
    return out;
  }

  /// Every factor lies in its declared part and the factors recompose to α.
  inline Report check_factorization(Groupoid const& parent, Covering const& c, Mor alpha,
                                    Factorization const& f) {
    Report r;
    if (f.status != FactorStatus::ok) return r;
    Mor acc = parent.unit(parent.src(alpha));
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      if (!part(parent, c, f.part_of[k]).contains(f.factors[k])) {
        r.add("factor-part", {parent.morphism_name(f.factors[k])});
      }
      acc = parent.try_compose(f.factors[k], acc);
      if (acc == npos) {
        r.add("factor-chain", {parent.morphism_name(f.factors[k])});
        return r;
      }
    }
    if (acc != alpha) r.add("recompose", {parent.morphism_name(alpha)});
    return r;
  }

  /// Materialised target and parts.
  struct CoveringEmbedding {
    Embedded              target;
    std::vector<Embedded> parts;
  };

  inline CoveringEmbedding embed(Groupoid const& parent, Covering const& c) {
    check_covering(parent, c);
    CoveringEmbedding e{materialize(parent, c.target), {}};
    for (auto const& p : parts(parent, c)) e.parts.push_back(materialize(parent, p));
    return e;
  }

  /// Restrictions of a functor on the target to every part.
  inline std::vector<GroupoidHom> restrict_to_parts(CoveringEmbedding const& e,
                                                    GroupoidHom const&       w) {
    if (!(w.dom == e.target.groupoid)) throw DomainError("functor is not defined on the covering target");
    std::vector<GroupoidHom> out;
    for (auto const& p : e.parts) {
      GroupoidHom r{p.groupoid, w.cod, {}, {}};
      for (Obj x : p.obj_to_parent) r.obj_map.push_back(w.obj_map[e.target.obj_from_parent[x]]);
      for (Mor m : p.mor_to_parent) r.mor_map.push_back(w.mor_map[e.target.mor_from_parent[m]]);
      out.push_back(std::move(r));
    }
    return out;
  }

  /// Disagreements of local functors on pairwise intersections.
  inline Report check_compatible(Groupoid const& parent, CoveringEmbedding const& e,
                                 std::vector<GroupoidHom> const& locals) {
    if (locals.size() != e.parts.size()) throw DomainError("one local functor per part is required");
    for (std::size_t i = 0; i < locals.size(); ++i) {
      if (!(locals[i].dom == e.parts[i].groupoid)) {
        throw DomainError("local functor domain differs from its part", {std::to_string(i)});
      }
      if (!(locals[i].cod == locals[0].cod)) throw DomainError("local functors need a common codomain");
      check_maps(locals[i]);
    }
    Report r;
    for (std::size_t i = 0; i < locals.size(); ++i) {
      for (std::size_t j = i + 1; j < locals.size(); ++j) {
        auto const& pi = e.parts[i];
        auto const& pj = e.parts[j];
        for (Obj x : pi.obj_to_parent) {
          Obj const xj = pj.obj_from_parent[x];
          if (xj != npos && locals[i].obj_map[pi.obj_from_parent[x]] != locals[j].obj_map[xj]) {
            r.add("compatible", {parent.object_name(x)});
          }
        }
        for (Mor m : pi.mor_to_parent) {
          Mor const mj = pj.mor_from_parent[m];
          if (mj != npos && locals[i].mor_map[pi.mor_from_parent[m]] != locals[j].mor_map[mj]) {
            r.add("compatible", {parent.morphism_name(m)});
          }
        }
      }
    }
    return r;
  }

  /// The functor on the target restricting to each local functor, computed
  /// through a factorization and cross-checked against the reversed one.
  inline GroupoidHom glue(Groupoid const& parent, Covering const& c,
                          std::vector<GroupoidHom> const& locals,
                          std::size_t                     budget = 100000) {
    auto   e = embed(parent, c);
    Report r = check_compatible(parent, e, locals);
    if (!r.ok()) {
      throw DomainError("local functors disagree on an intersection", r.violations().front().witness);
    }
    auto const& cod = locals.front().cod;
    GroupoidHom w{e.target.groupoid, cod, std::vector<Obj>(e.target.obj_to_parent.size(), npos), {}};
    for (std::size_t i = 0; i < e.parts.size(); ++i) {
      for (Obj k = 0; k < e.parts[i].obj_to_parent.size(); ++k) {
        w.obj_map[e.target.obj_from_parent[e.parts[i].obj_to_parent[k]]] = locals[i].obj_map[k];
      }
    }
    auto image = [&](Factorization const& f) {
      Mor acc = npos;
      for (std::size_t k = 0; k < f.factors.size(); ++k) {
        std::size_t const i = f.part_of[k];
        Mor const img = locals[i].mor_map[e.parts[i].mor_from_parent[f.factors[k]]];
        acc = acc == npos ? img : cod.compose(img, acc);
      }
      return acc;
    };
    for (Mor m : e.target.mor_to_parent) {
      auto f = factorize(parent, c, m, budget);
      if (f.status == FactorStatus::budget_exhausted) {
        throw DomainError("factorization budget exhausted", {parent.morphism_name(m)});
      }
      if (f.status == FactorStatus::no_factorization) {
        throw DomainError("covering does not generate its target", {parent.morphism_name(m)});
      }
      Mor const img = image(f);
      auto      f2  = factorize(parent, c, m, budget, true);
      if (f2.status == FactorStatus::ok && image(f2) != img) {
        throw DomainError("glued value depends on the factorization", {parent.morphism_name(m)});
      }
      w.mor_map.push_back(img);
    }
    return w;
  }

  /// Axioms of a site of restriction coverings:
  /// identity, every {H} is in the site; generate, every covering generates;
  /// refinement, refining parts by site coverings still generates;
  /// pullback, parts intersected with K generate K for every site target and
  /// every restriction of a target contained in it.
  inline Report check_covering_axioms(Groupoid const& parent, std::vector<Covering> const& site) {
    for (auto const& c : site) check_covering(parent, c);
    Report r;
    auto   has_covering = [&](Subgroupoid const& t, std::vector<std::vector<Obj>> ps) {
      for (auto& p : ps) std::sort(p.begin(), p.end());
      std::sort(ps.begin(), ps.end());
      for (auto const& c : site) {
        if (!(c.target == t)) continue;
        auto q = c.parts;
        std::sort(q.begin(), q.end());
        if (q == ps) return true;
      }
      return false;
    };
    for (auto const& c : site) {
      std::string const name = detail::object_list(parent, c.target.objects);
      if (!has_covering(c.target, {c.target.objects})) r.add("identity", {name});
      if (!generates(parent, c)) r.add("generate", {name});

      for (std::size_t i = 0; i < c.parts.size(); ++i) {
        Subgroupoid const pi = part(parent, c, i);
        for (auto const& d : site) {
          if (!(d.target == pi)) continue;
          Covering refined{c.target, {}};
          for (std::size_t j = 0; j < c.parts.size(); ++j) {
            if (j != i) refined.parts.push_back(c.parts[j]);
          }
          for (auto const& q : d.parts) refined.parts.push_back(q);
          if (!generates(parent, refined)) {
            r.add("refinement", {name, detail::object_list(parent, c.parts[i])});
          }
        }
      }

      std::vector<Subgroupoid> pullbacks;
      for (auto const& d : site) {
        if (is_subset(d.target, c.target)) pullbacks.push_back(d.target);
      }
      std::size_t const n = c.target.objects.size();
      if (n < 20) {
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
          std::vector<Obj> v;
          for (std::size_t b = 0; b < n; ++b) {
            if (mask >> b & 1) v.push_back(c.target.objects[b]);
          }
          pullbacks.push_back(restriction(parent, c.target, v));
        }
      }
      for (auto const& k : pullbacks) {
        std::vector<Subgroupoid> induced;
        for (auto const& p : parts(parent, c)) induced.push_back(intersection(p, k));
        if (!(generated_subgroupoid(parent, induced) == k)) {
          r.add("pullback", {name, detail::object_list(parent, k.objects)});
        }
      }
    }
    return r;
  }

}  // namespace gf

#endif  // GF_LOCAL_SHEAF_HPP_
