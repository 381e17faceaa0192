// Standard groupoids and groups: unit, pair, group, action, products,
// fibered products and pull-backs.
#ifndef GF_CONSTRUCTIONS_HPP_
#define GF_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "groupoid.hpp"

namespace gf {

  namespace detail {
    inline std::string tuple_name(std::initializer_list<std::string> parts) {
      std::string out = "(";
      bool        first = true;
      for (auto const& p : parts) {
        if (!first) out += ',';
        out += p;
        first = false;
      }
      return out + ")";
    }

    // Fill comp/inv/unit of a table whose objects, morphisms, src and tgt are
    // already set, from callbacks valid on composable pairs.
    template <typename Compose, typename Inverse, typename Unit>
    void fill_table(GroupoidTable& t, Compose&& compose, Inverse&& inverse,
                    Unit&& unit) {
      std::size_t const nm = t.morphisms.size();
      t.inv.assign(nm, npos);
      t.comp.assign(nm * nm, npos);
      t.unit.assign(t.objects.size(), npos);
      std::vector<std::vector<Mor>> from(t.objects.size());
      for (Mor m = 0; m < nm; ++m) from[t.src[m]].push_back(m);
      for (Mor f = 0; f < nm; ++f) {
        t.inv[f] = inverse(f);
        for (Mor g : from[t.tgt[f]]) t.at(g, f) = compose(g, f);
      }
      for (Obj x = 0; x < t.objects.size(); ++x) t.unit[x] = unit(x);
    }
  }  // namespace detail

  /// 1_X: only identities. Morphisms are named `1_x`.
  inline Groupoid unit_groupoid(std::vector<std::string> const& objects) {
    GroupoidTable t;
    t.objects = objects;
    for (Obj x = 0; x < objects.size(); ++x) {
      t.morphisms.push_back("1_" + objects[x]);
      t.src.push_back(x);
      t.tgt.push_back(x);
    }
    detail::fill_table(
        t, [](Mor g, Mor) { return g; }, [](Mor f) { return f; },
        [](Obj x) { return Mor(x); });
    return Groupoid::trusted(std::move(t));
  }

  /// P(X) = X × X. The morphism x → y is named `(y,x)`; (z,y)∘(y,x) = (z,x).
  inline Groupoid pair_groupoid(std::vector<std::string> const& objects) {
    GroupoidTable     t;
    std::size_t const n = objects.size();
    t.objects           = objects;
    for (Obj y = 0; y < n; ++y) {
      for (Obj x = 0; x < n; ++x) {
        t.morphisms.push_back(detail::tuple_name({objects[y], objects[x]}));
        t.src.push_back(x);
        t.tgt.push_back(y);
      }
    }
    auto id = [n](Obj y, Obj x) { return Mor(y * n + x); };
    detail::fill_table(
        t,
        [&](Mor g, Mor f) { return id(Obj(g / n), Obj(f % n)); },
        [&](Mor f) { return id(Obj(f % n), Obj(f / n)); },
        [&](Obj x) { return id(x, x); });
    return Groupoid::trusted(std::move(t));
  }

  /// Builds a group from its multiplication table. Throws DomainError if the
  /// table is not a group.
  inline Group group_from_table(std::vector<std::string>           names,
                                std::vector<std::vector<Mor>> const& mul,
                                std::string const& object = "*") {
    GroupoidTable     t;
    std::size_t const n = names.size();
    t.objects           = {object};
    t.morphisms         = std::move(names);
    t.src.assign(n, 0);
    t.tgt.assign(n, 0);
    t.comp.assign(n * n, npos);
    t.inv.assign(n, npos);
    t.unit.assign(1, npos);
    if (mul.size() != n) throw MalformedError("group table has wrong size");
    for (Mor a = 0; a < n; ++a) {
      if (mul[a].size() != n) throw MalformedError("group table has wrong size");
      for (Mor b = 0; b < n; ++b) {
        if (mul[a][b] >= n) throw MalformedError("group table entry out of range");
        t.at(a, b) = mul[a][b];
      }
    }
    for (Mor e = 0; e < n && t.unit[0] == npos; ++e) {
      bool ok = true;
      for (Mor a = 0; a < n && ok; ++a) ok = t.at(e, a) == a && t.at(a, e) == a;
      if (ok) t.unit[0] = e;
    }
    if (t.unit[0] != npos) {
      for (Mor a = 0; a < n; ++a) {
        for (Mor b = 0; b < n; ++b) {
          if (t.at(a, b) == t.unit[0] && t.at(b, a) == t.unit[0]) {
            t.inv[a] = b;
            break;
          }
        }
      }
    }
    return Group(Groupoid::from_table(std::move(t)));
  }

  /// Z_n with elements "0".."n-1".
  inline Group cyclic_group(std::size_t n) {
    if (n == 0) throw DomainError("cyclic group of order 0");
    std::vector<std::string>      names;
    std::vector<std::vector<Mor>> mul(n, std::vector<Mor>(n));
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) mul[a][b] = Mor((a + b) % n);
    }
    return group_from_table(std::move(names), mul);
  }

  /// S_n (n ≤ 9). Elements are one-line permutations of "1".."n" in
  /// lexicographic order; (a·b)(i) = a(b(i)).
  inline Group symmetric_group(std::size_t n) {
    if (n == 0 || n > 9) throw DomainError("symmetric group degree out of range");
    std::vector<std::vector<int>> perms;
    std::vector<int>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string>               names;
    std::unordered_map<std::string, Mor>   index;
    for (auto const& q : perms) {
      std::string s;
      for (int v : q) s += char('1' + v);
      index.emplace(s, Mor(names.size()));
      names.push_back(s);
    }
    std::vector<std::vector<Mor>> mul(perms.size(),
                                      std::vector<Mor>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s += char('1' + perms[a][perms[b][i]]);
        mul[a][b] = index.at(s);
      }
    }
    return group_from_table(std::move(names), mul);
  }

  /// G × H with elements named `(g,h)`.
  inline Group direct_product(Group const& g, Group const& h) {
    std::size_t const        n = g.order(), m = h.order();
    std::vector<std::string> names;
    for (Mor a = 0; a < n; ++a) {
      for (Mor b = 0; b < m; ++b) {
        names.push_back(detail::tuple_name({g.name(a), h.name(b)}));
      }
    }
    std::vector<std::vector<Mor>> mul(n * m, std::vector<Mor>(n * m));
    for (Mor x = 0; x < n * m; ++x) {
      for (Mor y = 0; y < n * m; ++y) {
        mul[x][y] = Mor(g.mul(Mor(x / m), Mor(y / m)) * m
                        + h.mul(Mor(x % m), Mor(y % m)));
      }
    }
    return group_from_table(std::move(names), mul);
  }

  /// Subgroup generated by `gens`; elements keep their names from `g`.
  struct Subgroup {
    Group            group;
    std::vector<Mor> to_parent;
  };

  inline std::vector<Mor> subgroup_closure(Group const&            g,
                                           std::vector<Mor> const& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<Mor>  elems{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Mor s : gens) {
        Mor const x = g.mul(elems[i], s);
        if (!in[x]) {
          in[x] = 1;
          elems.push_back(x);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  inline Subgroup subgroup_generated(Group const& g, std::vector<Mor> const& gens) {
    std::vector<Mor> elems = subgroup_closure(g, gens);
    std::vector<Mor> local(g.order(), npos);
    for (Mor i = 0; i < elems.size(); ++i) local[elems[i]] = i;
    std::vector<std::string>      names;
    std::vector<std::vector<Mor>> mul(elems.size(), std::vector<Mor>(elems.size()));
    for (Mor i = 0; i < elems.size(); ++i) {
      names.push_back(g.name(elems[i]));
      for (Mor j = 0; j < elems.size(); ++j) {
        mul[i][j] = local[g.mul(elems[i], elems[j])];
      }
    }
    return {group_from_table(std::move(names), mul,
                             g.groupoid().object_name(0)),
            std::move(elems)};
  }

  /// Group action given as act[g][x] = g·x. Throws DomainError if it is not
  /// a left action.
  inline void check_action(Group const& g, std::size_t npoints,
                           std::vector<std::vector<Obj>> const& act) {
    if (act.size() != g.order()) throw MalformedError("action table has wrong size");
    for (auto const& row : act) {
      if (row.size() != npoints) throw MalformedError("action table has wrong size");
      for (Obj y : row) {
        if (y >= npoints) throw MalformedError("action point out of range");
      }
    }
    for (Obj x = 0; x < npoints; ++x) {
      if (act[g.identity()][x] != x) {
        throw DomainError("identity does not act trivially",
                          {std::to_string(x)});
      }
      for (Mor a = 0; a < g.order(); ++a) {
        for (Mor b = 0; b < g.order(); ++b) {
          if (act[g.mul(a, b)][x] != act[a][act[b][x]]) {
            throw DomainError("not an action", {g.name(a), g.name(b),
                                                std::to_string(x)});
          }
        }
      }
    }
  }

  /// G ⋉ X: morphisms (g,x): x → g·x, composed (g',g·x)∘(g,x) = (g'g, x).
  inline Groupoid action_groupoid(Group const&                          g,
                                  std::vector<std::string> const&       points,
                                  std::vector<std::vector<Obj>> const& act) {
    check_action(g, points.size(), act);
    std::size_t const n = g.order();
    GroupoidTable     t;
    t.objects = points;
    for (Obj x = 0; x < points.size(); ++x) {
      for (Mor a = 0; a < n; ++a) {
        t.morphisms.push_back(detail::tuple_name({g.name(a), points[x]}));
        t.src.push_back(x);
        t.tgt.push_back(act[a][x]);
      }
    }
    auto id = [n](Mor a, Obj x) { return Mor(x * n + a); };
    detail::fill_table(
        t,
        [&](Mor h, Mor f) { return id(g.mul(Mor(h % n), Mor(f % n)), Obj(f / n)); },
        [&](Mor f) {
          Mor const a = Mor(f % n);
          return id(g.inv(a), act[a][f / n]);
        },
        [&](Obj x) { return id(g.identity(), x); });
    return Groupoid::trusted(std::move(t));
  }

  /// A × B with componentwise composition; names `(a,b)` and `(α,β)`.
  inline Groupoid product(Groupoid const& a, Groupoid const& b) {
    std::size_t const bo = b.num_objects(), bm = b.num_morphisms();
    GroupoidTable     t;
    for (Obj x = 0; x < a.num_objects(); ++x) {
      for (Obj y = 0; y < bo; ++y) {
        t.objects.push_back(detail::tuple_name({a.object_name(x), b.object_name(y)}));
      }
    }
    for (Mor f = 0; f < a.num_morphisms(); ++f) {
      for (Mor g = 0; g < bm; ++g) {
        t.morphisms.push_back(
            detail::tuple_name({a.morphism_name(f), b.morphism_name(g)}));
        t.src.push_back(Obj(a.src(f) * bo + b.src(g)));
        t.tgt.push_back(Obj(a.tgt(f) * bo + b.tgt(g)));
      }
    }
    detail::fill_table(
        t,
        [&](Mor h, Mor f) {
          return Mor(a.compose(Mor(h / bm), Mor(f / bm)) * bm
                     + b.compose(Mor(h % bm), Mor(f % bm)));
        },
        [&](Mor f) { return Mor(a.inv(Mor(f / bm)) * bm + b.inv(Mor(f % bm))); },
        [&](Obj x) { return Mor(a.unit(Obj(x / bo)) * bm + b.unit(Obj(x % bo))); });
    return Groupoid::trusted(std::move(t));
  }

  /// A ⊔ B. Identifiers must be distinct across the two summands.
  inline Groupoid disjoint_union(Groupoid const& a, Groupoid const& b) {
    GroupoidTable     t;
    Obj const         ao = Obj(a.num_objects());
    Mor const         am = Mor(a.num_morphisms());
    t.objects            = a.object_names();
    t.objects.insert(t.objects.end(), b.object_names().begin(),
                     b.object_names().end());
    t.morphisms = a.morphism_names();
    t.morphisms.insert(t.morphisms.end(), b.morphism_names().begin(),
                       b.morphism_names().end());
    for (Mor m = 0; m < am; ++m) {
      t.src.push_back(a.src(m));
      t.tgt.push_back(a.tgt(m));
    }
    for (Mor m = 0; m < b.num_morphisms(); ++m) {
      t.src.push_back(b.src(m) + ao);
      t.tgt.push_back(b.tgt(m) + ao);
    }
    detail::fill_table(
        t,
        [&](Mor g, Mor f) {
          return g < am ? a.compose(g, f) : b.compose(g - am, f - am) + am;
        },
        [&](Mor f) { return f < am ? a.inv(f) : b.inv(f - am) + am; },
        [&](Obj x) { return x < ao ? a.unit(x) : b.unit(x - ao) + am; });
    return Groupoid::trusted(std::move(t));
  }

  /// H ×_Ω K: pairs (α,σ) with equal source and equal target.
  struct FiberedProduct {
    Groupoid         groupoid;
    std::vector<Mor> first;
    std::vector<Mor> second;
  };

  inline FiberedProduct fibered_product(Groupoid const& h, Groupoid const& k) {
    if (h.object_names() != k.object_names()) {
      throw DomainError("fibered product needs a common object set");
    }
    FiberedProduct out;
    GroupoidTable  t;
    t.objects = h.object_names();
    std::unordered_map<std::uint64_t, Mor> index;
    auto key = [](Mor a, Mor b) { return (std::uint64_t(a) << 32) | b; };
    for (Mor a = 0; a < h.num_morphisms(); ++a) {
      for (Mor b : k.hom(h.src(a), h.tgt(a))) {
        index.emplace(key(a, b), Mor(t.morphisms.size()));
        t.morphisms.push_back(
            detail::tuple_name({h.morphism_name(a), k.morphism_name(b)}));
        t.src.push_back(h.src(a));
        t.tgt.push_back(h.tgt(a));
        out.first.push_back(a);
        out.second.push_back(b);
      }
    }
    detail::fill_table(
        t,
        [&](Mor g, Mor f) {
          return index.at(key(h.compose(out.first[g], out.first[f]),
                              k.compose(out.second[g], out.second[f])));
        },
        [&](Mor f) {
          return index.at(key(h.inv(out.first[f]), k.inv(out.second[f])));
        },
        [&](Obj x) { return index.at(key(h.unit(x), k.unit(x))); });
    out.groupoid = Groupoid::trusted(std::move(t));
    return out;
  }

  /// π*P for P over Σ and π: Ω → Σ: triples (b, σ, a) with σ: π(a) → π(b).
  /// `base[m]` is the σ of morphism m; source and target give a and b.
  struct Pullback {
    Groupoid         groupoid;
    std::vector<Mor> base;
  };

  inline Pullback pullback_groupoid(Groupoid const&                 p,
                                    std::vector<std::string> const& omega,
                                    std::vector<Obj> const&         proj) {
    if (proj.size() != omega.size()) {
      throw DomainError("projection must be total on the object set");
    }
    for (Obj s : proj) {
      if (s >= p.num_objects()) throw MalformedError("projection out of range");
    }
    Pullback          out;
    GroupoidTable     t;
    std::size_t const no = omega.size();
    t.objects            = omega;
    std::unordered_map<std::uint64_t, Mor> index;
    // (b, σ, a) keyed as (σ * no + b) * no + a
    auto key = [no](Obj b, Mor s, Obj a) {
      return (std::uint64_t(s) * no + b) * no + a;
    };
    for (Obj a = 0; a < no; ++a) {
      for (Obj b = 0; b < no; ++b) {
        for (Mor s : p.hom(proj[a], proj[b])) {
          index.emplace(key(b, s, a), Mor(t.morphisms.size()));
          t.morphisms.push_back(
              detail::tuple_name({omega[b], p.morphism_name(s), omega[a]}));
          t.src.push_back(a);
          t.tgt.push_back(b);
          out.base.push_back(s);
        }
      }
    }
    detail::fill_table(
        t,
        [&](Mor g, Mor f) {
          return index.at(key(t.tgt[g], p.compose(out.base[g], out.base[f]),
                              t.src[f]));
        },
        [&](Mor f) { return index.at(key(t.src[f], p.inv(out.base[f]), t.tgt[f])); },
        [&](Obj x) { return index.at(key(x, p.unit(proj[x]), x)); });
    out.groupoid = Groupoid::trusted(std::move(t));
    return out;
  }

  /// Same groupoid with objects and morphisms renumbered:
  /// new object i is old object obj_perm[i], likewise for morphisms.
  inline Groupoid relabel(Groupoid const& g, std::vector<Obj> const& obj_perm,
                          std::vector<Mor> const& mor_perm) {
    std::vector<Obj> obj_new(g.num_objects());
    std::vector<Mor> mor_new(g.num_morphisms());
    for (Obj i = 0; i < obj_perm.size(); ++i) obj_new[obj_perm[i]] = i;
    for (Mor i = 0; i < mor_perm.size(); ++i) mor_new[mor_perm[i]] = i;
    GroupoidTable t;
    for (Obj i = 0; i < obj_perm.size(); ++i) t.objects.push_back(g.object_name(obj_perm[i]));
    for (Mor i = 0; i < mor_perm.size(); ++i) {
      t.morphisms.push_back(g.morphism_name(mor_perm[i]));
      t.src.push_back(obj_new[g.src(mor_perm[i])]);
      t.tgt.push_back(obj_new[g.tgt(mor_perm[i])]);
    }
    detail::fill_table(
        t,
        [&](Mor a, Mor b) { return mor_new[g.compose(mor_perm[a], mor_perm[b])]; },
        [&](Mor a) { return mor_new[g.inv(mor_perm[a])]; },
        [&](Obj x) { return mor_new[g.unit(obj_perm[x])]; });
    return Groupoid::trusted(std::move(t));
  }

}  // namespace gf

#endif  // GF_CONSTRUCTIONS_HPP_
