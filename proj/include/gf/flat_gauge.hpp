// Flat gauge fields on combinatorial 2-complexes.
//
// Paths are words of signed edges read left to right; the holonomy of
// e1 e2 … ek is l(ek) ∘ … ∘ l(e1), matching groupoid composition order.
// Vertex gauge transformations act by l'(e) = g(t(e)) l(e) g(s(e))⁻¹.
#ifndef GF_FLAT_GAUGE_HPP_
#define GF_FLAT_GAUGE_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "gauge.hpp"
#include "reconstruction.hpp"

namespace gf {

  struct Letter {
    std::uint32_t symbol = 0;
    bool          inverse = false;
    friend bool operator==(Letter const&, Letter const&) = default;
  };
  using Word = std::vector<Letter>;

  inline Word free_reduce(Word const& w) {
    Word out;
    for (Letter l : w) {
      if (!out.empty() && out.back().symbol == l.symbol && out.back().inverse != l.inverse) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  inline Word invert(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& l : out) l.inverse = !l.inverse;
    return out;
  }

  struct Edge {
    std::string name;
    Obj         src = 0;
    Obj         tgt = 0;
  };

  struct TwoComplex {
    std::vector<std::string> vertices;
    std::vector<Edge>        edges;
    std::vector<Word>        faces;  // letters name edges

    Obj start(Letter l) const { return l.inverse ? edges[l.symbol].tgt : edges[l.symbol].src; }
    Obj end(Letter l) const { return l.inverse ? edges[l.symbol].src : edges[l.symbol].tgt; }
  };

  /// Throws unless the word is a contiguous edge path; returns its endpoints.
  inline std::pair<Obj, Obj> path_endpoints(TwoComplex const& c, Word const& w, Obj from) {
    Obj at = from;
    for (Letter l : w) {
      if (l.symbol >= c.edges.size()) throw MalformedError("unknown edge in path");
      if (c.start(l) != at) {
        throw DomainError("path is not contiguous", {c.edges[l.symbol].name});
      }
      at = c.end(l);
    }
    return {from, at};
  }

  inline void check_complex(TwoComplex const& c) {
    for (auto const& e : c.edges) {
      if (e.src >= c.vertices.size() || e.tgt >= c.vertices.size()) {
        throw MalformedError("edge " + e.name + " has an unknown endpoint");
      }
    }
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
      auto const& w = c.faces[f];
      if (w.empty()) throw DomainError("empty face", {std::to_string(f)});
      auto [a, b] = path_endpoints(c, w, c.start(w.front()));
      if (a != b) throw DomainError("face is not closed", {std::to_string(f)});
    }
  }

  struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word>        relators;
  };

  /// Presentation of the edge-path group at a basepoint from a BFS tree.
  struct SpanningPresentation {
    Presentation               presentation;
    Obj                        basepoint = 0;
    std::vector<char>          in_tree;      // per edge
    std::vector<std::uint32_t> generator;    // per edge, npos on tree edges
    std::vector<std::uint32_t> edge_of;      // per generator
    std::vector<Word>          tree_path;    // per vertex, basepoint → v
  };

  /// Drops tree edges and renames the rest as generators.
  inline Word to_generators(SpanningPresentation const& sp, Word const& path) {
    Word out;
    for (Letter l : path) {
      if (!sp.in_tree[l.symbol]) out.push_back({sp.generator[l.symbol], l.inverse});
    }
    return out;
  }

  inline SpanningPresentation presentation_from_complex(TwoComplex const& c, Obj basepoint) {
    check_complex(c);
    if (basepoint >= c.vertices.size()) throw DomainError("unknown basepoint");
    SpanningPresentation sp;
    sp.basepoint = basepoint;
    sp.in_tree.assign(c.edges.size(), 0);
    sp.generator.assign(c.edges.size(), npos);
    sp.tree_path.assign(c.vertices.size(), {});
    std::vector<char> seen(c.vertices.size(), 0);
    std::vector<Obj>  queue{basepoint};
    seen[basepoint] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Obj const v = queue[i];
      for (std::uint32_t e = 0; e < c.edges.size(); ++e) {
        for (bool inv : {false, true}) {
          Letter const l{e, inv};
          if (c.start(l) != v || seen[c.end(l)]) continue;
          seen[c.end(l)]    = 1;
          sp.in_tree[e]     = 1;
          sp.tree_path[c.end(l)] = sp.tree_path[v];
          sp.tree_path[c.end(l)].push_back(l);
          queue.push_back(c.end(l));
        }
      }
    }
    for (Obj v = 0; v < c.vertices.size(); ++v) {
      if (!seen[v]) throw DomainError("complex is not connected", {c.vertices[v]});
    }
    for (std::uint32_t e = 0; e < c.edges.size(); ++e) {
      if (sp.in_tree[e]) continue;
      sp.generator[e] = std::uint32_t(sp.edge_of.size());
      sp.edge_of.push_back(e);
      sp.presentation.generators.push_back(c.edges[e].name);
    }
    for (auto const& f : c.faces) {
      sp.presentation.relators.push_back(
          free_reduce(to_generators(sp, f)));
    }
    return sp;
  }

  /// Images of generators.
  using Hom = std::vector<Mor>;

  /// Value of a word under generator images, composed in path order.
  inline Mor evaluate(Group const& g, Hom const& images, Word const& w) {
    Mor acc = g.identity();
    for (Letter l : w) {
      Mor const x = images[l.symbol];
      acc         = g.mul(l.inverse ? g.inv(x) : x, acc);
    }
    return acc;
  }

  inline bool satisfies(Presentation const& p, Group const& g, Hom const& images) {
    if (images.size() != p.generators.size()) return false;
    for (auto const& r : p.relators) {
      if (evaluate(g, images, r) != g.identity()) return false;
    }
    return true;
  }

  /// All homomorphisms, in lexicographic order of generator images.
  inline std::vector<Hom> enumerate_homs(Presentation const& p, Group const& g) {
    std::vector<Hom>         out;
    std::vector<std::size_t> sizes(p.generators.size(), g.order());
    detail::odometer(sizes, [&](std::vector<std::size_t> const& idx) {
      Hom h(idx.begin(), idx.end());
      if (satisfies(p, g, h)) out.push_back(std::move(h));
      return true;
    });
    return out;
  }

  /// Orbits under simultaneous conjugation, as sorted index lists ordered by
  /// least member.
  inline std::vector<std::vector<std::size_t>> moduli_classes(std::vector<Hom> const& homs,
                                                              Group const&            g) {
    std::map<Hom, std::size_t> index;
    for (std::size_t i = 0; i < homs.size(); ++i) index.emplace(homs[i], i);
    std::vector<std::size_t>              cls(homs.size(), npos);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < homs.size(); ++i) {
      if (cls[i] != npos) continue;
      std::vector<std::size_t> members;
      for (Mor x = 0; x < g.order(); ++x) {
        Hom conj;
        for (Mor a : homs[i]) conj.push_back(g.conj(x, a));
        auto it = index.find(conj);
        if (it == index.end()) throw DomainError("hom list is not closed under conjugation");
        if (cls[it->second] == npos) {
          cls[it->second] = Obj(out.size());
          members.push_back(it->second);
        }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  struct Labeling {
    std::vector<Mor> edge_labels;
    Obj              basepoint = 0;
  };

  /// Tree edges get the identity, generator edges the hom images.
  inline Labeling labeling_from_hom(TwoComplex const& c, SpanningPresentation const& sp,
                                    Group const& g, Hom const& h) {
    if (!satisfies(sp.presentation, g, h)) {
      throw DomainError("generator images violate a relator");
    }
    Labeling l{std::vector<Mor>(c.edges.size(), g.identity()), sp.basepoint};
    for (std::uint32_t e = 0; e < c.edges.size(); ++e) {
      if (!sp.in_tree[e]) l.edge_labels[e] = h[sp.generator[e]];
    }
    return l;
  }

  inline Mor holonomy(TwoComplex const& c, Group const& g, Labeling const& l,
                      Word const& path) {
    if (!path.empty()) path_endpoints(c, path, c.start(path.front()));
    return evaluate(g, l.edge_labels, path);
  }

  /// Faces whose holonomy is not the identity.
  inline Report check_flat(TwoComplex const& c, Group const& g, Labeling const& l) {
    Report r;
    for (std::size_t f = 0; f < c.faces.size(); ++f) {
      if (holonomy(c, g, l, c.faces[f]) != g.identity()) r.add("flat", {std::to_string(f)});
    }
    return r;
  }

  inline Labeling gauge_transform(TwoComplex const& c, Group const& g, Labeling const& l,
                                  std::vector<Mor> const& at_vertex) {
    Labeling out = l;
    for (std::uint32_t e = 0; e < c.edges.size(); ++e) {
      out.edge_labels[e] = g.mul(at_vertex[c.edges[e].tgt],
                                 g.mul(l.edge_labels[e], g.inv(at_vertex[c.edges[e].src])));
    }
    return out;
  }

  /// Generator loop τ_{s(e)} e τ_{t(e)}⁻¹ for the generator's edge e.
  inline Word generator_loop(SpanningPresentation const& sp, TwoComplex const& c,
                             std::uint32_t gen) {
    std::uint32_t const e = sp.edge_of[gen];
    Word                w = sp.tree_path[c.edges[e].src];
    w.push_back({e, false});
    for (Letter l : invert(sp.tree_path[c.edges[e].tgt])) w.push_back(l);
    return w;
  }

  /// Holonomies of the generator loops of an arbitrary flat labeling.
  inline Hom hom_from_labeling(TwoComplex const& c, SpanningPresentation const& sp,
                               Group const& g, Labeling const& l) {
    Hom h;
    for (std::uint32_t k = 0; k < sp.edge_of.size(); ++k) {
      h.push_back(holonomy(c, g, l, generator_loop(sp, c, k)));
    }
    return h;
  }

  /// Reduced random edge walk of the given length starting at `from`.
  template <typename Rng>
  Word random_path(TwoComplex const& c, Obj from, std::size_t length, Rng& rng) {
    Word out;
    Obj  at = from;
    for (std::size_t i = 0; i < length; ++i) {
      std::vector<Letter> options;
      for (std::uint32_t e = 0; e < c.edges.size(); ++e) {
        for (bool inv : {false, true}) {
          Letter const l{e, inv};
          if (c.start(l) != at) continue;
          if (!out.empty() && out.back().symbol == e && out.back().inverse != inv) continue;
          options.push_back(l);
        }
      }
      if (options.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      out.push_back(options[pick(rng)]);
      at = c.end(out.back());
    }
    return out;
  }

  /// A finite quotient of the edge-path groupoid seen by a family of flat
  /// labelings that are trivial on one spanning tree. A path class is
  /// (end, start, h) with h the tuple of its holonomies, so the morphisms
  /// form pair(V) × H for H ⊆ G^k generated by the generator tuples.
  struct PathGroupoid {
    TwoComplex            complex;
    SpanningPresentation  spanning;
    Group                 group;
    std::vector<Labeling> labelings;
    Group                 holonomies;  // H
    std::vector<Hom>      components;  // components[h][i] in G
    Groupoid              groupoid;

    /// Class of a contiguous path.
    Mor class_of(Word const& path, Obj from) const {
      auto [a, b] = path_endpoints(complex, path, from);
      Hom  t;
      for (auto const& l : labelings) t.push_back(evaluate(group, l.edge_labels, path));
      auto it = std::find(components.begin(), components.end(), t);
      if (it == components.end()) throw DomainError("holonomy tuple outside the subgroup");
      std::size_t const n = complex.vertices.size();
      return Mor((std::size_t(b) * n + a) * holonomies.order()
                 + Mor(it - components.begin()));
    }
  };

  inline PathGroupoid path_groupoid(TwoComplex const& c, Obj basepoint, Group const& g,
                                    std::vector<Hom> const& homs) {
    PathGroupoid pg{c, presentation_from_complex(c, basepoint), g, {}, g, {}, {}};
    for (auto const& h : homs) pg.labelings.push_back(labeling_from_hom(c, pg.spanning, g, h));
    std::size_t const k = homs.size();
    // closure of generator tuples, identity first
    pg.components.push_back(Hom(k, g.identity()));
    std::vector<Hom> gens;
    for (std::size_t j = 0; j < pg.spanning.edge_of.size(); ++j) {
      Hom t;
      for (auto const& h : homs) t.push_back(h[j]);
      gens.push_back(t);
    }
    auto mul = [&](Hom const& a, Hom const& b) {
      Hom out;
      for (std::size_t i = 0; i < k; ++i) out.push_back(g.mul(a[i], b[i]));
      return out;
    };
    for (std::size_t i = 0; i < pg.components.size(); ++i) {
      for (auto const& s : gens) {
        Hom const x = mul(s, pg.components[i]);
        if (std::find(pg.components.begin(), pg.components.end(), x) == pg.components.end()) {
          pg.components.push_back(x);
        }
      }
    }
    std::size_t const                 m = pg.components.size();
    std::map<Hom, Mor>                index;
    std::vector<std::string>          names;
    for (Mor i = 0; i < m; ++i) {
      index.emplace(pg.components[i], i);
      std::string              name = k == 1 ? g.name(pg.components[i][0]) : "(";
      if (k != 1) {
        for (std::size_t j = 0; j < k; ++j) {
          name += (j ? "," : "") + g.name(pg.components[i][j]);
        }
        name += ")";
      }
      names.push_back(name);
    }
    std::vector<std::vector<Mor>> table(m, std::vector<Mor>(m));
    for (Mor a = 0; a < m; ++a) {
      for (Mor b = 0; b < m; ++b) table[a][b] = index.at(mul(pg.components[a], pg.components[b]));
    }
    pg.holonomies = group_from_table(names, table);
    pg.groupoid   = detail::aut_groupoid(c.vertices, pg.holonomies);
    return pg;
  }

  /// Holonomy functors of every labeling, via reconstruction from the i-th
  /// coordinate H → G at the basepoint.
  inline std::vector<Reconstruction> edge_path_functors(PathGroupoid const& pg) {
    std::vector<Reconstruction> out;
    auto iso = isotropy(pg.groupoid, pg.spanning.basepoint);
    for (std::size_t i = 0; i < pg.labelings.size(); ++i) {
      GroupoidHom w0{iso.group.groupoid(), pg.group.groupoid(), std::vector<Obj>{0}, {}};
      for (Mor loop : iso.to_parent) {
        w0.mor_map.push_back(pg.components[loop % pg.holonomies.order()][i]);
      }
      out.push_back(reconstruct(pg.groupoid, pg.spanning.basepoint, pg.group, w0));
    }
    return out;
  }

}  // namespace gf

#endif  // GF_FLAT_GAUGE_HPP_
