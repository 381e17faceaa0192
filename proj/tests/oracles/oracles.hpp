// Independent reference computations for the test suite.
//
// Nothing here calls library algorithms. Groupoids are read only through
// their raw tables; groups are rebuilt from permutations or residues.
#ifndef GF_TESTS_ORACLES_HPP_
#define GF_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "gf/groupoid.hpp"

namespace oracle {

  /// Multiplication table of a finite group; element 0 is the identity.
  struct FiniteGroup {
    std::vector<std::vector<int>> mul;  // mul[a][b] = a·b

    int order() const { return int(mul.size()); }
    int inv(int a) const {
      for (int b = 0; b < order(); ++b) {
        if (mul[a][b] == 0) return b;
      }
      return -1;
    }
    int conj(int g, int a) const { return mul[mul[g][a]][inv(g)]; }
  };

  inline FiniteGroup cyclic(int n) {
    FiniteGroup g;
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    }
    return g;
  }

  /// Sym(n) with the identity permutation first; (p·q)(i) = p(q(i)).
  inline FiniteGroup symmetric(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    FiniteGroup g;
    g.mul.assign(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = 0; b < perms.size(); ++b) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
        g.mul[a][b] = int(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return g;
  }

  /// Generator tuples satisfying `ok`.
  inline std::vector<std::vector<int>> solutions(FiniteGroup const& g, int gens,
                                                 std::function<bool(std::vector<int> const&)> ok) {
    std::vector<std::vector<int>> out;
    std::vector<int>              t(gens, 0);
    while (true) {
      if (ok(t)) out.push_back(t);
      int i = 0;
      while (i < gens && ++t[i] == g.order()) t[i++] = 0;
      if (i == gens) break;
    }
    return out;
  }

  /// Burnside: orbits of simultaneous conjugation on a conjugation-stable set.
  inline std::size_t burnside(FiniteGroup const& g, std::vector<std::vector<int>> const& set) {
    std::size_t fixed = 0;
    for (int x = 0; x < g.order(); ++x) {
      for (auto const& t : set) {
        bool f = true;
        for (int a : t) f = f && g.conj(x, a) == a;
        fixed += f;
      }
    }
    return fixed / std::size_t(g.order());
  }

  /// Exhaustive count of axiom failures over the raw table.
  inline std::size_t axiom_failures(gf::Groupoid const& g) {
    std::size_t       bad = 0;
    std::size_t const n   = g.num_morphisms();
    for (gf::Obj x = 0; x < g.num_objects(); ++x) {
      gf::Mor const e = g.unit(x);
      if (g.src(e) != x || g.tgt(e) != x) ++bad;
    }
    for (gf::Mor f = 0; f < n; ++f) {
      if (g.try_compose(g.unit(g.tgt(f)), f) != f) ++bad;
      if (g.try_compose(f, g.unit(g.src(f))) != f) ++bad;
      gf::Mor const i = g.inv(f);
      if (g.try_compose(i, f) != g.unit(g.src(f))) ++bad;
      if (g.try_compose(f, i) != g.unit(g.tgt(f))) ++bad;
      for (gf::Mor k = 0; k < n; ++k) {
        gf::Mor const kf = g.try_compose(k, f);
        if ((g.src(k) == g.tgt(f)) != (kf != gf::npos)) ++bad;
        if (kf != gf::npos && (g.src(kf) != g.src(f) || g.tgt(kf) != g.tgt(k))) ++bad;
      }
    }
    for (gf::Mor f = 0; f < n; ++f) {
      for (gf::Mor k = 0; k < n; ++k) {
        if (g.src(k) != g.tgt(f)) continue;
        for (gf::Mor h = 0; h < n; ++h) {
          if (g.src(h) != g.tgt(k)) continue;
          if (g.try_compose(h, g.try_compose(k, f)) != g.try_compose(g.try_compose(h, k), f)) ++bad;
        }
      }
    }
    return bad;
  }

  /// Functors counted over every map of morphisms; the object map is read
  /// off the images of units.
  inline std::uint64_t brute_force_functors(gf::Groupoid const& dom, gf::Groupoid const& cod) {
    std::size_t const    n = dom.num_morphisms(), m = cod.num_morphisms();
    std::vector<gf::Mor> img(n, 0);
    std::uint64_t        count = 0;
    while (true) {
      bool ok = true;
      for (gf::Obj x = 0; ok && x < dom.num_objects(); ++x) {
        gf::Mor const u = img[dom.unit(x)];
        ok = cod.src(u) == cod.tgt(u) && cod.unit(cod.src(u)) == u;
      }
      for (gf::Mor f = 0; ok && f < n; ++f) {
        ok = img[dom.unit(dom.src(f))] == cod.unit(cod.src(img[f]))
             && img[dom.unit(dom.tgt(f))] == cod.unit(cod.tgt(img[f]));
      }
      for (gf::Mor f = 0; ok && f < n; ++f) {
        for (gf::Mor k = 0; ok && k < n; ++k) {
          if (dom.src(k) != dom.tgt(f)) continue;
          ok = cod.try_compose(img[k], img[f]) == img[dom.try_compose(k, f)];
        }
      }
      count += ok;
      std::size_t i = 0;
      while (i < n && ++img[i] == m) img[i++] = 0;
      if (i == n) break;
    }
    return count;
  }

  inline std::uint64_t power(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
  }

}  // namespace oracle

#endif  // GF_TESTS_ORACLES_HPP_
