// Histories: clock histories on finite tick sets, block histories on slabs,
// their composition, 2-cells between them and the exchange identity.
#ifndef GF_HISTORIES_HPP_
#define GF_HISTORIES_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "functor.hpp"

namespace gf {

  /// W(s, t) = w(s) ∘ w(t)⁻¹ on pair(ticks); w(t0) is a unit.
  struct ClockHistory {
    std::vector<std::string> ticks;
    std::vector<Mor>         base;
    GroupoidHom              functor;

    Obj start() const { return functor.obj_map.front(); }
    Obj end() const { return functor.obj_map.back(); }
  };

  namespace detail {
    // Functor on pair(points) induced by a base map with a common source.
    inline GroupoidHom induced(Groupoid const& domain, Groupoid const& gamma,
                               std::vector<Mor> const& base) {
      std::size_t const n = base.size();
      GroupoidHom       w{domain, gamma, {}, {}};
      for (Mor b : base) w.obj_map.push_back(gamma.tgt(b));
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          w.mor_map.push_back(gamma.compose(base[s], gamma.inv(base[t])));
        }
      }
      return w;
    }

    inline void check_base(Groupoid const& gamma, std::vector<Mor> const& base,
                           std::vector<std::string> const& names) {
      if (base.empty()) throw DomainError("history needs at least one point");
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] >= gamma.num_morphisms()) throw MalformedError("base value outside codomain");
        if (gamma.src(base[i]) != gamma.src(base[0])) {
          throw DomainError("base values do not share a source", {names[i]});
        }
      }
    }

    inline void check_distinct(std::vector<std::string> names) {
      std::sort(names.begin(), names.end());
      auto it = std::adjacent_find(names.begin(), names.end());
      if (it != names.end()) throw DomainError("repeated point", {*it});
    }
  }  // namespace detail

  inline ClockHistory history_from_base(std::vector<std::string> ticks, Groupoid const& gamma,
                                        std::vector<Mor> base) {
    if (ticks.size() != base.size()) throw DomainError("one base value per tick is required");
    detail::check_distinct(ticks);
    detail::check_base(gamma, base, ticks);
    if (!gamma.is_unit(base[0])) throw DomainError("base value at the first tick must be a unit", {ticks[0]});
    ClockHistory h{std::move(ticks), std::move(base), {}};
    h.functor = detail::induced(pair_groupoid(h.ticks), gamma, h.base);
    return h;
  }

  inline ClockHistory unit_history(std::string tick, Groupoid const& gamma, Obj x) {
    return history_from_base({std::move(tick)}, gamma, {gamma.unit(x)});
  }

  /// w̃ = w1 up to t1 and w2 ∘ w1(t1) after it.
  inline ClockHistory compose_1d(ClockHistory const& h1, ClockHistory const& h2) {
    auto const& gamma = h1.functor.cod;
    if (!(h2.functor.cod == gamma)) throw DomainError("histories take values in different groupoids");
    if (h1.ticks.back() != h2.ticks.front()) {
      throw DomainError("histories do not meet at a common tick", {h1.ticks.back(), h2.ticks.front()});
    }
    if (h1.end() != h2.start()) {
      throw DomainError("endpoint mismatch", {h1.ticks.back(), gamma.object_name(h1.end()),
                                              gamma.object_name(h2.start())});
    }
    std::vector<std::string> ticks = h1.ticks;
    std::vector<Mor>         base  = h1.base;
    for (std::size_t i = 1; i < h2.ticks.size(); ++i) {
      ticks.push_back(h2.ticks[i]);
      base.push_back(gamma.compose(h2.base[i], h1.base.back()));
    }
    return history_from_base(std::move(ticks), gamma, std::move(base));
  }

  struct Slice {
    std::vector<std::string> points;
    std::size_t              marked = 0;
    friend bool operator==(Slice const&, Slice const&) = default;
  };

  /// Points of a block in order: lower slice, interior, upper slice.
  struct Block {
    Slice                    lower;
    Slice                    upper;
    std::vector<std::string> interior;

    std::vector<std::string> points() const {
      std::vector<std::string> out = lower.points;
      out.insert(out.end(), interior.begin(), interior.end());
      out.insert(out.end(), upper.points.begin(), upper.points.end());
      return out;
    }
    std::size_t upper_offset() const { return lower.points.size() + interior.size(); }
  };

  /// A functor from pair(block points) into Γ.
  struct BlockHistory {
    Block       block;
    GroupoidHom functor;

    std::vector<Obj> lower_field() const {
      return {functor.obj_map.begin(), functor.obj_map.begin() + long(block.lower.points.size())};
    }
    std::vector<Obj> upper_field() const {
      return {functor.obj_map.begin() + long(block.upper_offset()), functor.obj_map.end()};
    }
  };

  /// W(y, x) = w(y) ∘ w(x)⁻¹ for a base map with a common source.
  inline BlockHistory block_from_base(Block block, Groupoid const& gamma,
                                      std::vector<Mor> const& base) {
    auto pts = block.points();
    if (block.lower.marked >= block.lower.points.size()
        || block.upper.marked >= block.upper.points.size()) {
      throw DomainError("marked point outside its slice");
    }
    if (pts.size() != base.size()) throw DomainError("one base value per block point is required");
    detail::check_distinct(pts);
    detail::check_base(gamma, base, pts);
    GroupoidHom w = detail::induced(pair_groupoid(pts), gamma, base);
    return BlockHistory{std::move(block), std::move(w)};
  }

  /// Base map normalised at the lower marked point: w(x) = W(x, x1).
  inline std::vector<Mor> base_of(BlockHistory const& h) {
    std::size_t const n = h.block.points().size();
    std::vector<Mor>  out;
    for (std::size_t x = 0; x < n; ++x) out.push_back(h.functor.mor_map[x * n + h.block.lower.marked]);
    return out;
  }

  namespace detail {
    inline void check_composable(BlockHistory const& h21, BlockHistory const& h32) {
      if (!(h21.block.upper == h32.block.lower)) {
        throw DomainError("blocks do not share a slice with the same marked point");
      }
      if (!(h21.functor.cod == h32.functor.cod)) throw DomainError("histories take values in different groupoids");
      auto const f2 = h21.upper_field(), g2 = h32.lower_field();
      for (std::size_t i = 0; i < f2.size(); ++i) {
        if (f2[i] != g2[i]) throw DomainError("boundary fields differ", {h21.block.upper.points[i]});
      }
    }

    inline Block composite_block(Block const& b21, Block const& b32) {
      Block out{b21.lower, b32.upper, b21.interior};
      out.interior.insert(out.interior.end(), b21.upper.points.begin(), b21.upper.points.end());
      out.interior.insert(out.interior.end(), b32.interior.begin(), b32.interior.end());
      return out;
    }
  }  // namespace detail

  /// W̃(x) = W21(x, x1) on M21, including the shared slice, and
  /// W32(x, x2) ∘ W21(x2, x1) on the rest of M32; W(y, x) = W̃(y) ∘ W̃(x)⁻¹.
  inline BlockHistory compose_blocks(BlockHistory const& h21, BlockHistory const& h32) {
    detail::check_composable(h21, h32);
    auto const&       gamma = h21.functor.cod;
    std::size_t const n32   = h32.block.points().size();
    std::size_t const x2    = h21.block.upper_offset() + h21.block.upper.marked;
    std::size_t const skip  = h32.block.lower.points.size();
    std::vector<Mor>  w     = base_of(h21);
    for (std::size_t x = skip; x < n32; ++x) {
      w.push_back(gamma.compose(h32.functor.mor_map[x * n32 + h32.block.lower.marked], w[x2]));
    }
    return block_from_base(detail::composite_block(h21.block, h32.block), gamma, w);
  }

  /// Components ν on M21 and ν' on the rest of M32; ν and ν' must agree on
  /// the shared slice.
  inline NaturalTransformation hcompose(BlockHistory const& a21, BlockHistory const& b21,
                                        NaturalTransformation const& nu,
                                        BlockHistory const& a32, BlockHistory const& b32,
                                        NaturalTransformation const& nu2) {
    if (!(nu.source == a21.functor) || !(nu.target == b21.functor)
        || !(nu2.source == a32.functor) || !(nu2.target == b32.functor)) {
      throw DomainError("2-cells do not match their histories");
    }
    std::size_t const off = a21.block.upper_offset();
    for (std::size_t i = 0; i < a21.block.upper.points.size(); ++i) {
      if (nu.component[off + i] != nu2.component[i]) {
        throw DomainError("2-cells differ on the shared slice", {a21.block.upper.points[i]});
      }
    }
    auto a = compose_blocks(a21, a32);
    auto b = compose_blocks(b21, b32);
    NaturalTransformation out{a.functor, b.functor, nu.component};
    std::size_t const     skip = a32.block.lower.points.size();
    out.component.insert(out.component.end(), nu2.component.begin() + long(skip),
                         nu2.component.end());
    return out;
  }

  /// W1 ⇒ W2 ⇒ W3 on block 21 and W1' ⇒ W2' ⇒ W3' on block 32.
  struct ExchangeInstance {
    BlockHistory          w1, w2, w3, v1, v2, v3;
    NaturalTransformation nu, eta, nu2, eta2;
  };

  /// (η ∘h η') ∘v (ν ∘h ν') against (η ∘v ν) ∘h (η' ∘v ν'), pointwise.
  inline Report check_exchange(ExchangeInstance const& in) {
    Report r;
    r.merge(validate_nat_trans(in.nu), "nu");
    r.merge(validate_nat_trans(in.eta), "eta");
    r.merge(validate_nat_trans(in.nu2), "nu'");
    r.merge(validate_nat_trans(in.eta2), "eta'");
    if (!r.ok()) return r;
    auto lhs = vertical_compose(hcompose(in.w2, in.w3, in.eta, in.v2, in.v3, in.eta2),
                                hcompose(in.w1, in.w2, in.nu, in.v1, in.v2, in.nu2));
    auto rhs = hcompose(in.w1, in.w3, vertical_compose(in.eta, in.nu), in.v1, in.v3,
                        vertical_compose(in.eta2, in.nu2));
    auto pts = detail::composite_block(in.w1.block, in.v1.block).points();
    for (std::size_t x = 0; x < pts.size(); ++x) {
      if (lhs.component[x] != rhs.component[x]) r.add("exchange", {pts[x]});
    }
    if (!(lhs.source == rhs.source) || !(lhs.target == rhs.target)) {
      r.add("exchange", {}, "boundary functors differ");
    }
    return r;
  }

  /// W2(y, x) = c(y) ∘ W1(y, x) ∘ c(x)⁻¹, so c is natural W1 ⇒ W2.
  inline std::pair<BlockHistory, NaturalTransformation> conjugate_history(
      BlockHistory const& w1, std::vector<Mor> const& c) {
    auto const& gamma = w1.functor.cod;
    auto        base  = base_of(w1);
    std::size_t const x1 = w1.block.lower.marked;
    std::vector<Mor>  b2;
    for (std::size_t x = 0; x < base.size(); ++x) {
      b2.push_back(gamma.compose(c[x], gamma.compose(base[x], gamma.inv(c[x1]))));
    }
    auto w2 = block_from_base(w1.block, gamma, b2);
    return {w2, NaturalTransformation{w1.functor, w2.functor, c}};
  }

  namespace detail {
    template <typename Rng>
    std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    template <typename Rng>
    Mor random_from(Groupoid const& g, Obj x, Rng& rng) {
      std::vector<Mor> out;
      for (Mor m = 0; m < g.num_morphisms(); ++m) {
        if (g.src(m) == x) out.push_back(m);
      }
      return out[uniform(rng, 0, out.size() - 1)];
    }

    template <typename Rng>
    Slice random_slice(std::string const& prefix, Rng& rng) {
      Slice s;
      std::size_t const n = uniform(rng, 1, 3);
      for (std::size_t i = 0; i < n; ++i) s.points.push_back(prefix + std::to_string(i));
      s.marked = uniform(rng, 0, n - 1);
      return s;
    }

    template <typename Rng>
    std::vector<std::string> random_interior(std::string const& prefix, Rng& rng) {
      std::vector<std::string> out;
      std::size_t const        n = uniform(rng, 0, 2);
      for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
      return out;
    }
  }  // namespace detail

  /// Random clock history on the given ticks starting at object x.
  template <typename Rng>
  ClockHistory random_clock_history(Groupoid const& gamma, std::vector<std::string> ticks,
                                    Obj x, Rng& rng) {
    std::vector<Mor> base{gamma.unit(x)};
    for (std::size_t i = 1; i < ticks.size(); ++i) base.push_back(detail::random_from(gamma, x, rng));
    return history_from_base(std::move(ticks), gamma, std::move(base));
  }

  /// A random valid exchange instance over Γ on a random three-slice slab.
  /// Block 32 histories agree with block 21 on pairs of shared-slice points.
  template <typename Rng>
  ExchangeInstance random_exchange_instance(Groupoid const& gamma, Rng& rng) {
    Slice s1 = detail::random_slice("a", rng);
    Slice s2 = detail::random_slice("b", rng);
    Slice s3 = detail::random_slice("c", rng);
    Block b21{s1, s2, detail::random_interior("i", rng)};
    Block b32{s2, s3, detail::random_interior("j", rng)};
    std::size_t const n21 = b21.points().size(), n32 = b32.points().size();
    std::size_t const off = b21.upper_offset(), k = s2.points.size();

    Obj const        q0 = Obj(detail::uniform(rng, 0, gamma.num_objects() - 1));
    std::vector<Mor> base21;
    for (std::size_t x = 0; x < n21; ++x) base21.push_back(detail::random_from(gamma, q0, rng));
    auto w1 = block_from_base(b21, gamma, base21);

    // v1 agrees with w1 on the shared slice: v1(x, x2) = w1(x, x2) there.
    std::vector<Mor> base32;
    Mor const        at_x2 = base21[off + s2.marked];
    for (std::size_t x = 0; x < n32; ++x) {
      base32.push_back(x < k ? base21[off + x] : detail::random_from(gamma, gamma.src(at_x2), rng));
    }
    auto v1 = block_from_base(b32, gamma, base32);

    auto components = [&](BlockHistory const& w, std::vector<Mor> const* shared) {
      std::vector<Mor> c;
      for (std::size_t x = 0; x < w.functor.obj_map.size(); ++x) {
        if (shared != nullptr && x < k) {
          c.push_back((*shared)[off + x]);
        } else {
          c.push_back(detail::random_from(gamma, w.functor.obj_map[x], rng));
        }
      }
      return c;
    };
    auto c_nu        = components(w1, nullptr);
    auto [w2, nu]    = conjugate_history(w1, c_nu);
    auto c_eta       = components(w2, nullptr);
    auto [w3, eta]   = conjugate_history(w2, c_eta);
    auto c_nu2       = components(v1, &c_nu);
    auto [v2, nu2]   = conjugate_history(v1, c_nu2);
    auto c_eta2      = components(v2, &c_eta);
    auto [v3, eta2]  = conjugate_history(v2, c_eta2);
    return ExchangeInstance{w1, w2, w3, v1, v2, v3, nu, eta, nu2, eta2};
  }

}  // namespace gf

#endif  // GF_HISTORIES_HPP_
