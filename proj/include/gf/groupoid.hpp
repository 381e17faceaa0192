// Finite groupoids stored as dense composition tables.
//
// Objects and morphisms are dense 32-bit indices in file/construction order.
// A `GroupoidTable` is raw, possibly invalid data; `validate` reports every
// violated axiom. A `Groupoid` is an immutable, shared, validated table.
#ifndef GF_GROUPOID_HPP_
#define GF_GROUPOID_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gf {

  using Obj = std::uint32_t;
  using Mor = std::uint32_t;

  inline constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  struct GroupoidTable {
    std::vector<std::string> objects;
    std::vector<std::string> morphisms;
    std::vector<Obj>         src;
    std::vector<Obj>         tgt;
    std::vector<Mor>         unit;  // per object
    std::vector<Mor>         inv;   // per morphism
    // Row-major |morphisms|^2 table; comp[g * n + f] = g∘f or npos.
    std::vector<Mor> comp;

    std::size_t num_objects() const noexcept { return objects.size(); }
    std::size_t num_morphisms() const noexcept { return morphisms.size(); }

    Mor& at(Mor g, Mor f) { return comp[std::size_t(g) * morphisms.size() + f]; }
    Mor at(Mor g, Mor f) const {
      return comp[std::size_t(g) * morphisms.size() + f];
    }

    // Resize the per-morphism arrays and clear the composition table.
    void reset_morphisms(std::size_t n) {
      src.assign(n, npos);
      tgt.assign(n, npos);
      inv.assign(n, npos);
      comp.assign(n * n, npos);
    }
  };

  struct ValidateOptions {
    // Associativity is checked over every composable triple up to this many
    // morphisms, and over `samples` random composable triples beyond it.
    std::size_t   exhaustive_threshold = 64;
    std::size_t   samples              = 20000;
    std::uint64_t seed                 = 7;
  };

  namespace detail {
    inline void check_range(bool ok, std::string const& what) {
      if (!ok) {
        throw MalformedError("malformed groupoid table: " + what);
      }
    }
  }  // namespace detail

  /// Throws MalformedError when arrays have the wrong size or reference
  /// identifiers out of range. npos entries are allowed (they are axiom
  /// violations, not structural ones).
  inline void check_structure(GroupoidTable const& t) {
    std::size_t const no = t.objects.size(), nm = t.morphisms.size();
    detail::check_range(t.src.size() == nm && t.tgt.size() == nm
                            && t.inv.size() == nm && t.unit.size() == no
                            && t.comp.size() == nm * nm,
                        "table sizes disagree");
    for (std::size_t m = 0; m < nm; ++m) {
      detail::check_range(t.src[m] < no,
                          "source of " + t.morphisms[m] + " is dangling");
      detail::check_range(t.tgt[m] < no,
                          "target of " + t.morphisms[m] + " is dangling");
      detail::check_range(t.inv[m] == npos || t.inv[m] < nm,
                          "inverse of " + t.morphisms[m] + " is dangling");
    }
    for (std::size_t x = 0; x < no; ++x) {
      detail::check_range(t.unit[x] == npos || t.unit[x] < nm,
                          "unit of " + t.objects[x] + " is dangling");
    }
    for (Mor c : t.comp) {
      detail::check_range(c == npos || c < nm, "composite is dangling");
    }
  }

  /// Every violated groupoid axiom with a witness. Throws MalformedError first
  /// if the table is structurally broken.
  inline Report validate(GroupoidTable const& t, ValidateOptions const& opt = {}) {
    check_structure(t);
    Report      r;
    auto const& M = t.morphisms;
    std::size_t const nm = M.size();

    for (Mor g = 0; g < nm; ++g) {
      for (Mor f = 0; f < nm; ++f) {
        bool const composable = t.src[g] == t.tgt[f];
        Mor const  h          = t.at(g, f);
        if (composable != (h != npos)) {
          r.add("definedness", {M[g], M[f]},
                composable ? "composable pair has no composite"
                           : "composite listed for non-composable pair");
          continue;
        }
        if (h != npos && (t.src[h] != t.src[f] || t.tgt[h] != t.tgt[g])) {
          r.add("endpoints", {M[g], M[f], M[h]});
        }
      }
    }

    for (Obj x = 0; x < t.objects.size(); ++x) {
      Mor const u = t.unit[x];
      if (u == npos) {
        r.add("units", {t.objects[x]}, "missing unit");
      } else if (t.src[u] != x || t.tgt[u] != x) {
        r.add("units", {t.objects[x], M[u]}, "unit is not a loop at its object");
      }
    }
    for (Mor f = 0; f < nm; ++f) {
      Mor const us = t.unit[t.src[f]], ut = t.unit[t.tgt[f]];
      if (us != npos && t.at(f, us) != npos && t.at(f, us) != f) {
        r.add("units", {M[f], M[us]}, "right unit law");
      }
      if (ut != npos && t.at(ut, f) != npos && t.at(ut, f) != f) {
        r.add("units", {M[ut], M[f]}, "left unit law");
      }
      Mor const g = t.inv[f];
      if (g == npos) {
        r.add("inverses", {M[f]}, "missing inverse");
        continue;
      }
      Mor const gf = t.at(g, f), fg = t.at(f, g);
      if (gf == npos || gf != us || fg == npos || fg != ut) {
        r.add("inverses", {M[f], M[g]});
      }
    }

    auto check_triple = [&](Mor h, Mor g, Mor f) {
      Mor const gf = t.at(g, f), hg = t.at(h, g);
      if (gf == npos || hg == npos) {
        return;
      }
      Mor const a = t.at(h, gf), b = t.at(hg, f);
      if (a != npos && b != npos && a != b) {
        r.add("associativity", {M[h], M[g], M[f]});
      }
    };

    if (nm <= opt.exhaustive_threshold) {
      for (Mor f = 0; f < nm; ++f) {
        for (Mor g = 0; g < nm; ++g) {
          if (t.src[g] != t.tgt[f]) continue;
          for (Mor h = 0; h < nm; ++h) {
            if (t.src[h] == t.tgt[g]) check_triple(h, g, f);
          }
        }
      }
    } else if (nm > 0) {
      // Sample composable triples by walking target/source fibres.
      std::vector<std::vector<Mor>> from(t.objects.size());
      for (Mor m = 0; m < nm; ++m) {
        from[t.src[m]].push_back(m);
      }
      std::mt19937_64                      rng(opt.seed);
      std::uniform_int_distribution<Mor>   pick(0, Mor(nm - 1));
      for (std::size_t s = 0; s < opt.samples; ++s) {
        Mor const   f  = pick(rng);
        auto const& gs = from[t.tgt[f]];
        Mor const   g  = gs[std::uniform_int_distribution<std::size_t>(
            0, gs.size() - 1)(rng)];
        auto const& hs = from[t.tgt[g]];
        Mor const   h  = hs[std::uniform_int_distribution<std::size_t>(
            0, hs.size() - 1)(rng)];
        check_triple(h, g, f);
      }
    }
    return r;
  }

  class Groupoid {
    struct Data {
      GroupoidTable                             table;
      std::vector<std::vector<Mor>>             homs;  // x * nobj + y
      std::unordered_map<std::string, Obj>      obj_index;
      std::unordered_map<std::string, Mor>      mor_index;
    };

   public:
    /// The empty groupoid.
    Groupoid() : d_(make_data(GroupoidTable{})) {}

    /// Validates `t` and throws DomainError naming the first violated axiom.
    static Groupoid from_table(GroupoidTable t, ValidateOptions const& opt = {}) {
      Report r = validate(t, opt);
      if (!r.ok()) {
        auto const& v = r.violations().front();
        throw DomainError("invalid groupoid: " + v.rule, v.witness);
      }
      return Groupoid(std::move(t));
    }

    /// For constructions that are correct by construction. Only the structure
    /// is checked.
    static Groupoid trusted(GroupoidTable t) {
      check_structure(t);
      return Groupoid(std::move(t));
    }

    std::size_t num_objects() const noexcept { return d_->table.objects.size(); }
    std::size_t num_morphisms() const noexcept {
      return d_->table.morphisms.size();
    }
    bool empty() const noexcept { return num_objects() == 0; }

    Obj src(Mor m) const { return d_->table.src[m]; }
    Obj tgt(Mor m) const { return d_->table.tgt[m]; }
    Mor unit(Obj x) const { return d_->table.unit[x]; }
    Mor inv(Mor m) const { return d_->table.inv[m]; }
    bool is_unit(Mor m) const { return unit(src(m)) == m; }

    bool composable(Mor g, Mor f) const { return src(g) == tgt(f); }

    /// g∘f; npos when not composable.
    Mor try_compose(Mor g, Mor f) const { return d_->table.at(g, f); }

    Mor compose(Mor g, Mor f) const {
      Mor const h = d_->table.at(g, f);
      if (h == npos) {
        throw DomainError("morphisms not composable",
                          {morphism_name(g), morphism_name(f)});
      }
      return h;
    }

    /// Composite of a sequence listed in application order (first applied
    /// first): compose_path({a, b, c}) = c∘b∘a.
    Mor compose_path(std::span<Mor const> path) const {
      if (path.empty()) {
        throw DomainError("empty composition");
      }
      Mor acc = path.front();
      for (std::size_t i = 1; i < path.size(); ++i) {
        acc = compose(path[i], acc);
      }
      return acc;
    }

    std::vector<Mor> const& hom(Obj x, Obj y) const {
      return d_->homs[std::size_t(x) * num_objects() + y];
    }

    std::string const& object_name(Obj x) const { return d_->table.objects[x]; }
    std::string const& morphism_name(Mor m) const {
      return d_->table.morphisms[m];
    }
    std::vector<std::string> const& object_names() const noexcept {
      return d_->table.objects;
    }
    std::vector<std::string> const& morphism_names() const noexcept {
      return d_->table.morphisms;
    }

    std::optional<Obj> find_object(std::string const& name) const {
      auto it = d_->obj_index.find(name);
      if (it == d_->obj_index.end()) return std::nullopt;
      return it->second;
    }
    std::optional<Mor> find_morphism(std::string const& name) const {
      auto it = d_->mor_index.find(name);
      if (it == d_->mor_index.end()) return std::nullopt;
      return it->second;
    }
    Obj object(std::string const& name) const {
      auto x = find_object(name);
      if (!x) throw DomainError("unknown object", {name});
      return *x;
    }
    Mor morphism(std::string const& name) const {
      auto m = find_morphism(name);
      if (!m) throw DomainError("unknown morphism", {name});
      return *m;
    }

    GroupoidTable const& table() const noexcept { return d_->table; }

    /// Same underlying storage (cheap identity test).
    bool shares(Groupoid const& other) const noexcept { return d_ == other.d_; }

    friend bool operator==(Groupoid const& a, Groupoid const& b) {
      if (a.d_ == b.d_) return true;
      auto const& x = a.d_->table;
      auto const& y = b.d_->table;
      return x.objects == y.objects && x.morphisms == y.morphisms
             && x.src == y.src && x.tgt == y.tgt && x.unit == y.unit
             && x.inv == y.inv && x.comp == y.comp;
    }

   private:
    explicit Groupoid(GroupoidTable t) : d_(make_data(std::move(t))) {}

    static std::shared_ptr<Data const> make_data(GroupoidTable t) {
      auto d = std::make_shared<Data>();
      std::size_t const no = t.objects.size();
      d->homs.resize(no * no);
      for (Mor m = 0; m < t.morphisms.size(); ++m) {
        d->homs[std::size_t(t.src[m]) * no + t.tgt[m]].push_back(m);
      }
      for (Obj x = 0; x < no; ++x) {
        if (!d->obj_index.emplace(t.objects[x], x).second) {
          throw MalformedError("duplicate object identifier " + t.objects[x]);
        }
      }
      for (Mor m = 0; m < t.morphisms.size(); ++m) {
        if (!d->mor_index.emplace(t.morphisms[m], m).second) {
          throw MalformedError("duplicate morphism identifier "
                               + t.morphisms[m]);
        }
      }
      d->table = std::move(t);
      return d;
    }

    std::shared_ptr<Data const> d_;
  };

  inline Report validate(Groupoid const& g, ValidateOptions const& opt = {}) {
    return validate(g.table(), opt);
  }

  /// A finite group viewed as a one-object groupoid. Elements are morphism
  /// indices of that groupoid.
  class Group {
   public:
    Group() = default;

    explicit Group(Groupoid g) : g_(std::move(g)) {
      if (g_.num_objects() != 1) {
        throw DomainError("group table must have exactly one object");
      }
    }

    Groupoid const& groupoid() const noexcept { return g_; }
    std::size_t order() const noexcept { return g_.num_morphisms(); }
    Mor identity() const { return g_.unit(0); }
    Mor mul(Mor a, Mor b) const { return g_.try_compose(a, b); }
    Mor inv(Mor a) const { return g_.inv(a); }
    Mor conj(Mor g, Mor a) const { return mul(mul(g, a), inv(g)); }
    std::string const& name(Mor a) const { return g_.morphism_name(a); }
    Mor element(std::string const& name) const { return g_.morphism(name); }

    friend bool operator==(Group const& a, Group const& b) {
      return a.g_ == b.g_;
    }

   private:
    Groupoid g_;
  };

}  // namespace gf

#endif  // GF_GROUPOID_HPP_
