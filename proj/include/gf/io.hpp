// Line-oriented text formats.
//
// Every format is a sequence of sections. A section header is a line whose
// first token ends in ':'; tokens after it on the same line are its inline
// value. Blank lines and text after '#' are ignored. Identifiers contain no
// whitespace.
#ifndef GF_IO_HPP_
#define GF_IO_HPP_

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "flat_gauge.hpp"
#include "functor.hpp"
#include "groupoid.hpp"
#include "histories.hpp"
#include "local_sheaf.hpp"
#include "probing.hpp"
#include "reconstruction.hpp"

namespace gf::io {

  struct Token {
    std::string text;
    std::size_t column = 1;
  };

  struct Line {
    std::size_t        number = 0;
    std::vector<Token> tokens;
  };

  struct Section {
    std::string       name;
    Line              header;  // tokens after the name
    std::vector<Line> body;
  };

  struct Document {
    std::string          file;
    std::vector<Section> sections;

    [[noreturn]] void fail(Line const& l, std::size_t col, std::string const& what) const {
      throw ParseError(file, l.number, col, what);
    }
    [[noreturn]] void fail(Line const& l, Token const& t, std::string const& what) const {
      fail(l, t.column, what);
    }
    [[noreturn]] void fail(std::string const& what) const { throw ParseError(file, 1, 1, what); }

    std::vector<Section const*> all(std::string const& name) const {
      std::vector<Section const*> out;
      for (auto const& s : sections) {
        if (s.name == name) out.push_back(&s);
      }
      return out;
    }
    Section const* find(std::string const& name) const {
      auto v = all(name);
      return v.empty() ? nullptr : v.front();
    }
    Section const& get(std::string const& name) const {
      if (auto const* s = find(name)) return *s;
      fail("missing section '" + name + ":'");
    }
    /// The single inline token of a header such as `dom: file`.
    std::string value(std::string const& name) const {
      auto const& s = get(name);
      if (s.header.tokens.size() != 1) fail(s.header, 1, "'" + name + ":' takes one value");
      return s.header.tokens[0].text;
    }
  };

  inline Document parse_document(std::string const& text, std::string const& file,
                                 std::vector<std::string> const& allowed) {
    Document           doc{file, {}};
    std::istringstream in(text);
    std::string        raw;
    std::size_t        number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      Line l{number, {}};
      for (std::size_t i = 0; i < raw.size();) {
        if (std::isspace(static_cast<unsigned char>(raw[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
        l.tokens.push_back({raw.substr(i, j - i), i + 1});
        i = j;
      }
      if (l.tokens.empty()) continue;
      std::string const& head = l.tokens.front().text;
      if (head.size() > 1 && head.back() == ':') {
        std::string name = head.substr(0, head.size() - 1);
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
          doc.fail(l, l.tokens.front(), "unknown section '" + head + "'");
        }
        Section s{name, l, {}};
        s.header.tokens.erase(s.header.tokens.begin());
        doc.sections.push_back(std::move(s));
        continue;
      }
      if (doc.sections.empty()) doc.fail(l, l.tokens.front(), "entry before any section header");
      doc.sections.back().body.push_back(std::move(l));
    }
    return doc;
  }

  inline std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  inline Document load_document(std::filesystem::path const& path,
                                std::vector<std::string> const& allowed) {
    return parse_document(read_file(path), path.string(), allowed);
  }

  namespace detail {
    inline void arity(Document const& d, Line const& l, std::size_t n) {
      if (l.tokens.size() != n) {
        d.fail(l, l.tokens.front(), "expected " + std::to_string(n) + " fields");
      }
    }

    template <typename Map>
    auto lookup(Document const& d, Line const& l, Token const& t, Map const& index,
                std::string const& kind) {
      auto it = index.find(t.text);
      if (it == index.end()) d.fail(l, t, "unknown " + kind + " '" + t.text + "'");
      return it->second;
    }

    inline std::filesystem::path relative_to(std::string const& file, std::string const& ref) {
      std::filesystem::path p(ref);
      if (p.is_absolute()) return p;
      return std::filesystem::path(file).parent_path() / p;
    }
  }  // namespace detail

  // ---------------------------------------------------------------- GRPD

  /// Table as written; missing entries stay npos for the validator.
  inline GroupoidTable parse_groupoid_table(std::string const& text, std::string const& file) {
    auto doc = parse_document(text, file, {"objects", "morphisms", "compose", "inverse", "units"});
    GroupoidTable                       t;
    std::map<std::string, Obj>          objs;
    std::map<std::string, Mor>          mors;
    if (auto const* s = doc.find("objects")) {
      for (auto const& l : s->body) {
        for (auto const& tok : l.tokens) {
          if (!objs.emplace(tok.text, Obj(t.objects.size())).second) {
            doc.fail(l, tok, "duplicate object '" + tok.text + "'");
          }
          t.objects.push_back(tok.text);
        }
      }
    }
    std::vector<Obj> src, tgt;
    if (auto const* s = doc.find("morphisms")) {
      for (auto const& l : s->body) {
        detail::arity(doc, l, 3);
        if (!mors.emplace(l.tokens[0].text, Mor(t.morphisms.size())).second) {
          doc.fail(l, l.tokens[0], "duplicate morphism '" + l.tokens[0].text + "'");
        }
        t.morphisms.push_back(l.tokens[0].text);
        src.push_back(detail::lookup(doc, l, l.tokens[1], objs, "object"));
        tgt.push_back(detail::lookup(doc, l, l.tokens[2], objs, "object"));
      }
    }
    t.reset_morphisms(t.morphisms.size());
    t.src = src;
    t.tgt = tgt;
    t.unit.assign(t.objects.size(), npos);
    if (auto const* s = doc.find("compose")) {
      for (auto const& l : s->body) {
        detail::arity(doc, l, 3);
        Mor const g = detail::lookup(doc, l, l.tokens[0], mors, "morphism");
        Mor const f = detail::lookup(doc, l, l.tokens[1], mors, "morphism");
        Mor const h = detail::lookup(doc, l, l.tokens[2], mors, "morphism");
        if (t.at(g, f) != npos && t.at(g, f) != h) doc.fail(l, l.tokens[0], "conflicting composite");
        t.at(g, f) = h;
      }
    }
    if (auto const* s = doc.find("inverse")) {
      for (auto const& l : s->body) {
        detail::arity(doc, l, 2);
        Mor const f = detail::lookup(doc, l, l.tokens[0], mors, "morphism");
        t.inv[f]    = detail::lookup(doc, l, l.tokens[1], mors, "morphism");
      }
    }
    if (auto const* s = doc.find("units")) {
      for (auto const& l : s->body) {
        detail::arity(doc, l, 2);
        Obj const x = detail::lookup(doc, l, l.tokens[0], objs, "object");
        t.unit[x]   = detail::lookup(doc, l, l.tokens[1], mors, "morphism");
      }
    }
    return t;
  }

  inline GroupoidTable load_groupoid_table(std::filesystem::path const& path) {
    return parse_groupoid_table(read_file(path), path.string());
  }

  inline Groupoid load_groupoid(std::filesystem::path const& path, ValidateOptions const& opt = {}) {
    return Groupoid::from_table(load_groupoid_table(path), opt);
  }

  inline Group load_group(std::filesystem::path const& path, ValidateOptions const& opt = {}) {
    return Group(load_groupoid(path, opt));
  }

  /// Canonical form: sections in fixed order, entries sorted.
  inline void write_groupoid(std::ostream& os, Groupoid const& g) {
    auto emit = [&os](std::string const& head, std::vector<std::string> lines) {
      std::sort(lines.begin(), lines.end());
      os << head << ":\n";
      for (auto const& l : lines) os << l << '\n';
    };
    std::vector<std::string> lines = g.object_names();
    emit("objects", lines);
    lines.clear();
    for (Mor m = 0; m < g.num_morphisms(); ++m) {
      lines.push_back(g.morphism_name(m) + " " + g.object_name(g.src(m)) + " " + g.object_name(g.tgt(m)));
    }
    emit("morphisms", lines);
    lines.clear();
    for (Mor f = 0; f < g.num_morphisms(); ++f) {
      for (Mor k = 0; k < g.num_morphisms(); ++k) {
        if (g.composable(k, f)) {
          lines.push_back(g.morphism_name(k) + " " + g.morphism_name(f) + " "
                          + g.morphism_name(g.compose(k, f)));
        }
      }
    }
    emit("compose", lines);
    lines.clear();
    for (Mor f = 0; f < g.num_morphisms(); ++f) {
      lines.push_back(g.morphism_name(f) + " " + g.morphism_name(g.inv(f)));
    }
    emit("inverse", lines);
    lines.clear();
    for (Obj x = 0; x < g.num_objects(); ++x) {
      lines.push_back(g.object_name(x) + " " + g.morphism_name(g.unit(x)));
    }
    emit("units", lines);
  }

  // ---------------------------------------------------------------- FUNC

  /// Object and morphism maps read by name; unlisted entries stay npos.
  inline void read_maps(Document const& doc, GroupoidHom& w) {
    std::map<std::string, Obj> dobj, cobj;
    std::map<std::string, Mor> dmor, cmor;
    for (Obj x = 0; x < w.dom.num_objects(); ++x) dobj.emplace(w.dom.object_name(x), x);
    for (Obj x = 0; x < w.cod.num_objects(); ++x) cobj.emplace(w.cod.object_name(x), x);
    for (Mor m = 0; m < w.dom.num_morphisms(); ++m) dmor.emplace(w.dom.morphism_name(m), m);
    for (Mor m = 0; m < w.cod.num_morphisms(); ++m) cmor.emplace(w.cod.morphism_name(m), m);
    w.obj_map.assign(w.dom.num_objects(), npos);
    w.mor_map.assign(w.dom.num_morphisms(), npos);
    for (auto const* s : doc.all("objmap")) {
      for (auto const& l : s->body) {
        detail::arity(doc, l, 2);
        Obj const x = detail::lookup(doc, l, l.tokens[0], dobj, "domain object");
        if (w.obj_map[x] != npos) doc.fail(l, l.tokens[0], "object mapped twice");
        w.obj_map[x] = detail::lookup(doc, l, l.tokens[1], cobj, "codomain object");
      }
    }
    for (auto const* s : doc.all("mormap")) {
      for (auto const& l : s->body) {
        detail::arity(doc, l, 2);
        Mor const m = detail::lookup(doc, l, l.tokens[0], dmor, "domain morphism");
        if (w.mor_map[m] != npos) doc.fail(l, l.tokens[0], "morphism mapped twice");
        w.mor_map[m] = detail::lookup(doc, l, l.tokens[1], cmor, "codomain morphism");
      }
    }
  }

  /// A FUNC file whose maps may be partial.
  inline GroupoidHom load_partial_functor(std::filesystem::path const& path,
                                          ValidateOptions const&        opt = {}) {
    auto        doc = load_document(path, {"dom", "cod", "objmap", "mormap"});
    GroupoidHom w{load_groupoid(detail::relative_to(doc.file, doc.value("dom")), opt),
                  load_groupoid(detail::relative_to(doc.file, doc.value("cod")), opt), {}, {}};
    read_maps(doc, w);
    return w;
  }

  inline GroupoidHom load_functor(std::filesystem::path const& path, ValidateOptions const& opt = {}) {
    auto w = load_partial_functor(path, opt);
    for (Obj x = 0; x < w.obj_map.size(); ++x) {
      if (w.obj_map[x] == npos) {
        throw ParseError(path.string(), 0, 0, "object '" + w.dom.object_name(x) + "' has no image");
      }
    }
    for (Mor m = 0; m < w.mor_map.size(); ++m) {
      if (w.mor_map[m] == npos) {
        throw ParseError(path.string(), 0, 0, "morphism '" + w.dom.morphism_name(m) + "' has no image");
      }
    }
    return w;
  }

  inline void write_functor(std::ostream& os, GroupoidHom const& w, std::string const& dom_file,
                            std::string const& cod_file) {
    os << "dom: " << dom_file << "\ncod: " << cod_file << "\nobjmap:\n";
    for (Obj x = 0; x < w.obj_map.size(); ++x) {
      os << w.dom.object_name(x) << ' ' << w.cod.object_name(w.obj_map[x]) << '\n';
    }
    os << "mormap:\n";
    for (Mor m = 0; m < w.mor_map.size(); ++m) {
      os << w.dom.morphism_name(m) << ' ' << w.cod.morphism_name(w.mor_map[m]) << '\n';
    }
  }

  // ---------------------------------------------------------------- NAT

  inline NaturalTransformation load_nat_trans(std::filesystem::path const& path,
                                              ValidateOptions const&        opt = {}) {
    auto doc = load_document(path, {"source", "target", "component"});
    NaturalTransformation n{load_functor(detail::relative_to(doc.file, doc.value("source")), opt),
                            load_functor(detail::relative_to(doc.file, doc.value("target")), opt),
                            {}};
    auto const&                d = n.source.dom;
    auto const&                c = n.source.cod;
    std::map<std::string, Obj> objs;
    std::map<std::string, Mor> mors;
    for (Obj x = 0; x < d.num_objects(); ++x) objs.emplace(d.object_name(x), x);
    for (Mor m = 0; m < c.num_morphisms(); ++m) mors.emplace(c.morphism_name(m), m);
    n.component.assign(d.num_objects(), npos);
    for (auto const& l : doc.get("component").body) {
      detail::arity(doc, l, 2);
      Obj const x    = detail::lookup(doc, l, l.tokens[0], objs, "object");
      n.component[x] = detail::lookup(doc, l, l.tokens[1], mors, "morphism");
    }
    for (Obj x = 0; x < d.num_objects(); ++x) {
      if (n.component[x] == npos) doc.fail(doc.get("component").header, 1, "no component at '" + d.object_name(x) + "'");
    }
    return n;
  }

  // ---------------------------------------------------------------- PROB

  /// Almost-product mode names inner, probe, proj and optionally `lift`, an
  /// inner hom probe → inner from which the section is built. Explicit mode
  /// adds total, detection, section and inclusion.
  struct ProbingManifest {
    Groupoid                   inner;
    Groupoid                   probe;
    std::vector<Obj>           proj;
    std::optional<GroupoidHom> lift;
    std::optional<ProbingDecomposition> explicit_form;
  };

  inline ProbingManifest load_probing(std::filesystem::path const& path, ValidateOptions const& opt = {}) {
    auto doc = load_document(path, {"inner", "probe", "total", "detection", "section", "inclusion",
                                    "lift", "proj"});
    auto rel = [&](std::string const& key) { return detail::relative_to(doc.file, doc.value(key)); };
    ProbingManifest m{load_groupoid(rel("inner"), opt), load_groupoid(rel("probe"), opt), {}, {}, {}};
    Groupoid        total = m.inner;
    bool const      explicit_mode = doc.find("total") != nullptr;
    if (explicit_mode) total = load_groupoid(rel("total"), opt);
    std::map<std::string, Obj> omega, sigma;
    for (Obj x = 0; x < total.num_objects(); ++x) omega.emplace(total.object_name(x), x);
    for (Obj x = 0; x < m.probe.num_objects(); ++x) sigma.emplace(m.probe.object_name(x), x);
    m.proj.assign(total.num_objects(), npos);
    for (auto const& l : doc.get("proj").body) {
      detail::arity(doc, l, 2);
      m.proj[detail::lookup(doc, l, l.tokens[0], omega, "object")] =
          detail::lookup(doc, l, l.tokens[1], sigma, "probe object");
    }
    for (Obj x = 0; x < m.proj.size(); ++x) {
      if (m.proj[x] == npos) doc.fail(doc.get("proj").header, 1, "no projection for '" + total.object_name(x) + "'");
    }
    if (doc.find("lift")) m.lift = load_functor(rel("lift"), opt);
    if (explicit_mode) {
      m.explicit_form = ProbingDecomposition{m.inner, m.probe, total, m.proj,
                                             load_functor(rel("inclusion"), opt),
                                             load_functor(rel("detection"), opt),
                                             load_functor(rel("section"), opt)};
    }
    return m;
  }

  // ---------------------------------------------------------------- CMPLX / PRES

  inline Word parse_word(Document const& doc, Line const& l, std::size_t first,
                         std::map<std::string, std::uint32_t> const& symbols) {
    Word w;
    for (std::size_t i = first; i < l.tokens.size(); ++i) {
      std::string s   = l.tokens[i].text;
      bool        inv = false;
      if (s.size() > 1 && s.back() == '-') {
        inv = true;
        s.pop_back();
      }
      auto it = symbols.find(s);
      if (it == symbols.end()) doc.fail(l, l.tokens[i], "unknown symbol '" + s + "'");
      w.push_back({it->second, inv});
    }
    return w;
  }

  inline TwoComplex parse_complex(std::string const& text, std::string const& file) {
    auto doc = parse_document(text, file, {"vertices", "edges", "faces"});
    TwoComplex                           c;
    std::map<std::string, Obj>           verts;
    std::map<std::string, std::uint32_t> edges;
    for (auto const& l : doc.get("vertices").body) {
      for (auto const& t : l.tokens) {
        if (!verts.emplace(t.text, Obj(c.vertices.size())).second) doc.fail(l, t, "duplicate vertex");
        c.vertices.push_back(t.text);
      }
    }
    if (auto const* s = doc.find("edges")) {
      for (auto const& l : s->body) {
        detail::arity(doc, l, 3);
        auto const& name = l.tokens[0].text;
        if (name.back() == '-') doc.fail(l, l.tokens[0], "edge names may not end in '-'");
        if (!edges.emplace(name, std::uint32_t(c.edges.size())).second) doc.fail(l, l.tokens[0], "duplicate edge");
        c.edges.push_back({name, detail::lookup(doc, l, l.tokens[1], verts, "vertex"),
                           detail::lookup(doc, l, l.tokens[2], verts, "vertex")});
      }
    }
    if (auto const* s = doc.find("faces")) {
      for (auto const& l : s->body) c.faces.push_back(parse_word(doc, l, 0, edges));
    }
    return c;
  }

  inline TwoComplex load_complex(std::filesystem::path const& path) {
    return parse_complex(read_file(path), path.string());
  }

  inline Presentation parse_presentation(std::string const& text, std::string const& file) {
    auto doc = parse_document(text, file, {"gens", "rels"});
    Presentation                         p;
    std::map<std::string, std::uint32_t> gens;
    for (auto const& l : doc.get("gens").body) {
      for (auto const& t : l.tokens) {
        if (!gens.emplace(t.text, std::uint32_t(p.generators.size())).second) doc.fail(l, t, "duplicate generator");
        p.generators.push_back(t.text);
      }
    }
    if (auto const* s = doc.find("rels")) {
      for (auto const& l : s->body) p.relators.push_back(parse_word(doc, l, 0, gens));
    }
    return p;
  }

  inline std::string word_string(std::vector<std::string> const& symbols, Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i ? " " : "") + symbols[w[i].symbol] + (w[i].inverse ? "-" : "");
    }
    return out;
  }

  inline void write_presentation(std::ostream& os, Presentation const& p) {
    os << "gens:\n";
    for (auto const& g : p.generators) os << g << '\n';
    os << "rels:\n";
    for (auto const& r : p.relators) os << word_string(p.generators, r) << '\n';
  }

  // ---------------------------------------------------------------- COVER

  struct CoverManifest {
    Groupoid parent;
    Covering covering;
  };

  inline CoverManifest load_cover(std::filesystem::path const& path, ValidateOptions const& opt = {}) {
    auto doc = load_document(path, {"parent", "target", "part"});
    CoverManifest m{load_groupoid(detail::relative_to(doc.file, doc.value("parent")), opt), {}};
    std::map<std::string, Obj> objs;
    for (Obj x = 0; x < m.parent.num_objects(); ++x) objs.emplace(m.parent.object_name(x), x);
    auto objects = [&](Line const& l) {
      std::vector<Obj> out;
      for (auto const& t : l.tokens) out.push_back(detail::lookup(doc, l, t, objs, "object"));
      return out;
    };
    std::vector<Obj> target = objects(doc.get("target").header);
    std::vector<std::vector<Obj>> ps;
    for (auto const* s : doc.all("part")) ps.push_back(objects(s->header));
    m.covering = restriction_covering(m.parent, target, ps);
    return m;
  }

  // ---------------------------------------------------------------- SLAB / HIST

  /// Slices in order; interior[k] holds the interior points of the block
  /// between slice k and slice k + 1.
  struct Slab {
    std::vector<Slice>                    slices;
    std::vector<std::vector<std::string>> interior;

    Block block(std::size_t k) const {
      if (k + 1 >= slices.size()) throw DomainError("slab has no block " + std::to_string(k + 1));
      return Block{slices[k], slices[k + 1], interior[k]};
    }
  };

  inline Slab parse_slab(std::string const& text, std::string const& file) {
    auto doc = parse_document(text, file, {"slice", "interior"});
    Slab slab;
    for (auto const& s : doc.sections) {
      if (s.name == "slice") {
        Slice       sl;
        std::size_t stars = 0;
        for (auto const& t : s.header.tokens) {
          std::string name = t.text;
          if (name.size() > 1 && name.front() == '*') {
            name.erase(0, 1);
            sl.marked = sl.points.size();
            ++stars;
          }
          sl.points.push_back(name);
        }
        if (sl.points.empty()) doc.fail(s.header, 1, "empty slice");
        if (stars != 1) doc.fail(s.header, 1, "a slice needs exactly one starred marked point");
        slab.slices.push_back(std::move(sl));
        slab.interior.emplace_back();
      } else {
        if (slab.slices.empty()) doc.fail(s.header, 1, "interior before the first slice");
        for (auto const& t : s.header.tokens) slab.interior.back().push_back(t.text);
      }
    }
    if (!slab.interior.empty() && !slab.interior.back().empty()) {
      doc.fail("interior points after the last slice");
    }
    return slab;
  }

  inline Slab load_slab(std::filesystem::path const& path) {
    return parse_slab(read_file(path), path.string());
  }

  /// A block history given by base values w(x) with a common source.
  inline BlockHistory load_history(std::filesystem::path const& path, ValidateOptions const& opt = {}) {
    auto doc  = load_document(path, {"slab", "block", "cod", "base"});
    auto slab = load_slab(detail::relative_to(doc.file, doc.value("slab")));
    auto cod  = load_groupoid(detail::relative_to(doc.file, doc.value("cod")), opt);
    std::size_t k = 0;
    {
      auto const& s = doc.get("block");
      std::string v = doc.value("block");
      try {
        k = std::stoul(v);
      } catch (std::exception const&) {
        doc.fail(s.header, 1, "block index must be a positive integer");
      }
      if (k == 0) doc.fail(s.header, 1, "block index must be a positive integer");
    }
    Block                      block = slab.block(k - 1);
    auto                       pts   = block.points();
    std::map<std::string, Obj> index;
    for (Obj i = 0; i < pts.size(); ++i) index.emplace(pts[i], i);
    std::map<std::string, Mor> mors;
    for (Mor m = 0; m < cod.num_morphisms(); ++m) mors.emplace(cod.morphism_name(m), m);
    std::vector<Mor> base(pts.size(), npos);
    for (auto const& l : doc.get("base").body) {
      detail::arity(doc, l, 2);
      base[detail::lookup(doc, l, l.tokens[0], index, "block point")] =
          detail::lookup(doc, l, l.tokens[1], mors, "morphism");
    }
    for (Obj i = 0; i < pts.size(); ++i) {
      if (base[i] == npos) doc.fail(doc.get("base").header, 1, "no base value at '" + pts[i] + "'");
    }
    return block_from_base(block, cod, base);
  }

  // ---------------------------------------------------------------- bundles

  inline void write_bundle(std::ostream& os, PrincipalBundle const& b) {
    for (Obj y = 0; y < b.fibers.size(); ++y) {
      os << "fiber " << b.probe.object_name(y) << ":";
      for (Obj xi : b.fibers[y]) os << ' ' << b.point_names[xi];
      os << '\n';
    }
    for (Obj xi = 0; xi < b.points.size(); ++xi) {
      for (Mor h = 0; h < b.group.order(); ++h) {
        os << "action: " << b.point_names[xi] << ' ' << b.group.name(h) << ' '
           << b.point_names[b.act(xi, h)] << '\n';
      }
    }
  }

}  // namespace gf::io

#endif  // GF_IO_HPP_
