// Run configuration shared by the command-line front end and the selftest.
#ifndef GF_CONFIG_HPP_
#define GF_CONFIG_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "io.hpp"

namespace gf {

  struct RunConfig {
    std::size_t   limit         = 1000000;  // functor enumeration cap
    std::size_t   budget        = 1000000;  // gauge search candidates
    std::size_t   factor_budget = 100000;   // factorization search nodes
    std::size_t   threshold     = 64;       // exhaustive associativity up to this size
    std::size_t   samples       = 20000;    // sampled triples beyond it
    std::uint64_t seed          = 7;
    bool          machine       = false;

    ValidateOptions validation() const { return {threshold, samples, seed}; }
  };

  namespace detail {
    inline std::uint64_t positive(io::Document const& doc, io::Line const& l, std::string const& v) {
      std::size_t   used = 0;
      std::uint64_t n    = 0;
      try {
        n = std::stoull(v, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != v.size() || n == 0 || v.front() == '-') {
        doc.fail(l, 1, "expected a positive integer, got '" + v + "'");
      }
      return n;
    }
  }  // namespace detail

  /// Lines `key=value` (spaces around '=' allowed). Keys match the flags.
  inline void apply_config_text(RunConfig& cfg, std::string const& text, std::string const& file) {
    io::Document       doc{file, {}};
    std::istringstream in(text);
    std::string        raw;
    std::size_t        number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      std::string line = trim(raw);
      if (line.empty()) continue;
      io::Line l{number, {}};
      auto     eq = line.find('=');
      if (eq == std::string::npos) doc.fail(l, 1, "expected key=value");
      std::string key = trim(line.substr(0, eq));
      std::string val = trim(line.substr(eq + 1));
      if (key == "limit") {
        cfg.limit = detail::positive(doc, l, val);
      } else if (key == "budget") {
        cfg.budget = detail::positive(doc, l, val);
      } else if (key == "factor-budget") {
        cfg.factor_budget = detail::positive(doc, l, val);
      } else if (key == "threshold") {
        cfg.threshold = detail::positive(doc, l, val);
      } else if (key == "samples") {
        cfg.samples = detail::positive(doc, l, val);
      } else if (key == "seed") {
        cfg.seed = detail::positive(doc, l, val);
      } else if (key == "machine") {
        if (val != "true" && val != "false") doc.fail(l, 1, "machine takes true or false");
        cfg.machine = val == "true";
      } else {
        doc.fail(l, 1, "unknown key '" + key + "'");
      }
    }
  }

  /// Defaults, then the file named by GF_CONFIG when it is set.
  inline RunConfig load_config() {
    RunConfig cfg;
    if (char const* path = std::getenv("GF_CONFIG"); path != nullptr && *path != '\0') {
      apply_config_text(cfg, io::read_file(path), path);
    }
    return cfg;
  }

}  // namespace gf

#endif  // GF_CONFIG_HPP_
