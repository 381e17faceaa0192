// Error types and validation reports shared by every module.
#ifndef GF_ERROR_HPP_
#define GF_ERROR_HPP_

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gf {

  /// Base of all library exceptions.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Tables or maps referencing identifiers that do not exist.
  class MalformedError : public Error {
   public:
    using Error::Error;
  };

  /// Input text that cannot be parsed; carries a 1-based line/column.
  class ParseError : public Error {
   public:
    ParseError(std::string file, std::size_t line, std::size_t column,
               std::string const& what)
        : Error(format(file, line, column, what)),
          file_(std::move(file)),
          line_(line),
          column_(column) {}

    std::string const& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    static std::string format(std::string const& file, std::size_t line,
                              std::size_t column, std::string const& what) {
      std::ostringstream os;
      os << file << ':' << line << ':' << column << ": " << what;
      return os.str();
    }

    std::string file_;
    std::size_t line_;
    std::size_t column_;
  };

  /// A mathematical precondition failed; `witness` names the offending items.
  class DomainError : public Error {
   public:
    DomainError(std::string const& what, std::vector<std::string> witness = {})
        : Error(format(what, witness)), witness_(std::move(witness)) {}

    std::vector<std::string> const& witness() const noexcept {
      return witness_;
    }

   private:
    static std::string format(std::string const&              what,
                              std::vector<std::string> const& witness) {
      std::string out = what;
      if (!witness.empty()) {
        out += " [witness:";
        for (auto const& w : witness) {
          out += ' ';
          out += w;
        }
        out += ']';
      }
      return out;
    }

    std::vector<std::string> witness_;
  };

  struct Violation {
    std::string              rule;
    std::vector<std::string> witness;
    std::string              detail;
  };

  /// Outcome of a law check. Empty means every checked law holds.
  class Report {
   public:
    void add(std::string rule, std::vector<std::string> witness,
             std::string detail = {}) {
      items_.push_back({std::move(rule), std::move(witness), std::move(detail)});
    }

    void merge(Report const& other, std::string const& prefix = {}) {
      for (auto const& v : other.items_) {
        items_.push_back(
            {prefix.empty() ? v.rule : prefix + "." + v.rule, v.witness,
             v.detail});
      }
    }

    bool ok() const noexcept { return items_.empty(); }
    std::size_t size() const noexcept { return items_.size(); }
    std::vector<Violation> const& violations() const noexcept { return items_; }

    std::size_t count(std::string const& rule) const {
      std::size_t n = 0;
      for (auto const& v : items_) {
        n += (v.rule == rule);
      }
      return n;
    }

    friend std::ostream& operator<<(std::ostream& os, Report const& r) {
      for (auto const& v : r.items_) {
        os << "violation rule=" << v.rule << " witness=";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          os << (i ? "," : "") << v.witness[i];
        }
        if (!v.detail.empty()) {
          os << " detail=" << v.detail;
        }
        os << '\n';
      }
      return os;
    }

   private:
    std::vector<Violation> items_;
  };

}  // namespace gf

#endif  // GF_ERROR_HPP_
