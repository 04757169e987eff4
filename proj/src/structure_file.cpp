#include "predom/structure_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace predom {

std::string_view kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Predomain: return "predomain";
    case StructureKind::PreCuntz: return "precuntz";
    case StructureKind::Model: return "model";
  }
  return "?";
}

Predomain StructureFile::predomain() const {
  return Predomain(elements, rel);
}

MonoidTable StructureFile::monoid() const {
  if (kind != StructureKind::PreCuntz) {
    throw PreconditionError("not a precuntz file");
  }
  return MonoidTable(elements, *zero, add);
}

PreCuntz StructureFile::precuntz() const {
  return PreCuntz(monoid(), rel);
}

FinXModel StructureFile::model() const {
  if (kind != StructureKind::Model) {
    throw PreconditionError("not a model file");
  }
  return FinXModel(elements.names());
}

PositiveElement StructureFile::fn(std::string_view name) const {
  for (auto const& f : fns) {
    if (f.name == name) {
      return PositiveElement(model(), f.values);
    }
  }
  throw PreconditionError("no fn named '" + std::string(name) + "'");
}

namespace {

  struct Token {
    std::string text;
    std::size_t column;
  };

  std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t        i = 0;
    while (i < line.size()) {
      if (line[i] == '#') {
        break;
      }
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r'
             && line[i] != '#') {
        ++i;
      }
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
  }

  class Parser {
   public:
    StructureFile run(std::string_view text) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++line_;
        auto toks = tokenize(text.substr(pos, end - pos));
        if (!toks.empty()) {
          directive(toks);
        }
        pos = end + 1;
      }
      return finish();
    }

   private:
    [[noreturn]] void fail(Token const& t, std::string const& msg) const {
      throw ParseError(line_, t.column, msg);
    }

    void arity(std::vector<Token> const& toks, std::size_t n) const {
      if (toks.size() != n) {
        fail(toks.size() > n ? toks[n] : toks.back(),
             "'" + toks[0].text + "' takes " + std::to_string(n - 1) + " argument(s)");
      }
    }

    std::size_t element(Token const& t) const {
      auto it = index_.find(t.text);
      if (it == index_.end()) {
        fail(t, "undeclared element '" + t.text + "'");
      }
      return it->second;
    }

    void require_kind(Token const& t, StructureKind k) const {
      if (*kind_ != k) {
        fail(t, "'" + t.text + "' is not allowed in a " + std::string(kind_name(*kind_)) + " file");
      }
    }

    void directive(std::vector<Token> const& toks) {
      auto const& head = toks[0];
      if (head.text == "kind") {
        arity(toks, 2);
        if (kind_) {
          fail(head, "duplicate kind");
        }
        auto const& k = toks[1].text;
        if (k == "predomain") {
          kind_ = StructureKind::Predomain;
        } else if (k == "precuntz") {
          kind_ = StructureKind::PreCuntz;
        } else if (k == "model") {
          kind_ = StructureKind::Model;
        } else {
          fail(toks[1], "unknown kind '" + k + "'");
        }
        return;
      }
      if (!kind_) {
        fail(head, "file must start with 'kind'");
      }
      if (head.text == "elements" || head.text == "points") {
        bool const model = *kind_ == StructureKind::Model;
        if ((head.text == "points") != model) {
          fail(head, model ? "models declare 'points'" : "use 'elements' to declare the carrier");
        }
        if (!names_.empty()) {
          fail(head, "carrier declared twice");
        }
        if (toks.size() < 2) {
          fail(head, "empty carrier");
        }
        if (toks.size() - 1 > kMaxCarrierSize) {
          fail(toks[kMaxCarrierSize + 1], "more than 64 elements");
        }
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (index_.count(toks[i].text) != 0) {
            fail(toks[i], "duplicate label '" + toks[i].text + "'");
          }
          if (toks[i].text.find_first_of(":=,") != std::string::npos) {
            fail(toks[i], "labels may not contain ':', '=' or ','");
          }
          index_.emplace(toks[i].text, names_.size());
          names_.push_back(toks[i].text);
        }
        rel_ = Relation(names_.size());
        return;
      }
      if (names_.empty()) {
        fail(head, "carrier must be declared before '" + head.text + "'");
      }
      auto const n = names_.size();
      if (head.text == "rel") {
        if (*kind_ == StructureKind::Model) {
          fail(head, "'rel' is not allowed in a model file");
        }
        arity(toks, 3);
        auto a = element(toks[1]);
        auto b = element(toks[2]);
        if (rel_.holds(a, b)) {
          fail(head, "duplicate rel " + toks[1].text + " " + toks[2].text);
        }
        rel_.set(a, b);
      } else if (head.text == "zero") {
        require_kind(head, StructureKind::PreCuntz);
        arity(toks, 2);
        if (zero_) {
          fail(head, "duplicate zero");
        }
        zero_ = element(toks[1]);
      } else if (head.text == "add") {
        require_kind(head, StructureKind::PreCuntz);
        arity(toks, 4);
        auto a = element(toks[1]);
        auto b = element(toks[2]);
        auto c = element(toks[3]);
        if (add_.empty()) {
          add_.assign(n * n, n);
        }
        if (add_[a * n + b] != n) {
          fail(head, "duplicate add " + toks[1].text + " " + toks[2].text);
        }
        add_[a * n + b] = c;
      } else if (head.text == "fn") {
        require_kind(head, StructureKind::Model);
        if (toks.size() < 2 || toks[1].text.size() < 2 || toks[1].text.back() != ':') {
          fail(toks.size() < 2 ? head : toks[1], "expected 'fn name:'");
        }
        NamedFn f{toks[1].text.substr(0, toks[1].text.size() - 1), {}};
        for (auto const& g : fns_) {
          if (g.name == f.name) {
            fail(toks[1], "duplicate fn '" + f.name + "'");
          }
        }
        std::vector<std::optional<Rational>> vals(n);
        for (std::size_t i = 2; i < toks.size(); ++i) {
          auto eq = toks[i].text.find('=');
          if (eq == std::string::npos) {
            fail(toks[i], "expected point=value");
          }
          Token pt{toks[i].text.substr(0, eq), toks[i].column};
          auto  x = element(pt);
          if (vals[x]) {
            fail(toks[i], "point '" + pt.text + "' given twice");
          }
          try {
            vals[x] = parse_rational(toks[i].text.substr(eq + 1));
          } catch (PreconditionError const&) {
            fail(Token{"", toks[i].column + eq + 1}, "malformed rational");
          }
          if (*vals[x] < 0) {
            fail(Token{"", toks[i].column + eq + 1}, "values must be nonnegative");
          }
        }
        for (std::size_t x = 0; x < n; ++x) {
          if (!vals[x]) {
            fail(toks[1], "fn '" + f.name + "' has no value at '" + names_[x] + "'");
          }
          f.values.push_back(*vals[x]);
        }
        fns_.push_back(std::move(f));
      } else {
        fail(head, "unknown directive '" + head.text + "'");
      }
    }

    StructureFile finish() {
      Token const eof{"", 1};
      if (!kind_) {
        fail(eof, "missing 'kind'");
      }
      if (names_.empty()) {
        fail(eof, *kind_ == StructureKind::Model ? "missing 'points'" : "missing 'elements'");
      }
      auto const n = names_.size();
      if (*kind_ == StructureKind::PreCuntz) {
        if (!zero_) {
          fail(eof, "missing 'zero'");
        }
        if (add_.empty()) {
          fail(eof, "missing addition table");
        }
        for (std::size_t i = 0; i < n * n; ++i) {
          if (add_[i] == n) {
            fail(eof, "addition table has no entry for " + names_[i / n] + " + " + names_[i % n]);
          }
        }
      }
      return StructureFile{*kind_, Carrier(names_), rel_, zero_, add_, fns_};
    }

    std::size_t                        line_ = 0;
    std::optional<StructureKind>       kind_;
    std::vector<std::string>           names_;
    std::map<std::string, std::size_t> index_;
    Relation                           rel_;
    std::optional<std::size_t>         zero_;
    std::vector<std::size_t>           add_;
    std::vector<NamedFn>               fns_;
  };

}  // namespace

StructureFile parse_structure(std::string_view text) {
  return Parser().run(text);
}

StructureFile read_structure(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

std::string emit_structure(StructureFile const& s) {
  std::ostringstream out;
  auto const&        names = s.elements.names();
  auto const         n     = names.size();
  out << "kind " << kind_name(s.kind) << "\n";
  out << (s.kind == StructureKind::Model ? "points" : "elements");
  for (auto const& name : names) {
    out << " " << name;
  }
  out << "\n";
  if (s.kind == StructureKind::PreCuntz) {
    out << "zero " << names[*s.zero] << "\n";
  }
  if (s.kind != StructureKind::Model) {
    for (auto [a, b] : s.rel.pairs()) {
      out << "rel " << names[a] << " " << names[b] << "\n";
    }
  }
  if (s.kind == StructureKind::PreCuntz) {
    for (std::size_t i = 0; i < n * n; ++i) {
      out << "add " << names[i / n] << " " << names[i % n] << " " << names[s.add[i]] << "\n";
    }
  }
  for (auto const& f : s.fns) {
    out << "fn " << f.name << ":";
    for (std::size_t x = 0; x < n; ++x) {
      out << " " << names[x] << "=" << format_rational(f.values[x]);
    }
    out << "\n";
  }
  return out.str();
}

StructureFile predomain_file(Predomain const& p) {
  return StructureFile{StructureKind::Predomain, p.carrier(), p.rel(), std::nullopt, {}, {}};
}

}  // namespace predom
