#include "peirce/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "peirce/error.hpp"

namespace peirce::io {

  namespace {

    std::string idx(std::size_t i) {
      return std::to_string(i);
    }

    std::string escape_token(std::string const& key) {
      std::string out;
      for (char c : key) {
        if (c == '~') {
          out += "~0";
        } else if (c == '/') {
          out += "~1";
        } else {
          out += c;
        }
      }
      return out;
    }

    // Walks text that nlohmann already accepted and records where each
    // value starts.
    class PositionScanner {
     public:
      using Positions = std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>>;

      PositionScanner(std::string_view text, Positions& out) : _s(text), _out(out) {}

      void run() {
        value("");
      }

     private:
      bool more() const {
        return _i < _s.size();
      }
      char peek() const {
        return more() ? _s[_i] : '\0';
      }
      void advance() {
        if (_s[_i] == '\n') {
          ++_line;
          _col = 1;
        } else {
          ++_col;
        }
        ++_i;
      }
      void skip_ws() {
        while (more() && std::isspace(static_cast<unsigned char>(peek()))) {
          advance();
        }
      }
      std::string string_token() {
        std::string text;
        advance();  // opening quote
        while (more() && peek() != '"') {
          if (peek() == '\\') {
            advance();
          }
          text += peek();
          advance();
        }
        advance();
        return text;
      }
      void value(std::string const& pointer) {
        skip_ws();
        _out.push_back({pointer, {_line, _col}});
        char c = peek();
        if (c == '{' || c == '[') {
          bool object = c == '{';
          advance();
          skip_ws();
          if (peek() == (object ? '}' : ']')) {
            advance();
            return;
          }
          for (std::size_t k = 0;; ++k) {
            skip_ws();
            std::string child = pointer + "/";
            if (object) {
              child += escape_token(string_token());
              skip_ws();
              advance();  // ':'
            } else {
              child += idx(k);
            }
            value(child);
            skip_ws();
            bool last = peek() != ',';
            advance();
            if (last) {
              return;
            }
          }
        }
        if (c == '"') {
          string_token();
          return;
        }
        while (more() && std::string_view(",]} \t\r\n").find(peek()) == std::string_view::npos) {
          advance();
        }
      }

      std::string_view _s;
      Positions&       _out;
      std::size_t      _i = 0, _line = 1, _col = 1;
    };

    std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

    std::string read_text(std::filesystem::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    // Typed accessors on a Document at JSON pointers.
    struct Reader {
      Document const& doc;

      Json const* find(std::string const& p) const {
        Json::json_pointer ptr(p);
        return doc.root().contains(ptr) ? &doc.root().at(ptr) : nullptr;
      }
      Json const& need(std::string const& p) const {
        if (auto const* j = find(p)) {
          return *j;
        }
        auto parent = p.substr(0, p.rfind('/'));
        doc.fail(parent, "missing \"" + p.substr(p.rfind('/') + 1) + "\"");
      }
      std::int64_t integer(std::string const& p) const {
        auto const& j = need(p);
        if (!j.is_number_integer()) {
          doc.fail(p, "expected an integer");
        }
        return j.get<std::int64_t>();
      }
      std::size_t index(std::string const& p) const {
        auto v = integer(p);
        if (v < 0) {
          doc.fail(p, "expected a non-negative integer");
        }
        return static_cast<std::size_t>(v);
      }
      std::size_t index_below(std::string const& p, std::size_t bound, char const* what) const {
        auto v = index(p);
        if (v >= bound) {
          doc.fail(p, std::string("dangling ") + what + " index " + idx(v) + " (only "
                          + idx(bound) + ")");
        }
        return v;
      }
      std::size_t array(std::string const& p) const {
        auto const& j = need(p);
        if (!j.is_array()) {
          doc.fail(p, "expected an array");
        }
        return j.size();
      }
      Vec vec(std::string const& p) const {
        std::size_t n = array(p);
        Vec         v(n);
        for (std::size_t i = 0; i < n; ++i) {
          v[i] = integer(p + "/" + idx(i));
        }
        return v;
      }
      std::string text(std::string const& p) const {
        auto const& j = need(p);
        if (!j.is_string()) {
          doc.fail(p, "expected a string");
        }
        return j.get<std::string>();
      }
      void check_type(std::string const& at, std::string const& want) const {
        if (auto const* t = find(at + "/type")) {
          if (!t->is_string() || t->get<std::string>() != want) {
            doc.fail(at + "/type", "expected type \"" + want + "\"");
          }
        }
        if (!need(at).is_object()) {
          doc.fail(at, "expected a " + want + " object");
        }
      }
    };

    // Inline object, or a path to another file relative to the document.
    template <typename T, typename F>
    T resolve(Document const& doc, std::string const& at, F&& parse) {
      Reader r{doc};
      auto const& node = r.need(at);
      if (node.is_string()) {
        auto sub = read_document(doc.base_dir() / node.get<std::string>());
        return parse(sub, std::string());
      }
      return parse(doc, at);
    }

  }  // namespace

  Document::Document(std::string text, std::string origin) : _origin(std::move(origin)) {
    try {
      _root = Json::parse(text);
    } catch (Json::parse_error const& e) {
      auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
      std::string what = e.what();
      auto        cut  = what.find("syntax error");
      throw Error(ErrorKind::ParseError,
                  _origin + ":" + idx(line) + ":" + idx(col) + ": "
                      + (cut == std::string::npos ? what : what.substr(cut)));
    }
    PositionScanner(text, _positions).run();
  }

  std::string Document::where(std::string const& pointer) const {
    std::string p = pointer;
    for (;;) {
      for (auto const& [key, pos] : _positions) {
        if (key == p) {
          return _origin + ":" + idx(pos.first) + ":" + idx(pos.second);
        }
      }
      if (p.empty()) {
        return _origin + ":1:1";
      }
      p = p.substr(0, p.rfind('/'));
    }
  }

  void Document::fail(std::string const& pointer, std::string const& message) const {
    throw Error(ErrorKind::ParseError,
                where(pointer) + ": " + message + " (at " + (pointer.empty() ? "/" : pointer)
                    + ")");
  }

  Document read_document(std::filesystem::path const& path) {
    Document d(read_text(path), path.string());
    d.set_base_dir(path.parent_path());
    return d;
  }

  // ---------------------------------------------------------------- writers

  Json ring_to_json(FiniteRing const& ring) {
    return Json{{"type", "ring"},
                {"modulus", ring.modulus()},
                {"rank", ring.rank()},
                {"labels", ring.labels()},
                {"constants", ring.spec().constants}};
  }

  Json vectors_to_json(std::vector<Vec> const& vs) {
    return Json{{"type", "idempotents"}, {"elements", vs}};
  }

  Json category_to_json(SmallCategory const& cat) {
    Json morphisms = Json::array();
    for (std::size_t g = 0; g < cat.morphism_count(); ++g) {
      morphisms.push_back({{"label", cat.label(g)}, {"dom", cat.dom(g)}, {"cod", cat.cod(g)}});
    }
    Json identities = Json::array(), compose = Json::array();
    for (std::size_t a = 0; a < cat.object_count(); ++a) {
      identities.push_back(cat.identity(a));
    }
    for (std::size_t g = 0; g < cat.morphism_count(); ++g) {
      for (std::size_t h = 0; h < cat.morphism_count(); ++h) {
        if (cat.composable(g, h)) {
          compose.push_back({g, h, cat.compose(g, h)});
        }
      }
    }
    return Json{{"type", "category"},
                {"objects", cat.object_count()},
                {"morphisms", morphisms},
                {"identities", identities},
                {"compose", compose}};
  }

  Json monoid_to_json(Monoid const& m) {
    return Json{{"type", "monoid"},
                {"name", m.name},
                {"size", m.size},
                {"identity", m.identity},
                {"table", m.table}};
  }

  Json grading_to_json(Grading const& gr) {
    Json components = Json::array();
    for (auto const& c : gr.components) {
      components.push_back(c.basis());
    }
    return Json{{"type", "grading"},
                {"ring", ring_to_json(gr.ring)},
                {"category", category_to_json(gr.category)},
                {"components", components}};
  }

  Json system_to_json(SkewCategorySystem const& sys) {
    Json rings = Json::array();
    for (auto const& r : sys.object_rings) {
      rings.push_back(ring_to_json(r));
    }
    return Json{{"type", "system"},
                {"category", category_to_json(sys.category)},
                {"rings", rings},
                {"maps", sys.maps}};
  }

  // ---------------------------------------------------------------- readers

  FiniteRing ring_from(Document const& doc, std::string const& at) {
    return resolve<FiniteRing>(doc, at, [](Document const& d, std::string const& p) {
      Reader r{d};
      r.check_type(p, "ring");
      RingSpec spec;
      spec.modulus = r.integer(p + "/modulus");
      spec.rank    = r.index(p + "/rank");
      if (spec.rank > 64) {
        throw Error(ErrorKind::ParameterOutOfRange, "rank " + idx(spec.rank) + " is too large");
      }
      if (r.find(p + "/labels")) {
        std::size_t n = r.array(p + "/labels");
        for (std::size_t i = 0; i < n; ++i) {
          spec.labels.push_back(r.text(p + "/labels/" + idx(i)));
        }
      }
      std::size_t const n = spec.rank;
      if (r.find(p + "/constants")) {
        spec.constants = r.vec(p + "/constants");
      } else if (r.find(p + "/products")) {
        spec.constants.assign(n * n * n, 0);
        std::size_t count = r.array(p + "/products");
        for (std::size_t e = 0; e < count; ++e) {
          std::string q      = p + "/products/" + idx(e);
          std::size_t i      = r.index_below(q + "/i", n, "basis");
          std::size_t j      = r.index_below(q + "/j", n, "basis");
          Vec         result = r.vec(q + "/result");
          if (result.size() != n) {
            throw Error(ErrorKind::ShapeMismatch,
                        d.where(q + "/result") + ": product has " + idx(result.size())
                            + " coordinates, expected " + idx(n));
          }
          std::copy(result.begin(), result.end(),
                    spec.constants.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
        }
      } else {
        d.fail(p, "missing \"constants\" or \"products\"");
      }
      return make_ring(std::move(spec));
    });
  }

  std::vector<Vec> vectors_from(Document const& doc, std::string const& at) {
    Reader      r{doc};
    std::string p = at;
    if (r.need(at).is_object()) {
      r.check_type(at, "idempotents");
      p = at + "/elements";
    }
    std::size_t      n = r.array(p);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(r.vec(p + "/" + idx(i)));
    }
    return out;
  }

  CategorySpec category_spec_from(Document const& doc, std::string const& at) {
    return resolve<CategorySpec>(doc, at, [](Document const& d, std::string const& p) {
      Reader r{d};
      r.check_type(p, "category");
      CategorySpec spec;
      spec.objects  = r.index(p + "/objects");
      std::size_t q = r.array(p + "/morphisms");
      for (std::size_t g = 0; g < q; ++g) {
        std::string m = p + "/morphisms/" + idx(g);
        spec.dom.push_back(r.index_below(m + "/dom", spec.objects, "object"));
        spec.cod.push_back(r.index_below(m + "/cod", spec.objects, "object"));
        spec.labels.push_back(r.find(m + "/label") ? r.text(m + "/label") : "g" + idx(g));
      }
      std::size_t ids = r.array(p + "/identities");
      for (std::size_t a = 0; a < ids; ++a) {
        spec.identity.push_back(r.index_below(p + "/identities/" + idx(a), q, "morphism"));
      }
      spec.compose.assign(q * q, kUndefined);
      std::size_t c = r.array(p + "/compose");
      for (std::size_t e = 0; e < c; ++e) {
        std::string t = p + "/compose/" + idx(e);
        if (r.array(t) != 3) {
          d.fail(t, "expected [g, h, g h]");
        }
        std::size_t g = r.index_below(t + "/0", q, "morphism");
        std::size_t h = r.index_below(t + "/1", q, "morphism");
        std::size_t v = r.index_below(t + "/2", q, "morphism");
        if (spec.compose[g * q + h] != kUndefined) {
          d.fail(t, "composite of (" + idx(g) + "," + idx(h) + ") given twice");
        }
        spec.compose[g * q + h] = v;
      }
      return spec;
    });
  }

  SmallCategory category_from(Document const& doc, std::string const& at) {
    return make_category(category_spec_from(doc, at));
  }

  Monoid monoid_from(Document const& doc, std::string const& at) {
    return resolve<Monoid>(doc, at, [](Document const& d, std::string const& p) {
      Reader r{d};
      r.check_type(p, "monoid");
      Monoid m;
      m.name     = r.find(p + "/name") ? r.text(p + "/name") : "M";
      m.size     = r.index(p + "/size");
      m.identity = r.index(p + "/identity");
      m.table.clear();
      for (auto v : r.vec(p + "/table")) {
        if (v < 0) {
          d.fail(p + "/table", "negative entry");
        }
        m.table.push_back(static_cast<std::size_t>(v));
      }
      validate_monoid(m);
      return m;
    });
  }

  Grading grading_from(Document const& doc) {
    Reader r{doc};
    r.check_type("", "grading");
    FiniteRing            ring = ring_from(doc, "/ring");
    SmallCategory         cat  = category_from(doc, "/category");
    std::vector<Subgroup> components;
    std::size_t           q = r.array("/components");
    for (std::size_t g = 0; g < q; ++g) {
      std::string      c = "/components/" + idx(g);
      std::vector<Vec> rows;
      std::size_t      k = r.array(c);
      for (std::size_t i = 0; i < k; ++i) {
        Vec v = r.vec(c + "/" + idx(i));
        if (v.size() != ring.rank()) {
          throw Error(ErrorKind::ShapeMismatch,
                      doc.where(c + "/" + idx(i)) + ": vector of length " + idx(v.size())
                          + " in a rank " + idx(ring.rank()) + " ring");
        }
        rows.push_back(std::move(v));
      }
      components.emplace_back(ring, std::move(rows));
    }
    return attach_grading(ring, std::move(cat), components);
  }

  SkewCategorySystem system_from(Document const& doc) {
    Reader r{doc};
    r.check_type("", "system");
    SmallCategory           cat = category_from(doc, "/category");
    std::vector<FiniteRing> rings;
    std::size_t             p = r.array("/rings");
    for (std::size_t a = 0; a < p; ++a) {
      rings.push_back(ring_from(doc, "/rings/" + idx(a)));
    }
    std::vector<RingMap> maps;
    std::size_t          q = r.array("/maps");
    for (std::size_t g = 0; g < q; ++g) {
      maps.push_back(r.vec("/maps/" + idx(g)));
    }
    return validate_system(std::move(cat), std::move(rings), std::move(maps));
  }

  FiniteRing load_ring(std::filesystem::path const& path) {
    return ring_from(read_document(path));
  }

  std::vector<Vec> load_vectors(std::filesystem::path const& path) {
    std::string text  = read_text(path);
    auto        first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
      return vectors_from(Document(std::move(text), path.string()));
    }
    return parse_vector_lines(text, path.string());
  }

  SmallCategory load_category(std::filesystem::path const& path) {
    return category_from(read_document(path));
  }

  Monoid load_monoid(std::filesystem::path const& path) {
    return monoid_from(read_document(path));
  }

  Grading load_grading(std::filesystem::path const& path) {
    return grading_from(read_document(path));
  }

  SkewCategorySystem load_system(std::filesystem::path const& path) {
    return system_from(read_document(path));
  }

  std::vector<Vec> parse_vector_lines(std::string_view text, std::string const& origin) {
    std::vector<Vec> out;
    std::size_t      line = 1, start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto content = text.substr(start, end - start);
      if (auto hash = content.find('#'); hash != std::string_view::npos) {
        content = content.substr(0, hash);
      }
      Vec         v;
      std::size_t i = 0;
      while (i < content.size()) {
        if (std::isspace(static_cast<unsigned char>(content[i])) || content[i] == ',') {
          ++i;
          continue;
        }
        std::size_t j = i;
        if (content[j] == '-') {
          ++j;
        }
        while (j < content.size() && std::isdigit(static_cast<unsigned char>(content[j]))) {
          ++j;
        }
        bool digits = j > i + (content[i] == '-' ? 1 : 0);
        bool ends   = j == content.size() || std::isspace(static_cast<unsigned char>(content[j]))
                    || content[j] == ',';
        if (!digits || !ends || j - i > 18) {
          throw Error(ErrorKind::ParseError, origin + ":" + idx(line) + ":" + idx(i + 1)
                                                 + ": expected an integer");
        }
        v.push_back(std::stoll(std::string(content.substr(i, j - i))));
        i = j;
      }
      if (!v.empty()) {
        out.push_back(std::move(v));
      }
      if (end == text.size()) {
        break;
      }
      start = end + 1;
      ++line;
    }
    return out;
  }

  std::string canonical(Json const& j) {
    return j.dump();
  }

  std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::string digest(Json const& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical(j))));
    return buf;
  }

}  // namespace peirce::io
