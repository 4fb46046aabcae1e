// JSON file formats shared by the command line tool, the corpus manifests and
// the Python bindings.
//
//   ring         {"modulus": m, "rank": n, "labels": [...], "constants": [n^3]}
//                or "products": [{"i": i, "j": j, "result": [n]}] (sparse)
//   idempotents  {"elements": [[n], ...]}, or plain text with one
//                whitespace separated vector per line ('#' comments)
//   category     {"objects": p, "morphisms": [{"label", "dom", "cod"}],
//                 "identities": [p], "compose": [[g, h, g h], ...]}
//   monoid       {"name", "size", "identity", "table": [k^2]}
//   grading      {"ring": R, "category": C, "components": [[[n], ...], ...]}
//   system       {"category": C, "rings": [R, ...], "maps": [[...], ...]}
//
// R and C are either inline objects or paths relative to the referring file.
// Every document may carry "type"; when present it must match.

#ifndef PEIRCE_IO_HPP_
#define PEIRCE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "peirce/finring.hpp"
#include "peirce/graded.hpp"
#include "peirce/skewalg.hpp"
#include "peirce/smallcat.hpp"

namespace peirce::io {

  using Json = nlohmann::json;

  // Parsed text plus the line/column of every value, for diagnostics.
  class Document {
   public:
    // Throws ParseError "<origin>:<line>:<col>: ...".
    Document(std::string text, std::string origin);

    Json const&        root() const noexcept { return _root; }
    std::string const& origin() const noexcept { return _origin; }
    std::filesystem::path const& base_dir() const noexcept { return _base; }
    void set_base_dir(std::filesystem::path base) { _base = std::move(base); }

    // "<origin>:<line>:<col>" of the value at a JSON pointer.
    std::string where(std::string const& pointer) const;
    [[noreturn]] void fail(std::string const& pointer, std::string const& message) const;

   private:
    std::string                                 _origin;
    std::filesystem::path                       _base;
    Json                                        _root;
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> _positions;
  };

  Document read_document(std::filesystem::path const& path);

  Json ring_to_json(FiniteRing const& ring);
  Json vectors_to_json(std::vector<Vec> const& vs);
  Json category_to_json(SmallCategory const& cat);
  Json monoid_to_json(Monoid const& m);
  Json grading_to_json(Grading const& gr);
  Json system_to_json(SkewCategorySystem const& sys);

  // Readers validate through the library; schema problems are ParseError,
  // semantic problems keep the library's error kind.
  FiniteRing         ring_from(Document const& doc, std::string const& at = "");
  std::vector<Vec>   vectors_from(Document const& doc, std::string const& at = "");
  SmallCategory      category_from(Document const& doc, std::string const& at = "");
  CategorySpec       category_spec_from(Document const& doc, std::string const& at = "");
  Monoid             monoid_from(Document const& doc, std::string const& at = "");
  Grading            grading_from(Document const& doc);
  SkewCategorySystem system_from(Document const& doc);

  FiniteRing         load_ring(std::filesystem::path const& path);
  std::vector<Vec>   load_vectors(std::filesystem::path const& path);
  SmallCategory      load_category(std::filesystem::path const& path);
  Monoid             load_monoid(std::filesystem::path const& path);
  Grading            load_grading(std::filesystem::path const& path);
  SkewCategorySystem load_system(std::filesystem::path const& path);

  // One vector per non-empty line; throws ParseError with line/column.
  std::vector<Vec> parse_vector_lines(std::string_view text, std::string const& origin);

  std::string   canonical(Json const& j);
  std::uint64_t fnv1a(std::string_view bytes);
  std::string   digest(Json const& j);  // 16 hex digits of fnv1a(canonical(j))

}  // namespace peirce::io

#endif  // PEIRCE_IO_HPP_
