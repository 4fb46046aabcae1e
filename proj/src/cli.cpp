#include "peirce/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "peirce/corpus.hpp"
#include "peirce/error.hpp"
#include "peirce/graded.hpp"
#include "peirce/idempotents.hpp"
#include "peirce/io.hpp"
#include "peirce/skewalg.hpp"
#include "peirce/smallcat.hpp"
#include "peirce/verify.hpp"

namespace peirce::cli {

  namespace {

    using io::Json;
    namespace fs = std::filesystem;

    // Lattice listings past this many nodes are summarised by size only.
    constexpr std::size_t kListLimit = 256;

    struct Options {
      bool        no_timings  = false;
      bool        quiet       = false;
      std::size_t max_lattice = kDefaultLatticeCap;
    };

    class Report {
     public:
      explicit Report(std::string command) : _command(std::move(command)) {}

      void input(std::string const& role, std::string const& path, Json const& canonical) {
        _inputs.push_back({{"role", role}, {"path", path}, {"digest", io::digest(canonical)}});
      }

      void verdict(std::string const& name, bool holds) {
        _verdicts[name] = holds;
      }

      void verdict(std::string const& name, Verdict const& v) {
        _verdicts[name] = v.holds;
        if (!v.holds) {
          Json w{{"indices", v.witness}, {"reason", v.reason}};
          if (!v.product.empty()) {
            w["product"] = v.product;
          }
          _witnesses[name] = std::move(w);
        }
      }

      void witness(std::string const& name, Json w) {
        _witnesses[name] = std::move(w);
      }

      Json& details() {
        return _details;
      }

      template <class F>
      auto timed(std::string const& phase, F&& f) {
        auto start = std::chrono::steady_clock::now();
        auto guard = [&] {
          _timings[phase] =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        };
        if constexpr (std::is_void_v<decltype(f())>) {
          f();
          guard();
        } else {
          auto r = f();
          guard();
          return r;
        }
      }

      bool all_hold() const {
        for (auto const& [name, v] : _verdicts.items()) {
          if (!v.get<bool>()) {
            return false;
          }
        }
        return true;
      }

      int emit(std::ostream& out, Options const& opt) const {
        if (opt.quiet) {
          for (auto const& [name, v] : _verdicts.items()) {
            out << name << ": " << (v.get<bool>() ? "true" : "false") << "\n";
          }
        } else {
          Json j{{"command", _command},
                 {"tool_version", kToolVersion},
                 {"inputs", _inputs},
                 {"verdicts", _verdicts},
                 {"witnesses", _witnesses},
                 {"details", _details}};
          if (!opt.no_timings) {
            j["timings"] = _timings;
          }
          out << j.dump(2) << "\n";
        }
        return all_hold() ? 0 : 1;
      }

     private:
      std::string _command;
      Json        _inputs    = Json::array();
      Json        _verdicts  = Json::object();
      Json        _witnesses = Json::object();
      Json        _details   = Json::object();
      Json        _timings   = Json::object();
    };

    Json tri_details(TriReport const& r) {
      return {{"agree", r.agree}};
    }

    void tri_verdicts(Report& rep, TriReport const& r) {
      rep.verdict("condition1", r.condition1);
      rep.verdict("condition2", r.condition2);
      rep.verdict("condition3", r.condition3);
    }

    Json bases(std::vector<Subgroup> const& nodes) {
      Json j = Json::array();
      for (auto const& s : nodes) {
        j.push_back(s.basis());
      }
      return j;
    }

    Json poset_json(SubgroupPoset const& p) {
      Json j{{"size", p.size()}, {"height", p.height}};
      if (p.size() <= kListLimit) {
        j["nodes"]  = bases(p.nodes);
        j["covers"] = p.covers;
      }
      return j;
    }

    Json lattice_json(IdealLattice const& l) {
      Json j{{"side", to_string(l.side)}, {"size", l.size()}, {"height", l.height}};
      if (l.size() <= kListLimit) {
        Json ideals = Json::array();
        for (auto const& i : l.ideals) {
          ideals.push_back(i.subgroup.basis());
        }
        j["ideals"] = ideals;
        j["covers"] = l.cover_relation;
      }
      return j;
    }

    FiniteRing read_ring(Report& rep, std::string const& path) {
      auto ring = io::load_ring(path);
      rep.input("ring", path, io::ring_to_json(ring));
      return ring;
    }

    // The idempotent file may carry its own ring under "ring" when the ring
    // argument is omitted.
    std::pair<FiniteRing, std::vector<Element>> read_set(Report&                    rep,
                                                         std::vector<std::string> const& args) {
      std::optional<FiniteRing> ring;
      std::vector<Vec>          vs;
      std::string const&        path = args.back();
      if (args.size() == 2) {
        ring = read_ring(rep, args[0]);
        vs   = io::load_vectors(path);
      } else {
        auto doc = io::read_document(path);
        if (!doc.root().is_object() || !doc.root().contains("ring")) {
          doc.fail("", "no ring given and the idempotent file does not name one");
        }
        ring = io::ring_from(doc, "/ring");
        rep.input("ring", path + "#/ring", io::ring_to_json(*ring));
        vs = io::vectors_from(doc);
      }
      rep.input("idempotents", path, io::vectors_to_json(vs));
      std::vector<Element> es;
      for (auto& v : vs) {
        es.push_back(ring->element(std::move(v)));
      }
      return {*ring, std::move(es)};
    }

    std::vector<Vec> coords(std::vector<Element> const& es) {
      std::vector<Vec> out;
      for (auto const& e : es) {
        out.push_back(e.coords());
      }
      return out;
    }

    // ------------------------------------------------------------ commands

    Report check_ring(std::string const& path, Options const& opt) {
      Report rep("check-ring");
      auto   ring = rep.timed("parse", [&] { return read_ring(rep, path); });
      rep.verdict("associative", true);
      auto& d       = rep.details();
      d["modulus"]  = ring.modulus();
      d["rank"]     = ring.rank();
      d["order"]    = ring.order();
      auto identity = find_identity(ring);
      d["unital"]   = identity.has_value();
      if (identity) {
        d["identity"] = identity->coords();
      }
      auto stats = rep.timed("lattices", [&] { return lattice_stats(ring, opt.max_lattice); });
      d["left_ideals"]  = {{"size", stats.left_size}, {"height", stats.left_height}};
      d["right_ideals"] = {{"size", stats.right_size}, {"height", stats.right_height}};
      return rep;
    }

    Report peirce_cmd(std::vector<std::string> const& args) {
      Report rep("peirce");
      auto [ring, es] = read_set(rep, args);
      auto audit      = audit_complete_set(ring, es);
      rep.verdict("nonzero", audit.nonzero);
      rep.verdict("idempotent", audit.idempotent);
      rep.verdict("orthogonal", audit.orthogonal);
      rep.verdict("left_complete", audit.left_complete);
      rep.verdict("right_complete", audit.right_complete);
      if (audit.failure) {
        rep.witness("first_failure", {{"kind", to_string(audit.failure->kind())},
                                      {"message", audit.failure->detail()},
                                      {"elements", coords(es)}});
        return rep;
      }
      auto table = rep.timed("decompose", [&] { return peirce_table(validate_complete_set(ring, es)); });
      Json comps = Json::array();
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
          auto const& c = table.at(i, j);
          comps.push_back({{"i", i}, {"j", j}, {"order", c.order()}, {"basis", c.basis()}});
        }
      }
      Json corners = Json::array();
      for (auto const& c : table.corners) {
        corners.push_back(io::ring_to_json(c.ring));
      }
      rep.details()["components"] = comps;
      rep.details()["corners"]    = corners;
      return rep;
    }

    Report check_strong(std::vector<std::string> const& args) {
      Report rep("check-strong");
      auto [ring, es] = read_set(rep, args);
      auto table      = peirce_table(validate_complete_set(ring, es));
      auto report     = rep.timed("conditions", [&] { return strong_condition_report(table); });
      tri_verdicts(rep, report);
      rep.details() = tri_details(report);
      return rep;
    }

    Report ideal_lattice(std::string const&  path,
                         std::string const&  side,
                         std::string const&  idems,
                         Options const&      opt) {
      Report rep("ideal-lattice");
      if (idems.empty()) {
        auto ring = read_ring(rep, path);
        Json out  = Json::array();
        for (Side s : {Side::left, Side::right}) {
          if (side == "both" || side == to_string(s)) {
            auto l = rep.timed(std::string(to_string(s)),
                               [&] { return enumerate_one_sided_ideals(ring, s, opt.max_lattice); });
            out.push_back(lattice_json(l));
          }
        }
        rep.verdict("enumerated", true);
        rep.details()["lattices"] = out;
        return rep;
      }
      auto [ring, es] = read_set(rep, {path, idems});
      auto table      = peirce_table(validate_complete_set(ring, es));
      rep.verdict("strong", is_strong(table));
      if (!is_strong(table)) {
        rep.verdict("condition3", strong_condition_report(table).condition3);
        return rep;
      }
      Json out = Json::array();
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table.size(); ++j) {
          if (table.at(i, j).is_zero()) {
            continue;
          }
          for (Side s : {Side::left, Side::right}) {
            if (side != "both" && side != to_string(s)) {
              continue;
            }
            auto c = rep.timed("correspondence", [&] {
              return corner_lattice_correspondence(table, i, j, s, opt.max_lattice);
            });
            std::string name = "correspondence_" + std::to_string(i) + "_" + std::to_string(j)
                             + "_" + std::string(to_string(s));
            rep.verdict(name, c.holds());
            Json entry{{"i", i},
                       {"j", j},
                       {"side", to_string(s)},
                       {"ideals", poset_json(c.ideals)},
                       {"submodules", poset_json(c.submodules)},
                       {"mutually_inverse", c.mutually_inverse},
                       {"alpha_monotone", c.alpha_monotone},
                       {"beta_monotone", c.beta_monotone},
                       {"sizes_equal", c.sizes_equal},
                       {"heights_equal", c.heights_equal}};
            if (!c.holds()) {
              rep.witness(name, entry);
            }
            out.push_back(std::move(entry));
          }
        }
      }
      rep.details()["correspondences"] = out;
      return rep;
    }

    void describe_category(Report& rep, SmallCategory const& cat) {
      auto g  = is_groupoid(cat);
      auto& d = rep.details();
      d["objects"]   = cat.object_count();
      d["morphisms"] = cat.morphism_count();
      d["groupoid"]  = g.groupoid;
      if (g.witness) {
        d["non_invertible"] = *g.witness;
      }
    }

    Report check_category(std::string const& path) {
      Report rep("check-category");
      auto   cat = io::load_category(path);
      rep.input("category", path, io::category_to_json(cat));
      auto report = rep.timed("conditions", [&] { return homset_strong_report(cat); });
      tri_verdicts(rep, report);
      auto fin = finiteness_report(cat);
      rep.verdict("finiteness_bounds", fin.holds());
      if (!fin.holds()) {
        rep.witness("finiteness_bounds", {{"indices", fin.witness}});
      }
      describe_category(rep, cat);
      rep.details()["agree"]         = report.agree;
      rep.details()["endomorphisms"] = fin.endomorphisms;
      return rep;
    }

    Report build_mx(std::string const& name, std::string const& file, std::size_t s) {
      Report rep("build-mx");
      Monoid mono;
      if (!file.empty()) {
        mono = io::load_monoid(file);
        rep.input("monoid", file, io::monoid_to_json(mono));
      } else {
        mono = named_monoid(name);
      }
      auto cat = rep.timed("build", [&] { return build_MX(mono, s); });
      rep.verdict("homset_strong", is_homset_strong(cat));
      describe_category(rep, cat);
      rep.details()["monoid"]        = io::monoid_to_json(mono);
      rep.details()["monoid_group"]  = is_group(mono);
      rep.details()["category"]      = io::category_to_json(cat);
      return rep;
    }

    void grading_verdicts(Report& rep, Grading const& gr) {
      auto unital = object_unital_check(gr);
      rep.verdict("object_unital", unital.holds);
      if (!unital.holds) {
        rep.witness("object_unital", {{"indices", unital.witness}, {"reason", unital.reason}});
      }
      rep.verdict("strongly_graded", strongly_graded_check(gr));
      if (unital.holds) {
        auto hs = homset_strongly_graded_report(gr);
        rep.verdict("eq1a", eq1a_check(gr));
        rep.details()["homset_conditions"] = {{"condition1", hs.conditions.condition1.holds},
                                              {"condition2", hs.conditions.condition2.holds},
                                              {"condition3", hs.conditions.condition3.holds},
                                              {"agree", hs.conditions.agree}};
        rep.details()["units"] = unital.units;
      }
    }

    Report check_grading(std::string const& path) {
      Report rep("check-grading");
      auto   gr = io::load_grading(path);
      rep.input("grading", path, io::grading_to_json(gr));
      rep.timed("checks", [&] { grading_verdicts(rep, gr); });
      return rep;
    }

    Report build_skew(std::string const& system, std::string const& ring_path,
                      std::string const& cat_path) {
      Report rep("build-skew");
      std::optional<SkewCategorySystem> sys;
      if (!system.empty()) {
        sys = io::load_system(system);
        rep.input("system", system, io::system_to_json(*sys));
      } else {
        if (ring_path.empty() || cat_path.empty()) {
          throw Error(ErrorKind::ParseError, "build-skew needs SYSTEM or both --ring and --category");
        }
        auto ring = read_ring(rep, ring_path);
        auto cat  = io::load_category(cat_path);
        rep.input("category", cat_path, io::category_to_json(cat));
        sys = constant_system(ring, cat);
      }
      auto alg = rep.timed("build", [&] { return build_skew_algebra(*sys); });
      rep.verdict("strongly_graded", alg.strongly_graded);
      rep.verdict("object_unital", alg.object_unital);
      auto eq = rep.timed("equivalence", [&] { return strong_idempotent_equivalence_check(alg); });
      rep.verdict("strongness_agrees", eq.agree);
      rep.verdict("units_match", eq.units_match);
      rep.verdict("graded_report", eq.graded_passes);
      auto& d                     = rep.details();
      d["idempotents_strong"]     = eq.idempotents_strong;
      d["category_homset_strong"] = eq.category_homset_strong;
      d["local_units"]            = alg.local_units;
      d["ring"]                   = io::ring_to_json(alg.ring);
      d["grading_components"]     = io::grading_to_json(alg.grading)["components"];
      return rep;
    }

    Report verify_prop(std::string const& name, Options const& opt) {
      Report rep("verify-prop");
      auto   r = verify::verify_prop(name, opt.max_lattice);
      rep.verdict(r.name, r.passed());
      if (!r.failures.empty()) {
        rep.witness(r.name, verify::to_json(r, false)["failures"]);
      }
      auto j = verify::to_json(r, false);
      j.erase("failures");
      rep.details() = j;
      rep.timed("suite", [] {});
      return rep;
    }

    Report gen_suite(std::string const& name, std::string const& out_dir) {
      Report rep("gen-suite");
      auto   plan = corpus::suite_plan(name);
      Json   entries = Json::array();
      if (!out_dir.empty()) {
        fs::create_directories(out_dir);
      }
      rep.timed("generate", [&] {
        for (std::size_t i = 0; i < plan.size(); ++i) {
          auto inst = corpus::generate(plan[i].recipe, plan[i].seed);
          auto j    = corpus::serialize(inst);
          entries.push_back({{"index", i},
                             {"recipe", corpus::describe(plan[i].recipe)},
                             {"seed", plan[i].seed},
                             {"digest", io::digest(j)}});
          if (!out_dir.empty()) {
            char file[32];
            std::snprintf(file, sizeof file, "%04zu.json", i);
            std::ofstream(fs::path(out_dir) / file) << j.dump(1) << "\n";
          }
        }
      });
      rep.verdict("generated", true);
      rep.details() = {{"suite", name}, {"instances", entries}};
      return rep;
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite workbench for rings with enough idempotents and category graded rings",
                 "peirce"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--no-timings", opt.no_timings, "Omit the timings block");
    app.add_flag("--quiet", opt.quiet, "Print verdict lines only");
    app.add_option("--max-lattice", opt.max_lattice, "Lattice enumeration cap")
        ->check(CLI::PositiveNumber);

    std::function<Report()> action;

    std::string ring_path;
    auto* cr = app.add_subcommand("check-ring", "Validate a ring and summarise its ideal lattices");
    cr->add_option("RING", ring_path)->required();
    cr->callback([&] { action = [&] { return check_ring(ring_path, opt); }; });

    std::vector<std::string> set_args;
    auto add_set = [&](CLI::App* sub) {
      sub->add_option("FILES", set_args, "[RING] IDEMPOTENTS")->required()->expected(1, 2);
    };
    auto* pc = app.add_subcommand("peirce", "Audit a complete set and print its Peirce decomposition");
    add_set(pc);
    pc->callback([&] { action = [&] { return peirce_cmd(set_args); }; });

    auto* cs = app.add_subcommand("check-strong", "Evaluate the three strongness conditions");
    add_set(cs);
    cs->callback([&] { action = [&] { return check_strong(set_args); }; });

    std::string side = "both", corr;
    auto* il = app.add_subcommand("ideal-lattice", "Enumerate one-sided ideals");
    il->add_option("RING", ring_path)->required();
    il->add_option("--side", side)->check(CLI::IsMember({"left", "right", "both"}));
    il->add_option("--correspondence", corr, "Idempotent file; check the corner correspondences");
    il->callback([&] { action = [&] { return ideal_lattice(ring_path, side, corr, opt); }; });

    std::string cat_path;
    auto* cc = app.add_subcommand("check-category", "Validate a category and test hom-set strongness");
    cc->add_option("CATEGORY", cat_path)->required();
    cc->callback([&] { action = [&] { return check_category(cat_path); }; });

    std::string monoid_name, monoid_file;
    std::size_t set_size = 1;
    auto* mx = app.add_subcommand("build-mx", "Build the category MX(M, s)");
    auto* mn = mx->add_option("--monoid", monoid_name, "Catalogue monoid");
    auto* mf = mx->add_option("--monoid-file", monoid_file, "Monoid file");
    mn->excludes(mf);
    mx->add_option("--set-size", set_size)->check(CLI::Range(1, 16));
    mx->callback([&] {
      if (monoid_name.empty() && monoid_file.empty()) {
        throw CLI::ValidationError("build-mx", "one of --monoid or --monoid-file is required");
      }
      action = [&] { return build_mx(monoid_name, monoid_file, set_size); };
    });

    std::string grading_path;
    auto* cg = app.add_subcommand("check-grading", "Check a category grading");
    cg->add_option("GRADING", grading_path)->required();
    cg->callback([&] { action = [&] { return check_grading(grading_path); }; });

    std::string system_path, skew_ring, skew_cat;
    auto* bs = app.add_subcommand("build-skew", "Build a skew category algebra");
    bs->add_option("SYSTEM", system_path);
    bs->add_option("--ring", skew_ring, "Constant system: object ring");
    bs->add_option("--category", skew_cat, "Constant system: category");
    bs->callback([&] { action = [&] { return build_skew(system_path, skew_ring, skew_cat); }; });

    std::string prop;
    auto* vp = app.add_subcommand("verify-prop", "Run a proposition check over its suite");
    vp->add_option("NAME", prop)->required();
    vp->callback([&] { action = [&] { return verify_prop(prop, opt); }; });

    std::string suite, out_dir;
    bool        manifest_only = false;
    auto* gs = app.add_subcommand("gen-suite", "Generate a suite");
    gs->add_option("NAME", suite)->required();
    gs->add_flag("--manifest", manifest_only, "Print the plain manifest instead of a report");
    gs->add_option("--out", out_dir, "Write one JSON file per instance");
    gs->callback([&] { action = [&] { return gen_suite(suite, out_dir); }; });

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForVersion const&) {
      out << kToolVersion << "\n";
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "peirce: ParseError: " << e.what() << "\n";
      return 2;
    }

    try {
      if (manifest_only) {
        out << corpus::manifest(suite);
        return 0;
      }
      return action().emit(out, opt);
    } catch (Error const& e) {
      err << "peirce: " << to_string(e.kind()) << ": " << e.detail() << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "peirce: InvariantViolation: " << e.what() << "\n";
      return 2;
    }
  }

  int run(int argc, char const* const* argv) {
    return run(argc, argv, std::cout, std::cerr);
  }

}  // namespace peirce::cli
