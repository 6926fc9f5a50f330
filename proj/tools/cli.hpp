#pragma once

// Command-line front end. Exit status: 0 success, 1 a verified property
// failed, 2 bad input or flags.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pospace/pospace.hpp"

namespace pospace::cli {

  inline constexpr int exit_ok          = 0;
  inline constexpr int exit_failure     = 1;
  inline constexpr int exit_bad_input   = 2;
  inline constexpr char const* max_n_env = "POSPACE_MAX_N";

  namespace detail {
    inline json::Json read_json(std::string const& path) {
      std::ifstream in(path);
      if (!in) throw precondition_error("cannot read \"" + path + "\"");
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return json::parse(text, path);
    }

    inline std::string manifest_text() {
      std::ostringstream os;
      os << "Theorem ids:\n";
      for (auto const& e : theorem_manifest()) {
        os << "  " << e.id << " (default max-n " << e.default_max_n << ", at most " << e.cap_max_n << ")\n";
        os << "      " << e.summary << "\n";
      }
      os << "  all\n      every id above\n";
      os << "\nEnvironment: " << max_n_env << " overrides the default max-n.";
      return os.str();
    }

    inline std::optional<std::size_t> env_max_n() {
      char const* v = std::getenv(max_n_env);
      if (v == nullptr || *v == '\0') return std::nullopt;
      try {
        std::size_t used = 0;
        auto        n    = std::stoul(v, &used);
        if (used != std::string(v).size()) throw std::invalid_argument(v);
        return n;
      } catch (std::exception const&) {
        throw precondition_error(std::string(max_n_env) + " must be a non-negative integer, got \"" + v + "\"");
      }
    }
  }  // namespace detail

  inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite posets, pre-orders and co-relations: construct, verify, export.", "pospace"};
    app.footer(detail::manifest_text());
    app.require_subcommand(1);

    auto* enumerate    = app.add_subcommand("enumerate", "Stream posets as JSON lines");
    std::size_t enum_n = 0;
    bool unlabeled     = false;
    enumerate->add_option("--posets", enum_n, "Number of elements")->required()->check(CLI::Range(0, 7));
    enumerate->add_flag("--unlabeled", unlabeled, "One representative per isomorphism class");

    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive property suite and print its JSON report");
    std::string theorem;
    std::optional<std::size_t> max_n;
    unsigned    workers = 1;
    std::string report_path;
    verify_cmd->add_option("--theorem", theorem, "Theorem id, or \"all\"")->required();
    verify_cmd->add_option("--max-n", max_n, "Largest carrier size to enumerate");
    verify_cmd->add_option("--parallel", workers, "Worker threads")->check(CLI::Range(1, 256));
    verify_cmd->add_option("--report", report_path, "Write the report here instead of standard output");
    verify_cmd->footer(detail::manifest_text());

    auto* pushout_cmd = app.add_subcommand("pushout", "Pushout of a cospan of order-embeddings");
    std::string f0_path, f1_path;
    pushout_cmd->add_option("--f0", f0_path, "Map file X -> Y0")->required();
    pushout_cmd->add_option("--f1", f1_path, "Map file X -> Y1")->required();

    auto* corel_cmd = app.add_subcommand("corelations", "List the equivalence co-relations on a poset with their Phi subsets");
    std::string corel_path;
    corel_cmd->add_option("poset", corel_path, "Poset file")->required();

    auto* dual_cmd = app.add_subcommand("dual", "Poset -> lattice of up-sets; lattice -> poset of prime filters");
    std::string dual_path;
    dual_cmd->add_option("file", dual_path, "Poset or lattice file")->required();

    auto* export_cmd = app.add_subcommand("export", "Export a Hasse diagram");
    std::string dot_path;
    export_cmd->add_option("--dot", dot_path, "Poset or lattice file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      auto const* shown = &app;
      for (auto* s : app.get_subcommands()) shown = s;
      out << shown->help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_bad_input;
    }

    try {
      if (enumerate->parsed()) {
        for (auto const& p : enumerate_posets(enum_n, !unlabeled)) out << json::to_json(p).dump() << "\n";
        return exit_ok;
      }

      if (verify_cmd->parsed()) {
        std::vector<TheoremEntry> chosen;
        if (theorem == "all") {
          chosen = theorem_manifest();
        } else if (auto const* e = find_theorem(theorem)) {
          chosen.push_back(*e);
        } else {
          throw precondition_error("unknown theorem id \"" + theorem + "\"; see --help");
        }
        auto requested = max_n ? max_n : detail::env_max_n();
        json::Json doc;
        bool       passed = true;
        std::vector<json::Json> reports;
        for (auto const& e : chosen) {
          EnumerationBudget b;
          b.parallelism = workers;
          b.max_n       = requested.value_or(e.default_max_n);
          // With "all", one max-n is clamped to each suite's own bound.
          if (theorem == "all") b.max_n = std::min(b.max_n, e.cap_max_n);
          auto r = pospace::verify(e.id, b);
          passed = passed && r.passed();
          for (auto const& f : r.failures) {
            err << r.theorem_id << ": " << f.axiom << " failed: " << f.witness << "\n";
          }
          reports.push_back(json::to_json(r));
        }
        doc = theorem == "all" ? json::Json(reports) : reports.front();
        if (report_path.empty()) {
          out << doc.dump(2) << "\n";
        } else {
          std::ofstream f(report_path);
          if (!f) throw precondition_error("cannot write \"" + report_path + "\"");
          f << doc.dump(2) << "\n";
        }
        return passed ? exit_ok : exit_failure;
      }

      if (pushout_cmd->parsed()) {
        auto f0 = json::map_from_json(detail::read_json(f0_path));
        auto f1 = json::map_from_json(detail::read_json(f1_path));
        out << json::to_json(pushout_embeddings(f0, f1)).dump(2) << "\n";
        return exit_ok;
      }

      if (corel_cmd->parsed()) {
        auto x = json::poset_from_json(detail::read_json(corel_path));
        for (auto const& c : enumerate_corelations(x)) out << json::corelation_line(c).dump() << "\n";
        return exit_ok;
      }

      if (dual_cmd->parsed()) {
        auto doc = detail::read_json(dual_path);
        if (json::looks_like_lattice(doc)) {
          auto l = json::lattice_from_json(doc);
          auto s = spectrum(l);
          if (!s) {
            auto w = s.error();
            throw precondition_error("lattice is not distributive at (" + l.carrier().label(w[0]) + ", "
                                     + l.carrier().label(w[1]) + ", " + l.carrier().label(w[2]) + ")");
          }
          out << json::to_json(*s).dump(2) << "\n";
        } else {
          out << json::to_json(upset_lattice(json::poset_from_json(doc))).dump(2) << "\n";
        }
        return exit_ok;
      }

      if (export_cmd->parsed()) {
        out << to_dot(json::poset_from_json(detail::read_json(dot_path)));
        return exit_ok;
      }
    } catch (budget_error const& e) {
      err << "error: budget: " << e.what() << "\n";
      return exit_bad_input;
    } catch (precondition_error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_bad_input;
    } catch (invariant_error const& e) {
      err << "invariant violated: " << e.what() << "\n";
      return exit_failure;
    }
    return exit_bad_input;
  }

}  // namespace pospace::cli
