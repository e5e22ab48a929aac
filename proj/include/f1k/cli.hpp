#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "f1k/jordan.hpp"
#include "f1k/render.hpp"
#include "f1k/ring.hpp"
#include "f1k/skew.hpp"
#include "f1k/tmod.hpp"
#include "f1k/verify.hpp"

namespace f1k::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void check_skew_dim(const SkewShape& s, int expected) {
  if (expected != 0 && s.n() != expected)
    fail(ErrorCode::bad_dimension,
         "shape is " + std::to_string(s.n()) + "-dimensional, -n " + std::to_string(expected) + " was requested");
}

}  // namespace detail

// Exit codes: 0 success, 1 domain errors, 2 usage errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for split Grothendieck rings of <t>-modules and skew shapes"};
  app.name("f1k");
  app.require_subcommand(1);

  std::string species;
  int ambient = 0;
  std::string format = "dot";
  std::vector<std::string> files;
  std::string suite;
  bool all_suites = false;
  VerifyOptions vopt;

  const auto add_species = [&](CLI::App* sub, bool tmod_only = false) {
    auto* opt = sub->add_option("--species", species, "object species")->required();
    opt->check(CLI::IsMember(tmod_only ? std::vector<std::string>{"tmod"} : std::vector<std::string>{"tmod", "skew"}));
    sub->add_option("-n", ambient, "ambient dimension check for skew inputs");
  };

  auto* cmd_parse = app.add_subcommand("parse", "validate a module or shape file and reprint it canonically");
  add_species(cmd_parse);
  cmd_parse->add_option("file", files, "input file")->required()->expected(1);

  auto* cmd_canon = app.add_subcommand("canon", "decompose into indecomposables and print the class");
  add_species(cmd_canon);
  cmd_canon->add_option("file", files, "input file")->required()->expected(1);

  auto* cmd_components = app.add_subcommand("components", "list connected components as '<size>\\t<key>'");
  add_species(cmd_components);
  cmd_components->add_option("file", files, "input file")->required()->expected(1);

  auto* cmd_mul = app.add_subcommand("mul", "product of two classes in the split Grothendieck ring");
  add_species(cmd_mul);
  cmd_mul->add_option("files", files, "two input files")->required()->expected(2);

  auto* cmd_jordan = app.add_subcommand("jordan", "Jordan form of the base change of a <t>-module");
  add_species(cmd_jordan, true);
  cmd_jordan->add_option("file", files, "tmod input file")->required()->expected(1);

  auto* cmd_basechange = app.add_subcommand("basechange", "base change of a tmod ring element file");
  add_species(cmd_basechange, true);
  cmd_basechange->add_option("file", files, "ring element file")->required()->expected(1);

  auto* cmd_render = app.add_subcommand("render", "render a module or shape");
  add_species(cmd_render);
  cmd_render->add_option("--format", format, "text, dot or ascii")
      ->check(CLI::IsMember({"text", "dot", "ascii"}));
  cmd_render->add_option("file", files, "input file")->required()->expected(1);

  auto* cmd_verify = app.add_subcommand("verify", "run the randomized property suites");
  cmd_verify->add_option("suite", suite, "tmod, skew, jordan or ring")
      ->check(CLI::IsMember({"tmod", "skew", "jordan", "ring"}));
  cmd_verify->add_flag("--all", all_suites, "run every suite");
  cmd_verify->add_option("--seed", vopt.seed, "RNG seed");
  cmd_verify->add_option("--iters", vopt.iters, "instances per property");
  cmd_verify->add_option("--max-size", vopt.max_size, "tmod dimension bound");
  cmd_verify->add_option("-n", vopt.skew_n, "skew ambient dimension bound");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const bool tmod = species == "tmod";
    const auto load_shape = [&](const std::string& path) {
      SkewShape s = parse_skew(detail::read_file(path));
      detail::check_skew_dim(s, ambient);
      return s;
    };

    if (app.got_subcommand(cmd_parse)) {
      if (tmod)
        out << serialize_tmod(parse_tmod(detail::read_file(files[0])));
      else
        out << serialize_skew(load_shape(files[0]));
    } else if (app.got_subcommand(cmd_canon)) {
      if (tmod)
        out << serialize_ring(from_module(parse_tmod(detail::read_file(files[0]))));
      else
        out << serialize_ring(from_shape(load_shape(files[0])));
    } else if (app.got_subcommand(cmd_components)) {
      if (tmod) {
        for (const auto& comp : components(parse_tmod(detail::read_file(files[0]))))
          out << comp.module.dim() << "\t" << canonicalize(comp.module) << "\n";
      } else {
        for (const auto& comp : skew_components(load_shape(files[0])))
          out << comp.size() << "\t" << canonicalize_skew(comp).str() << "\n";
      }
    } else if (app.got_subcommand(cmd_mul)) {
      if (tmod) {
        const RingElement a = from_module(parse_tmod(detail::read_file(files[0])));
        const RingElement b = from_module(parse_tmod(detail::read_file(files[1])));
        out << serialize_ring(a * b);
      } else {
        const RingElement a = from_shape(load_shape(files[0]));
        const RingElement b = from_shape(load_shape(files[1]));
        out << serialize_ring(a * b);
      }
    } else if (app.got_subcommand(cmd_jordan)) {
      out << serialize_jordan(base_change(parse_tmod(detail::read_file(files[0]))));
    } else if (app.got_subcommand(cmd_basechange)) {
      const RingElement x = parse_ring(detail::read_file(files[0]), Species::tmod());
      out << serialize_jordan(base_change_ring(x));
    } else if (app.got_subcommand(cmd_render)) {
      if (tmod) {
        const TModule m = parse_tmod(detail::read_file(files[0]));
        if (format == "text")
          out << serialize_tmod(m);
        else if (format == "dot")
          out << render_dot(m);
        else
          fail(ErrorCode::bad_dimension, "ASCII rendering is limited to 2-dimensional shapes");
      } else {
        const SkewShape s = load_shape(files[0]);
        if (format == "text")
          out << serialize_skew(s);
        else if (format == "dot")
          out << render_dot(s);
        else
          out << render_ascii(s);
      }
    } else if (app.got_subcommand(cmd_verify)) {
      if (!all_suites && suite.empty()) {
        err << "usage error: verify needs a suite name or --all\n";
        return 2;
      }
      bool ok = true;
      const std::vector<std::string> suites =
          all_suites ? std::vector<std::string>{"tmod", "jordan", "skew", "ring"} : std::vector<std::string>{suite};
      for (const auto& name : suites) {
        const SuiteReport report = verify_suite(name, vopt);
        out << format_report(report);
        ok = ok && report.ok();
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace f1k::cli
