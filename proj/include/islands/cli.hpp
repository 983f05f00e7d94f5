#pragma once

// Command-line front end. Exit codes: 0 = success / property holds,
// 1 = property fails / nothing found, 2 = input or usage error.

#include <iostream>

#include <CLI11.hpp>

#include "islands/admissibility.hpp"
#include "islands/analysis.hpp"
#include "islands/core.hpp"
#include "islands/domains.hpp"
#include "islands/engine.hpp"
#include "islands/eta.hpp"
#include "islands/io.hpp"
#include "islands/oracle.hpp"

namespace islands::cli {

namespace detail {

inline io::LoadedDomain load_domain(const std::string& path) {
  return io::parse_domain(io::parse_text(io::read_file(path)));
}

inline void emit(const io::json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    io::write_file(out_path, text);
}

inline std::vector<bool> truth_table_from_hex(const std::string& hex, int nvars) {
  if (nvars < 1 || nvars > 6)
    throw island_error(errc::bad_input, "supported variable counts are 1..6");
  unsigned long long bits = 0;
  try {
    std::size_t used = 0;
    bits = std::stoull(hex, &used, 16);
    if (used != hex.size()) throw std::invalid_argument(hex);
  } catch (const std::exception&) {
    throw island_error(errc::bad_input, "truth table must be a hex number");
  }
  std::size_t len = std::size_t{1} << nvars;
  if (len < 64 && (bits >> len) != 0)
    throw island_error(errc::bad_input, "truth table has more bits than 2^vars");
  std::vector<bool> table(len);
  for (std::size_t k = 0; k < len; ++k) table[k] = (bits >> k) & 1;
  return table;
}

inline ContextSpec context_from_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  if (rows.size() < 2 || rows[0].size() < 2)
    throw island_error(errc::bad_input,
                       "context csv needs a header row and at least one object row");
  ContextSpec spec;
  std::vector<std::string> objects, attributes(rows[0].begin() + 1, rows[0].end());
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw island_error(errc::bad_input, "context csv rows have uneven lengths");
    objects.push_back(rows[r][0]);
  }
  spec.factors.push_back(objects);
  spec.factors.push_back(attributes);
  for (std::size_t r = 1; r < rows.size(); ++r)
    for (std::size_t c = 1; c < rows[r].size(); ++c) {
      const std::string& v = rows[r][c];
      if (v == "1" || v == "x" || v == "X")
        spec.relation.push_back(
            {static_cast<int>(r - 1), static_cast<int>(c - 1)});
      else if (!(v.empty() || v == "0" || v == "." || v == " "))
        throw island_error(errc::bad_input, "context csv cells must be 1/x or 0/empty");
    }
  return spec;
}

}  // namespace detail

inline int run(int argc, const char* const* argv) {
  CLI::App app{"islands of height functions over island domains"};
  app.require_subcommand(1);

  std::string domain_path, heights_path, family_path, out_path, heights_out_path;
  bool pre = false, strict = false, strong = false;
  int cap = kDefaultOracleCap;

  auto* validate_cmd = app.add_subcommand("validate", "check a domain file");
  validate_cmd->add_option("--domain", domain_path, "domain file")->required();

  auto* islands_cmd =
      app.add_subcommand("islands", "islands of a height function");
  islands_cmd->add_option("--domain", domain_path, "domain file")->required();
  islands_cmd->add_option("--heights", heights_path, "heights file")->required();
  islands_cmd->add_flag("--pre", pre, "pre-islands instead of islands");

  auto* adm_cmd = app.add_subcommand("admissible", "test a family for admissibility");
  adm_cmd->add_option("--domain", domain_path, "domain file")->required();
  adm_cmd->add_option("--family", family_path, "family file")->required();
  adm_cmd->add_flag("--strong", strong, "universal-quantifier variant");

  auto* canon_cmd =
      app.add_subcommand("canonical-height", "layer construction for a family");
  canon_cmd->add_option("--domain", domain_path, "domain file")->required();
  canon_cmd->add_option("--family", family_path, "family file")->required();

  auto* std_cmd =
      app.add_subcommand("standard-height", "containment-count heights of a family");
  std_cmd->add_option("--domain", domain_path, "domain file")->required();
  std_cmd->add_option("--family", family_path, "family file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "classify a domain");
  analyze_cmd->add_option("--domain", domain_path, "domain file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive searches");
  oracle_cmd->require_subcommand(1);
  auto* oracle_system =
      oracle_cmd->add_subcommand("system", "find heights realizing a family");
  oracle_system->add_option("--domain", domain_path, "domain file")->required();
  oracle_system->add_option("--family", family_path, "family file")->required();
  oracle_system->add_flag("--strict", strict, "islands instead of pre-islands");
  oracle_system->add_option("--cap", cap, "ground-size cap");
  auto* oracle_max = oracle_cmd->add_subcommand("max", "largest system size");
  oracle_max->add_option("--domain", domain_path, "domain file")->required();
  oracle_max->add_flag("--strict", strict, "islands instead of pre-islands");
  oracle_max->add_option("--cap", cap, "ground-size cap");

  auto* gen_cmd = app.add_subcommand("gen", "emit a stock domain file");
  gen_cmd->require_subcommand(1);
  int rows = 1, cols = 1, vars = 3, plane_order = 2;
  std::string topology = "rect", shape = "rect", hex, csv_path;
  auto* gen_grid = gen_cmd->add_subcommand("grid", "grid board");
  gen_grid->add_option("--rows", rows, "board rows")->required();
  gen_grid->add_option("--cols", cols, "board columns")->required();
  gen_grid->add_option("--topology", topology, "rect, cyl, or torus");
  gen_grid->add_option("--shape", shape, "rect or square candidates");
  gen_grid->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_fano = gen_cmd->add_subcommand("fano", "the 7-point plane");
  gen_fano->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_plane = gen_cmd->add_subcommand("plane", "projective plane of prime order");
  gen_plane->add_option("order", plane_order, "prime order")->required();
  gen_plane->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_boolean = gen_cmd->add_subcommand("boolean", "Boolean-function box domain");
  gen_boolean->add_option("table", hex, "truth table as hex; bit k = row k")
      ->required();
  gen_boolean->add_option("--vars", vars, "number of variables (default 3)");
  gen_boolean->add_option("--out", out_path, "output file (default stdout)");
  gen_boolean->add_option("--heights-out", heights_out_path,
                          "also write the indicator heights");
  auto* gen_context = gen_cmd->add_subcommand("context", "formal-context box domain");
  gen_context->add_option("csv", csv_path, "context as csv (objects x attributes)")
      ->required();
  gen_context->add_option("--out", out_path, "output file (default stdout)");
  gen_context->add_option("--heights-out", heights_out_path,
                          "also write the indicator heights");

  auto* render_cmd = app.add_subcommand("render", "ASCII board of heights");
  render_cmd->add_option("--domain", domain_path, "grid domain file")->required();
  render_cmd->add_option("--heights", heights_path, "heights file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      io::json summary;
      summary["points"] = d.ground().size();
      summary["candidates"] = d.candidates().size();
      summary["backend"] =
          d.is_eta() ? "eta" : (d.island().K.is_explicit() ? "explicit" : "implicit");
      detail::emit(summary, "");
      return 0;
    }

    if (app.got_subcommand(islands_cmd)) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      HeightFunction h =
          io::parse_heights(io::parse_text(io::read_file(heights_path)), d.ground());
      SetFamily sys(d.ground().size());
      if (d.is_eta()) {
        if (pre)
          throw island_error(errc::bad_input,
                             "pre-islands are not defined for eta domains");
        sys = island_system_eta(d.eta(), h);
      } else {
        sys = pre ? pre_island_system(d.island(), h) : island_system(d.island(), h);
      }
      detail::emit(io::family_json(d.ground(), sys), "");
      return 0;
    }

    if (app.got_subcommand(adm_cmd)) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      SetFamily H =
          io::parse_family(io::parse_text(io::read_file(family_path)), d.ground());
      bool ok;
      if (d.is_eta()) {
        if (strong)
          throw island_error(errc::bad_input,
                             "--strong is not defined for eta domains");
        ok = eta_is_admissible(d.eta(), H);
      } else {
        ok = strong ? is_strongly_admissible(d.island(), H)
                    : is_admissible(d.island(), H);
      }
      std::cout << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }

    if (app.got_subcommand(canon_cmd)) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      SetFamily H =
          io::parse_family(io::parse_text(io::read_file(family_path)), d.ground());
      try {
        auto [layers, h] = canonical_height(d.island(), H);
        io::json out;
        out["layers"] = io::layers_json(d.ground(), layers);
        out["heights"] = io::heights_json(d.ground(), h);
        detail::emit(out, "");
        return 0;
      } catch (const island_error& e) {
        if (e.code() != errc::not_admissible) throw;
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }

    if (app.got_subcommand(std_cmd)) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      SetFamily H =
          io::parse_family(io::parse_text(io::read_file(family_path)), d.ground());
      detail::emit(io::heights_json(d.ground(), standard_height(H)), "");
      return 0;
    }

    if (app.got_subcommand(analyze_cmd)) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      io::json report;
      bool proximity;
      if (d.is_eta()) {
        const EtaDomain& ed = d.eta();
        bool connective = eta_is_connective(ed);
        bool symmetric = true;
        const auto& m = ed.C().members();
        for (std::size_t i = 0; i < m.size() && symmetric; ++i) {
          if (m[i].is_empty()) continue;
          for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m[j].is_empty()) continue;
            if (eta_delta(ed, m[i], m[j]) != eta_delta(ed, m[j], m[i])) {
              symmetric = false;
              break;
            }
          }
        }
        proximity = connective && symmetric;
        report["backend"] = "eta";
        report["connective"] = connective;
        report["delta_symmetric"] = symmetric;
        report["proximity"] = proximity;
        report["cd_independent"] = is_cd_independent(ed.C());
        report["cdw_independent"] = is_cdw_independent(ed.C());
        report["distant"] = eta_is_distant_family(ed, ed.C());
      } else {
        const IslandDomain& dom = d.island();
        proximity = is_proximity_domain(dom);
        report["connective"] = is_connective(dom);
        report["proximity"] = proximity;
        try {
          report["union_closed"] = is_union_closed(dom);
        } catch (const island_error& e) {
          if (e.code() != errc::undecidable) throw;
          report["union_closed"] = "undecidable";
        }
        report["unit_covers"] = has_unit_covers(dom);
        report["cd_independent"] = is_cd_independent(dom.C);
        report["cdw_independent"] = is_cdw_independent(dom.C);
        report["distant"] = is_distant_family(dom, dom.C);
      }
      detail::emit(report, "");
      return proximity ? 0 : 1;
    }

    if (oracle_system->parsed()) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      SetFamily H =
          io::parse_family(io::parse_text(io::read_file(family_path)), d.ground());
      std::optional<HeightFunction> found;
      if (d.is_eta()) {
        const EtaDomain& ed = d.eta();
        found = find_realizing_height_for(
            ed.ground().size(),
            [&](const HeightFunction& h) { return island_system_eta(ed, h); }, H, cap);
      } else {
        found = find_realizing_height(d.island(), H, strict, cap);
      }
      if (!found) {
        std::cout << "none\n";
        return 1;
      }
      detail::emit(io::heights_json(d.ground(), *found), "");
      return 0;
    }

    if (oracle_max->parsed()) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      std::pair<int, HeightFunction> best{0, HeightFunction()};
      if (d.is_eta()) {
        const EtaDomain& ed = d.eta();
        best = max_system_for(
            ed.ground().size(),
            [&](const HeightFunction& h) { return island_system_eta(ed, h); }, cap);
      } else {
        best = max_system(d.island(), strict, cap);
      }
      io::json out;
      out["count"] = best.first;
      out["witness"] = io::heights_json(d.ground(), best.second);
      detail::emit(out, "");
      return 0;
    }

    if (gen_grid->parsed()) {
      io::json grid_j = {{"rows", rows}, {"cols", cols}, {"topology", topology},
                         {"shape", shape}};
      GridSpec spec = io::parse_grid_spec(grid_j);
      IslandDomain dom = grid_domain(spec);
      detail::emit(io::domain_json_grid(dom, spec), out_path);
      return 0;
    }
    if (gen_fano->parsed() || gen_plane->parsed()) {
      int order = gen_fano->parsed() ? 2 : plane_order;
      detail::emit(io::domain_json_explicit(projective_plane_domain(order)), out_path);
      return 0;
    }
    if (gen_boolean->parsed()) {
      ContextSpec spec = boolean_context(vars, detail::truth_table_from_hex(hex, vars));
      auto [dom, h] = box_domain(spec);
      detail::emit(io::domain_json_boxes(dom, spec), out_path);
      if (!heights_out_path.empty())
        detail::emit(io::heights_json(dom.ground, h), heights_out_path);
      return 0;
    }
    if (gen_context->parsed()) {
      ContextSpec spec = detail::context_from_csv(io::read_file(csv_path));
      auto [dom, h] = box_domain(spec);
      detail::emit(io::domain_json_boxes(dom, spec), out_path);
      if (!heights_out_path.empty())
        detail::emit(io::heights_json(dom.ground, h), heights_out_path);
      return 0;
    }

    if (app.got_subcommand(render_cmd)) {
      io::LoadedDomain d = detail::load_domain(domain_path);
      if (!d.grid)
        throw island_error(errc::bad_input, "render needs a grid-backed domain file");
      HeightFunction h =
          io::parse_heights(io::parse_text(io::read_file(heights_path)), d.ground());
      std::string digits = "0123456789abcdefghijklmnopqrstuvwxyz";
      for (int r = 0; r < d.grid->rows; ++r) {
        std::string line;
        for (int c = 0; c < d.grid->cols; ++c) {
          int v = h.at(r * d.grid->cols + c);
          if (v < 0 || v > 35)
            throw island_error(errc::bad_input, "render needs heights in 0..35");
          line += digits[static_cast<std::size_t>(v)];
        }
        std::cout << line << "\n";
      }
      return 0;
    }

    return 2;
  } catch (const island_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::not_admissible ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace islands::cli
