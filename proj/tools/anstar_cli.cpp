#include "anstar/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Voronoi cells of A_n* and their Coxeter-plane projections"};
  app.set_version_flag("--version", std::string(ANSTAR_VERSION));
  app.require_subcommand(1);

  int verify_n = 4;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run the verification battery for rank n");
  verify->add_option("--n", verify_n, "rank, 1..7")->check(CLI::Range(1, anstar::kMaxEnumerationRank));
  verify->add_flag("--json", verify_json, "print a JSON report");

  anstar::ProjectCellOptions cell;
  auto* project = app.add_subcommand("project-cell", "Tile the projected Voronoi cell of A4*");
  project->add_option("--out", cell.out, "SVG output path");
  project->add_option("--json", cell.json_out, "JSON output path");
  project->add_option("--w", cell.w, "shadow direction x,y in window coordinates");
  project->add_flag("--types-only", cell.types_only, "print the tile-type census as JSON");
  project->add_flag("--no-color", cell.no_color, "outline-only SVG");
  int cell_n = 4;
  project->add_option("--n", cell_n, "rank (only 4 is supported)")->check(CLI::Range(4, 4));

  anstar::PatchOptions patch;
  auto* patch_cmd = app.add_subcommand("patch", "Planar patch of the projected Voronoi tessellation of A4*");
  patch_cmd->add_option("--gamma", patch.gamma, "window shift x,y, or 'symmetric'");
  patch_cmd->add_option("--radius", patch.radius, "squared-norm radius p/q of the lattice ball");
  patch_cmd->add_option("--out", patch.out, "SVG output path");
  patch_cmd->add_option("--json", patch.json_out, "JSON output path");
  patch_cmd->add_flag("--no-color", patch.no_color, "outline-only SVG");
  int patch_n = 4;
  patch_cmd->add_option("--n", patch_n, "rank (only 4 is supported)")->check(CLI::Range(4, 4));

  int facets_n = 4;
  std::string format = "table";
  auto* facets = app.add_subcommand("facets", "Face census and center orbits");
  facets->add_option("--n", facets_n, "rank, 1..7")->check(CLI::Range(1, anstar::kMaxEnumerationRank));
  facets->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every other parse failure is a usage error.
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (*verify) return anstar::cmd_verify(verify_n, verify_json, std::cout, std::cerr);
  if (*project) return anstar::cmd_project_cell(cell, std::cout, std::cerr);
  if (*patch_cmd) return anstar::cmd_patch(patch, std::cout, std::cerr);
  if (*facets) return anstar::cmd_facets(facets_n, format, std::cout, std::cerr);
  return 1;
}
