#ifndef ANSTAR_COMMANDS_HPP
#define ANSTAR_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace anstar {

inline constexpr int kMaxEnumerationRank = 7;

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// The verification battery behind `anstar verify`.
std::vector<CheckResult> verification_checks(int n);

/// Writes through a temporary file in the target directory and renames it
/// into place, so a failed write leaves nothing behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

int cmd_verify(int n, bool json, std::ostream& out, std::ostream& err);

struct ProjectCellOptions {
  std::string out;
  std::string json_out;
  std::string w;
  bool types_only = false;
  bool no_color = false;
};
int cmd_project_cell(const ProjectCellOptions& opts, std::ostream& out, std::ostream& err);

struct PatchOptions {
  /// "x,y" in window coordinates, "symmetric", or empty for the default.
  std::string gamma;
  std::string radius = "4";
  std::string out;
  std::string json_out;
  bool no_color = false;
};
int cmd_patch(const PatchOptions& opts, std::ostream& out, std::ostream& err);

int cmd_facets(int n, const std::string& format, std::ostream& out, std::ostream& err);

} // namespace anstar

#endif // ANSTAR_COMMANDS_HPP
