#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projspec/numeric.hpp"
#include "projspec/render.hpp"

namespace projspec {

enum class Command { spectrum, koszul, group, julia, iterate, verify };

std::string to_string(Command c);
/// Throws InvalidInput for unknown names.
Command parse_command(const std::string& name);

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct Tolerances {
  double singular = kSingularTol;
  double rank = kRankTol;
  /// Closed form vs direct iteration in `iterate`.
  double agreement = 1e-9;
  /// Distance from the semiconjugacy degenerate locus.
  double degenerate = 1e-8;
};

/// Which group `group` builds.
struct GroupSpec {
  /// cyclic | dihedral | s3 | koopman | gl3 | presentation | file
  std::string kind = "dihedral";
  std::size_t order = 4;
  int level = 3;
  /// plus | minus (gl3 only)
  std::string rep = "plus";
  /// presentation only: generator names and relators; a relator is a
  /// string of generator names, uppercase for the inverse of a one-letter
  /// lowercase name.
  std::vector<std::string> generators;
  std::vector<std::string> relators;
};

struct JobConfig {
  Command command = Command::verify;
  /// Matrix file (pencil for `spectrum`, tuple for `koszul`, generator
  /// tuple for group kind "file").
  std::string input;
  std::string output_dir = ".";
  /// Output file names inside output_dir; empty picks <command>.csv and
  /// julia.ppm.
  std::string csv;
  std::string image;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  int maxiter = 100;
  double radius = 10;
  Tolerances tol;
  ChartSlice slice{0, {1, Part::re, -3, 3}, {2, Part::re, -3, 3}, {0, 0, 0}, 256, 256};
  std::vector<std::vector<Complex>> lambdas;
  GroupSpec group;
  /// `iterate` start point and step count.
  std::string point = "1,1,1";
  int steps = 10;
  /// renormalization | cubic
  std::string map = "renormalization";
  /// Random samples for the H0 test and the property sweeps of `verify`.
  std::size_t samples = 50;
  std::size_t verify_points = 1000;

  std::string csv_name() const;
  std::string image_name() const;
  /// The fully resolved configuration as JSON text (sorted keys).
  std::string to_json() const;
};

/// Parses a JSON config, fills defaults and validates. `command` supplies
/// the subcommand when the text has no "command" key; a conflicting key is
/// an error. Throws InvalidInput on malformed text, unknown keys (listed in
/// the message) or failed validation.
JobConfig parse_config(const std::string& text, const std::string& command = "");

struct DefaultEntry {
  std::string key;
  std::string value;
  std::string meaning;
};

/// Every numeric default in one table, as printed by `--defaults`.
std::vector<DefaultEntry> defaults_table();
std::string format_defaults();

}  // namespace projspec
