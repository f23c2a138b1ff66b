#pragma once

#include <string>
#include <vector>

namespace ballres::selfcheck {

enum class Fault {
  None = 0,
  CalJSign = 1,  // evaluate J_n with a flipped sign inside the suites
};

struct Options {
  bool quick = true;   // trimmed grids (the CLI default); full grids otherwise
  Fault fault = Fault::None;
};

struct CheckItem {
  std::string name;
  bool pass = false;
  bool hard = true;  // warnings don't fail the run
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;
  int warnings = 0;

  bool pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Runs the per-module invariant suites (radial functions, root scanning,
// spectrum laws, propagating functions, Green's tensors, imaging identities).
Report run(const Options& opt = {});

}  // namespace ballres::selfcheck
