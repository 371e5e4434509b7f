#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "locus/scene.hpp"

namespace locus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

struct Options {
  std::optional<std::string> svg_path;
  int resolution = 512;
  bool decorate = false;
  int levels = 0;
  // Added to the canonical A coefficient before verification; for testing
  // that the verifier catches a wrong conic.
  double perturb = 0.0;
};

// Each command throws locus::Error on an invalid scene.
int cmd_habitat(const SceneFile& scene, const Options& opts, std::ostream& out);
int cmd_locus(const SceneFile& scene, const Options& opts, std::ostream& out);
int cmd_inverse(const SceneFile& scene, const Options& opts, std::ostream& out);
int cmd_verify(const SceneFile& scene, const Options& opts, std::ostream& out);

/// Parses the command line and dispatches. "--scene -" reads from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace locus::cli
