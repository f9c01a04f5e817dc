#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace omega::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitDepth = 4;

struct RunConfig {
  std::string command;
  std::string input;
  std::string lift;
  std::string operad;
  std::string output;
  std::size_t dim = 1;
  std::size_t bound = 3;
  std::size_t n = 1;
  std::size_t samples = 5;
  std::uint64_t seed = 0;
  std::size_t depth = 4;
  std::size_t grade = 2;
  std::size_t size = 3;
  std::string start = "0";
  std::string kind;
  std::string monad = "fc";
  std::string model = "discrete";
  std::string seedOperad = "terminal";
  std::string mode = "incoherent";
  std::string functor = "word";
  std::string alphabet = "a,b";
  std::string map = "swap";
  std::string from, to;
  std::optional<std::size_t> mMax;
};

/// Executes one command; JSON goes to `out` (or config.output), messages to
/// `err`.  Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a RunConfig and runs it.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Seeded random instance of the given kind: globset, graph, space, operad
/// or collection.
nlohmann::json gen_random(const std::string& kind, std::size_t n, std::size_t size, std::uint64_t seed);

}  // namespace omega::cli
