#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdouble::cli {

// Exit codes. Internal is reserved for failed self-checks (a bug).
inline constexpr int kOk = 0;
inline constexpr int kMathNo = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternal = 3;

struct RunConfig {
  std::string command;
  std::string group_path;    // group JSON, for D^omega(G) commands
  std::string cocycle_path;  // 3-cocycle JSON; trivial when empty
  std::string cleft_path;    // cleft object JSON, replaces group/cocycle
  std::optional<std::string> subgroup;  // comma separated element indices of F
  int nu = 0;
  std::string section = "minimal";
  std::optional<int> twist;  // index into Hom(A, G^F)
  std::string format = "text";
};

const std::vector<std::string>& commands();

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and calls run().
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qdouble::cli
