#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qcc/model_zoo.hpp"
#include "qcc/sweep.hpp"

namespace qcc {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDisagreement = 3;
inline constexpr int kExitDomain = 4;

struct CheckArgs {
  std::string input;
  bool oracle = false;
  bool json = false;
  std::optional<double> eps_param;
  std::optional<double> eps_rank;
};

struct Classify4Args {
  std::string input;  ///< may be empty with `table`
  bool table = false;
  bool json = false;
  std::optional<double> eps_param;
  std::optional<double> eps_rank;
};

struct SweepArgs {
  SweepOptions options;
  bool json = false;
};

struct ModelArgs {
  ModelParams params;
  std::string name;  ///< stored in the emitted file; defaults to the model name
  std::string emit;  ///< output path, stdout when empty
};

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_classify4(const Classify4Args& args, std::ostream& out,
                  std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_model(const ModelArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand. Usage errors exit 2.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qcc
