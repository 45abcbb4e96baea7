#ifndef OMNR_COMMANDS_HPP
#define OMNR_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "omnr/config.hpp"
#include "omnr/transmission.hpp"

namespace omnr {

// Exit codes of run_command.
inline constexpr int k_exit_ok = 0;
inline constexpr int k_exit_usage = 1;
inline constexpr int k_exit_numerical = 2;

struct CommandOptions {
    std::string branch_policy = "highest";  // lowest | highest | continued
    std::string direction = "both";         // forward | backward | both
};

// Deterministic machine output: identical SweepResult -> byte-identical text.
std::string sweep_to_csv(const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);

const char* branch_name(Branch b);
const char* stability_name(Stability s);

// command in {solve, sweep-power, sweep-detuning, stability, oracle,
// figure}; figure_id selects the preset for the figure command.
// Emits files per config.out / config.format, human output on out,
// diagnostics on err.
int run_command(const std::string& command, const std::string& figure_id,
                RunConfig config, const CommandOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace omnr

#endif
