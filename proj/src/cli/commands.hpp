#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pbec::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kParameter = 2, kBudget = 3, kIo = 4 };

struct SweepRequest {
    enum class Mode { FixT, FixW };
    std::uint32_t q = 2;
    Mode mode = Mode::FixT;
    double fixed = 0.25;
    std::size_t steps = 51;
};

/// CSV with header x,classical_gv,classical_h,gv,h,r2lvl,r3lvl; x_i = i/(steps-1).
std::string bounds_csv(const SweepRequest& req);

struct ExampleCheck {
    std::string name;
    double computed;
    double expected;
    double tolerance;
    bool pass() const;
};

/// Recomputes a named artifact: e2, e4, e5, e6, remark1, fig2a, fig2b.
std::vector<ExampleCheck> run_example(const std::string& name);
const std::vector<std::string>& example_names();

/// Entry point of the command-line tool.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace pbec::cli
