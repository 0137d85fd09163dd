#pragma once

#include <optional>
#include <string>

#include "germ/converse.hpp"
#include "germ/diffeo.hpp"
#include "germ/forms.hpp"
#include "germ/poly.hpp"

namespace germ {

enum class Command { Invariants, Cohomology, Interpolate, ClassQuery, VerifyConverse };

const char* command_name(Command c);
std::optional<Command> command_from_name(const std::string& name);

struct JobSpec {
    Command command = Command::Invariants;
    RingPtr ring;
    std::optional<Poly> f;
    std::optional<FormalDiffeo> phi;
    std::optional<VectorField> vfield;
    std::optional<PForm> omega;
    std::optional<PForm> omega_prime;
    std::optional<PForm> alpha;
    std::optional<int> trunc;
};

// Key-value document: one `key = value` per logical line, `#` starts a
// comment, a trailing backslash joins the next line. Keys: vars, f, trunc,
// phi, vfield, omega, omega_prime, alpha. Each command accepts a fixed set
// of keys; anything else is rejected.
JobSpec parse_job(const std::string& document, Command command);

struct RunResult {
    int exit_code = 0;
    std::string human;  // table for stdout, or a one-line error message
    std::string json;   // full report; empty when the job did not run
};

// Exit codes: 0 success, 1 a guaranteed identity failed to hold, 2 input
// error, 3 non-isolated germ, 4 truncation window too small.
RunResult run_job(const JobSpec& job);

// parse_job + run_job with every library error mapped to an exit code and a
// one-line message. Never throws.
RunResult run_document(const std::string& document, Command command);

}  // namespace germ
