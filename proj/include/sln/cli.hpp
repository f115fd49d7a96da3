#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sln/partitions.hpp"

namespace sln {

enum class Status { ok, mismatch, error };

// status=ok guarantees the payload validates against the command's schema.
// Payloads are deterministic: identical inputs produce byte-identical JSON.
struct CommandResult {
    Status status = Status::ok;
    nlohmann::ordered_json payload;
    std::int64_t elapsed_ms = 0;
};

// Exit codes 0/1/2 = ok/mismatch/usage-error.
int exit_code(const CommandResult& result);

// Derangement table D_0..D_max by both methods; mismatch if they ever
// differ.
CommandResult cmd_derangements(int max_k);

// Full multiplicity table for k with the sum-of-squares checksum against
// D_{2k}. format is "json" or "csv"; the CSV text rides in the payload.
CommandResult cmd_table(int k, const std::string& format);

// Single-pair query via both evaluation routes.
CommandResult cmd_multiplicity(int k, const Partition& lambda, const Partition& mu);

// Brute-force decomposition, optionally compared against the closed form;
// mismatch only when n >= 2k and a pair differs.
CommandResult cmd_oracle(int n, int k, bool compare);

// Runs one of the invariant suites: partitions, young, brauer, tensor, all.
CommandResult cmd_verify(const std::string& suite, int n, int k);

}  // namespace sln
