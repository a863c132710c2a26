#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "covmod/lattice.hpp"

namespace covmod {

using Json = nlohmann::json;

struct LoadedProfile {
    SurfaceProfile surface;
    CoveringProfile covering;
};

// Field-path errors ("profile.form[1][0]: expected an integer") are thrown as
// InputError.
LoadedProfile load_profile(const Json& doc);

// {"r", "c", "chi"}; c is [free...] or {"free", "tors"}.
InvariantVector read_invariant(const Json& doc, const NSLattice& ns);

enum class CommandStatus { ok = 0, input_error = 1, refuted = 2 };

struct CommandOutcome {
    Json report;
    CommandStatus status = CommandStatus::ok;
};

// Command names: analyze, walls, hilbert, albanese. A report whose hypotheses
// are refuted comes back with status refuted; contradictory flags throw
// HypothesisConflict.
CommandOutcome run_command(std::string_view command, const LoadedProfile& profile, const Json& query,
                           std::uint64_t seed = 0);

// Deterministic serialization: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& report);

// Indented key/value rendering of the same document.
std::string render_text(const Json& report);

} // namespace covmod
