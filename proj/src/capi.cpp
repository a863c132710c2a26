#include "covmod/covmod.h"

#include <string>

#include "covmod/io.hpp"
#include "covmod/riemann_roch.hpp"

struct covmod_profile {
    covmod::LoadedProfile loaded;
};

struct covmod_result {
    std::string json;
    std::string text;
    covmod_status status;
};

namespace {

thread_local std::string last_error;

covmod_status fail(covmod_status s, const std::string& msg)
{
    last_error = msg;
    return s;
}

// Runs f, mapping exceptions to status codes.
template <typename F>
covmod_status guarded(F&& f)
{
    try {
        last_error.clear();
        return f();
    } catch (const nlohmann::json::parse_error& e) {
        return fail(COVMOD_INPUT_ERROR, std::string("malformed JSON: ") + e.what());
    } catch (const covmod::InputError& e) {
        return fail(COVMOD_INPUT_ERROR, e.what());
    } catch (const covmod::HypothesisConflict& e) {
        return fail(COVMOD_REFUTED, e.what());
    } catch (const covmod::InternalError& e) {
        return fail(COVMOD_INTERNAL_ERROR, std::string("internal error: ") + e.what());
    } catch (const std::exception& e) {
        return fail(COVMOD_INTERNAL_ERROR, std::string("internal error: ") + e.what());
    }
}

covmod::InvariantVector parse_u(const covmod_profile* p, const char* u)
{
    return covmod::read_invariant(covmod::Json::parse(u), p->loaded.surface.ns());
}

} // namespace

extern "C" {

const char* covmod_version(void) { return "0.1.0"; }

const char* covmod_status_name(covmod_status status)
{
    switch (status) {
    case COVMOD_OK: return "ok";
    case COVMOD_INPUT_ERROR: return "input_error";
    case COVMOD_REFUTED: return "refuted";
    case COVMOD_INTERNAL_ERROR: return "internal_error";
    case COVMOD_BAD_ARGUMENT: return "bad_argument";
    }
    return "unknown";
}

const char* covmod_last_error(void) { return last_error.c_str(); }

covmod_status covmod_profile_parse(const char* json, covmod_profile** out)
{
    if (!json || !out)
        return fail(COVMOD_BAD_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto loaded = covmod::load_profile(covmod::Json::parse(json));
        *out = new covmod_profile{std::move(loaded)};
        return COVMOD_OK;
    });
}

void covmod_profile_free(covmod_profile* profile) { delete profile; }

covmod_status covmod_run(const covmod_profile* profile, const char* command, const char* query, uint64_t seed,
                         covmod_result** out)
{
    if (!profile || !command || !out)
        return fail(COVMOD_BAD_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto q = covmod::Json::parse(query ? query : "{}");
        const auto outcome = covmod::run_command(command, profile->loaded, q, seed);
        const auto status = outcome.status == covmod::CommandStatus::refuted ? COVMOD_REFUTED : COVMOD_OK;
        *out = new covmod_result{covmod::dump_json(outcome.report), covmod::render_text(outcome.report), status};
        if (status == COVMOD_REFUTED)
            last_error = "hypotheses refuted; see \"refutations\" in the report";
        return status;
    });
}

const char* covmod_result_json(const covmod_result* result) { return result ? result->json.c_str() : ""; }

const char* covmod_result_text(const covmod_result* result) { return result ? result->text.c_str() : ""; }

covmod_status covmod_result_status(const covmod_result* result)
{
    return result ? result->status : COVMOD_BAD_ARGUMENT;
}

void covmod_result_free(covmod_result* result) { delete result; }

covmod_status covmod_discriminant(const covmod_profile* profile, const char* u, int64_t* out)
{
    if (!profile || !u || !out)
        return fail(COVMOD_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        *out = covmod::discriminant(parse_u(profile, u), profile->loaded.surface);
        return COVMOD_OK;
    });
}

covmod_status covmod_euler_pairing(const covmod_profile* profile, const char* u, int64_t* out)
{
    if (!profile || !u || !out)
        return fail(COVMOD_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        *out = covmod::euler_pairing(parse_u(profile, u), profile->loaded.surface);
        return COVMOD_OK;
    });
}

} // extern "C"
