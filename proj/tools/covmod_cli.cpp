#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "covmod/covmod.h"

namespace {

bool slurp(const std::string& path, std::string& out)
{
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), {});
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

struct Args {
    std::string profile;
    std::string query;
    std::string format = "json";
    std::uint64_t seed = 0;
};

int run(const std::string& command, const Args& args)
{
    std::string profile_text, query_text = "{}";
    if (!slurp(args.profile, profile_text)) {
        std::cerr << "error: cannot read profile " << args.profile << "\n";
        return 1;
    }
    if (!args.query.empty() && !slurp(args.query, query_text)) {
        std::cerr << "error: cannot read query " << args.query << "\n";
        return 1;
    }

    covmod_profile* profile = nullptr;
    covmod_status st = covmod_profile_parse(profile_text.c_str(), &profile);
    if (st != COVMOD_OK) {
        std::cerr << "error: " << covmod_last_error() << "\n";
        return st == COVMOD_INTERNAL_ERROR ? 3 : 1;
    }
    covmod_result* result = nullptr;
    st = covmod_run(profile, command.c_str(), query_text.c_str(), args.seed, &result);
    if (result)
        std::cout << (args.format == "text" ? covmod_result_text(result) : covmod_result_json(result));
    if (st != COVMOD_OK)
        std::cerr << (st == COVMOD_REFUTED ? "refuted: " : "error: ") << covmod_last_error() << "\n";
    covmod_result_free(result);
    covmod_profile_free(profile);
    switch (st) {
    case COVMOD_OK: return 0;
    case COVMOD_REFUTED: return 2;
    case COVMOD_INTERNAL_ERROR: return 3;
    default: return 1;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical invariants of moduli of sheaves under finite coverings"};
    app.require_subcommand(1);
    Args args;
    const char* commands[][2] = {
        {"analyze", "pullback report for an invariant vector u"},
        {"walls", "u-walls in a region, u-generality, transfer to the cover"},
        {"hilbert", "Hilbert polynomial, discriminant, Euler pairing, dimensions"},
        {"albanese", "orbit summation of zero-cycles on B x C"},
    };
    std::string chosen;
    for (auto& c : commands) {
        auto* sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--profile", args.profile, "surface profile JSON, - for stdin")->required();
        sub->add_option("--query", args.query, "query JSON");
        sub->add_option("--format", args.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", args.seed, "seed for randomized checks");
        sub->callback([&chosen, name = std::string(c[0])] { chosen = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return run(chosen, args);
}
