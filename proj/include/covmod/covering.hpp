#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covmod/lattice.hpp"
#include "covmod/riemann_roch.hpp"

namespace covmod {

// Which moduli set the twisting action runs on.
enum class ScenarioTag { full_moduli, fixed_determinant, fixed_c1 };

std::string to_string(ScenarioTag s);
ScenarioTag parse_scenario(std::string_view name);

// Divisors d of n with n / gcd(n, r) | d. gcd(n, 0) = n, so r = 0 admits all.
std::vector<Int> admissible_orders(Int n, Int r);

// Step m of the twisting morphism: 1, n / gcd(n, r) or nu / gcd(nu, r).
Int scenario_m(ScenarioTag s, Int n, Int nu, Int r);

struct OrbitCounts {
    Int distinct_twists = 0;
    Int fixed_det_count = 0;
    Int fixed_c1_count = 0;
};

// Distinct twists E (x) L^k of a sheaf of E-order d, plus how many of them
// keep det E (resp. c_1(E)).
OrbitCounts tensor_orbit_counts(Int d, Int n, Int nu, Int r);

// Abstract stand-in for a moduli set: E-orders with multiplicities.
struct OrderModel {
    Int n = 1;
    std::vector<std::pair<Int, Int>> orders; // (E-order d, multiplicity)
};

struct Stratum {
    Int j = 0;
    std::vector<std::pair<Int, Int>> members; // (d, multiplicity) with d | j
    Int size = 0;
    Int order = 0;                            // lcm of member orders
    std::vector<std::pair<Int, Int>> sigma;   // members of non-maximal order
    Int sigma_size = 0;
    Int covering_degree = 0;                  // order / m
    bool branched = false;                    // sigma nonempty and proper
    bool sigma_proper = false;
    std::vector<std::pair<Int, Int>> preimages; // (d, d / m)
};

struct StrataReport {
    Int n = 0;
    Int m = 0;
    Int r = 0;
    std::vector<Stratum> strata;
    Int M_order = 0;
    Int max_order = 0;
    Int pi_degree = 0;
    bool branched = false;
    bool sigma_proper = false;
};

StrataReport stratify(const OrderModel& model, ScenarioTag s, Int nu, Int r);

// The M-order is attained by some element whenever n is a prime power.
bool prime_power_guarantee(Int n);

struct SimplicityResult {
    bool simple = false;
    Int total = 0; // hom(f^*E, f^*E)
};

// hom_dims[j] = hom(E, E (x) L^j) for j = 0..n-1.
SimplicityResult simplicity_criterion(const std::vector<Int>& hom_dims);

inline constexpr const char* kExistsStablePullback = "exists_stable_pullback";
inline constexpr const char* kNoStablePullback = "stable_locus_nonempty_no_stable_pullback";

struct ClassifyQuery {
    InvariantVector u;
    ScenarioTag scenario = ScenarioTag::full_moduli;
    bool exists_stable_pullback = false;
    bool no_stable_pullback = false;
    std::optional<DivisorClass> H;
    std::optional<bool> unnodal;
    std::optional<bool> polarization_general;
    std::optional<bool> cover_polarization_general;
    std::optional<OrderModel> order_model;
};

struct Verdict {
    std::string value;
    std::vector<std::string> cites;
};

struct Note {
    std::string text;
    std::vector<std::string> cites;
};

struct YoshiokaHint {
    bool primitive = false;
    Int chi_uu = 0;
    std::optional<bool> unnodal;
    std::optional<bool> polarization_general;
    std::string polarization_source; // "computed", "asserted" or "unknown"
    Verdict verdict;                 // nonempty | conditional | not_applicable
};

struct KernelPredicate {
    bool pullback_primitive = false;
    Int minus_chi_pullback = 0;
    std::optional<bool> cover_polarization_general;
    std::string polarization_source;
    Verdict verdict; // yes | no | conditional
    std::optional<Int> dim_KX;
    std::optional<Int> dim_KY;
    Verdict ha_version;
};

struct PullbackReport {
    ScenarioTag scenario = ScenarioTag::full_moduli;
    Int n = 0;
    Int nu = 0;
    Int r = 0;
    Int m = 0;
    Int gcd_n_r = 0;
    std::vector<std::string> hypotheses;
    bool refuted = false;
    std::vector<Note> refutations;
    std::optional<Int> M_order;
    std::optional<Int> pi_degree;
    std::optional<Int> fstar_multiplicity;
    std::optional<Int> fstar_multiplicity_fixed_det;
    std::optional<bool> branch_locus_nonempty;
    bool stable_image_possible = true;
    DimReport dims;
    Verdict lagrangian_verdict;
    std::optional<Verdict> fixed_det_lagrangian_verdict;
    bool prime_power_guarantee = false;
    std::vector<std::string> constraints;
    std::vector<Int> candidate_ell;
    std::optional<StrataReport> strata;
    std::optional<YoshiokaHint> yoshioka;
    std::optional<KernelPredicate> kernel;
    std::vector<Note> notes;
};

// Throws HypothesisConflict when both hypotheses are asserted.
PullbackReport classify_pullback(const SurfaceProfile& surface, const CoveringProfile& cov, const ClassifyQuery& q);

} // namespace covmod
