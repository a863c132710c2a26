#include "covmod/covering.hpp"

#include <algorithm>
#include <set>

#include "covmod/walls.hpp"

namespace covmod {

namespace cite {
constexpr const char* stability_equivalence = "pullback-stability-equivalence";
constexpr const char* coprime_cover = "coprime-rank-unbranched-cover";
constexpr const char* canonical_pullback = "canonical-cover-pullback";
constexpr const char* canonical_unstable = "canonical-cover-unstable-pullback";
constexpr const char* double_stable = "double-cover-stable-pullback";
constexpr const char* double_unstable = "double-cover-unstable-pullback";
constexpr const char* fixed_det_pullback = "fixed-determinant-pullback";
constexpr const char* fixed_det_unstable = "fixed-determinant-unstable-pullback";
constexpr const char* dimension_relation = "expected-dimension-relation";
constexpr const char* fixed_det_dimension = "fixed-determinant-dimension";
constexpr const char* kernel_lagrangian = "albanese-kernel-lagrangian";
constexpr const char* kernel_conjectural = "albanese-kernel-hk-conjectural";
constexpr const char* prime_power = "prime-power-branching";
constexpr const char* strata = "strata-branching";
constexpr const char* order_divisibility = "order-divisibility";
constexpr const char* twist_counting = "twist-orbit-counting";
constexpr const char* enriques_nonempty = "enriques-nonemptiness";
constexpr const char* primitivity_descends = "primitivity-descends";
constexpr const char* generality_descends = "generality-descends";
} // namespace cite

std::string to_string(ScenarioTag s)
{
    switch (s) {
    case ScenarioTag::full_moduli: return "full_moduli";
    case ScenarioTag::fixed_determinant: return "fixed_determinant";
    case ScenarioTag::fixed_c1: return "fixed_c1";
    }
    return "full_moduli";
}

ScenarioTag parse_scenario(std::string_view name)
{
    if (name == "full_moduli")
        return ScenarioTag::full_moduli;
    if (name == "fixed_determinant")
        return ScenarioTag::fixed_determinant;
    if (name == "fixed_c1")
        return ScenarioTag::fixed_c1;
    throw InputError("unknown scenario \"" + std::string(name) +
                     "\" (expected full_moduli, fixed_determinant or fixed_c1)");
}

std::vector<Int> admissible_orders(Int n, Int r)
{
    if (n < 1)
        throw InputError("n must be positive");
    if (r < 0)
        throw InputError("rank must be nonnegative");
    const Int lower = n / gcd(n, r);
    std::vector<Int> out;
    for (Int d : divisors(n))
        if (d % lower == 0)
            out.push_back(d);
    return out;
}

Int scenario_m(ScenarioTag s, Int n, Int nu, Int r)
{
    if (n < 1 || nu < 1)
        throw InputError("n and nu must be positive");
    if (r < 0)
        throw InputError("rank must be nonnegative");
    if (n % nu != 0)
        throw InputError("nu = " + std::to_string(nu) + " does not divide n = " + std::to_string(n));
    const Int det_step = n / gcd(n, r);
    const Int c1_step = nu / gcd(nu, r);
    if (det_step % c1_step != 0)
        throw InternalError("nu / gcd(nu, r) does not divide n / gcd(n, r)");
    Int m = 1;
    switch (s) {
    case ScenarioTag::full_moduli: m = 1; break;
    case ScenarioTag::fixed_determinant: m = det_step; break;
    case ScenarioTag::fixed_c1: m = c1_step; break;
    }
    if (det_step % m != 0)
        throw InternalError("m does not divide n / gcd(n, r)");
    return m;
}

OrbitCounts tensor_orbit_counts(Int d, Int n, Int nu, Int r)
{
    if (n < 1 || nu < 1 || n % nu != 0)
        throw InputError("tensor_orbit_counts needs nu | n");
    const auto adm = admissible_orders(n, r);
    if (std::find(adm.begin(), adm.end(), d) == adm.end())
        throw InputError("E-order " + std::to_string(d) + " is not admissible for n = " + std::to_string(n) +
                         ", r = " + std::to_string(r));
    OrbitCounts c;
    c.distinct_twists = d;
    const Int det = d * gcd(n, r);
    const Int c1 = d * gcd(nu, r);
    if (det % n != 0 || c1 % nu != 0)
        throw InternalError("twist counts are not integral");
    c.fixed_det_count = det / n;
    c.fixed_c1_count = c1 / nu;
    return c;
}

namespace {

void validate_model(const OrderModel& model, Int r)
{
    if (model.orders.empty())
        throw InputError("order model must be nonempty");
    const auto adm = admissible_orders(model.n, r);
    for (const auto& [d, k] : model.orders) {
        if (std::find(adm.begin(), adm.end(), d) == adm.end())
            throw InputError("order model: E-order " + std::to_string(d) + " violates n/gcd(n,r) | d | n for n = " +
                             std::to_string(model.n) + ", r = " + std::to_string(r));
        if (k < 1)
            throw InputError("order model: multiplicities must be positive");
    }
}

Int total(const std::vector<std::pair<Int, Int>>& xs)
{
    Int s = 0;
    for (const auto& [d, k] : xs)
        s = checked_add(s, k);
    return s;
}

} // namespace

StrataReport stratify(const OrderModel& model, ScenarioTag s, Int nu, Int r)
{
    validate_model(model, r);
    const Int n = model.n;
    StrataReport rep;
    rep.n = n;
    rep.r = r;
    rep.m = scenario_m(s, n, nu, r);
    const Int lower = n / gcd(n, r);

    // Merge duplicate orders.
    std::vector<std::pair<Int, Int>> merged;
    for (const auto& [d, k] : model.orders) {
        auto it = std::find_if(merged.begin(), merged.end(), [d = d](const auto& p) { return p.first == d; });
        if (it == merged.end())
            merged.emplace_back(d, k);
        else
            it->second = checked_add(it->second, k);
    }
    std::sort(merged.begin(), merged.end());

    for (Int j : divisors(n)) {
        Stratum st;
        st.j = j;
        for (const auto& p : merged)
            if (j % p.first == 0)
                st.members.push_back(p);
        if (st.members.empty())
            continue;
        st.size = total(st.members);
        st.order = 1;
        for (const auto& p : st.members)
            st.order = lcm(st.order, p.first);
        if (st.order % lower != 0 || j % st.order != 0)
            throw InternalError("stratum order violates n/gcd(n,r) | order | j");

        for (const auto& p : st.members)
            if (p.first != st.order)
                st.sigma.push_back(p);
        // Same set as a union of the M_k with n/gcd(n,r) | k | order, k != order.
        std::set<Int> from_union;
        for (Int k : divisors(st.order)) {
            if (k % lower != 0 || k == st.order)
                continue;
            for (const auto& p : st.members)
                if (k % p.first == 0)
                    from_union.insert(p.first);
        }
        std::set<Int> direct;
        for (const auto& p : st.sigma)
            direct.insert(p.first);
        if (direct != from_union)
            throw InternalError("sigma differs from its union description");

        st.sigma_size = total(st.sigma);
        st.sigma_proper = st.sigma_size < st.size;
        st.branched = st.sigma_size > 0 && st.sigma_proper;
        if (st.order % rep.m != 0)
            throw InternalError("m does not divide the stratum order");
        st.covering_degree = st.order / rep.m;
        for (const auto& p : st.members)
            st.preimages.emplace_back(p.first, p.first / rep.m);
        rep.strata.push_back(std::move(st));
    }

    rep.M_order = 1;
    for (const auto& p : merged) {
        rep.M_order = lcm(rep.M_order, p.first);
        rep.max_order = std::max(rep.max_order, p.first);
    }
    rep.pi_degree = rep.M_order / rep.m;
    for (const auto& st : rep.strata)
        if (st.j == rep.M_order) {
            rep.branched = st.branched;
            rep.sigma_proper = st.sigma_proper;
        }
    return rep;
}

bool prime_power_guarantee(Int n)
{
    if (n < 1)
        throw InputError("n must be positive");
    return n == 1 || is_prime_power(n);
}

SimplicityResult simplicity_criterion(const std::vector<Int>& hom_dims)
{
    if (hom_dims.empty())
        throw InputError("simplicity_criterion needs hom(E, E (x) L^j) for j = 0..n-1");
    if (hom_dims[0] <= 0)
        throw InputError("hom(E, E) is never zero");
    SimplicityResult res;
    res.simple = hom_dims[0] == 1;
    for (std::size_t j = 0; j < hom_dims.size(); ++j) {
        if (hom_dims[j] < 0)
            throw InputError("hom dimensions must be nonnegative");
        if (j > 0 && hom_dims[j] != 0)
            res.simple = false;
        res.total = checked_add(res.total, hom_dims[j]);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Decision procedure

namespace {

std::vector<Int> candidate_ells(Int n, Int r)
{
    std::vector<Int> proper;
    for (Int d : admissible_orders(n, r))
        if (d < n)
            proper.push_back(d);
    std::set<Int> out;
    const std::size_t k = proper.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
        Int l = 1;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i))
                l = lcm(l, proper[i]);
        out.insert(l);
    }
    return {out.begin(), out.end()};
}

void refute(PullbackReport& rep, std::string text, std::vector<std::string> cites)
{
    rep.refuted = true;
    rep.refutations.push_back(Note{std::move(text), std::move(cites)});
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

PullbackReport classify_pullback(const SurfaceProfile& surface, const CoveringProfile& cov, const ClassifyQuery& q)
{
    if (q.exists_stable_pullback && q.no_stable_pullback)
        throw HypothesisConflict(std::string("hypotheses ") + kExistsStablePullback + " and " + kNoStablePullback +
                                 " contradict each other (" + cite::stability_equivalence +
                                 "; when gcd(n, r) = 1 only the first can hold: " + cite::coprime_cover + ")");
    const InvariantVector& u = q.u;
    check_invariant(u, surface.ns());
    const auto nu_opt = surface.nu();
    if (!nu_opt)
        throw InputError("the canonical class must be numerically trivial (finite order in NS)");

    PullbackReport rep;
    rep.scenario = q.scenario;
    rep.n = surface.n();
    rep.nu = *nu_opt;
    rep.r = u.r;
    rep.gcd_n_r = gcd(rep.n, u.r);
    rep.m = scenario_m(q.scenario, rep.n, rep.nu, u.r);
    rep.prime_power_guarantee = prime_power_guarantee(rep.n);
    if (q.exists_stable_pullback)
        rep.hypotheses.push_back(kExistsStablePullback);
    if (q.no_stable_pullback)
        rep.hypotheses.push_back(kNoStablePullback);
    rep.dims = expected_dims(u, surface, cov);

    const Int n = rep.n;
    const bool coprime = rep.gcd_n_r == 1;
    const bool double_cover = n == 2 && rep.nu == 2;
    const Int mult = n * gcd(rep.nu, u.r) / rep.nu;

    if (q.order_model) {
        if (q.order_model->n != n)
            throw InputError("order model n = " + std::to_string(q.order_model->n) + " differs from the profile's n = " +
                             std::to_string(n));
        rep.strata = stratify(*q.order_model, q.scenario, rep.nu, u.r);
    }

    if (coprime)
        rep.notes.push_back(Note{"gcd(n, r) = 1: every E-order is n, the quotient by twisting is an unbranched " +
                                     std::to_string(n / rep.m) + ":1 covering and pullbacks of stable sheaves stay stable",
                                 {cite::coprime_cover, cite::order_divisibility}});

    if (!q.no_stable_pullback) {
        // Stable pullback asserted or forced by coprimality; otherwise unknown.
        const bool applies = q.exists_stable_pullback || coprime;
        if (applies) {
            rep.M_order = n;
            rep.fstar_multiplicity = mult;
            if (coprime)
                rep.branch_locus_nonempty = false;
            else if (rep.strata)
                rep.branch_locus_nonempty = std::any_of(q.order_model->orders.begin(), q.order_model->orders.end(),
                                                        [n](const auto& p) { return p.first != n; });
            rep.notes.push_back(Note{"f* induces a " + std::to_string(mult) + ":1 covering of the stable locus onto its "
                                     "image, branched along the sheaves with E-order < n",
                                     {cite::canonical_pullback, cite::strata}});
            if (double_cover)
                rep.notes.push_back(Note{u.r % 2 ? "odd rank: f* is an isomorphism onto its image"
                                                 : "even rank: f* is 2:1 branched along E = E (x) K",
                                         {cite::double_stable}});
        }
        if (q.exists_stable_pullback) {
            if (rep.strata && rep.strata->M_order != n)
                refute(rep,
                       "order model has M-order " + std::to_string(rep.strata->M_order) +
                           " but a stable pullback forces M-order n = " + std::to_string(n),
                       {cite::stability_equivalence});
            if (rep.strata && rep.strata->max_order != n)
                refute(rep, "order model has no sheaf of E-order n", {cite::stability_equivalence});
            if (rep.dims.dimY < 0)
                refute(rep, "expected dimension " + std::to_string(rep.dims.dimY) + " < 0 contradicts ext^2(E,E) = 0",
                       {cite::dimension_relation});
            const bool lag = n == 2 || rep.dims.dimY == 1;
            rep.lagrangian_verdict = Verdict{yes_no(lag), {cite::canonical_pullback, cite::dimension_relation}};
            if (double_cover)
                rep.lagrangian_verdict.cites.push_back(cite::double_stable);
        } else {
            rep.lagrangian_verdict = Verdict{"conditional", {cite::canonical_pullback}};
            rep.notes.push_back(Note{"no existence hypothesis asserted: dimensions and verdicts are conditional on a "
                                     "sheaf E with u(E) = u and f*E stable",
                                     {cite::dimension_relation}});
        }
        rep.stable_image_possible = true;
    } else {
        rep.stable_image_possible = false;
        rep.lagrangian_verdict = Verdict{"no", {cite::canonical_unstable}};
        if (coprime)
            refute(rep, "gcd(n, r) = 1 forces a stable image, contradicting " + std::string(kNoStablePullback),
                   {cite::coprime_cover});
        if (rep.m >= n)
            refute(rep, "m = " + std::to_string(rep.m) + " >= n", {cite::canonical_unstable});
        rep.constraints.push_back("m < n");
        rep.constraints.push_back("E = E (x) K^l for every stable E, l the M-order");
        rep.constraints.push_back("gcd(n, r) != 1");
        rep.candidate_ell = candidate_ells(n, u.r);
        if (rep.strata) {
            if (rep.strata->max_order == n)
                refute(rep, "order model contains a sheaf of E-order n, which has a stable pullback",
                       {cite::stability_equivalence, cite::canonical_unstable});
            rep.M_order = rep.strata->M_order;
            rep.branch_locus_nonempty = rep.strata->branched;
        }
        if (rep.prime_power_guarantee)
            rep.notes.push_back(Note{"n is a prime power: l != n and f* is an l/m:1 covering branched along the "
                                     "sheaves with E-order != l",
                                     {cite::canonical_unstable, cite::prime_power}});
        else
            rep.notes.push_back(Note{"Σ properness not guaranteed", {cite::canonical_unstable, cite::prime_power}});
        if (double_cover) {
            if (u.r % 2 != 0)
                refute(rep, "for a double cover with nu = 2 the rank must be even", {cite::double_unstable});
            rep.constraints.push_back("r even");
            rep.constraints.push_back("E = E (x) K for every stable E");
            rep.constraints.push_back("f* injective on the stable locus");
            rep.fstar_multiplicity = 1;
        }
        if (q.scenario == ScenarioTag::fixed_determinant)
            rep.notes.push_back(Note{"fixed determinant: m < n and gcd(n, r) != 1", {cite::fixed_det_unstable}});
    }
    if (rep.M_order)
        rep.pi_degree = *rep.M_order / rep.m;

    if (q.scenario == ScenarioTag::fixed_determinant) {
        if (!q.no_stable_pullback && (q.exists_stable_pullback || coprime))
            rep.fstar_multiplicity_fixed_det = rep.gcd_n_r;
        if (rep.dims.dimY_fixed_det) {
            if (q.exists_stable_pullback) {
                const bool lag = n == 2 || *rep.dims.dimY_fixed_det == 0;
                rep.fixed_det_lagrangian_verdict =
                    Verdict{yes_no(lag), {cite::fixed_det_pullback, cite::fixed_det_dimension}};
            } else if (q.no_stable_pullback) {
                rep.fixed_det_lagrangian_verdict = Verdict{"no", {cite::fixed_det_unstable}};
            } else {
                rep.fixed_det_lagrangian_verdict = Verdict{"conditional", {cite::fixed_det_pullback}};
            }
        }
    }

    // Nonemptiness hint for Enriques surfaces.
    if (surface.kind() == SurfaceKind::enriques && !u.is_zero()) {
        YoshiokaHint h;
        h.primitive = is_primitive(u, surface.torsion());
        h.chi_uu = rep.dims.chi_uu;
        h.unnodal = q.unnodal;
        if (q.H && u.r != 0) {
            h.polarization_general = is_general(*q.H, u, surface).general;
            h.polarization_source = "computed";
        } else if (q.polarization_general) {
            h.polarization_general = q.polarization_general;
            h.polarization_source = "asserted";
        } else {
            h.polarization_source = "unknown";
        }
        const bool numeric = h.primitive && h.chi_uu >= -1;
        std::string value;
        if (!numeric || h.unnodal == false || h.polarization_general == false)
            value = "not_applicable";
        else if (h.unnodal == true && h.polarization_general == true)
            value = "nonempty";
        else
            value = "conditional";
        h.verdict = Verdict{value, {cite::enriques_nonempty}};
        rep.yoshioka = h;
    }

    // Albanese-kernel predicate for bielliptic double covers.
    if (surface.kind() == SurfaceKind::bielliptic && n == 2 && !u.is_zero()) {
        KernelPredicate k;
        const auto fu = pullback_u(u, cov);
        k.pullback_primitive = is_primitive(fu, cov.cover().torsion());
        k.minus_chi_pullback = -rep.dims.chi_pullback;
        if (q.H && u.r != 0) {
            k.cover_polarization_general = is_general(cov.pull(*q.H), fu, cov.cover()).general;
            k.polarization_source = "computed";
        } else if (q.cover_polarization_general) {
            k.cover_polarization_general = q.cover_polarization_general;
            k.polarization_source = "asserted";
        } else {
            k.polarization_source = "unknown";
        }
        std::string value;
        if (!k.pullback_primitive || k.minus_chi_pullback < 6 || k.cover_polarization_general == false)
            value = "no";
        else if (k.cover_polarization_general == true)
            value = "yes";
        else
            value = "conditional";
        k.verdict = Verdict{value, {cite::kernel_lagrangian, cite::primitivity_descends, cite::generality_descends}};
        if (value == "yes") {
            k.dim_KX = k.minus_chi_pullback - 2;
            k.dim_KY = *rep.dims.dimY_fixed_det - 1;
            if (*k.dim_KX != 2 * *k.dim_KY)
                throw InternalError("kernel dimensions are not in Lagrangian position");
        }
        k.ha_version = Verdict{"conjectural", {cite::kernel_conjectural}};
        rep.kernel = k;
    }

    rep.notes.push_back(Note{"twist counts per sheaf of E-order d: d, d gcd(n,r)/n, d gcd(nu,r)/nu",
                             {cite::twist_counting, cite::order_divisibility}});
    return rep;
}

} // namespace covmod
