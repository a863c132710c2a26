#include "covmod/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "covmod/albanese.hpp"
#include "covmod/covering.hpp"
#include "covmod/riemann_roch.hpp"
#include "covmod/walls.hpp"

namespace covmod {

namespace {

// ---------------------------------------------------------------------------
// Reading

class Node {
public:
    Node(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& what) const { throw InputError(path_ + ": " + what); }

    const std::string& path() const { return path_; }
    const Json& raw() const { return *j_; }
    bool is_null() const { return j_->is_null(); }

    void require_object() const
    {
        if (!j_->is_object())
            fail("expected an object");
    }

    void allow_keys(std::initializer_list<const char*> keys) const
    {
        require_object();
        for (auto it = j_->begin(); it != j_->end(); ++it) {
            const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; });
            if (!known)
                Node(it.value(), path_ + "." + it.key()).fail("unknown field");
        }
    }

    bool has(const char* key) const
    {
        require_object();
        return j_->contains(key) && !(*j_)[key].is_null();
    }

    Node at(const char* key) const
    {
        if (!has(key))
            Node(*j_, path_ + "." + key).fail("missing");
        return Node((*j_)[key], path_ + "." + key);
    }

    std::optional<Node> opt(const char* key) const
    {
        if (!has(key))
            return std::nullopt;
        return at(key);
    }

    std::size_t size() const
    {
        if (!j_->is_array())
            fail("expected an array");
        return j_->size();
    }

    Node at(std::size_t i) const { return Node((*j_)[i], path_ + "[" + std::to_string(i) + "]"); }

    Int integer() const
    {
        if (!j_->is_number_integer())
            fail("expected an integer");
        if (j_->is_number_unsigned() && j_->get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            fail("integer out of range");
        return j_->get<Int>();
    }

    bool boolean() const
    {
        if (!j_->is_boolean())
            fail("expected true or false");
        return j_->get<bool>();
    }

    std::string string() const
    {
        if (!j_->is_string())
            fail("expected a string");
        return j_->get<std::string>();
    }

    Rational rational() const
    {
        if (j_->is_number_integer())
            return Rational(integer());
        if (!j_->is_string())
            fail("expected an integer or a \"p/q\" string");
        try {
            return parse_rational(j_->get<std::string>());
        } catch (const InputError& e) {
            fail(e.what());
        }
    }

    std::vector<Int> integers() const
    {
        std::vector<Int> out;
        for (std::size_t i = 0; i < size(); ++i)
            out.push_back(at(i).integer());
        return out;
    }

    std::vector<std::vector<Int>> matrix() const
    {
        std::vector<std::vector<Int>> out;
        for (std::size_t i = 0; i < size(); ++i)
            out.push_back(at(i).integers());
        return out;
    }

    // Rethrows errors from library validation with this node's path.
    template <typename F>
    auto wrap(F&& f) const -> decltype(f())
    {
        try {
            return f();
        } catch (const InputError& e) {
            const std::string msg = e.what();
            if (msg.rfind(path_, 0) == 0)
                throw;
            fail(msg);
        }
    }

private:
    const Json* j_;
    std::string path_;
};

DivisorClass read_class(const Node& n, const NSLattice& ns)
{
    std::vector<Int> free;
    std::vector<Int> tors;
    if (n.raw().is_array()) {
        free = n.integers();
    } else {
        n.allow_keys({"free", "tors"});
        free = n.at("free").integers();
        if (auto t = n.opt("tors"))
            tors = t->integers();
    }
    if (tors.empty())
        tors.assign(ns.torsion.size(), 0);
    return n.wrap([&] { return ns.make(free, tors); });
}

InvariantVector read_u(const Node& n, const NSLattice& ns)
{
    n.allow_keys({"r", "c", "chi"});
    InvariantVector u;
    u.r = n.at("r").integer();
    u.c = n.has("c") ? read_class(n.at("c"), ns) : ns.zero();
    u.chi = n.at("chi").integer();
    n.wrap([&] { check_invariant(u, ns); });
    return u;
}

TorusPoint read_point(const Node& n)
{
    if (n.size() != 2)
        n.fail("expected two coordinates");
    return TorusPoint::make(n.at(std::size_t{0}).rational(), n.at(std::size_t{1}).rational());
}

// ---------------------------------------------------------------------------
// Writing

Json rat(const Rational& q) { return to_string(q); }

Json opt_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

Json opt_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json to_json(const DivisorClass& c) { return Json{{"free", c.free}, {"tors", c.tors}}; }

Json to_json(const InvariantVector& u) { return Json{{"r", u.r}, {"c", to_json(u.c)}, {"chi", u.chi}}; }

Json to_json(const UniPoly& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(rat(c));
    return Json{{"text", p.to_string()}, {"coeffs", coeffs}};
}

Json to_json(const BiPoly& p)
{
    Json table = Json::array();
    for (const auto& part : p.by_n_degree()) {
        Json row = Json::array();
        for (const auto& c : part.coeffs())
            row.push_back(rat(c));
        table.push_back(row);
    }
    return Json{{"text", p.to_string()}, {"coeffs_by_n_degree", table}};
}

Json to_json(const TorusPoint& p) { return Json::array({rat(p.x), rat(p.y)}); }

Json to_json(const ProductPoint& p) { return Json{{"b", to_json(p.b)}, {"c", to_json(p.c)}}; }

Json to_json(const Wall& w) { return Json{{"xi", w.xi}, {"xi_square", w.xi_square}}; }

Json to_json(const Verdict& v) { return Json{{"value", v.value}, {"cites", v.cites}}; }

Json to_json(const std::vector<Note>& notes)
{
    Json out = Json::array();
    for (const auto& n : notes)
        out.push_back(Json{{"text", n.text}, {"cites", n.cites}});
    return out;
}

Json pairs(const std::vector<std::pair<Int, Int>>& xs)
{
    Json out = Json::array();
    for (const auto& [a, b] : xs)
        out.push_back(Json::array({a, b}));
    return out;
}

Json to_json(const DimReport& d)
{
    return Json{{"dimY", d.dimY},
                {"dimX", d.dimX},
                {"dimY_fixed_det", opt_int(d.dimY_fixed_det)},
                {"dimX_fixed_det", opt_int(d.dimX_fixed_det)},
                {"chi_uu", d.chi_uu},
                {"chi_pullback", d.chi_pullback},
                {"degree", d.degree},
                {"assumptions", d.assumptions}};
}

Json to_json(const StrataReport& s)
{
    Json strata = Json::array();
    for (const auto& st : s.strata)
        strata.push_back(Json{{"j", st.j},
                              {"members", pairs(st.members)},
                              {"size", st.size},
                              {"order", st.order},
                              {"sigma", pairs(st.sigma)},
                              {"sigma_size", st.sigma_size},
                              {"sigma_proper", st.sigma_proper},
                              {"branched", st.branched},
                              {"covering_degree", st.covering_degree},
                              {"preimages", pairs(st.preimages)}});
    return Json{{"n", s.n},           {"m", s.m},
                {"r", s.r},           {"strata", strata},
                {"M_order", s.M_order}, {"max_order", s.max_order},
                {"pi_degree", s.pi_degree}, {"branched", s.branched},
                {"sigma_proper", s.sigma_proper}};
}

Json to_json(const GeneralityReport& g)
{
    return Json{{"general", g.general},
                {"witness", g.witness ? to_json(*g.witness) : Json(nullptr)},
                {"witness_L", g.witness_L ? Json(*g.witness_L) : Json(nullptr)},
                {"relative_to_candidates", g.relative_to_candidates},
                {"note", g.note}};
}

Json to_json(const TransferReport& t)
{
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back(Json{{"xi", r.xi},
                            {"xi_square", r.xi_square},
                            {"cover_square", r.cover_square},
                            {"cover_bound", r.cover_bound},
                            {"cover_wall_valid", r.cover_wall_valid},
                            {"xi_dot_H", r.xi_dot_H},
                            {"cover_dot_H", r.cover_dot_H},
                            {"pairing_scales", r.pairing_scales},
                            {"base_on_wall", r.base_on_wall},
                            {"cover_on_wall", r.cover_on_wall}});
    return Json{{"degree", t.degree},
                {"base_delta", t.base_delta},
                {"cover_delta", t.cover_delta},
                {"rows", rows},
                {"base_general", t.base_general},
                {"cover_general", t.cover_general},
                {"implication_holds", t.implication_holds},
                {"vacuous", t.vacuous},
                {"cites", {"generality-descends", "discriminant-scaling"}}};
}

Json surface_summary(const LoadedProfile& p)
{
    const auto& s = p.surface;
    return Json{{"kind", to_string(s.kind())},
                {"chiO", s.chiO()},
                {"rho", s.ns().rank()},
                {"torsion", s.torsion().orders()},
                {"n", s.n()},
                {"nu", opt_int(s.nu())},
                {"cover_degree", p.covering.degree()},
                {"cover_chiO", p.covering.cover_chiO()}};
}

// ---------------------------------------------------------------------------
// Commands

CommandOutcome analyze(const LoadedProfile& p, const Node& q)
{
    q.allow_keys({"u", "scenario", "hypotheses", "H", "unnodal", "polarization_general", "cover_polarization_general",
                  "order_model"});
    const auto& ns = p.surface.ns();
    ClassifyQuery cq;
    cq.u = read_u(q.at("u"), ns);
    if (cq.u.is_zero())
        q.at("u").fail("the zero vector is not the invariant of a nonzero sheaf");
    if (auto s = q.opt("scenario"))
        cq.scenario = s->wrap([&] { return parse_scenario(s->string()); });
    if (auto h = q.opt("hypotheses")) {
        for (std::size_t i = 0; i < h->size(); ++i) {
            const auto label = h->at(i).string();
            if (label == kExistsStablePullback)
                cq.exists_stable_pullback = true;
            else if (label == kNoStablePullback)
                cq.no_stable_pullback = true;
            else
                h->at(i).fail(std::string("unknown hypothesis (expected ") + kExistsStablePullback + " or " +
                              kNoStablePullback + ")");
        }
    }
    if (auto h = q.opt("H"))
        cq.H = read_class(*h, ns);
    if (auto b = q.opt("unnodal"))
        cq.unnodal = b->boolean();
    if (auto b = q.opt("polarization_general"))
        cq.polarization_general = b->boolean();
    if (auto b = q.opt("cover_polarization_general"))
        cq.cover_polarization_general = b->boolean();
    if (auto m = q.opt("order_model")) {
        OrderModel model;
        model.n = p.surface.n();
        for (std::size_t i = 0; i < m->size(); ++i) {
            const auto e = m->at(i);
            if (e.size() != 2)
                e.fail("expected [order, multiplicity]");
            model.orders.emplace_back(e.at(std::size_t{0}).integer(), e.at(std::size_t{1}).integer());
        }
        cq.order_model = model;
    }

    const auto rep = classify_pullback(p.surface, p.covering, cq);
    Json out{{"command", "analyze"},
             {"surface", surface_summary(p)},
             {"u", to_json(cq.u)},
             {"scenario", to_string(rep.scenario)},
             {"n", rep.n},
             {"nu", rep.nu},
             {"r", rep.r},
             {"m", rep.m},
             {"gcd_n_r", rep.gcd_n_r},
             {"hypotheses", rep.hypotheses},
             {"refuted", rep.refuted},
             {"refutations", to_json(rep.refutations)},
             {"M_order", opt_int(rep.M_order)},
             {"pi_degree", opt_int(rep.pi_degree)},
             {"fstar_multiplicity", opt_int(rep.fstar_multiplicity)},
             {"fstar_multiplicity_fixed_det", opt_int(rep.fstar_multiplicity_fixed_det)},
             {"branch_locus_nonempty", opt_bool(rep.branch_locus_nonempty)},
             {"stable_image_possible", rep.stable_image_possible},
             {"dims", to_json(rep.dims)},
             {"lagrangian_verdict", to_json(rep.lagrangian_verdict)},
             {"fixed_det_lagrangian_verdict",
              rep.fixed_det_lagrangian_verdict ? to_json(*rep.fixed_det_lagrangian_verdict) : Json(nullptr)},
             {"prime_power_guarantee", rep.prime_power_guarantee},
             {"constraints", rep.constraints},
             {"candidate_ell", rep.candidate_ell},
             {"strata", rep.strata ? to_json(*rep.strata) : Json(nullptr)},
             {"notes", to_json(rep.notes)}};
    if (rep.yoshioka) {
        const auto& y = *rep.yoshioka;
        out["nonemptiness_hint"] = Json{{"primitive", y.primitive},
                                        {"chi_uu", y.chi_uu},
                                        {"unnodal", opt_bool(y.unnodal)},
                                        {"polarization_general", opt_bool(y.polarization_general)},
                                        {"polarization_source", y.polarization_source},
                                        {"verdict", to_json(y.verdict)}};
    } else {
        out["nonemptiness_hint"] = nullptr;
    }
    if (rep.kernel) {
        const auto& k = *rep.kernel;
        out["albanese_kernel"] = Json{{"pullback_primitive", k.pullback_primitive},
                                      {"minus_chi_pullback", k.minus_chi_pullback},
                                      {"cover_polarization_general", opt_bool(k.cover_polarization_general)},
                                      {"polarization_source", k.polarization_source},
                                      {"verdict", to_json(k.verdict)},
                                      {"dim_KX", opt_int(k.dim_KX)},
                                      {"dim_KY", opt_int(k.dim_KY)},
                                      {"ha_version", to_json(k.ha_version)}};
    } else {
        out["albanese_kernel"] = nullptr;
    }
    return {out, rep.refuted ? CommandStatus::refuted : CommandStatus::ok};
}

std::vector<SubInvariant> read_candidates(const Node& q, const NSLattice& ns)
{
    std::vector<SubInvariant> out;
    if (auto c = q.opt("candidates"))
        for (std::size_t i = 0; i < c->size(); ++i) {
            const auto e = c->at(i);
            e.allow_keys({"c", "chi"});
            out.push_back(SubInvariant{read_class(e.at("c"), ns), e.at("chi").integer()});
        }
    return out;
}

CommandOutcome walls(const LoadedProfile& p, const Node& q)
{
    q.allow_keys({"u", "region", "H", "candidates", "transfer", "shift"});
    const auto& s = p.surface;
    const auto& ns = s.ns();
    const auto u = read_u(q.at("u"), ns);
    if (u.is_zero())
        q.at("u").fail("the zero vector is not the invariant of a nonzero sheaf");
    std::optional<DivisorClass> H;
    if (auto h = q.opt("H"))
        H = read_class(*h, ns);
    const auto candidates = read_candidates(q, ns);
    const bool transfer = q.has("transfer") && q.at("transfer").boolean();

    Json out{{"command", "walls"},
             {"surface", surface_summary(p)},
             {"u", to_json(u)},
             {"delta", discriminant(u, s)},
             {"cites", {"generality-descends", "discriminant-scaling", "primitivity-descends"}}};

    if (u.r == 1) {
        out["message"] = "rank 1: the whole ample cone is the only chamber";
        out["walls"] = Json::array();
        if (H)
            out["generality"] = to_json(is_general(*H, u, s));
        return {out};
    }

    if (u.r >= 2) {
        out["bound"] = wall_bound(u, s);
        if (auto reg = q.opt("region")) {
            std::vector<std::vector<Rational>> gens;
            for (std::size_t i = 0; i < reg->size(); ++i) {
                const auto g = reg->at(i);
                std::vector<Rational> v;
                for (std::size_t k = 0; k < g.size(); ++k)
                    v.push_back(g.at(k).rational());
                gens.push_back(std::move(v));
            }
            const ConeRegion region = reg->wrap([&] { return ConeRegion(gens, s); });
            Json ws = Json::array();
            for (const auto& w : enumerate_walls(u, s, region))
                ws.push_back(to_json(w));
            out["region"] = region.integral();
            out["walls"] = ws;
        } else if (!H) {
            q.fail("walls needs a region or a polarization H");
        }
        if (H) {
            if (!q.has("region")) {
                Json ws = Json::array();
                for (const auto& w : enumerate_walls(u, s, ConeRegion::of_class(*H, s)))
                    ws.push_back(to_json(w));
                out["walls"] = ws;
            }
            out["generality"] = to_json(is_general(*H, u, s));
        }
    } else {
        if (candidates.empty())
            q.at("candidates").fail("rank 0 walls need candidate sub-invariants");
        Json ws = Json::array();
        for (const auto& sub : candidates) {
            const auto w = zero_rank_wall(u, sub, s);
            ws.push_back(w ? Json{{"L", w->L}, {"wall", to_json(w->wall)}} : Json(nullptr));
        }
        out["zero_rank_walls"] = ws;
        if (H) {
            out["generality"] = to_json(is_general(*H, u, s, candidates));
            const Int k = q.has("shift") ? q.at("shift").integer() : 1;
            const auto sh = shift_chi(u, *H, s, k);
            out["shift"] = Json{{"k", k}, {"u", to_json(sh.u)}, {"degenerate", sh.degenerate}};
            if (sh.degenerate)
                out["warning"] = "c.H = 0: the chi-shift is degenerate; c should be effective and H ample";
        }
    }
    if (transfer) {
        if (!H)
            q.at("H").fail("transfer needs a polarization H");
        out["transfer"] = to_json(transfer_generality(*H, u, p.covering, candidates));
    }
    return {out};
}

CommandOutcome hilbert(const LoadedProfile& p, const Node& q)
{
    q.allow_keys({"u", "H", "A"});
    const auto& s = p.surface;
    const auto& ns = s.ns();
    const auto u = read_u(q.at("u"), ns);
    if (u.is_zero())
        q.at("u").fail("the zero vector is not the invariant of a nonzero sheaf");
    const DivisorClass H = q.has("H") ? read_class(q.at("H"), ns) : s.ample_witness();
    const auto P = hilbert_polynomial(u, H, s);
    const int dim = sheaf_dimension(u, H, s);
    const auto fu = pullback_u(u, p.covering);
    Json out{{"command", "hilbert"},
             {"surface", surface_summary(p)},
             {"u", to_json(u)},
             {"H", to_json(H)},
             {"P", to_json(P)},
             {"dimension", dim},
             {"reduced", to_json(reduce(P, dim))},
             {"delta", discriminant(u, s)},
             {"chi_uu", euler_pairing(u, s)},
             {"ch2", rat(second_chern_character(u, s))},
             {"primitive", is_primitive(u, s.torsion())},
             {"pullback_u", to_json(fu)},
             {"pullback_delta", discriminant(fu, p.covering.cover())},
             {"pullback_P", to_json(hilbert_polynomial(fu, p.covering.pull(H), p.covering.cover()))},
             {"dims", to_json(expected_dims(u, s, p.covering))},
             {"cites", {"hilbert-scaling", "discriminant-scaling", "expected-dimension-relation"}}};
    if (auto a = q.opt("A")) {
        const auto A = read_class(*a, ns);
        const auto PHA = hilbert_polynomial_HA(u, H, A, s);
        out["A"] = to_json(A);
        out["P_HA"] = to_json(PHA);
        out["P_HA_reduced"] = to_json(reduce(PHA, dim));
    }
    return {out};
}

CommandOutcome albanese(const LoadedProfile& p, const Node& q, std::uint64_t seed)
{
    q.allow_keys({"n", "m", "g", "a", "c0", "cycle", "random_cycles"});
    const Int n = q.has("n") ? q.at("n").integer() : p.surface.n();
    const Int m = q.has("m") ? q.at("m").integer() : 1;
    std::optional<TorusPoint> g, a, c0;
    if (auto x = q.opt("g"))
        g = read_point(*x);
    if (auto x = q.opt("a"))
        a = read_point(*x);
    if (auto x = q.opt("c0"))
        c0 = read_point(*x);
    const auto act = q.wrap([&] { return make_action(n, m, g, a, c0); });

    ZeroCycle cycle;
    if (auto c = q.opt("cycle"))
        for (std::size_t i = 0; i < c->size(); ++i) {
            const auto e = c->at(i);
            e.allow_keys({"a", "b", "c"});
            cycle.push_back(CycleTerm{e.at("a").integer(), read_point(e.at("b")), read_point(e.at("c"))});
        }
    const auto rep = sum_pushforward(cycle, act);
    Json out{{"command", "albanese"},
             {"action", Json{{"n", act.n},
                             {"m", act.m},
                             {"rho", Json::array({Json(act.rho[0]), Json(act.rho[1])})},
                             {"g", to_json(act.g)},
                             {"a", to_json(act.a)},
                             {"c0", to_json(act.c0)}}},
             {"terms", cycle.size()},
             {"direct", to_json(rep.direct)},
             {"closed_form", to_json(rep.closed_form)},
             {"agree", rep.direct == rep.closed_form},
             {"b_component_zero", rep.b_component_zero},
             {"cites", {"albanese-summation", "albanese-kernel-lagrangian"}}};
    if (auto rc = q.opt("random_cycles")) {
        const Int count = rc->integer();
        if (count < 0)
            rc->fail("must be nonnegative");
        const auto b = image_dimension_bound(act, count, seed);
        out["image_bound"] = Json{{"cycles", b.cycles},
                                  {"seed", seed},
                                  {"b_component_zero", b.b_component_zero},
                                  {"dimension_bound", b.dimension_bound}};
    }
    return {out};
}

void render(std::ostringstream& os, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const Json& v) {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_null())
            return std::string("-");
        return v.dump();
    };
    auto flat = [](const Json& v) {
        return v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (!v.is_structured()) {
            os << pad << it.key() << ": " << scalar(v) << "\n";
        } else if (flat(v)) {
            os << pad << it.key() << ": [";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? ", " : "") << scalar(v[i]);
            os << "]\n";
        } else if (v.is_object()) {
            os << pad << it.key() << ":\n";
            render(os, v, indent + 1);
        } else {
            os << pad << it.key() << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    os << pad << "  -\n";
                    render(os, e, indent + 2);
                } else {
                    os << pad << "  - " << (flat(e) ? e.dump() : scalar(e)) << "\n";
                }
            }
        }
    }
}

} // namespace

LoadedProfile load_profile(const Json& doc)
{
    const Node root(doc, "profile");
    root.allow_keys({"kind", "chiO", "form", "torsion", "canonical_class", "n", "ample_witness", "covering"});
    const auto kind = root.at("kind").wrap([&] { return parse_surface_kind(root.at("kind").string()); });
    const Int chiO = root.at("chiO").integer();
    const auto form_node = root.at("form");
    const auto rows = form_node.matrix();
    IntersectionForm form = form_node.wrap([&] { return IntersectionForm(rows); });
    TorsionGroup torsion;
    if (auto t = root.opt("torsion")) {
        const auto orders = t->integers();
        torsion = t->wrap([&] { return TorsionGroup(orders); });
    }
    NSLattice ns{std::move(form), std::move(torsion)};
    const DivisorClass K = root.has("canonical_class") ? read_class(root.at("canonical_class"), ns) : ns.zero();
    const Int n = root.at("n").integer();
    const DivisorClass ample = read_class(root.at("ample_witness"), ns);
    SurfaceProfile surface = root.wrap([&] { return SurfaceProfile(kind, chiO, ns, K, n, ample); });

    if (auto c = root.opt("covering")) {
        c->allow_keys({"degree", "cover_chiO", "torsion_map"});
        const Int degree = c->at("degree").integer();
        const Int cover_chiO = c->at("cover_chiO").integer();
        std::optional<TorsionMap> map;
        if (auto m = c->opt("torsion_map")) {
            m->allow_keys({"target", "matrix"});
            const auto target = m->at("target").integers();
            map = TorsionMap{m->wrap([&] { return TorsionGroup(target); }), m->at("matrix").matrix()};
        }
        return c->wrap([&] { return LoadedProfile{surface, CoveringProfile(surface, degree, cover_chiO, map)}; });
    }
    return root.wrap([&] { return LoadedProfile{surface, CoveringProfile::canonical(surface)}; });
}

CommandOutcome run_command(std::string_view command, const LoadedProfile& profile, const Json& query,
                           std::uint64_t seed)
{
    const Node q(query, "query");
    q.require_object();
    if (command == "analyze")
        return analyze(profile, q);
    if (command == "walls")
        return walls(profile, q);
    if (command == "hilbert")
        return hilbert(profile, q);
    if (command == "albanese")
        return albanese(profile, q, seed);
    throw InputError("unknown command \"" + std::string(command) + "\" (expected analyze, walls, hilbert or albanese)");
}

InvariantVector read_invariant(const Json& doc, const NSLattice& ns) { return read_u(Node(doc, "u"), ns); }

std::string dump_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report)
{
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

} // namespace covmod
