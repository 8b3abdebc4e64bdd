#include "fqrep/cli/commands.hpp"

#include <CLI11.hpp>

#include <functional>
#include <numeric>
#include <ostream>
#include <regex>
#include <sstream>

#include "fqrep/cli/document.hpp"
#include "fqrep/errors.hpp"
#include "fqrep/realize.hpp"
#include "fqrep/reciprocity.hpp"

namespace fqrep::cli {

namespace {

// ------------------------------------------------------------------ helpers

std::string format_matrix(const Matrix& m, const std::string& indent = "  ") {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            cells.push_back(m(i, j).to_string());
            width = std::max(width, cells.back().size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const auto& c = cells[i * m.dim() + j];
            os << " " << std::string(width - c.size(), ' ') << c;
        }
        os << " ]\n";
    }
    return os.str();
}

void print_rep(std::ostream& out, const Representation& rep, const VerifyReport& report) {
    out << "field: " << rep.ctx.describe() << "\n";
    out << "a ->\n" << format_matrix(rep.mat_a) << "b ->\n" << format_matrix(rep.mat_b);
    out << "verify: " << report.summary() << "\n";
    if (!rep.choices.empty()) {
        out << "choices:";
        for (const auto& [k, v] : rep.choices) out << " " << k << "=" << v;
        out << "\n";
    }
}

bool is_prime_power(u64 q) { return as_prime_power(q).has_value(); }

void require_prime_power(u64 q) {
    if (!is_prime_power(q)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
}

std::string echo(int argc, const char* const* argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
}

Pins make_pins(const std::string& z, const std::string& eta, const std::string& zeta) {
    Pins p;
    if (!z.empty()) p.z1 = parse_coefficients(z);
    if (!eta.empty()) p.eta = parse_coefficients(eta);
    if (!zeta.empty()) p.zeta = parse_coefficients(zeta);
    return p;
}

// Collects named pass/fail checks for the demos.
class Checklist {
public:
    Checklist(std::ostream& out, bool quiet) : out_(out), quiet_(quiet) {}
    void check(const std::string& label, bool ok) {
        if (!quiet_) out_ << (ok ? "  [ok]   " : "  [FAIL] ") << label << "\n";
        items_.push_back({{"check", label}, {"ok", ok}});
        all_ &= ok;
    }
    bool all() const { return all_; }
    Json json() const { return items_; }

private:
    std::ostream& out_;
    bool quiet_;
    Json items_ = Json::array();
    bool all_ = true;
};

// ------------------------------------------------------------------ demos

bool demo_ex48(std::ostream& out, Checklist& c) {
    const MetacyclicGroup g = make_group(5, 8, 2);
    out << "Group " << g.to_string() << ", t = " << g.t << ", r = " << g.r << ", q = 19\n";
    Pins pins;
    pins.eta = std::vector<i64>{-1};
    pins.z1 = std::vector<i64>{3, 2};
    const ComponentRealization r1 = realize_component_detailed(g, 19, 1, pins);
    const FieldCtx& L = r1.rep.ctx;
    out << "L = " << L.describe() << ", zeta = " << r1.zeta.to_string() << "\n";
    out << "f = " << r1.f.to_string() << "\n";
    c.check("f = x^4 + x^3 + x^2 + x + 1", r1.f == Poly::from_ints(L, {1, 1, 1, 1, 1}));
    const Poly f1 = Poly::from_ints(L, {1, -4, 1}), f2 = Poly::from_ints(L, {1, 5, 1});
    out << "factors:";
    for (const auto& p : r1.solution.factors) out << " (" << p.to_string() << ")";
    out << "\n";
    c.check("factors (x^2 - 4x + 1)(x^2 + 5x + 1)",
            r1.solution.factors.size() == 2 && f1 * f2 == r1.f &&
                std::find(r1.solution.factors.begin(), r1.solution.factors.end(), f1) != r1.solution.factors.end() &&
                std::find(r1.solution.factors.begin(), r1.solution.factors.end(), f2) != r1.solution.factors.end());
    c.check("zeta is a root of x^2 - 4x + 1", f1.eval(r1.zeta).is_zero());
    const PolyXgcd bez = xgcd(f2, f1);
    out << "1 = (" << bez.u.to_string() << ")(" << f2.to_string() << ") + (" << bez.v.to_string() << ")("
        << f1.to_string() << ")\n";
    c.check("Bezout cofactors 2x - 8 and -2x + 9",
            bez.u == Poly::from_ints(L, {-8, 2}) && bez.v == Poly::from_ints(L, {9, -2}));
    const FieldElem z = FieldElem::from_int(L, 3) + FieldElem::from_int(L, 2) * r1.zeta;
    c.check("N(3 + 2 zeta) = -1", norm(z) == FieldElem::from_int(L, -1));
    out << "z(x) = " << r1.solution.z.to_string() << "\n";
    c.check("z(x) = 4x^3 - x", r1.solution.z == Poly::from_ints(L, {0, -1, 0, 4}));
    out << "component 1, a ->\n" << format_matrix(r1.rep.mat_a) << "component 1, b ->\n" << format_matrix(r1.rep.mat_b);
    c.check("b-matrix of component 1",
            r1.rep.mat_b == Matrix::from_ints(L, {{0, 1, -4, -1}, {-1, 5, -4, 0}, {0, 1, -5, 4}, {4, 1, -4, 0}}));
    Pins pins0;
    pins0.eta = pins.eta;
    const Representation r0 = realize_component(g, 19, 0, pins0);
    out << "component 0, b ->\n" << format_matrix(r0.mat_b);
    c.check("b-matrix of component 0",
            r0.mat_b == Matrix::from_ints(L, {{1, 0, 0, -1}, {0, 0, 1, -1}, {0, 0, 0, -1}, {0, 1, 0, -1}}));
    for (u64 comp = 0; comp < 2; ++comp) {
        const Representation ref = induced_component(g, r1.zeta, r1.eta, comp);
        const Representation rep = comp == 0 ? r0 : r1.rep;
        const VerifyReport rpt = verify(rep, &ref, {true, true});
        c.check("component " + std::to_string(comp) + " verifies: " + rpt.summary(), rpt.ok());
    }
    return c.all();
}

bool demo_ex41(std::ostream& out, Checklist& c) {
    const MetacyclicGroup g = make_group(7, 9, 2);
    const u64 q = 37;
    out << "Group " << g.to_string() << ", t = " << g.t << ", r = " << g.r << ", q = " << q << "\n";
    c.check("t = r = 3", g.t == 3 && g.r == 3);
    c.check("|2|_7 = 3", ord_mod(2, 7) == 3);
    const auto j = realizability_witness(g, q);
    c.check("37 = 2^1 mod 7", j && *j == 1);
    c.check("completely realizable (37 = 1 mod 3)", is_completely_realizable(g, q));
    for (u64 comp = 0; comp < g.r; ++comp) {
        const ComponentRealization r = realize_component_detailed(g, q, comp);
        out << "component " << comp << ": f = " << r.f.to_string() << ", eta = " << r.eta.to_string()
            << ", z(x) = " << r.solution.z.to_string() << "\n";
        out << "a ->\n" << format_matrix(r.rep.mat_a) << "b ->\n" << format_matrix(r.rep.mat_b);
        const Representation ref = induced_component(g, r.zeta, r.eta, comp);
        const VerifyReport rpt = verify(r.rep, &ref, {true, true});
        c.check("component " + std::to_string(comp) + ": " + rpt.summary(), rpt.ok());
    }
    return c.all();
}

bool demo_q12(std::ostream& out, Checklist& c) {
    const MetacyclicGroup g = make_group(3, 4, 2);
    const auto [L, zeta] = realization_field(5, 3);
    out << "Group " << g.to_string() << " over " << L.describe() << ", zeta = " << zeta.to_string() << "\n";
    c.check("x^2 + x + 1 is irreducible over F_5 and vanishes at zeta",
            is_irreducible(Poly::from_ints(make_prime_field(5), {1, 1, 1})) &&
                Poly::from_ints(L, {1, 1, 1}).eval(zeta).is_zero());
    const Representation rho = induced_rep(g, zeta);
    out << "induced a ->\n" << format_matrix(rho.mat_a) << "induced b ->\n" << format_matrix(rho.mat_b);
    const FieldElem z2 = zeta * zeta;
    c.check("induced a = diag(zeta, zeta^2, zeta, zeta^2)", rho.mat_a == Matrix::diagonal({zeta, z2, zeta, z2}));
    c.check("induced representation is reducible (|2|_3 = 2 != 4)", !is_irreducible_induced(g));

    Representation rho5{g, L, Matrix::from_ints(L, {{0, -1}, {1, -1}}), Matrix::from_ints(L, {{1, -1}, {0, -1}}), {}};
    Representation rho6{g, L, Matrix::diagonal({zeta, z2}), Matrix::from_ints(L, {{0, -1}, {1, 0}}), {}};
    c.check("rho5 satisfies the relations", check_relations(rho5).ok());
    c.check("rho6 satisfies the relations", check_relations(rho6).ok());
    const Matrix sum_a = block_diagonal({rho5.mat_a, rho6.mat_a}), sum_b = block_diagonal({rho5.mat_b, rho6.mat_b});
    const auto x = find_intertwiner(rho.mat_a, rho.mat_b, sum_a, sum_b);
    c.check("induced representation is equivalent to rho5 + rho6 (intertwiner found)", x.has_value());

    const Representation mu = realize_quaternion_tau(3, 5);
    out << "theta = " << mu.ctx.describe() << " element " << (zeta + zeta.inv()).to_string() << "\n";
    out << "A~ ->\n" << format_matrix(mu.mat_a) << "B ->\n" << format_matrix(mu.mat_b);
    c.check("theta = zeta + zeta^-1 = -1", zeta + zeta.inv() == FieldElem::from_int(L, -1));
    c.check("A~ = [[0,3],[3,-1]]", mu.mat_a == Matrix::from_ints(L, {{0, 3}, {3, -1}}));
    c.check("B = [[0,-1],[1,0]]", mu.mat_b == Matrix::from_ints(L, {{0, -1}, {1, 0}}));
    c.check("B^4 = I", mu.mat_b.pow(4).is_identity());
    c.check("tr A~ = theta", mu.mat_a.trace() == FieldElem::from_int(L, -1));
    bool traces = true;
    for (u64 t = 1; t < 3; ++t) {
        const Matrix at = mu.mat_a.pow(t);
        traces &= at.trace() == zeta.pow(t) + zeta.inv().pow(t);
        for (u64 j = 1; j < 4; j += 2) traces &= (at * mu.mat_b.pow(j)).trace().is_zero();
    }
    c.check("tr A~^t = zeta^t + zeta^-t and tr A~^t B^j = 0 for odd j", traces);
    const Representation tau = quaternion_tau(3, zeta);
    const VerifyReport rpt = verify(mu, &tau, {true, true});
    c.check("A~, B realize tau: " + rpt.summary(), rpt.ok());
    return c.all();
}

bool demo_sylvester(std::ostream& out, Checklist& c) {
    const SylvesterResult s35 = sylvester_check(3, 5);
    out << "m = 3, q = 5: zeta + zeta^-1 = " << s35.value.to_string() << "\n";
    c.check("zeta + zeta^-1 = -1 lies in F_5", s35.in_field && s35.value == FieldElem::from_int(s35.value.ctx(), -1));
    const Representation d35 = realize_dihedral(3, 5);
    out << "theta(a) ->\n" << format_matrix(d35.mat_a) << "theta(b) ->\n" << format_matrix(d35.mat_b);
    c.check("theta(a) = [[0,-1],[1,-1]], theta(b) = [[1,-1],[0,-1]]",
            d35.mat_a == Matrix::from_ints(d35.ctx, {{0, -1}, {1, -1}}) &&
                d35.mat_b == Matrix::from_ints(d35.ctx, {{1, -1}, {0, -1}}));
    const SylvesterResult s519 = sylvester_check(5, 19);
    out << "m = 5, q = 19: zeta + zeta^-1 = " << s519.value.to_string() << "\n";
    const FieldCtx& L = s519.value.ctx();
    c.check("zeta + zeta^-1 in {4, -5}",
            s519.in_field && (s519.value == FieldElem::from_int(L, 4) || s519.value == FieldElem::from_int(L, -5)));
    c.check("D_10 realizable over F_19", check_relations(realize_dihedral(5, 19)).ok());
    const SylvesterResult s53 = sylvester_check(5, 3);
    bool refused = false;
    try {
        realize_dihedral(5, 3);
    } catch (const NotRealizable&) {
        refused = true;
    }
    c.check("m = 5, q = 3: zeta + zeta^-1 not in F_3 and no realization", !s53.in_field && refused);
    return c.all();
}

bool demo_gauss(std::ostream& out, Checklist& c) {
    const GaussSum g519 = gauss_sum(5, 19);
    const FieldCtx& L = g519.c.ctx();
    out << "p = 5, q = 19: c = " << g519.c.to_string() << "\n";
    c.check("c in {4, -5}", g519.c == FieldElem::from_int(L, 4) || g519.c == FieldElem::from_int(L, -5));
    c.check("4c^2 + 4c + 1 - 5 = 0", g519.identity_holds);
    const GaussSum g37 = gauss_sum(3, 7);
    out << "p = 3, q = 7: c = " << g37.c.to_string() << "\n";
    c.check("c = zeta_3 and 4c^2 + 4c + 4 = 0", g37.c == g37.zeta && g37.identity_holds);
    const GaussSum g135 = gauss_sum(13, 5);
    out << "p = 13, q = 5: c = " << g135.c.to_string() << " in " << g135.c.ctx().describe() << "\n";
    c.check("4c^2 + 4c + 1 - 13 = 0 in F_5(zeta_13)", g135.identity_holds);
    return c.all();
}

const std::vector<std::pair<std::string, std::function<bool(std::ostream&, Checklist&)>>>& demo_table() {
    static const std::vector<std::pair<std::string, std::function<bool(std::ostream&, Checklist&)>>> table{
        {"q12", demo_q12}, {"ex41", demo_ex41}, {"ex48", demo_ex48}, {"sylvester", demo_sylvester}, {"gauss", demo_gauss}};
    return table;
}

// ------------------------------------------------------------- commands

struct Args {
    bool json = false;
    u64 m = 0, n = 0, k = 0, q = 0;
    std::string component = "all";
    bool quaternion = false;
    bool dihedral = false;
    std::string pin_z, pin_eta, pin_zeta;
    std::vector<u64> pair;
    u64 sweep = 0;
    std::string demo;
};

int cmd_check(const Args& a, std::ostream& out) {
    const MetacyclicGroup g = make_group(a.m, a.n, a.k);
    require_prime_power(a.q);
    const auto j = realizability_witness(g, a.q);
    const bool complete = j && a.q % g.r == 1 % g.r;
    const bool gcd_ok = std::gcd(a.q, g.order()) == 1;
    if (a.json) {
        Json doc{{"group", {{"m", g.m}, {"n", g.n}, {"k", g.k}, {"t", g.t}, {"r", g.r}}},
                 {"q", a.q},
                 {"realizable", j.has_value()},
                 {"completely_realizable", complete},
                 {"j", j ? Json(*j) : Json(nullptr)},
                 {"gcd_q_order_is_1", gcd_ok}};
        out << doc.dump(2) << "\n";
    } else {
        out << "group: " << g.to_string() << "  t = " << g.t << "  r = " << g.r << "\n";
        out << "realizable=" << (j ? "true" : "false");
        if (j) out << "  (q = k^" << *j << " mod m, j=" << *j << ")";
        out << "\ncompletely=" << (complete ? "true" : "false") << "  (q mod r = " << a.q % g.r << ")\n";
        out << "gcd(q, |G|) = 1: " << (gcd_ok ? "yes" : "no (the criterion is stated under this hypothesis)") << "\n";
    }
    return j ? kExitOk : kExitNotRealizable;
}

int emit_single(const Args& a, const std::string& command, const Representation& rep, const Representation* ref,
                std::ostream& out) {
    const VerifyReport rpt = verify(rep, ref, {true, ref != nullptr && rep.degree() <= 6});
    if (a.json)
        out << representation_document(command, rep, rpt).dump(2) << "\n";
    else
        print_rep(out, rep, rpt);
    return rpt.ok() ? kExitOk : kExitNotRealizable;
}

int cmd_realize(const Args& a, const std::string& command, std::ostream& out) {
    const Pins pins = make_pins(a.pin_z, a.pin_eta, a.pin_zeta);
    require_prime_power(a.q);
    if (a.quaternion) {
        if (a.n != 4 || a.k != a.m - 1) throw InvalidArgument("--quaternion expects the presentation (m, 4, m-1)");
        const Representation rep = realize_quaternion_tau(a.m, a.q, pins);
        const FieldElem zeta = realization_field(a.q, a.m, pins).zeta;
        const Representation tau = quaternion_tau(a.m, zeta);
        return emit_single(a, command, rep, &tau, out);
    }
    if (a.dihedral) {
        if (a.n != 2 || a.k != a.m - 1) throw InvalidArgument("--dihedral expects the presentation (m, 2, m-1)");
        return emit_single(a, command, realize_dihedral(a.m, a.q, pins), nullptr, out);
    }
    const MetacyclicGroup g = make_group(a.m, a.n, a.k);
    if (a.component == "vandermonde") {
        const Representation rep = realize_vandermonde(g, a.q, pins);
        const Representation ref = induced_rep(g, realization_field(a.q, a.m, pins).zeta);
        return emit_single(a, command, rep, &ref, out);
    }
    std::vector<u64> comps;
    if (a.component == "all") {
        for (u64 c = 0; c < g.r; ++c) comps.push_back(c);
    } else {
        try {
            comps.push_back(std::stoull(a.component));
        } catch (const std::exception&) {
            throw InvalidArgument("--component expects an index, 'all' or 'vandermonde'");
        }
    }
    std::vector<Representation> reps;
    std::vector<VerifyReport> reports;
    for (u64 c : comps) {
        const ComponentRealization r = realize_component_detailed(g, a.q, c, pins);
        const Representation ref = induced_component(g, r.zeta, r.eta, c);
        reports.push_back(verify(r.rep, &ref, {true, r.rep.degree() <= 6}));
        reps.push_back(r.rep);
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
    if (reps.size() == 1) {
        if (a.json)
            out << representation_document(command, reps[0], reports[0]).dump(2) << "\n";
        else
            print_rep(out, reps[0], reports[0]);
        return ok ? kExitOk : kExitNotRealizable;
    }
    std::vector<Matrix> as, bs;
    for (const auto& r : reps) {
        as.push_back(r.mat_a);
        bs.push_back(r.mat_b);
    }
    Representation sum{g, reps[0].ctx, block_diagonal(as), block_diagonal(bs), {}};
    sum.choices.emplace_back("components", std::to_string(reps.size()));
    const VerifyReport sum_report = verify(sum);
    ok &= sum_report.ok();
    if (a.json) {
        Json doc = representation_document(command, sum, sum_report);
        Json arr = Json::array();
        for (std::size_t i = 0; i < reps.size(); ++i) arr.push_back(representation_document(command, reps[i], reports[i]));
        doc["components"] = arr;
        out << doc.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < reps.size(); ++i) {
            out << "== component " << comps[i] << " ==\n";
            print_rep(out, reps[i], reports[i]);
        }
        out << "== direct sum ==\n";
        print_rep(out, sum, sum_report);
    }
    return ok ? kExitOk : kExitNotRealizable;
}

int cmd_decompose(const Args& a, const std::string& command, std::ostream& out) {
    const MetacyclicGroup g = make_group(a.m, a.n, a.k);
    require_prime_power(a.q);
    if (std::gcd(a.q, a.m) != 1) throw NotCoprime("gcd(q, m) != 1");
    const FieldCtx L = cyclotomic_field(a.q, std::lcm(g.m, g.r));
    const FieldElem zeta = a.pin_zeta.empty() ? primitive_roots_in(L, g.m).front()
                                              : FieldElem::from_coeffs(L, parse_coefficients(a.pin_zeta));
    const FieldElem eta = a.pin_eta.empty() ? primitive_roots_in(L, g.r).front()
                                            : FieldElem::from_coeffs(L, parse_coefficients(a.pin_eta));
    const Representation rho = induced_rep(g, zeta);
    const Decomposition d = decompose(rho, eta);
    std::vector<Matrix> as, bs;
    for (const auto& c : d.components) {
        as.push_back(c.mat_a);
        bs.push_back(c.mat_b);
    }
    const bool round_trip =
        conjugate(d.basis, rho.mat_a) == block_diagonal(as) && conjugate(d.basis, rho.mat_b) == block_diagonal(bs);
    if (a.json) {
        Json doc = representation_document(command, rho, verify(rho));
        doc["basis"] = matrix_to_json(d.basis);
        doc["eta"] = element_to_json(eta);
        doc["round_trip"] = round_trip;
        Json arr = Json::array();
        for (const auto& c : d.components) arr.push_back(representation_document(command, c, verify(c)));
        doc["components"] = arr;
        out << doc.dump(2) << "\n";
    } else {
        out << "induced representation over " << L.describe() << ", zeta = " << zeta.to_string()
            << ", eta = " << eta.to_string() << "\n";
        out << "a ->\n" << format_matrix(rho.mat_a) << "b ->\n" << format_matrix(rho.mat_b);
        out << "basis (columns v_ij) ->\n" << format_matrix(d.basis);
        for (std::size_t i = 0; i < d.components.size(); ++i) {
            out << "== component " << i << ": charpoly(b) = " << char_poly(d.components[i].mat_b).to_string() << "\n";
            out << "a ->\n" << format_matrix(d.components[i].mat_a) << "b ->\n" << format_matrix(d.components[i].mat_b);
        }
        out << "basis conjugation reassembles the induced representation: " << (round_trip ? "yes" : "NO") << "\n";
    }
    return round_trip ? kExitOk : kExitNotRealizable;
}

int cmd_reciprocity(const Args& a, std::ostream& out) {
    if (a.sweep > 0) {
        u64 pairs = 0, bad = 0;
        Json failures = Json::array();
        for (u64 p = 3; p < a.sweep; ++p) {
            if (!is_prime(p)) continue;
            for (u64 s = 3; s < a.sweep; ++s) {
                if (s == p || !is_prime(s)) continue;
                const ReciprocityReport r = qr_via_representation(p, s);
                ++pairs;
                if (!r.consistent || !r.product_formula) {
                    ++bad;
                    failures.push_back({p, s});
                }
            }
        }
        if (a.json)
            out << Json{{"bound", a.sweep}, {"pairs", pairs}, {"inconsistencies", bad}, {"failures", failures}}.dump(2)
                << "\n";
        else
            out << "pairs checked: " << pairs << "\ninconsistencies: " << bad << "\n";
        return bad == 0 ? kExitOk : kExitNotRealizable;
    }
    if (a.pair.size() != 2) throw InvalidArgument("reciprocity expects p s or --sweep B");
    const ReciprocityReport r = qr_via_representation(a.pair[0], a.pair[1]);
    if (a.json) {
        out << Json{{"p", r.p},
                    {"s", r.s},
                    {"p_star", p_star(r.p)},
                    {"legendre_s_over_p", r.legendre_s_over_p},
                    {"legendre_pstar_over_s", r.legendre_pstar_over_s},
                    {"realizable", r.realizable},
                    {"consistent", r.consistent},
                    {"product_formula", r.product_formula}}
                   .dump(2)
            << "\n";
    } else {
        out << "G(" << r.p << ") = " << quadratic_group(r.p).to_string() << "\n";
        out << "(s/p) = (" << r.s << "/" << r.p << ") = " << r.legendre_s_over_p << "\n";
        out << "(p*/s) = (" << p_star(r.p) << "/" << r.s << ") = " << r.legendre_pstar_over_s << "\n";
        out << "realizable over F_" << r.s << ": " << (r.realizable ? "true" : "false") << "\n";
        out << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
    }
    return r.consistent ? kExitOk : kExitNotRealizable;
}

int cmd_gauss(const Args& a, std::ostream& out) {
    if (a.pair.size() != 2) throw InvalidArgument("gauss expects p q");
    require_prime_power(a.pair[1]);
    const GaussSum g = gauss_sum(a.pair[0], a.pair[1]);
    if (a.json)
        out << Json{{"p", a.pair[0]},
                    {"q", a.pair[1]},
                    {"field", field_to_json(g.c.ctx())},
                    {"zeta", element_to_json(g.zeta)},
                    {"c", element_to_json(g.c)},
                    {"identity_holds", g.identity_holds}}
                   .dump(2)
            << "\n";
    else
        out << "field: " << g.c.ctx().describe() << "\nzeta = " << g.zeta.to_string() << "\nc = " << g.c.to_string()
            << "\nidentity " << (a.pair[0] % 4 == 1 ? "4c^2 + 4c + 1 - p = 0" : "4c^2 + 4c + p + 1 = 0") << ": "
            << (g.identity_holds ? "holds" : "FAILS") << "\n";
    return g.identity_holds ? kExitOk : kExitNotRealizable;
}

bool dihedral_succeeds(u64 m, u64 q) {
    try {
        realize_dihedral(m, q);
        return true;
    } catch (const NotRealizable&) {
        return false;
    }
}

int cmd_sylvester(const Args& a, std::ostream& out) {
    if (a.sweep > 0) {
        u64 cases = 0, bad = 0;
        for (u64 m = 3; m <= 30; ++m)
            for (u64 q = 2; q <= a.sweep; ++q) {
                if (!is_prime_power(q) || std::gcd(q, m) != 1) continue;
                const SylvesterResult r = sylvester_check(m, q);
                ++cases;
                if (!r.matches_congruence || dihedral_succeeds(m, q) != r.in_field) ++bad;
            }
        if (a.json)
            out << Json{{"bound", a.sweep}, {"cases", cases}, {"mismatches", bad}}.dump(2) << "\n";
        else
            out << "cases checked: " << cases << "\nmismatches: " << bad << "\n";
        return bad == 0 ? kExitOk : kExitNotRealizable;
    }
    if (a.pair.size() != 2) throw InvalidArgument("sylvester expects m q or --sweep B");
    require_prime_power(a.pair[1]);
    const SylvesterResult r = sylvester_check(a.pair[0], a.pair[1]);
    const bool realized = dihedral_succeeds(a.pair[0], a.pair[1]);
    if (a.json)
        out << Json{{"m", a.pair[0]},
                    {"q", a.pair[1]},
                    {"value", element_to_json(r.value)},
                    {"in_field", r.in_field},
                    {"matches_congruence", r.matches_congruence},
                    {"dihedral_realizable", realized}}
                   .dump(2)
            << "\n";
    else
        out << "zeta + zeta^-1 = " << r.value.to_string() << " in " << r.value.ctx().describe()
            << "\nin F_q: " << (r.in_field ? "true" : "false")
            << "\nmatches q = +-1 (mod m): " << (r.matches_congruence ? "true" : "false")
            << "\ndihedral realization: " << (realized ? "exists" : "none") << "\n";
    return r.matches_congruence ? kExitOk : kExitNotRealizable;
}

int cmd_demo(const Args& a, std::ostream& out) {
    for (const auto& [name, fn] : demo_table()) {
        if (name != a.demo) continue;
        std::ostringstream text;
        Checklist checks(text, false);
        const bool ok = fn(text, checks);
        if (a.json)
            out << Json{{"demo", name}, {"passed", ok}, {"checks", checks.json()}}.dump(2) << "\n";
        else
            out << text.str() << (ok ? "demo " + name + ": all checks passed\n" : "demo " + name + ": FAILED\n");
        return ok ? kExitOk : kExitNotRealizable;
    }
    throw InvalidArgument("unknown demo '" + a.demo + "'");
}

}  // namespace

const std::vector<std::string>& demo_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : demo_table()) v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<i64> parse_coefficients(const std::string& text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isspace(ch) || ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == '*') continue;
        // UTF-8 zeta (U+03B6) is 0xCE 0xB6
        if (ch == 0xCE && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB6) {
            s += 'x';
            ++i;
            continue;
        }
        s += static_cast<char>(ch);
    }
    for (const std::string word : {"zeta", "z"}) {
        for (std::size_t pos; (pos = s.find(word)) != std::string::npos;) s.replace(pos, word.size(), "x");
    }
    if (s.empty()) throw InvalidArgument("empty coefficient list");

    std::vector<i64> out;
    if (s.find('x') == std::string::npos) {
        std::stringstream ss(s);
        for (std::string item; std::getline(ss, item, ',');) {
            std::size_t used = 0;
            const i64 v = std::stoll(item, &used);
            if (used != item.size()) throw InvalidArgument("bad coefficient '" + item + "'");
            out.push_back(v);
        }
        return out;
    }
    static const std::regex term(R"(([+-]?)(\d*)(x(\^(\d+))?)?)");
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::smatch mt;
        const std::string rest = s.substr(pos);
        if (!std::regex_search(rest, mt, term, std::regex_constants::match_continuous) || mt.length(0) == 0)
            throw InvalidArgument("cannot parse '" + text + "'");
        if (mt[2].length() == 0 && mt[3].length() == 0) throw InvalidArgument("cannot parse '" + text + "'");
        i64 coef = mt[2].length() ? std::stoll(mt[2].str()) : 1;
        if (mt[1].str() == "-") coef = -coef;
        const std::size_t deg = mt[3].length() == 0 ? 0 : (mt[5].length() ? std::stoull(mt[5].str()) : 1);
        if (out.size() <= deg) out.resize(deg + 1, 0);
        out[deg] += coef;
        pos += static_cast<std::size_t>(mt.length(0));
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Realizing representations of metacyclic groups over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_flag("--json", a.json, "Emit a single JSON document");

    auto add_mnkq = [&](CLI::App* sub) {
        sub->add_option("m", a.m, "order of a")->required();
        sub->add_option("n", a.n, "order of b")->required();
        sub->add_option("k", a.k, "b^-1 a b = a^k")->required();
        sub->add_option("q", a.q, "prime power")->required();
    };
    auto* check = app.add_subcommand("check", "Realizability predicates for (m, n, k) over F_q");
    add_mnkq(check);
    auto* realize = app.add_subcommand("realize", "Explicit matrices over F_q");
    add_mnkq(realize);
    realize->add_option("--component", a.component, "component index, 'all' or 'vandermonde'");
    realize->add_flag("--quaternion", a.quaternion, "quaternion component tau, presentation (m, 4, m-1)");
    realize->add_flag("--dihedral", a.dihedral, "dihedral realization, presentation (m, 2, m-1)");
    for (auto* sub : {realize, app.add_subcommand("decompose", "Split the induced representation into components")}) {
        if (sub != realize) add_mnkq(sub);
        sub->add_option("--pin-z", a.pin_z, "z1 coefficients, e.g. \"3+2ζ\"");
        sub->add_option("--pin-eta", a.pin_eta, "eta as a coefficient vector");
        sub->add_option("--pin-zeta", a.pin_zeta, "zeta as a coefficient vector");
    }
    auto* recip = app.add_subcommand("reciprocity", "Quadratic reciprocity through G(p)");
    recip->add_option("primes", a.pair, "p s")->expected(0, 2);
    recip->add_option("--sweep", a.sweep, "check all odd prime pairs below B");
    auto* gauss = app.add_subcommand("gauss", "Gauss sum identity in F_q(zeta_p)");
    gauss->add_option("args", a.pair, "p q")->expected(2);
    auto* sylv = app.add_subcommand("sylvester", "zeta + zeta^-1 in F_q iff q = +-1 (mod m)");
    sylv->add_option("args", a.pair, "m q")->expected(0, 2);
    sylv->add_option("--sweep", a.sweep, "check 3 <= m <= 30 and prime powers q <= B");
    auto* demo = app.add_subcommand("demo", "Rerun a worked example with golden checks");
    demo->add_option("name", a.demo, "q12, ex41, ex48, sylvester or gauss")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    const std::string command = echo(argc, argv);
    try {
        if (*check) return cmd_check(a, out);
        if (*realize) return cmd_realize(a, command, out);
        if (app.got_subcommand("decompose")) return cmd_decompose(a, command, out);
        if (*recip) return cmd_reciprocity(a, out);
        if (*gauss) return cmd_gauss(a, out);
        if (*sylv) return cmd_sylvester(a, out);
        if (*demo) return cmd_demo(a, out);
    } catch (const NotRealizable& e) {
        err << "not realizable: " << e.what() << "\n";
        return kExitNotRealizable;
    } catch (const NoRootOfUnity& e) {
        err << "not realizable: " << e.what() << "\n";
        return kExitNotRealizable;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace fqrep::cli
