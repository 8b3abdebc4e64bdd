// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// All comparisons are exact.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fqrep/errors.hpp"
#include "fqrep/realize.hpp"
#include "fqrep/reciprocity.hpp"

using namespace fqrep;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

bool is_prime_power(u64 q) { return as_prime_power(q).has_value(); }

bool in_powers_of(u64 q, u64 k, u64 m) {
    const auto powers = cyclic_subgroup(k, m);
    return std::find(powers.begin(), powers.end(), q % m) != powers.end();
}

std::string key(std::initializer_list<u64> xs) {
    std::string s = "(";
    for (u64 x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
}

// Character-equal pairs of dimension <= 4 collected by criteria 3 and 4 for
// certification in criterion 9.
struct Claim {
    Representation rep, ref;
    std::string label;
};
std::vector<Claim> g_claims;

// Orbit polynomials met in criteria 3 and 4, with their k, for criterion 8.
struct OrbitCase {
    Poly f;
    u64 k;
};
std::vector<OrbitCase> g_orbits;

// (m, n, k, q) of decomposable presentations met in criterion 4.
std::vector<std::array<u64, 4>> g_decomposable;

void claim(const Representation& rep, const Representation& ref, const std::string& label) {
    if (rep.degree() <= 4) g_claims.push_back({rep, ref, label});
}

// ------------------------------------------------------------------ 1
void golden_5_8_2(Outcome& o) {
    const MetacyclicGroup g = make_group(5, 8, 2);
    Pins pins;
    pins.eta = std::vector<i64>{-1};
    pins.z1 = std::vector<i64>{3, 2};
    const ComponentRealization r = realize_component_detailed(g, 19, 1, pins);
    const FieldCtx& L = r.rep.ctx;
    o.expect(r.f == Poly::from_ints(L, {1, 1, 1, 1, 1}), "f");
    const Poly f1 = Poly::from_ints(L, {1, -4, 1}), f2 = Poly::from_ints(L, {1, 5, 1});
    o.expect(r.solution.factors == std::vector<Poly>{f2, f1}, "factors");
    o.expect(r.solution.factors[r.solution.root_factor] == f1, "zeta is a root of x^2 - 4x + 1");
    const PolyXgcd b = xgcd(f2, f1);
    o.expect(b.u == Poly::from_ints(L, {-8, 2}) && b.v == Poly::from_ints(L, {9, -2}), "Bezout cofactors");
    o.expect(r.solution.z == Poly::from_ints(L, {0, -1, 0, 4}), "z(x) = 4x^3 - x");
    o.expect(r.rep.mat_a == Matrix::from_ints(L, {{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}),
             "a-matrix");
    o.expect(r.rep.mat_b == Matrix::from_ints(L, {{0, 1, -4, -1}, {-1, 5, -4, 0}, {0, 1, -5, 4}, {4, 1, -4, 0}}),
             "b-matrix of component 1");
    Pins eta_only;
    eta_only.eta = pins.eta;
    const Representation r0 = realize_component(g, 19, 0, eta_only);
    o.expect(r0.mat_b == Matrix::from_ints(L, {{1, 0, 0, -1}, {0, 0, 1, -1}, {0, 0, 0, -1}, {0, 1, 0, -1}}),
             "b-matrix of component 0");
    o.detail << "f, factors, Bezout, z(x), both b-matrices";
}

// ------------------------------------------------------------------ 2
void golden_quaternion(Outcome& o) {
    const Representation mu = realize_quaternion_tau(3, 5);
    const FieldCtx& L = mu.ctx;
    const FieldElem zeta = realization_field(5, 3).zeta;
    o.expect(zeta + zeta.inv() == FieldElem::from_int(L, -1), "theta = -1");
    o.expect(mu.mat_a == Matrix::from_ints(L, {{0, 3}, {3, -1}}), "A~");
    o.expect(mu.mat_b == Matrix::from_ints(L, {{0, -1}, {1, 0}}), "B");
    o.expect(check_relations(mu).ok(), "relations");
    for (u64 t = 0; t < 3; ++t) {
        const Matrix at = mu.mat_a.pow(t);
        o.expect(at.trace() == zeta.pow(t) + zeta.inv().pow(t), "tr A~^" + std::to_string(t));
        for (u64 j = 1; j < 4; j += 2) o.expect((at * mu.mat_b.pow(j)).trace().is_zero(), "tr A~^t B^odd");
    }
    o.detail << "theta, A~, B, relations, traces";
}

// ------------------------------------------------------------------ 3
void sweep_vandermonde(Outcome& o) {
    u64 cases = 0, successes = 0;
    for (u64 m = 1; m <= 15; ++m)
        for (u64 k = (m == 1 ? 0 : 1); k < std::max<u64>(m, 1); ++k) {
            if (m > 1 && std::gcd(k, m) != 1) continue;
            const u64 n = m == 1 ? 1 : ord_mod(k, m);
            const MetacyclicGroup g = make_group(m, n, k);
            for (u64 q = 2; q <= 200; ++q) {
                if (!is_prime(q) || std::gcd(q, m * n) != 1) continue;
                ++cases;
                const bool expected = m == 1 || in_powers_of(q, k, m);
                const std::string label = key({m, n, k, q});
                try {
                    const Representation rep = realize_vandermonde(g, q);
                    ++successes;
                    o.expect(expected, label + " succeeded but q mod m is not in <k>");
                    o.expect(check_relations(rep).ok(), label + " relations");
                    o.expect(entries_in_subfield(rep.mat_a, rep.subfield_e()) &&
                                 entries_in_subfield(rep.mat_b, rep.subfield_e()),
                             label + " entries outside F_q");
                    const FieldElem zeta = realization_field(q, m).zeta;
                    const Representation ref = induced_rep(g, zeta);
                    o.expect(verify(rep, &ref, {false, false}).character == CharacterVerdict::Equal,
                             label + " character differs from the induced representation");
                    claim(rep, ref, label);
                    if (m > 1) g_orbits.push_back({orbit_poly(zeta, k, n), k});
                } catch (const NotRealizable&) {
                    o.expect(!expected, label + " refused although q mod m is in <k>");
                } catch (const std::exception& e) {
                    o.expect(false, label + " threw: " + e.what());
                }
            }
        }
    o.detail << cases << " cases, " << successes << " realized";
}

// ------------------------------------------------------------------ 4
void sweep_components(Outcome& o) {
    u64 cases = 0, successes = 0;
    for (u64 m = 1; m <= 12; ++m)
        for (u64 n = 1; n <= 12; ++n)
            for (u64 k = (m == 1 ? 0 : 1); k < std::max<u64>(m, 1); ++k) {
                if (m > 1 && (std::gcd(k, m) != 1 || pow_mod(k, n, m) != 1)) continue;
                const MetacyclicGroup g = make_group(m, n, k);
                for (u64 q = 2; q <= 100; ++q) {
                    if (!is_prime(q) || std::gcd(q, m * n * g.r) != 1) continue;
                    ++cases;
                    const bool expected = (m == 1 || in_powers_of(q, k, m)) && q % g.r == 1 % g.r;
                    const std::string label = key({m, n, k, q});
                    o.expect(is_completely_realizable(g, q) == expected, label + " predicate disagrees");
                    bool all_ok = true;
                    for (u64 c = 0; c < g.r; ++c) {
                        try {
                            const ComponentRealization r = realize_component_detailed(g, q, c);
                            o.expect(expected, label + " component " + std::to_string(c) + " realized unexpectedly");
                            const Representation ref = induced_component(g, r.zeta, r.eta, c);
                            const VerifyReport rpt = verify(r.rep, &ref, {false, false});
                            o.expect(rpt.relations.ok() && rpt.entries_in_subfield, label + " relations/subfield");
                            o.expect(rpt.character == CharacterVerdict::Equal, label + " character differs from rho_c");
                            claim(r.rep, ref, label + " c=" + std::to_string(c));
                            if (c == 0 && m > 1) g_orbits.push_back({r.f, k});
                        } catch (const NotRealizable&) {
                            all_ok = false;
                        } catch (const NoRootOfUnity&) {
                            all_ok = false;
                        } catch (const std::exception& e) {
                            all_ok = false;
                            o.expect(false, label + " threw: " + e.what());
                        }
                    }
                    o.expect(all_ok == expected, label + (expected ? " refused" : " realized"));
                    successes += all_ok;
                    if (g.r > 1) g_decomposable.push_back({m, n, k, q});
                }
            }
    o.detail << cases << " cases, " << successes << " completely realized";
}

// ------------------------------------------------------------------ 5
void sweep_reciprocity(Outcome& o) {
    u64 pairs = 0;
    for (u64 p = 3; p < 60; ++p)
        for (u64 s = 3; s < 60; ++s) {
            if (p == s || !is_prime(p) || !is_prime(s)) continue;
            ++pairs;
            const ReciprocityReport r = qr_via_representation(p, s);
            o.expect(r.consistent, key({p, s}) + " inconsistent");
            o.expect(r.product_formula, key({p, s}) + " product formula");
        }
    o.detail << pairs << " ordered pairs";
}

// ------------------------------------------------------------------ 6
void sweep_gauss(Outcome& o) {
    u64 cases = 0;
    for (u64 p = 3; p <= 50; ++p)
        for (u64 q = 2; q <= 50; ++q) {
            if (!is_prime(p) || !is_prime_power(q) || std::gcd(p, q) != 1) continue;
            ++cases;
            const GaussSum gs = gauss_sum(p, q);
            const FieldCtx& L = gs.c.ctx();
            const FieldElem four = FieldElem::from_int(L, 4);
            const i64 constant = p % 4 == 1 ? 1 - static_cast<i64>(p) : static_cast<i64>(p) + 1;
            o.expect((four * gs.c * gs.c + four * gs.c + FieldElem::from_int(L, constant)).is_zero(), key({p, q}));
        }
    o.detail << cases << " (p, q) pairs";
}

// ------------------------------------------------------------------ 7
void sweep_sylvester(Outcome& o) {
    u64 cases = 0;
    for (u64 m = 3; m <= 30; ++m)
        for (u64 q = 2; q <= 200; ++q) {
            if (!is_prime_power(q) || std::gcd(q, m) != 1) continue;
            ++cases;
            const bool congruent = q % m == 1 || q % m == m - 1;
            const SylvesterResult r = sylvester_check(m, q);
            o.expect(r.in_field == congruent, key({m, q}) + " membership");
            bool realized = true;
            try {
                const Representation d = realize_dihedral(m, q);
                o.expect(check_relations(d).ok(), key({m, q}) + " dihedral relations");
            } catch (const NotRealizable&) {
                realized = false;
            }
            o.expect(realized == congruent, key({m, q}) + " dihedral realizability");
        }
    o.detail << cases << " (m, q) pairs";
}

// ------------------------------------------------------------------ 8
void property_suites(Outcome& o) {
    for (const auto& [f, k] : g_orbits) o.expect((substitute_power(f, k) % f).is_zero(), "f(x) does not divide f(x^k)");

    std::mt19937_64 rng(0x23);
    const std::vector<std::tuple<u64, int, int>> shapes{{2, 6, 1}, {2, 6, 2}, {3, 4, 1}, {3, 6, 2}, {5, 3, 1},
                                                         {7, 2, 1}, {19, 2, 1}, {2, 8, 2}, {37, 3, 1}, {5, 4, 2}};
    int instances = 0;
    while (instances < 50) {
        const auto [s, D, e] = shapes[instances % shapes.size()];
        const FieldCtx L = make_field(s, D, e);
        const std::size_t n = static_cast<std::size_t>(D / e);
        std::vector<i64> c(D);
        for (auto& x : c) x = static_cast<i64>(rng() % s);
        std::vector<FieldElem> pts{FieldElem::from_coeffs(L, c)};
        while (pts.size() < n) pts.push_back(frobenius(pts.back(), e));
        bool distinct = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) distinct &= pts[i] != pts[j];
        if (!distinct) continue;
        Matrix cyc(L, n);
        for (std::size_t i = 0; i < n; ++i) cyc((i + 1) % n, i) = FieldElem::one(L);
        o.expect(entries_in_subfield(conjugate(vandermonde(pts), cyc), e), "V^-1 C V outside F_q");
        ++instances;
    }

    for (const auto& [m, n, k, q] : g_decomposable) {
        const MetacyclicGroup g = make_group(m, n, k);
        const FieldCtx L = cyclotomic_field(q, std::lcm(g.m, g.r));
        const Representation rho = induced_rep(g, primitive_roots_in(L, std::max<u64>(m, 1)).front());
        const Decomposition d = decompose(rho, primitive_roots_in(L, g.r).front());
        std::vector<Matrix> as, bs;
        for (const auto& comp : d.components) {
            as.push_back(comp.mat_a);
            bs.push_back(comp.mat_b);
        }
        o.expect(conjugate(d.basis, rho.mat_a) == block_diagonal(as) &&
                     conjugate(d.basis, rho.mat_b) == block_diagonal(bs),
                 "decompose round trip " + key({m, n, k, q}));
    }

    u64 preimages = 0;
    for (u64 q = 2; q <= 100; ++q) {
        if (!is_prime_power(q)) continue;
        const auto pp = *as_prime_power(q);
        for (int v = 1; v <= 3; ++v) {
            if (checked_pow(q, v) > 1'000'000) continue;
            const FieldCtx L = make_field(pp.prime, pp.exponent * v, pp.exponent);
            const SubfieldView F = subfield_view(L);
            for (u64 i = 1; i < F.order(); ++i) {
                const FieldElem eta = F.element_at(i);
                o.expect(norm(norm_preimage(L, eta)) == eta, "norm_preimage " + key({q, static_cast<u64>(v)}));
                ++preimages;
            }
        }
    }
    o.detail << g_orbits.size() << " orbit polynomials, " << instances << " Frobenius cycles, "
             << g_decomposable.size() << " decompositions, " << preimages << " norm preimages";
}

// ------------------------------------------------------------------ 9
u64 smallest_splitting_prime(u64 m, u64 n) {
    u64 best = 0, best_size = 0;
    for (u64 s = 2; s < 200; ++s) {
        if (!is_prime(s) || std::gcd(s, m * n) != 1) continue;
        const u64 size = checked_pow(s, static_cast<int>(m == 1 ? 1 : ord_mod(s % m, m)));
        if (best == 0 || size < best_size) best = s, best_size = size;
    }
    return best;
}

void brute_force_oracle(Outcome& o) {
    u64 presentations = 0;
    for (u64 m = 1; m <= 7; ++m)
        for (u64 n = 1; n <= 4; ++n)
            for (u64 k = (m == 1 ? 0 : 1); k < std::max<u64>(m, 1); ++k) {
                if (m > 1 && (std::gcd(k, m) != 1 || pow_mod(k, n, m) != 1)) continue;
                const MetacyclicGroup g = make_group(m, n, k);
                const u64 s = smallest_splitting_prime(m, n);
                const FieldElem zeta = realization_field(s, m).zeta;
                const bool brute = brute_force_irreducible(induced_rep(g, zeta));
                o.expect(brute == is_irreducible_induced(g) && brute == (g.t == g.n),
                         "irreducibility " + key({m, n, k}) + " over F_" + std::to_string(s));
                ++presentations;
            }
    u64 certified = 0;
    for (const Claim& c : g_claims) {
        const auto x = find_intertwiner(c.rep.mat_a, c.rep.mat_b, c.ref.mat_a, c.ref.mat_b);
        o.expect(x.has_value(), "no intertwiner for " + c.label);
        certified += x.has_value();
    }
    o.detail << presentations << " presentations brute-forced, " << certified << "/" << g_claims.size()
             << " character equalities certified";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"(5,8,2) over F_19 golden", golden_5_8_2},
        {"quaternion golden (m=3, q=5)", golden_quaternion},
        {"Vandermonde realization sweep", sweep_vandermonde},
        {"component realization sweep", sweep_components},
        {"quadratic reciprocity sweep", sweep_reciprocity},
        {"Gauss sum identity", sweep_gauss},
        {"Sylvester sweep", sweep_sylvester},
        {"property suites", property_suites},
        {"brute-force oracle equivalence", brute_force_oracle},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("uncaught: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s  %s (%s; %.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.str().c_str(), secs);
        for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
        all &= o.pass;
    }
    return all ? 0 : 1;
}
