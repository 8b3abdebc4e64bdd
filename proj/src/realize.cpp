#include "fqrep/realize.hpp"

#include <algorithm>
#include <numeric>

#include "fqrep/errors.hpp"

namespace fqrep {

namespace {

void require_coprime(u64 q, u64 m) {
    if (std::gcd(q, m) != 1) throw NotCoprime("gcd(q, m) = gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
}

FieldElem from_pin(const FieldCtx& L, const std::vector<i64>& coeffs) {
    return FieldElem::from_coeffs(L, std::span<const i64>(coeffs));
}

// Writes `block` at block position (row, col), all blocks the same size.
void put_block(Matrix& target, std::size_t row, std::size_t col, const Matrix& block) {
    const std::size_t d = block.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) target(row * d + i, col * d + j) = block(i, j);
}

void require_over_subfield(const Representation& rep) {
    if (!entries_in_subfield(rep.mat_a, rep.subfield_e()) || !entries_in_subfield(rep.mat_b, rep.subfield_e()))
        throw Error("construction produced entries outside F_q");
    if (!check_relations(rep).ok()) throw Error("construction violates the group relations");
}

}  // namespace

std::optional<u64> realizability_witness(const MetacyclicGroup& g, u64 q) {
    require_coprime(q, g.m);
    if (g.m == 1) return 0;
    return discrete_log_small(g.k, q % g.m, g.m);
}

bool is_realizable(const MetacyclicGroup& g, u64 q) { return realizability_witness(g, q).has_value(); }

bool is_completely_realizable(const MetacyclicGroup& g, u64 q) {
    return is_realizable(g, q) && q % g.r == 1 % g.r;
}

bool frobenius_permutes(const FieldElem& zeta, u64 k, u64 n, u64 q) {
    std::vector<FieldElem> orbit;
    FieldElem x = zeta;
    for (u64 i = 0; i < n; ++i, x = x.pow(k)) orbit.push_back(x);
    for (const auto& y : orbit) {
        const FieldElem image = frobenius_by_order(y, q);
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) return false;
    }
    return true;
}

RootOfUnity realization_field(u64 q, u64 m, const Pins& pins) {
    require_coprime(q, m);
    FieldCtx L = cyclotomic_field(q, m);
    if (pins.zeta) {
        FieldElem z = from_pin(L, *pins.zeta);
        if (!has_order_exactly(z, m))
            throw InvalidArgument("pinned zeta " + z.to_string() + " is not a primitive " + std::to_string(m) +
                                  "-th root of unity in " + L.describe());
        return {L, z};
    }
    return {L, primitive_roots_in(L, m).front()};
}

FieldElem subfield_root_of_unity(const FieldCtx& L, u64 r, const std::optional<std::vector<i64>>& pin) {
    const int e = L.subfield_degree();
    if (pin) {
        FieldElem eta = from_pin(L, *pin);
        if (!has_order_exactly(eta, r) || !is_fixed_by(eta, e))
            throw InvalidArgument("pinned eta " + eta.to_string() + " is not a primitive " + std::to_string(r) +
                                  "-th root of unity in F_q");
        return eta;
    }
    const u64 q = L.subfield_order();
    if ((q - 1) % r != 0)
        throw NoRootOfUnity("F_" + std::to_string(q) + " has no primitive " + std::to_string(r) +
                            "-th root of unity (q != 1 mod r)");
    for (const auto& eta : primitive_roots_in(L, r))
        if (is_fixed_by(eta, e)) return eta;
    throw NoRootOfUnity("no primitive root of unity in the subfield");  // unreachable
}

// ------------------------------------------------------------- Vandermonde

Representation realize_vandermonde(const MetacyclicGroup& g, u64 q, const Pins& pins) {
    if (g.t != g.n) throw InvalidArgument("realize_vandermonde needs t = n (irreducible induced representation)");
    auto [L, zeta] = realization_field(q, g.m, pins);
    const u64 m = g.m, n = g.n;

    // Necessary condition: the characteristic polynomial of a is over F_q.
    orbit_poly(zeta, g.k, g.t);

    const u64 v = ord_mod(q % m, m);
    const u64 u = n / v;
    const u64 ku = pow_mod(g.k, u, m);
    u64 alpha = 1;
    while (alpha <= v && pow_mod(ku, alpha, m) != q % m) ++alpha;
    if (alpha > v) throw NotRealizable("q mod m is not in <k>");
    alpha %= v;
    const u64 alpha_inv = v == 1 ? 0 : inv_mod(alpha, v);

    // Realize on H = <a, c>, c = b^{u alpha}, where c^-1 a c = a^q puts the Frobenius cycle in reach.
    std::vector<FieldElem> points;
    FieldElem p = zeta;
    for (u64 i = 0; i < v; ++i, p = frobenius_by_order(p, q)) points.push_back(p);
    Poly fh = Poly::constant(FieldElem::one(L));
    for (const auto& x : points) fh = fh * Poly(L, {-x, FieldElem::one(L)});
    const Matrix a_h = companion_matrix(fh);
    Matrix cyc(L, v);
    for (std::size_t i = 1; i < v; ++i) cyc(i, i - 1) = FieldElem::one(L);
    cyc(0, v - 1) = FieldElem::one(L);
    const Matrix c_h = vandermonde_inverse(points) * cyc * vandermonde(points);
    const Matrix d_h = c_h.pow(alpha_inv);

    // Induce from H (coset representatives b^0, ..., b^{u-1}) to G.
    Matrix mat_a(L, n), mat_b(L, n);
    u64 kl = 1 % m;
    for (u64 l = 0; l < u; ++l) {
        put_block(mat_a, l, l, a_h.pow(kl));
        kl = mul_mod(kl, g.k, m);
        if (l + 1 < u) put_block(mat_b, l + 1, l, Matrix::identity(L, v));
    }
    put_block(mat_b, 0, u - 1, d_h);

    Representation rep{g, L, mat_a, mat_b, {}};
    rep.choices.emplace_back("zeta", zeta.to_string());
    rep.choices.emplace_back("j", std::to_string(*realizability_witness(g, q)));
    rep.choices.emplace_back("generator_exponent", std::to_string(u * alpha % n));
    require_over_subfield(rep);
    return rep;
}

// ------------------------------------------------------------- components

ComponentRealization realize_component_detailed(const MetacyclicGroup& g, u64 q, u64 c, const Pins& pins) {
    if (c >= g.r) throw InvalidArgument("component index must be below r = " + std::to_string(g.r));
    auto [L, zeta] = realization_field(q, g.m, pins);
    if (g.r % L.characteristic() == 0)
        throw RSNotCoprime("characteristic " + std::to_string(L.characteristic()) + " divides r = " + std::to_string(g.r));
    const u64 m = g.m, t = g.t;

    ComponentRealization out;
    out.zeta = zeta;
    out.f = orbit_poly(zeta, g.k, t);
    out.eta = subfield_root_of_unity(L, g.r, pins.eta);
    const FieldElem target = out.eta.pow_signed(-static_cast<i64>(c));
    std::optional<Poly> z1;
    if (pins.z1) z1 = Poly::from_ints(L, std::span<const i64>(*pins.z1));
    out.solution = crt_norm_solution(out.f, target, g.k, t, m, zeta, z1);

    const Matrix mat_a = companion_matrix(out.f);
    Matrix mat_b(L, t);
    const u64 step = pow_mod(g.k, t - 1, m);
    for (u64 i = 0; i < t; ++i) {
        const Poly col = mulmod(out.solution.z, Poly::monomial(FieldElem::one(L), mul_mod(i, step, m)), out.f);
        for (u64 row = 0; row < t; ++row) mat_b(row, i) = col.coeff(row);
    }

    out.rep = Representation{g, L, mat_a, mat_b, {}};
    out.rep.choices.emplace_back("zeta", zeta.to_string());
    out.rep.choices.emplace_back("eta", out.eta.to_string());
    out.rep.choices.emplace_back("component", std::to_string(c));
    out.rep.choices.emplace_back("z", out.solution.z_elem.to_string());
    out.rep.choices.emplace_back("z(x)", out.solution.z.to_string());
    require_over_subfield(out.rep);
    return out;
}

Representation realize_component(const MetacyclicGroup& g, u64 q, u64 c, const Pins& pins) {
    return realize_component_detailed(g, q, c, pins).rep;
}

// --------------------------------------------------- dihedral and quaternion

Representation realize_dihedral(u64 m, u64 q, const Pins& pins) {
    if (m < 3) throw InvalidArgument("realize_dihedral needs m >= 3");
    const MetacyclicGroup g = make_group(m, 2, m - 1);
    require_coprime(q, m);
    const u64 qm = q % m;
    if (qm != 1 && qm != m - 1)
        throw NotRealizable(std::to_string(q) + " is not congruent to +-1 mod " + std::to_string(m));
    auto [L, zeta] = realization_field(q, m, pins);
    const FieldElem one = FieldElem::one(L), zero = FieldElem::zero(L);
    Representation rep{g, L, Matrix(L, 2), Matrix(L, 2), {}};
    rep.choices.emplace_back("zeta", zeta.to_string());
    if (qm == 1) {
        rep.mat_a = Matrix::diagonal({zeta, zeta.inv()});
        rep.mat_b(0, 1) = one;
        rep.mat_b(1, 0) = one;
    } else {
        const FieldElem t = zeta + zeta.inv();
        rep.mat_a(0, 1) = -one;
        rep.mat_a(1, 0) = one;
        rep.mat_a(1, 1) = t;
        rep.mat_b(0, 0) = one;
        rep.mat_b(0, 1) = t;
        rep.mat_b(1, 1) = -one;
        rep.choices.emplace_back("t", t.to_string());
    }
    require_over_subfield(rep);
    return rep;
}

Representation quaternion_tau(u64 m, const FieldElem& zeta) {
    const MetacyclicGroup g = make_group(m, 4, m - 1);
    const FieldCtx& L = zeta.ctx();
    Representation rep{g, L, Matrix::diagonal({zeta, zeta.inv()}), Matrix(L, 2), {}};
    rep.mat_b(0, 1) = -FieldElem::one(L);
    rep.mat_b(1, 0) = FieldElem::one(L);
    rep.choices.emplace_back("zeta", zeta.to_string());
    return rep;
}

Representation realize_quaternion_tau(u64 m, u64 q, const Pins& pins) {
    if (m < 3 || m % 2 == 0) throw InvalidArgument("realize_quaternion_tau needs odd m >= 3");
    if (q % 2 == 0) throw InvalidArgument("realize_quaternion_tau needs odd q");
    auto [L, zeta] = realization_field(q, m, pins);
    Representation tau = quaternion_tau(m, zeta);
    const int e = L.subfield_degree();
    if (is_fixed_by(zeta, e)) return tau;

    const FieldElem theta = zeta + zeta.inv();
    if (!is_fixed_by(theta, e))
        throw NotRealizable("theta = zeta + zeta^-1 is not in F_" + std::to_string(q) + " (q != +-1 mod m)");
    const FieldElem target = theta * theta - FieldElem::from_int(L, 4);
    const SubfieldView F = subfield_view(L);
    std::optional<std::pair<FieldElem, FieldElem>> ab;
    for (u64 i = 0; i < F.order() && !ab; ++i) {
        const FieldElem alpha = F.element_at(i);
        const FieldElem rest = target - alpha * alpha;
        for (u64 j = 1; j < F.order(); ++j) {
            const FieldElem beta = F.element_at(j);
            if (beta * beta == rest) {
                ab.emplace(alpha, beta);
                break;
            }
        }
    }
    if (!ab) throw Error("no alpha, beta with alpha^2 + beta^2 = theta^2 - 4");  // every element of F_q is a sum of two squares
    const auto& [alpha, beta] = *ab;
    const FieldElem half = FieldElem::from_int(L, 2).inv();
    Representation rep = tau;
    rep.mat_a = Matrix(L, 2);
    rep.mat_a(0, 0) = half * (theta + alpha);
    rep.mat_a(0, 1) = half * beta;
    rep.mat_a(1, 0) = half * beta;
    rep.mat_a(1, 1) = half * (theta - alpha);
    rep.choices.emplace_back("theta", theta.to_string());
    rep.choices.emplace_back("alpha", alpha.to_string());
    rep.choices.emplace_back("beta", beta.to_string());
    require_over_subfield(rep);
    return rep;
}

}  // namespace fqrep
