#include "fqrep/reciprocity.hpp"

#include <numeric>

#include "fqrep/errors.hpp"
#include "fqrep/realize.hpp"

namespace fqrep {

namespace {

void require_odd_prime(u64 p) {
    if (p < 3 || !is_prime(p)) throw NotPrime(std::to_string(p) + " is not an odd prime");
}

}  // namespace

int legendre(i64 a, u64 p) {
    require_odd_prime(p);
    const u64 r = pow_mod(mod_floor(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

i64 p_star(u64 p) {
    require_odd_prime(p);
    return p % 4 == 1 ? static_cast<i64>(p) : -static_cast<i64>(p);
}

MetacyclicGroup quadratic_group(u64 p) {
    require_odd_prime(p);
    const u64 g = smallest_primitive_root(p);
    return make_group(p, (p - 1) / 2, mul_mod(g, g, p));
}

ReciprocityReport qr_via_representation(u64 p, u64 s) {
    require_odd_prime(p);
    require_odd_prime(s);
    if (p == s) throw EqualPrimes("p and s must be distinct");
    ReciprocityReport rep;
    rep.p = p;
    rep.s = s;
    rep.realizable = is_realizable(quadratic_group(p), s);
    rep.legendre_s_over_p = legendre(static_cast<i64>(s), p);
    rep.legendre_pstar_over_s = legendre(p_star(p), s);
    rep.consistent = (rep.legendre_s_over_p == 1) == rep.realizable && (rep.legendre_pstar_over_s == 1) == rep.realizable;
    const int sign = ((p - 1) / 2) % 2 == 1 && ((s - 1) / 2) % 2 == 1 ? -1 : 1;
    rep.product_formula = rep.legendre_s_over_p * legendre(static_cast<i64>(p), s) == sign;
    return rep;
}

GaussSum gauss_sum(u64 p, u64 q) {
    require_odd_prime(p);
    if (std::gcd(p, q) != 1) throw NotCoprime("gcd(p, q) != 1");
    return gauss_sum(p, realization_field(q, p).zeta);
}

GaussSum gauss_sum(u64 p, const FieldElem& zeta) {
    require_odd_prime(p);
    if (!has_order_exactly(zeta, p)) throw InvalidArgument("zeta must have order p");
    const FieldCtx& L = zeta.ctx();
    GaussSum out{zeta, FieldElem::zero(L), false};
    for (u64 x = 1; x < p; ++x)
        if (legendre(static_cast<i64>(x), p) == 1) out.c += zeta.pow(x);
    const FieldElem four = FieldElem::from_int(L, 4);
    const FieldElem lhs = four * out.c * out.c + four * out.c;
    // 4c^2 + 4c + (1 - p*) = 0 covers both residue classes of p mod 4
    out.identity_holds = (lhs + FieldElem::from_int(L, 1 - p_star(p))).is_zero();
    return out;
}

SylvesterResult sylvester_check(u64 m, u64 q) {
    if (m < 3) throw InvalidArgument("sylvester_check needs m >= 3");
    const auto [L, zeta] = realization_field(q, m);
    SylvesterResult out;
    out.value = zeta + zeta.inv();
    out.in_field = is_fixed_by(out.value, L.subfield_degree());
    const bool congruent = q % m == 1 || q % m == m - 1;
    out.matches_congruence = out.in_field == congruent;
    return out;
}

}  // namespace fqrep
