/**
 * @file reciprocity.hpp
 * @brief Legendre symbols, quadratic reciprocity through realizability of
 *        G(p), Gauss sums and Sylvester's criterion.
 */
#pragma once

#include "fqrep/field.hpp"
#include "fqrep/group.hpp"

namespace fqrep {

/// Euler's criterion. Throws NotPrime unless p is an odd prime.
int legendre(i64 a, u64 p);

/// (-1)^{(p-1)/2} p.
i64 p_star(u64 p);

/// G(p) = <a, b | a^p = b^{(p-1)/2} = 1, b^-1 a b = a^{g^2}>, g the smallest primitive root.
MetacyclicGroup quadratic_group(u64 p);

struct ReciprocityReport {
    u64 p = 0;
    u64 s = 0;
    int legendre_s_over_p = 0;
    int legendre_pstar_over_s = 0;
    bool realizable = false;
    bool consistent = false;  ///< the three verdicts agree
    bool product_formula = false;  ///< (s/p)(p/s) = (-1)^{((p-1)/2)((s-1)/2)}
};

/// Throws NotPrime (either argument not an odd prime) or EqualPrimes.
ReciprocityReport qr_via_representation(u64 p, u64 s);

struct GaussSum {
    FieldElem zeta;
    FieldElem c;  ///< sum of zeta^x over the nonzero squares x mod p
    bool identity_holds = false;
};

/// c in F_q(zeta_p) and the check 4c^2 + 4c + 1 - p = 0 (p = 1 mod 4) or
/// 4c^2 + 4c + p + 1 = 0 (p = 3 mod 4). Optional zeta overrides the default root.
GaussSum gauss_sum(u64 p, u64 q);
GaussSum gauss_sum(u64 p, const FieldElem& zeta);

struct SylvesterResult {
    FieldElem value;  ///< zeta + zeta^-1
    bool in_field = false;
    bool matches_congruence = false;  ///< in_field iff q = +-1 (mod m)
};

SylvesterResult sylvester_check(u64 m, u64 q);

}  // namespace fqrep
