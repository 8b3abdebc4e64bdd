/**
 * @file zp_poly.hpp
 * @brief Dense polynomials over a prime field F_p stored as raw residue
 *        vectors (constant term first).
 *
 * This is the low layer under extension-field arithmetic: an element of
 * F_{p^D} is a residue vector of length D reduced modulo a monic
 * irreducible polynomial, and the modulus search itself runs here.
 * Inner loops go through the SIMD kernel table.
 */
#pragma once

#include <span>
#include <vector>

#include "fqrep/bigint.hpp"
#include "fqrep/numtheory.hpp"
#include "fqrep/simd/kernels.hpp"

namespace fqrep::zp {

using Coeffs = std::vector<u32>;
using simd::Modulus;

/// Drops trailing zeros; the zero polynomial is the empty vector.
void trim(Coeffs& a);
int degree(const Coeffs& a);  // -1 for the zero polynomial

u32 inv(u32 a, const Modulus& mod);

Coeffs add(const Coeffs& a, const Coeffs& b, const Modulus& mod);
Coeffs sub(const Coeffs& a, const Coeffs& b, const Modulus& mod);
Coeffs mul(const Coeffs& a, const Coeffs& b, const Modulus& mod);
Coeffs scale(Coeffs a, u32 c, const Modulus& mod);

/// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b, const Modulus& mod);
Coeffs rem(const Coeffs& a, const Coeffs& b, const Modulus& mod);

Coeffs make_monic(Coeffs a, const Modulus& mod);
Coeffs gcd(Coeffs a, Coeffs b, const Modulus& mod);

struct Xgcd {
    Coeffs g, u, v;  // u*a + v*b = g, g monic
};
Xgcd xgcd(const Coeffs& a, const Coeffs& b, const Modulus& mod);

Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, const Modulus& mod);
Coeffs powmod(const Coeffs& base, u64 exp, const Coeffs& f, const Modulus& mod);
Coeffs powmod(const Coeffs& base, const BigUInt& exp, const Coeffs& f, const Modulus& mod);

/// Ben-Or irreducibility test for a monic f of degree >= 1.
bool is_irreducible(const Coeffs& f, const Modulus& mod);

/// Monic irreducible of the given degree that is smallest when the
/// coefficient vector (c0, c1, ..., c_{d-1}) is compared lexicographically.
Coeffs smallest_irreducible(u32 p, int degree);

/// Lexicographic comparison of equal-length vectors, first entry most significant.
int compare_lex(std::span<const u32> a, std::span<const u32> b);

}  // namespace fqrep::zp
