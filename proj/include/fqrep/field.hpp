/**
 * @file field.hpp
 * @brief Finite fields F_{s^D} as absolute extensions of their prime field.
 *
 * Every field is flattened: F_{s^D} = F_s[x]/(M) with M monic irreducible of
 * degree D. A context may designate a subfield F_q (q = s^e, e | D) as the
 * fixed field of x -> x^{s^e}; "entries lie in F_q" always means fixedness
 * under that Frobenius power.
 *
 * @code{.cpp}
 * auto f19 = fqrep::make_prime_field(19);
 * auto [L, zeta] = fqrep::primitive_root_of_unity(f19, 5);   // F_361, zeta of order 5
 * auto z = fqrep::FieldElem::from_int(L, 3) + fqrep::FieldElem::from_int(L, 2) * zeta;
 * fqrep::norm(z);                                             // 18
 * @endcode
 */
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fqrep/bigint.hpp"
#include "fqrep/numtheory.hpp"
#include "fqrep/simd/kernels.hpp"
#include "fqrep/zp_poly.hpp"

namespace fqrep {

namespace detail {
struct FieldCore;
}

/// Handle to an immutable field description. Cheap to copy.
class FieldCtx {
public:
    FieldCtx() = default;

    bool valid() const { return core_ != nullptr; }
    u32 characteristic() const;
    int degree() const;
    int subfield_degree() const { return subfield_e_; }

    /// Monic modulus (constant term first). Empty for prime fields.
    zp::Coeffs modulus() const;

    BigUInt element_count() const;
    /// q = s^e of the designated subfield; throws if it overflows 64 bits.
    u64 subfield_order() const;

    /// Same field with a different designated subfield. Throws unless e | D.
    FieldCtx with_subfield(int e) const;

    /// True when elements of the two contexts can be combined.
    bool same_field(const FieldCtx& other) const;

    std::string describe() const;

    const detail::FieldCore& core() const { return *core_; }

private:
    friend FieldCtx make_field_from_core(std::shared_ptr<const detail::FieldCore>, int);
    std::shared_ptr<const detail::FieldCore> core_;
    int subfield_e_ = 1;
};

FieldCtx make_prime_field(u64 s);
/// Degree-d extension of the prime field `base` with the lexicographically
/// smallest monic irreducible modulus. d = 1 returns the base itself.
FieldCtx make_extension(const FieldCtx& base, int d, int subfield_degree = 1);
FieldCtx make_field(u64 s, int degree, int subfield_degree = 1);
/// Field with a caller-supplied modulus; throws InvalidArgument if it is not
/// monic irreducible.
FieldCtx make_field_with_modulus(u64 s, const zp::Coeffs& modulus, int subfield_degree = 1);

class FieldElem {
public:
    FieldElem() = default;

    static FieldElem zero(const FieldCtx& ctx);
    static FieldElem one(const FieldCtx& ctx);
    static FieldElem from_int(const FieldCtx& ctx, i64 v);
    /// Coefficients in the power basis, constant term first; shorter input is zero-padded.
    static FieldElem from_coeffs(const FieldCtx& ctx, std::span<const i64> coeffs);
    static FieldElem from_residues(const FieldCtx& ctx, zp::Coeffs residues);
    /// The class of x in F_s[x]/(M); the unique element for prime fields is 0.
    static FieldElem generator(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return ctx_; }
    std::span<const u32> coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool in_prime_field() const;
    /// Value of a prime-field element as an integer in [0, s).
    u32 prime_value() const;

    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    FieldElem operator-() const;

    FieldElem inv() const;
    FieldElem pow(u64 e) const;
    FieldElem pow(const BigUInt& e) const;
    /// Signed exponent; negative powers invert first.
    FieldElem pow_signed(i64 e) const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);

    /// Bare integer for prime-field values, otherwise "[c0,c1,...]".
    std::string to_string() const;

private:
    FieldElem(FieldCtx ctx, zp::Coeffs c) : ctx_(std::move(ctx)), c_(std::move(c)) {}
    void check_same(const FieldElem& o) const;

    FieldCtx ctx_;
    zp::Coeffs c_;  // always length D
};

/// Lexicographic order on coefficient vectors, constant term most significant.
bool lex_less(const FieldElem& a, const FieldElem& b);

/// x^{s^e}.
FieldElem frobenius(const FieldElem& x, u64 e);
/// x^q for q a power of the characteristic; throws InvalidArgument otherwise.
FieldElem frobenius_by_order(const FieldElem& x, u64 q);
bool is_fixed_by(const FieldElem& x, int e);

/// The designated subfield F_q as an F_s-span inside its ambient field.
struct SubfieldView {
    FieldCtx ctx;
    int e = 1;
    std::vector<FieldElem> basis;

    u64 order() const;
    bool contains(const FieldElem& x) const { return is_fixed_by(x, e); }
    /// sum_j coords[j] * basis[j]
    FieldElem element(std::span<const u32> coords) const;
    /// The i-th element in lexicographic order of its basis coordinates.
    FieldElem element_at(u64 index) const;
    FieldElem random(std::mt19937_64& rng) const;
};

SubfieldView subfield_view(const FieldCtx& ctx);
SubfieldView subfield_view(const FieldCtx& ctx, int e);

/// True iff x^m = 1 and x^{m/p} != 1 for every prime p | m.
bool has_order_exactly(const FieldElem& x, u64 m);

/// All primitive m-th roots of unity in ctx, lexicographically sorted.
/// Throws NoRootOfUnity when m does not divide |ctx| - 1.
std::vector<FieldElem> primitive_roots_in(const FieldCtx& ctx, u64 m);

struct RootOfUnity {
    FieldCtx field;
    FieldElem zeta;
};

/// Smallest field F_q(mu_m) over the full field `base` = F_q, with F_q
/// designated as its subfield, and its lexicographically smallest primitive
/// m-th root of unity.
RootOfUnity primitive_root_of_unity(const FieldCtx& base, u64 m);

/// Ambient field F_q(mu_m) for q = s^e given as an integer.
FieldCtx cyclotomic_field(u64 q, u64 m);

/// N_{L/F}(z) for F the designated subfield of z's context: the product of
/// the [L:F] Frobenius conjugates.
FieldElem norm(const FieldElem& z);
FieldElem norm(const FieldElem& z, int subfield_e);

/// First z (lexicographic enumeration of L^*) with N_{L/F}(z) = eta.
FieldElem norm_preimage(const FieldCtx& L, const FieldElem& eta);

/// Solves x = sum_i c_i g^i with c_i in the designated subfield, for a
/// generator g of the ambient field over that subfield. nullopt if g does
/// not generate.
std::optional<std::vector<FieldElem>> coordinates_in_powers(const FieldElem& x, const FieldElem& g);

namespace detail {

struct FieldCore {
    u32 s = 2;
    int D = 1;
    simd::Modulus mod;
    zp::Coeffs modulus;                // length D + 1, monic; {0, 1} for D = 1
    std::vector<zp::Coeffs> reduce;    // x^{D+i} mod M, i in [0, D-1), each length D
    std::vector<zp::Coeffs> frob_cols; // (x^j)^s mod M, j in [0, D), each length D
};

std::shared_ptr<const FieldCore> make_core(u32 s, const zp::Coeffs& modulus);

/// Dense F_s linear algebra used for subfield bases and coordinate solves.
/// Rows are residue vectors; returns a basis of {v : M v = 0}.
std::vector<zp::Coeffs> nullspace_mod_p(std::vector<zp::Coeffs> rows, std::size_t cols, const simd::Modulus& mod);
/// Solves A x = b over F_s (A given by columns); nullopt if inconsistent.
std::optional<zp::Coeffs> solve_mod_p(const std::vector<zp::Coeffs>& cols, const zp::Coeffs& b,
                                      const simd::Modulus& mod);

}  // namespace detail

}  // namespace fqrep
