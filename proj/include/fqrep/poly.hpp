/**
 * @file poly.hpp
 * @brief Dense univariate polynomials with coefficients in a finite field.
 *
 * Coefficients live in a FieldCtx and are stored constant term first with no
 * trailing zeros. Factorization and irreducibility are relative to the
 * context's designated subfield F_q; the input must have coefficients there.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqrep/field.hpp"

namespace fqrep {

class Poly {
public:
    Poly() = default;
    explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtx ctx, std::vector<FieldElem> coeffs);

    static Poly constant(const FieldElem& c);
    /// c * x^d
    static Poly monomial(const FieldElem& c, std::size_t d);
    static Poly x(const FieldCtx& ctx) { return monomial(FieldElem::one(ctx), 1); }
    /// Integer coefficients, constant term first.
    static Poly from_ints(const FieldCtx& ctx, std::initializer_list<i64> coeffs);
    static Poly from_ints(const FieldCtx& ctx, std::span<const i64> coeffs);

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    /// Coefficient of x^i, zero beyond the degree.
    FieldElem coeff(std::size_t i) const;
    FieldElem leading() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldElem& c, const Poly& p);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b);

    FieldElem eval(const FieldElem& x) const;
    Poly derivative() const;
    Poly monic() const;
    /// True iff every coefficient is fixed by x -> x^{s^e}.
    bool over_subfield(int e) const;
    bool over_subfield() const { return over_subfield(ctx_.subfield_degree()); }

    /// "x^2 - 4x + 1"; prime-field coefficients use balanced residues.
    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();

    FieldCtx ctx_;
    std::vector<FieldElem> c_;
};

/// Degree first, then lexicographic on the coefficient sequence.
bool poly_less(const Poly& a, const Poly& b);

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);

struct PolyXgcd {
    Poly g, u, v;  ///< u*a + v*b = g with g monic
};
/// Extended Euclid. xgcd(f, 0) = (f monic, lc(f)^-1, 0). Throws InvalidArgument if both are zero.
PolyXgcd xgcd(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& f);
Poly powmod(const Poly& base, const BigUInt& e, const Poly& f);

/// g(x^d).
Poly substitute_power(const Poly& g, u64 d);
/// g(x^d) with every exponent reduced modulo m (valid modulo any f | x^m - 1).
Poly substitute_power_mod(const Poly& g, u64 d, u64 m);

/// Irreducibility over the designated subfield F_q.
bool is_irreducible(const Poly& f);

struct Factor {
    Poly poly;
    int multiplicity;
};

/// Monic irreducible factors over the designated subfield F_q, sorted by
/// degree then lexicographically. The splitting stage uses a fixed seed.
std::vector<Factor> factor(const Poly& f);

/// prod_{i<t} (x - zeta^{k^i}). Throws NotRealizable when the product does not
/// have coefficients in the designated subfield.
Poly orbit_poly(const FieldElem& zeta, u64 k, u64 t);

/// Solution of z(x) z(x^k) ... z(x^{k^{t-1}}) = eta (mod f) along with the
/// intermediate objects of its construction.
struct NormSolution {
    Poly z;                       ///< deg z < deg f
    std::vector<Poly> factors;    ///< irreducible factors of f over F_q, sorted
    std::size_t root_factor = 0;  ///< index of the factor vanishing at zeta
    std::vector<Poly> cofactors;  ///< h_i with h_i * (f / f_i) = 1 (mod f_i)
    FieldElem z_elem;             ///< element of L with norm eta
    Poly z1;                      ///< z_elem written as a polynomial in zeta over F_q
};

/// f must be an orbit polynomial with coefficients in F_q and zeta one of its
/// roots; L = zeta.ctx() must equal F_q(zeta). `pinned_z1`, when given, fixes
/// z_elem = z1(zeta) and is rejected unless its norm is eta.
NormSolution crt_norm_solution(const Poly& f, const FieldElem& eta, u64 k, u64 t, u64 m, const FieldElem& zeta,
                               const std::optional<Poly>& pinned_z1 = std::nullopt);

/// prod_{i<t} z(x^{k^i}) mod f with exponents reduced modulo m.
Poly norm_product_mod(const Poly& z, u64 k, u64 t, u64 m, const Poly& f);

}  // namespace fqrep
