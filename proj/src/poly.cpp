#include "fqrep/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "fqrep/errors.hpp"

namespace fqrep {

namespace {

constexpr u64 kFactorSeed = 0x5eed'f00d'1234'5678ULL;

}  // namespace

Poly::Poly(FieldCtx ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.ctx().same_field(ctx_)) throw ContextMismatch("polynomial coefficient from a different field");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.ctx(), {c}); }

Poly Poly::monomial(const FieldElem& c, std::size_t d) {
    std::vector<FieldElem> v(d + 1, FieldElem::zero(c.ctx()));
    v[d] = c;
    return Poly(c.ctx(), std::move(v));
}

Poly Poly::from_ints(const FieldCtx& ctx, std::initializer_list<i64> coeffs) {
    return from_ints(ctx, std::span<const i64>(coeffs.begin(), coeffs.size()));
}

Poly Poly::from_ints(const FieldCtx& ctx, std::span<const i64> coeffs) {
    std::vector<FieldElem> v;
    v.reserve(coeffs.size());
    for (i64 c : coeffs) v.push_back(FieldElem::from_int(ctx, c));
    return Poly(ctx, std::move(v));
}

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem::zero(ctx_); }

FieldElem Poly::leading() const { return c_.empty() ? FieldElem::zero(ctx_) : c_.back(); }

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElem::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElem::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
    std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1, FieldElem::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.ctx_, std::move(r));
}

Poly operator*(const FieldElem& c, const Poly& p) {
    std::vector<FieldElem> r;
    r.reserve(p.c_.size());
    for (const auto& x : p.c_) r.push_back(c * x);
    return Poly(p.ctx_, std::move(r));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc = FieldElem::zero(x.ctx());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    std::vector<FieldElem> r;
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.push_back(FieldElem::from_int(ctx_, static_cast<i64>(i % ctx_.characteristic())) * c_[i]);
    return Poly(ctx_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return leading().inv() * *this;
}

bool Poly::over_subfield(int e) const {
    return std::all_of(c_.begin(), c_.end(), [e](const FieldElem& c) { return is_fixed_by(c, e); });
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const i64 s = ctx_.characteristic();
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const FieldElem& c = c_[i];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (c.in_prime_field()) {
            i64 v = c.prime_value();
            if (v > s / 2) v -= s;
            const bool neg = v < 0;
            const i64 mag = neg ? -v : v;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (mag != 1 || i == 0) os << mag;
        } else {
            if (!first) os << " + ";
            os << c.to_string();
            if (i > 0) os << "*";
        }
        os << mono;
        first = false;
    }
    return os.str();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (lex_less(a.coeffs()[i], b.coeffs()[i])) return true;
        if (lex_less(b.coeffs()[i], a.coeffs()[i])) return false;
    }
    return false;
}

// ----------------------------------------------------------------- division

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(a.ctx()), a};
    std::vector<FieldElem> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<FieldElem> q(r.size() - db, FieldElem::zero(a.ctx()));
    const FieldElem lead_inv = b.leading().inv();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        FieldElem c = r[i] * lead_inv;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs()[j];
        q[i - db] = std::move(c);
    }
    r.resize(db, FieldElem::zero(a.ctx()));
    return {Poly(a.ctx(), std::move(q)), Poly(a.ctx(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidArgument("exact_div: nonzero remainder");
    return q;
}

PolyXgcd xgcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidArgument("xgcd of two zero polynomials");
    const FieldCtx& ctx = a.ctx();
    const Poly one = Poly::constant(FieldElem::one(ctx));
    Poly r0 = a, r1 = b, u0 = one, u1(ctx), v0(ctx), v1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    const FieldElem li = r0.leading().inv();
    return {li * r0, li * u0, li * v0};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) r0 = std::exchange(r1, r0 % r1);
    return r0.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) { return (a * b) % f; }

Poly powmod(const Poly& base, const BigUInt& e, const Poly& f) {
    Poly result = Poly::constant(FieldElem::one(f.ctx())) % f;
    if (e.is_zero()) return result;
    const Poly b = base % f;
    for (auto bit = static_cast<long>(boost::multiprecision::msb(e)); bit >= 0; --bit) {
        result = mulmod(result, result, f);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result = mulmod(result, b, f);
    }
    return result;
}

Poly substitute_power(const Poly& g, u64 d) {
    if (g.is_zero()) return g;
    if (d == 0) return Poly::constant(g.eval(FieldElem::one(g.ctx())));
    std::vector<FieldElem> r(static_cast<std::size_t>(g.degree()) * d + 1, FieldElem::zero(g.ctx()));
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) r[i * d] = g.coeffs()[i];
    return Poly(g.ctx(), std::move(r));
}

Poly substitute_power_mod(const Poly& g, u64 d, u64 m) {
    if (m == 0) throw InvalidArgument("substitute_power_mod: m must be positive");
    std::vector<FieldElem> r(m, FieldElem::zero(g.ctx()));
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) r[mul_mod(i % m, d % m, m)] += g.coeffs()[i];
    return Poly(g.ctx(), std::move(r));
}

// ------------------------------------------------------------ factorization

namespace {

void require_subfield(const Poly& f) {
    if (!f.over_subfield()) throw InvalidArgument("polynomial coefficients are not in the designated subfield");
}

// Coefficient-wise inverse Frobenius on a polynomial in x^s.
Poly sth_root(const Poly& f) {
    const u32 s = f.ctx().characteristic();
    const int e = f.ctx().subfield_degree();
    std::vector<FieldElem> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += s) r.push_back(frobenius(f.coeffs()[i], static_cast<u64>(e - 1)));
    return Poly(f.ctx(), std::move(r));
}

std::vector<Factor> squarefree(const Poly& f) {
    std::vector<Factor> out;
    Poly c = gcd(f, f.derivative());
    Poly w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = exact_div(w, y);
        if (fac.degree() > 0) out.push_back({fac, i});
        w = y;
        c = exact_div(c, y);
        ++i;
    }
    if (c.degree() > 0) {
        const int s = static_cast<int>(f.ctx().characteristic());
        for (auto& [p, mult] : squarefree(sth_root(c))) out.push_back({p, mult * s});
    }
    return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const Poly x = Poly::x(f.ctx());
    const BigUInt q = f.ctx().subfield_order();
    Poly h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, q, f);
        Poly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = exact_div(f, g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, const SubfieldView& F, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const u32 s = g.ctx().characteristic();
    const BigUInt qd = boost::multiprecision::pow(BigUInt(F.order()), static_cast<unsigned>(d));
    for (;;) {
        std::vector<FieldElem> a;
        for (int i = 0; i < g.degree(); ++i) a.push_back(F.random(rng));
        Poly ap(g.ctx(), std::move(a));
        if (ap.degree() < 1) continue;
        Poly b;
        if (s == 2) {
            // absolute trace F_{q^d} -> F_2 applied to a
            const int bits = F.e * d;
            Poly term = ap % g;
            b = term;
            for (int i = 1; i < bits; ++i) {
                term = mulmod(term, term, g);
                b += term;
            }
        } else {
            b = powmod(ap, (qd - 1) / 2, g) - Poly::constant(FieldElem::one(g.ctx()));
        }
        Poly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, F, out);
            equal_degree(exact_div(g, h), d, rng, F, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const Poly& f) {
    require_subfield(f);
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly fm = f.monic();
    const Poly x = Poly::x(f.ctx());
    const BigUInt q = f.ctx().subfield_order();
    Poly h = x;
    for (int i = 1; i <= d / 2; ++i) {
        h = powmod(h, q, fm);
        if (gcd(fm, h - x).degree() > 0) return false;
    }
    return true;
}

std::vector<Factor> factor(const Poly& f) {
    if (f.is_zero()) throw InvalidArgument("factor of the zero polynomial");
    require_subfield(f);
    std::vector<Factor> out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(kFactorSeed);
    const SubfieldView F = subfield_view(f.ctx());
    for (auto& [sf, mult] : squarefree(f.monic())) {
        for (auto& [g, d] : distinct_degree(sf)) {
            std::vector<Poly> pieces;
            equal_degree(g, d, rng, F, pieces);
            for (auto& p : pieces) out.push_back({p.monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (poly_less(a.poly, b.poly)) return true;
        if (poly_less(b.poly, a.poly)) return false;
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

// ---------------------------------------------------- orbits and norm lifts

Poly orbit_poly(const FieldElem& zeta, u64 k, u64 t) {
    const FieldCtx& L = zeta.ctx();
    if (t == 0) throw InvalidArgument("orbit length must be positive");
    Poly f = Poly::constant(FieldElem::one(L));
    FieldElem root = zeta;
    for (u64 i = 0; i < t; ++i) {
        f = f * Poly(L, {-root, FieldElem::one(L)});
        root = root.pow(k);
    }
    if (!f.over_subfield())
        throw NotRealizable("orbit polynomial " + f.to_string() + " does not have coefficients in F_" +
                            std::to_string(L.characteristic()) + "^" + std::to_string(L.subfield_degree()));
    return f;
}

Poly norm_product_mod(const Poly& z, u64 k, u64 t, u64 m, const Poly& f) {
    Poly prod = Poly::constant(FieldElem::one(f.ctx()));
    u64 power = 1 % m;
    for (u64 i = 0; i < t; ++i) {
        prod = mulmod(prod, substitute_power_mod(z, power, m) % f, f);
        power = mul_mod(power, k, m);
    }
    return prod;
}

NormSolution crt_norm_solution(const Poly& f, const FieldElem& eta, u64 k, u64 t, u64 m, const FieldElem& zeta,
                               const std::optional<Poly>& pinned_z1) {
    const FieldCtx& L = zeta.ctx();
    if (!f.ctx().same_field(L) || !eta.ctx().same_field(L)) throw ContextMismatch("crt_norm_solution: mixed fields");
    if (eta.is_zero()) throw InvalidArgument("crt_norm_solution: eta must be nonzero");
    if (!is_fixed_by(eta, L.subfield_degree())) throw InvalidArgument("crt_norm_solution: eta is not in F_q");

    NormSolution sol;
    for (auto& fac : factor(f)) {
        if (fac.multiplicity != 1) throw InvalidArgument("crt_norm_solution: f is not squarefree");
        sol.factors.push_back(std::move(fac.poly));
    }
    auto root = std::find_if(sol.factors.begin(), sol.factors.end(),
                             [&](const Poly& p) { return p.eval(zeta).is_zero(); });
    if (root == sol.factors.end()) throw InvalidArgument("crt_norm_solution: zeta is not a root of f");
    sol.root_factor = static_cast<std::size_t>(root - sol.factors.begin());
    const Poly& f1 = *root;
    const int e = L.subfield_degree();
    if (L.degree() != e * f1.degree())
        throw InvalidArgument("crt_norm_solution: the field of zeta must be exactly F_q(zeta)");

    const FieldElem one = FieldElem::one(L);
    if (pinned_z1) {
        sol.z1 = *pinned_z1;
        sol.z_elem = pinned_z1->eval(zeta);
        if (!(norm(sol.z_elem) == eta))
            throw InvalidArgument("pinned z1(zeta) has norm " + norm(sol.z_elem).to_string() + ", expected " +
                                  eta.to_string());
    } else if (eta.is_one()) {
        sol.z_elem = one;
        sol.z1 = Poly::constant(one);
    } else {
        sol.z_elem = norm_preimage(L, eta);
        auto coords = coordinates_in_powers(sol.z_elem, zeta);
        if (!coords) throw Error("zeta does not generate its field over F_q");
        sol.z1 = Poly(L, std::move(*coords));
    }

    Poly z(L);
    for (std::size_t i = 0; i < sol.factors.size(); ++i) {
        const Poly& fi = sol.factors[i];
        Poly fhat = exact_div(f, fi);
        PolyXgcd bez = xgcd(fhat, fi);
        if (!bez.g.is_one()) throw InvalidArgument("crt_norm_solution: factors are not coprime");
        sol.cofactors.push_back(bez.u);
        Poly term = bez.u * fhat;
        z += i == sol.root_factor ? term * sol.z1 : term;
    }
    sol.z = z % f;

    if (!(norm_product_mod(sol.z, k, t, m, f) == Poly::constant(eta)))
        throw Error("crt_norm_solution: z(x) z(x^k) ... does not reduce to eta modulo f");
    return sol;
}

}  // namespace fqrep
