#include "fqrep/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "fqrep/errors.hpp"

namespace fqrep {

namespace detail {

std::shared_ptr<const FieldCore> make_core(u32 s, const zp::Coeffs& modulus) {
    auto core = std::make_shared<FieldCore>();
    core->s = s;
    core->mod = simd::Modulus(s);
    core->D = zp::degree(modulus);
    core->modulus = modulus;
    const int D = core->D;
    const auto& mod = core->mod;
    if (D == 1) {
        core->modulus = {0, 1};
        core->frob_cols = {{1}};
        return core;
    }
    // x^D = -(m_0 + ... + m_{D-1} x^{D-1})
    zp::Coeffs top(D);
    for (int i = 0; i < D; ++i) top[i] = modulus[i] == 0 ? 0 : s - modulus[i];
    for (int i = 0; i + 1 < D; ++i) {
        core->reduce.push_back(top);
        u32 carry = top[D - 1];
        std::rotate(top.rbegin(), top.rbegin() + 1, top.rend());
        top[0] = 0;
        simd::kernels().axpy(top, core->reduce.front(), carry, mod);
    }
    zp::Coeffs xs = zp::powmod(zp::Coeffs{0, 1}, u64{s}, modulus, mod);
    zp::Coeffs col{1};
    for (int j = 0; j < D; ++j) {
        zp::Coeffs padded = col;
        padded.resize(D, 0);
        core->frob_cols.push_back(std::move(padded));
        col = zp::mulmod(col, xs, modulus, mod);
    }
    return core;
}

std::vector<zp::Coeffs> nullspace_mod_p(std::vector<zp::Coeffs> rows, std::size_t cols, const simd::Modulus& mod) {
    const auto& K = simd::kernels();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        K.scale(rows[r], zp::inv(rows[r][c], mod), mod);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c] != 0) K.axpy(rows[i], rows[r], mod.p - rows[i][c], mod);
        pivots.push_back(c);
        ++r;
    }
    std::vector<zp::Coeffs> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        zp::Coeffs v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rows[i][f] == 0 ? 0 : mod.p - rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<zp::Coeffs> solve_mod_p(const std::vector<zp::Coeffs>& cols, const zp::Coeffs& b,
                                      const simd::Modulus& mod) {
    const std::size_t n = cols.size(), dim = b.size();
    std::vector<zp::Coeffs> rows(dim, zp::Coeffs(n + 1, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = cols[j][i];
        rows[i][n] = b[i];
    }
    const auto& K = simd::kernels();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < dim; ++c) {
        std::size_t p = r;
        while (p < dim && rows[p][c] == 0) ++p;
        if (p == dim) continue;
        std::swap(rows[p], rows[r]);
        K.scale(rows[r], zp::inv(rows[r][c], mod), mod);
        for (std::size_t i = 0; i < dim; ++i)
            if (i != r && rows[i][c] != 0) K.axpy(rows[i], rows[r], mod.p - rows[i][c], mod);
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < dim; ++i)
        if (rows[i][n] != 0) return std::nullopt;
    zp::Coeffs x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][n];
    return x;
}

}  // namespace detail

// ---------------------------------------------------------------- FieldCtx

namespace {

std::shared_ptr<const detail::FieldCore> cached_core(u32 s, int D) {
    static std::mutex mu;
    static std::map<std::pair<u32, int>, std::shared_ptr<const detail::FieldCore>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({s, D}); it != cache.end()) return it->second;
    }
    auto core = detail::make_core(s, zp::smallest_irreducible(s, D));
    std::lock_guard lock(mu);
    return cache.try_emplace({s, D}, std::move(core)).first->second;
}

}  // namespace

FieldCtx make_field_from_core(std::shared_ptr<const detail::FieldCore> core, int e) {
    FieldCtx ctx;
    ctx.core_ = std::move(core);
    ctx.subfield_e_ = e;
    return ctx;
}

u32 FieldCtx::characteristic() const { return core_->s; }
int FieldCtx::degree() const { return core_->D; }

zp::Coeffs FieldCtx::modulus() const { return core_->D == 1 ? zp::Coeffs{} : core_->modulus; }

BigUInt FieldCtx::element_count() const { return boost::multiprecision::pow(BigUInt(core_->s), core_->D); }

u64 FieldCtx::subfield_order() const { return checked_pow(core_->s, subfield_e_); }

FieldCtx FieldCtx::with_subfield(int e) const {
    if (e < 1 || degree() % e != 0)
        throw InvalidArgument("subfield degree " + std::to_string(e) + " does not divide " + std::to_string(degree()));
    return make_field_from_core(core_, e);
}

bool FieldCtx::same_field(const FieldCtx& other) const {
    if (core_ == other.core_) return true;
    if (!core_ || !other.core_) return false;
    return core_->s == other.core_->s && core_->modulus == other.core_->modulus;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << characteristic();
    if (degree() > 1) {
        os << "^" << degree() << " = F_" << characteristic() << "[x]/(";
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            u32 c = core_->modulus[i];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || c != 1) os << c;
            if (i >= 1) os << "x";
            if (i > 1) os << "^" << i;
        }
        os << ")";
    }
    if (subfield_e_ != degree()) os << ", subfield F_" << characteristic() << "^" << subfield_e_;
    return os.str();
}

FieldCtx make_prime_field(u64 s) {
    if (!is_prime(s)) throw NonPrime(std::to_string(s) + " is not prime");
    if (s >= (u64{1} << 31)) throw InvalidArgument("characteristic must be below 2^31");
    return make_field_from_core(cached_core(static_cast<u32>(s), 1), 1);
}

FieldCtx make_extension(const FieldCtx& base, int d, int subfield_degree) {
    if (!base.valid() || base.degree() != 1) throw InvalidArgument("make_extension expects a prime field base");
    if (d < 1) throw InvalidArgument("extension degree must be positive");
    if (d == 1) return base;
    return make_field(base.characteristic(), d, subfield_degree);
}

FieldCtx make_field(u64 s, int degree, int subfield_degree) {
    if (!is_prime(s)) throw NonPrime(std::to_string(s) + " is not prime");
    if (degree < 1) throw InvalidArgument("extension degree must be positive");
    if (subfield_degree < 1 || degree % subfield_degree != 0)
        throw InvalidArgument("subfield degree must divide the field degree");
    return make_field_from_core(cached_core(static_cast<u32>(s), degree), subfield_degree);
}

FieldCtx make_field_with_modulus(u64 s, const zp::Coeffs& modulus, int subfield_degree) {
    if (!is_prime(s)) throw NonPrime(std::to_string(s) + " is not prime");
    const int D = modulus.empty() ? 1 : zp::degree(modulus);
    if (D <= 1) return make_field(s, 1, 1);
    simd::Modulus mod(static_cast<u32>(s));
    if (modulus.back() != 1 || std::any_of(modulus.begin(), modulus.end(), [&](u32 c) { return c >= s; }))
        throw InvalidArgument("modulus must be monic with reduced coefficients");
    if (!zp::is_irreducible(modulus, mod)) throw InvalidArgument("modulus is not irreducible");
    if (subfield_degree < 1 || D % subfield_degree != 0)
        throw InvalidArgument("subfield degree must divide the field degree");
    auto def = cached_core(static_cast<u32>(s), D);
    if (def->modulus == modulus) return make_field_from_core(def, subfield_degree);
    return make_field_from_core(detail::make_core(static_cast<u32>(s), modulus), subfield_degree);
}

// --------------------------------------------------------------- FieldElem

FieldElem FieldElem::zero(const FieldCtx& ctx) { return FieldElem(ctx, zp::Coeffs(ctx.degree(), 0)); }

FieldElem FieldElem::one(const FieldCtx& ctx) {
    zp::Coeffs c(ctx.degree(), 0);
    c[0] = 1 % ctx.characteristic();
    return FieldElem(ctx, std::move(c));
}

FieldElem FieldElem::from_int(const FieldCtx& ctx, i64 v) {
    zp::Coeffs c(ctx.degree(), 0);
    c[0] = static_cast<u32>(mod_floor(v, ctx.characteristic()));
    return FieldElem(ctx, std::move(c));
}

FieldElem FieldElem::from_coeffs(const FieldCtx& ctx, std::span<const i64> coeffs) {
    if (coeffs.size() > static_cast<std::size_t>(ctx.degree()))
        throw InvalidArgument("too many coefficients for " + ctx.describe());
    zp::Coeffs c(ctx.degree(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<u32>(mod_floor(coeffs[i], ctx.characteristic()));
    return FieldElem(ctx, std::move(c));
}

FieldElem FieldElem::from_residues(const FieldCtx& ctx, zp::Coeffs residues) {
    const int D = ctx.degree();
    if (residues.size() > static_cast<std::size_t>(D)) residues = zp::rem(residues, ctx.core().modulus, ctx.core().mod);
    for (auto& r : residues) r %= ctx.characteristic();
    residues.resize(D, 0);
    return FieldElem(ctx, std::move(residues));
}

FieldElem FieldElem::generator(const FieldCtx& ctx) {
    if (ctx.degree() == 1) return zero(ctx);
    zp::Coeffs c(ctx.degree(), 0);
    c[1] = 1;
    return FieldElem(ctx, std::move(c));
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u32 v) { return v == 0; });
}

bool FieldElem::is_one() const { return !c_.empty() && c_[0] == 1 && in_prime_field(); }

bool FieldElem::in_prime_field() const {
    return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](u32 v) { return v == 0; });
}

u32 FieldElem::prime_value() const {
    if (!in_prime_field()) throw InvalidArgument("element is not in the prime field");
    return c_.empty() ? 0 : c_[0];
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!ctx_.same_field(o.ctx_)) throw ContextMismatch("operands belong to different fields");
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same(o);
    simd::kernels().add(c_, o.c_, ctx_.core().mod);
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
    check_same(o);
    simd::kernels().sub(c_, o.c_, ctx_.core().mod);
    return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    const auto& core = a.ctx_.core();
    const int D = core.D;
    const auto& K = simd::kernels();
    if (D == 1) return FieldElem(a.ctx_, {static_cast<u32>(u64{a.c_[0]} * b.c_[0] % core.s)});
    zp::Coeffs prod(2 * D - 1, 0);
    for (int i = 0; i < D; ++i) K.axpy(std::span(prod).subspan(i, D), b.c_, a.c_[i], core.mod);
    zp::Coeffs out(prod.begin(), prod.begin() + D);
    for (int i = 0; i + 1 < D; ++i) K.axpy(out, core.reduce[i], prod[D + i], core.mod);
    return FieldElem(a.ctx_, std::move(out));
}

FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this = *this * o.inv(); }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    simd::kernels().negate(r.c_, ctx_.core().mod);
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + ctx_.describe());
    const auto& core = ctx_.core();
    if (core.D == 1) return FieldElem(ctx_, {zp::inv(c_[0], core.mod)});
    zp::Coeffs a = c_;
    zp::trim(a);
    auto [g, u, v] = zp::xgcd(a, core.modulus, core.mod);
    (void)v;
    return from_residues(ctx_, std::move(u));
}

FieldElem FieldElem::pow(u64 e) const {
    FieldElem result = one(ctx_), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FieldElem FieldElem::pow(const BigUInt& e) const {
    FieldElem result = one(ctx_);
    if (e.is_zero()) return result;
    for (auto bit = static_cast<long>(boost::multiprecision::msb(e)); bit >= 0; --bit) {
        result = result * result;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result *= *this;
    }
    return result;
}

FieldElem FieldElem::pow_signed(i64 e) const {
    if (e >= 0) return pow(static_cast<u64>(e));
    return inv().pow(static_cast<u64>(-(e + 1)) + 1);
}

bool operator==(const FieldElem& a, const FieldElem& b) { return a.ctx_.same_field(b.ctx_) && a.c_ == b.c_; }

std::string FieldElem::to_string() const {
    if (in_prime_field()) return std::to_string(prime_value());
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c_[i]);
    }
    return out + "]";
}

bool lex_less(const FieldElem& a, const FieldElem& b) { return zp::compare_lex(a.coeffs(), b.coeffs()) < 0; }

// --------------------------------------------------------------- Frobenius

FieldElem frobenius(const FieldElem& x, u64 e) {
    const auto& core = x.ctx().core();
    if (core.D == 1) return x;
    e %= static_cast<u64>(core.D);
    zp::Coeffs cur(x.coeffs().begin(), x.coeffs().end());
    const auto& K = simd::kernels();
    for (u64 step = 0; step < e; ++step) {
        zp::Coeffs next(core.D, 0);
        for (int j = 0; j < core.D; ++j) K.axpy(next, core.frob_cols[j], cur[j], core.mod);
        cur = std::move(next);
    }
    return FieldElem::from_residues(x.ctx(), std::move(cur));
}

FieldElem frobenius_by_order(const FieldElem& x, u64 q) {
    auto pp = as_prime_power(q);
    if (!pp || pp->prime != x.ctx().characteristic())
        throw InvalidArgument(std::to_string(q) + " is not a power of the characteristic");
    return frobenius(x, static_cast<u64>(pp->exponent));
}

bool is_fixed_by(const FieldElem& x, int e) { return frobenius(x, static_cast<u64>(e)) == x; }

// ------------------------------------------------------------ SubfieldView

u64 SubfieldView::order() const { return checked_pow(ctx.characteristic(), e); }

FieldElem SubfieldView::element(std::span<const u32> coords) const {
    FieldElem x = FieldElem::zero(ctx);
    for (std::size_t j = 0; j < basis.size() && j < coords.size(); ++j)
        if (coords[j]) x += FieldElem::from_int(ctx, coords[j]) * basis[j];
    return x;
}

FieldElem SubfieldView::element_at(u64 index) const {
    const u32 s = ctx.characteristic();
    zp::Coeffs coords(basis.size(), 0);
    for (std::size_t j = basis.size(); j-- > 0;) {
        coords[j] = static_cast<u32>(index % s);
        index /= s;
    }
    return element(coords);
}

FieldElem SubfieldView::random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<u32> dist(0, ctx.characteristic() - 1);
    zp::Coeffs coords(basis.size());
    for (auto& c : coords) c = dist(rng);
    return element(coords);
}

SubfieldView subfield_view(const FieldCtx& ctx) { return subfield_view(ctx, ctx.subfield_degree()); }

SubfieldView subfield_view(const FieldCtx& ctx, int e) {
    const int D = ctx.degree();
    if (e < 1 || D % e != 0) throw InvalidArgument("subfield degree must divide the field degree");
    SubfieldView view{ctx.with_subfield(e), e, {}};
    if (e == D) {
        for (int j = 0; j < D; ++j) {
            zp::Coeffs c(D, 0);
            c[j] = 1;
            view.basis.push_back(FieldElem::from_residues(view.ctx, std::move(c)));
        }
        return view;
    }
    // kernel of (Frob^e - I) acting on power-basis coordinates
    const auto& mod = ctx.core().mod;
    std::vector<zp::Coeffs> rows(D, zp::Coeffs(D, 0));
    for (int c = 0; c < D; ++c) {
        zp::Coeffs unit(D, 0);
        unit[c] = 1;
        FieldElem img = frobenius(FieldElem::from_residues(ctx, unit), static_cast<u64>(e));
        for (int r = 0; r < D; ++r) rows[r][c] = img.coeffs()[r];
        rows[c][c] = (rows[c][c] + mod.p - 1) % mod.p;
    }
    for (auto& v : detail::nullspace_mod_p(std::move(rows), D, mod))
        view.basis.push_back(FieldElem::from_residues(view.ctx, std::move(v)));
    if (static_cast<int>(view.basis.size()) != e) throw Error("subfield basis has unexpected dimension");
    return view;
}

// ---------------------------------------------------------- roots of unity

bool has_order_exactly(const FieldElem& x, u64 m) {
    if (m == 0 || !x.pow(m).is_one()) return false;
    for (u64 p : prime_factors(m))
        if (x.pow(m / p).is_one()) return false;
    return true;
}

namespace {

// Advances an odometer over coefficient vectors, last coordinate fastest.
bool next_lex(zp::Coeffs& c, u32 s) {
    for (std::size_t i = c.size(); i-- > 0;) {
        if (++c[i] < s) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<FieldElem> primitive_roots_in(const FieldCtx& ctx, u64 m) {
    if (m == 0) throw InvalidArgument("root of unity order must be positive");
    const BigUInt group_order = ctx.element_count() - 1;
    if (group_order % m != 0)
        throw NoRootOfUnity("no primitive " + std::to_string(m) + "-th root of unity in " + ctx.describe());
    if (m == 1) return {FieldElem::one(ctx)};
    const BigUInt cofactor = group_order / m;
    zp::Coeffs c(ctx.degree(), 0);
    while (next_lex(c, ctx.characteristic())) {
        FieldElem y = FieldElem::from_residues(ctx, c).pow(cofactor);
        if (!has_order_exactly(y, m)) continue;
        std::vector<FieldElem> roots;
        FieldElem acc = y;
        for (u64 j = 1; j < m; ++j, acc *= y)
            if (std::gcd(j, m) == 1) roots.push_back(acc);
        std::sort(roots.begin(), roots.end(), lex_less);
        return roots;
    }
    throw Error("primitive root search exhausted the field");  // unreachable
}

FieldCtx cyclotomic_field(u64 q, u64 m) {
    auto pp = as_prime_power(q);
    if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (m == 0) throw InvalidArgument("m must be positive");
    if (m % pp->prime == 0) throw CharDividesM("characteristic " + std::to_string(pp->prime) + " divides " + std::to_string(m));
    const u64 v = ord_mod(q, m);
    return make_field(pp->prime, pp->exponent * static_cast<int>(v), pp->exponent);
}

RootOfUnity primitive_root_of_unity(const FieldCtx& base, u64 m) {
    const u64 s = base.characteristic();
    if (m != 0 && m % s == 0) throw CharDividesM("characteristic " + std::to_string(s) + " divides " + std::to_string(m));
    const u64 q = checked_pow(s, base.degree());
    if (m == 1) return {base.with_subfield(base.degree()), FieldElem::one(base)};
    FieldCtx L = cyclotomic_field(q, m);
    return {L, primitive_roots_in(L, m).front()};
}

// ------------------------------------------------------------------- norms

FieldElem norm(const FieldElem& z) { return norm(z, z.ctx().subfield_degree()); }

FieldElem norm(const FieldElem& z, int subfield_e) {
    const int D = z.ctx().degree();
    if (subfield_e < 1 || D % subfield_e != 0) throw InvalidArgument("subfield degree must divide the field degree");
    FieldElem result = z, conj = z;
    for (int i = 1; i < D / subfield_e; ++i) {
        conj = frobenius(conj, static_cast<u64>(subfield_e));
        result *= conj;
    }
    return result;
}

FieldElem norm_preimage(const FieldCtx& L, const FieldElem& eta) {
    const int e = L.subfield_degree();
    if (!eta.ctx().same_field(L)) throw ContextMismatch("eta must live in L");
    if (eta.is_zero()) throw InvalidArgument("norm_preimage: eta must be nonzero");
    if (!is_fixed_by(eta, e)) throw InvalidArgument("norm_preimage: eta is not in the designated subfield");
    if (e == L.degree()) return eta;
    zp::Coeffs c(L.degree(), 0);
    while (next_lex(c, L.characteristic())) {
        FieldElem z = FieldElem::from_residues(L, c);
        if (norm(z, e) == eta) return z;
    }
    throw Error("norm map not onto: no preimage found");  // unreachable for finite fields
}

std::optional<std::vector<FieldElem>> coordinates_in_powers(const FieldElem& x, const FieldElem& g) {
    const FieldCtx& L = x.ctx();
    SubfieldView F = subfield_view(L);
    const int D = L.degree(), e = F.e, v = D / e;
    std::vector<zp::Coeffs> cols;
    FieldElem gp = FieldElem::one(L);
    for (int i = 0; i < v; ++i, gp *= g)
        for (const auto& b : F.basis) {
            FieldElem col = b * gp;
            cols.emplace_back(col.coeffs().begin(), col.coeffs().end());
        }
    // rank check: generator iff the D columns are independent
    {
        std::vector<zp::Coeffs> rows(D, zp::Coeffs(D, 0));
        for (int r = 0; r < D; ++r)
            for (int c = 0; c < D; ++c) rows[r][c] = cols[c][r];
        if (!detail::nullspace_mod_p(std::move(rows), D, L.core().mod).empty()) return std::nullopt;
    }
    auto sol = detail::solve_mod_p(cols, zp::Coeffs(x.coeffs().begin(), x.coeffs().end()), L.core().mod);
    if (!sol) return std::nullopt;
    std::vector<FieldElem> out;
    for (int i = 0; i < v; ++i) out.push_back(F.element(std::span(*sol).subspan(static_cast<std::size_t>(i) * e, e)));
    return out;
}

}  // namespace fqrep
