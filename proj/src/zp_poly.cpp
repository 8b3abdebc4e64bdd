#include "fqrep/zp_poly.hpp"

#include <algorithm>
#include <utility>

#include "fqrep/errors.hpp"

namespace fqrep::zp {

namespace {
const simd::KernelTable& K() { return simd::kernels(); }
}  // namespace

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

u32 inv(u32 a, const Modulus& mod) {
    if (a % mod.p == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(mod.p));
    return static_cast<u32>(inv_mod(a, mod.p));
}

Coeffs add(const Coeffs& a, const Coeffs& b, const Modulus& mod) {
    const Coeffs& big = a.size() >= b.size() ? a : b;
    const Coeffs& small = a.size() >= b.size() ? b : a;
    Coeffs r = big;
    K().add(std::span(r).first(small.size()), small, mod);
    trim(r);
    return r;
}

Coeffs sub(const Coeffs& a, const Coeffs& b, const Modulus& mod) {
    Coeffs r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    K().sub(std::span(r).first(b.size()), b, mod);
    trim(r);
    return r;
}

Coeffs mul(const Coeffs& a, const Coeffs& b, const Modulus& mod) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    const auto& k = K();
    for (std::size_t i = 0; i < a.size(); ++i) k.axpy(std::span(r).subspan(i, b.size()), b, a[i], mod);
    trim(r);
    return r;
}

Coeffs scale(Coeffs a, u32 c, const Modulus& mod) {
    K().scale(a, c % mod.p, mod);
    trim(a);
    return a;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b, const Modulus& mod) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Coeffs r = a;
    const std::size_t db = b.size() - 1;
    Coeffs q(a.size() - db, 0);
    const u32 lead_inv = inv(b.back(), mod);
    const auto& k = K();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        u32 c = static_cast<u32>(u64{r[i]} * lead_inv % mod.p);
        q[i - db] = c;
        k.axpy(std::span(r).subspan(i - db, b.size()), b, mod.p - c, mod);
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

Coeffs rem(const Coeffs& a, const Coeffs& b, const Modulus& mod) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (a.size() < b.size()) return a;
    Coeffs r = a;
    const std::size_t db = b.size() - 1;
    const u32 lead_inv = inv(b.back(), mod);
    const auto& k = K();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        u32 c = static_cast<u32>(u64{r[i]} * lead_inv % mod.p);
        k.axpy(std::span(r).subspan(i - db, b.size()), b, mod.p - c, mod);
    }
    r.resize(db);
    trim(r);
    return r;
}

Coeffs make_monic(Coeffs a, const Modulus& mod) {
    if (a.empty()) return a;
    return scale(std::move(a), inv(a.back(), mod), mod);
}

Coeffs gcd(Coeffs a, Coeffs b, const Modulus& mod) {
    while (!b.empty()) {
        Coeffs r = rem(a, b, mod);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), mod);
}

Xgcd xgcd(const Coeffs& a, const Coeffs& b, const Modulus& mod) {
    Coeffs r0 = a, r1 = b;
    Coeffs u0{1}, u1{}, v0{}, v1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, mod);
        r0 = std::exchange(r1, std::move(r));
        u0 = std::exchange(u1, sub(u0, mul(q, u1, mod), mod));
        v0 = std::exchange(v1, sub(v0, mul(q, v1, mod), mod));
    }
    if (r0.empty()) return {{}, {}, {}};
    u32 li = inv(r0.back(), mod);
    return {scale(r0, li, mod), scale(u0, li, mod), scale(v0, li, mod)};
}

Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, const Modulus& mod) {
    return rem(mul(a, b, mod), f, mod);
}

Coeffs powmod(const Coeffs& base, u64 exp, const Coeffs& f, const Modulus& mod) {
    Coeffs result = rem(Coeffs{1}, f, mod);
    Coeffs b = rem(base, f, mod);
    while (exp) {
        if (exp & 1) result = mulmod(result, b, f, mod);
        exp >>= 1;
        if (exp) b = mulmod(b, b, f, mod);
    }
    return result;
}

Coeffs powmod(const Coeffs& base, const BigUInt& exp, const Coeffs& f, const Modulus& mod) {
    Coeffs result = rem(Coeffs{1}, f, mod);
    if (exp.is_zero()) return result;
    Coeffs b = rem(base, f, mod);
    for (auto bit = static_cast<long>(boost::multiprecision::msb(exp)); bit >= 0; --bit) {
        result = mulmod(result, result, f, mod);
        if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(bit))) result = mulmod(result, b, f, mod);
    }
    return result;
}

bool is_irreducible(const Coeffs& f, const Modulus& mod) {
    const int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const Coeffs x{0, 1};
    Coeffs h = x;
    for (int i = 1; i <= d / 2; ++i) {
        h = powmod(h, mod.p, f, mod);
        Coeffs g = gcd(f, sub(h, x, mod), mod);
        if (degree(g) > 0) return false;
    }
    return true;
}

Coeffs smallest_irreducible(u32 p, int d) {
    if (d < 1) throw InvalidArgument("extension degree must be positive");
    const Modulus mod(p);
    Coeffs f(static_cast<std::size_t>(d) + 1, 0);
    f[d] = 1;
    if (d == 1) return f;  // x
    // odometer over (c0, ..., c_{d-1}) with c_{d-1} varying fastest; c0 = 0 is divisible by x
    f[0] = 1;
    for (;;) {
        if (is_irreducible(f, mod)) return f;
        int i = d - 1;
        while (i >= 0) {
            if (++f[i] < p) break;
            f[i] = 0;
            --i;
        }
        if (i < 0) break;
        if (f[0] == 0) f[0] = 1;
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

int compare_lex(std::span<const u32> a, std::span<const u32> b) {
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    if (ia == a.end() && ib == b.end()) return 0;
    if (ia == a.end()) return -1;
    if (ib == b.end()) return 1;
    return *ia < *ib ? -1 : 1;
}

}  // namespace fqrep::zp
