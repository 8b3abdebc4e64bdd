#include "fqrep/group.hpp"

#include <numeric>

#include "fqrep/errors.hpp"

namespace fqrep {

std::string MetacyclicGroup::to_string() const {
    return "<a, b | a^" + std::to_string(m) + " = b^" + std::to_string(n) + " = 1, b^-1 a b = a^" + std::to_string(k) +
           ">";
}

MetacyclicGroup make_group(u64 m, u64 n, u64 k) {
    if (m == 0 || n == 0) throw InvalidArgument("m and n must be positive");
    MetacyclicGroup g;
    g.m = m;
    g.n = n;
    g.k = k % m;
    if (m > 1) {
        if (k == 0 || k >= m) throw InvalidArgument("k must lie in [1, m)");
        if (std::gcd(k, m) != 1) throw NotCoprime("gcd(k, m) != 1");
        if (pow_mod(k, n, m) != 1)
            throw InconsistentPresentation(std::to_string(k) + "^" + std::to_string(n) + " is not 1 mod " +
                                           std::to_string(m));
    }
    g.t = m == 1 ? 1 : ord_mod(g.k, m);
    g.r = n / g.t;
    return g;
}

GroupElement multiply(const MetacyclicGroup& g, const GroupElement& x, const GroupElement& y) {
    if (g.m == 1) return {0, (x.j + y.j) % g.n};
    const u64 kinv = inv_mod(g.k, g.m);
    const u64 twist = pow_mod(kinv, x.j, g.m);
    return {(x.i + mul_mod(y.i, twist, g.m)) % g.m, (x.j + y.j) % g.n};
}

GroupElement power(const MetacyclicGroup& g, GroupElement x, u64 e) {
    GroupElement result{};
    while (e) {
        if (e & 1) result = multiply(g, result, x);
        e >>= 1;
        if (e) x = multiply(g, x, x);
    }
    return result;
}

std::vector<GroupElement> elements(const MetacyclicGroup& g) {
    std::vector<GroupElement> out;
    out.reserve(g.m * g.n);
    for (u64 i = 0; i < g.m; ++i)
        for (u64 j = 0; j < g.n; ++j) out.push_back({i, j});
    return out;
}

}  // namespace fqrep
