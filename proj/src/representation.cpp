#include "fqrep/representation.hpp"

#include <sstream>

#include "fqrep/errors.hpp"

namespace fqrep {

Matrix Representation::image(const GroupElement& g) const { return mat_a.pow(g.i) * mat_b.pow(g.j); }

RelationCheck check_relations(const Representation& rep) {
    const auto& g = rep.group;
    RelationCheck c;
    c.a_order = rep.mat_a.pow(g.m).is_identity();
    c.b_order = rep.mat_b.pow(g.n).is_identity();
    c.conjugation = rep.mat_a * rep.mat_b == rep.mat_b * rep.mat_a.pow(g.k);
    return c;
}

std::vector<FieldElem> element_trace_vector(const Representation& rep) {
    if (!check_relations(rep).ok()) throw RelationViolation("generator images violate the presentation");
    const auto& g = rep.group;
    const std::size_t d = rep.degree();
    std::vector<Matrix> apow{Matrix::identity(rep.ctx, d)}, bpow{Matrix::identity(rep.ctx, d)};
    for (u64 i = 1; i < g.m; ++i) apow.push_back(apow.back() * rep.mat_a);
    for (u64 j = 1; j < g.n; ++j) bpow.push_back(bpow.back() * rep.mat_b);
    std::vector<FieldElem> out;
    out.reserve(g.m * g.n);
    for (const auto& ai : apow)
        for (const auto& bj : bpow) {
            FieldElem tr = FieldElem::zero(rep.ctx);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    if (!ai(r, c).is_zero() && !bj(c, r).is_zero()) tr += ai(r, c) * bj(c, r);
            out.push_back(std::move(tr));
        }
    return out;
}

namespace {

Matrix cycle_matrix(const FieldCtx& ctx, std::size_t n, const FieldElem& corner) {
    Matrix b(ctx, n);
    for (std::size_t i = 1; i < n; ++i) b(i, i - 1) = FieldElem::one(ctx);
    b(0, n - 1) = corner;
    return b;
}

void require_order(const FieldElem& x, u64 m, const char* what) {
    if (!has_order_exactly(x, m))
        throw InvalidArgument(std::string(what) + " is not a primitive " + std::to_string(m) + "-th root of unity");
}

}  // namespace

Representation induced_rep(const MetacyclicGroup& g, const FieldElem& zeta) {
    require_order(zeta, g.m, "zeta");
    const FieldCtx& ctx = zeta.ctx();
    std::vector<FieldElem> diag;
    u64 e = 1 % g.m;
    for (u64 i = 0; i < g.n; ++i) {
        diag.push_back(zeta.pow(e));
        e = mul_mod(e, g.k, g.m);
    }
    Representation rep{g, ctx, Matrix::diagonal(diag), cycle_matrix(ctx, g.n, FieldElem::one(ctx)), {}};
    rep.choices.emplace_back("zeta", zeta.to_string());
    return rep;
}

bool is_irreducible_induced(const MetacyclicGroup& g) { return g.t == g.n; }

Representation induced_component(const MetacyclicGroup& g, const FieldElem& zeta, const FieldElem& eta, u64 i) {
    require_order(zeta, g.m, "zeta");
    require_order(eta, g.r, "eta");
    if (i >= g.r) throw InvalidArgument("component index out of range");
    const FieldCtx& ctx = zeta.ctx();
    std::vector<FieldElem> diag;
    u64 e = 1 % g.m;
    for (u64 j = 0; j < g.t; ++j) {
        diag.push_back(zeta.pow(e));
        e = mul_mod(e, g.k, g.m);
    }
    const FieldElem corner = eta.pow_signed(-static_cast<i64>(i));
    Representation rep{g, ctx, Matrix::diagonal(diag), cycle_matrix(ctx, g.t, corner), {}};
    rep.choices.emplace_back("zeta", zeta.to_string());
    rep.choices.emplace_back("eta", eta.to_string());
    rep.choices.emplace_back("component", std::to_string(i));
    return rep;
}

Decomposition decompose(const Representation& induced, const FieldElem& eta) {
    const auto& g = induced.group;
    if (g.r % induced.ctx.characteristic() == 0)
        throw RSNotCoprime("characteristic " + std::to_string(induced.ctx.characteristic()) + " divides r = " +
                           std::to_string(g.r));
    if (!eta.ctx().same_field(induced.ctx)) throw ContextMismatch("eta must lie in the representation's field");
    const FieldElem zeta = induced.mat_a(0, 0);
    Decomposition d;
    for (u64 i = 0; i < g.r; ++i) d.components.push_back(induced_component(g, zeta, eta, i));
    d.basis = Matrix(induced.ctx, g.n);
    for (u64 i = 0; i < g.r; ++i)
        for (u64 j = 0; j < g.t; ++j) {
            const FieldElem step = eta.pow(i);
            FieldElem coef = FieldElem::one(induced.ctx);
            for (u64 l = 0; l < g.r; ++l, coef *= step) d.basis(j + l * g.t, i * g.t + j) = coef;
        }
    return d;
}

bool brute_force_irreducible(const Representation& rep, u64 limit) {
    const std::size_t n = rep.degree();
    const FieldCtx& ctx = rep.ctx;
    const BigUInt size = ctx.element_count();
    const BigUInt candidates = (boost::multiprecision::pow(size, static_cast<unsigned>(n)) - 1) / (size - 1);
    if (candidates > limit) throw InvalidArgument("brute_force_irreducible: search space too large");
    const u64 q = static_cast<u64>(size);
    const SubfieldView all = subfield_view(ctx, ctx.degree());
    std::vector<FieldElem> elems;
    for (u64 x = 0; x < q; ++x) elems.push_back(all.element_at(x));

    auto apply = [&](const Matrix& m, const std::vector<FieldElem>& v) {
        std::vector<FieldElem> out(n, FieldElem::zero(ctx));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i] += m(i, j) * v[j];
        return out;
    };
    // Dimension of the smallest invariant subspace containing v.
    auto closure_dim = [&](const std::vector<FieldElem>& v) {
        std::vector<std::vector<FieldElem>> echelon;
        std::vector<std::size_t> lead;
        std::vector<std::vector<FieldElem>> queue{v};
        while (!queue.empty() && echelon.size() < n) {
            auto w = std::move(queue.back());
            queue.pop_back();
            auto red = w;
            for (std::size_t b = 0; b < echelon.size(); ++b) {
                const FieldElem c = red[lead[b]];
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i) red[i] -= c * echelon[b][i];
            }
            std::size_t p = 0;
            while (p < n && red[p].is_zero()) ++p;
            if (p == n) continue;
            const FieldElem inv = red[p].inv();
            for (auto& x : red) x *= inv;
            for (std::size_t b = 0; b < echelon.size(); ++b) {
                const FieldElem c = echelon[b][p];
                if (c.is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i) echelon[b][i] -= c * red[i];
            }
            echelon.push_back(red);
            lead.push_back(p);
            queue.push_back(apply(rep.mat_a, w));
            queue.push_back(apply(rep.mat_b, w));
        }
        return echelon.size();
    };

    // vectors whose first nonzero coordinate is 1
    for (std::size_t first = 0; first < n; ++first) {
        std::vector<u64> digits(n - first - 1, 0);
        for (;;) {
            std::vector<FieldElem> v(n, FieldElem::zero(ctx));
            v[first] = FieldElem::one(ctx);
            for (std::size_t i = 0; i < digits.size(); ++i) v[first + 1 + i] = elems[digits[i]];
            if (closure_dim(v) < n) return false;
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
    }
    return true;
}

bool VerifyReport::ok() const {
    return relations.ok() && entries_in_subfield && character != CharacterVerdict::Different && certified != false;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << "relations: a^m=" << (relations.a_order ? "ok" : "FAIL") << " b^n=" << (relations.b_order ? "ok" : "FAIL")
       << " b^-1ab=a^k=" << (relations.conjugation ? "ok" : "FAIL")
       << "; entries in subfield: " << (entries_in_subfield ? "yes" : "no");
    if (char_poly_a) os << "; charpoly(a) = " << char_poly_a->to_string();
    if (char_poly_b) os << "; charpoly(b) = " << char_poly_b->to_string();
    if (character != CharacterVerdict::NotChecked)
        os << "; character: " << (character == CharacterVerdict::Equal ? "equal" : "different");
    if (certified) os << "; intertwiner: " << (*certified ? "found" : "not found");
    return os.str();
}

VerifyReport verify(const Representation& rep, const Representation* reference, const VerifyOptions& options) {
    VerifyReport report;
    report.relations = check_relations(rep);
    report.entries_in_subfield =
        entries_in_subfield(rep.mat_a, rep.subfield_e()) && entries_in_subfield(rep.mat_b, rep.subfield_e());
    if (options.char_polys) {
        report.char_poly_a = char_poly(rep.mat_a);
        report.char_poly_b = char_poly(rep.mat_b);
    }
    if (reference && report.relations.ok()) {
        const bool same = reference->degree() == rep.degree() && reference->ctx.same_field(rep.ctx) &&
                          element_trace_vector(*reference) == element_trace_vector(rep);
        report.character = same ? CharacterVerdict::Equal : CharacterVerdict::Different;
        if (options.certify && same)
            report.certified =
                find_intertwiner(rep.mat_a, rep.mat_b, reference->mat_a, reference->mat_b).has_value();
    }
    return report;
}

}  // namespace fqrep
