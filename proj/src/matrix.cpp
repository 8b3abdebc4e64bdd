#include "fqrep/matrix.hpp"

#include <random>
#include <sstream>

#include "fqrep/errors.hpp"

namespace fqrep {

Matrix::Matrix(FieldCtx ctx, std::size_t dim) : ctx_(std::move(ctx)), n_(dim) {
    if (dim == 0 || dim > kMaxDim) throw InvalidArgument("matrix dimension must lie in [1, 64]");
    e_.assign(dim * dim, FieldElem::zero(ctx_));
}

Matrix Matrix::identity(const FieldCtx& ctx, std::size_t dim) {
    Matrix m(ctx, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = FieldElem::one(ctx);
    return m;
}

Matrix Matrix::diagonal(const std::vector<FieldElem>& d) {
    if (d.empty()) throw InvalidArgument("empty diagonal");
    Matrix m(d.front().ctx(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_ints(const FieldCtx& ctx, const std::vector<std::vector<i64>>& rows) {
    Matrix m(ctx, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw InvalidArgument("from_ints: matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = FieldElem::from_int(ctx, rows[i][j]);
    }
    return m;
}

void Matrix::check_same(const Matrix& o) const {
    if (n_ != o.n_) throw InvalidArgument("matrix dimensions differ");
    if (!ctx_.same_field(o.ctx_)) throw ContextMismatch("matrices over different fields");
}

Matrix& Matrix::operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    Matrix r(a.ctx_, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const FieldElem& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b(l, j).is_zero()) r(i, j) += x * b(l, j);
        }
    return r;
}

Matrix operator*(const FieldElem& c, Matrix m) {
    for (auto& x : m.e_) x *= c;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

Matrix Matrix::pow(u64 e) const {
    Matrix result = identity(ctx_, n_), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Matrix Matrix::pow_signed(i64 e) const {
    if (e >= 0) return pow(static_cast<u64>(e));
    return inverse().pow(static_cast<u64>(-(e + 1)) + 1);
}

Matrix Matrix::inverse() const {
    const std::size_t n = n_;
    Matrix a = *this, inv = identity(ctx_, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) throw Singular("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const FieldElem piv = a(c, c).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const FieldElem f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

FieldElem Matrix::det() const {
    const std::size_t n = n_;
    Matrix a = *this;
    FieldElem d = FieldElem::one(ctx_);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return FieldElem::zero(ctx_);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        const FieldElem piv = a(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const FieldElem f = a(i, c) * piv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

FieldElem Matrix::trace() const {
    FieldElem t = FieldElem::zero(ctx_);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_identity() const { return *this == identity(ctx_, n_); }

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    }
    os << "]";
    return os.str();
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw InvalidArgument("block_diagonal of nothing");
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.dim();
    Matrix r(blocks.front().ctx(), n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) r(off + i, off + j) = b(i, j);
        off += b.dim();
    }
    return r;
}

Poly char_poly(const Matrix& m) {
    const std::size_t n = m.dim();
    const FieldCtx& ctx = m.ctx();
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(ctx)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = i == j ? Poly(ctx, {-m(i, j), FieldElem::one(ctx)}) : Poly::constant(-m(i, j));
    // Bareiss: after step c every entry below/right is divisible by the previous pivot.
    Poly prev = Poly::constant(FieldElem::one(ctx));
    bool negate = false;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Poly(ctx);
        if (p != c) {
            std::swap(a[p], a[c]);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) a[i][j] = exact_div(a[i][j] * a[c][c] - a[i][c] * a[c][j], prev);
            a[i][c] = Poly(ctx);
        }
        prev = a[c][c];
    }
    Poly d = a[n - 1][n - 1];
    return negate ? -d : d;
}

Matrix companion_matrix(const Poly& f) {
    if (f.degree() < 1 || !f.is_monic()) throw InvalidArgument("companion_matrix needs a monic polynomial of degree >= 1");
    const std::size_t t = static_cast<std::size_t>(f.degree());
    Matrix c(f.ctx(), t);
    for (std::size_t i = 1; i < t; ++i) c(i, i - 1) = FieldElem::one(f.ctx());
    for (std::size_t i = 0; i < t; ++i) c(i, t - 1) = -f.coeff(i);
    return c;
}

namespace {

void require_distinct(const std::vector<FieldElem>& points) {
    if (points.empty()) throw InvalidArgument("no points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw DuplicatePoints("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

}  // namespace

Matrix vandermonde(const std::vector<FieldElem>& points) {
    require_distinct(points);
    const std::size_t n = points.size();
    Matrix v(points.front().ctx(), n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldElem p = FieldElem::one(v.ctx());
        for (std::size_t j = 0; j < n; ++j, p *= points[i]) v(i, j) = p;
    }
    return v;
}

Matrix vandermonde_inverse(const std::vector<FieldElem>& points) {
    require_distinct(points);
    const FieldCtx& ctx = points.front().ctx();
    const std::size_t n = points.size();
    Poly f = Poly::constant(FieldElem::one(ctx));
    for (const auto& p : points) f = f * Poly(ctx, {-p, FieldElem::one(ctx)});
    const Poly df = f.derivative();
    Matrix d(ctx, n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly g = df.eval(points[i]).inv() * exact_div(f, Poly(ctx, {-points[i], FieldElem::one(ctx)}));
        for (std::size_t j = 0; j < n; ++j) d(j, i) = g.coeff(j);
    }
    return d;
}

Matrix conjugate(const Matrix& v, const Matrix& m) { return v.inverse() * m * v; }

std::vector<std::vector<FieldElem>> nullspace(std::vector<std::vector<FieldElem>> rows, std::size_t cols,
                                              const FieldCtx& ctx) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const FieldElem piv = rows[r][c].inv();
        for (auto& x : rows[r]) x *= piv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const FieldElem f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElem> v(cols, FieldElem::zero(ctx));
        v[f] = FieldElem::one(ctx);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> find_intertwiner(const Matrix& a1, const Matrix& b1, const Matrix& a2, const Matrix& b2,
                                       int random_trials) {
    const std::size_t n = a1.dim();
    if (b1.dim() != n || a2.dim() != n || b2.dim() != n) throw InvalidArgument("find_intertwiner: dimensions differ");
    const FieldCtx& ctx = a1.ctx();
    // unknown X(l, c) sits at column l * n + c; equations M1 X - X M2 = 0
    std::vector<std::vector<FieldElem>> rows;
    auto add_equations = [&](const Matrix& m1, const Matrix& m2) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<FieldElem> row(n * n, FieldElem::zero(ctx));
                for (std::size_t l = 0; l < n; ++l) {
                    row[l * n + c] += m1(r, l);
                    row[r * n + l] -= m2(l, c);
                }
                rows.push_back(std::move(row));
            }
    };
    add_equations(a1, a2);
    add_equations(b1, b2);
    const auto basis = nullspace(std::move(rows), n * n, ctx);
    if (basis.empty()) return std::nullopt;

    auto to_matrix = [&](const std::vector<FieldElem>& v) {
        Matrix x(ctx, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x(i, j) = v[i * n + j];
        return x;
    };
    auto accept = [&](const Matrix& x) -> bool {
        if (x.det().is_zero()) return false;
        return a1 * x == x * a2 && b1 * x == x * b2;
    };
    for (const auto& v : basis)
        if (Matrix x = to_matrix(v); accept(x)) return x;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            std::vector<FieldElem> v = basis[i];
            for (std::size_t l = 0; l < v.size(); ++l) v[l] += basis[j][l];
            if (Matrix x = to_matrix(v); accept(x)) return x;
        }
    std::mt19937_64 rng(0x1a7e'c0de'2468'ace0ULL);
    const SubfieldView all = subfield_view(ctx, ctx.degree());
    for (int trial = 0; trial < random_trials; ++trial) {
        std::vector<FieldElem> v(n * n, FieldElem::zero(ctx));
        for (const auto& b : basis) {
            const FieldElem c = all.random(rng);
            for (std::size_t l = 0; l < v.size(); ++l) v[l] += c * b[l];
        }
        if (Matrix x = to_matrix(v); accept(x)) return x;
    }
    return std::nullopt;
}

bool entries_in_subfield(const Matrix& m, int e) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (!is_fixed_by(m(i, j), e)) return false;
    return true;
}

}  // namespace fqrep
