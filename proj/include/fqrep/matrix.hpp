/**
 * @file matrix.hpp
 * @brief Dense square matrices over a finite field.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqrep/field.hpp"
#include "fqrep/poly.hpp"

namespace fqrep {

class Matrix {
public:
    static constexpr std::size_t kMaxDim = 64;

    Matrix() = default;
    /// dim x dim zero matrix.
    Matrix(FieldCtx ctx, std::size_t dim);

    static Matrix identity(const FieldCtx& ctx, std::size_t dim);
    static Matrix diagonal(const std::vector<FieldElem>& d);
    static Matrix from_ints(const FieldCtx& ctx, const std::vector<std::vector<i64>>& rows);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t dim() const { return n_; }

    FieldElem& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const FieldElem& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const FieldElem& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Matrix pow(u64 e) const;
    /// Negative exponents go through the inverse.
    Matrix pow_signed(i64 e) const;
    /// Gauss-Jordan; throws Singular.
    Matrix inverse() const;
    FieldElem det() const;
    FieldElem trace() const;
    bool is_identity() const;

    /// Rows separated by ';', entries via FieldElem::to_string.
    std::string to_string() const;

private:
    void check_same(const Matrix& o) const;

    FieldCtx ctx_;
    std::size_t n_ = 0;
    std::vector<FieldElem> e_;
};

Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// det(xI - M) by fraction-free elimination over F[x].
Poly char_poly(const Matrix& m);

/// Subdiagonal ones and last column -a_0, ..., -a_{t-1}.
Matrix companion_matrix(const Poly& f);

/// Row i is (1, p_i, p_i^2, ...). Throws DuplicatePoints.
Matrix vandermonde(const std::vector<FieldElem>& points);
/// Inverse through the Lagrange basis g_i = f / ((x - p_i) f'(p_i)).
Matrix vandermonde_inverse(const std::vector<FieldElem>& points);

/// V^{-1} M V.
Matrix conjugate(const Matrix& v, const Matrix& m);

/// Basis of {v : rows * v = 0} over the field of the entries.
std::vector<std::vector<FieldElem>> nullspace(std::vector<std::vector<FieldElem>> rows, std::size_t cols,
                                              const FieldCtx& ctx);

/// Some invertible X with X^{-1} A1 X = A2 and X^{-1} B1 X = B2, or nullopt.
/// Candidates: nullspace basis vectors, their pairwise sums, then up to
/// `random_trials` seeded random combinations. Any result is re-verified.
std::optional<Matrix> find_intertwiner(const Matrix& a1, const Matrix& b1, const Matrix& a2, const Matrix& b2,
                                       int random_trials = 1000);

/// Every entry fixed by x -> x^{s^e}.
bool entries_in_subfield(const Matrix& m, int e);

}  // namespace fqrep
