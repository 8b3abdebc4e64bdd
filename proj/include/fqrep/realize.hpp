/**
 * @file realize.hpp
 * @brief Realizability predicates and explicit realizations over F_q.
 *
 * Every realization is returned over L = F_q(zeta_m) with F_q designated as
 * its subfield; entries are checked to lie in F_q before returning.
 */
#pragma once

#include <optional>
#include <vector>

#include "fqrep/representation.hpp"

namespace fqrep {

/// Least j with q = k^j (mod m). Throws NotCoprime if gcd(q, m) != 1.
std::optional<u64> realizability_witness(const MetacyclicGroup& g, u64 q);

/// q mod m lies in <k>.
bool is_realizable(const MetacyclicGroup& g, u64 q);
/// is_realizable and q = 1 (mod r).
bool is_completely_realizable(const MetacyclicGroup& g, u64 q);

/// The Frobenius x -> x^q maps {zeta^{k^i} : i < n} onto itself.
bool frobenius_permutes(const FieldElem& zeta, u64 k, u64 n, u64 q);

/// Caller-fixed choices. Vectors are coefficient vectors in the power basis
/// of F_q(zeta) (a single entry for prime-field values); z1 lists the
/// coefficients of z1(x) in increasing degree.
struct Pins {
    std::optional<std::vector<i64>> zeta;
    std::optional<std::vector<i64>> eta;
    std::optional<std::vector<i64>> z1;
};

/// F_q(zeta_m) with F_q designated, and zeta (pinned or lexicographically first).
RootOfUnity realization_field(u64 q, u64 m, const Pins& pins = {});

/// Realization of the irreducible induced representation (t = n) through the
/// Vandermonde conjugation on H = <a, c>, c = b^{u alpha}, followed by
/// induction from H to G. Throws NotRealizable when q mod m is not in <k>.
Representation realize_vandermonde(const MetacyclicGroup& g, u64 q, const Pins& pins = {});

struct ComponentRealization {
    Representation rep;
    Poly f;  ///< orbit polynomial
    FieldElem zeta;
    FieldElem eta;
    NormSolution solution;  ///< for the norm target eta^{-c}
};

/// Component c over F_q: a -> companion(f), column i of b = z(x) x^{i k^{t-1}} mod f.
/// Throws NotRealizable, NoRootOfUnity (q != 1 mod r) or RSNotCoprime.
ComponentRealization realize_component_detailed(const MetacyclicGroup& g, u64 q, u64 c, const Pins& pins = {});
Representation realize_component(const MetacyclicGroup& g, u64 q, u64 c, const Pins& pins = {});

/// Primitive r-th root of unity inside the designated subfield of L (pinned or
/// lexicographically first). Throws NoRootOfUnity.
FieldElem subfield_root_of_unity(const FieldCtx& L, u64 r, const std::optional<std::vector<i64>>& pin = std::nullopt);

/// Dihedral group (m, 2, m-1). q = 1: diag(zeta, zeta^-1) with the swap;
/// q = -1: a -> [[0,-1],[1,t]], b -> [[1,t],[0,-1]], t = zeta + zeta^-1.
Representation realize_dihedral(u64 m, u64 q, const Pins& pins = {});

/// Generalized quaternion group (m, 4, m-1), m odd: the component tau with
/// a -> diag(zeta, zeta^-1), b -> [[0,-1],[1,0]].
Representation quaternion_tau(u64 m, const FieldElem& zeta);

/// tau rewritten over F_q as a -> (theta/2) I + (1/2)[[alpha, beta], [beta, -alpha]],
/// b -> [[0,-1],[1,0]]. Returns tau itself when zeta is in F_q.
Representation realize_quaternion_tau(u64 m, u64 q, const Pins& pins = {});

}  // namespace fqrep
