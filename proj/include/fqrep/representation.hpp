/**
 * @file representation.hpp
 * @brief Matrix representations of metacyclic groups: the induced
 *        representation, its decomposition, trace vectors and verification.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqrep/group.hpp"
#include "fqrep/matrix.hpp"

namespace fqrep {

/// Images of the generators. The context's designated subfield is the field
/// the representation is meant to be written over.
struct Representation {
    MetacyclicGroup group;
    FieldCtx ctx;
    Matrix mat_a;
    Matrix mat_b;
    /// Choices made while constructing (zeta, eta, z, exponents), for display.
    std::vector<std::pair<std::string, std::string>> choices;

    std::size_t degree() const { return mat_a.dim(); }
    int subfield_e() const { return ctx.subfield_degree(); }
    Matrix image(const GroupElement& g) const;
};

struct RelationCheck {
    bool a_order = false;      ///< A^m = I
    bool b_order = false;      ///< B^n = I
    bool conjugation = false;  ///< B^-1 A B = A^k
    bool ok() const { return a_order && b_order && conjugation; }
};

RelationCheck check_relations(const Representation& rep);

/// tr rho(a^i b^j) at index i*n + j. Throws RelationViolation if the
/// generator images do not satisfy the presentation.
std::vector<FieldElem> element_trace_vector(const Representation& rep);

/// a -> diag(zeta^{k^i mod m}), b -> n-cycle (ones below the diagonal, one top right).
Representation induced_rep(const MetacyclicGroup& g, const FieldElem& zeta);

/// The induced representation is absolutely irreducible iff t = n.
bool is_irreducible_induced(const MetacyclicGroup& g);

struct Decomposition {
    std::vector<Representation> components;  ///< r components of degree t
    Matrix basis;  ///< columns v_{ij} = sum_l eta^{il} e_{j + lt}, column index i*t + j
};

/// Splits the induced representation into its r components using the
/// primitive r-th root eta (same field). Component i has b -> t-cycle with
/// top-right entry eta^{-i}. Throws RSNotCoprime when s | r.
Decomposition decompose(const Representation& induced, const FieldElem& eta);

/// Component i of the induced representation built directly from zeta, eta.
Representation induced_component(const MetacyclicGroup& g, const FieldElem& zeta, const FieldElem& eta, u64 i);

/// Exhaustive search over the context for a proper nonzero invariant subspace
/// generated by one vector. Throws InvalidArgument above `limit` candidate vectors.
bool brute_force_irreducible(const Representation& rep, u64 limit = 2'000'000);

enum class CharacterVerdict { NotChecked, Equal, Different };

struct VerifyReport {
    RelationCheck relations;
    bool entries_in_subfield = false;
    std::optional<Poly> char_poly_a;
    std::optional<Poly> char_poly_b;
    CharacterVerdict character = CharacterVerdict::NotChecked;
    /// Set when an intertwiner search ran; true iff one was found.
    std::optional<bool> certified;

    bool ok() const;
    std::string summary() const;
};

struct VerifyOptions {
    bool char_polys = true;
    /// Run find_intertwiner against the reference when dimensions allow.
    bool certify = false;
};

VerifyReport verify(const Representation& rep, const Representation* reference = nullptr,
                    const VerifyOptions& options = {});

}  // namespace fqrep
