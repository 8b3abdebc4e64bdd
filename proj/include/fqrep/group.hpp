/**
 * @file group.hpp
 * @brief Split metacyclic groups <a, b | a^m = 1 = b^n, b^-1 a b = a^k>.
 */
#pragma once

#include <string>
#include <vector>

#include "fqrep/numtheory.hpp"

namespace fqrep {

struct MetacyclicGroup {
    u64 m = 1;
    u64 n = 1;
    u64 k = 0;  ///< reduced mod m; 0 only when m = 1
    u64 t = 1;  ///< order of k mod m
    u64 r = 1;  ///< n / t

    u64 order() const { return m * n; }
    std::string to_string() const;
    friend bool operator==(const MetacyclicGroup&, const MetacyclicGroup&) = default;
};

/// Validates the presentation. k is reduced mod m; for m = 1 any k is accepted.
/// Throws InvalidArgument, NotCoprime or InconsistentPresentation.
MetacyclicGroup make_group(u64 m, u64 n, u64 k);

/// Normal form a^i b^j.
struct GroupElement {
    u64 i = 0;
    u64 j = 0;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// (a^i b^j)(a^i' b^j') = a^{i + i' k^{-j}} b^{j + j'}.
GroupElement multiply(const MetacyclicGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement power(const MetacyclicGroup& g, GroupElement x, u64 e);

/// All m*n elements, index i*n + j.
std::vector<GroupElement> elements(const MetacyclicGroup& g);

}  // namespace fqrep
