#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paley4/errors.hpp"

namespace paley4 {

// Element of GF(p^ell) as a coefficient vector of length ell, constant term
// first, every entry reduced mod p. Arithmetic lives on Field; elements are
// plain data.
struct FieldElement {
    std::vector<std::uint32_t> coeffs;
    bool operator==(const FieldElement&) const = default;
};

using FieldPair = std::pair<FieldElement, FieldElement>;

// GF(p^ell) for odd prime p, realized as GF(p)[x] modulo a monic irreducible
// polynomial of degree ell (for ell = 1 the modulus is x and plays no role).
//
// Canonical element order: lexicographic on the coefficient vector read
// constant-term first, i.e. index = sum_i coeffs[i] * p^(ell-1-i). Vertex
// numbering everywhere downstream depends on this order.
class Field {
public:
    // modulus: coefficient list, constant term first, length ell+1, monic.
    // When omitted and ell > 1, a built-in table supplies one for
    // (p,ell) in {(3,3), (3,5), (7,3), (11,3)}.
    static Field make(std::uint32_t p, std::uint32_t ell = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return ell_; }
    std::uint64_t order() const { return q_; }
    bool paley_admissible() const { return q_ % 4 == 3; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement minus_one() const;

    FieldElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const; // throws ZeroInverse
    FieldElement pow(FieldElement base, std::uint64_t e) const;

    bool is_zero(const FieldElement& a) const;

    // Square character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    // Dispatches to the Euler-criterion fast path on prime fields; the
    // generic square-and-multiply path is exposed separately so tests can
    // check the two agree.
    int chi(const FieldElement& a) const;
    int chi_generic(const FieldElement& a) const;

    std::string describe() const; // e.g. "GF(27) = GF(3^3)"

private:
    Field() = default;
    std::uint32_t p_ = 0;
    std::uint32_t ell_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

// True iff the monic polynomial (constant term first) is irreducible over
// GF(p), by trial division against all monic polynomials of degree <= deg/2.
bool polynomial_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

} // namespace paley4
