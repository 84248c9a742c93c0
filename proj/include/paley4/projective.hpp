#pragma once

#include <cstdint>
#include <vector>

#include "paley4/field.hpp"

namespace paley4 {

// Point [a:b] of the projective line over F_q, held in canonical form:
// (x, 1) for the affine points, (1, 0) for the point at infinity.
struct ProjPoint {
    FieldPair rep;
    bool operator==(const ProjPoint&) const = default;
};

// Canonical representative of [a:b]; throws ZeroVector on (0,0).
ProjPoint proj_normalize(const Field& f, const FieldElement& a, const FieldElement& b);

// D((u1,u2),(v1,v2)) = u1 v2 - u2 v1. Antisymmetric, bilinear, not constant
// on projective classes.
FieldElement det_pair(const Field& f, const FieldPair& u, const FieldPair& v);

// S(a,b,c,d) = chi(D(a,b) D(b,c) D(c,d) D(d,a)) on raw pairs. The fourth
// factor is the cyclic D(d,a): with chi(-1) = -1 this is the convention under
// which the Paley 4-graph below has (q+1)/4 edges through every triple.
// Returns 0 whenever two arguments coincide projectively.
int s_value_pairs(const Field& f, const FieldPair& a, const FieldPair& b,
                  const FieldPair& c, const FieldPair& d);
int s_value(const Field& f, const ProjPoint& a, const ProjPoint& b,
            const ProjPoint& c, const ProjPoint& d);

// Scalar class of an invertible 2x2 matrix over F_q, stored with the first
// nonzero entry (in a,b,c,d order) normalized to 1.
struct PglElement {
    FieldElement a, b, c, d;
    bool operator==(const PglElement&) const = default;
};

PglElement pgl_element(const Field& f, const FieldElement& a, const FieldElement& b,
                       const FieldElement& c, const FieldElement& d);

// [u1:u2] -> [a u1 + b u2 : c u1 + d u2]
ProjPoint pgl_apply(const Field& f, const PglElement& m, const ProjPoint& x);

// All q^3 - q scalar classes, duplicate-free, in a fixed deterministic order.
// Throws CapExceeded when q exceeds the cap.
std::vector<PglElement> pgl_enumerate(const Field& f, std::uint64_t cap = 31);

// P^1 F_q with the vertex numbering used by every downstream construction:
// index i < q is [element_at(i) : 1], index q is [1:0]. Precomputes the
// chi(D(.,.)) table so S on vertex indices is four table lookups.
class ProjectiveLine {
public:
    explicit ProjectiveLine(Field f);

    const Field& field() const { return field_; }
    int n() const { return static_cast<int>(field_.order()) + 1; }

    ProjPoint point_at(int index) const;
    int index_of(const ProjPoint& p) const;
    const FieldPair& pair_at(int index) const { return pairs_[index]; }

    int chi_d(int i, int j) const { return chi_d_[static_cast<std::size_t>(i) * pairs_.size() + j]; }

    // 0 when any two indices coincide.
    int s_value(int a, int b, int c, int d) const {
        if (a == b || a == c || a == d || b == c || b == d || c == d) return 0;
        return chi_d(a, b) * chi_d(b, c) * chi_d(c, d) * chi_d(d, a);
    }

    // Vertex permutation induced by a group element.
    std::vector<int> permutation(const PglElement& m) const;

private:
    Field field_;
    std::vector<FieldPair> pairs_;
    std::vector<signed char> chi_d_;
};

} // namespace paley4
