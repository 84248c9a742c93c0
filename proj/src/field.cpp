#include "paley4/field.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace paley4 {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Built-in monic irreducible moduli, constant term first. Fixed constants so
// vertex numbering is reproducible across runs (see README).
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>&
builtin_moduli() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> t = {
        {{3, 3}, {1, 2, 0, 1}},        // x^3 + 2x + 1
        {{3, 5}, {1, 2, 0, 0, 0, 1}},  // x^5 + 2x + 1
        {{7, 3}, {2, 0, 0, 1}},        // x^3 + 2
        {{11, 3}, {4, 1, 0, 1}},       // x^3 + x + 4
    };
    return t;
}

int poly_degree(const std::vector<std::uint32_t>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

// a mod b over GF(p); b monic-leading not required (leading coeff inverted).
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b, std::uint32_t p) {
    const int db = poly_degree(b);
    assert(db >= 0);
    const std::uint64_t lead_inv = powmod(b[db], p - 2, p);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const std::uint64_t c = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * b[i] % p;
            a[da - db + i] = static_cast<std::uint32_t>((a[da - db + i] + p - t) % p);
        }
        assert(a[da] == 0);
    }
    return a;
}

} // namespace

bool polynomial_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    const int deg = poly_degree(poly);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    std::vector<std::uint32_t> divisor;
    for (int d = 1; d <= deg / 2; ++d) {
        divisor.assign(d + 1, 0);
        divisor[d] = 1;
        // walk all p^d choices of the lower coefficients
        while (true) {
            if (poly_degree(poly_mod(poly, divisor, p)) < 0) return false;
            int i = 0;
            while (i < d && divisor[i] == p - 1) divisor[i++] = 0;
            if (i == d) break;
            ++divisor[i];
        }
    }
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t ell,
                  std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p) || p == 2)
        throw NonPrimeCharacteristic("characteristic must be an odd prime, got " + std::to_string(p));
    if (ell < 1) throw Error("extension degree must be >= 1");

    Field f;
    f.p_ = p;
    f.ell_ = ell;
    f.q_ = 1;
    for (std::uint32_t i = 0; i < ell; ++i) {
        if (f.q_ > (std::uint64_t{1} << 40) / p)
            throw Error("field order p^ell too large");
        f.q_ *= p;
    }

    if (modulus) {
        if (modulus->size() != ell + 1)
            throw Error("modulus must have degree ell (coefficient list of length ell+1)");
        for (auto& c : *modulus) c %= p;
        if (modulus->back() != 1) throw Error("modulus must be monic");
        if (ell > 1 && !polynomial_irreducible(*modulus, p))
            throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p) + ")");
        f.modulus_ = std::move(*modulus);
    } else if (ell == 1) {
        f.modulus_ = {0, 1}; // x; unused by prime-field arithmetic
    } else {
        auto it = builtin_moduli().find({p, ell});
        if (it == builtin_moduli().end())
            throw NoBuiltinModulus("no built-in modulus for GF(" + std::to_string(p) + "^" +
                                   std::to_string(ell) + "); pass one explicitly");
        f.modulus_ = it->second;
    }
    return f;
}

FieldElement Field::zero() const { return {std::vector<std::uint32_t>(ell_, 0)}; }

FieldElement Field::one() const {
    FieldElement e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement Field::minus_one() const {
    FieldElement e = zero();
    e.coeffs[0] = p_ - 1;
    return e;
}

FieldElement Field::element_at(std::uint64_t index) const {
    assert(index < q_);
    FieldElement e = zero();
    for (int i = static_cast<int>(ell_) - 1; i >= 0; --i) {
        e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t Field::index_of(const FieldElement& a) const {
    assert(a.coeffs.size() == ell_);
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < ell_; ++i) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    assert(a.coeffs.size() == ell_ && b.coeffs.size() == ell_);
    FieldElement r = a;
    for (std::uint32_t i = 0; i < ell_; ++i) r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % p_;
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    assert(a.coeffs.size() == ell_ && b.coeffs.size() == ell_);
    FieldElement r = a;
    for (std::uint32_t i = 0; i < ell_; ++i) r.coeffs[i] = (r.coeffs[i] + p_ - b.coeffs[i]) % p_;
    return r;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    assert(a.coeffs.size() == ell_ && b.coeffs.size() == ell_);
    if (ell_ == 1)
        return {{static_cast<std::uint32_t>(std::uint64_t{a.coeffs[0]} * b.coeffs[0] % p_)}};

    std::vector<std::uint64_t> prod(2 * ell_ - 1, 0);
    for (std::uint32_t i = 0; i < ell_; ++i)
        for (std::uint32_t j = 0; j < ell_; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p_;

    // reduce with x^ell = -(m0 + m1 x + ... + m_{ell-1} x^{ell-1})
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(ell_); --d) {
        const std::uint64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < ell_; ++i)
            prod[d - ell_ + i] = (prod[d - ell_ + i] + (p_ - modulus_[i] % p_) * c) % p_;
    }
    FieldElement r = zero();
    for (std::uint32_t i = 0; i < ell_; ++i) r.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
}

FieldElement Field::pow(FieldElement base, std::uint64_t e) const {
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement Field::inv(const FieldElement& a) const {
    if (is_zero(a)) throw ZeroInverse("inverse of zero");
    return pow(a, q_ - 2);
}

bool Field::is_zero(const FieldElement& a) const {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

int Field::chi_generic(const FieldElement& a) const {
    if (is_zero(a)) return 0;
    const FieldElement r = pow(a, (q_ - 1) / 2);
    if (r == one()) return 1;
    assert(r == minus_one());
    return -1;
}

int Field::chi(const FieldElement& a) const {
    if (ell_ == 1) {
        if (a.coeffs[0] == 0) return 0;
        return powmod(a.coeffs[0], (p_ - 1) / 2, p_) == 1 ? 1 : -1;
    }
    return chi_generic(a);
}

std::string Field::describe() const {
    if (ell_ == 1) return "GF(" + std::to_string(q_) + ")";
    return "GF(" + std::to_string(q_) + ") = GF(" + std::to_string(p_) + "^" +
           std::to_string(ell_) + ")";
}

} // namespace paley4
