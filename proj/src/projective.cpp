#include "paley4/projective.hpp"

#include <cassert>

namespace paley4 {

ProjPoint proj_normalize(const Field& f, const FieldElement& a, const FieldElement& b) {
    if (f.is_zero(a) && f.is_zero(b)) throw ZeroVector("projective point from (0,0)");
    if (f.is_zero(b)) return {{f.one(), f.zero()}};
    return {{f.mul(a, f.inv(b)), f.one()}};
}

FieldElement det_pair(const Field& f, const FieldPair& u, const FieldPair& v) {
    return f.sub(f.mul(u.first, v.second), f.mul(u.second, v.first));
}

int s_value_pairs(const Field& f, const FieldPair& a, const FieldPair& b,
                  const FieldPair& c, const FieldPair& d) {
    const FieldPair* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (f.is_zero(det_pair(f, *pts[i], *pts[j]))) return 0;
    FieldElement prod = f.mul(f.mul(det_pair(f, a, b), det_pair(f, b, c)),
                              f.mul(det_pair(f, c, d), det_pair(f, d, a)));
    return f.chi(prod);
}

int s_value(const Field& f, const ProjPoint& a, const ProjPoint& b,
            const ProjPoint& c, const ProjPoint& d) {
    return s_value_pairs(f, a.rep, b.rep, c.rep, d.rep);
}

PglElement pgl_element(const Field& f, const FieldElement& a, const FieldElement& b,
                       const FieldElement& c, const FieldElement& d) {
    const FieldElement det = f.sub(f.mul(a, d), f.mul(b, c));
    if (f.is_zero(det)) throw Error("matrix is singular");
    const FieldElement* entries[4] = {&a, &b, &c, &d};
    FieldElement scale = f.one();
    for (const FieldElement* e : entries) {
        if (!f.is_zero(*e)) {
            scale = f.inv(*e);
            break;
        }
    }
    return {f.mul(a, scale), f.mul(b, scale), f.mul(c, scale), f.mul(d, scale)};
}

ProjPoint pgl_apply(const Field& f, const PglElement& m, const ProjPoint& x) {
    const auto& [u1, u2] = x.rep;
    return proj_normalize(f, f.add(f.mul(m.a, u1), f.mul(m.b, u2)),
                          f.add(f.mul(m.c, u1), f.mul(m.d, u2)));
}

std::vector<PglElement> pgl_enumerate(const Field& f, std::uint64_t cap) {
    const std::uint64_t q = f.order();
    if (q > cap)
        throw CapExceeded("PGL enumeration capped at q = " + std::to_string(cap));

    // Normalized representatives directly: either a = 1 (b, c, d free,
    // det != 0), or a = 0, b = 1 (then det = -c, so c != 0).
    std::vector<PglElement> out;
    out.reserve(q * q * q - q);
    const FieldElement one = f.one(), zero = f.zero();
    for (std::uint64_t bi = 0; bi < q; ++bi)
        for (std::uint64_t ci = 0; ci < q; ++ci)
            for (std::uint64_t di = 0; di < q; ++di) {
                const FieldElement b = f.element_at(bi), c = f.element_at(ci),
                                   d = f.element_at(di);
                if (!f.is_zero(f.sub(d, f.mul(b, c)))) out.push_back({one, b, c, d});
            }
    for (std::uint64_t ci = 1; ci < q; ++ci)
        for (std::uint64_t di = 0; di < q; ++di)
            out.push_back({zero, one, f.element_at(ci), f.element_at(di)});
    assert(out.size() == q * q * q - q);
    return out;
}

ProjectiveLine::ProjectiveLine(Field f) : field_(std::move(f)) {
    const std::uint64_t q = field_.order();
    pairs_.reserve(q + 1);
    for (std::uint64_t i = 0; i < q; ++i) pairs_.push_back({field_.element_at(i), field_.one()});
    pairs_.push_back({field_.one(), field_.zero()});

    const std::size_t m = pairs_.size();
    chi_d_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            chi_d_[i * m + j] =
                static_cast<signed char>(field_.chi(det_pair(field_, pairs_[i], pairs_[j])));
}

ProjPoint ProjectiveLine::point_at(int index) const {
    assert(index >= 0 && index < n());
    return {pairs_[index]};
}

int ProjectiveLine::index_of(const ProjPoint& p) const {
    if (field_.is_zero(p.rep.second)) return n() - 1;
    return static_cast<int>(field_.index_of(p.rep.first));
}

std::vector<int> ProjectiveLine::permutation(const PglElement& m) const {
    std::vector<int> perm(n());
    for (int i = 0; i < n(); ++i) perm[i] = index_of(pgl_apply(field_, m, point_at(i)));
    return perm;
}

} // namespace paley4
