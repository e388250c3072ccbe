#include "freedist/poly.hpp"

#include <algorithm>
#include <cassert>

namespace freedist {

using galois::Elem;
using galois::Field;

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    r.trim();
    return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    r.trim();
    return r;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

PolyDivMod poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    PolyDivMod out;
    out.rem = a;
    const int db = b.degree();
    if (a.degree() < db) return out;
    out.quot.c.assign(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const Elem lead_inv = F.inv(b.c.back());
    while (!out.rem.is_zero() && out.rem.degree() >= db) {
        const int d = out.rem.degree();
        const Elem f = F.mul(out.rem.c.back(), lead_inv);
        out.quot.c[static_cast<std::size_t>(d - db)] = f;
        for (int i = 0; i <= db; ++i) {
            auto& t = out.rem.c[static_cast<std::size_t>(d - db + i)];
            t = F.sub(t, F.mul(f, b.coeff(i)));
        }
        out.rem.trim();
    }
    out.quot.trim();
    return out;
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    Poly r = a;
    const Elem s = F.inv(a.c.back());
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(F, a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_shift(const Poly& a, int shift) {
    if (a.is_zero() || shift == 0) return a;
    assert(shift > 0);
    Poly r;
    r.c.assign(a.c.size() + static_cast<std::size_t>(shift), 0);
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + shift);
    return r;
}

Poly poly_reverse(const Poly& a, int target) {
    assert(a.degree() <= target);
    Poly r;
    r.c.assign(static_cast<std::size_t>(target) + 1, 0);
    for (int d = 0; d <= a.degree(); ++d) r.c[static_cast<std::size_t>(target - d)] = a.coeff(d);
    r.trim();
    return r;
}

int poly_weight(const Poly& a) {
    int w = 0;
    for (auto x : a.c) w += (x != 0);
    return w;
}

int poly_weight(const PolyVector& v) {
    int w = 0;
    for (const auto& p : v) w += poly_weight(p);
    return w;
}

}  // namespace freedist
