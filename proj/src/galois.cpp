#include "freedist/galois.hpp"

#include <algorithm>

namespace freedist::galois {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense coefficient vectors over F_p, low -> high, used only for validation
// and table construction. Not performance relevant.
using Digits = std::vector<std::uint32_t>;

int deg(const Digits& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// f mod g over F_p, g monic of positive degree.
Digits mod(Digits f, const Digits& g, std::uint32_t p) {
    const int dg = deg(g);
    for (int d = deg(f); d >= dg; d = deg(f)) {
        const std::uint32_t c = f[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        for (int i = 0; i <= dg; ++i) {
            auto& fi = f[static_cast<std::size_t>(d - dg + i)];
            fi = (fi + c * (p - g[static_cast<std::size_t>(i)] % p)) % p;
        }
    }
    return f;
}

bool divides(const Digits& g, const Digits& f, std::uint32_t p) {
    return deg(mod(f, g, p)) < 0;
}

}  // namespace

void Field::validate(const FieldSpec& spec) {
    if (!is_prime(spec.p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.m < 1) throw UnsupportedField("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec.m; ++i) {
        q *= spec.p;
        if (q > (1ull << 16)) throw UnsupportedField("field order exceeds 2^16");
    }
    if (spec.m == 1) {
        // A modulus is pointless but tolerated if it is a monic linear polynomial.
        if (!spec.modulus.empty()) {
            if (spec.modulus.size() != 2 || spec.modulus[1] % spec.p != 1)
                throw ReducibleModulus("prime field modulus must be monic of degree 1 when given");
        }
        return;
    }
    if (spec.modulus.empty()) throw MissingModulus("extension field requires a modulus polynomial");
    if (spec.modulus.size() != spec.m + 1)
        throw ReducibleModulus("modulus must have degree m = " + std::to_string(spec.m));
    for (auto c : spec.modulus)
        if (c >= spec.p) throw ReducibleModulus("modulus coefficient out of range [0, p)");
    if (spec.modulus.back() != 1) throw ReducibleModulus("modulus must be monic");

    // Exhaustive trial division by every monic polynomial of degree <= m/2.
    // m <= 16 here, so there are at most p^(m/2) <= 256 candidates.
    Digits modulus(spec.modulus.begin(), spec.modulus.end());
    for (std::uint32_t d = 1; d <= spec.m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= spec.p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % spec.p);
                t /= spec.p;
            }
            g[d] = 1;
            if (divides(g, modulus, spec.p)) throw ReducibleModulus("modulus has a factor of degree " + std::to_string(d));
        }
    }
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    validate(spec_);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) q *= spec_.p;
    q_ = static_cast<std::uint32_t>(q);

    if (q_ <= 256) {
        tables_ = true;
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        neg_table_.resize(q_);
        inv_table_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = add_nocache(static_cast<Elem>(a), static_cast<Elem>(b));
                mul_table_[a * q_ + b] = mul_nocache(static_cast<Elem>(a), static_cast<Elem>(b));
            }
        }
        for (std::uint32_t a = 0; a < q_; ++a) {
            Elem na = 0;
            for (std::uint32_t b = 0; b < q_; ++b)
                if (add_table_[a * q_ + b] == 0) na = static_cast<Elem>(b);
            neg_table_[a] = na;
            if (a != 0) {
                for (std::uint32_t b = 1; b < q_; ++b)
                    if (mul_table_[a * q_ + b] == 1) inv_table_[a] = static_cast<Elem>(b);
            }
        }
    }
}

Elem Field::add_nocache(Elem a, Elem b) const {
    if (spec_.m == 1) return static_cast<Elem>((a + b) % spec_.p);
    Elem r = 0;
    std::uint32_t pw = 1;
    std::uint32_t av = a, bv = b;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        const std::uint32_t da = av % spec_.p, db = bv % spec_.p;
        r = static_cast<Elem>(r + ((da + db) % spec_.p) * pw);
        av /= spec_.p;
        bv /= spec_.p;
        pw *= spec_.p;
    }
    return r;
}

Elem Field::mul_nocache(Elem a, Elem b) const {
    if (spec_.m == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % spec_.p);
    // Schoolbook product of the residue polynomials, then reduction by the
    // modulus. m is tiny so this is plenty fast for table construction.
    std::vector<std::uint32_t> da(spec_.m), db(spec_.m), prod(2 * spec_.m - 1, 0);
    std::uint32_t av = a, bv = b;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        da[i] = av % spec_.p;
        db[i] = bv % spec_.p;
        av /= spec_.p;
        bv /= spec_.p;
    }
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < spec_.m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % spec_.p;
    }
    // Reduce degrees >= m using z^m = -(modulus minus leading term).
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(spec_.m); --d) {
        const std::uint32_t c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (std::uint32_t i = 0; i < spec_.m; ++i) {
            auto& t = prod[static_cast<std::size_t>(d) - spec_.m + i];
            t = (t + c * ((spec_.p - spec_.modulus[i] % spec_.p) % spec_.p)) % spec_.p;
        }
    }
    Elem r = 0;
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        r = static_cast<Elem>(r + prod[i] * pw);
        pw *= spec_.p;
    }
    return r;
}

Elem Field::pow_nocache(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul_nocache(r, base);
        base = mul_nocache(base, base);
        e >>= 1;
    }
    return r;
}

Elem Field::add(Elem a, Elem b) const {
    if (tables_) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_nocache(a, b);
}

Elem Field::neg(Elem a) const {
    if (tables_) return neg_table_[a];
    if (spec_.m == 1) return static_cast<Elem>((spec_.p - a) % spec_.p);
    Elem r = 0;
    std::uint32_t pw = 1, av = a;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        r = static_cast<Elem>(r + ((spec_.p - av % spec_.p) % spec_.p) * pw);
        av /= spec_.p;
        pw *= spec_.p;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (tables_) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_nocache(a, b);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (tables_) return inv_table_[a];
    return pow_nocache(a, q_ - 2);  // a^(q-2) = a^(-1) in F_q*
}

Elem Field::div(Elem a, Elem b) const {
    if (b == 0) throw DivisionByZero("division by zero");
    return mul(a, inv(b));
}

bool Field::same_field(const Field& other) const {
    return spec_.p == other.spec_.p && spec_.m == other.spec_.m && spec_.modulus == other.spec_.modulus;
}

}  // namespace freedist::galois
