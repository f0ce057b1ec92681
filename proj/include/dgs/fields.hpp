#ifndef DGS_FIELDS_HPP
#define DGS_FIELDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dgs/error.hpp"

namespace dgs {

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw SingularMatrixError("zero has no inverse");
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return ((t % p) + p) % p;
}

// Legendre symbol via Euler's criterion: a^((p-1)/2) mod p.
inline int legendre(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    const std::int64_t r = mod_pow(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// F_{p^e} as F_p[X]/(modulus); coefficients ascending, modulus monic of
// degree e. For e=1 the modulus is X itself.
struct FieldSpec {
    std::int64_t p = 2;
    int e = 1;
    std::vector<std::int64_t> modulus;  // e+1 coefficients, ascending

    static FieldSpec prime_field(std::int64_t p) {
        FieldSpec f;
        f.p = p;
        f.e = 1;
        f.modulus = {0, 1};
        f.validate();
        return f;
    }

    static FieldSpec extension(std::int64_t p, std::vector<std::int64_t> modulus_coeffs) {
        FieldSpec f;
        f.p = p;
        f.modulus = std::move(modulus_coeffs);
        f.e = static_cast<int>(f.modulus.size()) - 1;
        f.validate();
        return f;
    }

    void validate() const {
        if (!is_prime(p)) throw BadPrimeError("characteristic must be prime");
        if (e < 1 || e > 4) throw ParseError("extension degree supported for 1 <= e <= 4");
        if (static_cast<int>(modulus.size()) != e + 1 || modulus[static_cast<std::size_t>(e)] % p == 0)
            throw ParseError("modulus must be monic of degree e");
        if (e > 1 && !irreducible()) throw ParseError("modulus is reducible over F_p");
    }

    bool operator==(const FieldSpec& other) const = default;

private:
    // Trial root / factor search; the degrees in play are tiny.
    bool irreducible() const {
        if (e <= 1) return true;
        for (std::int64_t r = 0; r < p; ++r) {
            std::int64_t val = 0;
            for (int i = e; i >= 0; --i) val = (val * r + modulus[static_cast<std::size_t>(i)]) % p;
            if (val % p == 0) return false;
        }
        if (e < 4) return true;  // degree 2,3: no roots implies irreducible
        // degree 4: also exclude a product of two irreducible quadratics
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                for (std::int64_t d = 0; d < p; ++d)
                    for (std::int64_t f = 0; f < p; ++f) {
                        // (x^2+bx+c)(x^2+dx+f) compared to the monic modulus
                        const std::int64_t inv_lead = mod_inverse(modulus[4], p);
                        auto m = [&](int i) { return modulus[static_cast<std::size_t>(i)] % p * inv_lead % p; };
                        if ((b + d) % p == m(3) && (c + f + b * d) % p == m(2) &&
                            (b * f + c * d) % p == m(1) && (c * f) % p == m(0))
                            return false;
                    }
        return true;
    }
};

// Element of F_{p^e} in polynomial residue representation.
struct FieldElem {
    std::vector<std::int64_t> coeffs;  // length e, each in [0,p)

    bool operator==(const FieldElem& other) const = default;
    bool is_zero() const {
        for (auto c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

class Field {
public:
    explicit Field(FieldSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

    const FieldSpec& spec() const { return spec_; }
    std::int64_t characteristic() const { return spec_.p; }
    int extension_degree() const { return spec_.e; }

    FieldElem zero() const { return {std::vector<std::int64_t>(static_cast<std::size_t>(spec_.e), 0)}; }
    FieldElem one() const {
        FieldElem x = zero();
        x.coeffs[0] = 1;
        return x;
    }

    FieldElem from_int(std::int64_t v) const {
        FieldElem x = zero();
        x.coeffs[0] = ((v % spec_.p) + spec_.p) % spec_.p;
        return x;
    }

    FieldElem from_coeffs(std::vector<std::int64_t> c) const {
        if (static_cast<int>(c.size()) > spec_.e) throw ParseError("too many coefficients for field element");
        FieldElem x = zero();
        for (std::size_t i = 0; i < c.size(); ++i) x.coeffs[i] = ((c[i] % spec_.p) + spec_.p) % spec_.p;
        return x;
    }

    FieldElem add(const FieldElem& a, const FieldElem& b) const {
        FieldElem r = zero();
        for (int i = 0; i < spec_.e; ++i)
            r.coeffs[static_cast<std::size_t>(i)] =
                (a.coeffs[static_cast<std::size_t>(i)] + b.coeffs[static_cast<std::size_t>(i)]) % spec_.p;
        return r;
    }

    FieldElem sub(const FieldElem& a, const FieldElem& b) const {
        FieldElem r = zero();
        for (int i = 0; i < spec_.e; ++i)
            r.coeffs[static_cast<std::size_t>(i)] =
                ((a.coeffs[static_cast<std::size_t>(i)] - b.coeffs[static_cast<std::size_t>(i)]) % spec_.p + spec_.p) %
                spec_.p;
        return r;
    }

    FieldElem neg(const FieldElem& a) const { return sub(zero(), a); }

    FieldElem mul(const FieldElem& a, const FieldElem& b) const {
        const int e = spec_.e;
        std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * e - 1), 0);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] +
                     a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)]) %
                    spec_.p;
        // reduce mod the monic modulus
        const std::int64_t inv_lead = mod_inverse(spec_.modulus[static_cast<std::size_t>(e)], spec_.p);
        for (int d = 2 * e - 2; d >= e; --d) {
            const std::int64_t c = prod[static_cast<std::size_t>(d)] % spec_.p * inv_lead % spec_.p;
            if (c == 0) continue;
            for (int i = 0; i <= e; ++i) {
                const int idx = d - e + i;
                prod[static_cast<std::size_t>(idx)] =
                    ((prod[static_cast<std::size_t>(idx)] - c * spec_.modulus[static_cast<std::size_t>(i)]) % spec_.p +
                     spec_.p) %
                    spec_.p;
            }
        }
        FieldElem r = zero();
        for (int i = 0; i < e; ++i) r.coeffs[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
        return r;
    }

    FieldElem inverse(const FieldElem& a) const {
        if (a.is_zero()) throw SingularMatrixError("zero has no inverse");
        // a^(q-2) with q = p^e
        std::int64_t q = 1;
        for (int i = 0; i < spec_.e; ++i) q *= spec_.p;
        FieldElem result = one(), base = a;
        std::int64_t exp = q - 2;
        while (exp > 0) {
            if (exp & 1) result = mul(result, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return result;
    }

    std::string format(const FieldElem& a) const {
        if (spec_.e == 1) return std::to_string(a.coeffs[0]);
        std::string s = "[";
        for (int i = 0; i < spec_.e; ++i) {
            if (i) s += ",";
            s += std::to_string(a.coeffs[static_cast<std::size_t>(i)]);
        }
        return s + "]";
    }

private:
    FieldSpec spec_;
};

}  // namespace dgs

#endif
