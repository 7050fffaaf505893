#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgc/bigint.hpp"

namespace qgc {

// A field element is its canonical index in [0, q): the coefficient vector
// (c_0,...,c_{e-1}) over F_p read as the base-p integer sum c_i p^i.
using Fel = std::uint32_t;

constexpr std::uint64_t kMaxFieldOrder = 1u << 20;

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class Fq;
Fq make_field(std::uint64_t p, unsigned e);

// F_q with q = p^e. Arithmetic on canonical indices; multiplication and
// inversion tables are precomputed for small q.
class Fq {
  public:
    std::uint32_t p = 2;
    unsigned e = 1;
    std::uint64_t q = 2;
    std::vector<Fel> modulus;  // digits over F_p, length e+1, monic; empty when e == 1

    Fq() = default;

    explicit Fq(std::uint64_t p_) : Fq(p_, 1, {}) {}

    Fq(std::uint64_t p_, unsigned e_, std::vector<Fel> mod) {
        if (!is_prime_u64(p_)) throw std::invalid_argument("field characteristic must be prime");
        if (e_ < 1) throw std::invalid_argument("field extension degree must be >= 1");
        std::uint64_t order = 1;
        for (unsigned i = 0; i < e_; ++i) {
            order *= p_;
            if (order > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^20");
        }
        p = static_cast<std::uint32_t>(p_);
        e = e_;
        q = order;
        modulus = std::move(mod);
        if (e == 1) {
            if (!modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
        } else {
            if (modulus.size() != e + 1 || modulus[e] != 1)
                throw std::invalid_argument("modulus must be monic of degree e");
            for (Fel c : modulus)
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        }
        if (q <= kTableCap) build_tables();
    }

    bool same(const Fq& o) const { return p == o.p && e == o.e && modulus == o.modulus; }

    std::vector<std::uint32_t> digits(Fel a) const {
        std::vector<std::uint32_t> d(e);
        for (unsigned i = 0; i < e; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }
    Fel from_digits(const std::vector<std::uint32_t>& d) const {
        Fel a = 0;
        for (std::size_t i = d.size(); i-- > 0;) a = static_cast<Fel>(a * p + d[i] % p);
        return a;
    }

    Fel add(Fel a, Fel b) const {
        if (e == 1) {
            std::uint64_t s = static_cast<std::uint64_t>(a) + b;
            return static_cast<Fel>(s >= q ? s - q : s);
        }
        if (p == 2) return a ^ b;
        Fel r = 0, mul = 1;
        for (unsigned i = 0; i < e; ++i) {
            std::uint32_t s = a % p + b % p;
            if (s >= p) s -= p;
            r += s * mul;
            mul *= p;
            a /= p;
            b /= p;
        }
        return r;
    }

    Fel neg(Fel a) const {
        if (e == 1) return a ? static_cast<Fel>(q - a) : 0;
        if (p == 2) return a;
        Fel r = 0, mul = 1;
        for (unsigned i = 0; i < e; ++i) {
            std::uint32_t d = a % p;
            r += (d ? p - d : 0) * mul;
            mul *= p;
            a /= p;
        }
        return r;
    }

    Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }

    Fel mul(Fel a, Fel b) const {
        if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q + b];
        return mul_slow(a, b);
    }

    Fel inv(Fel a) const {
        if (a == 0) throw std::domain_error("inversion of zero field element");
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, q - 2);
    }

    Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }

    Fel pow(Fel a, std::uint64_t k) const {
        Fel r = 1;
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    std::string to_string(Fel a) const {
        if (e == 1) return std::to_string(a);
        static const char* alphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
        if (p > 36) throw std::invalid_argument("comma-free printing needs p <= 36");
        std::string s(e, '0');
        for (unsigned i = 0; i < e; ++i) {
            s[i] = alphabet[a % p];
            a /= p;
        }
        return s;
    }

    Fel parse(const std::string& s) const {
        if (e == 1) {
            std::uint64_t v = std::stoull(s);
            if (v >= q) throw std::invalid_argument("field element out of range: " + s);
            return static_cast<Fel>(v);
        }
        if (s.size() != e) throw std::invalid_argument("element literal must have one digit per coefficient");
        std::vector<std::uint32_t> d(e);
        for (unsigned i = 0; i < e; ++i) {
            char c = s[i];
            std::uint32_t v;
            if (c >= '0' && c <= '9') v = static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'z') v = static_cast<std::uint32_t>(c - 'a' + 10);
            else throw std::invalid_argument("bad digit in field element literal");
            if (v >= p) throw std::invalid_argument("field element digit out of range");
            d[i] = v;
        }
        return from_digits(d);
    }

  private:
    static constexpr std::uint64_t kTableCap = 256;
    std::vector<Fel> mul_table_;
    std::vector<Fel> inv_table_;

    Fel mul_slow(Fel a, Fel b) const {
        if (e == 1) return static_cast<Fel>((static_cast<std::uint64_t>(a) * b) % q);
        // schoolbook product of digit polynomials, reduced by the monic modulus
        std::vector<std::uint32_t> da = digits(a), db = digits(b);
        std::vector<std::uint32_t> prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i) {
            if (!da[i]) continue;
            for (unsigned j = 0; j < e; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
        }
        for (std::size_t d = prod.size(); d-- > e;) {
            std::uint32_t lead = prod[d];
            if (!lead) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < e; ++i) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * modulus[i] % p;
                prod[d - e + i] = static_cast<std::uint32_t>((prod[d - e + i] + p - sub) % p);
            }
        }
        prod.resize(e);
        Fel r = 0;
        for (std::size_t i = prod.size(); i-- > 0;) r = static_cast<Fel>(r * p + prod[i]);
        return r;
    }

    void build_tables() {
        mul_table_.assign(static_cast<std::size_t>(q) * q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = a; b < q; ++b) {
                Fel r = mul_slow(static_cast<Fel>(a), static_cast<Fel>(b));
                mul_table_[a * q + b] = r;
                mul_table_[b * q + a] = r;
            }
        inv_table_.assign(q, 0);
        for (std::uint64_t a = 1; a < q; ++a)
            for (std::uint64_t b = 1; b < q; ++b)
                if (mul_table_[a * q + b] == 1) {
                    inv_table_[a] = static_cast<Fel>(b);
                    break;
                }
    }
};

// ---------------------------------------------------------------------------
// Polynomials over an Fq: coefficient vector low-to-high, no trailing zeros,
// empty vector = zero polynomial.  Degree of zero is the sentinel -1.

using Poly = std::vector<Fel>;
constexpr int kZeroPolyDeg = -1;

inline int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Fel x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Fel x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    poly_trim(r);
    return r;
}

inline Poly poly_scale(const Fq& F, const Poly& a, Fel s) {
    if (s == 0) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
    poly_trim(r);
    return r;
}

inline Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

inline std::pair<Poly, Poly> poly_divmod(const Fq& F, Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, std::move(a)};
    Fel lead_inv = F.inv(b.back());
    Poly quot(a.size() - b.size() + 1, 0);
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        Fel c = F.mul(a[shift + b.size() - 1], lead_inv);
        if (c) {
            quot[shift] = c;
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
        }
    }
    poly_trim(a);
    poly_trim(quot);
    return {std::move(quot), std::move(a)};
}

inline Poly poly_mod(const Fq& F, Poly a, const Poly& b) {
    return poly_divmod(F, std::move(a), b).second;
}

inline Poly poly_monic(const Fq& F, Poly a) {
    if (!a.empty() && a.back() != 1) a = poly_scale(F, a, F.inv(a.back()));
    return a;
}

inline Poly poly_gcd(const Fq& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, std::move(a));
}

// extended gcd: returns (g, u) with u*a == g (mod m); used for inverses.
inline std::pair<Poly, Poly> poly_half_ext_gcd(const Fq& F, Poly a, Poly m) {
    Poly u0{1}, u1{};
    Poly r0 = std::move(a), r1 = std::move(m);
    while (!r1.empty()) {
        auto [quot, rem] = poly_divmod(F, std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly u2 = poly_sub(F, u0, poly_mul(F, quot, u1));
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {std::move(r0), std::move(u0)};
}

inline Fel poly_eval(const Fq& F, const Poly& f, Fel x) {
    Fel r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}

inline Poly poly_mul_mod(const Fq& F, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(F, poly_mul(F, a, b), m);
}

inline Poly poly_pow_mod(const Fq& F, Poly base, const BigUint& exp, const Poly& m) {
    Poly r{1};
    base = poly_mod(F, std::move(base), m);
    std::size_t bits = exp.bit_length();
    for (std::size_t i = 0; i < bits; ++i) {
        if (exp.bit(i)) r = poly_mul_mod(F, r, base, m);
        if (i + 1 < bits) base = poly_mul_mod(F, base, base, m);
    }
    return r;
}

inline Poly poly_pow_mod(const Fq& F, Poly base, std::uint64_t exp, const Poly& m) {
    return poly_pow_mod(F, std::move(base), BigUint{exp}, m);
}

// Irreducibility over F_q: X^{q^d} == X (mod f) and, for every prime l | d,
// gcd(X^{q^{d/l}} - X, f) = 1.
inline bool poly_is_irreducible(const Fq& F, const Poly& f) {
    int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    Poly x{0, 1};
    std::vector<Poly> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = poly_mod(F, x, f);
    for (int i = 1; i <= d; ++i) frob[i] = poly_pow_mod(F, frob[i - 1], F.q, f);
    if (!(frob[d] == frob[0])) return false;
    int rem = d;
    for (int l = 2; l <= rem; ++l) {
        if (rem % l) continue;
        Poly diff = poly_sub(F, frob[d / l], frob[0]);
        if (poly_deg(poly_gcd(F, diff, f)) != 0) return false;
        while (rem % l == 0) rem /= l;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree d, where candidate
// coefficient vectors are ordered by their base-q value with c_0 least
// significant.
inline Poly find_irreducible(const Fq& F, unsigned d) {
    if (d == 0) throw std::invalid_argument("irreducible of degree 0 requested");
    std::vector<Fel> digitv(d, 0);
    while (true) {
        Poly f(digitv.begin(), digitv.end());
        f.push_back(1);
        if (poly_is_irreducible(F, f)) return f;
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++digitv[i] < F.q) break;
            digitv[i] = 0;
        }
        if (i == d) throw std::runtime_error("no irreducible polynomial found");
    }
}

inline Fq make_field(std::uint64_t p, unsigned e) {
    if (e == 1) return Fq(p);
    Fq prime(p);
    Poly mod = find_irreducible(prime, e);
    return Fq(p, e, std::vector<Fel>(mod.begin(), mod.end()));
}

// "p^e" literals, e.g. "2^3"; plain "q" accepted for primes.
inline Fq parse_field(const std::string& lit) {
    auto caret = lit.find('^');
    if (caret == std::string::npos) return make_field(std::stoull(lit), 1);
    std::uint64_t p = std::stoull(lit.substr(0, caret));
    unsigned e = static_cast<unsigned>(std::stoul(lit.substr(caret + 1)));
    return make_field(p, e);
}

inline std::string field_literal(const Fq& F) {
    return std::to_string(F.p) + "^" + std::to_string(F.e);
}

}  // namespace qgc
