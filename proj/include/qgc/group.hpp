#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgc {

// A group element is its canonical index in [0, |G|).  Abelian groups are
// indexed mixed-radix little-endian over the invariant factors; dihedral
// groups list x^0..x^{n-1} then x^0 y..x^{n-1} y.
using Gel = std::uint32_t;

enum class GroupKind { abelian, dihedral };

class Group {
  public:
    GroupKind kind = GroupKind::abelian;
    std::vector<std::uint32_t> factors;  // invariant factors; empty = trivial group
    std::uint32_t rotation = 0;          // dihedral: order n of the rotation subgroup
    std::uint32_t order = 1;

    Group() = default;

    static Group abelian(std::vector<std::uint32_t> invariant_factors) {
        Group g;
        g.kind = GroupKind::abelian;
        std::uint64_t n = 1;
        for (auto f : invariant_factors) {
            if (f < 2) throw std::invalid_argument("invariant factors must be >= 2");
            n *= f;
            if (n > (1u << 20)) throw std::invalid_argument("group order too large");
        }
        g.factors = std::move(invariant_factors);
        g.order = static_cast<std::uint32_t>(n);
        g.init_table();
        return g;
    }

    static Group cyclic(std::uint32_t n) {
        if (n == 1) return abelian({});
        return abelian({n});
    }

    static Group dihedral(std::uint32_t n) {
        if (n <= 1) throw std::invalid_argument("dihedral rotation order must be > 1");
        Group g;
        g.kind = GroupKind::dihedral;
        g.rotation = n;
        g.order = 2 * n;
        if (g.order > (1u << 20)) throw std::invalid_argument("group order too large");
        g.init_table();
        return g;
    }

    bool same(const Group& o) const {
        return kind == o.kind && factors == o.factors && rotation == o.rotation;
    }

    bool is_abelian() const { return kind == GroupKind::abelian; }

    Gel identity() const { return 0; }

    Gel mul(Gel a, Gel b) const {
        check(a);
        check(b);
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order + b];
        return mul_slow(a, b);
    }

    Gel inv(Gel a) const {
        check(a);
        if (kind == GroupKind::dihedral) {
            std::uint32_t i = a % rotation, flip = a / rotation;
            if (flip) return a;  // (x^i y)^2 = 1
            return i ? rotation - i : 0;
        }
        std::vector<std::uint32_t> d = decode(a);
        for (std::size_t j = 0; j < d.size(); ++j)
            if (d[j]) d[j] = factors[j] - d[j];
        return encode(d);
    }

    // rho_g(j) = index of g * x_j
    std::vector<Gel> cayley_permutation(Gel g) const {
        std::vector<Gel> rho(order);
        for (Gel j = 0; j < order; ++j) rho[j] = mul(g, j);
        return rho;
    }

    // abelian decode: mixed-radix little-endian digit vector
    std::vector<std::uint32_t> decode(Gel a) const {
        if (kind != GroupKind::abelian) throw std::logic_error("decode is for abelian groups");
        std::vector<std::uint32_t> d(factors.size());
        for (std::size_t j = 0; j < factors.size(); ++j) {
            d[j] = a % factors[j];
            a /= factors[j];
        }
        return d;
    }
    Gel encode(const std::vector<std::uint32_t>& d) const {
        Gel a = 0;
        for (std::size_t j = factors.size(); j-- > 0;) a = a * factors[j] + d[j] % factors[j];
        return a;
    }

    // dihedral decode: (i, b) meaning x^i y^b
    std::pair<std::uint32_t, std::uint32_t> decode_dihedral(Gel a) const {
        if (kind != GroupKind::dihedral) throw std::logic_error("decode_dihedral is for dihedral groups");
        return {a % rotation, a / rotation};
    }

    std::uint32_t exponent() const {
        if (kind == GroupKind::dihedral) return rotation % 2 ? 2 * rotation : std::lcm(rotation, 2u);
        std::uint32_t l = 1;
        for (auto f : factors) l = std::lcm(l, f);
        return l;
    }

  private:
    static constexpr std::uint32_t kTableCap = 512;
    std::vector<Gel> table_;

    void check(Gel a) const {
        if (a >= order) throw std::out_of_range("group element index out of range");
    }

    Gel mul_slow(Gel a, Gel b) const {
        if (kind == GroupKind::abelian) {
            std::vector<std::uint32_t> da = decode(a), db = decode(b);
            for (std::size_t j = 0; j < da.size(); ++j) da[j] = (da[j] + db[j]) % factors[j];
            return encode(da);
        }
        // (x^i y^s)(x^j y^t): move y^s across x^j via y x^j = x^{-j} y
        auto [i, s] = std::pair<std::uint32_t, std::uint32_t>{a % rotation, a / rotation};
        auto [j, t] = std::pair<std::uint32_t, std::uint32_t>{b % rotation, b / rotation};
        std::uint32_t rot = s ? (i + rotation - j % rotation) % rotation : (i + j) % rotation;
        std::uint32_t flip = (s + t) % 2;
        return rot + flip * rotation;
    }

    void init_table() {
        if (order > kTableCap) return;
        table_.resize(static_cast<std::size_t>(order) * order);
        for (Gel a = 0; a < order; ++a)
            for (Gel b = 0; b < order; ++b) table_[static_cast<std::size_t>(a) * order + b] = mul_slow(a, b);
    }
};

// CLI group literals: "c:n1xn2x..." for abelian, "d:n" for dihedral.
inline Group parse_group(const std::string& lit) {
    if (lit.size() < 2 || lit[1] != ':') throw std::invalid_argument("group literal must be c:... or d:n");
    if (lit[0] == 'd') return Group::dihedral(static_cast<std::uint32_t>(std::stoul(lit.substr(2))));
    if (lit[0] != 'c') throw std::invalid_argument("unknown group kind in literal");
    std::vector<std::uint32_t> fs;
    std::size_t pos = 2;
    while (pos < lit.size()) {
        std::size_t x = lit.find('x', pos);
        std::string part = lit.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
        std::uint32_t f = static_cast<std::uint32_t>(std::stoul(part));
        if (f != 1) fs.push_back(f);  // "c:1" denotes the trivial group
        pos = x == std::string::npos ? lit.size() : x + 1;
    }
    return Group::abelian(std::move(fs));
}

inline std::string group_literal(const Group& g) {
    if (g.kind == GroupKind::dihedral) return "d:" + std::to_string(g.rotation);
    if (g.factors.empty()) return "c:1";
    std::string s = "c:";
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(g.factors[i]);
    }
    return s;
}

}  // namespace qgc
