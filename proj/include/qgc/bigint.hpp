#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgc {

// Unsigned arbitrary-precision integer, base 2^64.  Only the operations the
// library needs: add, subtract-small, multiply-small, exact divide-small,
// comparison, bit access and a long-double logarithm.
class BigUint {
  public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 s = carry + limbs_[i];
            if (i < o.limbs_.size()) s += o.limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(s);
            carry = s >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    BigUint& operator*=(const BigUint& o) {
        if (is_zero() || o.is_zero()) {
            limbs_.clear();
            return *this;
        }
        std::vector<std::uint64_t> out(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                unsigned __int128 s = static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j] +
                                      out[i + j] + carry;
                out[i + j] = static_cast<std::uint64_t>(s);
                carry = s >> 64;
            }
            std::size_t k = i + o.limbs_.size();
            while (carry) {
                unsigned __int128 s = static_cast<unsigned __int128>(out[k]) + carry;
                out[k] = static_cast<std::uint64_t>(s);
                carry = s >> 64;
                ++k;
            }
        }
        limbs_ = std::move(out);
        trim();
        return *this;
    }

    BigUint& mul_small(std::uint64_t m) {
        if (m == 0 || is_zero()) {
            limbs_.clear();
            return *this;
        }
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 p = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(p);
            carry = p >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    // Division by a small divisor; remainder returned. Used both for exact
    // binomial recurrences and for decimal printing.
    std::uint64_t div_small(std::uint64_t d) {
        if (d == 0) throw std::domain_error("BigUint: division by zero");
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint64_t>(rem);
    }

    BigUint& sub_small(std::uint64_t v) {
        if (is_zero()) {
            if (v) throw std::domain_error("BigUint: negative result");
            return *this;
        }
        std::uint64_t borrow = v;
        for (std::size_t i = 0; i < limbs_.size() && borrow; ++i) {
            std::uint64_t before = limbs_[i];
            limbs_[i] = before - borrow;
            borrow = before < borrow ? 1 : 0;
        }
        if (borrow) throw std::domain_error("BigUint: negative result");
        trim();
        return *this;
    }

    int cmp(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }
    bool operator==(const BigUint& o) const { return cmp(o) == 0; }
    bool operator<(const BigUint& o) const { return cmp(o) < 0; }
    bool operator<=(const BigUint& o) const { return cmp(o) <= 0; }

    std::size_t bit_length() const {
        if (is_zero()) return 0;
        std::uint64_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 64;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 64, off = i % 64;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> off) & 1u;
    }

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    long double to_ldouble() const {
        long double acc = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            acc = acc * 18446744073709551616.0L + static_cast<long double>(limbs_[i]);
        return acc;
    }

    // Natural log; exact enough for log-domain bound comparisons.
    long double log() const {
        if (is_zero()) throw std::domain_error("BigUint: log of zero");
        std::size_t n = limbs_.size();
        long double top = static_cast<long double>(limbs_[n - 1]);
        if (n >= 2) top += std::ldexp(static_cast<long double>(limbs_[n - 2]), -64);
        return std::log(top) + static_cast<long double>((n - 1) * 64) * std::log(2.0L);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigUint tmp = *this;
        std::string out;
        while (!tmp.is_zero()) out.push_back(static_cast<char>('0' + tmp.div_small(10)));
        return std::string(out.rbegin(), out.rend());
    }

  private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint64_t> limbs_;  // little-endian
};

inline BigUint big_pow(std::uint64_t base, unsigned exp) {
    BigUint r{1};
    for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
    return r;
}

}  // namespace qgc
