#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgc/entropy.hpp"
#include "qgc/field.hpp"
#include "qgc/group.hpp"
#include "qgc/matrix.hpp"

namespace qgc {

// Enumeration work beyond the budget is a skippable condition, not a bug.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline std::uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("QGC_BUDGET")) {
        std::uint64_t v = std::strtoull(env, nullptr, 10);
        if (v) return v;
    }
    return 1ull << 24;
}

class LinearCode {
  public:
    LinearCode() = default;
    LinearCode(const Fq& field, std::size_t length, std::vector<Word> generators)
        : F_(&field), n_(length), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (g.size() != n_) throw std::invalid_argument("ragged generator matrix");
        basis_ = row_space(field, generators_);
    }

    const Fq& field() const { return *F_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return basis_.rank(); }
    const Basis& basis() const { return basis_; }
    const std::vector<Word>& generators() const { return generators_; }

    // exact rate as a reduced fraction
    std::pair<std::uint64_t, std::uint64_t> rate() const {
        std::uint64_t g = std::gcd<std::uint64_t>(dim(), n_);
        if (dim() == 0) return {0, 1};
        return {dim() / g, n_ / g};
    }

    bool contains(const Word& w) const { return basis_contains(*F_, basis_, w); }

    std::uint64_t codeword_count() const {
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (c > (1ull << 62) / F_->q) throw std::overflow_error("codeword count overflow");
            c *= F_->q;
        }
        return c;
    }

    // Visit every nonzero codeword once.  Mixed-radix odometer over the rref
    // basis; a digit bump from value d adds (d+1) - d times the row, where the
    // difference is taken in F_q (indices are canonical elements, so this is
    // not 1 in extension fields).
    template <class Fn>
    void for_each_nonzero_codeword(Fn&& fn, std::uint64_t budget = default_enumeration_budget()) const {
        std::size_t k = dim();
        if (k == 0) return;
        std::uint64_t total = codeword_count();
        if (total > budget)
            throw BudgetExceeded("enumeration of " + std::to_string(total) + " codewords exceeds budget");
        Word cw(n_, 0);
        std::vector<std::uint32_t> digit(k, 0);
        for (std::uint64_t step = 1; step < total; ++step) {
            std::size_t j = 0;
            while (true) {
                std::uint32_t d = digit[j];
                std::uint32_t next = d + 1 < F_->q ? d + 1 : 0;
                word_add_scaled_inplace(*F_, cw, basis_.rows[j],
                                        F_->sub(static_cast<Fel>(next), static_cast<Fel>(d)));
                digit[j] = next;
                if (next) break;
                ++j;
            }
            fn(static_cast<const Word&>(cw));
        }
    }

    int min_weight(std::uint64_t budget = default_enumeration_budget()) const {
        if (dim() == 0) throw std::domain_error("zero code has no nonzero word");
        if (min_w_) return *min_w_;
        int best = static_cast<int>(n_) + 1;
        for_each_nonzero_codeword([&](const Word& w) { best = std::min(best, weight(w)); }, budget);
        min_w_ = best;
        return best;
    }

    // exact |C^{<= delta}|, zero word included
    std::uint64_t count_below(double delta, std::uint64_t budget = default_enumeration_budget()) const {
        std::size_t t = ball_radius(n_, delta);
        std::uint64_t count = 1;
        if (dim() > 0)
            for_each_nonzero_codeword(
                [&](const Word& w) {
                    if (static_cast<std::size_t>(weight(w)) <= t) ++count;
                },
                budget);
        return count;
    }

  private:
    const Fq* F_ = nullptr;
    std::size_t n_ = 0;
    std::vector<Word> generators_;
    Basis basis_;
    mutable std::optional<int> min_w_;
};

inline LinearCode code_from_generators(const Fq& F, std::vector<Word> words) {
    if (words.empty()) throw std::invalid_argument("code needs at least one generator word");
    std::size_t n = words[0].size();
    return LinearCode(F, n, std::move(words));
}

inline LinearCode dual(const LinearCode& C) {
    const Fq& F = C.field();
    std::vector<Word> rows = C.basis().rows;
    std::vector<Word> null = null_space(F, std::move(rows), C.length());
    if (null.empty()) null.push_back(Word(C.length(), 0));
    return LinearCode(F, C.length(), std::move(null));
}

inline bool is_self_orthogonal(const LinearCode& C) {
    const Fq& F = C.field();
    const auto& rows = C.basis().rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (word_dot(F, rows[i], rows[j]) != 0) return false;
    return true;
}

inline bool is_self_dual(const LinearCode& C) {
    return 2 * C.dim() == C.length() && is_self_orthogonal(C);
}

inline std::size_t intersection_dim(const LinearCode& A, const LinearCode& B) {
    std::vector<Word> stacked = A.basis().rows;
    stacked.insert(stacked.end(), B.basis().rows.begin(), B.basis().rows.end());
    std::size_t sum_dim = row_space(A.field(), std::move(stacked)).rank();
    return A.dim() + B.dim() - sum_dim;
}

inline bool is_lcd(const LinearCode& C) { return intersection_dim(C, dual(C)) == 0; }

// ---------------------------------------------------------------------------
// balanced codes

struct BalancedSystem {
    std::vector<std::vector<std::size_t>> index_sets;
    std::size_t k = 0;  // common size
    std::size_t t = 0;  // cover multiplicity
};

// conditions of the balanced-system definition, for a linear code
inline bool verify_balanced(const LinearCode& C, const BalancedSystem& sys) {
    if (sys.index_sets.empty()) return false;
    std::vector<std::size_t> cover(C.length(), 0);
    for (const auto& I : sys.index_sets) {
        if (I.size() != sys.k) return false;
        for (auto i : I) {
            if (i >= C.length()) return false;
            ++cover[i];
        }
    }
    for (auto c : cover)
        if (c != sys.t) return false;
    if (sys.k * sys.index_sets.size() != C.length() * sys.t) return false;
    if (C.dim() != sys.k) return false;
    // projection onto each index set must be bijective: restricted rank k
    for (const auto& I : sys.index_sets) {
        std::vector<Word> proj;
        for (const auto& row : C.basis().rows) {
            Word p(I.size());
            for (std::size_t j = 0; j < I.size(); ++j) p[j] = row[I[j]];
            proj.push_back(std::move(p));
        }
        if (row_space(C.field(), std::move(proj)).rank() != sys.k) return false;
    }
    return true;
}

// same conditions for an arbitrary word set (e.g. a coset), by projecting
inline bool verify_balanced_set(const Fq& F, const std::vector<Word>& words, const BalancedSystem& sys) {
    if (words.empty() || sys.index_sets.empty()) return false;
    std::size_t n = words[0].size();
    std::vector<std::size_t> cover(n, 0);
    for (const auto& I : sys.index_sets) {
        if (I.size() != sys.k) return false;
        for (auto i : I) ++cover[i];
    }
    for (auto c : cover)
        if (c != sys.t) return false;
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < sys.k; ++i) qk *= F.q;
    if (words.size() != qk) return false;
    for (const auto& I : sys.index_sets) {
        std::set<Word> seen;
        for (const auto& w : words) {
            Word p(I.size());
            for (std::size_t j = 0; j < I.size(); ++j) p[j] = w[I[j]];
            seen.insert(std::move(p));
        }
        if (seen.size() != words.size()) return false;
    }
    return true;
}

// Group codes are balanced: translates of one information set under the
// Cayley permutations.
inline BalancedSystem balanced_system_group_code(const LinearCode& C, const Group& G) {
    if (C.length() != G.order) throw std::invalid_argument("code length must equal |G|");
    if (C.dim() == 0) throw std::invalid_argument("zero code has no information set");
    BalancedSystem sys;
    sys.k = C.dim();
    const auto& pivots = C.basis().pivots;
    for (Gel g = 0; g < G.order; ++g) {
        auto rho = G.cayley_permutation(g);
        std::vector<std::size_t> I;
        I.reserve(pivots.size());
        for (auto p : pivots) I.push_back(rho[p]);
        std::sort(I.begin(), I.end());
        sys.index_sets.push_back(std::move(I));
    }
    sys.t = sys.k * sys.index_sets.size() / C.length();
    if (!verify_balanced(C, sys))
        throw std::logic_error("translate system failed the balanced-code conditions");
    return sys;
}

// |C^{<= delta}| <= q^{k h_q(delta)}, in log domain against the exact count
inline bool balanced_bound_check(const LinearCode& C, std::size_t k, double delta,
                                 std::uint64_t budget = default_enumeration_budget()) {
    double top = 1.0 - 1.0 / static_cast<double>(C.field().q);
    if (delta > top + 1e-15) throw std::invalid_argument("bound needs delta <= 1 - 1/q");
    std::uint64_t count = C.count_below(delta, budget);
    long double lhs = std::log(static_cast<long double>(count));
    long double rhs = static_cast<long double>(k) * h_q(C.field().q, delta) *
                      std::log(static_cast<long double>(C.field().q));
    return lhs <= rhs + 1e-9;
}

// |B| <= q^{k h_q(omega)} with omega the average relative weight of B
inline bool subset_weight_bound_check(const Fq& F, const std::vector<Word>& B, std::size_t k) {
    if (B.empty()) throw std::invalid_argument("empty subset");
    std::size_t n = B[0].size();
    double total = 0;
    for (const auto& b : B) total += weight(b);
    double omega = total / (static_cast<double>(n) * static_cast<double>(B.size()));
    double top = 1.0 - 1.0 / static_cast<double>(F.q);
    if (omega > top + 1e-15) throw std::invalid_argument("bound needs omega <= 1 - 1/q");
    long double lhs = std::log(static_cast<long double>(B.size()));
    long double rhs = static_cast<long double>(k) * h_q(F.q, omega) * std::log(static_cast<long double>(F.q));
    return lhs <= rhs + 1e-9;
}

}  // namespace qgc
