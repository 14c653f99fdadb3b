#ifndef SHARPDEG_MULTI_INDEX_HPP
#define SHARPDEG_MULTI_INDEX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace sharpdeg {

// Exponent vector of a monomial, doubling as a lattice coordinate.
// Entries may be negative in intermediate lattice computations; monomials of
// an actual polynomial always have nonnegative entries.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : e_(n, 0) {}
    MultiIndex(std::initializer_list<int> e) : e_(e) {}
    explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) {}

    static MultiIndex unit(std::size_t n, std::size_t j) {
        MultiIndex m(n);
        m.e_[j] = 1;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& entries() const { return e_; }

    // |m| = m_1 + ... + m_n
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    bool non_negative() const {
        return std::all_of(e_.begin(), e_.end(), [](int v) { return v >= 0; });
    }

    MultiIndex plus(std::size_t j, int delta = 1) const {
        MultiIndex m = *this;
        m.e_[j] += delta;
        return m;
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex m = a;
        for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
        return m;
    }
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex m = a;
        for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
        return m;
    }

    // a | b as monomials
    bool divides(const MultiIndex& b) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > b.e_[i]) return false;
        return true;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> e_;
};

// Graded lexicographic: degree first, then entry-wise lexicographic with the
// first variable largest.
inline int graded_lex_cmp(const MultiIndex& a, const MultiIndex& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

struct GradedLexAsc {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_cmp(a, b) < 0;
    }
};

struct GradedLexDesc {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_cmp(a, b) > 0;
    }
};

// Distance in the lattice adjacency: one step is either m -> m +- e_j or the
// same-level exchange m -> m + e_i - e_j.
inline int lattice_distance(const MultiIndex& a, const MultiIndex& b) {
    int up = 0, down = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int diff = b[i] - a[i];
        if (diff > 0) up += diff;
        else down -= diff;
    }
    return std::max(up, down);
}

} // namespace sharpdeg

#endif
