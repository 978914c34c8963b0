#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bnlab/errors.hpp"
#include "bnlab/rational.hpp"

namespace bnlab {

/// Ramification index of a series of type g^r_d: nondecreasing integers
/// 0 <= alpha_0 <= ... <= alpha_r <= d - r.
class SchubertIndex {
public:
    SchubertIndex(long long d, std::vector<long long> alpha)
        : d_(d), alpha_(std::move(alpha)) {
        if (alpha_.empty()) throw InvalidIndex("index needs r + 1 >= 1 entries");
        const long long r = this->r();
        if (d_ < r)
            throw InvalidIndex("series type needs d >= r, got d = " + std::to_string(d_) +
                               " with r = " + std::to_string(r));
        long long prev = 0;
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            if (alpha_[i] < prev)
                throw InvalidIndex(
                    i == 0 ? "alpha_0 = " + std::to_string(alpha_[0]) + " violates alpha_0 >= 0"
                           : "alpha_" + std::to_string(i) + " = " + std::to_string(alpha_[i]) +
                                 " violates alpha_" + std::to_string(i - 1) + " <= alpha_" +
                                 std::to_string(i));
            prev = alpha_[i];
        }
        if (alpha_.back() > d_ - r)
            throw InvalidIndex("alpha_r = " + std::to_string(alpha_.back()) +
                               " violates alpha_r <= d - r = " + std::to_string(d_ - r));
    }

    [[nodiscard]] static SchubertIndex trivial(long long r, long long d) {
        if (r < 0) throw InvalidIndex("index needs r >= 0");
        return SchubertIndex(d, std::vector<long long>(static_cast<std::size_t>(r) + 1, 0));
    }

    [[nodiscard]] long long r() const { return static_cast<long long>(alpha_.size()) - 1; }
    [[nodiscard]] long long d() const { return d_; }
    [[nodiscard]] const std::vector<long long>& entries() const { return alpha_; }
    [[nodiscard]] long long at(std::size_t i) const { return alpha_[i]; }

    friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;

private:
    long long d_;
    std::vector<long long> alpha_;
};

[[nodiscard]] inline Int weight(const SchubertIndex& a) {
    Int w = 0;
    for (long long v : a.entries()) w += v;
    return w;
}

/// (alpha^c)_i = d - r - alpha_{r-i}. Involutive; weights of an index and its
/// complement add up to (r + 1)(d - r).
[[nodiscard]] inline SchubertIndex complement(const SchubertIndex& a) {
    const long long cap = a.d() - a.r();
    std::vector<long long> c(a.entries().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = cap - a.at(c.size() - 1 - i);
    return SchubertIndex(a.d(), std::move(c));
}

[[nodiscard]] inline bool lex_leq(const SchubertIndex& a, const SchubertIndex& b) {
    if (a.r() != b.r()) throw InvalidIndex("lexicographic comparison needs equal r");
    return a.entries() <= b.entries();
}

[[nodiscard]] inline bool componentwise_leq(const SchubertIndex& a, const SchubertIndex& b) {
    if (a.r() != b.r()) throw InvalidIndex("componentwise comparison needs equal r");
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (a.at(i) > b.at(i)) return false;
    return true;
}

/// Vanishing orders at a point: strictly increasing 0 <= a_0 < ... < a_r <= d.
class VanishingSequence {
public:
    VanishingSequence(long long d, std::vector<long long> a) : d_(d), a_(std::move(a)) {
        if (a_.empty()) throw InvalidSequence("sequence needs r + 1 >= 1 entries");
        if (a_.front() < 0)
            throw InvalidSequence("a_0 = " + std::to_string(a_.front()) + " violates a_0 >= 0");
        for (std::size_t i = 1; i < a_.size(); ++i)
            if (a_[i] <= a_[i - 1])
                throw InvalidSequence("a_" + std::to_string(i) + " = " + std::to_string(a_[i]) +
                                      " violates a_" + std::to_string(i - 1) + " < a_" +
                                      std::to_string(i));
        if (a_.back() > d_)
            throw InvalidSequence("a_r = " + std::to_string(a_.back()) +
                                  " violates a_r <= d = " + std::to_string(d_));
    }

    [[nodiscard]] static VanishingSequence of(const SchubertIndex& idx) {
        std::vector<long long> a(idx.entries().size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = idx.at(i) + static_cast<long long>(i);
        return VanishingSequence(idx.d(), std::move(a));
    }

    [[nodiscard]] SchubertIndex to_index() const {
        std::vector<long long> alpha(a_.size());
        for (std::size_t i = 0; i < a_.size(); ++i) alpha[i] = a_[i] - static_cast<long long>(i);
        return SchubertIndex(d_, std::move(alpha));
    }

    [[nodiscard]] long long r() const { return static_cast<long long>(a_.size()) - 1; }
    [[nodiscard]] long long d() const { return d_; }
    [[nodiscard]] const std::vector<long long>& orders() const { return a_; }
    [[nodiscard]] long long at(std::size_t i) const { return a_[i]; }

    friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;

private:
    long long d_;
    std::vector<long long> a_;
};

/// Pointed Brill-Noether problem: genus, series type, ramification indices at
/// general marked points. All indices must be of the ambient type (r, d).
struct BNProblem {
    long long g, r, d;
    std::vector<SchubertIndex> ramification;

    BNProblem(long long g_, long long r_, long long d_, std::vector<SchubertIndex> ram)
        : g(g_), r(r_), d(d_), ramification(std::move(ram)) {
        if (g < 0) throw InvalidIndex("genus must be nonnegative");
        if (r < 0 || d < r)
            throw InvalidIndex("series type needs 0 <= r <= d, got r = " + std::to_string(r) +
                               ", d = " + std::to_string(d));
        for (const auto& idx : ramification)
            if (idx.r() != r || idx.d() != d)
                throw MixedContext("ramification index of type (" + std::to_string(idx.r()) + ", " +
                                   std::to_string(idx.d()) + ") in a problem of type (" +
                                   std::to_string(r) + ", " + std::to_string(d) + ")");
    }
};

/// rho(g, r, d) = g - (r + 1)(g - d + r).
[[nodiscard]] inline Int rho(long long g, long long r, long long d) {
    return Int(g) - Int(r + 1) * (Int(g) - d + r);
}

[[nodiscard]] inline Int rho_pointed(const BNProblem& p) {
    Int v = rho(p.g, p.r, p.d);
    for (const auto& idx : p.ramification) v -= weight(idx);
    return v;
}

[[nodiscard]] inline Int rho_pointed(long long g, const SchubertIndex& a) {
    return rho(g, a.r(), a.d()) - weight(a);
}

[[nodiscard]] inline Int rho_pointed(long long g, const SchubertIndex& a, const SchubertIndex& b) {
    if (a.r() != b.r() || a.d() != b.d())
        throw MixedContext("two-point rho needs indices of the same type (r, d)");
    return rho(g, a.r(), a.d()) - weight(a) - weight(b);
}

/// One-point existence bound on a general curve of genus g: a g^r_d with
/// ramification alpha at a general point exists iff
/// sum_i max(alpha_i + g - d + r, 0) <= g.
[[nodiscard]] inline bool eh_exists(long long g, long long r, long long d,
                                    const SchubertIndex& alpha) {
    if (g < 0) throw InvalidIndex("genus must be nonnegative");
    if (alpha.r() != r || alpha.d() != d)
        throw MixedContext("existence bound needs an index of type (r, d)");
    Int total = 0;
    for (long long v : alpha.entries()) {
        const Int t = Int(v) + g - d + r;
        if (t > 0) total += t;
    }
    return total <= g;
}

/// Total ramification weight of a g^r_d on a curve of genus g:
/// (r + 1) d + r (r + 1)(g - 1).
[[nodiscard]] inline Int plucker_total(long long g, long long r, long long d) {
    return Int(r + 1) * d + Int(r) * (r + 1) * (Int(g) - 1);
}

/// Every valid index of type (r, d) in ascending lexicographic order.
[[nodiscard]] inline std::vector<SchubertIndex> all_indices(long long r, long long d) {
    std::vector<SchubertIndex> out;
    if (r < 0 || d < r) throw InvalidIndex("series type needs 0 <= r <= d");
    const long long cap = d - r;
    std::vector<long long> cur(static_cast<std::size_t>(r) + 1, 0);
    while (true) {
        out.emplace_back(d, cur);
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == cap) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < cur.size(); ++j) cur[j] = cur[i - 1];
    }
    return out;
}

struct DivisorialWitness {
    long long d;
    SchubertIndex alpha;

    friend bool operator==(const DivisorialWitness&, const DivisorialWitness&) = default;
};

namespace detail {

// Lexicographically largest nondecreasing sequence with entries in [0, cap],
// lexicographically <= bound, and the given sum; depth-first from the most
// significant entry.
inline bool fill_desc(const std::vector<long long>& bound, long long cap, std::size_t i,
                      long long prev, bool tight, long long rem, std::vector<long long>& out) {
    const std::size_t n = out.size();
    if (i == n) return rem == 0;
    const long long m = static_cast<long long>(n - 1 - i);
    const long long hi = tight ? std::min(bound[i], cap) : cap;
    for (long long v = hi; v >= prev; --v) {
        const long long rest = rem - v;
        if (rest < 0 || rest < m * v) continue;  // tail entries are all >= v
        if (rest > m * cap) break;               // smaller v only shrinks the tail capacity
        out[i] = v;
        if (fill_desc(bound, cap, i + 1, v, tight && v == bound[i], rest, out)) return true;
    }
    return false;
}

// Lexicographically smallest nondecreasing sequence with entries in [0, cap]
// and the given sum.
inline bool fill_asc(long long cap, std::size_t n, long long total, std::vector<long long>& out) {
    out.assign(n, 0);
    long long prev = 0, rem = total;
    for (std::size_t i = 0; i < n; ++i) {
        const long long m = static_cast<long long>(n - 1 - i);
        long long v = std::max(prev, rem - m * cap);
        if (v < 0) v = 0;
        if (v > cap || rem - v < m * v) return false;
        out[i] = v;
        prev = v;
        rem -= v;
    }
    return rem == 0;
}

}  // namespace detail

/// Divisor-class witness for an out-of-range index.
///
/// rho(g, r, d) >= 0 and w(observed) > rho: the lexicographically largest
/// valid index alpha' <= observed (lex) with w(alpha') = rho + 1, same d.
///
/// rho(g, r, d) < -1: the minimal d' > d admitting a valid index of type
/// (r, d') with entries <= d' - d and weight rho(g, r, d') + 1, together with
/// the lexicographically smallest such index.
///
/// Anything else (rho = -1, or weight within rho) has no witness:
/// NotApplicable.
[[nodiscard]] inline DivisorialWitness divisorial_witness(long long g, long long r, long long d,
                                                          const SchubertIndex& observed) {
    if (observed.r() != r || observed.d() != d)
        throw MixedContext("witness needs an observed index of type (r, d)");
    const Int rh = rho(g, r, d);
    if (rh >= 0 && weight(observed) > rh) {
        const long long target = (rh + 1).convert_to<long long>();
        std::vector<long long> out(observed.entries().size());
        if (!detail::fill_desc(observed.entries(), d - r, 0, 0, true, target, out))
            throw NotApplicable("no index of weight rho + 1 below the observed one");
        return {d, SchubertIndex(d, std::move(out))};
    }
    if (rh < -1) {
        for (long long dd = d + 1;; ++dd) {
            const Int w = rho(g, r, dd) + 1;
            if (w < 0) continue;
            const long long cap = std::min(dd - d, dd - r);
            if (w > Int(r + 1) * cap) continue;
            std::vector<long long> out;
            if (!detail::fill_asc(cap, static_cast<std::size_t>(r) + 1, w.convert_to<long long>(),
                                  out))
                continue;
            return {dd, SchubertIndex(dd, std::move(out))};
        }
    }
    throw NotApplicable("no witness branch applies: rho = -1, or the observed weight is within rho");
}

}  // namespace bnlab
