#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnlab/errors.hpp"
#include "bnlab/rational.hpp"
#include "bnlab/schubert.hpp"

namespace bnlab {

/// rho(g-1; alpha, gamma) + rho(1; gamma^c, beta) = rho(g; alpha, beta) for
/// every split index gamma: the two-point count is additive across an
/// elliptic bridge.
[[nodiscard]] inline bool additivity_identity(long long g, long long r, long long d,
                                              const SchubertIndex& alpha,
                                              const SchubertIndex& beta,
                                              const SchubertIndex& gamma) {
    if (g < 2) throw Error("additivity needs g >= 2");
    for (const SchubertIndex* idx : {&alpha, &beta, &gamma})
        if (idx->r() != r || idx->d() != d)
            throw MixedContext("additivity needs indices of type (r, d)");
    const Int left = rho_pointed(g - 1, alpha, gamma) + rho_pointed(1, complement(gamma), beta);
    return left == rho_pointed(g, alpha, beta);
}

/// On a genus-1 bridge whose marked points differ by a non-torsion class, two
/// distinct section relations a_i + b_{r-i} >= d cannot hold at once.
[[nodiscard]] inline bool torsion_obstructed(long long r, long long d, const VanishingSequence& a,
                                             const VanishingSequence& b) {
    if (a.r() != r || b.r() != r || a.d() != d || b.d() != d)
        throw MixedContext("obstruction test needs sequences of type (r, d)");
    const std::size_t n = a.orders().size();
    int hits = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i) + b.at(n - 1 - i) >= d && ++hits >= 2) return true;
    return false;
}

/// Dimension of the two-point problem on a genus-1 curve whose marked points
/// differ by a non-torsion class; nullopt when empty. A single relation
/// a_i + b_{r-i} = d is realisable by choosing the bundle, a second would
/// force the point difference to be torsion, and a_i + b_{r-i} > d is
/// impossible for sections of degree d outright.
[[nodiscard]] inline std::optional<Int> elliptic_two_point_dim(long long r, long long d,
                                                               const SchubertIndex& alpha,
                                                               const SchubertIndex& beta) {
    if (alpha.r() != r || alpha.d() != d || beta.r() != r || beta.d() != d)
        throw MixedContext("two-point dimension needs indices of type (r, d)");
    const Int dim = rho_pointed(1, alpha, beta);
    if (dim < 0) return std::nullopt;
    const VanishingSequence a = VanishingSequence::of(alpha);
    const VanishingSequence b = VanishingSequence::of(beta);
    const std::size_t n = a.orders().size();
    int hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long long s = a.at(i) + b.at(n - 1 - i);
        if (s > d) return std::nullopt;
        if (s == d && ++hits >= 2) return std::nullopt;
    }
    return dim;
}

/// Two-point problem on a chain of g elliptic bridges; a missing second index
/// means the trivial one.
struct ChainProblem {
    long long g, r, d;
    SchubertIndex alpha;
    std::optional<SchubertIndex> beta;

    ChainProblem(long long g_, long long r_, long long d_, SchubertIndex alpha_,
                 std::optional<SchubertIndex> beta_ = std::nullopt)
        : g(g_), r(r_), d(d_), alpha(std::move(alpha_)), beta(std::move(beta_)) {
        if (g < 1) throw Error("chain needs g >= 1");
        if (alpha.r() != r || alpha.d() != d || (beta && (beta->r() != r || beta->d() != d)))
            throw MixedContext("chain needs indices of type (r, d)");
    }
};

/// Outcome of a chain evaluation. When nonempty, dimension is the two-point
/// count rho(g; alpha, beta) and witness lists the split index chosen at each
/// bridge, outermost (genus g) first; a genus-1 problem has an empty witness.
struct ChainResult {
    std::optional<Int> dimension;
    std::vector<SchubertIndex> witness;
};

/// Evaluate a chain problem. The genus-g problem is declared solvable when
/// some split index gamma makes both the genus-(g-1) problem (alpha, gamma)
/// and the genus-1 bridge (gamma^c, beta) solvable; genus 1 is the two-point
/// elliptic dimension itself. Splits are scanned in ascending lexicographic
/// order and the first viable one is recorded, so witnesses are reproducible.
[[nodiscard]] inline ChainResult chain_dim(const ChainProblem& p) {
    const SchubertIndex beta = p.beta ? *p.beta : SchubertIndex::trivial(p.r, p.d);
    const std::vector<SchubertIndex> idx = all_indices(p.r, p.d);
    const std::size_t n = idx.size();

    std::map<std::vector<long long>, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[idx[i].entries()] = i;
    std::vector<std::size_t> comp_of(n);
    for (std::size_t i = 0; i < n; ++i) comp_of[i] = pos.at(complement(idx[i]).entries());

    // bridge[c][x] caches solvability of the genus-1 piece (idx[c], idx[x]);
    // rows are filled on demand.
    std::vector<std::vector<char>> bridge(n);
    const auto bridge_row = [&](std::size_t c) -> const std::vector<char>& {
        auto& row = bridge[c];
        if (row.empty()) {
            row.resize(n);
            for (std::size_t x = 0; x < n; ++x)
                row[x] = elliptic_two_point_dim(p.r, p.d, idx[c], idx[x]).has_value() ? 1 : 0;
        }
        return row;
    };

    // reach[k][x]: the genus-k subproblem (alpha, idx[x]) is solvable.
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(p.g) + 1,
                                         std::vector<char>(n, 0));
    for (std::size_t x = 0; x < n; ++x)
        reach[1][x] = elliptic_two_point_dim(p.r, p.d, p.alpha, idx[x]).has_value() ? 1 : 0;
    for (long long k = 2; k <= p.g; ++k) {
        auto& nxt = reach[static_cast<std::size_t>(k)];
        const auto& prev = reach[static_cast<std::size_t>(k) - 1];
        bool any = false;
        for (std::size_t gi = 0; gi < n; ++gi) {
            if (!prev[gi]) continue;
            any = true;
            const auto& row = bridge_row(comp_of[gi]);
            for (std::size_t x = 0; x < n; ++x)
                if (row[x]) nxt[x] = 1;
        }
        if (!any) break;
    }

    ChainResult result;
    const std::size_t target = pos.at(beta.entries());
    if (!reach[static_cast<std::size_t>(p.g)][target]) return result;
    result.dimension = rho_pointed(p.g, p.alpha, beta);

    std::size_t cur = target;
    for (long long k = p.g; k >= 2; --k) {
        const auto& prev = reach[static_cast<std::size_t>(k) - 1];
        for (std::size_t gi = 0; gi < n; ++gi) {
            if (prev[gi] && bridge_row(comp_of[gi])[cur]) {
                result.witness.push_back(idx[gi]);
                cur = gi;
                break;
            }
        }
    }
    return result;
}

/// Pair of partitions in the box of the Grassmannian of k-planes in n-space:
/// at most k parts, each at most n - k, nonincreasing. Short partitions are
/// padded with zeros.
struct GrassmannPair {
    long long k, n;
    std::vector<long long> lambda, mu;

    GrassmannPair(long long k_, long long n_, std::vector<long long> lambda_,
                  std::vector<long long> mu_)
        : k(k_), n(n_), lambda(std::move(lambda_)), mu(std::move(mu_)) {
        if (k < 1 || n < k) throw InvalidPartition("need 1 <= k <= n");
        normalise(lambda);
        normalise(mu);
    }

private:
    void normalise(std::vector<long long>& part) const {
        if (static_cast<long long>(part.size()) > k)
            throw InvalidPartition("partition has more than k = " + std::to_string(k) + " parts");
        long long prev = n - k;
        for (long long v : part) {
            if (v < 0 || v > n - k)
                throw InvalidPartition("part " + std::to_string(v) + " outside [0, n - k = " +
                                       std::to_string(n - k) + "]");
            if (v > prev) throw InvalidPartition("parts must be nonincreasing");
            prev = v;
        }
        part.resize(static_cast<std::size_t>(k), 0);
    }
};

/// The product of the two Schubert classes is nonzero, equivalently generic
/// translates of the two varieties meet: lambda_i + mu_{k+1-i} <= n - k for
/// all i.
[[nodiscard]] inline bool schubert_nonempty(const GrassmannPair& p) {
    const std::size_t k = p.lambda.size();
    for (std::size_t i = 0; i < k; ++i)
        if (p.lambda[i] + p.mu[k - 1 - i] > p.n - p.k) return false;
    return true;
}

}  // namespace bnlab
