#pragma once

/// @file partitions.hpp
/// Integer partitions: exhaustive enumeration, the partition function P(m)
/// via the pentagonal-number recurrence, and Young-diagram conjugation.

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3count/bigint.hpp"

namespace k3count {

/// A partition drawn as rows: weakly decreasing positive parts.
/// The empty diagram is allowed (the unique partition of 0).
class YoungDiagram {
public:
    YoungDiagram() = default;

    explicit YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("Young diagram parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Young diagram parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }

    long long weight() const {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
};

namespace detail {

inline void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                            std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    // Largest next part first gives decreasing lexicographic order overall.
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

} // namespace detail

/// All partitions of m, each once, in decreasing lexicographic order on the
/// part lists. |result| = P(m).
inline std::vector<YoungDiagram> enumerate_partitions(int m) {
    if (m < 0) throw std::invalid_argument("enumerate_partitions: m must be nonnegative");
    std::vector<YoungDiagram> out;
    std::vector<int> stack;
    detail::emit_partitions(m, m, stack, out);
    return out;
}

/// The partition function P(m) by the pentagonal-number recurrence
///   P(m) = sum_{k>=1} (-1)^{k+1} [P(m - k(3k-1)/2) + P(m - k(3k+1)/2)],
/// memoized. Safe under concurrent queries; answers do not depend on call
/// order.
inline BigInt partition_p(int m) {
    if (m < 0) return 0;
    static std::mutex guard;
    static std::vector<BigInt> cache{1};
    std::scoped_lock lock(guard);
    while (static_cast<int>(cache.size()) <= m) {
        const long long n = static_cast<long long>(cache.size());
        BigInt acc = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            BigInt term = cache[n - g1];
            if (g2 <= n) term += cache[n - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        cache.push_back(acc);
    }
    return cache[m];
}

/// Transpose of the diagram: conjugate(d).parts[j] = #{i : d.parts[i] >= j+1}.
/// An involution that preserves the weight.
inline YoungDiagram conjugate(const YoungDiagram& d) {
    const auto& parts = d.parts();
    if (parts.empty()) return YoungDiagram{};
    std::vector<int> out(static_cast<std::size_t>(parts[0]));
    for (int j = 1; j <= parts[0]; ++j) {
        int count = 0;
        for (int p : parts) {
            if (p >= j)
                ++count;
            else
                break; // parts are weakly decreasing
        }
        out[static_cast<std::size_t>(j - 1)] = count;
    }
    return YoungDiagram(std::move(out));
}

} // namespace k3count
