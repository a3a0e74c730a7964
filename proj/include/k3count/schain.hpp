#pragma once

/// @file schain.hpp
/// S-chain configurations. Two equivalent encodings of how a degree-mu
/// component sits against a chain of fiber curves:
///
///   LambdaConfig — chain lengths attached at the 2*mu points over the
///   node: two strictly decreasing sequences lambda_1 > ... > lambda_mu >= 0
///   and lambda_{-1} > ... > lambda_{-mu} >= 0, with
///   sum(lambda) + mu = weight.
///
///   MuConfig — multiplicities of the chain curves on either side of the
///   distinguished fiber pair: weakly decreasing positive lists
///   (mu_{-1}, ..., mu_{-k}) and (mu_0, ..., mu_{l-1}), with
///   mu_0 <= mu <= mu_0 + 1 and mu_{-1} <= mu <= mu_{-1} + 1, and
///   sum(mu_i) + mu = weight.
///
/// The two encodings are dual: each lambda sequence is the conjugate
/// partition of the mu list on the matching side. Admissible MuConfigs
/// (all consecutive multiplicity steps at most 1 under zero-extension)
/// are exactly the ones in bijection with LambdaConfigs, and exactly the
/// equality cases of the delta-invariant lower bound.

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k3count/partitions.hpp"

namespace k3count {

struct NotAdmissible : std::invalid_argument {
    explicit NotAdmissible(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidConfig : std::invalid_argument {
    explicit InvalidConfig(const std::string& what) : std::invalid_argument(what) {}
};

struct LambdaConfig {
    int mu = 0;
    std::vector<int> lambda_pos; // lambda_1 > ... > lambda_mu >= 0
    std::vector<int> lambda_neg; // lambda_{-1} > ... > lambda_{-mu} >= 0

    friend bool operator==(const LambdaConfig&, const LambdaConfig&) = default;
};

struct MuConfig {
    int mu = 0;
    std::vector<int> mu_neg; // (mu_{-1}, ..., mu_{-k}), weakly decreasing, positive
    std::vector<int> mu_pos; // (mu_0, ..., mu_{l-1}),  weakly decreasing, positive

    friend bool operator==(const MuConfig&, const MuConfig&) = default;
};

namespace detail {

inline bool strictly_decreasing_to_zero(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i + 1 < v.size() && v[i] <= v[i + 1]) return false;
    }
    return true;
}

inline bool weakly_decreasing_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
    }
    return true;
}

inline long long sum(const std::vector<int>& v) {
    long long s = 0;
    for (int x : v) s += x;
    return s;
}

} // namespace detail

/// Structural validity of a LambdaConfig: both sequences have length mu and
/// are strictly decreasing with a last entry >= 0.
inline bool is_valid_lambda(const LambdaConfig& c) {
    return c.mu >= 0 &&
           c.lambda_pos.size() == static_cast<std::size_t>(c.mu) &&
           c.lambda_neg.size() == static_cast<std::size_t>(c.mu) &&
           detail::strictly_decreasing_to_zero(c.lambda_pos) &&
           detail::strictly_decreasing_to_zero(c.lambda_neg);
}

inline long long weight(const LambdaConfig& c) {
    return detail::sum(c.lambda_pos) + detail::sum(c.lambda_neg) + c.mu;
}

inline long long weight(const MuConfig& c) {
    return detail::sum(c.mu_neg) + detail::sum(c.mu_pos) + c.mu;
}

/// Validity of a MuConfig: both lists weakly decreasing and positive, and
/// with mu_0, mu_{-1} read as 0 when the corresponding list is empty,
///   mu_0 <= mu <= mu_0 + 1   and   mu_{-1} <= mu <= mu_{-1} + 1.
inline bool is_valid_mu(const MuConfig& c) {
    if (c.mu < 0) return false;
    if (!detail::weakly_decreasing_positive(c.mu_neg)) return false;
    if (!detail::weakly_decreasing_positive(c.mu_pos)) return false;
    const int mu0 = c.mu_pos.empty() ? 0 : c.mu_pos.front();
    const int mum1 = c.mu_neg.empty() ? 0 : c.mu_neg.front();
    return mu0 <= c.mu && c.mu <= mu0 + 1 && mum1 <= c.mu && c.mu <= mum1 + 1;
}

/// Admissibility: validity plus |mu_i - mu_{i+1}| <= 1 for every consecutive
/// pair of the full multiplicity sequence under zero-extension. The boundary
/// steps against 0 force mu_{-k} = mu_{l-1} = 1 on any nonempty side.
inline bool is_admissible_mu(const MuConfig& c) {
    if (!is_valid_mu(c)) return false;
    // Walk ... 0, mu_{-k}, ..., mu_{-1}, mu_0, ..., mu_{l-1}, 0 ...
    std::vector<int> seq;
    seq.reserve(c.mu_neg.size() + c.mu_pos.size() + 2);
    seq.push_back(0);
    for (auto it = c.mu_neg.rbegin(); it != c.mu_neg.rend(); ++it) seq.push_back(*it);
    for (int v : c.mu_pos) seq.push_back(v);
    seq.push_back(0);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (std::abs(seq[i] - seq[i + 1]) > 1) return false;
    return true;
}

/// Maximal constant runs of a weakly decreasing list: pairs (end index,
/// run value), runs in order of appearance.
inline std::vector<std::pair<int, int>> plateau_decomposition(const std::vector<int>& seq) {
    if (!detail::weakly_decreasing_positive(seq))
        throw std::invalid_argument("plateau_decomposition: list must be weakly decreasing and positive");
    std::vector<std::pair<int, int>> runs;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (i + 1 == seq.size() || seq[i] != seq[i + 1])
            runs.emplace_back(static_cast<int>(i), seq[i]);
    return runs;
}

namespace detail {

/// The per-side chain-point contribution: with run ends a_0 < a_1 < ... and
/// run values v_0 > v_1 > ..., this is a_0 v_0 + sum_{i>0} (a_i - a_{i-1} - 1) v_i,
/// equivalently sum(seq) minus the sum of the distinct run values.
inline long long plateau_term(const std::vector<int>& seq) {
    const auto runs = plateau_decomposition(seq);
    long long total = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const long long gap = (i == 0) ? runs[0].first : runs[i].first - runs[i - 1].first - 1;
        total += gap * runs[i].second;
    }
    return total;
}

} // namespace detail

/// Lower bound on the total delta-invariant carried by a valid MuConfig:
///
///   B = mu^2                       (the double point)
///     + (mu_0 + 1 - mu)  * mu_0    (the chain point next to it, if present)
///     + (mu_{-1} + 1 - mu) * mu_{-1}   (mirror side)
///     + plateau terms of mu_pos and mu_neg (interior chain points).
///
/// Always B >= weight(c), with equality exactly on admissible configs.
inline long long delta_lower_bound(const MuConfig& c) {
    if (!is_valid_mu(c))
        throw InvalidConfig("delta_lower_bound requires a valid MuConfig");
    const long long mu = c.mu;
    const long long mu0 = c.mu_pos.empty() ? 0 : c.mu_pos.front();
    const long long mum1 = c.mu_neg.empty() ? 0 : c.mu_neg.front();
    long long bound = mu * mu;
    bound += (mu0 + 1 - mu) * mu0;
    bound += (mum1 + 1 - mu) * mum1;
    bound += detail::plateau_term(c.mu_pos);
    bound += detail::plateau_term(c.mu_neg);
    return bound;
}

namespace detail {

/// All strictly decreasing sequences of `len` integers >= 0 with the given
/// sum, first entry < `bound`, emitted with larger leading entries first.
inline void emit_strict_sequences(int len, int target, int bound, std::vector<int>& stack,
                                  std::vector<std::vector<int>>& out) {
    if (len == 0) {
        if (target == 0) out.push_back(stack);
        return;
    }
    // Remaining entries are distinct and below v, so at least (len-1)+...+0.
    const int tail_min = (len - 1) * (len - 2) / 2;
    for (int v = std::min(bound - 1, target - tail_min); v >= len - 1; --v) {
        stack.push_back(v);
        emit_strict_sequences(len - 1, target - v, v, stack, out);
        stack.pop_back();
    }
}

inline std::vector<std::vector<int>> strict_sequences(int len, int target) {
    std::vector<std::vector<int>> out;
    if (target < 0) return out;
    std::vector<int> stack;
    // First entry can be at most the whole target plus room for the tail,
    // and never exceeds target since the tail sum is nonnegative.
    emit_strict_sequences(len, target, target + 1, stack, out);
    return out;
}

} // namespace detail

/// Every LambdaConfig of the given weight, exactly once: mu ascending, then
/// lambda_pos in decreasing lexicographic order, then lambda_neg likewise.
/// The count equals P(m).
inline std::vector<LambdaConfig> enumerate_lambda_configs(int m) {
    if (m < 0) throw std::invalid_argument("enumerate_lambda_configs: m must be nonnegative");
    std::vector<LambdaConfig> out;
    for (int mu = 0; mu * mu <= m; ++mu) {
        const int rest = m - mu; // to split between the two sides
        // Each side needs at least 0 + 1 + ... + (mu-1).
        const int side_min = mu * (mu - 1) / 2;
        for (int spos = rest - side_min; spos >= side_min; --spos) {
            const int sneg = rest - spos;
            const auto pos_lists = detail::strict_sequences(mu, spos);
            const auto neg_lists = detail::strict_sequences(mu, sneg);
            for (const auto& lp : pos_lists)
                for (const auto& ln : neg_lists)
                    out.push_back(LambdaConfig{mu, lp, ln});
        }
    }
    std::sort(out.begin(), out.end(), [](const LambdaConfig& a, const LambdaConfig& b) {
        if (a.mu != b.mu) return a.mu < b.mu;
        if (a.lambda_pos != b.lambda_pos) return a.lambda_pos > b.lambda_pos;
        return a.lambda_neg > b.lambda_neg;
    });
    return out;
}

/// Every valid MuConfig of the given weight (admissible ones only when the
/// flag is set), exactly once: mu ascending, then mu_neg and mu_pos in
/// increasing lexicographic order. The admissible count equals P(m).
inline std::vector<MuConfig> enumerate_mu_configs(int m, bool admissible_only) {
    if (m < 0) throw std::invalid_argument("enumerate_mu_configs: m must be nonnegative");
    std::vector<MuConfig> out;
    for (int mu = 0; mu <= m; ++mu) {
        for (int sneg = 0; sneg <= m - mu; ++sneg) {
            const int spos = m - mu - sneg;
            for (const auto& pn : enumerate_partitions(sneg)) {
                for (const auto& pp : enumerate_partitions(spos)) {
                    MuConfig c{mu, pn.parts(), pp.parts()};
                    if (!is_valid_mu(c)) continue;
                    if (admissible_only && !is_admissible_mu(c)) continue;
                    out.push_back(std::move(c));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const MuConfig& a, const MuConfig& b) {
        if (a.mu != b.mu) return a.mu < b.mu;
        if (a.mu_neg != b.mu_neg) return a.mu_neg < b.mu_neg;
        return a.mu_pos < b.mu_pos;
    });
    return out;
}

namespace detail {

inline std::vector<int> conjugate_parts(const std::vector<int>& parts) {
    return conjugate(YoungDiagram(parts)).parts();
}

inline std::vector<int> drop_zeros(const std::vector<int>& parts) {
    std::vector<int> out;
    for (int p : parts)
        if (p > 0) out.push_back(p);
    return out;
}

} // namespace detail

/// Duality, mu side to lambda side: conjugate each mu list and pad with
/// zeros to length mu. Requires admissibility; otherwise the conjugates
/// need not be strictly decreasing.
inline LambdaConfig mu_to_lambda(const MuConfig& c) {
    if (!is_admissible_mu(c))
        throw NotAdmissible("mu_to_lambda requires an admissible MuConfig");
    LambdaConfig out;
    out.mu = c.mu;
    out.lambda_pos = detail::conjugate_parts(c.mu_neg);
    out.lambda_neg = detail::conjugate_parts(c.mu_pos);
    out.lambda_pos.resize(static_cast<std::size_t>(c.mu), 0);
    out.lambda_neg.resize(static_cast<std::size_t>(c.mu), 0);
    return out;
}

/// Duality, lambda side to mu side: drop padding zeros and conjugate back.
/// Exact inverse of mu_to_lambda; always lands on an admissible MuConfig.
inline MuConfig lambda_to_mu(const LambdaConfig& c) {
    if (!is_valid_lambda(c))
        throw InvalidConfig("lambda_to_mu requires a structurally valid LambdaConfig");
    MuConfig out;
    out.mu = c.mu;
    out.mu_neg = detail::conjugate_parts(detail::drop_zeros(c.lambda_pos));
    out.mu_pos = detail::conjugate_parts(detail::drop_zeros(c.lambda_neg));
    return out;
}

} // namespace k3count
