#include "burn/burning.hpp"

#include "burn/errors.hpp"
#include "burn/isqrt.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

namespace burn {

namespace {

void check_schedule(const Graph& g, const BurningSchedule& s) {
    if (s.empty() && g.size() > 0) throw InputError("empty schedule for a nonempty graph");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.activators[i] >= g.size()) {
            throw InputError("activator " + std::to_string(s.activators[i]) + " in round " +
                             std::to_string(i + 1) + " is not a vertex (n=" +
                             std::to_string(g.size()) + ")");
        }
    }
}

// Fixed-size bitset over vertex ids, sized at runtime.
class VertexSet {
public:
    explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

    void set(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

class ExactSearch {
public:
    explicit ExactSearch(const Graph& g) : n_(g.size()), oracles_(all_pairs(g)) {}

    // Tries every schedule of length k in lexicographic order.
    std::optional<BurningSchedule> solve(Round k) {
        k_ = k;
        balls_.assign(k, std::vector<VertexSet>(n_, VertexSet(n_)));
        max_ball_.assign(k, 0);
        for (Round r = 0; r < k; ++r) {
            for (Vertex v = 0; v < n_; ++v) {
                for (Vertex w = 0; w < n_; ++w) {
                    if (*oracles_[v][w] <= r) balls_[r][v].set(w);
                }
                max_ball_[r] = std::max(max_ball_[r], balls_[r][v].count());
            }
        }
        chosen_.clear();
        if (descend(VertexSet(n_))) return BurningSchedule{chosen_};
        return std::nullopt;
    }

private:
    bool descend(const VertexSet& covered) {
        const std::size_t depth = chosen_.size();
        const std::size_t have = covered.count();
        if (have == n_) {
            // pad to length k with the smallest id to stay lexicographically first
            while (chosen_.size() < k_) chosen_.push_back(0);
            return true;
        }
        if (depth == k_) return false;
        // activator in round depth+1 reaches radius k-depth-1, later ones less
        std::size_t reach = 0;
        for (std::size_t j = depth; j < k_; ++j) reach += max_ball_[k_ - 1 - j];
        if (have + reach < n_) return false;

        const Round radius = static_cast<Round>(k_ - 1 - depth);
        for (Vertex v = 0; v < n_; ++v) {
            VertexSet next = covered;
            next |= balls_[radius][v];
            chosen_.push_back(v);
            if (descend(next)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::size_t n_;
    std::vector<DistanceOracle> oracles_;
    Round k_ = 0;
    std::vector<std::vector<VertexSet>> balls_;
    std::vector<std::size_t> max_ball_;
    std::vector<Vertex> chosen_;
};

} // namespace

bool BurningSchedule::has_duplicates() const {
    std::unordered_set<Vertex> seen;
    for (Vertex v : activators) {
        if (!seen.insert(v).second) return true;
    }
    return false;
}

BurnReport simulate(const Graph& g, const BurningSchedule& s) {
    check_schedule(g, s);
    BurnReport report;
    report.burn_round.assign(g.size(), std::nullopt);

    std::vector<Vertex> frontier, next;
    for (Round t = 1; t <= s.size() || !frontier.empty(); ++t) {
        // frontier: vertices reached by spreading in round t
        if (t <= s.size()) {
            const Vertex a = s.activators[t - 1];
            if (report.burn_round[a]) {
                ++report.wasted_activations;
            } else {
                report.burn_round[a] = t;
                frontier.push_back(a);
            }
        }
        next.clear();
        for (Vertex v : frontier) {
            for (Vertex w : g.neighbors(v)) {
                if (!report.burn_round[w]) {
                    report.burn_round[w] = t + 1;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }

    report.complete = true;
    for (const auto& r : report.burn_round) {
        if (r) report.completion_round = std::max(report.completion_round, *r);
        else report.complete = false;
    }
    return report;
}

bool verify(const Graph& g, const BurningSchedule& s, Round k) {
    const auto report = simulate(g, s);
    return s.size() <= k && report.complete && report.completion_round <= k;
}

Round lower_bound_diameter(Distance d) {
    return static_cast<Round>(ceil_sqrt(std::uint64_t{d} + 1));
}

BurningSchedule pad_with_unburned(const Graph& g, BurningSchedule s) {
    while (true) {
        const auto report = simulate(g, s);
        if (report.complete && report.completion_round <= s.size()) return s;
        const Round next_round = static_cast<Round>(s.size() + 1);
        const auto& br = report.burn_round;
        const auto it = std::find_if(br.begin(), br.end(),
                                     [&](const auto& r) { return !r || *r > next_round; });
        if (it == br.end()) return s; // everything burns by next_round anyway
        s.activators.push_back(static_cast<Vertex>(it - br.begin()));
    }
}

ExactResult exact_burning_number(const Graph& g, std::optional<Round> max_rounds) {
    if (g.size() == 0) throw PreconditionError("exact burning number of the empty graph");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");

    ExactSearch search(g);
    // k = n always succeeds (activate every vertex), so the loop terminates.
    for (Round k = 1;; ++k) {
        if (max_rounds && k > *max_rounds) return ExactResult{ExactStatus::BudgetExceeded, 0, {}};
        if (auto witness = search.solve(k)) return ExactResult{ExactStatus::Solved, k, *witness};
    }
}

} // namespace burn
