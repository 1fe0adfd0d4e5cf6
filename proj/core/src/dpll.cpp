#include "partilab/dpll.hpp"

#include "partilab/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace partilab {

namespace {

    class Solver {
    public:
        Solver(const CnfFormula& f, std::span<const int> assumptions, SolveStats* stats)
            : nv_(f.num_vars)
            , stats_(stats)
        {
            clauses_.reserve(f.clauses.size());
            for (const auto& raw : f.clauses) {
                std::vector<int> lits = raw;
                std::sort(lits.begin(), lits.end(), [](int a, int b) {
                    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
                });
                lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
                bool tautology = false;
                for (std::size_t i = 0; i + 1 < lits.size(); ++i)
                    if (lits[i] == -lits[i + 1])
                        tautology = true;
                if (tautology)
                    continue;
                clauses_.push_back(std::move(lits));
            }
            occ_.assign(2 * (nv_ + 1), {});
            n_false_.assign(clauses_.size(), 0);
            n_sat_.assign(clauses_.size(), 0);
            for (std::size_t c = 0; c < clauses_.size(); ++c)
                for (int l : clauses_[c])
                    occ_[lit_index(l)].push_back(static_cast<int>(c));
            val_.assign(nv_ + 1, 0);
            lvl_.assign(nv_ + 1, 0);
            reason_.assign(nv_ + 1, -1);
            assumptions_.assign(assumptions.begin(), assumptions.end());
        }

        std::optional<Assignment> solve()
        {
            for (const auto& c : clauses_)
                if (c.empty())
                    return std::nullopt;
            for (int a : assumptions_) {
                const int v = std::abs(a);
                if (v == 0 || v > nv_)
                    throw error(errc::out_of_range, "assumption literal out of range");
                if (val_[v] == sign_of(a))
                    continue;
                if (val_[v] != 0)
                    return std::nullopt;
                assign(a, -1);
            }
            // seed root-level units
            for (std::size_t c = 0; c < clauses_.size(); ++c) {
                if (n_sat_[c] > 0)
                    continue;
                const int size = static_cast<int>(clauses_[c].size());
                if (n_false_[c] == size)
                    return std::nullopt;
                if (n_false_[c] == size - 1) {
                    for (int l : clauses_[c])
                        if (!lit_false(l) && !lit_true(l)) {
                            assign(l, static_cast<int>(c));
                            if (stats_)
                                ++stats_->propagations;
                            break;
                        }
                }
            }
            if (propagate() != -1)
                return std::nullopt;

            while (true) {
                const int v = next_unassigned();
                if (v == 0)
                    return extract();
                decide(v);
                int conflict;
                while ((conflict = propagate()) != -1) {
                    if (!resolve_conflict(conflict))
                        return std::nullopt;
                }
            }
        }

    private:
        struct Level {
            int decision_var;
            std::size_t trail_start;
            bool flipped;
            std::vector<int> dep; // earlier levels this level's flip rests on
        };

        static int sign_of(int lit) { return lit > 0 ? 1 : -1; }

        std::size_t lit_index(int lit) const
        {
            return static_cast<std::size_t>(std::abs(lit)) * 2 + (lit > 0 ? 0 : 1);
        }

        bool lit_true(int lit) const { return val_[std::abs(lit)] == sign_of(lit); }
        bool lit_false(int lit) const { return val_[std::abs(lit)] == -sign_of(lit); }

        void assign(int lit, int reason)
        {
            const int v = std::abs(lit);
            val_[v] = sign_of(lit);
            lvl_[v] = static_cast<int>(levels_.size());
            reason_[v] = reason;
            trail_.push_back(lit);
            for (int c : occ_[lit_index(lit)])
                ++n_sat_[c];
            for (int c : occ_[lit_index(-lit)])
                ++n_false_[c];
        }

        void unassign_last()
        {
            const int lit = trail_.back();
            trail_.pop_back();
            for (int c : occ_[lit_index(lit)])
                --n_sat_[c];
            for (int c : occ_[lit_index(-lit)])
                --n_false_[c];
            val_[std::abs(lit)] = 0;
        }

        void decide(int v)
        {
            levels_.push_back({v, trail_.size(), false, {}});
            if (stats_)
                ++stats_->decisions;
            assign(v, -1); // positive phase first
        }

        int next_unassigned() const
        {
            int from = levels_.empty() ? 1 : levels_.back().decision_var + 1;
            for (int v = from; v <= nv_; ++v)
                if (val_[v] == 0)
                    return v;
            return 0;
        }

        // Returns a falsified clause index or -1.
        int propagate()
        {
            while (qhead_ < trail_.size()) {
                const int lit = trail_[qhead_++];
                for (int c : occ_[lit_index(-lit)]) {
                    if (n_sat_[c] > 0)
                        continue;
                    const int size = static_cast<int>(clauses_[c].size());
                    if (n_false_[c] == size)
                        return c;
                    if (n_false_[c] == size - 1) {
                        int unit = 0;
                        for (int l : clauses_[c])
                            if (!lit_false(l)) {
                                unit = l;
                                break;
                            }
                        if (unit == 0 || lit_true(unit))
                            continue;
                        assign(unit, c);
                        if (stats_)
                            ++stats_->propagations;
                    }
                }
            }
            return -1;
        }

        // Decision levels a falsified clause rests on, via reasons.
        std::vector<int> implicated_levels(int conflict) const
        {
            std::vector<char> seen(nv_ + 1, 0);
            std::vector<char> marked(levels_.size() + 1, 0);
            std::vector<int> work(clauses_[conflict].begin(), clauses_[conflict].end());
            while (!work.empty()) {
                const int v = std::abs(work.back());
                work.pop_back();
                if (seen[v])
                    continue;
                seen[v] = 1;
                if (lvl_[v] == 0)
                    continue;
                if (reason_[v] == -1) {
                    marked[lvl_[v]] = 1;
                } else {
                    for (int l : clauses_[reason_[v]])
                        if (std::abs(l) != v)
                            work.push_back(l);
                }
            }
            std::vector<int> out;
            for (std::size_t d = 1; d < marked.size(); ++d)
                if (marked[d])
                    out.push_back(static_cast<int>(d));
            return out;
        }

        void shrink_to(std::size_t depth, std::size_t trail_start)
        {
            while (trail_.size() > trail_start)
                unassign_last();
            levels_.resize(depth);
            qhead_ = trail_.size();
        }

        // Conflict-directed backjump; false means the formula is unsatisfiable
        // under the assumptions.
        bool resolve_conflict(int conflict)
        {
            if (stats_)
                ++stats_->conflicts;
            std::vector<int> rest = implicated_levels(conflict);
            while (true) {
                if (rest.empty())
                    return false;
                const int d = rest.back();
                rest.pop_back();
                Level& lv = levels_[static_cast<std::size_t>(d) - 1];
                if (!lv.flipped) {
                    const int var = lv.decision_var;
                    const std::size_t start = lv.trail_start;
                    std::vector<int> dep = rest;
                    shrink_to(static_cast<std::size_t>(d) - 1, start);
                    levels_.push_back({var, trail_.size(), true, std::move(dep)});
                    if (stats_)
                        ++stats_->decisions;
                    assign(-var, -1);
                    return true;
                }
                // both phases exhausted here: lift this level's dependencies
                std::vector<int> merged;
                std::merge(rest.begin(), rest.end(), lv.dep.begin(), lv.dep.end(),
                    std::back_inserter(merged));
                merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
                while (!merged.empty() && merged.back() >= d)
                    merged.pop_back();
                rest = std::move(merged);
            }
        }

        std::optional<Assignment> extract() const
        {
            Assignment a;
            a.value.assign(nv_ + 1, false);
            for (int v = 1; v <= nv_; ++v)
                a.value[v] = val_[v] > 0;
            return a;
        }

        int nv_;
        SolveStats* stats_;
        std::vector<std::vector<int>> clauses_;
        std::vector<std::vector<int>> occ_;
        std::vector<int> n_false_, n_sat_;
        std::vector<signed char> val_;
        std::vector<int> lvl_;
        std::vector<int> reason_;
        std::vector<int> trail_;
        std::size_t qhead_ = 0;
        std::vector<Level> levels_;
        std::vector<int> assumptions_;
    };

} // namespace

std::optional<Assignment> dpll(const CnfFormula& f, std::span<const int> assumptions,
    SolveStats* stats)
{
    f.validate();
    return Solver(f, assumptions, stats).solve();
}

} // namespace partilab
