#pragma once

#include <vector>

namespace ssw {

// Strong stability preserving Runge-Kutta tableaus in convex-combination form:
//   U^(k) = sum_l gamma_kl U^(l) + sum_l delta_kl dt M(U^(l), t + c_l dt).
struct RkTableau {
    struct Term {
        int l;
        double w;
    };
    struct Stage {
        std::vector<Term> gamma;
        std::vector<Term> delta;
    };

    int order = 1;
    std::vector<Stage> stages;
    std::vector<double> stage_times;  // c_l for the stage values, c_0 = 0

    static const RkTableau& get(int order);
};

// One SSP-RK step for any state with user-supplied linear combination.
// rhs(y, t) -> State; lincomb(gamma_terms, delta_terms, dt) -> State where the
// term lists reference previously computed stage values / rhs evaluations.
template <class State, class RhsFn>
State ssp_rk_step(const RkTableau& tab, const State& y0, double t, double dt,
                  RhsFn rhs) {
    std::vector<State> stage_values{y0};
    std::vector<State> stage_rhs;
    for (std::size_t k = 0; k < tab.stages.size(); ++k) {
        const auto& st = tab.stages[k];
        for (const auto& term : st.delta) {
            while (static_cast<int>(stage_rhs.size()) <= term.l)
                stage_rhs.push_back(
                    rhs(stage_values[stage_rhs.size()],
                        t + tab.stage_times[stage_rhs.size()] * dt));
        }
        State next{};
        for (const auto& term : st.gamma) next = next + term.w * stage_values[term.l];
        for (const auto& term : st.delta) next = next + (term.w * dt) * stage_rhs[term.l];
        stage_values.push_back(next);
    }
    return stage_values.back();
}

}  // namespace ssw
