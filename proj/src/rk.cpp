#include "ssw/rk.hpp"

#include <stdexcept>

namespace ssw {

namespace {

RkTableau make_tableau(int order) {
    using Stage = RkTableau::Stage;
    RkTableau t;
    t.order = order;
    switch (order) {
        case 1:
            t.stages = {Stage{{{0, 1.0}}, {{0, 1.0}}}};
            break;
        case 2:
            t.stages = {Stage{{{0, 1.0}}, {{0, 1.0}}},
                        Stage{{{0, 0.5}, {1, 0.5}}, {{1, 0.5}}}};
            break;
        case 3:
            t.stages = {Stage{{{0, 1.0}}, {{0, 1.0}}},
                        Stage{{{0, 0.75}, {1, 0.25}}, {{1, 0.25}}},
                        Stage{{{0, 1.0 / 3}, {2, 2.0 / 3}}, {{2, 2.0 / 3}}}};
            break;
        case 4:
            // Five-stage fourth-order SSP scheme.
            t.stages = {
                Stage{{{0, 1.0}}, {{0, 0.39175222700392}}},
                Stage{{{0, 0.44437049406734}, {1, 0.55562950593266}},
                      {{1, 0.36841059262959}}},
                Stage{{{0, 0.62010185138540}, {2, 0.37989814861460}},
                      {{2, 0.25189177424738}}},
                Stage{{{0, 0.17807995410773}, {3, 0.82192004589227}},
                      {{3, 0.54497475021237}}},
                Stage{{{0, 0.00683325884039},
                       {2, 0.51723167208978},
                       {3, 0.12759831133288},
                       {4, 0.34833675773694}},
                      {{3, 0.08460416338212}, {4, 0.22600748319395}}}};
            break;
        default:
            throw std::invalid_argument("unsupported RK order");
    }
    // Stage times follow from consistency: c_k = sum gamma_kl c_l + sum delta_kl.
    t.stage_times.assign(t.stages.size() + 1, 0.0);
    for (std::size_t k = 0; k < t.stages.size(); ++k) {
        double c = 0;
        for (const auto& term : t.stages[k].gamma) c += term.w * t.stage_times[term.l];
        for (const auto& term : t.stages[k].delta) c += term.w;
        t.stage_times[k + 1] = c;
    }
    return t;
}

}  // namespace

const RkTableau& RkTableau::get(int order) {
    static const RkTableau t1 = make_tableau(1);
    static const RkTableau t2 = make_tableau(2);
    static const RkTableau t3 = make_tableau(3);
    static const RkTableau t4 = make_tableau(4);
    switch (order) {
        case 1: return t1;
        case 2: return t2;
        case 3: return t3;
        case 4: return t4;
        default: throw std::invalid_argument("unsupported RK order");
    }
}

}  // namespace ssw
