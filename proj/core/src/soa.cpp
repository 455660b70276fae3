#include "kqr/soa.hpp"

namespace kqr {

namespace {

// map out of a coproduct given maps out of each part
SimplicialMap copair(const Coproduct& c, const std::vector<const SimplicialMap*>& maps,
                     SSetPtr target) {
    SimplicialMap out;
    out.source = c.sum;
    out.target = target;
    out.assign.resize(c.sum->top_dim() + 1);
    for (int d = 0; d <= c.sum->top_dim(); ++d)
        for (const SimplicialMap* m : maps)
            if (d < (int)m->assign.size())
                out.assign[d].insert(out.assign[d].end(), m->assign[d].begin(),
                                     m->assign[d].end());
    return out;
}

bool same_presentation(const SimplicialSet& a, const SimplicialSet& b) {
    if (a.top_dim() != b.top_dim()) return false;
    for (int d = 0; d <= a.top_dim(); ++d) {
        if (a.count(d) != b.count(d)) return false;
        for (int x = 0; x < a.count(d); ++x)
            for (int i = 0; i <= d && d > 0; ++i)
                if (a.face(d, x, i) != b.face(d, x, i)) return false;
    }
    return true;
}

std::vector<UnsolvedSquare> scan_unsolved(const SimplicialMap& second,
                                          const GeneratingSet& g) {
    std::vector<UnsolvedSquare> out;
    for (size_t m = 0; m < g.members.size(); ++m) {
        for (auto& [top, bottom] : commuting_squares(g.members[m], second)) {
            LiftingProblem p(g.members[m], second, top, bottom);
            if (!find_lift(p)) out.push_back({(int)m, top, bottom});
        }
    }
    return out;
}

struct RoundResult {
    SSetPtr middle;
    SimplicialMap into_middle;  // previous middle -> new middle
    SimplicialMap second;       // new middle -> Y
};

RoundResult attach_round(const SimplicialMap& second, const GeneratingSet& g,
                         const std::vector<UnsolvedSquare>& squares) {
    std::vector<SSetPtr> srcs, tgts;
    for (const auto& s : squares) {
        srcs.push_back(g.members[s.member].source);
        tgts.push_back(g.members[s.member].target);
    }
    Coproduct csrc = coproduct(srcs);
    Coproduct ctgt = coproduct(tgts);
    std::vector<const SimplicialMap*> top_ptrs, member_comps_ptrs, bottom_ptrs;
    std::vector<SimplicialMap> member_comps;
    for (size_t s = 0; s < squares.size(); ++s)
        member_comps.push_back(compose(ctgt.legs[s], g.members[squares[s].member]));
    for (size_t s = 0; s < squares.size(); ++s) {
        top_ptrs.push_back(&squares[s].top);
        member_comps_ptrs.push_back(&member_comps[s]);
        bottom_ptrs.push_back(&squares[s].bottom);
    }
    SimplicialMap tops = copair(csrc, top_ptrs, second.source);
    SimplicialMap membs = copair(csrc, member_comps_ptrs, ctgt.sum);
    SimplicialMap bottoms = copair(ctgt, bottom_ptrs, second.target);
    Pushout p = pushout(tops, membs);
    RoundResult r;
    r.middle = p.object;
    r.into_middle = p.from_b;
    r.second = p.mediate(second, bottoms);
    return r;
}

}  // namespace

Factorization soa_factorize(const SimplicialMap& f, const GeneratingSet& g, int round_cap) {
    Factorization fact;
    fact.middle = f.source;
    fact.first = identity_map(f.source);
    fact.second = f;
    while (true) {
        std::vector<UnsolvedSquare> unsolved = scan_unsolved(fact.second, g);
        if (unsolved.empty()) {
            fact.fixed_point = true;
            break;
        }
        if (fact.rounds_used >= round_cap) {
            fact.residual = std::move(unsolved);
            break;
        }
        for (const auto& s : unsolved)
            fact.trace.push_back({fact.rounds_used + 1, s.member, s.top});
        RoundResult r = attach_round(fact.second, g, unsolved);
        fact.middle = r.middle;
        fact.first = compose(r.into_middle, fact.first);
        fact.second = r.second;
        ++fact.rounds_used;
    }
    return fact;
}

bool replay_soa(const SimplicialMap& f, const GeneratingSet& g, const Factorization& fact) {
    SSetPtr middle = f.source;
    int round = 1;
    size_t pos = 0;
    while (pos < fact.trace.size()) {
        std::vector<UnsolvedSquare> squares;
        while (pos < fact.trace.size() && fact.trace[pos].round == round) {
            // bottoms are irrelevant for the object replay
            squares.push_back({fact.trace[pos].member, fact.trace[pos].attach, {}});
            ++pos;
        }
        if (squares.empty()) return false;
        std::vector<SSetPtr> srcs, tgts;
        for (const auto& s : squares) {
            srcs.push_back(g.members[s.member].source);
            tgts.push_back(g.members[s.member].target);
        }
        Coproduct csrc = coproduct(srcs);
        Coproduct ctgt = coproduct(tgts);
        std::vector<SimplicialMap> member_comps;
        for (size_t s = 0; s < squares.size(); ++s)
            member_comps.push_back(compose(ctgt.legs[s], g.members[squares[s].member]));
        std::vector<const SimplicialMap*> top_ptrs, member_ptrs;
        for (size_t s = 0; s < squares.size(); ++s) {
            top_ptrs.push_back(&squares[s].top);
            member_ptrs.push_back(&member_comps[s]);
        }
        SimplicialMap tops = copair(csrc, top_ptrs, middle);
        SimplicialMap membs = copair(csrc, member_ptrs, ctgt.sum);
        Pushout p = pushout(tops, membs);
        middle = p.object;
        ++round;
    }
    return same_presentation(*middle, *fact.middle);
}

}  // namespace kqr
