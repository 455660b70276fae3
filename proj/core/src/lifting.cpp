#include "kqr/lifting.hpp"

namespace kqr {

std::string GeneratingSet::label() const {
    switch (name) {
        case Name::I_KQ: return "I_KQ<=" + std::to_string(dim_cap);
        case Name::J_KQ: return "J_KQ<=" + std::to_string(dim_cap);
        default: return "custom";
    }
}

GeneratingSet boundary_set(int dim_cap) {
    GeneratingSet g;
    g.name = GeneratingSet::Name::I_KQ;
    g.dim_cap = dim_cap;
    for (int n = 0; n <= dim_cap; ++n) g.members.push_back(boundary_inclusion(n));
    return g;
}

GeneratingSet horn_set(int dim_cap) {
    GeneratingSet g;
    g.name = GeneratingSet::Name::J_KQ;
    g.dim_cap = dim_cap;
    for (int n = 1; n <= dim_cap; ++n)
        for (int i = 0; i <= n; ++i) g.members.push_back(horn_inclusion(n, i));
    return g;
}

LiftingProblem::LiftingProblem(SimplicialMap l, SimplicialMap r, SimplicialMap t,
                               SimplicialMap b)
    : left(std::move(l)), right(std::move(r)), top(std::move(t)), bottom(std::move(b)) {
    if (!same_map(compose(right, top), compose(bottom, left)))
        throw std::runtime_error("lifting problem: square does not commute");
}

std::optional<SimplicialMap> find_lift(const LiftingProblem& p) {
    // search h : B -> X with h ∘ left = top and right ∘ h = bottom
    MapConstraints c = extension_constraints(p.left, p.top);
    const SimplicialMap* right = &p.right;
    const SimplicialMap* bottom = &p.bottom;
    c.filter = [right, bottom](int d, int x, const SimplexRef& y) {
        return right->apply(y) == bottom->at(d, x);
    };
    return first_map(p.left.target, p.right.source, c);
}

std::vector<std::pair<SimplicialMap, SimplicialMap>> commuting_squares(
    const SimplicialMap& g, const SimplicialMap& f) {
    std::vector<std::pair<SimplicialMap, SimplicialMap>> out;
    for (const auto& top : enumerate_maps(g.source, f.source)) {
        SimplicialMap down = compose(f, top);  // A -> Y
        for (const auto& bottom : enumerate_extensions(g, down)) out.push_back({top, bottom});
    }
    return out;
}

RlpCertificate has_rlp(const SimplicialMap& f, const GeneratingSet& g, bool keep_witnesses) {
    RlpCertificate cert;
    cert.holds = true;
    for (size_t m = 0; m < g.members.size(); ++m) {
        for (auto& [top, bottom] : commuting_squares(g.members[m], f)) {
            ++cert.squares_checked;
            LiftingProblem p(g.members[m], f, top, bottom);
            RlpSquare sq{(int)m, top, bottom, find_lift(p)};
            if (!sq.lift) {
                cert.holds = false;
                cert.first_failure = sq;
                return cert;
            }
            if (keep_witnesses) cert.squares.push_back(std::move(sq));
        }
    }
    return cert;
}

}  // namespace kqr
