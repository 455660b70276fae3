#include "kqr/bisset.hpp"

#include <algorithm>

namespace kqr {

BiSimplicialSet::BiSimplicialSet(
    std::vector<std::vector<int>> counts,
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> faces_h,
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> faces_v)
    : counts_(std::move(counts)), faces_h_(std::move(faces_h)), faces_v_(std::move(faces_v)) {
    auto row_empty = [&](size_t j) {
        for (int c : counts_[j])
            if (c) return false;
        return true;
    };
    while (!counts_.empty() && row_empty(counts_.size() - 1)) {
        counts_.pop_back();
        faces_h_.pop_back();
        faces_v_.pop_back();
    }
    if (!counts_.empty()) {
        size_t cols = counts_[0].size();
        auto col_empty = [&](size_t k) {
            for (const auto& row : counts_)
                if (k < row.size() && row[k]) return false;
            return true;
        };
        while (cols > 0 && col_empty(cols - 1)) {
            --cols;
            for (auto& row : counts_) row.pop_back();
            for (auto& row : faces_h_) row.pop_back();
            for (auto& row : faces_v_) row.pop_back();
        }
        if (cols == 0) {
            counts_.clear();
            faces_h_.clear();
            faces_v_.clear();
        }
    }
}

int BiSimplicialSet::count(int j, int k) const {
    if (j < 0 || j > top_h() || k < 0 || k > top_v()) return 0;
    return counts_[j][k];
}

int BiSimplicialSet::total_nondeg() const {
    int t = 0;
    for (const auto& row : counts_)
        for (int c : row) t += c;
    return t;
}

BiSimplexRef BiSimplicialSet::act(int j, int k, int x, const DeltaMap& fh,
                                  const DeltaMap& fv) const {
    DeltaMap eh, mh, ev, mv;
    epi_mono_factor(fh, eh, mh);
    epi_mono_factor(fv, ev, mv);
    int p = j, q = k, cur = x;
    while (true) {
        if (mh.dom < p) {
            int miss = -1, t = mh.dom;
            for (int v = p; v >= 0; --v) {
                if (t >= 0 && mh.val[t] == v) --t;
                else { miss = v; break; }
            }
            const BiSimplexRef& fr = faces_h_[p][q][cur][miss];
            for (auto& v : mh.val)
                if (v > miss) --v;
            mh.cod = p - 1;
            DeltaMap etah = epi_of_word(fr.jdim(), fr.epi_h);
            DeltaMap etav = epi_of_word(fr.kdim(), fr.epi_v);
            DeltaMap ch = compose(etah, mh);
            DeltaMap cv = compose(etav, mv);
            DeltaMap e2, m2;
            epi_mono_factor(ch, e2, m2);
            eh = compose(e2, eh);
            mh = m2;
            epi_mono_factor(cv, e2, m2);
            ev = compose(e2, ev);
            mv = m2;
            p = fr.jb;
            q = fr.kb;
            cur = fr.id;
            continue;
        }
        if (mv.dom < q) {
            int miss = -1, t = mv.dom;
            for (int v = q; v >= 0; --v) {
                if (t >= 0 && mv.val[t] == v) --t;
                else { miss = v; break; }
            }
            const BiSimplexRef& fr = faces_v_[p][q][cur][miss];
            for (auto& v : mv.val)
                if (v > miss) --v;
            mv.cod = q - 1;
            DeltaMap etah = epi_of_word(fr.jdim(), fr.epi_h);
            DeltaMap etav = epi_of_word(fr.kdim(), fr.epi_v);
            DeltaMap ch = compose(etah, mh);
            DeltaMap cv = compose(etav, mv);
            DeltaMap e2, m2;
            epi_mono_factor(ch, e2, m2);
            eh = compose(e2, eh);
            mh = m2;
            epi_mono_factor(cv, e2, m2);
            ev = compose(e2, ev);
            mv = m2;
            p = fr.jb;
            q = fr.kb;
            cur = fr.id;
            continue;
        }
        break;
    }
    return BiSimplexRef{p, q, cur, word_of_epi(eh), word_of_epi(ev)};
}

BiSimplexRef BiSimplicialSet::act(const BiSimplexRef& r, const DeltaMap& fh,
                                  const DeltaMap& fv) const {
    DeltaMap etah = epi_of_word(r.jdim(), r.epi_h);
    DeltaMap etav = epi_of_word(r.kdim(), r.epi_v);
    return act(r.jb, r.kb, r.id, compose(etah, fh), compose(etav, fv));
}

BiSimplexRef BiSimplicialSet::face_h_of(const BiSimplexRef& r, int i) const {
    return act(r, delta_face(r.jdim(), i), delta_identity(r.kdim()));
}

BiSimplexRef BiSimplicialSet::face_v_of(const BiSimplexRef& r, int i) const {
    return act(r, delta_identity(r.jdim()), delta_face(r.kdim(), i));
}

std::vector<BiSimplexRef> BiSimplicialSet::refs(int j, int k) const {
    std::vector<BiSimplexRef> out;
    for (int p = 0; p <= std::min(j, top_h()); ++p) {
        for (int q = 0; q <= std::min(k, top_v()); ++q) {
            if (count(p, q) == 0) continue;
            auto ehs = all_delta_epis(j, p);
            auto evs = all_delta_epis(k, q);
            for (int x = 0; x < count(p, q); ++x)
                for (const auto& eh : ehs)
                    for (const auto& ev : evs)
                        out.push_back(BiSimplexRef{p, q, x, word_of_epi(eh), word_of_epi(ev)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool BiSimplicialSet::has_ref(const BiSimplexRef& r) const {
    if (r.jb < 0 || r.kb < 0 || r.jb > top_h() || r.kb > top_v()) return false;
    if (r.id < 0 || r.id >= count(r.jb, r.kb)) return false;
    return word_ok(r.jdim(), r.epi_h) && word_ok(r.kdim(), r.epi_v);
}

void BiSimplicialSet::validate() const {
    for (int j = 0; j <= top_h(); ++j) {
        for (int k = 0; k <= top_v(); ++k) {
            for (int x = 0; x < count(j, k); ++x) {
                if (j > 0) {
                    if ((int)faces_h_[j][k][x].size() != j + 1)
                        throw std::runtime_error("bisset: horizontal face arity");
                    for (const auto& r : faces_h_[j][k][x])
                        if (r.jdim() != j - 1 || r.kdim() != k || !has_ref(r))
                            throw std::runtime_error("bisset: bad horizontal face");
                }
                if (k > 0) {
                    if ((int)faces_v_[j][k][x].size() != k + 1)
                        throw std::runtime_error("bisset: vertical face arity");
                    for (const auto& r : faces_v_[j][k][x])
                        if (r.jdim() != j || r.kdim() != k - 1 || !has_ref(r))
                            throw std::runtime_error("bisset: bad vertical face");
                }
            }
        }
    }
    // identities audit, both directions plus interchange
    for (int j = 0; j <= top_h() + 1; ++j) {
        for (int k = 0; k <= top_v() + 1; ++k) {
            for (const auto& r : refs(j, k)) {
                for (int b = 1; b <= j; ++b)
                    for (int a = 0; a < b && j >= 2; ++a) {
                        BiSimplexRef lhs = face_h_of(face_h_of(r, b), a);
                        BiSimplexRef rhs = face_h_of(face_h_of(r, a), b - 1);
                        if (lhs != rhs) throw std::runtime_error("bisset: horizontal identity");
                    }
                for (int b = 1; b <= k; ++b)
                    for (int a = 0; a < b && k >= 2; ++a) {
                        BiSimplexRef lhs = face_v_of(face_v_of(r, b), a);
                        BiSimplexRef rhs = face_v_of(face_v_of(r, a), b - 1);
                        if (lhs != rhs) throw std::runtime_error("bisset: vertical identity");
                    }
                for (int a = 0; a <= j && j >= 1; ++a)
                    for (int b = 0; b <= k && k >= 1; ++b) {
                        BiSimplexRef lhs = face_v_of(face_h_of(r, a), b);
                        BiSimplexRef rhs = face_h_of(face_v_of(r, b), a);
                        if (lhs != rhs) throw std::runtime_error("bisset: interchange");
                    }
            }
        }
    }
}

BiSimplexRef BiSimplicialMap::apply(const BiSimplexRef& r) const {
    const BiSimplexRef& img = assign[r.jb][r.kb][r.id];
    if (r.epi_h.empty() && r.epi_v.empty()) return img;
    return target->act(img, epi_of_word(r.jdim(), r.epi_h), epi_of_word(r.kdim(), r.epi_v));
}

void BiSimplicialMap::validate() const {
    for (int j = 0; j <= source->top_h(); ++j) {
        for (int k = 0; k <= source->top_v(); ++k) {
            for (int x = 0; x < source->count(j, k); ++x) {
                const BiSimplexRef& img = assign[j][k][x];
                if (img.jdim() != j || img.kdim() != k || !target->has_ref(img))
                    throw std::runtime_error("bimap: bad image");
                for (int i = 0; i <= j && j > 0; ++i)
                    if (target->face_h_of(img, i) != apply(source->face_h(j, k, x, i)))
                        throw std::runtime_error("bimap: horizontal commutation");
                for (int i = 0; i <= k && k > 0; ++i)
                    if (target->face_v_of(img, i) != apply(source->face_v(j, k, x, i)))
                        throw std::runtime_error("bimap: vertical commutation");
            }
        }
    }
}

BiSimplicialMap identity_bimap(BiSSetPtr x) {
    BiSimplicialMap f;
    f.source = x;
    f.target = x;
    f.assign.resize(x->top_h() + 1);
    for (int j = 0; j <= x->top_h(); ++j) {
        f.assign[j].resize(x->top_v() + 1);
        for (int k = 0; k <= x->top_v(); ++k)
            for (int s = 0; s < x->count(j, k); ++s)
                f.assign[j][k].push_back(BiSimplexRef{j, k, s, {}, {}});
    }
    return f;
}

BiSimplicialMap compose(const BiSimplicialMap& g, const BiSimplicialMap& f) {
    BiSimplicialMap h;
    h.source = f.source;
    h.target = g.target;
    h.assign.resize(f.assign.size());
    for (size_t j = 0; j < f.assign.size(); ++j) {
        h.assign[j].resize(f.assign[j].size());
        for (size_t k = 0; k < f.assign[j].size(); ++k)
            for (const auto& r : f.assign[j][k]) h.assign[j][k].push_back(g.apply(r));
    }
    return h;
}

bool same_bimap(const BiSimplicialMap& f, const BiSimplicialMap& g) {
    return f.assign == g.assign;
}

std::vector<BiSimplicialMap> enumerate_bimaps(BiSSetPtr x, BiSSetPtr w) {
    std::vector<BiSimplicialMap> out;
    // cells in total-degree order; faces always precede
    std::vector<std::tuple<int, int, int>> order;
    for (int t = 0; t <= x->top_h() + x->top_v(); ++t)
        for (int j = 0; j <= std::min(t, x->top_h()); ++j) {
            int k = t - j;
            if (k > x->top_v()) continue;
            for (int s = 0; s < x->count(j, k); ++s) order.push_back({j, k, s});
        }
    std::vector<std::vector<std::vector<BiSimplexRef>>> cand(x->top_h() + 1);
    for (int j = 0; j <= x->top_h(); ++j) {
        cand[j].resize(x->top_v() + 1);
        for (int k = 0; k <= x->top_v(); ++k)
            if (x->count(j, k) > 0) {
                cand[j][k] = w->refs(j, k);
                if (cand[j][k].empty()) return out;
            }
    }
    BiSimplicialMap cur;
    cur.source = x;
    cur.target = w;
    cur.assign.resize(x->top_h() + 1);
    for (int j = 0; j <= x->top_h(); ++j) {
        cur.assign[j].resize(x->top_v() + 1);
        for (int k = 0; k <= x->top_v(); ++k) cur.assign[j][k].resize(x->count(j, k));
    }
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == order.size()) {
            out.push_back(cur);
            return;
        }
        auto [j, k, s] = order[t];
        for (const auto& y : cand[j][k]) {
            bool ok = true;
            for (int i = 0; i <= j && j > 0 && ok; ++i) {
                if (w->face_h_of(y, i) != cur.apply(x->face_h(j, k, s, i))) ok = false;
            }
            for (int i = 0; i <= k && k > 0 && ok; ++i) {
                if (w->face_v_of(y, i) != cur.apply(x->face_v(j, k, s, i))) ok = false;
            }
            if (!ok) continue;
            cur.assign[j][k][s] = y;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace kqr
