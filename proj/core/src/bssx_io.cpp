#include "kqr/bssx_io.hpp"

#include <map>

#include "json.hpp"

namespace kqr {

using json = nlohmann::ordered_json;

namespace {

std::string cell_id(int j, int k, int x) {
    return "b" + std::to_string(j) + "_" + std::to_string(k) + "_" + std::to_string(x);
}

json ref_to_json(const BiSimplexRef& r) {
    json out;
    out["jdim"] = r.jb;
    out["kdim"] = r.kb;
    out["id"] = cell_id(r.jb, r.kb, r.id);
    out["epi_h"] = r.epi_h;
    out["epi_v"] = r.epi_v;
    return out;
}

}  // namespace

std::string to_bssx(const BiSimplicialSet& x) {
    json j;
    j["top_h"] = x.top_h();
    j["top_v"] = x.top_v();
    json cells = json::array();
    for (int a = 0; a <= x.top_h(); ++a) {
        json row = json::array();
        for (int b = 0; b <= x.top_v(); ++b) {
            json level = json::array();
            for (int s = 0; s < x.count(a, b); ++s) level.push_back(cell_id(a, b, s));
            row.push_back(level);
        }
        cells.push_back(row);
    }
    j["cells"] = cells;
    json fh = json::object(), fv = json::object();
    for (int a = 0; a <= x.top_h(); ++a) {
        for (int b = 0; b <= x.top_v(); ++b) {
            for (int s = 0; s < x.count(a, b); ++s) {
                if (a > 0) {
                    json arr = json::array();
                    for (int i = 0; i <= a; ++i) arr.push_back(ref_to_json(x.face_h(a, b, s, i)));
                    fh[cell_id(a, b, s)] = arr;
                }
                if (b > 0) {
                    json arr = json::array();
                    for (int i = 0; i <= b; ++i) arr.push_back(ref_to_json(x.face_v(a, b, s, i)));
                    fv[cell_id(a, b, s)] = arr;
                }
            }
        }
    }
    j["faces_h"] = fh;
    j["faces_v"] = fv;
    return j.dump(2) + "\n";
}

BiSimplicialSet from_bssx(const std::string& text) {
    json j = json::parse(text);
    int th = j.at("top_h").get<int>();
    int tv = j.at("top_v").get<int>();
    const json& cells = j.at("cells");
    std::vector<std::vector<int>> counts(th + 1, std::vector<int>(tv + 1, 0));
    std::map<std::string, std::tuple<int, int, int>> ids;
    for (int a = 0; a <= th; ++a)
        for (int b = 0; b <= tv; ++b) {
            counts[a][b] = (int)cells[a][b].size();
            for (int s = 0; s < counts[a][b]; ++s)
                ids[cells[a][b][s].get<std::string>()] = {a, b, s};
        }
    auto ref_from = [&](const json& rj) {
        BiSimplexRef r;
        auto it = ids.find(rj.at("id").get<std::string>());
        if (it == ids.end()) throw std::runtime_error("BSSX: unknown cell id");
        auto [a, b, s] = it->second;
        r.jb = a;
        r.kb = b;
        r.id = s;
        if (rj.at("jdim").get<int>() != a || rj.at("kdim").get<int>() != b)
            throw std::runtime_error("BSSX: ref bidegree mismatch");
        r.epi_h = rj.at("epi_h").get<std::vector<int>>();
        r.epi_v = rj.at("epi_v").get<std::vector<int>>();
        return r;
    };
    std::vector<std::vector<std::vector<std::vector<BiSimplexRef>>>> fh(th + 1), fv(th + 1);
    for (int a = 0; a <= th; ++a) {
        fh[a].resize(tv + 1);
        fv[a].resize(tv + 1);
        for (int b = 0; b <= tv; ++b) {
            fh[a][b].resize(counts[a][b]);
            fv[a][b].resize(counts[a][b]);
            for (int s = 0; s < counts[a][b]; ++s) {
                std::string id = cell_id(a, b, s);
                id = cells[a][b][s].get<std::string>();
                if (a > 0)
                    for (const auto& rj : j.at("faces_h").at(id)) fh[a][b][s].push_back(ref_from(rj));
                if (b > 0)
                    for (const auto& rj : j.at("faces_v").at(id)) fv[a][b][s].push_back(ref_from(rj));
            }
        }
    }
    BiSimplicialSet x(std::move(counts), std::move(fh), std::move(fv));
    x.validate();
    return x;
}

}  // namespace kqr
